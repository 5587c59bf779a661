"""Registry of the closed-form bounds on the generalized inverse functions.

Every entry is evaluable at (p, x), carries its validity domain, and keeps
a ``certified`` flag: entries that failed side-correctness on the
development pre-grid are kept (the harness reports them) but are excluded
from the asserted side-correctness suite.  The two ``*_corrected``
entries are the repaired forms of the quarantined ones.
"""

import math
from dataclasses import dataclass

from gentrig._backend import series_2f1_tail, series_3f2_tail
from gentrig.errors import ConvergenceError, DomainError, UnknownBound
from gentrig.hypergeom import EvalResult, Hyp2F1Params, hyp2f1, transform_pfaff
from gentrig.special import b_p, pi_p


@dataclass(frozen=True)
class BoundSpec:
    """Registry row: a named closed-form bound for one target function."""

    id: str
    target: str            # FnId value or "sum3f2" / "diff3f2"
    side: str              # "lower" or "upper"
    p_min: float           # open interval (p_min, p_max)
    p_max: float
    certified: bool        # False: reported only, excluded from assertions
    formula: str


def _f_half_tail(a, b, c):
    s, err, _, ok = series_2f1_tail(a, b, c, 0.5)
    if not ok:
        raise ConvergenceError("series at 1/2 hit the cap")
    return 1.0 + s, err


def _asin_lb_poly(p, x):
    e = x ** p
    v = x * (1.0 + e / (p * (1.0 + p)))
    return v, 8e-16 * abs(v)


def _asin_ub_pi(p, x):
    v = 0.5 * pi_p(p) * x
    return v, 8e-16 * abs(v)


def _atanh_lb_log(p, x):
    e = x ** p
    v = x * (1.0 - math.log1p(-e) / (1.0 + p))
    return v, 8e-16 * abs(v)


def _atanh_ub_log(p, x):
    e = x ** p
    v = x * (1.0 - math.log1p(-e) / p)
    return v, 8e-16 * abs(v)


def _atan_lb_mp(p, x):
    e = x ** p
    c = p * (1.0 + p)
    v = (c * (1.0 + e) + e) * x / (c * (1.0 + e) ** (1.0 + 1.0 / p))
    return v, 1.6e-15 * abs(v)


def _atan_ub_Mp(p, x):
    e = x ** p
    v = 2.0 ** p * b_p(p) * x / (1.0 + e) ** (1.0 / p)
    return v, 1.6e-15 * abs(v) * (1.0 + 0.2 * p)


def _asinh_lb_tp(p, x):
    e = x ** p
    v = x * (1.0 + math.log1p(e) / (1.0 + p)) / (1.0 + e) ** (1.0 / p)
    return v, 1.6e-15 * abs(v)


def _asinh_ub_Tp(p, x):
    e = x ** p
    v = x * (1.0 + math.log1p(e) / p) / (1.0 + e) ** (1.0 / p)
    return v, 1.6e-15 * abs(v)


def _asinh_lb_hyp(p, x):
    q = 1.0 / p
    e = x ** p
    r = hyp2f1(Hyp2F1Params(q, 1.0 + q, 2.0 + q), -e)
    return x * r.value, x * r.abs_err + 8e-16 * x * abs(r.value)


def _asinh_ub_hyp(p, x):
    # F(-1+1/p, 1/p; 1/p; -x^p) collapses to the closed form (1+x^p)^(1-1/p)
    q = 1.0 / p
    e = x ** p
    r = hyp2f1(Hyp2F1Params(q - 1.0, q, q), -e)
    return x * r.value, x * r.abs_err + 8e-16 * x * abs(r.value)


def _atan_lb_hyp(p, x):
    q = 1.0 / p
    e = x ** p
    r = hyp2f1(Hyp2F1Params(2.0, q, 2.0 + q), -e)
    return x * r.value, x * r.abs_err + 8e-16 * x * abs(r.value)


def _l_p(p, x):
    q = 1.0 / p
    e = x ** p
    w = e / (1.0 + e)
    s, err, _, ok = series_2f1_tail(1.0, q, 2.0 + q, w)
    if not ok:
        raise ConvergenceError("series for the transformed lower bound hit the cap")
    pref = x * math.exp(-q * math.log1p(e))
    v = pref * (1.0 + s)
    return v, pref * err + 1.2e-15 * abs(v)


def _a1(p):
    q = 1.0 / p
    num, e1 = _f_half_tail(1.0, q, 2.0 + q)
    den, e2 = _f_half_tail(1.0, q, 1.0 + q)
    v = num / den
    return v, abs(v) * (e1 / num + e2 / den + 4e-16)


def _asinh_ub_up(p, x):
    a1v, a1e = _a1(p)
    lv, le = _l_p(p, x)
    v = a1v * lv
    return v, abs(v) * (a1e / a1v + le / max(lv, 1e-300) + 2e-16)


def _asinh_ub_up_corrected(p, x):
    a1v, a1e = _a1(p)
    lv, le = _l_p(p, x)
    v = lv / a1v
    return v, abs(v) * (a1e / a1v + le / max(lv, 1e-300) + 2e-16)


def _tilde_l(p, x):
    q = 1.0 / p
    e = x ** p
    w = e / (1.0 + e)
    s, err, _, ok = series_2f1_tail(2.0, 2.0, 2.0 + q, w)
    if not ok:
        raise ConvergenceError("series for the transformed lower bound hit the cap")
    pref = x / (1.0 + e) ** 2
    v = pref * (1.0 + s)
    return v, pref * err + 1.2e-15 * abs(v)


def _atan_lb_tilde_corrected(p, x):
    # mint the transformed form from the transformation itself rather than
    # transcribing it: x * F(2, 1/p; 2+1/p; -x^p) pushed through the
    # argument reduction evaluated at the reflected positive argument
    q = 1.0 / p
    e = x ** p
    w = e / (1.0 + e)
    params, _, _ = transform_pfaff(Hyp2F1Params(2.0, q, 2.0 + q), w)
    s, err, _, ok = series_2f1_tail(params.a, params.b, params.c, w)
    if not ok:
        raise ConvergenceError("series for the transformed lower bound hit the cap")
    pref = x * (1.0 - w) ** 2.0
    v = pref * (1.0 + s)
    return v, pref * err + 1.2e-15 * abs(v)


def _a2(p):
    q = 1.0 / p
    num, e1 = _f_half_tail(q, q, 1.0 + q)
    den, e2 = _f_half_tail(2.0, 2.0, 2.0 + q)
    v = 2.0 ** (2.0 - q) * num / den
    return v, abs(v) * (e1 / num + e2 / den + 6e-16)


def _atan_ub_tilde(p, x):
    a2v, a2e = _a2(p)
    lv, le = _tilde_l(p, x)
    v = a2v * lv
    return v, abs(v) * (a2e / a2v + le / max(lv, 1e-300) + 2e-16)


def _atanh_ub_I1(p, x):
    u = x ** (p / 2.0)
    bv = b_p(p / 2.0)
    v = 0.5 * x * (
        1.0
        - (2.0 / p) * math.log1p(-u)
        + 2.0 ** (2.0 / p) * bv / (1.0 + u) ** (2.0 / p)
    )
    return v, 2.4e-15 * abs(v)


def _atanh_lb_I3(p, x):
    u = x ** (p / 2.0)
    c = p * (2.0 + p)
    v = 0.5 * x * (
        1.0
        - (2.0 / (2.0 + p)) * math.log1p(-u)
        + (c * (1.0 + u) + 4.0 * u) / (c * (1.0 + u) ** (1.0 + 2.0 / p))
    )
    return v, 2.4e-15 * abs(v)


def _atan_ub_Rp(p, x):
    e = x ** p
    v = x * (1.0 - math.log1p(-e) / (p * (1.0 + p)) - math.log1p(e) / p)
    return v, 1.2e-15 * abs(v)


def _atan_lb_Lp(p, x):
    e = x ** p
    v = x * (1.0 + math.log1p(-e) / (p * (1.0 + p)) - 2.0 * math.log1p(e) / (1.0 + 2.0 * p))
    return v, 1.2e-15 * abs(v)


def _sum3f2_L(p, x):
    a = 0.5 / p
    u = x ** p
    lu = math.log1p(u)
    v = 0.5 * (1.0 + 4.0 * a * a * u / (1.0 + 2.0 * a)) + (
        1.0 + 2.0 * a * lu / (1.0 + 2.0 * a)
    ) / (2.0 * (1.0 + u) ** (2.0 * a))
    return v, 2.4e-15 * abs(v)


def _sum3f2_R(p, x):
    a = 0.5 / p
    u = x ** p
    lu = math.log1p(u)
    v = 0.25 * pi_p(p) + (1.0 + 2.0 * a * lu) / (2.0 * (1.0 + u) ** (2.0 * a))
    return v, 2.4e-15 * abs(v)


def _diff3f2_L(p, x):
    a = 0.5 / p
    u = x ** p
    lu = math.log1p(u)
    inner = -math.expm1(math.log1p(2.0 * a * lu) - 2.0 * a * lu)
    v = 0.5 + (1.0 + 2.0 * a) / (8.0 * a * a * u) * inner
    return v, abs(v) * 2.4e-15 + (1.0 + 2.0 * a) / (8.0 * a * a * u) * 4e-16 * abs(inner)


def _diff3f2_R(p, x):
    a = 0.5 / p
    u = x ** p
    lu = math.log1p(u)
    inner = 0.5 * pi_p(p) - math.exp(
        math.log1p(2.0 * a * lu / (1.0 + 2.0 * a)) - 2.0 * a * lu
    )
    v = (1.0 + 2.0 * a) / (8.0 * a * a * u) * inner
    return v, abs(v) * 2.4e-15 + (1.0 + 2.0 * a) / (8.0 * a * a * u) * 8e-16


_REGISTRY = {}


def _register(spec, evaluator):
    _REGISTRY[spec.id] = (spec, evaluator)


_INF = math.inf

_register(BoundSpec("asin_lb_poly", "arcsin_p", "lower", 1.0, _INF, True,
                    "x*(1 + x^p/(p*(1+p)))"), _asin_lb_poly)
_register(BoundSpec("asin_ub_pi", "arcsin_p", "upper", 1.0, _INF, True,
                    "(pi_p/2)*x"), _asin_ub_pi)
_register(BoundSpec("atanh_lb_log", "arctanh_p", "lower", 0.0, _INF, True,
                    "x*(1 - log(1-x^p)/(1+p))"), _atanh_lb_log)
_register(BoundSpec("atanh_ub_log", "arctanh_p", "upper", 0.0, _INF, True,
                    "x*(1 - log(1-x^p)/p)"), _atanh_ub_log)
_register(BoundSpec("atan_lb_mp", "arctan_p", "lower", 1.0, _INF, True,
                    "(p(1+p)(1+x^p)+x^p)*x / (p(1+p)(1+x^p)^(1+1/p))"), _atan_lb_mp)
_register(BoundSpec("atan_ub_Mp", "arctan_p", "upper", 1.0, _INF, True,
                    "2^p*b_p*x/(1+x^p)^(1/p)"), _atan_ub_Mp)
_register(BoundSpec("asinh_lb_tp", "arcsinh_p", "lower", 1.0, _INF, True,
                    "x*(1+log(1+x^p)/(1+p))/(1+x^p)^(1/p)"), _asinh_lb_tp)
_register(BoundSpec("asinh_ub_Tp", "arcsinh_p", "upper", 1.0, _INF, True,
                    "x*(1+log(1+x^p)/p)/(1+x^p)^(1/p)"), _asinh_ub_Tp)
_register(BoundSpec("asinh_lb_hyp", "arcsinh_p", "lower", 0.0, _INF, True,
                    "x*F(1/p,1+1/p;2+1/p;-x^p)"), _asinh_lb_hyp)
_register(BoundSpec("asinh_ub_hyp", "arcsinh_p", "upper", 0.0, 1.0, True,
                    "x*F(-1+1/p,1/p;1/p;-x^p) = x*(1+x^p)^(1-1/p)"), _asinh_ub_hyp)
_register(BoundSpec("atan_lb_hyp", "arctan_p", "lower", 0.0, _INF, True,
                    "x*F(2,1/p;2+1/p;-x^p)"), _atan_lb_hyp)
_register(BoundSpec("asinh_lb_lp", "arcsinh_p", "lower", 0.0, _INF, True,
                    "(x^p/(1+x^p))^(1/p)*F(1,1/p;2+1/p;x^p/(1+x^p))"), _l_p)
_register(BoundSpec("asinh_ub_up", "arcsinh_p", "upper", 0.0, _INF, False,
                    "a1(p)*asinh_lb_lp, a1 = F(1,1/p;2+1/p;1/2)/F(1,1/p;1+1/p;1/2)"),
          _asinh_ub_up)
_register(BoundSpec("asinh_ub_up_corrected", "arcsinh_p", "upper", 0.0, _INF, True,
                    "asinh_lb_lp/a1(p) (reciprocal multiplier)"),
          _asinh_ub_up_corrected)
_register(BoundSpec("atan_lb_tilde", "arctan_p", "lower", 0.0, _INF, True,
                    "(sqrt(x)/(1+x^p))^2*F(2,2;2+1/p;x^p/(1+x^p))"), _tilde_l)
_register(BoundSpec("atan_lb_tilde_corrected", "arctan_p", "lower", 0.0, _INF, True,
                    "argument-reduction transform of x*F(2,1/p;2+1/p;-x^p)"),
          _atan_lb_tilde_corrected)
_register(BoundSpec("atan_ub_tilde", "arctan_p", "upper", 0.0, _INF, True,
                    "a2(p)*atan_lb_tilde, a2 = 2^(2-1/p)F(1/p,1/p;1+1/p;1/2)/F(2,2;2+1/p;1/2)"),
          _atan_ub_tilde)
_register(BoundSpec("atanh_ub_I1", "arctanh_p", "upper", 1.0, _INF, True,
                    "(x/2)(1 - (2/p)log(1-x^(p/2)) + 2^(2/p)b_(p/2)/(1+x^(p/2))^(2/p))"),
          _atanh_ub_I1)
_register(BoundSpec("atanh_lb_I3", "arctanh_p", "lower", 1.0, _INF, True,
                    "(x/2)(1 - (2/(2+p))log(1-x^(p/2)) + (p(2+p)(1+x^(p/2))+4x^(p/2))/(p(2+p)(1+x^(p/2))^(1+2/p)))"),
          _atanh_lb_I3)
_register(BoundSpec("atan_ub_Rp", "arctan_p", "upper", 1.0, _INF, True,
                    "x*(1 - log(1-x^p)/(p(1+p)) - log(1+x^p)/p)"), _atan_ub_Rp)
_register(BoundSpec("atan_lb_Lp", "arctan_p", "lower", 1.0, _INF, True,
                    "x*(1 + log(1-x^p)/(p(1+p)) - 2log(1+x^p)/(1+2p))"), _atan_lb_Lp)
_register(BoundSpec("sum3f2_L", "sum3f2", "lower", 1.0, _INF, True,
                    "(1+4a^2 x^p/(1+2a))/2 + (1+2a log(1+x^p)/(1+2a))/(2(1+x^p)^2a), a=1/(2p)"),
          _sum3f2_L)
_register(BoundSpec("sum3f2_R", "sum3f2", "upper", 1.0, _INF, True,
                    "pi_p/4 + (1+2a log(1+x^p))/(2(1+x^p)^2a), a=1/(2p)"), _sum3f2_R)
_register(BoundSpec("diff3f2_L", "diff3f2", "lower", 1.0, _INF, True,
                    "1/2 + (1+2a)/(8a^2 x^p)(1 - (1+2a log(1+x^p))/(1+x^p)^2a), a=1/(2p)"),
          _diff3f2_L)
_register(BoundSpec("diff3f2_R", "diff3f2", "upper", 1.0, _INF, True,
                    "(1+2a)/(8a^2 x^p)(pi_p/2 - (1+2a log(1+x^p)/(1+2a))/(1+x^p)^2a), a=1/(2p)"),
          _diff3f2_R)


def _lookup(bound_id):
    try:
        return _REGISTRY[bound_id]
    except KeyError:
        raise UnknownBound(f"no bound registered under id {bound_id!r}") from None


def bound_eval(bound_id, p, x):
    """(value, abs_err) of a registered bound at an admissible (p, x)."""
    spec, fn = _lookup(bound_id)
    if not (spec.p_min < p < spec.p_max):
        raise DomainError(
            f"bound {bound_id!r} is registered for p in "
            f"({spec.p_min!r}, {spec.p_max!r}), got {p!r}"
        )
    if not (0.0 < x < 1.0):
        raise DomainError(f"bound {bound_id!r} requires x in (0,1), got {x!r}")
    value, err = fn(p, x)
    if not math.isfinite(value):
        raise DomainError(f"bound {bound_id!r} evaluated to {value!r}")
    return value, err


def bound_value(bound_id, p, x):
    """Value of a registered bound at an admissible (p, x)."""
    return bound_eval(bound_id, p, x)[0]


def get_bound(bound_id):
    """The BoundSpec registered under an id."""
    return _lookup(bound_id)[0]


def list_bounds(target=None, side=None):
    """Registered bounds, optionally filtered, ordered by id."""
    out = []
    for spec, _ in _REGISTRY.values():
        if target is not None and spec.target != target:
            continue
        if side is not None and spec.side != side:
            continue
        out.append(spec)
    out.sort(key=lambda s: s.id)
    return out


def clausen_target_value(tag, p, x):
    """The two Clausen combinations bounded in the registry.

    "sum3f2": 3F2(1/2p, 1/2p, 1/2p+1/2; 1/2, 1/2p+1; x^(2p)), equal to
    (arcsin_p + arcsinh_p)(x) / (2x).
    "diff3f2": 3F2((1+p)/2p, (1+p)/2p, 1/2p+1; 3/2, 1/2p+3/2; x^(2p)),
    equal to p(1+p)(arcsin_p - arcsinh_p)(x)/(2x^(p+1)).
    """
    if not (p > 0.0):
        raise DomainError(f"p must be positive, got {p!r}")
    if not (0.0 < x < 1.0):
        raise DomainError(f"x must be in (0,1), got {x!r}")
    z = x ** (2.0 * p)
    h = 0.5 / p
    if tag == "sum3f2":
        s, err, n, ok = series_3f2_tail(h, h, h + 0.5, 0.5, h + 1.0, z)
    elif tag == "diff3f2":
        s, err, n, ok = series_3f2_tail(
            h + 0.5, h + 0.5, h + 1.0, 1.5, h + 1.5, z
        )
    else:
        raise DomainError(f"unknown Clausen tag {tag!r}")
    if not ok:
        raise ConvergenceError(f"3F2 series for {tag} hit the cap at z={z!r}")
    return EvalResult(1.0 + s, err + 1e-16, "series", n)


def clausen_tail(tag, p, x):
    """(F - 1, abs_err) of the Clausen targets, for margin arithmetic."""
    if not (0.0 < x < 1.0):
        raise DomainError(f"x must be in (0,1), got {x!r}")
    z = x ** (2.0 * p)
    h = 0.5 / p
    if tag == "sum3f2":
        s, err, _, ok = series_3f2_tail(h, h, h + 0.5, 0.5, h + 1.0, z)
    else:
        s, err, _, ok = series_3f2_tail(h + 0.5, h + 0.5, h + 1.0, 1.5, h + 1.5, z)
    if not ok:
        raise ConvergenceError(f"3F2 series for {tag} hit the cap at z={z!r}")
    return s, err + 2.0 * abs(s) * 8e-16 * (1.0 + abs(2.0 * p * math.log(x)))
