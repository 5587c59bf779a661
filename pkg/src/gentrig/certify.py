"""Grid and sampler certification of the inequality claims.

Margin discipline
-----------------
Every claim part is evaluated as a pair (margin, budget) where ``margin``
is oriented so positive means satisfied, and ``budget`` is a first-order
propagated bound on the evaluation error of that margin, carried through
a little (value, error) arithmetic.  A grid point then falls in one of
three classes:

* margin >  margin_factor * budget: the strict inequality is certified
  at this point (after the dual-route gate below);
* margin < -margin_factor * budget: a genuine violation (again after the
  gate), recorded with its parameters;
* otherwise: the sign of the true margin is not resolvable in double
  precision at this point; it is counted as skipped, never as evidence.

Margins are formed from reduced quantities (fn(x)/x - 1, series tails,
log1p/expm1 chains) chosen per claim so that the leading cancellations
happen analytically, not in floating point: this keeps margins as small
as 1e-60 resolvable where the printed expressions would collapse to
noise.

Dual-route gate: wherever a claim part consumes a generalized inverse
function value, the series value used in the margin is checked against
the independent quadrature route before the point may count as checked
or violated; disagreement beyond max(1e-9, 20 * sum of error estimates)
marks the point skipped as evaluation-suspect.
"""

import math
import random
from dataclasses import dataclass, field

from gentrig import __version__
from gentrig._backend import series_2f1_tail
from gentrig.bounds import clausen_tail, clausen_target_value, get_bound, list_bounds
from gentrig.errors import (
    ConvergenceError,
    DomainError,
    MixedTargets,
    ToleranceNotMet,
    UnknownClaim,
)
from gentrig.hypergeom import Hyp3F2Params, clausen_3f2
from gentrig.invtrig import FnId, eval_fn, integrate_defining, reduced
from gentrig.special import b_p, c_p, pi_p, r_const

_EPS = 2.220446049250313e-16
_LN2 = math.log(2.0)

DEFAULT_MARGIN_FACTOR = 10.0
DEFAULT_X_COUNT = 200
DEFAULT_P_COUNT = 40
DEFAULT_PAIR_COUNT = 30
DEFAULT_SAMPLES = 10000
DEFAULT_SEED = 42
GATE_FLOOR = 1e-9
_GATE_STRIDE = 50  # sampler claims gate every this-many accepted samples


# ---------------------------------------------------------------------------
# (value, error) arithmetic


def vc(x):
    return (x, 0.0)


def vadd(a, b):
    return (a[0] + b[0], a[1] + b[1] + _EPS * (abs(a[0]) + abs(b[0])))


def vsub(a, b):
    return (a[0] - b[0], a[1] + b[1] + _EPS * (abs(a[0]) + abs(b[0])))


def vscale(a, c):
    return (c * a[0], abs(c) * a[1] + _EPS * abs(c * a[0]))


def vneg(a):
    return (-a[0], a[1])


def vmul(a, b):
    v = a[0] * b[0]
    return (v, abs(a[0]) * b[1] + abs(b[0]) * a[1] + _EPS * abs(v))


def vdiv(a, b):
    v = a[0] / b[0]
    return (v, (a[1] + abs(v) * b[1]) / abs(b[0]) + _EPS * abs(v))


def vlog1p(a):
    v = math.log1p(a[0])
    return (v, a[1] / abs(1.0 + a[0]) + _EPS * abs(v))


def vln(a):
    v = math.log(a[0])
    return (v, a[1] / abs(a[0]) + _EPS * abs(v))


def vexpm1(a):
    v = math.expm1(a[0])
    d = math.exp(min(a[0], 700.0))
    return (v, a[1] * d + _EPS * abs(v) + 1e-300)


def vexp(a):
    v = math.exp(min(a[0], 700.0))
    return (v, a[1] * v + _EPS * v)


# ---------------------------------------------------------------------------
# shared sub-expressions


def _ev(p, x):
    """x^p as a (value, error) pair."""
    lx = math.log1p(x - 1.0) if x > 0.5 else math.log(x)
    e = math.exp(p * lx)
    return (e, 4e-16 * e * (1.0 + abs(p * lx)))


def _chain_tail(a, b, c, zv):
    """Series tail F(a,b;c;z) - 1 with argument sensitivity folded in."""
    z = zv[0]
    s, err, _, ok = series_2f1_tail(a, b, c, z)
    if not ok:
        raise ConvergenceError(f"series tail hit the cap at z={z!r}")
    if z > 0.0:
        err += zv[1] * abs(s) / z / max(1e-4, 1.0 - z)
    return (s, err + 1e-300)


def _reduced_v(fn, p, x):
    t, err, route = reduced(fn, p, x)
    return (t, err), route


def _value_v(fn, p, x):
    tv, route = _reduced_v(fn, p, x)
    v = x * (1.0 + tv[0])
    return (v, x * tv[1] + _EPS * abs(v)), route


@dataclass
class _Gate:
    fn: FnId
    p: float
    x: float
    value: float
    err: float


@dataclass
class _Part:
    name: str
    lhs: float
    rhs: float
    margin: float
    budget: float


def _part(name, lhs_v, rhs_v):
    m = vsub(rhs_v, lhs_v)
    return _Part(name, lhs_v[0], rhs_v[0], m[0], m[1])


def _part_from_margin(name, margin_v, lhs=0.0, rhs=None):
    rhs = margin_v[0] if rhs is None else rhs
    return _Part(name, lhs, rhs, margin_v[0], margin_v[1])


# ---------------------------------------------------------------------------
# pointwise claim evaluators: (p, x) -> (parts, gates)


def _tails_basic(p, x):
    q = 1.0 / p
    ev = _ev(p, x)
    wv = vdiv(ev, vadd(vc(1.0), ev))
    le = vlog1p(ev)
    lme = vlog1p(vneg(ev))
    return q, ev, wv, le, lme


def _cl_t21a(p, x):
    q, ev, _, _, _ = _tails_basic(p, x)
    sa = _chain_tail(q, q, 1.0 + q, ev)
    st = _chain_tail(1.0, q, 1.0 + q, ev)
    la = vlog1p(sa)
    lt = vlog1p(st)
    m = vsub(lt, vscale(la, p))
    parts = [_Part("pow_vs_ratio", p * la[0], lt[0], m[0], m[1])]
    gates = [
        _Gate(FnId.ARCSIN, p, x, x * (1.0 + sa[0]), x * sa[1] + _EPS * x),
        _Gate(FnId.ARCTANH, p, x, x * (1.0 + st[0]), x * st[1] + _EPS * x),
    ]
    return parts, gates


def _cl_t21b(p, x):
    q, ev, _, _, lme = _tails_basic(p, x)
    sa = _chain_tail(q, q, 1.0 + q, ev)
    st = _chain_tail(1.0, q, 1.0 + q, ev)
    rhs = vsub(vlog1p(sa), vscale(lme, q))
    lhs = vlog1p(st)
    parts = [_part("ratio_vs_singular", lhs, rhs)]
    gates = [
        _Gate(FnId.ARCSIN, p, x, x * (1.0 + sa[0]), x * sa[1] + _EPS * x),
        _Gate(FnId.ARCTANH, p, x, x * (1.0 + st[0]), x * st[1] + _EPS * x),
    ]
    return parts, gates


def _cl_t21c(p, x):
    q, ev, wv, le, _ = _tails_basic(p, x)
    w = wv[0]
    lw = vsub(vscale(vc(math.log(x)), p), le)  # log of w = p log x - log(1+e)
    ta_w, _ = _reduced_v(FnId.ARCSIN, p, w)
    s1 = _chain_tail(1.0, q, 1.0 + q, wv)
    ln_lhs = vadd(vscale(lw, q + p - 1.0), vscale(vlog1p(ta_w), p))
    ln_rhs = vadd(vc(math.log(x)), vadd(vscale(le, -q), vlog1p(s1)))
    parts = [_part("weak_power_form", ln_lhs, ln_rhs)]
    gates = [_Gate(FnId.ARCSIN, p, w, w * (1.0 + ta_w[0]), w * ta_w[1] + _EPS * w)]
    return parts, gates


def _cl_t21d(p, x):
    q, ev, wv, le, _ = _tails_basic(p, x)
    sa = _chain_tail(q, q, 1.0 + q, wv)
    st = _chain_tail(1.0, q, 1.0 + q, wv)
    lmw = vlog1p(vneg(wv))
    rhs = vsub(vlog1p(sa), vscale(lmw, q))
    lhs = vlog1p(st)
    y = x * math.exp(-le[0] / p)
    parts = [_part("transplanted_ratio", lhs, rhs)]
    gates = [
        _Gate(FnId.ARCSINH, p, x, x * (1.0 + math.expm1(-q * le[0] + math.log1p(st[0]))), 1e-9),
        _Gate(FnId.ARCTANH, p, y, y * (1.0 + st[0]), y * st[1] + _EPS * y),
    ]
    return parts, gates


def _cl_t21e(p, x):
    _, ev, _, _, lme = _tails_basic(p, x)
    a = vexpm1(vscale(lme, 1.0 / p))
    num = vadd(vscale(ev, 1.0 / (p * (1.0 + p))), vscale(lme, 1.0 / p))
    den = vsub(vc(1.0), vscale(lme, 1.0 / p))
    b = vdiv(num, den)
    parts = [_part("auxiliary_log_bound", a, b)]
    return parts, []


def _cl_t22a(p, x):
    q, ev, wv, le, _ = _tails_basic(p, x)
    s1 = _chain_tail(1.0, q, 1.0 + q, wv)
    s2 = _chain_tail(1.0, q, 2.0 + q, wv)
    l1 = vlog1p(s1)
    l2 = vlog1p(s2)
    pref = vexp(vadd(vscale(le, -q), l2))
    m = vmul(vmul(vc(x), pref), vexpm1(vsub(l1, l2)))
    asinh_v = x * math.exp(-q * le[0] + l1[0])
    parts = [
        _Part("hyp_lower_vs_asinh", x * pref[0], asinh_v, m[0], m[1]),
    ]
    gates = [_Gate(FnId.ARCSINH, p, x, asinh_v, 2e-15 * asinh_v + 1e-300)]
    return parts, gates


def _cl_t22b(p, x):
    q, ev, wv, le, _ = _tails_basic(p, x)
    s1 = _chain_tail(1.0, q, 1.0 + q, wv)
    parts = [_part("asinh_vs_closed_upper", vlog1p(s1), le)]
    asinh_v = x * math.exp(-q * le[0] + math.log1p(s1[0]))
    gates = [_Gate(FnId.ARCSINH, p, x, asinh_v, 2e-15 * asinh_v + 1e-300)]
    return parts, gates


def _cl_t22c(p, x):
    q, ev, wv, le, _ = _tails_basic(p, x)
    sq = _chain_tail(q, q, 1.0 + q, wv)
    s22 = _chain_tail(2.0, 2.0, 2.0 + q, wv)
    lq = vlog1p(sq)
    l22 = vlog1p(s22)
    inner = vadd(vscale(le, 2.0 - q), vsub(lq, l22))
    pref = vexp(vadd(vscale(le, -2.0), l22))
    m = vmul(vmul(vc(x), pref), vexpm1(inner))
    atan_v = x * math.exp(-q * le[0] + lq[0])
    parts = [_Part("hyp_lower_vs_atan", x * pref[0], atan_v, m[0], m[1])]
    gates = [_Gate(FnId.ARCTAN, p, x, atan_v, 2e-15 * atan_v + 1e-300)]
    return parts, gates


def _half_v():
    return (0.5, 0.0)


def _cl_e29(p, x):
    q, ev, wv, le, _ = _tails_basic(p, x)
    s1 = _chain_tail(1.0, q, 1.0 + q, wv)
    s2 = _chain_tail(1.0, q, 2.0 + q, wv)
    l1 = vlog1p(s1)
    l2 = vlog1p(s2)
    pref = vexp(vadd(vscale(le, -q), l2))
    m_low = vmul(vmul(vc(x), pref), vexpm1(vsub(l1, l2)))
    # upper multiplier as printed: a1 = F(1,q;2+q;1/2)/F(1,q;1+q;1/2) < 1
    h1 = _chain_tail(1.0, q, 2.0 + q, _half_v())
    h2 = _chain_tail(1.0, q, 1.0 + q, _half_v())
    ln_a1 = vsub(vlog1p(h1), vlog1p(h2))
    m_up = vadd(ln_a1, vsub(l2, l1))
    asinh_v = x * math.exp(-q * le[0] + l1[0])
    parts = [
        _Part("lower", x * pref[0], asinh_v, m_low[0], m_low[1]),
        _Part("upper_printed", 0.0, m_up[0], m_up[0], m_up[1]),
    ]
    gates = [_Gate(FnId.ARCSINH, p, x, asinh_v, 2e-15 * asinh_v + 1e-300)]
    return parts, gates


def _cl_e29_corrected(p, x):
    q, ev, wv, le, _ = _tails_basic(p, x)
    s1 = _chain_tail(1.0, q, 1.0 + q, wv)
    s2 = _chain_tail(1.0, q, 2.0 + q, wv)
    l1 = vlog1p(s1)
    l2 = vlog1p(s2)
    h1 = _chain_tail(1.0, q, 2.0 + q, _half_v())
    h2 = _chain_tail(1.0, q, 1.0 + q, _half_v())
    ln_a1 = vsub(vlog1p(h1), vlog1p(h2))
    # upper with the reciprocal multiplier: margin = (l2-l1) - ln a1
    m_up = vsub(vsub(l2, l1), ln_a1)
    asinh_v = x * math.exp(-q * le[0] + l1[0])
    parts = [_Part("upper_reciprocal", 0.0, m_up[0], m_up[0], m_up[1])]
    gates = [_Gate(FnId.ARCSINH, p, x, asinh_v, 2e-15 * asinh_v + 1e-300)]
    return parts, gates


def _cl_e210(p, x):
    q, ev, wv, le, _ = _tails_basic(p, x)
    sq = _chain_tail(q, q, 1.0 + q, wv)
    s22 = _chain_tail(2.0, 2.0, 2.0 + q, wv)
    lq = vlog1p(sq)
    l22 = vlog1p(s22)
    inner = vadd(vscale(le, 2.0 - q), vsub(lq, l22))
    pref = vexp(vadd(vscale(le, -2.0), l22))
    m_low = vmul(vmul(vc(x), pref), vexpm1(inner))
    # corrected transform of the negative-argument lower form is the same
    # expression minted through transform_pfaff; assert its agreement
    from gentrig.bounds import bound_eval

    bv, berr = bound_eval("atan_lb_tilde_corrected", p, x)
    lv = x * pref[0]
    m_equiv_raw = abs(bv - lv)
    # upper: a2(p) * lower
    hq = _chain_tail(q, q, 1.0 + q, _half_v())
    h22 = _chain_tail(2.0, 2.0, 2.0 + q, _half_v())
    ln_a2 = vadd(vc((2.0 - q) * _LN2), vsub(vlog1p(hq), vlog1p(h22)))
    m_up = vadd(ln_a2, vadd(vscale(le, q - 2.0), vsub(l22, lq)))
    atan_v = x * math.exp(-q * le[0] + lq[0])
    parts = [
        _Part("lower_printed", lv, atan_v, m_low[0], m_low[1]),
        _Part(
            "lower_corrected_equals_printed",
            m_equiv_raw,
            1e-11 * max(1.0, abs(lv)),
            1e-11 * max(1.0, abs(lv)) - m_equiv_raw,
            berr + m_low[1],
        ),
        _Part("upper", 0.0, m_up[0], m_up[0], m_up[1]),
    ]
    gates = [_Gate(FnId.ARCTAN, p, x, atan_v, 2e-15 * atan_v + 1e-300)]
    return parts, gates


def _cl_t26i1(p, x):
    q = 1.0 / p
    uv = _ev(p / 2.0, x)
    lmu = vlog1p(vneg(uv))
    lu = vlog1p(uv)
    bv = b_p(p / 2.0)
    b_pair = (bv, 4e-15 * abs(bv))
    kk = vadd(vc(2.0 * q * _LN2), vln(b_pair))
    g = vexpm1(vsub(kk, vscale(lu, 2.0 * q)))
    a = vscale(lmu, -2.0 * q)
    ubm1 = vscale(vadd(a, g), 0.5)
    tt, _ = _reduced_v(FnId.ARCTANH, p, x)
    parts = [_part("half_split_upper", tt, ubm1)]
    v = x * (1.0 + tt[0])
    gates = [_Gate(FnId.ARCTANH, p, x, v, x * tt[1] + _EPS * v)]
    return parts, gates


def _cl_t26i2(p, x):
    _, ev, _, le, lme = _tails_basic(p, x)
    rm1 = vsub(vscale(lme, -1.0 / (p * (1.0 + p))), vscale(le, 1.0 / p))
    ta, _ = _reduced_v(FnId.ARCTAN, p, x)
    parts = [_part("log_upper", ta, rm1)]
    v = x * (1.0 + ta[0])
    gates = [_Gate(FnId.ARCTAN, p, x, v, x * ta[1] + _EPS * v)]
    return parts, gates


def _cl_t26i3(p, x):
    s2 = p / 2.0
    uv = _ev(s2, x)
    lmu = vlog1p(vneg(uv))
    lu = vlog1p(uv)
    dd = vscale(vadd(vc(1.0), uv), s2 * (1.0 + s2))
    ln_m = vsub(vlog1p(vdiv(uv, dd)), vscale(lu, 1.0 / s2))
    mm1 = vexpm1(ln_m)
    ap = vscale(lmu, -2.0 / (2.0 + p))
    i3m1 = vscale(vadd(ap, mm1), 0.5)
    tt, _ = _reduced_v(FnId.ARCTANH, p, x)
    parts = [_part("half_split_lower", i3m1, tt)]
    v = x * (1.0 + tt[0])
    gates = [_Gate(FnId.ARCTANH, p, x, v, x * tt[1] + _EPS * v)]
    return parts, gates


def _cl_t26i4(p, x):
    _, ev, _, le, lme = _tails_basic(p, x)
    lm1 = vadd(vscale(lme, 1.0 / (p * (1.0 + p))), vscale(le, -2.0 / (1.0 + 2.0 * p)))
    ta, _ = _reduced_v(FnId.ARCTAN, p, x)
    parts = [_part("log_lower", lm1, ta)]
    v = x * (1.0 + ta[0])
    gates = [_Gate(FnId.ARCTAN, p, x, v, x * ta[1] + _EPS * v)]
    return parts, gates


def _cl_t26gap(p, x):
    _, ev, _, le, lme = _tails_basic(p, x)
    gap = vsub(vscale(lme, -2.0 / (p * (1.0 + p))), vscale(le, 1.0 / (p * (1.0 + 2.0 * p))))
    floor = vscale(ev, 1.0 / ((1.0 + p) * (1.0 + 2.0 * p)))
    parts = [_part("gap_exceeds_power", floor, gap)]
    return parts, []


def _t3_gate_sum(p, x, s3):
    ta, _ = _reduced_v(FnId.ARCSIN, p, x)
    th, _ = _reduced_v(FnId.ARCSINH, p, x)
    alt = vscale(vadd(ta, th), 0.5)
    diff = abs(s3[0] - alt[0])
    tol = max(GATE_FLOOR, 20.0 * (s3[1] + alt[1]))
    return diff <= tol


def _t3_gate_diff(p, x, s3):
    ta, _ = _reduced_v(FnId.ARCSIN, p, x)
    th, _ = _reduced_v(FnId.ARCSINH, p, x)
    ev = _ev(p, x)
    alt = vdiv(vscale(vsub(ta, th), 0.5 * p * (1.0 + p)), ev)
    diff = abs((1.0 + s3[0]) - alt[0])
    tol = max(GATE_FLOOR, 20.0 * (s3[1] + alt[1]))
    return diff <= tol


def _cl_t31(p, x):
    a = 0.5 / p
    uv = _ev(p, x)
    lu = vlog1p(uv)
    s3 = clausen_tail("sum3f2", p, x)
    g_l = vsub(vlog1p(vscale(lu, 2.0 * a / (1.0 + 2.0 * a))), vscale(lu, 2.0 * a))
    la_m1 = vscale(vadd(vscale(uv, 4.0 * a * a / (1.0 + 2.0 * a)), vexpm1(g_l)), 0.5)
    pip = pi_p(p)
    g_r = vsub(vlog1p(vscale(lu, 2.0 * a)), vscale(lu, 2.0 * a))
    ra_m1 = vadd((0.25 * pip - 0.5, 4e-16 * pip), vscale(vexpm1(g_r), 0.5))
    parts = [
        _part("lower", la_m1, s3),
        _part("upper", s3, ra_m1),
    ]
    gate_ok = _t3_gate_sum(p, x, s3)
    return parts, gate_ok


def _cl_t32(p, x):
    a = 0.5 / p
    uv = _ev(p, x)
    lu = vlog1p(uv)
    s3 = clausen_tail("diff3f2", p, x)
    c = (1.0 + 2.0 * a) / (8.0 * a * a)
    g_r = vsub(vlog1p(vscale(lu, 2.0 * a)), vscale(lu, 2.0 * a))
    lt_m1 = vadd(vc(-0.5), vdiv(vscale(vexpm1(g_r), -c), uv))
    pip = pi_p(p)
    g_l = vsub(vlog1p(vscale(lu, 2.0 * a / (1.0 + 2.0 * a))), vscale(lu, 2.0 * a))
    inner = vsub((0.5 * pip - 1.0, 4e-16 * pip), vexpm1(g_l))
    rt = vdiv(vscale(inner, c), uv)
    parts = [
        _part("lower", lt_m1, s3),
        _part("upper", vadd(vc(1.0), s3), rt),
    ]
    gate_ok = _t3_gate_diff(p, x, s3)
    return parts, gate_ok


_POINTWISE = {
    "T2.1a": _cl_t21a,
    "T2.1b": _cl_t21b,
    "T2.1c": _cl_t21c,
    "T2.1d": _cl_t21d,
    "T2.1e": _cl_t21e,
    "T2.2a": _cl_t22a,
    "T2.2b": _cl_t22b,
    "T2.2c": _cl_t22c,
    "E2.9": _cl_e29,
    "E2.9_corrected": _cl_e29_corrected,
    "E2.10": _cl_e210,
    "T2.6_I1": _cl_t26i1,
    "T2.6_I2": _cl_t26i2,
    "T2.6_I3": _cl_t26i3,
    "T2.6_I4": _cl_t26i4,
    "T2.6_gap": _cl_t26gap,
    "T3.1": _cl_t31,
    "T3.2": _cl_t32,
}


# ---------------------------------------------------------------------------
# pair claims


def _pair_atanh(cache, p, t):
    key = (p, t)
    if key not in cache:
        cache[key] = _value_v(FnId.ARCTANH, p, t)[0]
    return cache[key]


def _cl_t23q1(cache, p, x, y):
    s = x + y * (1.0 - x)
    av = _pair_atanh(cache, p, x)
    bv = _pair_atanh(cache, p, y)
    cv = _pair_atanh(cache, p, s)
    tot = vadd(av, bv)
    parts = [
        _part("quotient_le_p", tot, vscale(cv, p)),
        _part("quotient_ge_inv_p", vscale(cv, 1.0 / p), tot),
    ]
    gates = [(FnId.ARCTANH, p, s, cv)]
    return parts, gates


def _cl_t23q2(cache, p, x, y):
    s = x + y * (1.0 - x)
    av = _pair_atanh(cache, p, x)
    bv = _pair_atanh(cache, p, y)
    cv = _pair_atanh(cache, p, s)
    tot = vadd(av, bv)
    rv = (r_const(1.0, 1.0 / p), 4e-15 * (1.0 + abs(r_const(1.0, 1.0 / p))))
    lo = vmul(cv, vdiv(vc(p - 1.0), rv))
    hi = vmul(cv, vdiv(vscale(rv, 2.0), vc(p - 1.0)))
    parts = [
        _part("refined_lower", lo, tot),
        _part("refined_upper", tot, hi),
    ]
    gates = [(FnId.ARCTANH, p, s, cv)]
    return parts, gates


def _t23_diff(cache, p, x, y):
    s = x + y * (1.0 - x)
    av = _pair_atanh(cache, p, x)
    bv = _pair_atanh(cache, p, y)
    cv = _pair_atanh(cache, p, s)
    return vsub(vadd(av, bv), cv), (FnId.ARCTANH, p, s, cv)


def _cl_t23d(cache, p, x, y):
    dv, gate = _t23_diff(cache, p, x, y)
    rv = r_const(1.0, 1.0 / p)
    ub = ((2.0 * rv - 1.0) / p - 1.0, 8e-15 * (1.0 + abs(rv) / p))
    parts = [
        _part_from_margin("difference_nonnegative", dv),
        _part("difference_upper_printed", dv, ub),
    ]
    return parts, [gate]


def _cl_t23d_lower(cache, p, x, y):
    dv, gate = _t23_diff(cache, p, x, y)
    return [_part_from_margin("difference_nonnegative", dv)], [gate]


def _cl_t23d_upper_alt(cache, p, x, y):
    dv, gate = _t23_diff(cache, p, x, y)
    rv = r_const(1.0, 1.0 / p)
    ub = ((2.0 * rv + 1.0) / p - 1.0, 8e-15 * (1.0 + abs(rv) / p))
    return [_part("difference_upper_beta_form", dv, ub)], [gate]


def _cl_t24a(cache, p, x, y):
    if x == y:
        return None, []
    xp = math.sqrt(1.0 - x * x)
    yp = math.sqrt(1.0 - y * y)
    inner = math.sqrt(2.0 * x * y / (1.0 + x * y + xp * yp))
    av = _pair_atanh(cache, p, x)
    bv = _pair_atanh(cache, p, y)
    cv = _pair_atanh(cache, p, inner)
    parts = [_part("cosh_midpoint", vscale(cv, 2.0), vadd(av, bv))]
    return parts, [(FnId.ARCTANH, p, inner, cv)]


def _cl_t24b(cache, p, x, y):
    if x == y:
        return None, []
    inner = 2.0 * x * y / (x + y)
    av = _pair_atanh(cache, p, x)
    bv = _pair_atanh(cache, p, y)
    cv = _pair_atanh(cache, p, inner)
    parts = [_part("harmonic_midpoint", vscale(cv, 2.0), vadd(av, bv))]
    return parts, [(FnId.ARCTANH, p, inner, cv)]


_PAIR = {
    "T2.3q1": _cl_t23q1,
    "T2.3q2": _cl_t23q2,
    "T2.3d": _cl_t23d,
    "T2.3d_lower": _cl_t23d_lower,
    "T2.3d_upper_alt": _cl_t23d_upper_alt,
    "T2.4a": _cl_t24a,
    "T2.4b": _cl_t24b,
}

# grunbaum claims: fn, direction ("geq": 1 + h(z) >= h(x) + h(y))
_GRUNBAUM = {
    "T2.5a": (FnId.ARCSIN, "geq"),
    "T2.5b": (FnId.ARCTANH, "geq"),
    "T2.5c": (FnId.ARCTAN, "leq"),
    "T2.5d": (FnId.ARCSINH, "leq"),
    "T2.5d_rev": (FnId.ARCSINH, "geq"),
}


# ---------------------------------------------------------------------------
# monotonicity claims: value function g(p, x) -> (value, err), direction


def _mono_l12(p, x):
    q = 1.0 / p
    s = _chain_tail(1.0, q, 1.0 + q, (x, 0.0))
    return vdiv(s, vneg(vlog1p(vc(-x))))


def _mono_r1(p, x):
    q, ev, wv, le, _ = _tails_basic(p, x)
    l1 = vlog1p(_chain_tail(1.0, q, 1.0 + q, wv))
    l2 = vlog1p(_chain_tail(1.0, q, 2.0 + q, wv))
    return vexp(vsub(l2, l1))


def _mono_r2(p, x):
    q, ev, wv, le, _ = _tails_basic(p, x)
    lq = vlog1p(_chain_tail(q, q, 1.0 + q, wv))
    l22 = vlog1p(_chain_tail(2.0, 2.0, 2.0 + q, wv))
    return vexp(vadd(vscale(le, q - 2.0), vsub(l22, lq)))


def _mono_r3(p, x):
    q, ev, wv, le, _ = _tails_basic(p, x)
    l1 = vlog1p(_chain_tail(1.0, q, 1.0 + q, wv))
    return vexp(vsub(l1, le))


def _l12_range(p):
    return (1.0 / (1.0 + p), 1.0 / p)


_MONOTONE = {
    "L1.2": (_mono_l12, "increasing", _l12_range),
    "T2.2r1": (_mono_r1, "decreasing", None),
    "T2.2r2": (_mono_r2, "decreasing", None),
    "T2.2r3": (_mono_r3, "decreasing", None),
}


# ---------------------------------------------------------------------------
# claim registry


@dataclass(frozen=True)
class ClaimSpec:
    id: str
    kind: str                  # pointwise | pair | grunbaum | monotone
    policy: str                # assert | report
    dom_lo: float
    dom_hi: float
    lo_closed: bool
    hi_closed: bool
    grid_lo: float
    grid_hi: float
    grid_scale: str            # log | lin
    statement: str


_CLAIMS = {}
_CLAIM_ORDER = []


def _claim(spec):
    _CLAIMS[spec.id] = spec
    _CLAIM_ORDER.append(spec.id)


_INF = math.inf

_claim(ClaimSpec("T2.1a", "pointwise", "assert", 1.0, _INF, False, False,
                 1.05, 20.0, "log",
                 "(arcsin_p(x)/x)^p < arctanh_p(x)/x"))
_claim(ClaimSpec("T2.1b", "pointwise", "assert", 0.0, _INF, False, False,
                 0.5, 20.0, "log",
                 "arctanh_p(x)/x < arcsin_p(x)/(x (1-x^p)^(1/p))"))
_claim(ClaimSpec("T2.1c", "pointwise", "assert", 1.0, _INF, False, False,
                 1.05, 20.0, "log",
                 "w^(1/p-1) arcsin_p(w)^p < arcsinh_p(x), w = x^p/(1+x^p)"))
_claim(ClaimSpec("T2.1d", "pointwise", "assert", 1.0, _INF, False, False,
                 1.05, 20.0, "log",
                 "arcsinh_p(x) < (1+x^p)^(1/p) arcsin_p(w^(1/p))"))
_claim(ClaimSpec("T2.1e", "pointwise", "assert", 1.0, _INF, False, False,
                 1.05, 20.0, "log",
                 "(1-x^p)^(1/p) < (1+x^p/(p(1+p)))/(1-log(1-x^p)/p)"))
_claim(ClaimSpec("T2.2a", "pointwise", "assert", 0.0, _INF, False, False,
                 0.5, 20.0, "log",
                 "x F(1/p,1+1/p;2+1/p;-x^p) < arcsinh_p(x)"))
_claim(ClaimSpec("T2.2b", "pointwise", "assert", 0.0, 1.0, False, False,
                 0.05, 0.95, "lin",
                 "arcsinh_p(x) < x (1+x^p)^(1-1/p) for p in (0,1)"))
_claim(ClaimSpec("T2.2c", "pointwise", "assert", 0.0, _INF, False, False,
                 0.5, 20.0, "log",
                 "x F(2,1/p;2+1/p;-x^p) < arctan_p(x)"))
_claim(ClaimSpec("T2.2r1", "monotone", "assert", 0.0, _INF, False, False,
                 0.5, 20.0, "log",
                 "x F(1/p,1+1/p;2+1/p;-x^p)/arcsinh_p(x) decreasing in x"))
_claim(ClaimSpec("T2.2r2", "monotone", "assert", 0.0, _INF, False, False,
                 0.5, 20.0, "log",
                 "x F(2,1/p;2+1/p;-x^p)/arctan_p(x) decreasing in x"))
_claim(ClaimSpec("T2.2r3", "monotone", "assert", 0.0, 1.0, False, False,
                 0.05, 0.95, "lin",
                 "arcsinh_p(x)/(x (1+x^p)^(1-1/p)) decreasing in x, p in (0,1)"))
_claim(ClaimSpec("E2.9", "pointwise", "report", 0.0, _INF, False, False,
                 0.5, 20.0, "log",
                 "l_p < arcsinh_p < a1(p) l_p with a1 as printed"))
_claim(ClaimSpec("E2.9_corrected", "pointwise", "assert", 0.0, _INF, False, False,
                 0.5, 20.0, "log",
                 "arcsinh_p < l_p/a1(p) (reciprocal multiplier)"))
_claim(ClaimSpec("E2.10", "pointwise", "report", 0.0, _INF, False, False,
                 0.5, 20.0, "log",
                 "tilde_l_p < arctan_p < a2(p) tilde_l_p"))
_claim(ClaimSpec("T2.3q1", "pair", "assert", 1.0, _INF, False, False,
                 1.05, 20.0, "log",
                 "1/p <= (atanh_p(x)+atanh_p(y))/atanh_p(x+y-xy) <= p"))
_claim(ClaimSpec("T2.3q2", "pair", "assert", 1.0, _INF, False, False,
                 1.05, 20.0, "log",
                 "(p-1)/R <= quotient <= 2R/(p-1), R = r_const(1,1/p)"))
_claim(ClaimSpec("T2.3d", "pair", "report", 1.0, _INF, False, False,
                 1.05, 20.0, "log",
                 "0 <= difference <= (2R-1)/p - 1 as printed"))
_claim(ClaimSpec("T2.3d_lower", "pair", "assert", 1.0, _INF, False, False,
                 1.05, 20.0, "log",
                 "atanh_p(x)+atanh_p(y) >= atanh_p(x+y-xy)"))
_claim(ClaimSpec("T2.3d_upper_alt", "pair", "report", 1.0, _INF, False, False,
                 1.05, 20.0, "log",
                 "difference <= (2R+1)/p - 1 (general-form constant)"))
_claim(ClaimSpec("T2.4a", "pair", "assert", 1.0, 2.0, True, True,
                 1.0, 2.0, "lin",
                 "atanh_p(x)+atanh_p(y) > 2 atanh_p(sqrt(2xy/(1+xy+x'y')))"))
_claim(ClaimSpec("T2.4b", "pair", "assert", 0.0, _INF, False, False,
                 0.5, 20.0, "log",
                 "atanh_p(x)+atanh_p(y) > 2 atanh_p(2xy/(x+y))"))
_claim(ClaimSpec("T2.5a", "grunbaum", "assert", 1.0, _INF, False, False,
                 1.05, 20.0, "log",
                 "1 + h(z) >= h(x) + h(y), h = arcsin_p(t)/t at squares"))
_claim(ClaimSpec("T2.5b", "grunbaum", "assert", 1.0, _INF, True, False,
                 1.0, 20.0, "log",
                 "1 + h(z) >= h(x) + h(y), h = arctanh_p(t)/t at squares"))
_claim(ClaimSpec("T2.5c", "grunbaum", "assert", 2.0, _INF, True, False,
                 2.0, 20.0, "log",
                 "1 + h(z) <= h(x) + h(y), h = arctan_p(t)/t at squares"))
_claim(ClaimSpec("T2.5d", "grunbaum", "assert", 2.0, _INF, True, False,
                 2.0, 20.0, "log",
                 "1 + h(z) <= h(x) + h(y), h = arcsinh_p(t)/t at squares"))
_claim(ClaimSpec("T2.5d_rev", "grunbaum", "assert", 0.0, 1.0, False, True,
                 0.05, 1.0, "lin",
                 "direction reversed for p in (0,1]"))
_claim(ClaimSpec("T2.6_I1", "pointwise", "assert", 1.0, _INF, False, False,
                 1.05, 20.0, "log",
                 "arctanh_p upper bound from the half-parameter split"))
_claim(ClaimSpec("T2.6_I2", "pointwise", "assert", 1.0, _INF, False, False,
                 1.05, 20.0, "log",
                 "arctan_p(x) < R_p(x)"))
_claim(ClaimSpec("T2.6_I3", "pointwise", "assert", 1.0, _INF, False, False,
                 1.05, 20.0, "log",
                 "arctanh_p lower bound from the half-parameter split"))
_claim(ClaimSpec("T2.6_I4", "pointwise", "assert", 1.0, _INF, False, False,
                 1.05, 20.0, "log",
                 "L_p(x) < arctan_p(x)"))
_claim(ClaimSpec("T2.6_gap", "pointwise", "assert", 1.0, _INF, False, False,
                 1.05, 20.0, "log",
                 "R_p/x - L_p/x > x^p/((1+p)(1+2p))"))
_claim(ClaimSpec("T3.1", "pointwise", "assert", 1.0, _INF, False, False,
                 1.111111, 10.0, "a",
                 "L_a < 3F2 sum form < R_a, a = 1/(2p)"))
_claim(ClaimSpec("T3.2", "pointwise", "assert", 1.0, _INF, False, False,
                 1.111111, 10.0, "a",
                 "tilde L_a < 3F2 difference form < tilde R_a"))
_claim(ClaimSpec("L1.2", "monotone", "assert", 0.0, _INF, False, False,
                 0.5, 20.0, "log",
                 "(1-F(a,b;a+b;x))/log(1-x) increasing, range bracket"))


def list_claims():
    """ClaimSpecs in registry (paper) order."""
    return [_CLAIMS[c] for c in _CLAIM_ORDER]


def get_claim(claim_id):
    try:
        return _CLAIMS[claim_id]
    except KeyError:
        raise UnknownClaim(f"no claim registered under id {claim_id!r}") from None


# ---------------------------------------------------------------------------
# grids and reports


@dataclass
class GridSpec:
    """Evaluation grid: p values, x values, and the margin multiplier."""

    p_values: list
    x_values: list
    margin_factor: float = DEFAULT_MARGIN_FACTOR

    def __post_init__(self):
        for name, vals in (("p", self.p_values), ("x", self.x_values)):
            if any(vals[i] >= vals[i + 1] for i in range(len(vals) - 1)):
                raise DomainError(f"{name}_values must be strictly increasing")
        if self.margin_factor < 1.0:
            raise DomainError("margin_factor must be >= 1")


def linspace(lo, hi, n):
    if n == 1:
        return [lo]
    step = (hi - lo) / (n - 1)
    return [lo + i * step for i in range(n)]


def logspace(lo, hi, n):
    return [math.exp(v) for v in linspace(math.log(lo), math.log(hi), n)]


def default_p_values(spec, n=DEFAULT_P_COUNT):
    if spec.grid_scale == "lin":
        return linspace(spec.grid_lo, spec.grid_hi, n)
    if spec.grid_scale == "a":
        # natural axis is a = 1/(2p) on (0, 1/2); map a descending linear
        # grid to an increasing p grid
        a_vals = linspace(0.05, 0.45, n)
        return sorted(0.5 / a for a in a_vals)
    return logspace(spec.grid_lo, spec.grid_hi, n)


def default_x_values(n=DEFAULT_X_COUNT):
    return linspace(1e-3, 0.999, n)


def _clamp_p(spec, p_values):
    out = []
    for p in p_values:
        if (p > spec.dom_lo or (spec.lo_closed and p == spec.dom_lo)) and (
            p < spec.dom_hi or (spec.hi_closed and p == spec.dom_hi)
        ):
            out.append(p)
    return out


def grid_for(spec, p_override=None, x_override=None,
             margin_factor=DEFAULT_MARGIN_FACTOR, pair=False):
    if p_override is not None:
        p_vals = _clamp_p(spec, p_override)
    else:
        p_vals = default_p_values(spec)
    if x_override is not None:
        x_vals = list(x_override)
    elif pair or spec.kind == "pair":
        x_vals = linspace(1e-3, 0.999, DEFAULT_PAIR_COUNT)
    else:
        x_vals = default_x_values()
    x_vals = [x for x in x_vals if 0.0 < x <= 0.999]
    return p_vals, x_vals, margin_factor


@dataclass
class Violation:
    params: dict
    lhs: float
    rhs: float
    margin: float

    def as_dict(self):
        return {
            "params": dict(self.params),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "margin": self.margin,
        }


@dataclass
class CertificateReport:
    claim_id: str
    status: str
    points_checked: int
    skipped: int
    min_margin: float | None
    max_error_budget: float | None
    margin_factor: float
    grid_p: list
    grid_x: list
    seed: int | None
    violations: list = field(default_factory=list)

    def as_dict(self):
        return {
            "claim_id": self.claim_id,
            "status": self.status,
            "points_checked": self.points_checked,
            "skipped": self.skipped,
            "min_margin": self.min_margin,
            "max_error_budget": self.max_error_budget,
            "margin_factor": self.margin_factor,
            "grid": {"p": list(self.grid_p), "x": list(self.grid_x)},
            "seed": self.seed,
            "violations": [v.as_dict() for v in self.violations],
            "tool_version": __version__,
        }


class _Tally:
    def __init__(self, margin_factor):
        self.mf = margin_factor
        self.checked = 0
        self.skipped = 0
        self.min_margin = None
        self.max_budget = None
        self.violations = []

    def note_skip(self):
        self.skipped += 1

    def classify(self, parts):
        """-1 violation candidate, 0 unresolved, +1 resolved positive."""
        worst = None
        for part in parts:
            if part.margin < -self.mf * part.budget:
                if worst is None or part.margin < worst.margin:
                    worst = part
        if worst is not None:
            return -1, worst
        unresolved = None
        for part in parts:
            if part.margin <= self.mf * part.budget:
                unresolved = part
        if unresolved is not None:
            return 0, unresolved
        worst = min(parts, key=lambda q: q.margin)
        return 1, worst

    def record_pass(self, parts):
        self.checked += 1
        for part in parts:
            if self.min_margin is None or part.margin < self.min_margin:
                self.min_margin = part.margin
            if self.max_budget is None or part.budget > self.max_budget:
                self.max_budget = part.budget

    def record_violation(self, params, part):
        self.checked += 1
        if self.min_margin is None or part.margin < self.min_margin:
            self.min_margin = part.margin
        if self.max_budget is None or part.budget > self.max_budget:
            self.max_budget = part.budget
        self.violations.append(
            Violation(params, part.lhs, part.rhs, part.margin)
        )

    def report(self, spec, grid_p, grid_x, seed):
        if self.checked == 0:
            status = "vacuous"
        elif spec.policy == "report":
            status = "reported"
        elif self.violations:
            status = "violated"
        else:
            status = "holds"
        return CertificateReport(
            claim_id=spec.id,
            status=status,
            points_checked=self.checked,
            skipped=self.skipped,
            min_margin=self.min_margin,
            max_error_budget=self.max_budget,
            margin_factor=self.mf,
            grid_p=grid_p,
            grid_x=grid_x,
            seed=seed,
            violations=self.violations,
        )


def _run_gate(cache, fn, p, xarg, value, err):
    key = (fn.value, p, xarg)
    hit = cache.get(key)
    if hit is None:
        try:
            if fn is FnId.ARCSIN and p <= 1.0:
                # the public surface restricts arcsin_p to p > 1, but the
                # defining integral is proper for x <= 0.999 at any p > 0;
                # the p > 0 claims still deserve a dual-route gate there
                from gentrig._backend import quad_defining

                qv, qe, _, ok = quad_defining(0, p, xarg)
                if not ok:
                    raise ToleranceNotMet("gate quadrature budget exhausted")
                cache[key] = (qv, qe)
            else:
                r = integrate_defining(fn, p, xarg)
                cache[key] = (r.value, r.abs_err)
        except (ToleranceNotMet, DomainError):
            cache[key] = (None, None)
            return False
        hit = cache[key]
    qv, qe = hit
    if qv is None:
        return False
    return abs(value - qv) <= max(GATE_FLOOR, 20.0 * (err + qe))


# ---------------------------------------------------------------------------
# certification drivers


def certify_inequality(claim_id, grid=None, seed=DEFAULT_SEED,
                       sample_count=DEFAULT_SAMPLES):
    """Certify one registered claim on a grid; see the module doc.

    Pointwise and pair claims traverse the grid (p outer, x inner, then y);
    sampler claims delegate to certify_grunbaum, monotone ones to
    certify_monotonicity, so ``certify_inequality`` accepts every
    registered claim id.
    """
    spec = get_claim(claim_id)
    if spec.kind == "grunbaum":
        return certify_grunbaum(claim_id, sample_count, seed,
                                p_override=grid.p_values if grid else None,
                                margin_factor=grid.margin_factor if grid
                                else DEFAULT_MARGIN_FACTOR)
    if spec.kind == "monotone":
        return certify_monotonicity(claim_id, grid)
    if grid is not None:
        p_vals = _clamp_p(spec, grid.p_values)
        x_vals = [x for x in grid.x_values if 0.0 < x <= 0.999]
        mf = grid.margin_factor
    else:
        p_vals, x_vals, mf = grid_for(spec)
    tally = _Tally(mf)
    gate_cache = {}
    if spec.kind == "pointwise":
        fn_eval = _POINTWISE[claim_id]
        for p in p_vals:
            for x in x_vals:
                try:
                    parts, gates = fn_eval(p, x)
                except (ConvergenceError, ToleranceNotMet, DomainError):
                    tally.note_skip()
                    continue
                _score_point(tally, {"p": p, "x": x}, parts, gates, gate_cache)
    else:
        fn_eval = _PAIR[claim_id]
        for p in p_vals:
            cache = {}
            for x in x_vals:
                for y in x_vals:
                    try:
                        parts, gates = fn_eval(cache, p, x, y)
                    except (ConvergenceError, ToleranceNotMet, DomainError):
                        tally.note_skip()
                        continue
                    if parts is None:
                        continue  # excluded degenerate pair (diagonal)
                    gates = [
                        _Gate(fn, p, arg, val[0], val[1])
                        for fn, p_, arg, val in gates
                    ]
                    _score_point(
                        tally, {"p": p, "x": x, "y": y}, parts, gates, gate_cache
                    )
    return tally.report(spec, p_vals, x_vals, seed)


def _score_point(tally, params, parts, gates, gate_cache):
    outcome, part = tally.classify(parts)
    if outcome == 0:
        tally.note_skip()
        return
    if isinstance(gates, bool):
        gate_ok = gates
    else:
        gate_ok = all(
            _run_gate(gate_cache, g.fn, g.p, g.x, g.value, g.err) for g in gates
        )
    if not gate_ok:
        tally.note_skip()
        return
    if outcome < 0:
        tally.record_violation(params, part)
    else:
        tally.record_pass(parts)


def certify_monotonicity(target_id, grid=None):
    """Certify a registered monotonicity target along x, per p.

    Consecutive differences must have the claimed sign beyond the error
    budget; for the range-bracketed target the values must stay inside the
    bracket widened by margin_factor times the local budget.
    """
    spec = get_claim(target_id)
    if spec.kind != "monotone":
        raise UnknownClaim(f"{target_id!r} is not a monotonicity target")
    value_fn, direction, range_fn = _MONOTONE[target_id]
    if grid is not None:
        p_vals = _clamp_p(spec, grid.p_values)
        x_vals = [x for x in grid.x_values if 0.0 < x <= 0.999]
        mf = grid.margin_factor
    else:
        p_vals, x_vals, mf = grid_for(spec)
    tally = _Tally(mf)
    for p in p_vals:
        vals = []
        for x in x_vals:
            try:
                vals.append(value_fn(p, x))
            except (ConvergenceError, ToleranceNotMet, DomainError):
                vals.append(None)
                tally.note_skip()
        for i in range(len(x_vals) - 1):
            a, b = vals[i], vals[i + 1]
            if a is None or b is None:
                continue
            if direction == "increasing":
                m = vsub(b, a)
            else:
                m = vsub(a, b)
            part = _Part("consecutive_difference", a[0], b[0], m[0], m[1])
            params = {"p": p, "x": x_vals[i], "x_next": x_vals[i + 1]}
            outcome, worst = tally.classify([part])
            if outcome == 0:
                tally.note_skip()
            elif outcome < 0:
                tally.record_violation(params, worst)
            else:
                tally.record_pass([part])
        if range_fn is not None:
            lo, hi = range_fn(p)
            for x, a in zip(x_vals, vals):
                if a is None:
                    continue
                widen = mf * a[1] + mf * 4e-16 * max(abs(lo), abs(hi))
                m_lo = a[0] - (lo - widen)
                m_hi = (hi + widen) - a[0]
                m = min(m_lo, m_hi)
                part = _Part("range_bracket", lo, hi, m, a[1])
                if m < 0.0:
                    tally.record_violation({"p": p, "x": x}, part)
                else:
                    tally.record_pass([part])
    return tally.report(spec, p_vals, x_vals, None)


def certify_grunbaum(claim_id, sample_count=DEFAULT_SAMPLES, seed=DEFAULT_SEED,
                     p_override=None, margin_factor=DEFAULT_MARGIN_FACTOR):
    """Certify a Pythagorean-constraint sampler claim.

    Draws (x, y) uniformly, rejecting pairs whose squares leave the
    certification window [1e-3, 0.999]; evaluates the three reduced values
    at x^2, y^2 and z^2 = x^2 + y^2.  The (x, y) stream depends only on
    the seed, so certificates are reproducible.
    """
    spec = get_claim(claim_id)
    if spec.kind != "grunbaum":
        raise UnknownClaim(f"{claim_id!r} is not a sampler claim")
    fn, direction = _GRUNBAUM[claim_id]
    if p_override is not None:
        p_vals = _clamp_p(spec, p_override)
    else:
        if spec.grid_scale == "lin":
            p_vals = linspace(spec.grid_lo, spec.grid_hi, 8)
        else:
            p_vals = logspace(spec.grid_lo, spec.grid_hi, 8)
        p_vals = _clamp_p(spec, p_vals)
    if sample_count < 1:
        raise DomainError("sample_count must be >= 1")
    rng = random.Random(seed)
    pairs = []
    for _ in range(sample_count):
        x = rng.random()
        y = rng.random()
        tx = x * x
        ty = y * y
        tz = tx + ty
        if tx < 1e-3 or ty < 1e-3 or tz > 0.999:
            continue
        pairs.append((x, y, tx, ty, tz))
    tally = _Tally(margin_factor)
    gate_cache = {}
    for p in p_vals:
        for i, (x, y, tx, ty, tz) in enumerate(pairs):
            try:
                vz, _ = _reduced_v(fn, p, tz)
                vx, _ = _reduced_v(fn, p, tx)
                vy, _ = _reduced_v(fn, p, ty)
            except (ConvergenceError, ToleranceNotMet, DomainError):
                tally.note_skip()
                continue
            if direction == "geq":
                m = vsub(vz, vadd(vx, vy))
            else:
                m = vsub(vadd(vx, vy), vz)
            part = _Part("pythagorean_margin", 0.0, m[0], m[0], m[1])
            params = {"p": p, "x": x, "y": y, "z": math.sqrt(tz)}
            outcome, worst = tally.classify([part])
            if outcome == 0:
                tally.note_skip()
                continue
            if outcome < 0 or i % _GATE_STRIDE == 0:
                v = tz * (1.0 + vz[0])
                gate_ok = _run_gate(
                    gate_cache, fn, p, tz, v, tz * vz[1] + _EPS * abs(v)
                )
                if not gate_ok:
                    tally.note_skip()
                    continue
            if outcome < 0:
                tally.record_violation(params, worst)
            else:
                tally.record_pass([part])
    return tally.report(spec, p_vals, [], seed)


def certify_all(p_override=None, x_override=None,
                margin_factor=DEFAULT_MARGIN_FACTOR, seed=DEFAULT_SEED,
                sample_count=DEFAULT_SAMPLES):
    """Run every registered claim; returns reports in registry order."""
    reports = []
    for claim_id in _CLAIM_ORDER:
        spec = _CLAIMS[claim_id]
        if spec.kind == "grunbaum":
            reports.append(
                certify_grunbaum(claim_id, sample_count, seed,
                                 p_override=p_override,
                                 margin_factor=margin_factor)
            )
            continue
        p_vals = _clamp_p(spec, p_override) if p_override is not None \
            else default_p_values(spec)
        if spec.kind == "pair":
            x_vals = x_override if x_override is not None \
                else linspace(1e-3, 0.999, DEFAULT_PAIR_COUNT)
        else:
            x_vals = x_override if x_override is not None else default_x_values()
        x_vals = [x for x in x_vals if 0.0 < x <= 0.999]
        if not p_vals:
            reports.append(CertificateReport(
                claim_id=claim_id, status="vacuous", points_checked=0,
                skipped=0, min_margin=None, max_error_budget=None,
                margin_factor=margin_factor, grid_p=[], grid_x=x_vals,
                seed=seed if spec.kind == "grunbaum" else None,
                violations=[]))
            continue
        grid = GridSpec(p_vals, x_vals, margin_factor)
        if spec.kind == "monotone":
            reports.append(certify_monotonicity(claim_id, grid))
        else:
            reports.append(certify_inequality(claim_id, grid, seed=seed,
                                              sample_count=sample_count))
    return reports


def exit_status(reports):
    """0 when every assert-policy claim holds or is vacuous, else 1."""
    for rep in reports:
        spec = _CLAIMS.get(rep.claim_id)
        if spec is not None and spec.policy == "assert" and rep.status == "violated":
            return 1
    return 0


# ---------------------------------------------------------------------------
# bound comparison


_FN_OF = {
    "arcsin_p": FnId.ARCSIN,
    "arccos_p": FnId.ARCCOS,
    "arctan_p": FnId.ARCTAN,
    "arcsinh_p": FnId.ARCSINH,
    "arctanh_p": FnId.ARCTANH,
}


def compare_bounds(target, bound_ids, p_values, x_values):
    """Dominance table of same-side bounds for one target.

    Returns (rows, summary): rows are (target, side, p, x, best_bound_id,
    gap) with gap = winner - target for upper bounds and target - winner
    for lower bounds; summary maps p -> {bound_id: fraction of the x grid
    where that bound is the tightest}.
    """
    if not bound_ids:
        raise MixedTargets("need at least one bound id")
    specs = [get_bound(b) for b in bound_ids]
    sides = {s.side for s in specs}
    targets = {s.target for s in specs}
    if len(sides) != 1 or targets != {target}:
        raise MixedTargets(
            f"bounds {bound_ids!r} do not all bound {target!r} on one side"
        )
    side = sides.pop()
    p_lo = max(s.p_min for s in specs)
    p_hi = min(s.p_max for s in specs)
    from gentrig.bounds import bound_value

    rows = []
    summary = {}
    for p in p_values:
        if not (p_lo < p < p_hi):
            continue
        wins = {b: 0 for b in bound_ids}
        n = 0
        for x in x_values:
            if target in ("sum3f2", "diff3f2"):
                tv = clausen_target_value(target, p, x).value
            else:
                tv = eval_fn(_FN_OF[target], p, x).value
            values = [(bound_value(b, p, x), b) for b in bound_ids]
            if side == "upper":
                best_v, best_b = min(values)
                gap = best_v - tv
            else:
                best_v, best_b = max(values)
                gap = tv - best_v
            rows.append((target, side, p, x, best_b, gap))
            wins[best_b] += 1
            n += 1
        if n:
            summary[p] = {b: wins[b] / n for b in bound_ids}
    return rows, summary


# ---------------------------------------------------------------------------
# identity self-test suite (used by the CLI)


def identity_suite(tol=1e-9):
    """Run the cross-route and structural identity checks.

    Returns a list of (name, max_residual, ok) triples; ok means the
    residual stays at or below ``tol``.
    """
    from gentrig.invtrig import compose_asinh_as_atanh, half_param_combine

    results = []

    def add(name, residual):
        results.append((name, residual, residual <= tol))

    fns = [FnId.ARCSIN, FnId.ARCCOS, FnId.ARCTAN, FnId.ARCSINH, FnId.ARCTANH]
    worst = 0.0
    xs = linspace(0.01, 0.99, 20)
    for fn in fns:
        for p in (0.5, 1.0, 1.5, 2.0, 3.0, 10.0):
            if fn in (FnId.ARCSIN, FnId.ARCCOS) and p <= 1.0:
                continue
            for x in xs:
                try:
                    s = eval_fn(fn, p, x, "series")
                except (ConvergenceError, DomainError):
                    continue
                q = eval_fn(fn, p, x, "quadrature")
                gap = abs(s.value - q.value)
                allow = max(0.0, gap - 20.0 * (s.abs_err + q.abs_err))
                worst = max(worst, allow)
    add("route_agreement", worst)

    worst = 0.0
    for p in (0.5, 1.0, 2.0, 5.0, 10.0):
        for x in linspace(0.01, 0.99, 20):
            lhs, a, b = half_param_combine(p, x)
            worst = max(worst, abs(lhs - a - b))
    add("half_parameter_split", worst)

    worst = 0.0
    for p in (0.5, 1.0, 2.0, 5.0):
        for x in linspace(0.01, 0.99, 20):
            u, v = compose_asinh_as_atanh(p, x)
            worst = max(worst, abs(u - v))
    add("asinh_as_atanh_composition", worst)

    worst_s = 0.0
    worst_d = 0.0
    for p in (1.5, 2.0, 3.0, 5.0):
        for x in linspace(0.01, 0.9, 20):
            f_sum = clausen_target_value("sum3f2", p, x).value
            f_diff = clausen_target_value("diff3f2", p, x).value
            asin_v = eval_fn(FnId.ARCSIN, p, x).value
            asinh_v = eval_fn(FnId.ARCSINH, p, x).value
            worst_s = max(worst_s, abs(2.0 * x * f_sum - (asin_v + asinh_v)))
            lhs = 2.0 * x ** (p + 1.0) / (p * (1.0 + p)) * f_diff
            worst_d = max(worst_d, abs(lhs - (asin_v - asinh_v)))
    add("clausen_sum_identity", worst_s)
    add("clausen_difference_identity", worst_d)

    worst = 0.0
    for p in (1.05, 1.5, 2.0, math.e, 4.0, 10.0, 100.0):
        vals = [pi_p(p, r) for r in ("sine", "beta", "limit")]
        ref = vals[0]
        for v in vals[1:]:
            worst = max(worst, abs(v - ref) / ref)
    add("pi_p_route_agreement_rel", worst)

    worst = 0.0
    for p in (0.5, 1.0, 2.0, 3.0, 7.0):
        worst = max(worst, abs(b_p(p) - b_p(p, "hyp")))
        worst = max(worst, abs(b_p(p) - eval_fn(FnId.ARCTAN, p, 1.0).value))
        worst = max(worst, abs(c_p(p) - eval_fn(FnId.ARCSINH, p, 1.0).value))
    add("endpoint_constants", worst)

    return results
