"""The five generalized inverse functions with dual evaluation routes.

Series route: the hypergeometric representations
    arcsin_p(x)  = x F(1/p, 1/p; 1+1/p; x^p)
    arctan_p(x)  = x F(1, 1/p; 1+1/p; -x^p)
    arcsinh_p(x) = x F(1/p, 1/p; 1+1/p; -x^p)
    arctanh_p(x) = x F(1, 1/p; 1+1/p; x^p)
    arccos_p(x)  = arcsin_p((1 - x^p)^(1/p))
with the negative arguments evaluated through their equivalent
positive-argument forms (the second representations of the same family).

Quadrature route: adaptive integration of the defining integrals.
"""

import math
from dataclasses import dataclass
from enum import Enum

from gentrig._backend import (
    QUAD_MAX_PANELS,
    SERIES_MAX_TERMS,
    quad_defining,
    series_2f1_tail,
)
from gentrig.errors import ConvergenceError, DomainError, ToleranceNotMet
from gentrig.hypergeom import EvalResult, Hyp2F1Params, hyp2f1

EDGE = 1.0 - 1e-9

_QUAD_KIND = {"arcsin_p": 0, "arctan_p": 1, "arcsinh_p": 2, "arctanh_p": 3}


class FnId(Enum):
    """The five generalized inverse functions."""

    ARCSIN = "arcsin_p"
    ARCCOS = "arccos_p"
    ARCTAN = "arctan_p"
    ARCSINH = "arcsinh_p"
    ARCTANH = "arctanh_p"


# functions whose defining integrand is singular at t = 1
_SINGULAR = (FnId.ARCSIN, FnId.ARCTANH)
# functions whose integrand is bounded on [0, 1], so x = 1 is admissible
_CLOSED_AT_ONE = (FnId.ARCTAN, FnId.ARCSINH)


@dataclass(frozen=True)
class PtrigInput:
    """A point (p, x) together with the function to evaluate."""

    fn: FnId
    p: float
    x: float

    def __post_init__(self):
        validate_domain(self.fn, self.p, self.x)


def validate_domain(fn, p, x):
    if not isinstance(fn, FnId):
        raise DomainError(f"fn must be an FnId, got {fn!r}")
    if not (p > 0.0) or math.isinf(p) or math.isnan(p):
        raise DomainError(f"p must be finite and positive, got {p!r}")
    if fn in (FnId.ARCSIN, FnId.ARCCOS) and p <= 1.0:
        raise DomainError(f"{fn.value} requires p > 1, got p={p!r}")
    if math.isnan(x):
        raise DomainError("x must not be NaN")
    if fn in _CLOSED_AT_ONE:
        if not (0.0 < x <= 1.0):
            raise DomainError(f"{fn.value} requires x in (0, 1], got {x!r}")
    elif fn in _SINGULAR:
        if not (0.0 < x <= EDGE):
            raise DomainError(
                f"{fn.value} requires x in (0, 1) at most {EDGE!r}, got {x!r}"
            )
    else:  # arccos
        if not (0.0 < x < 1.0):
            raise DomainError(f"{fn.value} requires x in (0, 1), got {x!r}")


def _pow_p(x, p):
    # x^p with an error estimate; x > 0
    v = math.exp(p * (math.log1p(x - 1.0) if x > 0.5 else math.log(x)))
    return v


def _series_terms_needed(z):
    # crude but monotone estimate of the term count the stopping rule needs
    if z <= 0.0:
        return 1
    if z >= 1.0:
        return SERIES_MAX_TERMS + 1
    return int(-36.85 / math.log(z)) + 1


def _series(fn, p, x):
    q = 1.0 / p
    e = _pow_p(x, p)
    if fn is FnId.ARCCOS:
        inner = math.exp(math.log1p(-e) / p)
        if inner > EDGE:
            raise DomainError(
                f"arccos_p series route needs (1-x^p)^(1/p) <= {EDGE!r}; "
                f"got {inner!r} (x too small for this p)"
            )
        r = _series(FnId.ARCSIN, p, inner)
        return EvalResult(r.value, r.abs_err + 4e-16 * abs(r.value), r.method, r.work)
    if fn is FnId.ARCSIN:
        if e >= 1.0 or _series_terms_needed(e) > SERIES_MAX_TERMS:
            raise ConvergenceError(f"series for arcsin_p at x={x!r} would hit the cap")
        r = hyp2f1(Hyp2F1Params(q, q, 1.0 + q), e)
    elif fn is FnId.ARCTANH:
        if e >= 1.0 or _series_terms_needed(e) > SERIES_MAX_TERMS:
            raise ConvergenceError(f"series for arctanh_p at x={x!r} would hit the cap")
        r = hyp2f1(Hyp2F1Params(1.0, q, 1.0 + q), e)
    elif fn is FnId.ARCTAN:
        r = hyp2f1(Hyp2F1Params(q, 1.0, 1.0 + q), -e)
    else:  # ARCSINH
        r = hyp2f1(Hyp2F1Params(q, q, 1.0 + q), -e)
    v = x * r.value
    return EvalResult(v, x * r.abs_err + 4e-16 * abs(v), r.method, r.work)


def integrate_defining(fn, p, x, tol=1e-12):
    """Adaptive quadrature of the defining integral; see the module doc.

    For arccos the integral runs to the substituted upper limit.  Raises
    ToleranceNotMet when the panel budget cannot reach the target.
    """
    validate_domain(fn, p, x)
    if fn is FnId.ARCCOS:
        e = _pow_p(x, p)
        upper = min(1.0, math.exp(math.log1p(-e) / p))
        value, err, evals, ok = quad_defining(0, p, upper, tol, QUAD_MAX_PANELS)
        # sensitivity of the integral to the rounding of the upper limit
        err += 1.2e-16 * upper * math.exp(-math.log(e) / p)
    else:
        value, err, evals, ok = quad_defining(
            _QUAD_KIND[fn.value], p, x, tol, QUAD_MAX_PANELS
        )
    if not ok:
        raise ToleranceNotMet(
            f"quadrature for {fn.value}(p={p!r}, x={x!r}) stopped at "
            f"abs_err={err!r} (target {tol!r})"
        )
    if not math.isfinite(value):
        raise ToleranceNotMet(f"quadrature for {fn.value} produced {value!r}")
    return EvalResult(value, err, "quadrature", evals)


def evaluate(inp, method="auto"):
    """Evaluate a generalized inverse function at a PtrigInput.

    ``method``: "series", "quadrature", or "auto" (series first, falling
    back to quadrature when the series cannot converge within the cap).
    """
    fn, p, x = inp.fn, inp.p, inp.x
    if method == "series":
        return _series(fn, p, x)
    if method == "quadrature":
        return integrate_defining(fn, p, x)
    if method == "auto":
        try:
            return _series(fn, p, x)
        except (ConvergenceError, DomainError):
            return integrate_defining(fn, p, x)
    raise DomainError(f"unknown method {method!r}")


def eval_fn(fn, p, x, method="auto"):
    """Convenience wrapper building the PtrigInput."""
    return evaluate(PtrigInput(fn, p, x), method)


def reduced(fn, p, x):
    """fn_p(x)/x - 1 with full relative accuracy, plus error and route.

    All five functions behave like x near 0; inequality margins formed
    from these reduced values survive where the plain values would agree
    to machine precision.  Returns (t, abs_err, route).
    """
    validate_domain(fn, p, x)
    q = 1.0 / p
    e = _pow_p(x, p)
    e_relerr = 4e-16 * (1.0 + abs(p * math.log(x)))
    if fn is FnId.ARCSIN or fn is FnId.ARCTANH:
        if e < 1.0 and _series_terms_needed(e) <= SERIES_MAX_TERMS:
            a = q if fn is FnId.ARCSIN else 1.0
            s, err, _, ok = series_2f1_tail(a, q, 1.0 + q, e)
            if ok:
                # d/de of the tail is bounded by |s|/e * (1+q)-ish; fold the
                # argument rounding into the estimate
                return (s, err + 2.0 * abs(s) * e_relerr + 1e-300, "series")
        r = integrate_defining(fn, p, x)
        t = r.value / x - 1.0
        return (t, r.abs_err / x + 4e-16 * (1.0 + abs(t)), "quadrature")
    if fn is FnId.ARCTAN or fn is FnId.ARCSINH:
        w = e / (1.0 + e)
        le = math.log1p(e)
        a = q if fn is FnId.ARCTAN else 1.0
        s, err, _, ok = series_2f1_tail(a, q, 1.0 + q, w)
        if not ok:
            raise ConvergenceError(f"reduced series for {fn.value} hit the cap")
        ls = math.log1p(s)
        g = -q * le + ls
        le_err = 4e-16 * le + e * e_relerr / (1.0 + e)
        g_err = err / (1.0 + s) + q * le_err + 4e-16 * (q * le + abs(ls))
        t = math.expm1(g)
        terr = (1.0 + abs(t)) * (g_err + 4e-16 * abs(g)) + 1e-300
        return (t, terr, "series")
    raise DomainError(f"reduced form not defined for {fn.value}")


def half_param_combine(p, x):
    """Triple (2*arctanh_{2p}(x), arctanh_p(x), arctan_p(x)).

    The first entry equals the sum of the other two; the residual is a
    library self-test quantity.
    """
    if not (0.0 < x < 1.0):
        raise DomainError(f"half_param_combine requires x in (0,1), got {x!r}")
    lhs = 2.0 * eval_fn(FnId.ARCTANH, 2.0 * p, x).value
    return (lhs, eval_fn(FnId.ARCTANH, p, x).value, eval_fn(FnId.ARCTAN, p, x).value)


def compose_asinh_as_atanh(p, x):
    """Pair (arcsinh_p(x), arctanh_p(y)) with y = (x^p/(1+x^p))^(1/p).

    The two entries agree identically; the residual is a self-test
    quantity.
    """
    if not (0.0 < x < 1.0):
        raise DomainError(f"compose_asinh_as_atanh requires x in (0,1), got {x!r}")
    e = _pow_p(x, p)
    y = x * math.exp(-math.log1p(e) / p)
    return (eval_fn(FnId.ARCSINH, p, x).value, eval_fn(FnId.ARCTANH, p, y).value)
