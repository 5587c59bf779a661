"""Gauss and Clausen hypergeometric evaluation on the real interval.

The series engines live in the kernel backend; this module owns parameter
validation, the argument-reduction (Pfaff) transformation, error
estimates, and the EvalResult packaging used across the package.
"""

import math
from dataclasses import dataclass

from gentrig._backend import SERIES_MAX_TERMS, series_2f1_tail, series_3f2_tail
from gentrig.errors import ConvergenceError, DomainError

_PARAM_TOL = 1e-12


def _near_nonpositive_int(v):
    r = round(v)
    return r <= 0 and abs(v - r) <= _PARAM_TOL


@dataclass(frozen=True)
class Hyp2F1Params:
    """Parameter triple (a, b; c) of a Gauss hypergeometric function."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("a", "b", "c"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise DomainError(f"parameter {name} must be finite, got {v!r}")
        if _near_nonpositive_int(self.c):
            raise DomainError(f"lower parameter c={self.c!r} is a non-positive integer")


@dataclass(frozen=True)
class Hyp3F2Params:
    """Parameter tuple (a1, a2, a3; b1, b2) of a Clausen function."""

    a1: float
    a2: float
    a3: float
    b1: float
    b2: float

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "b1", "b2"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise DomainError(f"parameter {name} must be finite, got {v!r}")
        for name in ("b1", "b2"):
            if _near_nonpositive_int(getattr(self, name)):
                raise DomainError(
                    f"lower parameter {name}={getattr(self, name)!r} is a "
                    "non-positive integer"
                )


@dataclass(frozen=True)
class EvalResult:
    """A computed value with its error estimate and provenance.

    ``method`` is one of "series", "series_pfaff", "quadrature",
    "closed_form"; ``work`` counts series terms or integrand evaluations.
    """

    value: float
    abs_err: float
    method: str
    work: int

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise DomainError(f"non-finite evaluation result {self.value!r}")


def _closed_form_exponent(params):
    # F(a, b; b; z) = (1-z)^(-a); detect either upper parameter matching c
    if abs(params.c - params.b) <= _PARAM_TOL:
        return params.a
    if abs(params.c - params.a) <= _PARAM_TOL:
        return params.b
    return None


def transform_pfaff(params, z):
    """Argument-reduction transformation for the Gauss function.

    Returns (new_params, new_argument, prefactor) with
    F(a,b;c;z) = prefactor * F(a, c-b; c; z/(z-1)).  For z in [0,1) the
    transformed argument is non-positive; the caller routes it through the
    signed-series evaluator.
    """
    if not (0.0 <= z < 1.0):
        raise DomainError(f"transform_pfaff requires z in [0,1), got {z!r}")
    w = z / (z - 1.0) if z != 0.0 else 0.0
    prefactor = (1.0 - z) ** (-params.a)
    return (Hyp2F1Params(params.a, params.c - params.b, params.c), w, prefactor)


def _series_eval(params, z, method):
    tail, err, n, ok = series_2f1_tail(params.a, params.b, params.c, z)
    if not ok:
        raise ConvergenceError(
            f"2F1 series hit the {SERIES_MAX_TERMS}-term cap at z={z!r}"
        )
    return EvalResult(1.0 + tail, err + 1e-16, method, n)


def gauss_2f1(params, z):
    """Gauss hypergeometric function for z in [0, 1).

    Direct summation; the Pfaff transformation is applied only when it
    shrinks the argument modulus (never the case on [0,1), so the check is
    inert here) and closed forms are used when an upper parameter equals c.
    """
    if not (0.0 <= z < 1.0):
        raise DomainError(f"gauss_2f1 requires z in [0,1), got {z!r}")
    expo = _closed_form_exponent(params)
    if expo is not None:
        v = (1.0 - z) ** (-expo)
        return EvalResult(v, 4e-16 * abs(v), "closed_form", 1)
    _, w, _ = transform_pfaff(params, z)
    if abs(w) < z:
        return hyp2f1(params, z)
    return _series_eval(params, z, "series")


def series_2f1_signed(params, z):
    """Direct series summation of the Gauss function for |z| < 1.

    No transformations and no closed forms: this is the independent
    reference route the identity tests compare everything else against.
    """
    if not (-1.0 < z < 1.0):
        raise DomainError(f"series_2f1_signed requires |z| < 1, got {z!r}")
    return _series_eval(params, z, "series")


def hyp2f1(params, z):
    """Gauss function for z in [-1, 1): automatic route choice.

    Negative arguments go through the Pfaff transformation (which always
    shrinks their modulus, mapping [-1,0) into [0,1/2]); non-negative ones
    are summed directly.  Closed forms short-circuit both.
    """
    if not (-1.0 <= z < 1.0):
        raise DomainError(f"hyp2f1 requires z in [-1, 1), got {z!r}")
    expo = _closed_form_exponent(params)
    if expo is not None:
        v = (1.0 - z) ** (-expo)
        return EvalResult(v, 4e-16 * abs(v), "closed_form", 1)
    if z < 0.0:
        w = z / (z - 1.0)
        pref = (1.0 - z) ** (-params.a)
        inner = Hyp2F1Params(params.a, params.c - params.b, params.c)
        tail, err, n, ok = series_2f1_tail(inner.a, inner.b, inner.c, w)
        if not ok:
            raise ConvergenceError(
                f"2F1 series hit the {SERIES_MAX_TERMS}-term cap at w={w!r}"
            )
        v = pref * (1.0 + tail)
        return EvalResult(v, pref * err + 4e-16 * abs(v), "series_pfaff", n)
    return _series_eval(params, z, "series")


def clausen_3f2(params, z):
    """Clausen generalized hypergeometric function for z in [0, 1)."""
    if not (0.0 <= z < 1.0):
        raise DomainError(f"clausen_3f2 requires z in [0,1), got {z!r}")
    tail, err, n, ok = series_3f2_tail(
        params.a1, params.a2, params.a3, params.b1, params.b2, z
    )
    if not ok:
        raise ConvergenceError(
            f"3F2 series hit the {SERIES_MAX_TERMS}-term cap at z={z!r}"
        )
    return EvalResult(1.0 + tail, err + 1e-16, "series", n)
