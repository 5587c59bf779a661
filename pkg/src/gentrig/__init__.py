"""Generalized inverse trigonometric and hyperbolic functions.

Evaluation of arcsin_p, arccos_p, arctan_p, arcsinh_p and arctanh_p by two
independent routes (hypergeometric series, adaptive quadrature), the
closed-form bounds known for them, and a certification harness that
machine-checks the inequalities relating all of these on (p, x) grids.
"""

from gentrig._backend import BACKEND
from gentrig.errors import (
    ConvergenceError,
    DomainError,
    GentrigError,
    MixedTargets,
    ToleranceNotMet,
    UnknownBound,
    UnknownClaim,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "GentrigError",
    "DomainError",
    "ConvergenceError",
    "ToleranceNotMet",
    "UnknownBound",
    "UnknownClaim",
    "MixedTargets",
    "__version__",
]
