"""Exception types shared across the package."""


class GentrigError(Exception):
    """Base class for all package errors."""


class DomainError(GentrigError, ValueError):
    """Argument outside the domain an operation supports."""


class ConvergenceError(GentrigError, ArithmeticError):
    """A series hit its term cap before the stopping rule triggered."""


class ToleranceNotMet(GentrigError, ArithmeticError):
    """The quadrature panel budget ran out before the target tolerance."""


class UnknownBound(GentrigError, LookupError):
    """Bound id not present in the registry."""


class UnknownClaim(GentrigError, LookupError):
    """Claim id not present in the registry."""


class MixedTargets(GentrigError, ValueError):
    """Bound ids passed to a comparison do not share target and side."""
