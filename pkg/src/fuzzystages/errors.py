"""Exception hierarchy.

Everything the CLI maps to exit code 2 derives from :class:`ValidationError`;
everything that maps to exit code 3 derives from :class:`DegenerateError`.
"""


class FuzzyStagesError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(FuzzyStagesError, ValueError):
    """Input data breaks a structural invariant."""


class InvalidCountError(ValidationError):
    pass


class UnknownLabelError(ValidationError):
    pass


class ShapeError(ValidationError):
    """Distributions or datasets do not share a profile space."""


class RoleError(ValidationError):
    """A distribution was passed where a different role is required."""


class DomainError(ValidationError):
    pass


class DegenerateError(FuzzyStagesError, ArithmeticError):
    """A normalization would divide by zero (all weights are zero)."""
