"""Shared exception types.

Invalid arguments raise plain ValueError.  The types below exist so that
callers (in particular the command-line driver) can tell an exhausted
enumeration budget or a failed exactness check apart from bad input.
"""


class ResourceLimitError(RuntimeError):
    """An enumeration or expansion would exceed its configured budget."""


class NonIntegralInterpolationError(ArithmeticError):
    """Exact rational interpolation produced a non-integer coefficient.

    The counting polynomials reconstructed in this package are integer
    valued, so a fractional coefficient means either too few sample points
    for the true degree or a broken counting routine, never valid data.
    """


class PresentationError(ValueError):
    """A serialized algebra presentation is structurally malformed."""
