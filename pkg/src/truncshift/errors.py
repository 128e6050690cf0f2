"""Exception types shared across the package.

The class names double as the machine-readable error names printed by the
command-line driver, so they are kept short and stable.
"""


class TruncshiftError(Exception):
    """Base class for every error raised by this package."""


class NotHermitian(TruncshiftError):
    """Matrix deviates from its conjugate transpose beyond tolerance."""


class NoConvergence(TruncshiftError):
    """An iterative or adaptive routine failed to reach its tolerance."""


class DomainError(TruncshiftError):
    """Argument lies outside the mathematical domain of the routine."""


class BracketFailure(TruncshiftError):
    """Expected sign change is missing from a root bracket."""


class PoleHit(TruncshiftError):
    """Evaluation point coincides with a pole of a Blaschke factor."""


class InvalidZero(TruncshiftError):
    """Blaschke zero lies outside the open unit disc (or its guard band)."""


class PoleOnTorus(TruncshiftError):
    """Denominator vanishes at a unit-circle sample point."""


class NotCoprime(TruncshiftError):
    """Numerator and denominator share a root."""


class ZeroOnTorus(TruncshiftError):
    """A root lies on, or numerically too close to, the unit circle."""


class PairingViolation(TruncshiftError):
    """Nonzero roots fail the reflection pairing across the unit circle."""


class RetryExhausted(TruncshiftError):
    """Random instance generation exceeded its redraw budget."""
