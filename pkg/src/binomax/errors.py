"""Exception types shared across the package.

Most are thin ValueError subclasses so callers can catch broadly or match
the precise failure; the two Runtime-ish ones (InternalRouteMismatch,
ToleranceNotMet) signal that a computation could not be trusted or
completed, not that the caller passed bad input.
"""


class ZeroFactor(ArithmeticError):
    """A product factor s + k hit zero (s at a pole)."""


class MixedJets(ValueError):
    """Jet operands disagree on expansion point or truncation order."""


class DivisionByZeroJet(ZeroDivisionError):
    """Jet divisor has a zero value coefficient."""


class OrderExceeded(ValueError):
    """Requested derivative order is beyond the jet's truncation order."""


class NonPositiveS(ValueError):
    """The transform variable s must be strictly positive."""


class NRequired(ValueError):
    """Operation is undefined for n = 0."""


class InternalRouteMismatch(ArithmeticError):
    """Two independent evaluation routes disagreed: implementation bug."""


class EmptySequence(ValueError):
    """A non-empty sequence is required."""


class UnknownIdentity(ValueError):
    """No evaluator pair is registered for the requested identity."""


class ToleranceNotMet(RuntimeError):
    """Quadrature refinement budget exhausted before reaching tolerance."""


class InsufficientSamples(ValueError):
    """Monte Carlo sample count below the minimum for the statistical gate."""


class TooFewSamples(ValueError):
    """Too few observations for a meaningful two-sample comparison."""
