"""Exception types shared across the library."""


class VirialError(Exception):
    """Base class for all library errors."""


class DomainError(VirialError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ConvergenceError(VirialError):
    """An iterative routine exhausted its budget before reaching tolerance.

    Carries the best estimate so callers can inspect how close it got.
    """

    def __init__(self, message, best_estimate=None, est_error=None):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.est_error = est_error


class BracketError(VirialError):
    """A root bracket does not enclose a sign change."""


class NormalizationError(DomainError):
    """A cluster-integral vector is not normalized to a unit leading entry."""


class DivergenceError(VirialError):
    """A map orbit exceeded the configured value bound."""

    def __init__(self, message, step, orbit=None):
        super().__init__(message)
        self.step = step
        self.orbit = orbit


class PrecisionOverflowError(VirialError):
    """Exact-rational state outgrew the configured bit budget.

    Exact orbits of a degree-4 polynomial map roughly quadruple their
    numerator/denominator bit length per step, so deep orbits become
    infeasible long before their values stop being informative.  The
    partial orbit computed so far is attached.
    """

    def __init__(self, message, step, orbit=None):
        super().__init__(message)
        self.step = step
        self.orbit = orbit
