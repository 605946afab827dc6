"""Exceptions raised by the resonator model."""

from typing import Optional


class ResonatorModelError(Exception):
    """Base exception for every model error."""
    pass


class DomainError(ResonatorModelError, ValueError):
    """An input lies outside the mathematical domain of a formula."""
    pass


class ValidityError(DomainError):
    """An input lies outside the physical validity range of a model."""
    pass


class RangeError(DomainError):
    """An index or target value lies outside the supported range."""

    def __init__(self, message: str, q_min: Optional[float] = None, q_max: Optional[float] = None):
        super().__init__(message)
        self.q_min = q_min
        self.q_max = q_max


class ConvergenceError(ResonatorModelError, ArithmeticError):
    """An iterative solver hit its iteration cap."""

    def __init__(self, message: str, iterations: int = 0):
        super().__init__(message)
        self.iterations = iterations


class ConfigurationError(ResonatorModelError, ValueError):
    """Bad configuration: unknown material, missing parameter, bad sampling setup."""
    pass


class FitError(ResonatorModelError):
    """The decay fit cannot be performed."""
    pass


class DataError(FitError):
    """The supplied data cannot be fitted at all."""
    pass
