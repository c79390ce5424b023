"""
Custom exceptions for Ondula
"""

from typing import Optional


class OndulaError(Exception):
    """
    Base class for all errors raised by Ondula.
    Carries the process exit code used by the command line.
    """
    exit_code = 3

    def __init__(self, message: str):
        self.message = message
        super().__init__(self.message)


class ConfigError(OndulaError):
    """
    Raised when the configuration is invalid or incomplete.
    """
    exit_code = 2


class AcceptanceFailure(OndulaError):
    """
    Raised when a result falls outside its acceptance threshold.
    """
    exit_code = 1


class NumericalFailure(OndulaError):
    """
    Base class for failures inside the numerical pipeline.
    """


class DomainError(NumericalFailure):
    """
    Raised when a function is evaluated outside of its domain.
    """


class GeometryError(NumericalFailure):
    """
    Raised when the sphere touches or penetrates the surface.
    """


class ConditioningError(NumericalFailure):
    """
    Raised when the discretized Green's function matrix is numerically singular.
    """
    def __init__(self, q: float, epsilon: float, nx: int, pivot: Optional[float] = None):
        self.q = q
        self.epsilon = epsilon
        self.nx = nx
        message = f'Singular kernel matrix at q={q:.6g}, eps={epsilon:.6g}, Nx={nx}'
        if pivot is not None:
            message += f' (smallest pivot {pivot:.3e})'
        super().__init__(message)


class NumericalError(NumericalFailure):
    """
    Raised when a partial sum turns NaN or infinite.
    """
    def __init__(self, q: float, nx: int, epsilon: float, reason: str = 'non-finite value'):
        self.q = q
        self.nx = nx
        self.epsilon = epsilon
        super().__init__(f'{reason} at q={q:.6g}, Nx={nx}, eps={epsilon:.6g}')


class DegenerateInputError(NumericalFailure):
    """
    Raised when a two-point extrapolation receives coincident abscissae.
    """


class FitError(OndulaError):
    """
    Raised when a fit window holds too few points.
    """


class ProtocolError(OndulaError):
    """
    Raised when results computed with different numerical plans are combined.
    """
