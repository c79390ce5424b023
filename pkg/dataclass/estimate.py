"""
Dataclasses for the two-stage limit protocol.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from utils.exceptions import ConfigError

from .alpha import AlphaSample
from .config import NumericalPlan


@dataclass(frozen=True)
class ExtrapolationPlan:
    """
    Dataclass for one pair of lattice sizes and one pair of regulators.
    """
    nx_pair: Tuple[int, int]
    epsilon_pair: Tuple[float, float]

    def __post_init__(self):
        if self.nx_pair[0] == self.nx_pair[1]:
            raise ConfigError('Site counts of an extrapolation pair must differ')
        if self.epsilon_pair[0] == self.epsilon_pair[1]:
            raise ConfigError('Regulators of an extrapolation pair must differ')
        if min(self.epsilon_pair) <= 0:
            raise ConfigError('Regulators must be positive')

    @property
    def points(self) -> Tuple[Tuple[int, float], ...]:
        """
        Returns the four (Nx, eps) sample points, grouped by eps.
        """
        return tuple(
            (nx, epsilon)
            for epsilon in self.epsilon_pair
            for nx in self.nx_pair
        )


@dataclass(frozen=True)
class AlphaEstimate:
    """
    Dataclass for the regulator-free geometry factor alpha_0 and the samples
    it was extrapolated from.

    `spread` is |alpha_0 - verify_alpha0| when a verification pair was run,
    and 0 otherwise.
    """
    samples: Tuple[AlphaSample, ...]
    intercepts: Tuple[Tuple[float, float], Tuple[float, float]]
    alpha0: float
    alpha1: float
    spread: float
    plan: NumericalPlan
    verify_alpha0: Optional[float] = None
