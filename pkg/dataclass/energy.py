"""
Dataclasses for sphere placement and the resulting Casimir-Polder energy.
"""

from dataclasses import dataclass
from typing import Optional

from .profile import HeightProfile


@dataclass(frozen=True)
class GeometryConfig:
    """
    Dataclass for a sphere above a corrugated surface, in physical units.

    The sphere sits at x = 0. `mean_height` is its height above the profile's
    zero line and `distance` its height above the surface point beneath it,
    H = Hbar - h(0). The lateral position is the profile's phase.
    """
    profile: HeightProfile
    mean_height: float
    distance: float
    rescale_by: str = 'normal'

    @property
    def phase(self) -> float:
        """
        Returns the lateral phase of the profile.
        """
        return self.profile.phase


@dataclass(frozen=True)
class RescaledGeometry:
    """
    Dataclass for a dimensionless geometry with the sphere at (0, 1).

    `scale` is the length the profile was divided by. Multiplying an alpha
    computed in these units by `alpha_factor` expresses it in units of H.
    """
    profile: HeightProfile
    scale: float
    alpha_factor: float


@dataclass(frozen=True)
class EnergyResult:
    """
    Dataclass for the dimensionless Casimir-Polder energy.

    The energy is E = e_scaled * hbar c r / H^2; hbar c and r are never
    multiplied in.
    """
    alpha0: float
    distance: float
    radius: float
    e_scaled: float
    ratio: Optional[float] = None

    @property
    def energy(self) -> float:
        """
        Returns E in units of hbar c, with r and H in the same length unit.
        Zero when no radius is given.
        """
        return self.e_scaled * self.radius / self.distance ** 2

    @property
    def energy_label(self) -> str:
        """
        Returns the energy with its units spelled out.
        """
        if self.radius > 0:
            return f'{self.energy:.7g} hbar c'
        return f'{self.e_scaled:.7g} hbar c r / H^2'
