"""
Dataclass for storing a uniaxial corrugation h(x).
"""

from dataclasses import dataclass
from typing import Optional, Tuple


@dataclass(frozen=True)
class HeightProfile:
    """
    Dataclass for storing a uniaxial corrugation h(x).

    Only the fields relevant to `kind` are used. All lengths share one unit,
    which is either physical (amplitude units) or rescaled by a distance.
    """
    kind: str

    # sine: h = A sin(omega x + phase) + offset
    amplitude: float = 0.0
    omega: float = 0.0
    phase: float = 0.0

    # sawtooth: period `wavelength`, corner half-width `smoothing`;
    # `phase` shifts the profile by phase * wavelength / (2 pi)
    wavelength: float = 0.0
    smoothing: float = 0.0

    # tabulated: strictly increasing abscissae and heights
    table_x: Optional[Tuple[float, ...]] = None
    table_h: Optional[Tuple[float, ...]] = None

    # Vertical shift applied to every kind
    offset: float = 0.0

    @property
    def is_planar(self) -> bool:
        """
        Returns whether the profile is a flat surface.
        """
        return self.kind == 'planar'
