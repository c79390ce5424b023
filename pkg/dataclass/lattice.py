"""
Dataclasses for the lateral discretization.
"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ContinuumSchedule:
    """
    Dataclass for the coupled schedule L_x(N_x) = (a0x / 2) sqrt(N_x N0x),
    which sends the spacing to zero and the box to infinity with N_x alone.
    """
    a0x: float
    n0x: int

    def half_length(self, nx: int) -> float:
        """
        Returns L_x(N_x).
        """
        return 0.5 * self.a0x * float(np.sqrt(nx * self.n0x))

    def spacing(self, nx: int) -> float:
        """
        Returns a_x(N_x) = a0x sqrt(N0x / N_x).
        """
        return self.a0x * float(np.sqrt(self.n0x / nx))


@dataclass(frozen=True, eq=False)
class Lattice:
    """
    Dataclass for a cell-centred uniform grid on (-L_x, L_x).
    """
    nx: int
    half_length: float
    spacing: float
    nodes: np.ndarray
