"""
Dataclasses for the momentum quadrature and the alpha samples it produces.
"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class MomentumQuadrature:
    """
    Dataclass for a Gauss-Legendre rule on [0, q_max].
    """
    nodes: np.ndarray
    weights: np.ndarray
    q_max: float

    @property
    def size(self) -> int:
        """
        Returns the number of momentum nodes.
        """
        return len(self.nodes)


@dataclass(frozen=True)
class AlphaSample:
    """
    Dataclass for one geometry factor alpha(Nx, eps) at finite lattice and regulator.
    """
    nx: int
    epsilon: float
    alpha: float

    @property
    def inv_nx(self) -> float:
        """
        Returns 1 / Nx, the abscissa of the continuum extrapolation.
        """
        return 1.0 / self.nx
