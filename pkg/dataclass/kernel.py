"""
Dataclasses for the discretized Green's function problem.
"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class SurfaceGeometry:
    """
    Dataclass for the momentum-independent part of an assembly:
    pairwise surface distances, distances to the sphere and quadrature weights.
    """
    nodes: np.ndarray
    distances: np.ndarray       # N x N, geometric distance between surface points
    sphere_distances: np.ndarray  # N, distance from each surface point to the sphere
    weights: np.ndarray         # N, sqrt(g) a_x

    @property
    def nx(self) -> int:
        """
        Returns the number of lattice sites.
        """
        return len(self.nodes)


@dataclass(frozen=True, eq=False)
class KernelSystem:
    """
    Dataclass for the regularized surface propagator matrix and right-hand side
    at one dimensionless momentum q.
    """
    q: float
    epsilon: float
    matrix: np.ndarray
    rhs: np.ndarray
    weights: np.ndarray

    @property
    def nx(self) -> int:
        """
        Returns the number of lattice sites.
        """
        return len(self.rhs)


@dataclass(frozen=True, eq=False)
class GreensSolution:
    """
    Dataclass for the solved combined propagator Delta M_12 at one momentum q.
    """
    q: float
    values: np.ndarray
    residual: float
