"""
Assembly of the regularized surface propagator M_11 and the right-hand side
M_12 on a lattice.

The sphere sits at x = 0, height 1, in rescaled units. Lateral positions are
scanned by moving the profile, never the sphere.
"""

from math import log, pi
from typing import Union

import numpy as np

from dataclass.kernel import KernelSystem, SurfaceGeometry
from dataclass.lattice import Lattice
from dataclass.profile import HeightProfile
from utils.exceptions import DomainError, GeometryError

from .profile import height, metric_factor
from .specfun import bessel_k0

ArrayLike = Union[float, np.ndarray]

# Surface points closer than this to the sphere count as contact
CONTACT_TOLERANCE = 1e-12


def regularized_m11(z: ArrayLike, epsilon: float) -> ArrayLike:
    """
    Surface propagator with the coincident-point singularity smoothed out.

    For z > eps this is K_0(z) / 2 pi. For z <= eps it is
    -(ln(z + eps) - K_0(eps) - ln(2 eps)) / 2 pi, which meets the Bessel
    branch continuously at z = eps and stays finite at z = 0.

    :param z: Combined argument q * distance, nonnegative.
    :param epsilon: Regulator, positive.
    """
    if epsilon <= 0:
        raise DomainError('The regulator must be positive')
    args = np.atleast_1d(np.asarray(z, dtype=float))
    if np.any(args < 0):
        raise DomainError('The propagator argument must be nonnegative')

    k0_eps = float(bessel_k0(epsilon))
    value = -(np.log(args + epsilon) - k0_eps - log(2.0 * epsilon)) / (2.0 * pi)
    far = args > epsilon
    if far.any():
        value[far] = bessel_k0(args[far]) / (2.0 * pi)

    if np.ndim(z) == 0:
        return float(value[0])
    return value.reshape(np.shape(z))


def kernel_argument(profile: HeightProfile, x: ArrayLike, x_prime: ArrayLike) -> ArrayLike:
    """
    Geometric distance between the surface points above x and x'.
    """
    dh = np.asarray(height(profile, x_prime)) - np.asarray(height(profile, x))
    value = np.hypot(np.asarray(x_prime, dtype=float) - np.asarray(x, dtype=float), dh)
    if np.ndim(value) == 0:
        return float(value)
    return value


def rhs_argument(profile: HeightProfile, x_prime: ArrayLike) -> ArrayLike:
    """
    Distance from the surface point above x' to the sphere at (0, 1).
    """
    xs = np.asarray(x_prime, dtype=float)
    value = np.hypot(xs, np.asarray(height(profile, xs)) - 1.0)
    if np.any(value <= CONTACT_TOLERANCE):
        raise GeometryError('The surface touches the sphere')
    if np.ndim(x_prime) == 0:
        return float(value)
    return value


def surface_geometry(profile: HeightProfile, lattice: Lattice) -> SurfaceGeometry:
    """
    Computes everything an assembly needs that does not depend on q or eps.

    :param profile: Rescaled profile, sphere at height 1.
    :param lattice: Lateral grid.
    """
    nodes = lattice.nodes
    heights = np.asarray(height(profile, nodes))

    # Antisymmetric differences keep the distance matrix exactly symmetric
    distances = np.hypot(
        np.subtract.outer(nodes, nodes),
        np.subtract.outer(heights, heights)
    )
    sphere_distances = np.asarray(rhs_argument(profile, nodes))
    weights = np.asarray(metric_factor(profile, nodes)) * lattice.spacing
    return SurfaceGeometry(
        nodes=nodes,
        distances=distances,
        sphere_distances=sphere_distances,
        weights=weights
    )


def assemble_from_geometry(geometry: SurfaceGeometry, q: float, epsilon: float) -> KernelSystem:
    """
    Builds the kernel system at momentum q from a precomputed geometry.
    The regulator acts on the combined argument q * distance.
    """
    if q <= 0:
        raise DomainError('The momentum must be positive')
    matrix = np.asarray(regularized_m11(q * geometry.distances, epsilon))
    rhs = np.asarray(bessel_k0(q * geometry.sphere_distances)) / (2.0 * pi)
    return KernelSystem(
        q=q,
        epsilon=epsilon,
        matrix=matrix,
        rhs=rhs,
        weights=geometry.weights
    )


def assemble(profile: HeightProfile, lattice: Lattice, q: float, epsilon: float) -> KernelSystem:
    """
    Builds the kernel system of the Green's function equation at momentum q.

    :param profile: Rescaled profile, sphere at height 1.
    :param lattice: Lateral grid.
    :param q: Dimensionless momentum, positive.
    :param epsilon: Regulator, positive.
    """
    return assemble_from_geometry(surface_geometry(profile, lattice), q, epsilon)
