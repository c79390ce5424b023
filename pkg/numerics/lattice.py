"""
Uniform lateral grids and the continuum schedule that drives them.
"""

from typing import Optional

import numpy as np

from dataclass.lattice import ContinuumSchedule, Lattice
from utils.exceptions import ConfigError


def build_schedule(a0x: float, n0x: int) -> ContinuumSchedule:
    """
    Creates the continuum schedule with reference spacing a0x at N_x = n0x.
    The defaults a0x = 0.05, n0x = 80 give L_x(n0x) = 2 distance units.

    :param a0x: Reference lattice spacing, positive.
    :param n0x: Coarsest site count, even and at least 2.
    """
    if a0x <= 0:
        raise ConfigError('Reference lattice spacing must be positive')
    if n0x < 2 or n0x % 2 != 0:
        raise ConfigError('Reference site count must be even and at least 2')
    return ContinuumSchedule(a0x=float(a0x), n0x=int(n0x))


def uniform_lattice(nx: int, half_length: float) -> Lattice:
    """
    Creates the midpoint grid node_i = -L + a (i + 1/2) with a = 2L / N.
    No node sits at x = 0 or on the cutoff for even N.
    """
    if nx < 1:
        raise ConfigError('A lattice needs at least one site')
    if half_length <= 0:
        raise ConfigError('Lattice half-length must be positive')

    spacing = 2.0 * half_length / nx
    offsets = np.arange(nx) + 0.5
    nodes = -half_length + spacing * offsets

    # Mirror the left half onto the right so the grid is exactly symmetric
    if nx % 2 == 0:
        nodes[nx // 2:] = -nodes[:nx // 2][::-1]
    nodes.setflags(write=False)
    return Lattice(nx=nx, half_length=half_length, spacing=spacing, nodes=nodes)


def build_lattice(
    schedule: ContinuumSchedule,
    nx: int,
    half_length: Optional[float] = None
) -> Lattice:
    """
    Creates the lattice for N_x sites on the continuum schedule.

    :param schedule: The continuum schedule.
    :param nx: Site count, even and not below the reference count.
    :param half_length: Optional L_x override for finite-length checks.
        The spacing then follows 2 L_x / N_x instead of the schedule.
    """
    if nx % 2 != 0:
        raise ConfigError(f'Site count {nx} must be even')
    if nx < schedule.n0x:
        raise ConfigError(
            f'Site count {nx} is below the reference count {schedule.n0x}'
        )
    if half_length is None:
        half_length = schedule.half_length(nx)
    return uniform_lattice(nx, half_length)
