"""
Binary dumps of assembled kernel systems, for debugging.

Layout: little-endian float64 values Nx, q, eps, then the Nx x Nx matrix
row by row, then rhs, then weights.
"""

import numpy as np

from dataclass.kernel import KernelSystem
from utils.exceptions import ConfigError

DUMP_DTYPE = np.dtype('<f8')


def write_kernel_dump(path: str, system: KernelSystem):
    """
    Writes a kernel system to a binary file.
    """
    header = np.array([system.nx, system.q, system.epsilon], dtype=DUMP_DTYPE)
    payload = np.concatenate([
        header,
        np.asarray(system.matrix, dtype=DUMP_DTYPE).ravel(order='C'),
        np.asarray(system.rhs, dtype=DUMP_DTYPE),
        np.asarray(system.weights, dtype=DUMP_DTYPE),
    ])
    payload.tofile(path)


def read_kernel_dump(path: str) -> KernelSystem:
    """
    Reads a kernel system written by write_kernel_dump.
    """
    data = np.fromfile(path, dtype=DUMP_DTYPE)
    if len(data) < 3:
        raise ConfigError(f'{path} is too short for a kernel dump')

    nx = int(data[0])
    if len(data) != 3 + nx * nx + 2 * nx:
        raise ConfigError(f'{path} does not hold a kernel of {nx} sites')
    matrix = data[3:3 + nx * nx].reshape(nx, nx)
    rhs = data[3 + nx * nx:3 + nx * nx + nx]
    weights = data[3 + nx * nx + nx:]
    return KernelSystem(
        q=float(data[1]),
        epsilon=float(data[2]),
        matrix=matrix,
        rhs=rhs,
        weights=weights
    )
