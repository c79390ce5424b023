"""
Direct solve of the discretized Green's function equation

    sum_j M11(x_i, x_j) sqrt(g_j) a_x dM12(x_j) = M12(x_i)

for the combined propagator dM12 at one momentum.
"""

import numpy as np
from scipy.linalg import lu_factor, lu_solve

from dataclass.kernel import GreensSolution, KernelSystem
from utils.constants import PIVOT_THRESHOLD
from utils.exceptions import ConditioningError
from utils.logger import create_logger

LOGGER = create_logger('greens')

# Relative residual above which a solve is reported as inaccurate
RESIDUAL_TOLERANCE = 1e-10


def solve(system: KernelSystem) -> GreensSolution:
    """
    Solves (matrix diag(weights)) values = rhs by LU factorization with
    partial pivoting. Identical systems give bitwise identical solutions.

    :param system: The assembled kernel system.
    :raises ConditioningError: if a pivot is below 1e-14 of the largest entry.
    """
    composed = system.matrix * system.weights[np.newaxis, :]
    scale = float(np.max(np.abs(composed)))

    lu, piv = lu_factor(composed, check_finite=False)
    smallest_pivot = float(np.min(np.abs(np.diag(lu))))
    if not np.isfinite(smallest_pivot) or smallest_pivot < PIVOT_THRESHOLD * scale:
        raise ConditioningError(system.q, system.epsilon, system.nx, smallest_pivot)

    values = lu_solve((lu, piv), system.rhs, check_finite=False)
    residual = float(
        np.max(np.abs(composed @ values - system.rhs)) / np.max(np.abs(system.rhs))
    )
    if residual > RESIDUAL_TOLERANCE:
        LOGGER.warning(
            'Residual %.3e at q=%.6g, eps=%.6g, Nx=%d',
            residual, system.q, system.epsilon, system.nx
        )

    return GreensSolution(q=system.q, values=values, residual=residual)
