"""
The geometry factor

    alpha = 2 int_0^inf dq q int dx sqrt(g) dM12(q; x) M21(q; x)

evaluated with the lattice rectangle rule in x and Gauss-Legendre in q.
"""

from concurrent.futures import Executor
from math import pi
from typing import Callable, List, Optional, Sequence, Tuple, TypeVar, Union

import numpy as np

from dataclass.alpha import AlphaSample, MomentumQuadrature
from dataclass.kernel import SurfaceGeometry
from dataclass.lattice import ContinuumSchedule
from dataclass.profile import HeightProfile
from utils.exceptions import ConfigError, NumericalError
from utils.logger import create_logger

from .greens import solve
from .kernel import assemble_from_geometry, surface_geometry
from .lattice import build_lattice
from .specfun import bessel_k0_k1

LOGGER = create_logger('alpha')
T = TypeVar('T')
ArrayLike = Union[float, np.ndarray]

# Breakpoints of the graded rule used by the analytic planar integral
_T_PANELS = (0.0, 1e-4, 1e-3, 1e-2, 0.1, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 50.0)


def build_momentum_quadrature(n_q: int, q_max: float) -> MomentumQuadrature:
    """
    Maps the n_q point Gauss-Legendre rule onto [0, q_max] through
    q = q_max s^2, which smooths the q ln q behaviour of the integrand at
    small momenta. The weights still sum to q_max.

    :param n_q: Number of nodes, at least 8.
    :param q_max: Upper momentum cutoff, above 5.
    """
    if n_q < 8:
        raise ConfigError('The momentum rule needs at least 8 nodes')
    if q_max <= 5:
        raise ConfigError('The momentum cutoff must exceed 5')

    t, w = np.polynomial.legendre.leggauss(n_q)
    s = 0.5 * (t + 1.0)
    nodes = q_max * s * s
    weights = q_max * s * w
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return MomentumQuadrature(nodes=nodes, weights=weights, q_max=float(q_max))


def _map(executor: Optional[Executor], fn: Callable[..., T], jobs: Sequence[tuple]) -> List[T]:
    """
    Runs fn over jobs, on the executor if one is given, and returns the
    results in job order.
    """
    if executor is None:
        return [fn(*job) for job in jobs]
    futures = [executor.submit(fn, *job) for job in jobs]
    return [future.result() for future in futures]


def _x_integral(geometry: SurfaceGeometry, q: float, epsilon: float) -> float:
    """
    sum_j sqrt(g_j) a_x dM12(q; x_j) M21(q; x_j) at one momentum node.
    M21 equals the right-hand side M12.
    """
    system = assemble_from_geometry(geometry, q, epsilon)
    solution = solve(system)
    return float(np.sum(system.weights * solution.values * system.rhs))


def _reduce(
    quadrature: MomentumQuadrature,
    inner: Sequence[float],
    nx: int,
    epsilon: float
) -> float:
    # Ascending node order; completion order of the solves never matters
    total = 0.0
    for q, w, value in zip(quadrature.nodes, quadrature.weights, inner):
        total += w * q * value
        if not np.isfinite(total):
            raise NumericalError(float(q), nx, epsilon)
    return 2.0 * total


def alpha_samples(
    profile: HeightProfile,
    schedule: ContinuumSchedule,
    points: Sequence[Tuple[int, float]],
    quadrature: MomentumQuadrature,
    executor: Optional[Executor] = None,
    half_length: Optional[float] = None
) -> List[AlphaSample]:
    """
    Computes alpha(Nx, eps) for several (Nx, eps) pairs at once.

    All momentum solves of all pairs are dispatched together; each is an
    independent leaf task, so the executor is never waited on from inside itself.

    :param profile: Rescaled profile, sphere at (0, 1).
    :param schedule: Continuum schedule fixing L_x(Nx).
    :param points: The (Nx, eps) pairs.
    :param quadrature: Momentum rule.
    :param executor: Optional pool for the solves.
    :param half_length: Optional L_x override.
    """
    geometries = {}
    for nx, _ in points:
        if nx not in geometries:
            lattice = build_lattice(schedule, nx, half_length)
            geometries[nx] = surface_geometry(profile, lattice)

    jobs = [
        (geometries[nx], float(q), epsilon)
        for nx, epsilon in points
        for q in quadrature.nodes
    ]
    inner = _map(executor, _x_integral, jobs)

    samples = []
    for index, (nx, epsilon) in enumerate(points):
        chunk = inner[index * quadrature.size:(index + 1) * quadrature.size]
        alpha = _reduce(quadrature, chunk, nx, epsilon)
        LOGGER.debug('alpha(Nx=%d, eps=%g) = %.9f', nx, epsilon, alpha)
        samples.append(AlphaSample(nx=nx, epsilon=epsilon, alpha=alpha))
    return samples


def alpha_sample(
    profile: HeightProfile,
    schedule: ContinuumSchedule,
    nx: int,
    epsilon: float,
    quadrature: MomentumQuadrature,
    executor: Optional[Executor] = None,
    half_length: Optional[float] = None
) -> AlphaSample:
    """
    Computes alpha(Nx, eps) for one lattice and regulator.
    """
    return alpha_samples(
        profile, schedule, [(nx, epsilon)], quadrature, executor, half_length
    )[0]


def analytic_planar_green(q: ArrayLike, x: ArrayLike) -> ArrayLike:
    """
    Closed-form planar dM12 = (1/pi) (q / rho) K_1(q rho), rho = sqrt(1 + x^2).
    """
    rho = np.hypot(1.0, x)
    k1 = bessel_k0_k1(np.asarray(q * rho, dtype=float))[1]
    value = q / rho * k1 / pi
    if np.ndim(value) == 0:
        return float(value)
    return value


def analytic_planar_integrand(q: ArrayLike, x: ArrayLike) -> ArrayLike:
    """
    Returns 2 q dM12 M21 with the closed-form planar propagators.
    Used as an oracle for the solver path.
    """
    rho = np.hypot(1.0, x)
    k0, k1 = bessel_k0_k1(np.asarray(q * rho, dtype=float))
    value = 2.0 * q * (q / rho * k1 / pi) * (k0 / (2.0 * pi))
    if np.ndim(value) == 0:
        return float(value)
    return value


def analytic_planar_alpha(n_theta: int = 64, n_t: int = 24) -> float:
    """
    Integrates the planar integrand over x and q without the solver.

    Substitutes x = tan(theta) and q = t / rho so the decay in t does not
    depend on x, then applies tensor Gauss-Legendre rules. The result
    approaches 1 / (4 pi).
    """
    u, wu = np.polynomial.legendre.leggauss(n_theta)
    theta = 0.5 * pi * u
    w_theta = 0.5 * pi * wu
    x = np.tan(theta)
    rho = 1.0 / np.cos(theta)

    s, ws = np.polynomial.legendre.leggauss(n_t)
    t_nodes = []
    t_weights = []
    for a, b in zip(_T_PANELS, _T_PANELS[1:]):
        t_nodes.append(0.5 * (b - a) * (s + 1.0) + a)
        t_weights.append(0.5 * (b - a) * ws)
    t = np.concatenate(t_nodes)
    w_t = np.concatenate(t_weights)

    # dq = dt / rho, dx = rho^2 dtheta
    q = t[np.newaxis, :] / rho[:, np.newaxis]
    values = analytic_planar_integrand(q, x[:, np.newaxis])
    jacobian = rho[:, np.newaxis]
    return float(np.sum(w_theta[:, np.newaxis] * w_t[np.newaxis, :] * values * jacobian))
