"""
Two-stage limit protocol: a straight line in 1/Nx at fixed eps gives the
continuum intercept alpha(eps), and a straight line through two intercepts
inside the eps-linear window gives alpha_0 at eps = 0.
"""

from concurrent.futures import Executor
from dataclasses import dataclass, replace
from math import ceil
from typing import List, Optional, Sequence, Tuple

import numpy as np

from dataclass.alpha import AlphaSample, MomentumQuadrature
from dataclass.config import NumericalPlan
from dataclass.estimate import AlphaEstimate, ExtrapolationPlan
from dataclass.lattice import ContinuumSchedule
from dataclass.profile import HeightProfile
from utils.constants import LINEARITY_THRESHOLD, MAX_REFINEMENT, RESOLUTION_FRACTION
from utils.exceptions import ConfigError, DegenerateInputError, ProtocolError
from utils.logger import create_logger

from .alpha import alpha_samples, build_momentum_quadrature
from .lattice import build_schedule
from .profile import dominant_wavelength

LOGGER = create_logger('extrapolate')

Point = Tuple[float, float]


@dataclass(frozen=True)
class LinearityScan:
    """
    Continuum intercepts alpha(eps) over a list of regulators.
    `linear` is False when the curvature check flagged the window.
    """
    rows: Tuple[Point, ...]
    window: Tuple[float, float]
    linear: bool


def _line(p1: Point, p2: Point) -> Tuple[float, float]:
    """
    Returns (value at 0, slope) of the line through two points.
    """
    (x1, y1), (x2, y2) = p1, p2
    if x1 == x2:
        raise DegenerateInputError(f'Cannot extrapolate through two points at x={x1}')
    intercept = (y2 * x1 - y1 * x2) / (x1 - x2)
    slope = (y2 - y1) / (x2 - x1)
    return intercept, slope


def extrapolate_continuum(first: AlphaSample, second: AlphaSample) -> float:
    """
    Extrapolates two samples at equal eps linearly to 1/Nx = 0.
    """
    if first.epsilon != second.epsilon:
        raise ProtocolError(
            f'Continuum extrapolation mixes eps={first.epsilon} and eps={second.epsilon}'
        )
    if first.nx == second.nx:
        raise DegenerateInputError(f'Both samples have Nx={first.nx}')
    return _line((first.inv_nx, first.alpha), (second.inv_nx, second.alpha))[0]


def extrapolate_regulator(first: Point, second: Point) -> Tuple[float, float]:
    """
    Extrapolates two continuum intercepts (eps, alpha) linearly to eps = 0.

    :return: Tuple (alpha_0, alpha_1) of the line alpha_0 + alpha_1 eps.
    """
    if first[0] == second[0]:
        raise DegenerateInputError(f'Both intercepts have eps={first[0]}')
    return _line(first, second)


def extrapolate_least_squares(
    xs: Sequence[float],
    ys: Sequence[float],
    degree: int = 1
) -> Tuple[float, np.ndarray]:
    """
    Least-squares polynomial through three or more points, for diagnostics.

    :param degree: 1 for a line, 2 to include the eps^2 term.
    :return: Tuple (value at x = 0, coefficients in ascending order).
    """
    if degree not in (1, 2):
        raise ConfigError('Least-squares extrapolation supports degree 1 or 2')
    if len(xs) != len(ys):
        raise DegenerateInputError('Abscissae and values differ in length')
    if len(set(xs)) < max(3, degree + 1):
        raise DegenerateInputError('Least-squares extrapolation needs three distinct points')

    coefficients = np.polynomial.polynomial.polyfit(
        np.asarray(xs, dtype=float), np.asarray(ys, dtype=float), degree
    )
    return float(coefficients[0]), coefficients


def check_resolution(profile: HeightProfile, spacing: float) -> bool:
    """
    Warns when the lattice spacing does not resolve the corrugation.

    :param profile: Rescaled profile.
    :param spacing: Lattice spacing in the same units.
    :return: Whether the spacing is fine enough.
    """
    wavelength = dominant_wavelength(profile)
    if wavelength is None or spacing <= RESOLUTION_FRACTION * wavelength:
        return True
    LOGGER.warning(
        'Lattice spacing %.4g exceeds 1/8 of the corrugation wavelength %.4g',
        spacing, wavelength
    )
    return False


def _spacing(schedule: ContinuumSchedule, nx: int, half_length: Optional[float]) -> float:
    if half_length is None:
        return schedule.spacing(nx)
    return 2.0 * half_length / nx


def resolved_plan(profile: HeightProfile, plan: NumericalPlan) -> NumericalPlan:
    """
    Returns the plan with every site count multiplied by the smallest
    integer that puts plan.points_per_wavelength sites on the corrugation
    wavelength, at most MAX_REFINEMENT. Plans that already resolve the
    profile, or that have refinement switched off, come back unchanged.

    :param profile: Rescaled profile.
    """
    if plan.points_per_wavelength == 0:
        return plan
    wavelength = dominant_wavelength(profile)
    if wavelength is None:
        return plan

    schedule = build_schedule(plan.a0x, plan.n0x)
    counts = list(plan.nx_pair) + (list(plan.nx_verify) if plan.verify else [])
    coarse = _spacing(schedule, min(counts), plan.lx_override)
    excess = coarse * plan.points_per_wavelength / wavelength
    if excess <= 1.0:
        return plan

    # The scheduled spacing shrinks like 1/sqrt(Nx), a fixed length like 1/Nx
    needed = excess if plan.lx_override is not None else excess ** 2
    factor = min(ceil(needed - 1e-9), MAX_REFINEMENT)
    if factor < needed:
        sites = wavelength / _spacing(schedule, factor * min(counts), plan.lx_override)
        LOGGER.warning(
            'Refining the lattice %dx gives %.1f sites per wavelength, not %d',
            factor, sites, plan.points_per_wavelength
        )
    LOGGER.debug('Refining site counts %dx for wavelength %.4g', factor, wavelength)
    return replace(
        plan,
        nx_pair=(factor * plan.nx_pair[0], factor * plan.nx_pair[1]),
        nx_verify=(factor * plan.nx_verify[0], factor * plan.nx_verify[1])
    )


def estimate_from_samples(
    samples: Sequence[AlphaSample],
    extrapolation: ExtrapolationPlan
) -> Tuple[Tuple[Point, Point], float, float]:
    """
    Applies both extrapolation stages to the four samples of a plan.

    :return: Tuple (intercepts, alpha_0, alpha_1).
    """
    by_point = {(s.nx, s.epsilon): s for s in samples}
    n1, n2 = extrapolation.nx_pair
    intercepts = []
    for epsilon in extrapolation.epsilon_pair:
        try:
            first, second = by_point[(n1, epsilon)], by_point[(n2, epsilon)]
        except KeyError as e:
            raise ProtocolError(f'Missing sample {e.args[0]}') from e
        intercepts.append((epsilon, extrapolate_continuum(first, second)))

    alpha0, alpha1 = extrapolate_regulator(intercepts[0], intercepts[1])
    return (intercepts[0], intercepts[1]), alpha0, alpha1


def estimate_alpha(
    profile: HeightProfile,
    plan: NumericalPlan,
    executor: Optional[Executor] = None
) -> AlphaEstimate:
    """
    Runs the full limit protocol for one rescaled geometry.

    The four samples of the main pair, and the four of the verification pair
    when the plan asks for it, are computed concurrently.

    :param profile: Rescaled profile, sphere at (0, 1).
    :param plan: Numerical plan.
    :param executor: Optional pool for the momentum solves.
    """
    schedule = build_schedule(plan.a0x, plan.n0x)
    quadrature = build_momentum_quadrature(plan.n_q, plan.q_max)

    main = ExtrapolationPlan(plan.nx_pair, plan.epsilon_pair)
    points = list(main.points)
    verify = None
    if plan.verify:
        verify = ExtrapolationPlan(plan.nx_verify, plan.epsilon_pair)
        points.extend(verify.points)

    for nx in sorted({nx for nx, _ in points}):
        check_resolution(profile, _spacing(schedule, nx, plan.lx_override))

    samples = alpha_samples(
        profile, schedule, points, quadrature, executor, plan.lx_override
    )
    intercepts, alpha0, alpha1 = estimate_from_samples(samples[:4], main)

    spread = 0.0
    verify_alpha0 = None
    if verify is not None:
        _, verify_alpha0, _ = estimate_from_samples(samples[4:], verify)
        spread = abs(alpha0 - verify_alpha0)

    LOGGER.info(
        'alpha_0 = %.7f (alpha_1 = %.5f, spread %.2e)', alpha0, alpha1, spread
    )
    return AlphaEstimate(
        samples=tuple(samples),
        intercepts=intercepts,
        alpha0=alpha0,
        alpha1=alpha1,
        spread=spread,
        plan=plan,
        verify_alpha0=verify_alpha0
    )


def flag_curvature(rows: Sequence[Point], window: Tuple[float, float]) -> bool:
    """
    Returns True when the intercepts around the window bend by more than
    the threshold. The window is widened by one scan point on each side.
    """
    eps = [e for e, _ in rows]
    inside = [i for i, e in enumerate(eps) if window[0] <= e <= window[1]]
    if inside:
        lo, hi = max(inside[0] - 1, 0), min(inside[-1] + 1, len(rows) - 1)
    else:
        # Nearest three points to the window centre
        centre = 0.5 * (window[0] + window[1])
        nearest = int(np.argmin([abs(e - centre) for e in eps]))
        lo, hi = max(nearest - 1, 0), min(nearest + 1, len(rows) - 1)
    segment = rows[lo:hi + 1]
    if len(segment) < 3:
        return False

    slopes = [
        (a2 - a1) / (e2 - e1)
        for (e1, a1), (e2, a2) in zip(segment, segment[1:])
    ]
    first = max(abs(s) for s in slopes)
    second = max(abs(s2 - s1) for s1, s2 in zip(slopes, slopes[1:]))
    return second > LINEARITY_THRESHOLD * first


def linearity_scan(
    profile: HeightProfile,
    schedule: ContinuumSchedule,
    nx_pair: Tuple[int, int],
    epsilons: Sequence[float],
    quadrature: MomentumQuadrature,
    window: Tuple[float, float],
    executor: Optional[Executor] = None,
    half_length: Optional[float] = None
) -> LinearityScan:
    """
    Tabulates the continuum intercept alpha(eps) over a list of regulators
    so the chosen eps pair can be checked against the linear regime.
    Curvature inside the window is reported as a warning.

    :param window: The configured eps pair, as (low, high).
    """
    values = sorted(set(float(e) for e in epsilons))
    if not values or values[0] <= 0:
        raise ConfigError('Regulators must be positive')
    if values[0] > 0.005 or values[-1] < 0.05:
        LOGGER.warning('The scan should span at least eps in [0.005, 0.05]')

    points = [(nx, e) for e in values for nx in nx_pair]
    samples = alpha_samples(profile, schedule, points, quadrature, executor, half_length)
    rows = tuple(
        (e, extrapolate_continuum(samples[2 * i], samples[2 * i + 1]))
        for i, e in enumerate(values)
    )

    bent = flag_curvature(rows, (min(window), max(window)))
    if bent:
        LOGGER.warning(
            'alpha(eps) is not linear around eps in [%g, %g]', min(window), max(window)
        )
    return LinearityScan(rows=rows, window=(min(window), max(window)), linear=not bent)


def continuum_scan(
    profile: HeightProfile,
    schedule: ContinuumSchedule,
    nx_values: Sequence[int],
    epsilons: Sequence[float],
    quadrature: MomentumQuadrature,
    executor: Optional[Executor] = None,
    half_length: Optional[float] = None
) -> List[AlphaSample]:
    """
    Computes alpha on the full (eps, Nx) grid, ordered by eps then Nx,
    to show the approach to the continuum at each regulator.
    """
    if not nx_values or not epsilons:
        raise ConfigError('The continuum scan needs site counts and regulators')
    points = [
        (nx, float(e))
        for e in sorted(set(epsilons))
        for nx in sorted(set(nx_values))
    ]
    return alpha_samples(profile, schedule, points, quadrature, executor, half_length)
