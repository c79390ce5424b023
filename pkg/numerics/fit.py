"""
Regressions over sweep curves: the anomalous dimension eta from
ratio ~ (H/A)^(-eta), the small-distance slope beta from ratio ~ 1 + beta H/A,
and the scaling of either with the corrugation frequency.
"""

from typing import Dict, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import curve_fit

from dataclass.fit import FitResult, SweepCurve
from utils.exceptions import FitError
from utils.logger import create_logger

LOGGER = create_logger('fit')

Window = Tuple[float, float]

MIN_POINTS = 3

# Upper end of the small-distance regime
BETA_WINDOW_LIMIT = 0.3

# Relative variation below which a curve counts as flat
FLAT_TOLERANCE = 1e-9


def _linear(x, intercept, slope):
    return intercept + slope * x


def _proportional(x, slope):
    return slope * x


def _select(
    curve: SweepCurve,
    window: Window,
    minimum: int = MIN_POINTS
) -> Tuple[np.ndarray, np.ndarray, Optional[np.ndarray]]:
    lo, hi = min(window), max(window)
    index = [i for i, x in enumerate(curve.distances) if lo <= x <= hi]
    if len(index) < minimum:
        raise FitError(
            f'Window [{lo:g}, {hi:g}] holds {len(index)} points, need at least {minimum}'
        )
    xs = np.array([curve.distances[i] for i in index])
    ys = np.array([curve.ratios[i] for i in index])
    sigma = None
    if curve.spreads is not None:
        sigma = np.array([curve.spreads[i] for i in index])
        if np.any(sigma <= 0):
            sigma = None
    return xs, ys, sigma


def _rms(residuals: np.ndarray) -> float:
    return float(np.sqrt(np.mean(residuals ** 2)))


def fit_eta(curve: SweepCurve, window: Window, weighted: bool = False) -> FitResult:
    """
    Fits ln(ratio) = c - eta ln(H/A) over the window.

    :param curve: Sweep curve.
    :param window: Inclusive (H/A min, H/A max).
    :param weighted: Weight points by their spread, if the curve has spreads.
    """
    xs, ys, sigma = _select(curve, window)
    log_x = np.log(xs)
    log_y = np.log(ys)
    if weighted and sigma is not None:
        # Relative uncertainty of the ratio is the absolute one of its log
        sigma = sigma / ys
    else:
        sigma = None

    (intercept, slope), _ = curve_fit(_linear, log_x, log_y, p0=(0.0, 0.0), sigma=sigma)
    residual = log_y - _linear(log_x, intercept, slope)
    eta = -float(slope)
    LOGGER.debug('eta = %.4f over H/A in [%g, %g]', eta, xs[0], xs[-1])
    return FitResult(
        kind='anomalous_dimension',
        value=eta,
        window=(float(xs[0]), float(xs[-1])),
        residual_rms=_rms(residual),
        point_count=len(xs),
        metadata=dict(curve.metadata)
    )


def fit_beta(curve: SweepCurve, window: Window, weighted: bool = False) -> FitResult:
    """
    Fits ratio - 1 = beta H/A through the origin over a window with H/A <= 0.3.
    """
    if max(window) > BETA_WINDOW_LIMIT:
        raise FitError(f'The slope window must end at H/A <= {BETA_WINDOW_LIMIT}')
    xs, ys, sigma = _select(curve, window)
    if not weighted:
        sigma = None

    (beta,), _ = curve_fit(_proportional, xs, ys - 1.0, p0=(0.0,), sigma=sigma)
    residual = ys - 1.0 - _proportional(xs, beta)
    LOGGER.debug('beta = %.4f over H/A in [%g, %g]', beta, xs[0], xs[-1])
    return FitResult(
        kind='linear_slope',
        value=float(beta),
        window=(float(xs[0]), float(xs[-1])),
        residual_rms=_rms(residual),
        point_count=len(xs),
        metadata=dict(curve.metadata)
    )


def detect_extremum(curve: SweepCurve, kind: str = 'peak') -> Optional[Tuple[float, float]]:
    """
    Locates the interior maximum ('peak', well curves) or minimum ('dip',
    crest curves) of the ratio.

    :return: Tuple (H/A, ratio) at the extremum, or None when the curve is
        flat or the extremum sits on an end point.
    """
    if kind not in ('peak', 'dip'):
        raise FitError(f'Unknown extremum kind {kind!r}')
    xs = curve.distances
    ys = np.asarray(curve.ratios)
    if len(xs) < 3:
        return None
    if xs[-1] < 10.0 * xs[0]:
        LOGGER.warning('The curve spans less than a decade in H/A')
    if np.ptp(ys) <= FLAT_TOLERANCE * np.max(np.abs(ys)):
        return None

    index = int(np.argmax(ys) if kind == 'peak' else np.argmin(ys))
    if index in (0, len(ys) - 1):
        return None
    return xs[index], float(ys[index])


def _widen(curve: SweepCurve, window: Window, outward: str) -> Window:
    """
    Moves one end of the window outward through the sweep points until the
    window holds MIN_POINTS of them. 'up' moves the upper end, 'down' the
    lower end. The window is returned unchanged if the sweep runs out.
    """
    lo, hi = window
    if outward == 'up':
        candidates = sorted(x for x in curve.distances if x >= lo)
        if len(candidates) >= MIN_POINTS and candidates[MIN_POINTS - 1] > hi:
            return lo, float(candidates[MIN_POINTS - 1])
        return window

    candidates = sorted((x for x in curve.distances if x <= hi), reverse=True)
    if len(candidates) >= MIN_POINTS and candidates[MIN_POINTS - 1] < lo:
        return float(candidates[MIN_POINTS - 1]), hi
    return window


def default_windows(curve: SweepCurve, kind: str = 'well') -> Dict[str, Window]:
    """
    Returns the standard fit windows for a well curve (sphere above a trough)
    or a crest curve (sphere above a maximum).

    Windows next to the extremum start from fixed multiples of its position
    and are widened away from it until they hold three sweep points.
    Windows left or right of the extremum are omitted when there is none.
    """
    if kind == 'well':
        windows = {}
        extremum = detect_extremum(curve, 'peak')
        if extremum is not None:
            peak = extremum[0]
            windows['toward_peak'] = _widen(curve, (0.1, 0.5 * peak), 'down')
            windows['beyond_peak'] = _widen(curve, (1.2 * peak, max(5.0, 1.2 * peak)), 'up')
        windows['universal'] = (8.0, 15.0)
        return windows

    if kind == 'crest':
        windows = {}
        extremum = detect_extremum(curve, 'dip')
        if extremum is not None:
            dip = extremum[0]
            windows['toward_dip'] = _widen(curve, (0.1, 0.8 * dip), 'down')
            windows['beyond_dip'] = _widen(curve, (1.2 * dip, max(5.0, 1.2 * dip)), 'up')
        windows['far'] = (10.0, 15.0)
        return windows

    raise FitError(f'Unknown curve kind {kind!r}')


def fit_frequency_scaling(pairs: Sequence[Tuple[float, float]]) -> FitResult:
    """
    Fits value ~ (omega A)^p over (omega A, value) pairs and returns p.
    Two pairs determine p exactly.
    """
    if len(pairs) < 2:
        raise FitError('Frequency scaling needs at least two frequencies')
    ordered = sorted(pairs)
    xs = np.array([x for x, _ in ordered])
    ys = np.array([y for _, y in ordered])
    if np.any(xs <= 0) or np.any(ys <= 0):
        raise FitError('Frequency scaling needs positive frequencies and values')
    if len(set(xs)) != len(xs):
        raise FitError('Frequencies must be distinct')

    log_x = np.log(xs)
    log_y = np.log(ys)
    (intercept, power), _ = curve_fit(_linear, log_x, log_y, p0=(0.0, 0.0))
    residual = log_y - _linear(log_x, intercept, power)
    return FitResult(
        kind='frequency_scaling',
        value=float(power),
        window=(float(xs[0]), float(xs[-1])),
        residual_rms=_rms(residual),
        point_count=len(xs)
    )
