"""
Height functions h(x) of the corrugated surface, their slopes and the
induced metric factor sqrt(1 + h'(x)^2).

Profiles are immutable; every operation is a pure function of the profile
and the abscissa, so concurrent evaluation is safe.
"""

from dataclasses import replace
from functools import lru_cache
from math import pi
from typing import Optional, Sequence, Tuple, Union

import numpy as np
from scipy.interpolate import PchipInterpolator

from dataclass.profile import HeightProfile
from utils.constants import DEFAULT_SAWTOOTH_SMOOTHING, SAWTOOTH_PEAK
from utils.exceptions import ConfigError, DomainError

ArrayLike = Union[float, np.ndarray]


def planar() -> HeightProfile:
    """
    Creates the flat surface h(x) = 0.
    """
    return HeightProfile(kind='planar')


def sine(amplitude: float, omega: float, phase: float = 0.0) -> HeightProfile:
    """
    Creates the sinusoidal corrugation h(x) = A sin(omega x + phase).
    """
    if amplitude <= 0 or omega <= 0:
        raise ConfigError('Sine profiles need a positive amplitude and frequency')
    return HeightProfile(kind='sine', amplitude=amplitude, omega=omega, phase=phase)


def sawtooth(
    amplitude: float,
    wavelength: float,
    smoothing: Optional[float] = None,
    phase: float = 0.0
) -> HeightProfile:
    """
    Creates the smoothed sawtooth with h(0) = 0 rising to h(0.8 lambda) = A
    and falling back to zero at h(lambda).

    :param amplitude: Peak height A.
    :param wavelength: Period lambda.
    :param smoothing: Corner half-width delta, as a length. Defaults to 0.05 lambda.
    :param phase: Lateral shift in radians of the period.
    """
    if smoothing is None:
        smoothing = DEFAULT_SAWTOOTH_SMOOTHING * wavelength
    if amplitude <= 0 or wavelength <= 0:
        raise ConfigError('Sawtooth profiles need a positive amplitude and wavelength')

    # Both flanks must be longer than two corner half-widths
    short_flank = min(SAWTOOTH_PEAK, 1.0 - SAWTOOTH_PEAK) * wavelength
    if not 0 < smoothing < 0.5 * short_flank:
        raise ConfigError(f'Sawtooth smoothing must lie in (0, {0.5 * short_flank:g})')
    return HeightProfile(
        kind='sawtooth',
        amplitude=amplitude,
        wavelength=wavelength,
        smoothing=smoothing,
        phase=phase
    )


def tabulated(xs: Sequence[float], hs: Sequence[float]) -> HeightProfile:
    """
    Creates a profile interpolated from (x, h) samples with monotone cubics.
    """
    table_x = tuple(float(x) for x in xs)
    table_h = tuple(float(h) for h in hs)
    if len(table_x) < 2 or len(table_x) != len(table_h):
        raise ConfigError('Tabulated profiles need at least two (x, h) pairs')
    if any(b <= a for a, b in zip(table_x, table_x[1:])):
        raise ConfigError('Tabulated x values must be strictly increasing')
    return HeightProfile(kind='tabulated', table_x=table_x, table_h=table_h)


def load_tabulated(path: str) -> HeightProfile:
    """
    Loads a tabulated profile from a two-column text file.
    Columns may be separated by whitespace or commas; '#' starts a comment.
    """
    xs = []
    hs = []
    with open(path, encoding='UTF-8') as f:
        for line_number, line in enumerate(f, start=1):
            line = line.split('#', 1)[0].strip()
            if not line:
                continue
            fields = line.replace(',', ' ').split()
            if len(fields) != 2:
                raise ConfigError(f'{path}:{line_number}: expected two columns')
            try:
                xs.append(float(fields[0]))
                hs.append(float(fields[1]))
            except ValueError as e:
                raise ConfigError(f'{path}:{line_number}: {e}') from e

    return tabulated(xs, hs)


@lru_cache(maxsize=32)
def _interpolator(table_x: Tuple[float, ...], table_h: Tuple[float, ...]) -> PchipInterpolator:
    return PchipInterpolator(np.asarray(table_x), np.asarray(table_h), extrapolate=False)


def _check_table_range(profile: HeightProfile, x: np.ndarray):
    assert profile.table_x is not None
    if np.any(x < profile.table_x[0]) or np.any(x > profile.table_x[-1]):
        raise DomainError(
            f'x outside of the tabulated range [{profile.table_x[0]}, {profile.table_x[-1]}]'
        )


def _sawtooth_shape(profile: HeightProfile, x: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Returns (h, h') of the smoothed sawtooth without offset.
    """
    amp = profile.amplitude
    lam = profile.wavelength
    delta = profile.smoothing
    peak = SAWTOOTH_PEAK * lam

    # Flank slopes, steepened so that the corner arcs still reach 0 and A
    rise = amp / (peak - delta)
    fall = amp / (lam - peak - delta)

    u = np.mod(x + profile.phase * lam / (2.0 * pi), lam)
    conditions = [
        u < delta,
        u < peak - delta,
        u < peak,
        u < peak + delta,
        u < lam - delta,
    ]
    values = np.select(conditions, [
        rise * u * u / (2.0 * delta),
        rise * (u - 0.5 * delta),
        amp - rise * (peak - u) ** 2 / (2.0 * delta),
        amp - fall * (u - peak) ** 2 / (2.0 * delta),
        amp - fall * (u - peak - 0.5 * delta),
    ], default=fall * (lam - u) ** 2 / (2.0 * delta))
    slopes = np.select(conditions, [
        rise * u / delta,
        np.full_like(u, rise),
        rise * (peak - u) / delta,
        -fall * (u - peak) / delta,
        np.full_like(u, -fall),
    ], default=-fall * (lam - u) / delta)
    return values, slopes


def _as_output(value: np.ndarray, x: ArrayLike) -> ArrayLike:
    if np.ndim(x) == 0:
        return float(value)
    return value


def height(profile: HeightProfile, x: ArrayLike) -> ArrayLike:
    """
    Evaluates h(x).

    :param profile: The height profile.
    :param x: Lateral coordinate(s).
    """
    xs = np.asarray(x, dtype=float)
    if profile.kind == 'planar':
        value = np.zeros_like(xs)
    elif profile.kind == 'sine':
        value = profile.amplitude * np.sin(profile.omega * xs + profile.phase)
    elif profile.kind == 'sawtooth':
        value = _sawtooth_shape(profile, xs)[0]
    elif profile.kind == 'tabulated':
        _check_table_range(profile, xs)
        assert profile.table_x is not None and profile.table_h is not None
        value = _interpolator(profile.table_x, profile.table_h)(xs)
    else:
        raise ConfigError(f'Unknown profile kind {profile.kind!r}')

    return _as_output(value + profile.offset, x)


def finite_difference_slope(profile: HeightProfile, x: ArrayLike) -> ArrayLike:
    """
    Fourth-order central difference of h with step 1e-5 max(lambda, A).
    """
    scale = max(dominant_wavelength(profile) or 0.0, profile.amplitude) or 1.0
    step = 1e-5 * scale
    xs = np.asarray(x, dtype=float)
    value = (
        -np.asarray(height(profile, xs + 2 * step))
        + 8 * np.asarray(height(profile, xs + step))
        - 8 * np.asarray(height(profile, xs - step))
        + np.asarray(height(profile, xs - 2 * step))
    ) / (12 * step)
    return _as_output(value, x)


def slope(profile: HeightProfile, x: ArrayLike) -> ArrayLike:
    """
    Evaluates h'(x).
    """
    xs = np.asarray(x, dtype=float)
    if profile.kind == 'planar':
        value = np.zeros_like(xs)
    elif profile.kind == 'sine':
        value = profile.amplitude * profile.omega * np.cos(profile.omega * xs + profile.phase)
    elif profile.kind == 'sawtooth':
        value = _sawtooth_shape(profile, xs)[1]
    elif profile.kind == 'tabulated':
        _check_table_range(profile, xs)
        assert profile.table_x is not None and profile.table_h is not None
        value = _interpolator(profile.table_x, profile.table_h).derivative()(xs)
    else:
        raise ConfigError(f'Unknown profile kind {profile.kind!r}')

    return _as_output(value, x)


def metric_factor(profile: HeightProfile, x: ArrayLike) -> ArrayLike:
    """
    Evaluates the induced-metric factor sqrt(1 + h'(x)^2).
    """
    value = np.sqrt(1.0 + np.asarray(slope(profile, x)) ** 2)
    return _as_output(value, x)


def rescale(profile: HeightProfile, scale: float) -> HeightProfile:
    """
    Returns the dimensionless profile h~(x~) = h(x~ scale) / scale.

    :param profile: Profile in physical units.
    :param scale: Length unit to divide by.
    """
    if scale <= 0:
        raise DomainError('Rescaling needs a positive length')

    if profile.kind == 'planar':
        return replace(profile, offset=profile.offset / scale)
    if profile.kind == 'sine':
        return replace(
            profile,
            amplitude=profile.amplitude / scale,
            omega=profile.omega * scale,
            offset=profile.offset / scale
        )
    if profile.kind == 'sawtooth':
        return replace(
            profile,
            amplitude=profile.amplitude / scale,
            wavelength=profile.wavelength / scale,
            smoothing=profile.smoothing / scale,
            offset=profile.offset / scale
        )
    if profile.kind == 'tabulated':
        assert profile.table_x is not None and profile.table_h is not None
        return replace(
            profile,
            table_x=tuple(x / scale for x in profile.table_x),
            table_h=tuple(h / scale for h in profile.table_h),
            offset=profile.offset / scale
        )
    raise ConfigError(f'Unknown profile kind {profile.kind!r}')


def shift_vertical(profile: HeightProfile, offset: float) -> HeightProfile:
    """
    Returns the profile moved up by `offset`.
    """
    return replace(profile, offset=profile.offset + offset)


def with_phase(profile: HeightProfile, phase: float) -> HeightProfile:
    """
    Returns the profile moved laterally to the given phase.
    Lateral scans move the surface, the sphere stays at x = 0.
    """
    if profile.kind in ('sine', 'sawtooth'):
        return replace(profile, phase=phase)
    if phase != 0:
        raise ConfigError(f'{profile.kind} profiles have no lateral phase')
    return profile


def dominant_wavelength(profile: HeightProfile) -> Optional[float]:
    """
    Returns the wavelength that the lattice spacing must resolve, or None
    when the profile has no lateral structure.
    """
    if profile.kind == 'sine':
        return 2.0 * pi / profile.omega
    if profile.kind == 'sawtooth':
        return profile.wavelength
    if profile.kind == 'tabulated':
        assert profile.table_x is not None and profile.table_h is not None
        xs = np.asarray(profile.table_x)
        slopes = _interpolator(profile.table_x, profile.table_h).derivative()(xs)
        turning = xs[1:][np.diff(np.sign(slopes)) != 0]
        if len(turning) < 2:
            return None
        return float(2.0 * np.min(np.diff(turning)))
    return None
