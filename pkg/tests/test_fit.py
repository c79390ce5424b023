"""
Tests for eta and beta fits over sweep curves.
"""

from dataclasses import replace
from math import log2, pi
from typing import Optional

import numpy as np
import pytest

from dataclass.config import Config, NumericalPlan, ProfileSpec
from dataclass.fit import FitResult, SweepCurve
from numerics.fit import (default_windows, detect_extremum, fit_beta, fit_eta,
                          fit_frequency_scaling)
from utils.exceptions import FitError
from utils.ondula import Ondula, records_ok

# Vertical grid of the acceptance sweeps
SWEEP = tuple(float(h) for h in np.geomspace(0.1, 15.0, 30))


def _curve(xs, fn, **metadata) -> SweepCurve:
    return SweepCurve(points=tuple((float(x), float(fn(x))) for x in xs), metadata=metadata)


def test_power_law_gives_exact_eta():
    curve = _curve(np.geomspace(0.5, 20.0, 15), lambda x: 2.0 * x ** -0.2, omega_A=1.0)
    result = fit_eta(curve, (1.0, 10.0))
    assert result.kind == 'anomalous_dimension'
    assert result.value == pytest.approx(0.2, abs=1e-8)
    assert result.residual_rms == pytest.approx(0.0, abs=1e-8)
    assert result.metadata['omega_A'] == 1.0
    assert 1.0 <= result.window[0] < result.window[1] <= 10.0


def test_constant_ratio_gives_zero_eta():
    curve = _curve(np.geomspace(0.5, 20.0, 15), lambda x: 1.0)
    assert fit_eta(curve, (0.5, 20.0)).value == pytest.approx(0.0, abs=1e-8)


def test_eta_is_scale_covariant_and_window_independent():
    xs = np.geomspace(0.5, 20.0, 25)
    curve = _curve(xs, lambda x: 1.3 * x ** -0.7)
    scaled = _curve(xs, lambda x: 4.0 * 1.3 * x ** -0.7)
    wide = fit_eta(curve, (0.5, 20.0)).value
    assert fit_eta(scaled, (0.5, 20.0)).value == pytest.approx(wide, abs=1e-8)
    assert fit_eta(curve, (2.0, 8.0)).value == pytest.approx(wide, abs=1e-8)


def test_weighted_fit_uses_spreads():
    xs = np.geomspace(1.0, 10.0, 8)
    curve = SweepCurve(
        points=tuple((float(x), float(x ** -0.5)) for x in xs),
        spreads=tuple(1e-3 for _ in xs)
    )
    assert fit_eta(curve, (1.0, 10.0), weighted=True).value == pytest.approx(0.5, abs=1e-8)


def test_linear_slope_gives_exact_beta():
    curve = _curve(np.linspace(0.02, 0.3, 10), lambda x: 1.0 + 0.5 * x)
    result = fit_beta(curve, (0.02, 0.3))
    assert result.kind == 'linear_slope'
    assert result.value == pytest.approx(0.5, abs=1e-8)


def test_beta_window_must_stay_small():
    curve = _curve(np.linspace(0.02, 1.0, 20), lambda x: 1.0 + 0.5 * x)
    with pytest.raises(FitError):
        fit_beta(curve, (0.02, 0.5))


def test_window_needs_three_points():
    curve = _curve([0.5, 1.0, 2.0, 4.0], lambda x: 1.0 / x)
    with pytest.raises(FitError):
        fit_eta(curve, (0.9, 2.5))


def test_curve_validation():
    with pytest.raises(FitError):
        SweepCurve(points=((1.0, 1.0), (0.5, 1.0)))
    with pytest.raises(FitError):
        SweepCurve(points=((1.0, -1.0),))
    with pytest.raises(FitError):
        SweepCurve(points=((1.0, 1.0),), spreads=(0.1, 0.2))
    with pytest.raises(FitError):
        FitResult(kind='curvature', value=0.0, window=(1.0, 2.0), residual_rms=0.0,
                  point_count=3)


def test_extremum_of_unimodal_curve():
    xs = np.logspace(-1, 1, 21)
    peaked = _curve(xs, lambda x: 1.0 + 0.2 * np.exp(-np.log(x) ** 2))
    assert detect_extremum(peaked, 'peak')[0] == pytest.approx(1.0)
    dipped = _curve(xs, lambda x: 1.0 - 0.2 * np.exp(-np.log(x) ** 2))
    assert detect_extremum(dipped, 'dip')[0] == pytest.approx(1.0)


def test_no_extremum_on_flat_or_monotone_curves():
    xs = np.logspace(-1, 1, 21)
    assert detect_extremum(_curve(xs, lambda x: 1.0)) is None
    assert detect_extremum(_curve(xs, lambda x: 1.0 + 1.0 / x)) is None
    with pytest.raises(FitError):
        detect_extremum(_curve(xs, lambda x: 1.0), 'saddle')


def test_default_windows():
    xs = np.logspace(-1, np.log10(15.0), 30)
    peak = xs[12]
    well = _curve(xs, lambda x: 1.0 + 0.2 * np.exp(-(np.log(x) - np.log(peak)) ** 2))
    windows = default_windows(well, 'well')
    assert set(windows) == {'toward_peak', 'beyond_peak', 'universal'}
    assert windows['toward_peak'] == pytest.approx((0.1, 0.5 * peak))
    assert windows['beyond_peak'] == pytest.approx((1.2 * peak, 5.0))
    assert windows['universal'] == (8.0, 15.0)

    flat = _curve(xs, lambda x: 1.0)
    assert set(default_windows(flat, 'crest')) == {'far'}
    with pytest.raises(FitError):
        default_windows(flat, 'ridge')


def test_default_windows_widen_to_three_points():
    xs = np.geomspace(0.1, 15.0, 30)
    peak = xs[20]
    well = _curve(xs, lambda x: 1.0 + 0.9 * np.exp(-(np.log(x) - np.log(peak)) ** 2))
    beyond = default_windows(well, 'well')['beyond_peak']
    assert beyond == pytest.approx((1.2 * peak, xs[24]))
    assert fit_eta(well, beyond).point_count == 3

    dip = xs[21]
    crest = _curve(xs, lambda x: 1.0 - 0.1 * np.exp(-(np.log(x) - np.log(dip)) ** 2))
    windows = default_windows(crest, 'crest')
    assert windows['beyond_dip'] == pytest.approx((1.2 * dip, xs[25]))
    assert windows['toward_dip'] == pytest.approx((0.1, 0.8 * dip))

    # Too few points above H/A = 0.1 widens the toward window downward
    sparse_xs = np.geomspace(0.02, 15.0, 16)
    early = sparse_xs[7]
    sparse = _curve(sparse_xs, lambda x: 1.0 + 0.5 * np.exp(-(np.log(x) - np.log(early)) ** 2))
    toward = default_windows(sparse, 'well')['toward_peak']
    assert toward == pytest.approx((sparse_xs[3], 0.5 * early))
    assert fit_eta(sparse, toward).point_count == 3


def test_frequency_scaling_recovers_square():
    result = fit_frequency_scaling([(1.0, 0.5), (2.0, 2.0), (3.0, 4.5)])
    assert result.kind == 'frequency_scaling'
    assert result.value == pytest.approx(2.0, abs=1e-8)
    assert fit_frequency_scaling([(2.0, 2.0), (1.0, 0.5)]).value == pytest.approx(2.0)


def test_frequency_scaling_rejects_bad_input():
    with pytest.raises(FitError):
        fit_frequency_scaling([(1.0, 0.5)])
    with pytest.raises(FitError):
        fit_frequency_scaling([(1.0, 0.5), (1.0, 0.6)])
    with pytest.raises(FitError):
        fit_frequency_scaling([(1.0, -0.5), (2.0, 0.6)])


def test_eta_of_random_power_laws():
    rng = np.random.default_rng(7)
    xs = np.geomspace(0.2, 15.0, 20)
    for amplitude, eta in rng.uniform([0.5, -1.0], [3.0, 2.0], size=(10, 2)):
        curve = _curve(xs, lambda x, a=amplitude, e=eta: a * x ** -e)
        assert fit_eta(curve, (0.2, 15.0)).value == pytest.approx(eta, abs=1e-8)


def _swept_curve(
    profile: ProfileSpec,
    values,
    phase: float,
    plan: Optional[NumericalPlan] = None
) -> SweepCurve:
    plan = plan or replace(NumericalPlan(), verify=False)
    with Ondula() as ondula:
        ondula.init_config(Config(profile=profile, plan=plan))
        records = ondula.vertical_sweep(values, phase=phase)
    assert records_ok(records)
    return SweepCurve(
        points=tuple((r.h_over_a, r.ratio) for r in records),
        metadata={'omega_A': profile.omega_a}
    )


def test_plane_against_plane_has_no_exponent(small_plan):
    curve = _swept_curve(ProfileSpec(kind='planar'), (8.0, 10.0, 12.0, 15.0), 0.0, small_plan)
    assert abs(fit_eta(curve, (8.0, 15.0)).value) < 0.01
    assert detect_extremum(curve, 'peak') is None


@pytest.mark.slow
def test_small_distance_slope_grows_with_frequency_squared():
    values = tuple(float(h) for h in np.linspace(0.05, 0.25, 5))
    betas = []
    for omega in (1.0, 2.0):
        curve = _swept_curve(ProfileSpec(kind='sine', omega=omega), values, -pi / 2)
        betas.append(fit_beta(curve, (0.05, 0.25)).value)

    assert betas[0] == pytest.approx(0.5, abs=0.15)
    assert 3.0 <= betas[1] / betas[0] <= 6.0
    power = fit_frequency_scaling([(1.0, betas[0]), (2.0, betas[1])]).value
    assert log2(3.0) <= power <= log2(6.0)


@pytest.mark.slow
@pytest.mark.parametrize('omega, eta, tolerance', (
    (1.0, 0.4, 0.1),
    (2.0, 1.0, 0.2),
    (3.0, 1.6, 0.3),
))
def test_sine_well_exponents(omega, eta, tolerance):
    curve = _swept_curve(ProfileSpec(kind='sine', omega=omega), SWEEP, -pi / 2)
    windows = default_windows(curve, 'well')
    assert fit_eta(curve, windows['beyond_peak']).value == pytest.approx(eta, abs=tolerance)
    assert fit_eta(curve, windows['universal']).value == pytest.approx(0.2, abs=0.05)


@pytest.mark.slow
def test_sine_crest_exponent():
    curve = _swept_curve(ProfileSpec(kind='sine', omega=1.0), SWEEP, pi / 2)
    assert all(r < 1.0 for r in curve.ratios)
    windows = default_windows(curve, 'crest')
    assert fit_eta(curve, windows['beyond_dip']).value == pytest.approx(-0.13, abs=0.05)


@pytest.mark.slow
def test_sawtooth_exponents():
    profile = ProfileSpec(kind='sawtooth', wavelength=2.8)
    curve = _swept_curve(profile, SWEEP, 0.0)
    windows = default_windows(curve, 'well')
    assert fit_eta(curve, windows['beyond_peak']).value == pytest.approx(1.1, abs=0.2)
    assert fit_eta(curve, windows['toward_peak']).value == pytest.approx(-0.3, abs=0.1)
    assert fit_eta(curve, windows['universal']).value == pytest.approx(0.2, abs=0.05)
