"""
Tests for geometry conventions and the Casimir-Polder energy.
"""

from dataclasses import replace
from math import pi

import pytest

from dataclass.config import NumericalPlan
from numerics.energy import (casimir_polder_energy, geometry_from_distance,
                             geometry_from_mean_height, normalized_ratio,
                             reference_alpha, rescaled_geometry)
from numerics.profile import height, planar, sine
from utils.exceptions import ConfigError, DomainError, GeometryError, ProtocolError


def test_distance_follows_phase():
    trough = geometry_from_mean_height(sine(1.0, 1.0, -pi / 2), 4.0)
    crest = geometry_from_mean_height(sine(1.0, 1.0, pi / 2), 4.0)
    assert trough.distance == pytest.approx(5.0)
    assert crest.distance == pytest.approx(3.0)
    assert trough.phase == pytest.approx(-pi / 2)


def test_mean_rescaling_of_a_trough():
    geometry = geometry_from_mean_height(sine(1.0, 1.0, -pi / 2), 2.0, 'mean')
    rescaled = rescaled_geometry(geometry)
    assert geometry.distance == pytest.approx(3.0)
    assert rescaled.profile.amplitude == pytest.approx(0.5)
    assert rescaled.profile.omega == pytest.approx(2.0)
    assert rescaled.scale == pytest.approx(2.0)
    assert rescaled.alpha_factor == pytest.approx(2.25)


def test_normal_rescaling_puts_the_surface_point_at_zero():
    geometry = geometry_from_distance(sine(1.0, 1.0, -pi / 2), 3.0)
    rescaled = rescaled_geometry(geometry)
    assert rescaled.scale == pytest.approx(3.0)
    assert rescaled.alpha_factor == 1.0
    assert height(rescaled.profile, 0.0) == pytest.approx(0.0, abs=1e-15)
    assert height(rescaled.profile, pi / 3) == pytest.approx(2.0 / 3.0)


def test_planar_rescaling():
    rescaled = rescaled_geometry(geometry_from_mean_height(planar(), 3.0, 'mean'))
    assert rescaled.profile.is_planar
    assert height(rescaled.profile, 0.7) == 0.0


def test_crest_contact_is_a_geometry_error():
    with pytest.raises(GeometryError):
        geometry_from_mean_height(sine(1.0, 1.0, pi / 2), 1.0)
    with pytest.raises(GeometryError):
        geometry_from_distance(planar(), 0.0)


def test_mean_rescaling_needs_sphere_above_zero_line():
    geometry = geometry_from_distance(sine(1.0, 1.0, -pi / 2), 0.5, 'mean')
    assert geometry.mean_height == pytest.approx(-0.5)
    with pytest.raises(GeometryError):
        rescaled_geometry(geometry)


def test_unknown_rescale_mode():
    with pytest.raises(ConfigError):
        geometry_from_distance(planar(), 1.0, 'median')


def test_planar_energy():
    result = casimir_polder_energy(1.0 / (4.0 * pi), 2.0)
    assert result.e_scaled == pytest.approx(-1.0 / (8.0 * pi))
    assert result.energy == 0.0
    assert result.energy_label.endswith('hbar c r / H^2')


def test_energy_scales_with_alpha_and_distance():
    base = casimir_polder_energy(0.08, 2.0, radius=0.1)
    assert casimir_polder_energy(0.16, 2.0, radius=0.1).energy == pytest.approx(2 * base.energy)
    assert casimir_polder_energy(0.08, 4.0, radius=0.1).energy == pytest.approx(
        base.energy / 4.0
    )
    assert base.energy < 0
    assert base.energy_label.endswith('hbar c')


def test_large_radius_warns(caplog):
    casimir_polder_energy(0.08, 1.0, radius=0.5)
    assert 'r/H' in caplog.text


@pytest.mark.parametrize('alpha0, distance, radius', (
    (0.0, 1.0, 0.0), (0.08, -1.0, 0.0), (0.08, 1.0, -0.1)
))
def test_energy_domain(alpha0, distance, radius):
    with pytest.raises(DomainError):
        casimir_polder_energy(alpha0, distance, radius)


def test_ratio_against_baseline():
    assert normalized_ratio(0.0797, 0.0797) == 1.0
    result = casimir_polder_energy(0.088, 1.0, alpha0_planar=0.08)
    assert result.ratio == pytest.approx(1.1)


def test_ratio_rejects_mixed_plans():
    plan = NumericalPlan()
    other = replace(plan, n_q=32)
    assert normalized_ratio(0.08, 0.08, plan, replace(plan)) == 1.0
    with pytest.raises(ProtocolError):
        normalized_ratio(0.08, 0.08, plan, other)
    with pytest.raises(DomainError):
        normalized_ratio(-0.08, 0.08)


def test_reference_alpha_keeps_the_energy():
    alpha_h = 0.1
    alpha_ref = reference_alpha(alpha_h, 5.0, 4.0)
    assert alpha_ref == pytest.approx(0.064)
    assert alpha_ref / 4.0 ** 2 == pytest.approx(alpha_h / 5.0 ** 2)
    assert reference_alpha(alpha_ref, 4.0, 5.0) == pytest.approx(alpha_h)
    with pytest.raises(DomainError):
        reference_alpha(alpha_h, 0.0, 4.0)
