"""
Tests for the momentum quadrature and the geometry factor alpha.
"""

from math import pi

import numpy as np
import pytest

from numerics.alpha import (alpha_sample, alpha_samples, analytic_planar_alpha,
                            analytic_planar_green, analytic_planar_integrand,
                            build_momentum_quadrature)
from numerics.energy import geometry_from_distance, rescaled_geometry
from numerics.lattice import build_schedule
from numerics.profile import planar, sine
from utils.constants import ALPHA_PLANAR
from utils.exceptions import ConfigError

from .oracle import k0, k1

SCHEDULE = build_schedule(0.1, 20)


def _sine_at(phase: float, h_over_a: float = 1.0):
    geometry = geometry_from_distance(sine(1.0, 1.0, phase), h_over_a)
    return rescaled_geometry(geometry).profile


def test_weights_sum_to_cutoff():
    quadrature = build_momentum_quadrature(8, 30.0)
    assert np.sum(quadrature.weights) == pytest.approx(30.0, abs=1e-12)
    assert quadrature.size == 8


def test_nodes_are_distinct_and_interior():
    quadrature = build_momentum_quadrature(64, 30.0)
    nodes = quadrature.nodes
    assert np.all(np.diff(nodes) > 0)
    assert nodes[0] > 0.0
    assert nodes[-1] < 30.0


def test_rule_integrates_exponential_moment():
    quadrature = build_momentum_quadrature(64, 30.0)
    q = quadrature.nodes
    value = float(np.sum(quadrature.weights * q * np.exp(-2.0 * q)))
    assert value == pytest.approx(0.25, abs=1e-10)


@pytest.mark.parametrize('n_q, q_max', ((7, 30.0), (64, 5.0)))
def test_rejects_small_rules(n_q, q_max):
    with pytest.raises(ConfigError):
        build_momentum_quadrature(n_q, q_max)


def test_analytic_integrand_value():
    expected = 2.0 * (k1(1.0) / pi) * (k0(1.0) / (2.0 * pi))
    assert analytic_planar_integrand(1.0, 0.0) == pytest.approx(expected, rel=1e-12)
    assert analytic_planar_green(1.0, 0.0) == pytest.approx(k1(1.0) / pi, rel=1e-12)


def test_analytic_integrand_is_even_and_decays():
    xs = np.array([0.3, 1.0, 4.0])
    assert np.array_equal(
        analytic_planar_integrand(1.7, xs), analytic_planar_integrand(1.7, -xs)
    )
    assert np.all(analytic_planar_integrand(1.7, xs) > 0)
    for q in (10.0, 20.0):
        assert analytic_planar_integrand(q, 0.0) < np.exp(-2.0 * q) * q


def test_analytic_planar_alpha_is_one_over_four_pi():
    assert analytic_planar_alpha() == pytest.approx(1.0 / (4.0 * pi), abs=1e-6)


def test_planar_sample_is_positive_and_close(small_plan):
    quadrature = build_momentum_quadrature(small_plan.n_q, small_plan.q_max)
    sample = alpha_sample(planar(), SCHEDULE, 20, 0.02, quadrature)
    assert sample.nx == 20
    assert sample.inv_nx == pytest.approx(0.05)
    assert 0.3 * ALPHA_PLANAR < sample.alpha < 1.5 * ALPHA_PLANAR


def test_executor_gives_identical_samples(small_plan, pool):
    quadrature = build_momentum_quadrature(small_plan.n_q, small_plan.q_max)
    points = [(20, 0.02), (24, 0.02), (20, 0.025), (24, 0.025)]
    serial = alpha_samples(planar(), SCHEDULE, points, quadrature)
    pooled = alpha_samples(planar(), SCHEDULE, points, quadrature, pool)
    assert [s.alpha for s in serial] == [s.alpha for s in pooled]
    assert [(s.nx, s.epsilon) for s in pooled] == points


def test_doubling_momentum_nodes_barely_moves_alpha():
    coarse = alpha_sample(planar(), SCHEDULE, 20, 0.02, build_momentum_quadrature(128, 30.0))
    fine = alpha_sample(planar(), SCHEDULE, 20, 0.02, build_momentum_quadrature(256, 30.0))
    # Kinks where q * distance crosses eps limit the rule to algebraic convergence
    assert coarse.alpha == pytest.approx(fine.alpha, rel=2e-5)


def test_trough_and_crest_bracket_the_plane(small_plan):
    quadrature = build_momentum_quadrature(small_plan.n_q, small_plan.q_max)
    well = alpha_sample(_sine_at(-pi / 2), SCHEDULE, 20, 0.02, quadrature)
    flat = alpha_sample(planar(), SCHEDULE, 20, 0.02, quadrature)
    crest = alpha_sample(_sine_at(pi / 2), SCHEDULE, 20, 0.02, quadrature)
    assert well.alpha > flat.alpha > crest.alpha
