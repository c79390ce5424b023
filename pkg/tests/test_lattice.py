"""
Tests for the midpoint lattice and the continuum schedule.
"""

import numpy as np
import pytest

from numerics.lattice import build_lattice, build_schedule, uniform_lattice
from utils.exceptions import ConfigError


def test_default_schedule_reference_box():
    schedule = build_schedule(0.05, 80)
    assert schedule.half_length(80) == pytest.approx(2.0)
    assert schedule.spacing(80) == pytest.approx(0.05)


def test_quadrupling_sites_halves_spacing_and_doubles_box():
    schedule = build_schedule(0.05, 80)
    assert schedule.spacing(320) == pytest.approx(0.5 * schedule.spacing(80))
    assert schedule.half_length(320) == pytest.approx(2.0 * schedule.half_length(80))


def test_lattice_spacing_is_consistent_with_schedule():
    schedule = build_schedule(0.05, 80)
    lattice = build_lattice(schedule, 100)
    assert lattice.spacing == pytest.approx(schedule.spacing(100))
    assert lattice.nodes[0] == pytest.approx(-lattice.half_length + 0.5 * lattice.spacing)
    assert np.allclose(np.diff(lattice.nodes), lattice.spacing)


def test_nodes_are_mirror_symmetric_and_avoid_origin():
    lattice = uniform_lattice(40, 1.7)
    assert np.array_equal(lattice.nodes, -lattice.nodes[::-1])
    assert not np.any(lattice.nodes == 0.0)
    assert np.all(np.abs(lattice.nodes) < lattice.half_length)


def test_nodes_are_read_only():
    lattice = uniform_lattice(4, 1.0)
    with pytest.raises(ValueError):
        lattice.nodes[0] = 0.0


def test_half_length_override():
    schedule = build_schedule(0.05, 80)
    lattice = build_lattice(schedule, 80, half_length=5.0)
    assert lattice.half_length == 5.0
    assert lattice.spacing == pytest.approx(0.125)


@pytest.mark.parametrize('nx', (81, 60))
def test_rejects_odd_or_small_site_counts(nx):
    with pytest.raises(ConfigError):
        build_lattice(build_schedule(0.05, 80), nx)


@pytest.mark.parametrize('a0x, n0x', ((0.0, 80), (0.05, 3), (0.05, 0)))
def test_rejects_bad_schedule(a0x, n0x):
    with pytest.raises(ConfigError):
        build_schedule(a0x, n0x)


def test_rejects_empty_lattice():
    with pytest.raises(ConfigError):
        uniform_lattice(0, 1.0)
    with pytest.raises(ConfigError):
        uniform_lattice(2, -1.0)
