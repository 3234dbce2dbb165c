"""Tests for random-line rounding, expected cuts and certificates."""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import numpy as np
import pytest

from app.controllers.coupling_controller import cosine, quadratic_g2, ratio_over_interval
from app.controllers.dynamics_controller import energy_penalized, random_phases
from app.controllers.graph_controller import gen_erdos_renyi, gen_hypercube
from app.controllers.ising_controller import brute_force_maxcut, configuration_from_spins, maxcut_to_ising
from app.controllers.rounding_controller import (
    best_line_round,
    certify_lower_bound,
    edge_angle_interval,
    expected_cut,
    monte_carlo_cut,
    random_line_round,
)
from app.models import Graph
from app.utils.graph_io import parse_edge_list

Q3 = gen_hypercube(3)
TRIANGLE = parse_edge_list("3 3\n1 2\n2 3\n1 3")


def _theta_star(graph):
    return configuration_from_spins(brute_force_maxcut(graph).spins)


def test_expected_cut_of_binarized_optimum():
    assert expected_cut(_theta_star(Q3), Q3) == pytest.approx(12.0)
    assert expected_cut(np.full(8, 1.3), Q3) == 0.0


def test_expected_cut_dimension_check():
    with pytest.raises(ValueError):
        expected_cut(np.zeros(3), Q3)


def test_binarized_rounding_is_exact():
    theta = _theta_star(Q3)
    for seed in range(20):
        assert random_line_round(theta, Q3, seed=seed).cut == 12


def test_rounding_is_seeded():
    theta = random_phases(8, seed=1)
    assert random_line_round(theta, Q3, seed=7) == random_line_round(theta, Q3, seed=7)
    assert 0 <= random_line_round(theta, Q3, seed=7).line_angle < np.pi


def test_single_edge_separation_probability():
    edge = parse_edge_list("2 1\n1 2")
    estimate = monte_carlo_cut(np.array([0.0, np.pi / 2]), edge, trials=100_000, seed=0)
    assert estimate.mean == pytest.approx(0.5, abs=0.01)


def test_monte_carlo_matches_expected_cut():
    rng = np.random.default_rng(3)
    for trial in range(10):
        g = gen_erdos_renyi(12, 0.4, seed=trial)
        theta = rng.uniform(0, 2 * np.pi, size=g.n)
        estimate = monte_carlo_cut(theta, g, trials=100_000, seed=trial)
        assert abs(estimate.mean - expected_cut(theta, g)) <= 3 * estimate.standard_error + 1e-12


def test_random_line_round_agrees_with_vectorized_estimate():
    g = gen_erdos_renyi(8, 0.5, seed=2)
    theta = random_phases(g.n, seed=2)
    cuts = [random_line_round(theta, g, seed=[5, k]).cut for k in range(4000)]
    assert np.mean(cuts) == pytest.approx(expected_cut(theta, g), abs=4 * np.std(cuts) / np.sqrt(4000))


def test_best_line_round_is_at_least_any_draw():
    g = gen_erdos_renyi(10, 0.5, seed=4)
    theta = random_phases(g.n, seed=4)
    best = best_line_round(theta, g, trials=25, seed=[9])
    draws = [random_line_round(theta, g, seed=[9, k]).cut for k in range(25)]
    assert best.cut == max(draws)
    assert best_line_round(theta, g, trials=0) is None


def test_monte_carlo_needs_two_trials():
    with pytest.raises(ValueError):
        monte_carlo_cut(np.zeros(8), Q3, trials=1)


def test_edge_angle_interval():
    assert edge_angle_interval(_theta_star(Q3), Q3) == pytest.approx((np.pi, np.pi))
    lo, hi = edge_angle_interval(_theta_star(TRIANGLE), TRIANGLE)
    assert (lo, hi) == pytest.approx((0.0, np.pi))
    lo, hi = edge_angle_interval(random_phases(8, seed=0), Q3)
    assert 0.0 <= lo <= hi <= np.pi
    with pytest.raises(ValueError):
        edge_angle_interval(np.zeros(2), Graph(n=2))


def test_expected_cut_never_beats_the_oracle():
    for seed in range(5):
        g = gen_erdos_renyi(12, 0.4, seed=seed)
        best = brute_force_maxcut(g).value
        for k in range(20):
            assert expected_cut(random_phases(g.n, seed=[seed, k]), g) <= best + 1e-9


def test_certificate_at_the_optimum():
    cert = certify_lower_bound(_theta_star(Q3), Q3, quadratic_g2())
    assert cert.ratio_used == pytest.approx(1.0)
    assert cert.energy == pytest.approx(-12.0)
    assert cert.lower_bound == pytest.approx(12.0)
    assert cert.interval == pytest.approx((np.pi, np.pi))


def test_certificate_bounds_the_expected_cut():
    rng = np.random.default_rng(8)
    graphs = [gen_erdos_renyi(10, 0.4, seed=s) for s in range(10)]
    graphs = [g for g in graphs if g.edges]
    for trial in range(1000):
        g = graphs[trial % len(graphs)]
        theta = rng.uniform(0, 2 * np.pi, size=g.n)
        exp_cut = expected_cut(theta, g)
        assert exp_cut >= certify_lower_bound(theta, g, quadratic_g2()).lower_bound - 1e-9
        for mu in (0.0, 1.0):
            cert = certify_lower_bound(theta, g, cosine(), mu=mu)
            assert exp_cut >= cert.lower_bound - 1e-9


def test_penalized_certificate_uses_the_penalized_energy():
    g = gen_erdos_renyi(10, 0.4, seed=1)
    theta = random_phases(g.n, seed=1)
    cert = certify_lower_bound(theta, g, cosine(), mu=1.0)
    assert cert.energy == pytest.approx(energy_penalized(theta, maxcut_to_ising(g), 1.0))
    ratio = ratio_over_interval(cosine(), *edge_angle_interval(theta, g))
    assert cert.lower_bound == pytest.approx(ratio * (g.total_weight() - cert.energy) / 2)
    assert cert.mu == 1.0


def test_certificate_reaches_max_cut_at_the_global_minimum():
    for seed in range(5):
        g = gen_erdos_renyi(9, 0.5, seed=20 + seed)
        if not g.edges:
            continue
        cert = certify_lower_bound(_theta_star(g), g, quadratic_g2())
        assert cert.lower_bound >= brute_force_maxcut(g).value - 1e-9


def test_certificate_requires_minimum_at_pi():
    shifted = cosine().model_copy(update={"name": "half", "value_fn": lambda x: 0.5 * np.cos(x)})
    with pytest.raises(ValueError):
        certify_lower_bound(random_phases(8, seed=0), Q3, shifted)
