"""Tests for the Ising reduction, cut evaluation and the exhaustive oracle."""
import itertools
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import numpy as np
import pytest

from app.controllers.graph_controller import gen_erdos_renyi, gen_hypercube
from app.controllers.ising_controller import (
    OracleSizeError,
    brute_force_maxcut,
    configuration_from_spins,
    cut_value,
    hamiltonian,
    maxcut_to_ising,
    spins_from_phases,
    total_coupling_energy,
)
from app.models import Graph, as_spins
from app.utils.graph_io import parse_edge_list

TRIANGLE = parse_edge_list("3 3\n1 2\n2 3\n1 3")


def test_triangle_hamiltonian():
    model = maxcut_to_ising(TRIANGLE)
    assert [c[2] for c in model.couplings] == [-1.0, -1.0, -1.0]
    assert hamiltonian(model, [1, 1, 1]) == 3
    assert hamiltonian(model, [1, 1, -1]) == -1


def test_weighted_reduction():
    model = maxcut_to_ising(parse_edge_list("2 1\n1 2 5"))
    assert model.couplings == ((0, 1, -5.0),)


def test_global_flip_symmetry():
    rng = np.random.default_rng(0)
    g = gen_erdos_renyi(10, 0.5, seed=2)
    model = maxcut_to_ising(g)
    for _ in range(20):
        s = rng.choice([-1, 1], size=g.n)
        assert hamiltonian(model, s) == hamiltonian(model, -s)


def test_cut_values():
    assert cut_value(TRIANGLE, [1, 1, -1]) == 2
    q3 = gen_hypercube(3)
    parity = [1 if bin(v).count("1") % 2 == 0 else -1 for v in range(8)]
    assert cut_value(q3, parity) == 12


def test_coupling_energy_identity():
    rng = np.random.default_rng(1)
    for seed in range(1000):
        g = gen_erdos_renyi(int(rng.integers(2, 15)), 0.4, seed=seed)
        s = rng.choice([-1, 1], size=g.n)
        assert total_coupling_energy(g, s) == g.num_edges - 2 * cut_value(g, s)
        assert hamiltonian(maxcut_to_ising(g), s) == pytest.approx(g.total_weight() - 2 * cut_value(g, s))


def test_ising_and_coupling_objectives_share_minimizers():
    for seed in range(5):
        g = gen_erdos_renyi(7, 0.5, seed=seed)
        model = maxcut_to_ising(g)
        configs = [np.array(c) for c in itertools.product([-1, 1], repeat=g.n)]
        h = np.array([hamiltonian(model, s) for s in configs])
        a = np.array([total_coupling_energy(g, s) for s in configs])
        assert set(np.flatnonzero(h == h.min())) == set(np.flatnonzero(a == a.min()))


def test_as_spins_validation():
    assert as_spins([1, -1]).dtype == np.int8
    with pytest.raises(ValueError):
        as_spins([1, 0])
    with pytest.raises(ValueError):
        as_spins([1, -1], n=3)


def test_spins_from_phases():
    assert spins_from_phases([0.0, np.pi, 0.0]).tolist() == [1, -1, 1]
    assert spins_from_phases([np.pi / 2]).tolist() == [1]


def test_configuration_from_spins_recovers_partition():
    s = np.array([1, -1, -1, 1])
    theta = configuration_from_spins(s)
    assert theta.tolist() == [0.0, np.pi, np.pi, 0.0]
    assert spins_from_phases(theta).tolist() == s.tolist()


def test_oracle_small_graphs():
    k3 = brute_force_maxcut(TRIANGLE)
    assert k3.value == 2
    assert not k3.unique
    assert k3.optimal_count == 3

    edge = brute_force_maxcut(parse_edge_list("2 1\n1 2"))
    assert edge.value == 1
    assert edge.unique

    q3 = brute_force_maxcut(gen_hypercube(3))
    assert q3.value == 12
    assert cut_value(gen_hypercube(3), q3.spins) == 12


def test_oracle_dominates_any_cut():
    rng = np.random.default_rng(5)
    g = gen_erdos_renyi(12, 0.3, seed=11)
    best = brute_force_maxcut(g).value
    for _ in range(100):
        assert cut_value(g, rng.choice([-1, 1], size=g.n)) <= best


def test_oracle_edgeless_graph():
    assert brute_force_maxcut(Graph(n=3)).value == 0.0


def test_oracle_refuses_large_graphs():
    with pytest.raises(OracleSizeError):
        brute_force_maxcut(Graph(n=31))
