import itertools
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from clifis.errors import InfeasibleSizeError
from clifis.graphs import Graph, complete_graph, induced_edge_count, line_graph
from clifis.ising import (
    IsingInstance,
    cost,
    dense_hamiltonian,
    edge_function,
    edge_function_table,
    instance_from_json,
    instance_to_json,
    segment_cost,
    to_fraction,
)

from conftest import graphs, rational_g


def test_cost_examples():
    assert cost(IsingInstance(line_graph(3), Fraction(1, 2)), {0, 1}) == Fraction(-3, 2)


@given(graphs(), rational_g())
def test_cost_endpoints(g, field):
    inst = IsingInstance(g, field)
    assert cost(inst, ()) == -field * g.n
    assert cost(inst, range(g.n)) == -g.num_edges


def test_to_fraction_forms():
    assert to_fraction("8/9") == Fraction(8, 9)
    assert to_fraction("0.05") == Fraction(1, 20)
    assert to_fraction(0.05) == Fraction(1, 20)
    assert to_fraction(3) == 3


def test_instance_validation():
    with pytest.raises(ValueError):
        IsingInstance(line_graph(3), Fraction(-1))
    with pytest.raises(ValueError):
        IsingInstance(line_graph(3), 1, edge_weights={(0, 1): 0})
    with pytest.raises(ValueError):
        IsingInstance(line_graph(3), 1, vertex_weights={1: -1})


def test_unweighted_equivalence():
    g = line_graph(4)
    plain = IsingInstance(g, Fraction(3, 2))
    explicit = IsingInstance(g, Fraction(3, 2), edge_weights={e: 1 for e in g.edges}, vertex_weights={i: Fraction(3, 2) for i in range(4)})
    for k in range(5):
        for s in itertools.combinations(range(4), k):
            assert cost(plain, s) == cost(explicit, s)


def test_weighted_cost():
    inst = IsingInstance(line_graph(3), 0, edge_weights={(0, 1): 2, (1, 2): Fraction(1, 3)}, vertex_weights={0: 1, 1: 5, 2: Fraction(1, 2)})
    assert cost(inst, {0, 1}) == -2 - Fraction(1, 2)


def test_segment_cost_examples():
    assert segment_cost(IsingInstance(complete_graph(9), 4), 9, 36) == 36
    assert segment_cost(IsingInstance(line_graph(9), Fraction(8, 9)), 9, 8) == 8
    assert segment_cost(IsingInstance(line_graph(5), Fraction(7, 3)), 0, 0) == Fraction(35, 3)


def test_edge_function_examples():
    assert edge_function(complete_graph(5), 3) == (3, frozenset({0, 1, 2}))
    value, witness = edge_function(line_graph(9), 4)
    assert value == 3 and sorted(witness) == list(range(min(witness), min(witness) + 4))
    assert edge_function(line_graph(9), 1)[0] == 0
    assert edge_function(line_graph(9), 0)[0] == 0


@given(graphs(max_n=7))
def test_edge_function_table_matches_enumeration(g):
    table = edge_function_table(g)
    for n in range(g.n + 1):
        best = max(induced_edge_count(g, c) for c in itertools.combinations(range(g.n), n))
        assert table[n] == best == edge_function(g, n)[0]
        value, witness = edge_function(g, n)
        assert len(witness) == n and induced_edge_count(g, witness) == value


def test_edge_function_budget(monkeypatch):
    import clifis.ising as ising

    monkeypatch.setattr(ising, "ENUM_BUDGET", 10)
    with pytest.raises(InfeasibleSizeError):
        edge_function(complete_graph(10), 5)


@given(graphs(max_n=6), rational_g())
def test_cost_is_submodular(g, field):
    # f(A) + f(B) >= f(A | B) + f(A & B), i.e. standard submodularity
    inst = IsingInstance(g, field)
    subsets = [frozenset(c) for k in range(g.n + 1) for c in itertools.combinations(range(g.n), k)]
    f = {s: cost(inst, s) for s in subsets}
    for a in subsets:
        for b in subsets:
            assert f[a] + f[b] >= f[a | b] + f[a & b]


def test_opposite_inequality_fails_on_triangle():
    inst = IsingInstance(complete_graph(3), 1)
    a, b = {0, 1}, {1, 2}
    assert cost(inst, a) + cost(inst, b) > cost(inst, a | b) + cost(inst, a & b)


@given(graphs(max_n=7), rational_g())
def test_clifford_optimum_is_best_segment(g, field):
    inst = IsingInstance(g, field)
    table = edge_function_table(g)
    best_seg = max(segment_cost(inst, n, table[n]) for n in range(g.n + 1))
    brute = min(cost(inst, c) for k in range(g.n + 1) for c in itertools.combinations(range(g.n), k))
    assert brute == -best_seg


def test_dense_hamiltonian_examples():
    np.testing.assert_array_equal(dense_hamiltonian(IsingInstance(Graph(1, ()), 1)), [[0, -1], [-1, 0]])
    np.testing.assert_array_equal(dense_hamiltonian(IsingInstance(line_graph(2), 0)), np.diag([-1, 1, 1, -1]))
    low = np.linalg.eigvalsh(dense_hamiltonian(IsingInstance(line_graph(2), Fraction(3, 4))))[0]
    assert abs(low + math.sqrt(3.25)) < 1e-12


def test_dense_hamiltonian_guard(monkeypatch):
    monkeypatch.setenv("CLIFIS_MAX_N", "3")
    with pytest.raises(InfeasibleSizeError):
        dense_hamiltonian(IsingInstance(line_graph(4), 1))


@given(graphs(), rational_g())
def test_instance_json_round_trip(g, field):
    inst = IsingInstance(g, field)
    assert instance_from_json(instance_to_json(inst)) == inst


def test_weighted_instance_json_round_trip():
    inst = IsingInstance(line_graph(3), 0, edge_weights={(0, 1): 2, (1, 2): Fraction(1, 3)}, vertex_weights={0: 1, 1: 5, 2: Fraction(1, 2)})
    back = instance_from_json(instance_to_json(inst))
    assert back.edge_weight_list == inst.edge_weight_list
    assert back.vertex_weight_list == inst.vertex_weight_list
