from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from clifis.flow import FlowNetwork, max_flow


def test_single_arc():
    net = FlowNetwork(2, 0, 1)
    net.add_arc(0, 1, 3)
    assert max_flow(net) == (3, frozenset({0}))


def test_diamond():
    net = FlowNetwork(4, 0, 3)
    for u, v in [(0, 1), (1, 3), (0, 2), (2, 3)]:
        net.add_arc(u, v, 1)
    assert max_flow(net)[0] == 2


def test_rational_capacities():
    net = FlowNetwork(3, 0, 2)
    net.add_arc(0, 1, Fraction(1, 3))
    net.add_arc(1, 2, Fraction(1, 7))
    net.add_arc(0, 2, Fraction(1, 2))
    assert max_flow(net)[0] == Fraction(1, 7) + Fraction(1, 2)


def test_overflow_is_reported():
    net = FlowNetwork(2, 0, 1)
    net.add_arc(0, 1, 2**130)
    with pytest.raises(OverflowError):
        max_flow(net)


def test_bad_arcs_rejected():
    net = FlowNetwork(2, 0, 1)
    with pytest.raises(ValueError):
        net.add_arc(0, 1, -1)
    with pytest.raises(ValueError):
        net.add_arc(0, 5, 1)


@st.composite
def networks(draw):
    n = draw(st.integers(2, 8))
    arcs = draw(
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.integers(0, 20), st.integers(1, 6)),
            max_size=30,
        )
    )
    net = FlowNetwork(n, 0, n - 1)
    for u, v, num, den in arcs:
        if u != v:
            net.add_arc(u, v, Fraction(num, den))
    return net


@given(networks())
def test_matches_networkx(net):
    value, side = max_flow(net)
    h = nx.DiGraph()
    h.add_nodes_from(range(net.n_nodes))
    for u, v, c in net.arcs:
        c = float(c)
        if h.has_edge(u, v):
            h[u][v]["capacity"] += c
        else:
            h.add_edge(u, v, capacity=c)
    expected = nx.maximum_flow_value(h, net.source, net.sink)
    assert abs(float(value) - expected) < 1e-9
    # the returned side is a cut whose capacity equals the flow value
    assert net.source in side and net.sink not in side
    cut = sum(c for u, v, c in net.arcs if u in side and v not in side)
    assert cut == value
