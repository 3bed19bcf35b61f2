"""Densest subgraph, two-segmented classification, extreme-regime thresholds."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .flow import FlowNetwork, max_flow
from .graphs import Graph, induced_edge_count
from .ising import edge_function_table


@dataclass(frozen=True)
class DensityResult:
    density: Fraction
    vertex_set: frozenset[int]


@dataclass(frozen=True)
class SegmentationReport:
    two_segmented: bool
    transition_value: Fraction | None
    max_density: Fraction
    densest_set: frozenset[int]

    def to_dict(self) -> dict:
        tv = self.transition_value
        return {
            "two_segmented": self.two_segmented,
            "transition_value": None if tv is None else str(tv),
            "transition_value_float": None if tv is None else float(tv),
            "max_density": str(self.max_density),
            "densest_set": sorted(self.densest_set),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _best_excess(g: Graph, lam: Fraction) -> tuple[Fraction, frozenset[int]]:
    """``max_S |E(S)| - lam |S|`` and the minimal maximiser, via one min cut."""
    n, m = g.n, g.num_edges
    net = FlowNetwork(2 + n + m, 0, 1)
    infinite = m + lam * n + 1
    for k, (i, j) in enumerate(g.edges):
        e = 2 + n + k
        net.add_arc(0, e, 1)
        net.add_arc(e, 2 + i, infinite)
        net.add_arc(e, 2 + j, infinite)
    for i in range(n):
        net.add_arc(2 + i, 1, lam)
    value, side = max_flow(net)
    return m - value, frozenset(i for i in range(n) if 2 + i in side)


def densest_subgraph(g: Graph) -> DensityResult:
    """Exact maximum of ``|E(S)| / |S|`` over nonempty ``S``.

    Binary search over rational densities.  The invariant is that the optimum
    lies in ``[lo, hi]`` and ``lo`` is attained by the current witness.  A
    probe at ``lam`` either returns a set denser than ``lam`` (raise ``lo`` to
    its density) or proves nothing beats ``lam`` (lower ``hi``).  Two distinct
    densities with denominators at most N differ by at least ``1/N^2``, so the
    search ends once ``hi - lo`` drops below that.
    """
    if g.num_edges == 0:
        raise ValueError("densest subgraph of an edgeless graph is ambiguous")
    n = g.n
    witness = frozenset(range(n))
    lo = Fraction(g.num_edges, n)
    hi = Fraction(n - 1, 2)
    gap = Fraction(1, n * n)
    while hi - lo >= gap:
        lam = (lo + hi) / 2
        excess, s = _best_excess(g, lam)
        if excess > 0:
            witness = s
            lo = Fraction(induced_edge_count(g, s), len(s))
        else:
            hi = lam
    return DensityResult(lo, witness)


def two_segmented(g: Graph) -> SegmentationReport:
    dr = densest_subgraph(g)
    whole = Fraction(g.num_edges, g.n)
    seg = dr.density == whole
    return SegmentationReport(seg, whole if seg else None, dr.density, dr.vertex_set)


def extreme_thresholds(g: Graph) -> tuple[Fraction, Fraction]:
    """Field strengths bounding the intermediate regime.

    For ``g <= lower`` the full vertex set is optimal, for ``g >= upper`` the
    empty set is.  Uses the enumerated edge function.
    """
    e = edge_function_table(g)
    n = g.n
    lower = min(Fraction(e[n] - e[k], n - k) for k in range(n))
    upper = max(Fraction(e[k], k) for k in range(1, n + 1))
    return lower, upper
