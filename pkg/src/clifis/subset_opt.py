"""Exact minimisation of the Clifford cost ``f(V) = -w(E(V)) - sum_{i not in V} J_i``.

Three routes are provided:

* :func:`brute_force_min` enumerates all ``2^N`` subsets (the oracle).
* :func:`mincut_min` solves a project-selection min cut (production path).
* :func:`min_norm_point_min` runs the Fujishige-Wolfe minimum-norm-point
  algorithm on the base polytope (see :mod:`clifis.wolfe`).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from ._limits import check_size
from .errors import InternalCheckError
from .flow import FlowNetwork, max_flow
from .graphs import as_vertex_set, mask_to_set, subset_tables
from .ising import IsingInstance, cost


class Solver(str, enum.Enum):
    BRUTE = "brute"
    MINCUT = "mincut"
    WOLFE = "wolfe"


@dataclass(frozen=True)
class VertexSetSolution:
    vertex_set: frozenset[int]
    cost: Fraction
    solver: Solver
    certificate: Fraction | float | None = None
    # True/False when a brute-force tie check ran, None when not attempted
    degenerate: bool | None = None

    def to_dict(self) -> dict:
        cert = self.certificate
        return {
            "vertex_set": sorted(self.vertex_set),
            "cost": float(self.cost),
            "cost_exact": str(self.cost),
            "solver": self.solver.value,
            "certificate": None if cert is None else (str(cert) if isinstance(cert, Fraction) else cert),
            "degenerate": self.degenerate,
        }


def _scaled_costs(inst: IsingInstance) -> tuple[np.ndarray, int]:
    """Integer costs ``scale * f(mask)`` for every subset mask."""
    ew, vw, scale = inst.integer_weights()
    if (sum(ew) + sum(vw)) >= 1 << 62:
        raise OverflowError("scaled weights do not fit in 64-bit brute-force arithmetic")
    _, edge_w = subset_tables(inst.graph, ew)
    masks = np.arange(1 << inst.n, dtype=np.int64)
    outside = np.zeros(1 << inst.n, dtype=np.int64)
    for i, w in enumerate(vw):
        outside += (1 - ((masks >> i) & 1)) * w
    return -(edge_w + outside), scale


def optimal_masks(inst: IsingInstance) -> tuple[np.ndarray, Fraction]:
    """All minimising subset masks and the exact minimum, by enumeration."""
    check_size(inst.n, 22, "brute_force_min")
    costs, scale = _scaled_costs(inst)
    best = int(costs.min())
    return np.nonzero(costs == best)[0], Fraction(best, scale)


def brute_force_min(inst: IsingInstance) -> VertexSetSolution:
    """Global minimum over all subsets.

    Ties go to the smallest cardinality, then the lexicographically smallest
    sorted vertex tuple.
    """
    masks, best = optimal_masks(inst)
    sizes = np.array([bin(int(m)).count("1") for m in masks])
    small = masks[sizes == sizes.min()]
    chosen = min((tuple(sorted(mask_to_set(int(m)))) for m in small))
    return VertexSetSolution(frozenset(chosen), best, Solver.BRUTE, degenerate=len(masks) > 1)


def project_selection_network(inst: IsingInstance) -> tuple[FlowNetwork, list[int]]:
    """Closure network: source -> edge node (J_e), edge node -> endpoints (inf), vertex -> sink (J_i).

    Node layout: 0 source, 1 sink, then one node per vertex, then one per edge.
    Returns the network and the node id of each vertex.
    """
    n, m = inst.n, inst.graph.num_edges
    net = FlowNetwork(2 + n + m, 0, 1)
    vnode = [2 + i for i in range(n)]
    finite = sum(inst.edge_weight_list) + sum(inst.vertex_weight_list)
    # never saturated: exceeds every finite cut
    infinite = finite + 1
    for k, ((i, j), w) in enumerate(zip(inst.graph.edges, inst.edge_weight_list)):
        enode = 2 + n + k
        net.add_arc(0, enode, w)
        net.add_arc(enode, vnode[i], infinite)
        net.add_arc(enode, vnode[j], infinite)
    for i, w in enumerate(inst.vertex_weight_list):
        net.add_arc(vnode[i], 1, w)
    return net, vnode


def mincut_min(inst: IsingInstance) -> VertexSetSolution:
    """Minimise the cost through one max-flow computation.

    ``min_V f(V) = -sum_i J_i - (sum_e J_e - mincut)``; the minimiser is the
    set of vertex nodes on the source side of the minimal minimum cut.
    """
    net, vnode = project_selection_network(inst)
    value, side = max_flow(net)
    v = frozenset(i for i in range(inst.n) if vnode[i] in side)
    predicted = -sum(inst.vertex_weight_list) - (sum(inst.edge_weight_list) - value)
    actual = cost(inst, v)
    if predicted != actual:
        raise InternalCheckError(f"cut identity broken: predicted {predicted}, set cost {actual}")
    return VertexSetSolution(v, actual, Solver.MINCUT, certificate=value)


def marginal_gain(inst: IsingInstance, s: Iterable[int], v: int) -> Fraction:
    """``f(s + v) - f(s) = J_v - sum of J_uv over neighbours u of v in s``."""
    s = as_vertex_set(s, inst.n)
    if v in s:
        raise ValueError(f"vertex {v} is already in the set")
    gain = inst.vertex_weight_list[v]
    for (i, j), w in zip(inst.graph.edges, inst.edge_weight_list):
        if (i == v and j in s) or (j == v and i in s):
            gain -= w
    return gain


def min_norm_point_min(inst: IsingInstance, tolerance: float = 1e-10) -> VertexSetSolution:
    from .wolfe import minimize_cost

    return minimize_cost(inst, tolerance)


def solve(inst: IsingInstance, solver: Solver | str = Solver.MINCUT, check_degenerate: bool = True) -> VertexSetSolution:
    """Dispatch to one solver; flag ties by enumeration when affordable."""
    solver = Solver(solver)
    if solver is Solver.BRUTE:
        return brute_force_min(inst)
    sol = mincut_min(inst) if solver is Solver.MINCUT else min_norm_point_min(inst)
    if check_degenerate and inst.n <= 16:
        masks, _ = optimal_masks(inst)
        sol = VertexSetSolution(sol.vertex_set, sol.cost, sol.solver, sol.certificate, len(masks) > 1)
    return sol
