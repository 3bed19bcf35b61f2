"""Rescaled transverse-field Ising instances and their Clifford cost function.

The Hamiltonian on a graph is ``H = -sum_e J_e Z_i Z_j - sum_i J_i X_i``.  In
the unweighted case ``J_e = 1`` and ``J_i = g``.  Vertex weights in weighted
instances are taken as already rescaled, i.e. they replace ``g`` outright.

Bit convention: qubit 0 is the least significant bit of a basis index, and
bit value 0 is the +1 eigenstate of Z.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Mapping

import numpy as np

from ._limits import check_size
from .errors import InfeasibleSizeError
from .graphs import (
    Graph,
    as_vertex_set,
    graph_from_dict,
    graph_to_dict,
    induced_edge_count,
    subset_tables,
)

Number = int | float | str | Fraction


def to_fraction(value: Number) -> Fraction:
    """Exact rational from ``"8/9"``, ``"0.889"``, an int, float or Fraction.

    Floats go through their shortest repr, so ``0.1`` becomes ``1/10``.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"non-finite value {value}")
        return Fraction(repr(value))
    return Fraction(str(value).strip())


@dataclass(frozen=True)
class IsingInstance:
    graph: Graph
    g: Fraction = Fraction(0)
    edge_weights: Mapping[tuple[int, int], Fraction] | None = None
    vertex_weights: Mapping[int, Fraction] | None = None
    _edge_w: tuple[Fraction, ...] = field(init=False, repr=False, compare=False)
    _vertex_w: tuple[Fraction, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        g = to_fraction(self.g)
        if g < 0:
            raise ValueError(f"g must be nonnegative, got {g}")
        object.__setattr__(self, "g", g)

        ew = []
        given = {}
        if self.edge_weights is not None:
            given = {tuple(sorted(map(int, e))): to_fraction(w) for e, w in self.edge_weights.items()}
            unknown = set(given) - set(self.graph.edges)
            if unknown:
                raise ValueError(f"weights given for non-edges {sorted(unknown)}")
        for e in self.graph.edges:
            w = given.get(e, Fraction(1))
            if w <= 0:
                raise ValueError(f"edge weight for {e} must be positive, got {w} (delete zero-weight edges)")
            ew.append(w)

        vw = []
        vgiven = {}
        if self.vertex_weights is not None:
            vgiven = {int(i): to_fraction(w) for i, w in self.vertex_weights.items()}
            if any(i < 0 or i >= self.graph.n for i in vgiven):
                raise ValueError("vertex weight given for a vertex outside the graph")
        for i in range(self.graph.n):
            w = vgiven.get(i, g)
            if w < 0:
                raise ValueError(f"vertex weight for {i} must be nonnegative, got {w}")
            vw.append(w)
        object.__setattr__(self, "_edge_w", tuple(ew))
        object.__setattr__(self, "_vertex_w", tuple(vw))

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def g_float(self) -> float:
        return float(self.g)

    @property
    def is_weighted(self) -> bool:
        return any(w != 1 for w in self._edge_w) or any(w != self.g for w in self._vertex_w)

    @property
    def edge_weight_list(self) -> tuple[Fraction, ...]:
        """Edge weights aligned with ``graph.edges``."""
        return self._edge_w

    @property
    def vertex_weight_list(self) -> tuple[Fraction, ...]:
        return self._vertex_w

    def with_g(self, g: Number) -> "IsingInstance":
        return IsingInstance(self.graph, to_fraction(g), self.edge_weights, self.vertex_weights)

    def integer_weights(self) -> tuple[list[int], list[int], int]:
        """Edge and vertex weights scaled to integers by the LCM of denominators.

        Returns ``(edge_ints, vertex_ints, scale)`` with ``weight = int / scale``.
        """
        scale = 1
        for w in self._edge_w + self._vertex_w:
            scale = math.lcm(scale, w.denominator)
        ew = [int(w * scale) for w in self._edge_w]
        vw = [int(w * scale) for w in self._vertex_w]
        return ew, vw, scale


def cost(inst: IsingInstance, v: Iterable[int]) -> Fraction:
    """Energy of the Clifford witness for vertex set ``v``.

    ``-sum_{e in E(v)} J_e - sum_{i not in v} J_i``.
    """
    v = as_vertex_set(v, inst.n)
    total = Fraction(0)
    for (i, j), w in zip(inst.graph.edges, inst.edge_weight_list):
        if i in v and j in v:
            total -= w
    for i, w in enumerate(inst.vertex_weight_list):
        if i not in v:
            total -= w
    return total


def segment_cost(inst: IsingInstance, n: int, edge_fn_value: int) -> Fraction:
    """``C(n) = E(n) + g (N - n)``; the cost of an n-optimal set is ``-C(n)``."""
    if not 0 <= n <= inst.n:
        raise ValueError(f"n must lie in [0, {inst.n}], got {n}")
    return Fraction(edge_fn_value) + inst.g * (inst.n - n)


ENUM_BUDGET = 5_000_000


def edge_function(g: Graph, n: int) -> tuple[int, frozenset[int]]:
    """Most induced edges over vertex sets of size at most ``n``, by enumeration.

    The witness has exactly ``n`` vertices (induced edge count is monotone) and
    is the lexicographically first maximiser in ``combinations`` order.
    Raises :class:`InfeasibleSizeError` rather than approximating.
    """
    if not 0 <= n <= g.n:
        raise ValueError(f"n must lie in [0, {g.n}], got {n}")
    check_size(g.n, 24, "edge_function")
    if comb(g.n, n) > ENUM_BUDGET:
        raise InfeasibleSizeError(f"C({g.n}, {n}) subsets exceed the enumeration budget {ENUM_BUDGET}")
    best, witness = -1, frozenset()
    for s in combinations(range(g.n), n):
        c = induced_edge_count(g, s)
        if c > best:
            best, witness = c, frozenset(s)
    return best, witness


def edge_function_table(g: Graph) -> list[int]:
    """``[E(0), E(1), ..., E(N)]`` from one pass over all ``2^N`` subsets."""
    check_size(g.n, 22, "edge_function_table")
    sizes, counts = subset_tables(g)
    table = np.full(g.n + 1, -1, dtype=np.int64)
    np.maximum.at(table, sizes, counts)
    return [int(x) for x in np.maximum.accumulate(table)]


def diagonal_energies(inst: IsingInstance) -> np.ndarray:
    """``-sum_e J_e s_i s_j`` for every basis index, ``s_k = 1 - 2 * bit_k``."""
    dim = 1 << inst.n
    idx = np.arange(dim, dtype=np.int64)
    diag = np.zeros(dim)
    for (i, j), w in zip(inst.graph.edges, inst.edge_weight_list):
        parity = ((idx >> i) ^ (idx >> j)) & 1
        diag -= float(w) * (1.0 - 2.0 * parity)
    return diag


def dense_hamiltonian(inst: IsingInstance) -> np.ndarray:
    """Dense real symmetric matrix of H in the computational basis."""
    check_size(inst.n, 12, "dense_hamiltonian")
    dim = 1 << inst.n
    h = np.diag(diagonal_energies(inst))
    idx = np.arange(dim)
    for i, w in enumerate(inst.vertex_weight_list):
        h[idx, idx ^ (1 << i)] -= float(w)
    return h


def instance_to_dict(inst: IsingInstance) -> dict:
    d = {"graph": graph_to_dict(inst.graph), "g": str(inst.g)}
    if inst.edge_weights is not None:
        d["edge_weights"] = [[i, j, str(w)] for (i, j), w in zip(inst.graph.edges, inst.edge_weight_list)]
    if inst.vertex_weights is not None:
        d["vertex_weights"] = [str(w) for w in inst.vertex_weight_list]
    return d


def instance_from_dict(d: dict) -> IsingInstance:
    graph = graph_from_dict(d["graph"])
    ew = d.get("edge_weights")
    if isinstance(ew, list):
        ew = {(int(i), int(j)): to_fraction(w) for i, j, w in ew}
    elif isinstance(ew, dict):
        ew = {tuple(int(x) for x in k.split(",")): to_fraction(w) for k, w in ew.items()}
    vw = d.get("vertex_weights")
    if isinstance(vw, list):
        vw = {i: to_fraction(w) for i, w in enumerate(vw)}
    elif isinstance(vw, dict):
        vw = {int(k): to_fraction(w) for k, w in vw.items()}
    return IsingInstance(graph, to_fraction(d.get("g", 0)), ew, vw)


def instance_to_json(inst: IsingInstance) -> str:
    return json.dumps(instance_to_dict(inst))


def instance_from_json(text: str) -> IsingInstance:
    return instance_from_dict(json.loads(text))


__all__ = [
    "IsingInstance",
    "cost",
    "dense_hamiltonian",
    "diagonal_energies",
    "edge_function",
    "edge_function_table",
    "instance_from_dict",
    "instance_from_json",
    "instance_to_dict",
    "instance_to_json",
    "segment_cost",
    "to_fraction",
]
