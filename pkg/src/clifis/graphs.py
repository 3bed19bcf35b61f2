"""Undirected simple graphs over qubit-labelled vertices.

Vertices are the integers ``0..n-1`` and vertex ``i`` is qubit ``i``.  Graphs
are immutable; every edge is stored as a sorted pair and the edge tuple is kept
in lexicographic order so that two equal graphs compare and serialise equally.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from importlib import resources
from itertools import combinations
from pathlib import Path
from typing import Iterable

import numpy as np

Edge = tuple[int, int]
VertexSet = frozenset


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        canon = set()
        for e in self.edges:
            i, j = (int(e[0]), int(e[1]))
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"edge {(i, j)} has an endpoint outside [0, {self.n})")
            pair = (min(i, j), max(i, j))
            if pair in canon:
                raise ValueError(f"duplicate edge {pair}")
            canon.add(pair)
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        for row in adj:
            row.sort()
        return adj

    def degree(self) -> list[int]:
        return [len(a) for a in self.neighbors()]

    def relabel(self, perm) -> "Graph":
        """Return the graph with vertex ``i`` renamed to ``perm[i]``."""
        perm = list(perm)
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of range(n)")
        return Graph(self.n, tuple((perm[i], perm[j]) for i, j in self.edges))

    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        if not self.edges:
            return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
        arr = np.asarray(self.edges, dtype=np.int64)
        return arr[:, 0], arr[:, 1]


def as_vertex_set(members: Iterable[int], n: int | None = None) -> frozenset[int]:
    s = frozenset(int(v) for v in members)
    if n is not None and any(v < 0 or v >= n for v in s):
        raise ValueError(f"vertex set {sorted(s)} is not a subset of [0, {n})")
    return s


def mask_to_set(mask: int) -> frozenset[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def set_to_mask(s: Iterable[int]) -> int:
    m = 0
    for v in s:
        m |= 1 << int(v)
    return m


# --- graph families -------------------------------------------------------


def line_graph(n: int) -> Graph:
    """Open chain L_n."""
    if n < 2:
        raise ValueError(f"line graph needs n >= 2, got {n}")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    """Periodic chain P_n: the open chain closed by the edge (0, n-1)."""
    if n < 3:
        raise ValueError(f"cycle graph needs n >= 3, got {n}")
    return Graph(n, line_graph(n).edges + ((0, n - 1),))


def complete_graph(n: int) -> Graph:
    if n < 2:
        raise ValueError(f"complete graph needs n >= 2, got {n}")
    return Graph(n, tuple(combinations(range(n), 2)))


def kite_graph() -> Graph:
    """K_4 on {0,1,2,3} with the tail 0-4-5; denser inside than overall."""
    return Graph(6, tuple(combinations(range(4), 2)) + ((0, 4), (4, 5)))


MISC_IDS = ("G1", "G2", "G3")


def misc_graph(graph_id: str) -> Graph:
    """Load one of the bundled non two-segmented graphs G1, G2, G3."""
    if graph_id not in MISC_IDS:
        raise ValueError(f"unknown graph id {graph_id!r}; expected one of {MISC_IDS}")
    text = resources.files("clifis").joinpath(f"data/{graph_id}.txt").read_text()
    return parse_graph_text(text)


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), resampled until at least one edge is present.

    Uses numpy's PCG64 bit generator seeded with ``seed``; pairs are visited
    in lexicographic order and each consumes one uniform draw.
    """
    if n < 2:
        raise ValueError(f"random graph needs n >= 2, got {n}")
    if not 0 < p <= 1:
        raise ValueError(f"edge probability must lie in (0, 1], got {p}")
    rng = np.random.Generator(np.random.PCG64(seed))
    pairs = list(combinations(range(n), 2))
    while True:
        keep = rng.random(len(pairs)) < p
        edges = tuple(e for e, k in zip(pairs, keep) if k)
        if edges:
            return Graph(n, edges)


def family_graph(family: str, n: int) -> Graph:
    builders = {"L": line_graph, "P": cycle_graph, "K": complete_graph}
    try:
        return builders[family.upper()](n)
    except KeyError:
        raise ValueError(f"unknown family {family!r}; expected L, P or K") from None


def graph_by_id(graph_id: str) -> Graph:
    """Resolve ids like ``L9``, ``P4``, ``K12``, ``kite6``, ``G2``."""
    if graph_id in MISC_IDS:
        return misc_graph(graph_id)
    if graph_id == "kite6":
        return kite_graph()
    if len(graph_id) >= 2 and graph_id[0] in "LPK" and graph_id[1:].isdigit():
        return family_graph(graph_id[0], int(graph_id[1:]))
    raise ValueError(f"unknown graph id {graph_id!r}")


# --- structural queries ---------------------------------------------------


def induced_edge_count(g: Graph, s: Iterable[int]) -> int:
    s = as_vertex_set(s, g.n)
    return sum(1 for i, j in g.edges if i in s and j in s)


def induced_edges(g: Graph, s: Iterable[int]) -> list[Edge]:
    s = as_vertex_set(s, g.n)
    return [(i, j) for i, j in g.edges if i in s and j in s]


def connected_components(g: Graph) -> list[frozenset[int]]:
    adj = g.neighbors()
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(frozenset(comp))
    return comps


def spanning_forest(g: Graph, s: Iterable[int]) -> frozenset[Edge]:
    """BFS spanning forest of the subgraph induced by ``s``.

    Roots are taken in ascending vertex order and neighbours are explored in
    ascending order, so the output is a fixed function of the input.
    """
    s = as_vertex_set(s, g.n)
    adj = g.neighbors()
    seen = set()
    forest = set()
    for root in sorted(s):
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w in s and w not in seen:
                    seen.add(w)
                    forest.add((min(u, w), max(u, w)))
                    queue.append(w)
    return frozenset(forest)


def subset_tables(g: Graph, weights=None) -> tuple[np.ndarray, np.ndarray]:
    """Popcount and induced edge weight for every subset mask ``0..2^n-1``.

    ``weights`` are integer edge weights aligned with ``g.edges``; default 1.
    """
    masks = np.arange(1 << g.n, dtype=np.int64)
    sizes = np.zeros(1 << g.n, dtype=np.int64)
    for i in range(g.n):
        sizes += (masks >> i) & 1
    totals = np.zeros(1 << g.n, dtype=np.int64)
    for k, (i, j) in enumerate(g.edges):
        w = 1 if weights is None else int(weights[k])
        totals += ((masks >> i) & (masks >> j) & 1) * w
    return sizes, totals


# --- serialisation --------------------------------------------------------


def parse_graph_text(text: str) -> Graph:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ValueError("empty graph file")
    n = int(lines[0])
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {line!r}")
        i, j = int(parts[0]), int(parts[1])
        if not i < j:
            raise ValueError(f"edge line {line!r} must satisfy i < j")
        edges.append((i, j))
    return Graph(n, tuple(edges))


def graph_to_text(g: Graph) -> str:
    return "".join([f"{g.n}\n"] + [f"{i} {j}\n" for i, j in g.edges])


def graph_to_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_dict(d: dict) -> Graph:
    return Graph(int(d["n"]), tuple((int(i), int(j)) for i, j in d["edges"]))


def read_graph(path) -> Graph:
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return graph_from_dict(json.loads(text))
    return parse_graph_text(text)


def write_graph(g: Graph, path) -> None:
    path = Path(path)
    if path.suffix == ".json":
        path.write_text(json.dumps(graph_to_dict(g)) + "\n")
    else:
        path.write_text(graph_to_text(g))
