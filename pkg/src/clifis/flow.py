"""Exact maximum flow (Dinic) on rational capacities.

Capacities are scaled to integers by the LCM of their denominators, so the
flow value and the cut are exact.  The source side of the minimum cut is the
set of nodes reachable from the source in the final residual graph, which is
the inclusion-minimal minimum cut.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

CAPACITY_BITS = 127


@dataclass
class FlowNetwork:
    n_nodes: int
    source: int
    sink: int
    arcs: list[tuple[int, int, Fraction]] = field(default_factory=list)

    def __post_init__(self):
        if self.source == self.sink:
            raise ValueError("source and sink must differ")
        for node in (self.source, self.sink):
            if not 0 <= node < self.n_nodes:
                raise ValueError(f"terminal {node} outside [0, {self.n_nodes})")

    def add_arc(self, u: int, v: int, capacity) -> None:
        cap = Fraction(capacity)
        if cap < 0:
            raise ValueError(f"negative capacity {cap} on arc {(u, v)}")
        if not (0 <= u < self.n_nodes and 0 <= v < self.n_nodes):
            raise ValueError(f"arc {(u, v)} references a missing node")
        self.arcs.append((u, v, cap))


def _scaled(net: FlowNetwork) -> tuple[list[int], int]:
    scale = 1
    for _, _, c in net.arcs:
        scale = math.lcm(scale, Fraction(c).denominator)
    caps = [int(Fraction(c) * scale) for _, _, c in net.arcs]
    limit = 1 << CAPACITY_BITS
    if sum(caps) >= limit:
        raise OverflowError(f"scaled capacities exceed {CAPACITY_BITS}-bit range")
    return caps, scale


def max_flow(net: FlowNetwork) -> tuple[Fraction, frozenset[int]]:
    """Return ``(flow value, source side of a minimum cut)``."""
    caps, scale = _scaled(net)
    n = net.n_nodes
    # residual arcs stored in flat lists; arc k and k ^ 1 are partners
    head: list[int] = []
    cap: list[int] = []
    adj: list[list[int]] = [[] for _ in range(n)]
    for (u, v, _), c in zip(net.arcs, caps):
        adj[u].append(len(head))
        head.append(v)
        cap.append(c)
        adj[v].append(len(head))
        head.append(u)
        cap.append(0)

    s, t = net.source, net.sink
    total = 0
    while True:
        level = [-1] * n
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for k in adj[u]:
                if cap[k] > 0 and level[head[k]] < 0:
                    level[head[k]] = level[u] + 1
                    queue.append(head[k])
        if level[t] < 0:
            break
        it = [0] * n
        while True:
            pushed = _augment(s, t, adj, head, cap, level, it)
            if not pushed:
                break
            total += pushed

    seen = [False] * n
    seen[s] = True
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for k in adj[u]:
            if cap[k] > 0 and not seen[head[k]]:
                seen[head[k]] = True
                queue.append(head[k])
    return Fraction(total, scale), frozenset(i for i in range(n) if seen[i])


def _augment(s, t, adj, head, cap, level, it) -> int:
    """Find one blocking-flow path by iterative DFS and push along it."""
    path: list[int] = []
    u = s
    while True:
        if u == t:
            bottleneck = min(cap[k] for k in path)
            for k in path:
                cap[k] -= bottleneck
                cap[k ^ 1] += bottleneck
            return bottleneck
        advanced = False
        while it[u] < len(adj[u]):
            k = adj[u][it[u]]
            v = head[k]
            if cap[k] > 0 and level[v] == level[u] + 1:
                path.append(k)
                u = v
                advanced = True
                break
            it[u] += 1
        if not advanced:
            if u == s:
                return 0
            # dead end: prune u from this phase and step back
            level[u] = -1
            k = path.pop()
            u = head[k ^ 1]
            it[u] += 1
