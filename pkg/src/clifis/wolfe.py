"""Fujishige-Wolfe minimum-norm-point minimisation of the Clifford cost.

The cost ``f`` is normalised to ``F(S) = f(S) - f(empty)`` so that ``F`` is a
submodular function with ``F(empty) = 0``.  Wolfe's algorithm finds the point
``x*`` of least Euclidean norm in the base polytope ``B(F)``; the set
``{i : x*_i < 0}`` is the minimal minimiser of ``F`` and ``{i : x*_i <= 0}``
the maximal one.

Linear minimisation over ``B(F)`` is Edmonds' greedy algorithm: sort the
coordinates of the direction ascending and take marginal gains along that
order.
"""

from __future__ import annotations

import numpy as np

from .errors import ConvergenceError
from .ising import IsingInstance, cost
from .subset_opt import Solver, VertexSetSolution

# barycentric weights below this are dropped in minor cycles
DROP_TOL = 1e-12


class MarginalOracle:
    """Greedy base-polytope vertices for the Clifford cost."""

    def __init__(self, inst: IsingInstance):
        self.n = inst.n
        ew, vw, scale = inst.integer_weights()
        # unit rescaling keeps magnitudes near one; minimisers are unchanged
        self.unit = float(max([1, *ew, *vw]))
        self.cost_units = self.unit / scale
        self.vertex_w = np.asarray(vw, dtype=float) / self.unit
        self.edge_w = np.asarray(ew, dtype=float) / self.unit
        self.u, self.v = inst.graph.edge_arrays()

    def greedy(self, direction: np.ndarray) -> np.ndarray:
        """Vertex of B(F) minimising ``<direction, q>``."""
        order = np.argsort(direction, kind="stable")
        pos = np.empty(self.n, dtype=np.int64)
        pos[order] = np.arange(self.n)
        q = self.vertex_w.copy()
        if self.u.size:
            later = np.where(pos[self.u] > pos[self.v], self.u, self.v)
            np.add.at(q, later, -self.edge_w)
        return q


def _affine_minimizer(points: np.ndarray) -> np.ndarray:
    """Barycentric coefficients of the min-norm point of the affine hull.

    Solves ``[[P P^T, 1], [1^T, 0]] [a; mu] = [0; 1]`` by least squares, which
    tolerates the rank deficiency of nearly dependent corrals.
    """
    m = points.shape[0]
    system = np.zeros((m + 1, m + 1))
    system[:m, :m] = points @ points.T
    system[:m, m] = 1.0
    system[m, :m] = 1.0
    rhs = np.zeros(m + 1)
    rhs[m] = 1.0
    sol, *_ = np.linalg.lstsq(system, rhs, rcond=None)
    return sol[:m]


def min_norm_point(oracle: MarginalOracle, tolerance: float = 1e-10, max_iter: int | None = None):
    """Run Wolfe's algorithm; return ``(x, iterations)``.

    Stops when ``<x, x> - <x, q> <= tolerance * max |p|^2`` over the corral
    and the new greedy vertex ``q``.
    """
    n = oracle.n
    if max_iter is None:
        max_iter = 10 * n * 2**10
    x = oracle.greedy(np.zeros(n))
    corral = x[None, :].copy()
    lam = np.array([1.0])
    steps = 0
    while True:
        q = oracle.greedy(x)
        scale = max(float(q @ q), float(np.max(np.einsum("ij,ij->i", corral, corral))), 1e-300)
        if x @ x - x @ q <= tolerance * scale:
            return x, steps
        if np.any(np.all(np.abs(corral - q) < 1e-12, axis=1)):
            return x, steps
        corral = np.vstack([corral, q])
        lam = np.append(lam, 0.0)
        while True:
            steps += 1
            if steps > max_iter:
                raise ConvergenceError(f"min-norm point did not converge in {max_iter} steps", best=x)
            alpha = _affine_minimizer(corral)
            if np.all(alpha > DROP_TOL):
                lam = alpha
                x = alpha @ corral
                break
            mask = alpha < lam - DROP_TOL
            mask &= alpha <= DROP_TOL
            if not mask.any():
                # affine minimiser sits on the hull up to round-off
                alpha = np.clip(alpha, 0.0, None)
                lam = alpha / alpha.sum()
                keep = lam > DROP_TOL
                corral, lam = corral[keep], lam[keep] / lam[keep].sum()
                x = lam @ corral
                break
            theta = float(np.min(lam[mask] / (lam[mask] - alpha[mask])))
            lam = theta * alpha + (1.0 - theta) * lam
            keep = lam > DROP_TOL
            corral, lam = corral[keep], lam[keep] / lam[keep].sum()
            x = lam @ corral


def minimize_cost(inst: IsingInstance, tolerance: float = 1e-10) -> VertexSetSolution:
    """Minimise the cost via the minimum-norm point.

    Candidates are the strict and non-strict zero level sets of the final
    point, each also with a small slack for round-off; the cheapest (exact
    cost) wins.
    """
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    oracle = MarginalOracle(inst)
    if inst.n == 0:
        return VertexSetSolution(frozenset(), cost(inst, ()), Solver.WOLFE, certificate=0.0)
    try:
        x, _ = min_norm_point(oracle, tolerance)
    except ConvergenceError as err:
        best = _best_threshold(inst, err.best, oracle.cost_units)
        raise ConvergenceError(str(err), best=best) from None
    return _best_threshold(inst, x, oracle.cost_units)


def _best_threshold(inst: IsingInstance, x: np.ndarray, cost_units: float) -> VertexSetSolution:
    slack = 1e-9 * max(1.0, float(np.max(np.abs(x))))
    candidates = {
        frozenset(np.nonzero(x < 0)[0].tolist()),
        frozenset(np.nonzero(x <= 0)[0].tolist()),
        frozenset(np.nonzero(x < -slack)[0].tolist()),
        frozenset(np.nonzero(x <= slack)[0].tolist()),
    }
    scored = sorted((cost(inst, s), len(s), sorted(s)) for s in candidates)
    best_cost, _, best_set = scored[0]
    return VertexSetSolution(frozenset(best_set), best_cost, Solver.WOLFE, certificate=float(np.linalg.norm(x)) * cost_units)
