"""Acceptance criteria 1-9, each at its stated tolerance.

A summary line per criterion is printed at the end of the pytest run.
"""

import math
from fractions import Fraction

import numpy as np
import pytest

from clifis.density import densest_subgraph, extreme_thresholds, two_segmented
from clifis.exact import dense_ground_energy, ground_energy, relative_error
from clifis.graphs import complete_graph, cycle_graph, kite_graph, line_graph, misc_graph, random_graph
from clifis.ising import IsingInstance
from clifis.stabilizer import build_witness, hamiltonian_terms, statevector_expectation, statevector_oracle
from clifis.subset_opt import brute_force_min, min_norm_point_min, mincut_min
from clifis.sweep import bundled_graphs, g_grid, run_random_study

from conftest import ACCEPTANCE

STEP = Fraction(1, 20)


def record(k, ok, detail):
    ACCEPTANCE[k] = (bool(ok), detail)
    assert ok, detail


@pytest.fixture(scope="module")
def zoo():
    return bundled_graphs(12)


@pytest.fixture(scope="module")
def grids(zoo):
    return {gid: g_grid(0, math.ceil(densest_subgraph(g).density) + 1, STEP) for gid, g in zoo.items()}


@pytest.fixture(scope="module")
def optima(zoo, grids):
    """(gid, g) -> (brute, mincut, wolfe) solutions."""
    out = {}
    for gid, graph in zoo.items():
        for g in grids[gid]:
            inst = IsingInstance(graph, g)
            out[gid, g] = (brute_force_min(inst), mincut_min(inst), min_norm_point_min(inst))
    return out


@pytest.fixture(scope="module")
def exact(zoo, grids):
    """(gid, g) -> Lanczos ground energy."""
    return {(gid, g): ground_energy(IsingInstance(zoo[gid], g)).energy for gid in zoo for g in grids[gid]}


def test_criterion_1_solver_equivalence(optima):
    bad_cut, worst_wolfe = [], 0.0
    for key, (b, m, w) in optima.items():
        if b.cost != m.cost:
            bad_cut.append(key)
        worst_wolfe = max(worst_wolfe, abs(float(w.cost - b.cost)))
    ok = not bad_cut and worst_wolfe <= 1e-7
    record(1, ok, f"{len(optima)} instances, mincut mismatches={len(bad_cut)}, max |wolfe-brute|={worst_wolfe:.2e}")


def test_criterion_2_witness_consistency(zoo, optima):
    failures, checked_sv = [], 0
    seen = set()
    for (gid, g), (_, m, _) in optima.items():
        inst = IsingInstance(zoo[gid], g)
        w = build_witness(inst, m.vertex_set)
        t = w.tableau
        ok = w.energy == m.cost and t.generators_commute() and t.generators_independent()
        ok &= all(t.expectation(op) == 1 for op in w.required_operators())
        # term expectations depend only on the graph and the vertex set
        if ok and inst.n <= 10 and (gid, m.vertex_set) not in seen:
            seen.add((gid, m.vertex_set))
            psi = statevector_oracle(t)
            for _, _, _, op in hamiltonian_terms(inst):
                ok &= abs(statevector_expectation(psi, op) - t.expectation(op)) <= 1e-10
            checked_sv += 1
        if not ok:
            failures.append((gid, g))
    record(2, not failures, f"{len(optima)} witnesses, {checked_sv} statevector cross-checks, failures={failures[:3]}")


def test_criterion_3_variational_bound(zoo, optima, exact):
    worst = math.inf
    for key, e in exact.items():
        worst = min(worst, float(optima[key][1].cost) - e)
    # two larger random graphs up to N = 14 on a coarser grid
    for n in (13, 14):
        graph = random_graph(n, 0.4, 7 + n)
        for g in g_grid(0, 4, Fraction(1, 2)):
            inst = IsingInstance(graph, g)
            worst = min(worst, float(mincut_min(inst).cost) - ground_energy(inst).energy)
    record(3, worst >= -1e-7, f"min(clifford - exact)={worst:.3e} over {len(exact) + 18} instances")


def test_criterion_4_two_segmented_classification():
    wrong = []
    for n in range(4, 13):
        for fam, graph, expected in (
            ("L", line_graph(n), Fraction(n - 1, n)),
            ("P", cycle_graph(n), Fraction(1)),
            ("K", complete_graph(n), Fraction(n - 1, 2)),
        ):
            r = two_segmented(graph)
            if not (r.two_segmented and r.transition_value == expected):
                wrong.append(f"{fam}{n}")
    for gid, graph in [("G1", misc_graph("G1")), ("G2", misc_graph("G2")), ("G3", misc_graph("G3")), ("kite6", kite_graph())]:
        if two_segmented(graph).two_segmented:
            wrong.append(gid)
    record(4, not wrong, f"misclassified={wrong}")


def _lpk_ids():
    return [f"{fam}{n}" for fam in "LPK" for n in range(4, 13)]


def _transition(gid):
    n = int(gid[1:])
    return {"L": Fraction(n - 1, n), "P": Fraction(1), "K": Fraction(n - 1, 2)}[gid[0]]


def test_criterion_5_error_envelope(zoo, grids, optima, exact):
    max_err, misaligned = 0.0, []
    for gid in _lpk_ids():
        errs = []
        for g in grids[gid]:
            e = exact[gid, g]
            errs.append(relative_error(optima[gid, g][1].cost, e))
        max_err = max(max_err, max(errs))
        peak = grids[gid][int(np.argmax(errs))]
        if abs(peak - _transition(gid)) > STEP:
            misaligned.append((gid, str(peak)))
    ok = max_err <= 0.27 and not misaligned
    record(5, ok, f"max relative error={max_err:.4f}, argmax off transition={misaligned}")


def test_criterion_6_error_decay():
    errs = []
    for n in range(4, 13):
        inst = IsingInstance(line_graph(n), Fraction(n - 1, n))
        errs.append(relative_error(mincut_min(inst).cost, ground_energy(inst).energy))
    ok = all(b <= a + 1e-3 for a, b in zip(errs, errs[1:]))
    record(6, ok, "L4..L12 transition errors " + " ".join(f"{e:.4f}" for e in errs))


@pytest.mark.slow
def test_criterion_7_random_study():
    study = run_random_study(4, 10, 100, 0.5, g_grid(0, 3, STEP), seed=2024)
    zero_at_origin = all(curve[0] == 0 for curve in study.curves.values())
    peaks = [study.argmax_g[n] for n in range(4, 11)]
    monotone = all(b >= a - STEP for a, b in zip(peaks, peaks[1:]))
    detail = "argmax g by N=4..10: " + " ".join(str(float(p)) for p in peaks)
    record(7, zero_at_origin and monotone, f"{detail}; zero at g=0: {zero_at_origin}")


def test_criterion_8_extreme_regimes(zoo, grids, optima):
    bad, checked = [], 0
    for gid, graph in zoo.items():
        if graph.n > 10:
            continue
        lower, upper = extreme_thresholds(graph)
        points = [g for g in grids[gid] if g < lower or g > upper]
        points += [lower / 2, upper + Fraction(1, 7), upper * 3]
        for g in points:
            if lower <= g <= upper:
                continue
            m = optima[gid, g][1] if (gid, g) in optima else mincut_min(IsingInstance(graph, g))
            expected = -graph.num_edges if g < lower else -g * graph.n
            checked += 1
            if m.cost != expected:
                bad.append((gid, str(g)))
    record(8, not bad, f"{checked} extreme-regime points, failures={bad[:3]}")


def test_criterion_9_exact_diag_oracle(zoo, grids, exact):
    worst = 0.0
    for gid, graph in zoo.items():
        if graph.n > 10:
            continue
        for g in grids[gid]:
            worst = max(worst, abs(exact[gid, g] - dense_ground_energy(IsingInstance(graph, g))))
    worst_l2 = 0.0
    for k in range(20):
        g = Fraction(k, 8)
        e = ground_energy(IsingInstance(line_graph(2), g)).energy
        worst_l2 = max(worst_l2, abs(e + math.sqrt(1 + 4 * float(g) ** 2)))
    ok = worst <= 1e-9 and worst_l2 <= 1e-10
    record(9, ok, f"max |lanczos-dense|={worst:.2e}, max L2 closed-form gap={worst_l2:.2e}")
