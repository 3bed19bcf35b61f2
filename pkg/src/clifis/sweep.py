"""Parameter sweeps, the random-graph study and the bundled self-check.

g grids are generated in exact rationals and converted to floats only when a
row is written, so a grid that hits a transition value hits it exactly.
"""

from __future__ import annotations

import csv
import hashlib
import io
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Sequence

import numpy as np

from ._limits import size_limit
from .density import extreme_thresholds, two_segmented
from .exact import DEFAULT_SEED, dense_ground_energy, ground_energy, relative_error
from .graphs import (
    MISC_IDS,
    Graph,
    family_graph,
    kite_graph,
    parse_graph_text,
    random_graph,
    read_graph,
)
from .ising import IsingInstance, to_fraction
from .stabilizer import build_witness
from .subset_opt import Solver, brute_force_min, mincut_min, min_norm_point_min, solve

log = logging.getLogger(__name__)

CSV_HEADER = (
    "graph_id",
    "n",
    "g",
    "clifford_energy",
    "exact_energy",
    "relative_error",
    "set_size",
    "degenerate",
    "two_segmented",
    "transition",
)


def g_grid(start, stop, step) -> list[Fraction]:
    start, stop, step = to_fraction(start), to_fraction(stop), to_fraction(step)
    if step <= 0:
        raise ValueError("g step must be positive")
    if start > stop:
        raise ValueError("g start must not exceed stop")
    count = int((stop - start) / step)
    return [start + k * step for k in range(count + 1)]


def random_seeds(seed: int, n: int, count: int) -> list[int]:
    """Per-graph 64-bit seeds derived from ``(seed, n)``."""
    children = np.random.SeedSequence([seed, n]).spawn(count)
    return [int(c.generate_state(1, np.uint64)[0]) for c in children]


@dataclass
class SweepConfig:
    family: str | None = None
    n: int | None = None
    graph_file: str | None = None
    # (n, p, count, seed)
    random: tuple[int, float, int, int] | None = None
    g_start: Fraction = Fraction(0)
    g_stop: Fraction = Fraction(2)
    g_step: Fraction = Fraction(1, 20)
    solver: str = "mincut"
    exact: bool = True
    tolerance: float = 1e-10
    out: str | None = None
    # Lanczos start-vector seed
    seed: int = DEFAULT_SEED
    workers: int = 1

    def __post_init__(self):
        self.g_start = to_fraction(self.g_start)
        self.g_stop = to_fraction(self.g_stop)
        self.g_step = to_fraction(self.g_step)
        if self.g_step <= 0 or self.g_start > self.g_stop:
            raise ValueError("invalid g range")
        sources = sum(x is not None for x in (self.family, self.graph_file, self.random))
        if sources != 1:
            raise ValueError("give exactly one graph source: family+n, graph file or random spec")
        if self.family is not None and self.n is None:
            raise ValueError("family needs n")
        Solver(self.solver)

    def graphs(self) -> list[tuple[str, Graph]]:
        if self.family is not None:
            return [(f"{self.family.upper()}{self.n}", family_graph(self.family, self.n))]
        if self.graph_file is not None:
            return [(Path(self.graph_file).stem, read_graph(self.graph_file))]
        n, p, count, seed = self.random
        return [(f"R{n}-{k}", random_graph(n, p, s)) for k, s in enumerate(random_seeds(seed, n, count))]

    @classmethod
    def from_dict(cls, d: dict) -> "SweepConfig":
        d = dict(d)
        if d.get("random") is not None:
            d["random"] = tuple(d["random"])
        return cls(**d)


@dataclass
class SweepRecord:
    graph_id: str
    n: int
    g: Fraction
    clifford_energy: Fraction | None
    exact_energy: float | None = None
    relative_error: float | None = None
    set_size: int | None = None
    degenerate: bool | None = None
    two_segmented: bool | None = None
    transition: Fraction | None = None
    error: str = ""

    def row(self) -> list[str]:
        def num(x):
            return "" if x is None else repr(float(x))

        def flag(x):
            return "" if x is None else ("true" if x else "false")

        return [
            self.graph_id,
            str(self.n),
            repr(float(self.g)),
            num(self.clifford_energy),
            num(self.exact_energy),
            num(self.relative_error),
            "" if self.set_size is None else str(self.set_size),
            flag(self.degenerate),
            flag(self.two_segmented),
            num(self.transition),
        ]


def _graph_records(task) -> list[SweepRecord]:
    gid, graph, grid, solver, exact, tol, seed, check_degenerate = task
    seg = None
    if graph.num_edges:
        seg = two_segmented(graph)
    records = []
    for g in grid:
        rec = SweepRecord(gid, graph.n, g, None)
        if seg is not None:
            rec.two_segmented = seg.two_segmented
            rec.transition = seg.transition_value
        try:
            inst = IsingInstance(graph, g)
            sol = solve(inst, solver, check_degenerate)
            rec.clifford_energy = sol.cost
            rec.set_size = len(sol.vertex_set)
            rec.degenerate = sol.degenerate
            if exact:
                e = ground_energy(inst, tol, seed=seed).energy
                rec.exact_energy = e
                if e < 0:
                    rec.relative_error = relative_error(sol.cost, e)
                elif sol.cost == 0:
                    rec.relative_error = 0.0
        except Exception as err:  # recorded per row; the sweep continues
            rec.error = f"{type(err).__name__}: {err}"
            log.warning("sweep point %s g=%s failed: %s", gid, g, rec.error)
        records.append(rec)
    return records


def sweep_graphs(
    graphs: Sequence[tuple[str, Graph]],
    grid: Sequence[Fraction],
    solver: str = "mincut",
    exact: bool = True,
    tolerance: float = 1e-10,
    workers: int = 1,
    seed: int = DEFAULT_SEED,
    check_degenerate: bool = True,
) -> list[SweepRecord]:
    tasks = [(gid, graph, list(grid), solver, exact, tolerance, seed, check_degenerate) for gid, graph in graphs]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_graph_records, tasks))
    else:
        chunks = [_graph_records(t) for t in tasks]
    order = {gid: k for k, (gid, _) in enumerate(graphs)}
    records = [r for chunk in chunks for r in chunk]
    records.sort(key=lambda r: (order[r.graph_id], r.g))
    return records


def run_sweep(cfg: SweepConfig) -> list[SweepRecord]:
    grid = g_grid(cfg.g_start, cfg.g_stop, cfg.g_step)
    records = sweep_graphs(cfg.graphs(), grid, cfg.solver, cfg.exact, cfg.tolerance, cfg.workers, cfg.seed)
    if cfg.out:
        write_records(records, cfg.out)
    return records


def records_to_csv(records: Sequence[SweepRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in records:
        w.writerow(r.row())
    return buf.getvalue()


PLOT_RECIPE = """\
# Plot recipe for {csv}
# x axis: g
# panel 1: clifford_energy and exact_energy against g, one line pair per graph_id
# panel 2: relative_error against g, one line per graph_id
# mark the transition column (when present) as a vertical line per graph_id
"""


def write_records(records: Sequence[SweepRecord], out) -> None:
    """Write the CSV, a plot recipe and, when rows failed, an errors file."""
    out = Path(out)
    out.write_text(records_to_csv(records))
    out.with_suffix(".plot.txt").write_text(PLOT_RECIPE.format(csv=out.name))
    failed = [r for r in records if r.error]
    err_path = out.with_suffix(".errors.csv")
    if failed:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("graph_id", "g", "error"))
        for r in failed:
            w.writerow((r.graph_id, repr(float(r.g)), r.error))
        err_path.write_text(buf.getvalue())
    elif err_path.exists():
        err_path.unlink()


# --- random-graph study ---------------------------------------------------


@dataclass
class RandomStudy:
    grid: list[Fraction]
    # N -> mean relative error at each grid point
    curves: dict[int, list[float]]
    argmax_g: dict[int, Fraction]
    count: int

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("n", "g", "mean_relative_error", "count"))
        for n, curve in self.curves.items():
            for g, m in zip(self.grid, curve):
                w.writerow((n, repr(float(g)), repr(float(m)), self.count))
        return buf.getvalue()

    def argmax_csv(self) -> str:
        return "n,argmax_g\n" + "".join(f"{n},{float(g)!r}\n" for n, g in self.argmax_g.items())


def run_random_study(
    n_min: int,
    n_max: int,
    count: int,
    p: float = 0.5,
    grid: Sequence[Fraction] | None = None,
    seed: int = 0,
    tolerance: float = 1e-8,
    workers: int = 1,
    out: str | None = None,
) -> RandomStudy:
    """Mean relative error against g for ``count`` random graphs per size."""
    if n_min < 4 or n_max < n_min:
        raise ValueError("need 4 <= n_min <= n_max")
    grid = list(grid) if grid is not None else g_grid(0, 3, Fraction(1, 20))
    curves: dict[int, list[float]] = {}
    argmax: dict[int, Fraction] = {}
    for n in range(n_min, n_max + 1):
        graphs = [(f"R{n}-{k}", random_graph(n, p, s)) for k, s in enumerate(random_seeds(seed, n, count))]
        records = sweep_graphs(graphs, grid, "mincut", True, tolerance, workers, check_degenerate=False)
        errs = np.zeros((count, len(grid)))
        for r in records:
            if r.error or r.relative_error is None:
                raise RuntimeError(f"random study point failed: {r.graph_id} g={r.g}: {r.error}")
            errs[int(r.graph_id.split("-")[1]), grid.index(r.g)] = r.relative_error
        mean = errs.mean(axis=0)
        curves[n] = [float(m) for m in mean]
        argmax[n] = grid[int(np.argmax(mean))]
    study = RandomStudy(grid, curves, argmax, count)
    if out:
        out = Path(out)
        out.write_text(study.to_csv())
        out.with_suffix(".argmax.csv").write_text(study.argmax_csv())
    return study


# --- bundled graphs and the self-check ------------------------------------


def bundled_graphs(max_n: int = 12, data_dir=None) -> dict[str, Graph]:
    """The reference zoo: chains, rings, cliques, kite6, G1-G3, 20 random graphs."""
    zoo: dict[str, Graph] = {}
    for fam in "LPK":
        for n in range(4, max_n + 1):
            zoo[f"{fam}{n}"] = family_graph(fam, n)
    if max_n >= 6:
        zoo["kite6"] = kite_graph()
    for gid in MISC_IDS:
        g = _load_misc(gid, data_dir)
        if g.n <= max_n:
            zoo[gid] = g
    for k in range(20):
        n = 4 + k % 9
        if n <= max_n:
            zoo[f"R{n}-seed{1000 + k}"] = random_graph(n, 0.5, 1000 + k)
    return zoo


def _load_misc(gid: str, data_dir=None) -> Graph:
    return parse_graph_text(_misc_text(gid, data_dir))


def _misc_text(gid: str, data_dir=None) -> str:
    if data_dir is not None:
        return (Path(data_dir) / f"{gid}.txt").read_text()
    return resources.files("clifis").joinpath(f"data/{gid}.txt").read_text()


# sha256 of the shipped G1-G3 data files
DATA_DIGESTS = {
    "G1": "63b0548f3e82c3b8294633388cd43c3e2d329a93d17ee39b478c2aca2a3ee7e7",
    "G2": "f0a98c8147a82aa17fbb9260ee58f63f6149aede34a43ae3a9758c2f46b6149f",
    "G3": "acd90b5ce6d21e1eb0a293856b488231e2f436cbe35e84b3779efa7fb5db255e",
}


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerifyReport:
    checks: list[CheckResult] = field(default_factory=list)
    max_n: int = 0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(CheckResult(name, bool(passed), detail))

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "max_n": self.max_n,
            "checks": [c.__dict__ for c in self.checks],
        }


def verify_bundle(data_dir=None, g_step: Fraction = Fraction(1, 4)) -> VerifyReport:
    """Run the invariant suite over the bundled zoo.

    The size cap is 12, lowered (or raised) by ``CLIFIS_MAX_N``.
    """
    max_n = size_limit(12)
    report = VerifyReport(max_n=max_n)

    for gid in MISC_IDS:
        digest = hashlib.sha256(_misc_text(gid, data_dir).encode()).hexdigest()
        report.add(f"data-integrity:{gid}", digest == DATA_DIGESTS[gid], digest[:16])

    zoo = bundled_graphs(max_n, data_dir)
    for gid, graph in zoo.items():
        seg = two_segmented(graph)
        if gid[0] in "LPK" and gid[1:].isdigit():
            n = graph.n
            expected = {"L": Fraction(n - 1, n), "P": Fraction(1), "K": Fraction(n - 1, 2)}[gid[0]]
            report.add(f"two-segmented:{gid}", seg.two_segmented and seg.transition_value == expected,
                       f"transition={seg.transition_value}")
        elif gid in MISC_IDS or gid == "kite6":
            report.add(f"not-two-segmented:{gid}", not seg.two_segmented, f"max density={seg.max_density}")

        top = int(np.ceil(float(seg.max_density))) + 1
        agree, witness_ok, bound_ok, extreme_ok = True, True, True, True
        lower, upper = extreme_thresholds(graph)
        for g in g_grid(0, top, g_step):
            inst = IsingInstance(graph, g)
            b, m, w = brute_force_min(inst), mincut_min(inst), min_norm_point_min(inst)
            agree &= b.cost == m.cost and abs(float(w.cost - b.cost)) <= 1e-7
            wit = build_witness(inst, m.vertex_set)
            witness_ok &= wit.energy == m.cost and wit.tableau.generators_commute()
            if graph.n <= 10:
                bound_ok &= float(m.cost) >= dense_ground_energy(inst) - 1e-7
                if g < lower:
                    extreme_ok &= m.cost == -graph.num_edges
                if g > upper:
                    extreme_ok &= m.cost == -g * graph.n
        report.add(f"solver-agreement:{gid}", agree)
        report.add(f"witness:{gid}", witness_ok)
        if graph.n <= 10:
            report.add(f"variational-bound:{gid}", bound_ok)
            report.add(f"extreme-regimes:{gid}", extreme_ok)
    return report
