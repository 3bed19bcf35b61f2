"""Command-line front end.

Exit codes: 0 ok, 1 usage, 2 infeasible size, 3 internal-check failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .density import densest_subgraph, two_segmented
from .errors import InfeasibleSizeError, InternalCheckError
from .exact import ground_energy
from .graphs import Graph, family_graph, graph_by_id, random_graph, read_graph, write_graph
from .ising import IsingInstance, instance_from_json, to_fraction
from .stabilizer import build_witness
from .subset_opt import solve
from .sweep import SweepConfig, g_grid, run_random_study, run_sweep, verify_bundle

EXIT_OK, EXIT_USAGE, EXIT_INFEASIBLE, EXIT_CHECK = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def load_graph(source: str) -> Graph:
    """A graph file path, or a bundled id such as ``L9`` or ``G1``."""
    if Path(source).exists():
        return read_graph(source)
    return graph_by_id(source)


def _emit(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, indent=2)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def cmd_gen(args) -> int:
    if args.random:
        n, p, seed = args.random
        g = random_graph(int(n), float(p), int(seed))
    elif args.family:
        g = family_graph(args.family, args.n)
    else:
        g = graph_by_id(args.id)
    if args.out:
        write_graph(g, args.out)
    else:
        from .graphs import graph_to_text

        sys.stdout.write(graph_to_text(g))
    return EXIT_OK


def _instance(args) -> IsingInstance:
    if getattr(args, "instance", None):
        return instance_from_json(Path(args.instance).read_text())
    if not args.graph or args.g is None:
        raise ValueError("need --instance, or --graph with --g")
    return IsingInstance(load_graph(args.graph), to_fraction(args.g))


def cmd_opt(args) -> int:
    inst = _instance(args)
    sol = solve(inst, args.solver)
    witness = build_witness(inst, sol.vertex_set)
    _emit({"solution": sol.to_dict(), "witness": witness.to_dict()}, args.out)
    return EXIT_OK


def cmd_exact(args) -> int:
    inst = _instance(args)
    res = ground_energy(inst, args.tol)
    _emit(json.loads(res.to_json()), args.out)
    return EXIT_OK


def cmd_dsp(args) -> int:
    r = densest_subgraph(load_graph(args.graph))
    _emit({"density": str(r.density), "density_float": float(r.density), "vertex_set": sorted(r.vertex_set)}, args.out)
    return EXIT_OK


def cmd_segments(args) -> int:
    _emit(two_segmented(load_graph(args.graph)).to_dict(), args.out)
    return EXIT_OK


def cmd_sweep(args) -> int:
    base = json.loads(Path(args.config).read_text()) if args.config else {}
    flags = {
        "family": args.family,
        "n": args.n,
        "graph_file": args.graph,
        "random": tuple(args.random) if args.random else None,
        "g_start": args.g_start,
        "g_stop": args.g_stop,
        "g_step": args.g_step,
        "solver": args.solver,
        "exact": args.exact,
        "tolerance": args.tol,
        "out": args.out,
        "seed": args.seed,
        "workers": args.workers,
    }
    given = {k: v for k, v in flags.items() if v is not None}
    if any(k in given for k in ("family", "graph_file", "random")):
        for k in ("family", "n", "graph_file", "random"):
            base.pop(k, None)
    base.update(given)
    if base.get("random") is not None:
        n, p, count, seed = base["random"]
        base["random"] = (int(n), float(p), int(count), int(seed))
    cfg = SweepConfig.from_dict(base)
    records = run_sweep(cfg)
    if not cfg.out:
        from .sweep import records_to_csv

        sys.stdout.write(records_to_csv(records))
    return EXIT_OK if not any(r.error for r in records) else EXIT_CHECK


def cmd_random_study(args) -> int:
    grid = g_grid(args.g_start, args.g_stop, args.g_step)
    study = run_random_study(args.n_min, args.n_max, args.count, args.p, grid, args.seed, args.tol, args.workers, args.out)
    if not args.out:
        sys.stdout.write(study.to_csv())
    sys.stderr.write(study.argmax_csv())
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify_bundle(data_dir=args.data_dir)
    _emit(report.to_dict(), args.out)
    return EXIT_OK if report.passed else EXIT_CHECK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="clifis", description="Optimal Clifford states for transverse-field Ising models")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("gen", help="generate a graph file")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", choices=["L", "P", "K"])
    src.add_argument("--random", nargs=3, metavar=("N", "P", "SEED"))
    src.add_argument("--id", help="bundled graph id (L9, kite6, G1, ...)")
    s.add_argument("--n", type=int)
    s.add_argument("--out")
    s.set_defaults(func=cmd_gen)

    def instance_args(s):
        s.add_argument("--graph", help="graph file or bundled id")
        s.add_argument("--g", help="field ratio, e.g. 0.5 or 8/9")
        s.add_argument("--instance", help="instance JSON file (overrides --graph/--g)")
        s.add_argument("--out")

    s = sub.add_parser("opt", help="optimal Clifford state for one instance")
    instance_args(s)
    s.add_argument("--solver", choices=["brute", "mincut", "wolfe"], default="mincut")
    s.set_defaults(func=cmd_opt)

    s = sub.add_parser("exact", help="exact ground energy by Lanczos")
    instance_args(s)
    s.add_argument("--tol", type=float, default=1e-8)
    s.set_defaults(func=cmd_exact)

    for name, fn in (("dsp", cmd_dsp), ("segments", cmd_segments)):
        s = sub.add_parser(name)
        s.add_argument("--graph", required=True)
        s.add_argument("--out")
        s.set_defaults(func=fn)

    s = sub.add_parser("sweep", help="sweep g for one graph source and write CSV")
    s.add_argument("--config", help="JSON config; flags win on conflict")
    s.add_argument("--family", choices=["L", "P", "K"])
    s.add_argument("--n", type=int)
    s.add_argument("--graph", help="graph file")
    s.add_argument("--random", nargs=4, metavar=("N", "P", "COUNT", "SEED"))
    s.add_argument("--g-start")
    s.add_argument("--g-stop")
    s.add_argument("--g-step")
    s.add_argument("--solver", choices=["brute", "mincut", "wolfe"])
    s.add_argument("--exact", action=argparse.BooleanOptionalAction, default=None)
    s.add_argument("--tol", type=float)
    s.add_argument("--seed", type=int)
    s.add_argument("--workers", type=int)
    s.add_argument("--out")
    s.set_defaults(func=cmd_sweep)

    s = sub.add_parser("random-study", help="mean relative error over random graphs")
    s.add_argument("--n-min", type=int, default=4)
    s.add_argument("--n-max", type=int, default=10)
    s.add_argument("--count", type=int, default=100)
    s.add_argument("--p", type=float, default=0.5)
    s.add_argument("--g-start", default="0")
    s.add_argument("--g-stop", default="3")
    s.add_argument("--g-step", default="1/20")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--tol", type=float, default=1e-8)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--out")
    s.set_defaults(func=cmd_random_study)

    s = sub.add_parser("verify", help="run the bundled invariant suite")
    s.add_argument("--data-dir", help="alternative directory holding G1.txt..G3.txt")
    s.add_argument("--out")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except InfeasibleSizeError as err:
        print(f"infeasible size: {err}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except InternalCheckError as err:
        print(f"internal check failed: {err}", file=sys.stderr)
        return EXIT_CHECK
    except (ValueError, FileNotFoundError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
