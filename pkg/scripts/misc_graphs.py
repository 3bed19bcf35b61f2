"""Sweeps over the three bundled figure graphs G1-G3 and the kite graph.

    python3 scripts/misc_graphs.py --out results/misc
"""

import argparse
from pathlib import Path

from clifis.density import extreme_thresholds, two_segmented
from clifis.graphs import graph_by_id, write_graph
from clifis.sweep import SweepConfig, run_sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--g-stop", default="4")
    ap.add_argument("--step", default="1/20")
    ap.add_argument("--out", default="results/misc")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for gid in ("G1", "G2", "G3", "kite6"):
        graph = graph_by_id(gid)
        path = out / f"{gid}.txt"
        write_graph(graph, path)
        run_sweep(SweepConfig(graph_file=str(path), g_stop=args.g_stop, g_step=args.step, out=str(out / f"{gid}.csv")))
        seg = two_segmented(graph)
        lower, upper = extreme_thresholds(graph)
        print(f"{gid}: two-segmented={seg.two_segmented} max density={seg.max_density} thresholds=({lower}, {upper})")


if __name__ == "__main__":
    main()
