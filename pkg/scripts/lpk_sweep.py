"""Energy and relative-error sweeps for chains, rings and cliques.

Writes one CSV (plus plot recipe) per graph into the output directory.

    python3 scripts/lpk_sweep.py --n-min 4 --n-max 12 --out results/lpk
"""

import argparse
import math
from pathlib import Path

from clifis.density import two_segmented
from clifis.graphs import family_graph
from clifis.sweep import SweepConfig, run_sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-min", type=int, default=4)
    ap.add_argument("--n-max", type=int, default=12)
    ap.add_argument("--step", default="1/20")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", default="results/lpk")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for fam in "LPK":
        for n in range(args.n_min, args.n_max + 1):
            t = two_segmented(family_graph(fam, n)).transition_value
            cfg = SweepConfig(family=fam, n=n, g_stop=max(2, math.ceil(2 * t)), g_step=args.step,
                              out=str(out / f"{fam}{n}.csv"), workers=args.workers)
            records = run_sweep(cfg)
            peak = max(records, key=lambda r: r.relative_error)
            print(f"{fam}{n}: transition={float(t):.4f} peak g={float(peak.g):.2f} max error={peak.relative_error:.4f}")


if __name__ == "__main__":
    main()
