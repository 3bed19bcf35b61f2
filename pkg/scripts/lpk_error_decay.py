"""Relative error at the transition value against n for chains, rings and cliques.

    python3 scripts/lpk_error_decay.py --n-max 14 --out results/decay.csv
"""

import argparse
import csv
import sys

from clifis.density import two_segmented
from clifis.exact import ground_energy, relative_error
from clifis.graphs import family_graph
from clifis.ising import IsingInstance
from clifis.subset_opt import mincut_min


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-min", type=int, default=4)
    ap.add_argument("--n-max", type=int, default=12)
    ap.add_argument("--out")
    args = ap.parse_args()
    fh = open(args.out, "w", newline="") if args.out else sys.stdout
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(("family", "n", "transition", "relative_error"))
    for fam in "LPK":
        for n in range(args.n_min, args.n_max + 1):
            graph = family_graph(fam, n)
            t = two_segmented(graph).transition_value
            inst = IsingInstance(graph, t)
            err = relative_error(mincut_min(inst).cost, ground_energy(inst).energy)
            w.writerow((fam, n, str(t), repr(err)))
    if args.out:
        fh.close()


if __name__ == "__main__":
    main()
