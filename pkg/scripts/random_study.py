"""Mean relative error over random graphs, per vertex count.

The default is the CI-sized run (N = 4..10).  The full N = 4..17 run is
opt-in and takes many hours on one core:

    python3 scripts/random_study.py --n-max 17 --workers 8 --out results/random17.csv
"""

import argparse

from clifis.sweep import g_grid, run_random_study


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-min", type=int, default=4)
    ap.add_argument("--n-max", type=int, default=10)
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--p", type=float, default=0.5)
    ap.add_argument("--g-stop", default="3")
    ap.add_argument("--step", default="1/20")
    ap.add_argument("--seed", type=int, default=2024)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", default="results/random.csv")
    args = ap.parse_args()
    study = run_random_study(args.n_min, args.n_max, args.count, args.p, g_grid(0, args.g_stop, args.step),
                             args.seed, workers=args.workers, out=args.out)
    print(study.argmax_csv(), end="")


if __name__ == "__main__":
    main()
