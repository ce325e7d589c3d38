#!/usr/bin/env python3
"""Average answer-set counts across a ladder of universe sizes.

Desk-scale defaults reproduce the c1=5, c2=0 table (n = 50..500 step 50);
bump --trials to 5000 for the full-scale run.
"""

import argparse

from randasp.csvout import write_avg_csv
from randasp.experiments import ExperimentConfig, run_avg_experiment


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=list(range(50, 501, 50)))
    ap.add_argument("--c1", type=float, default=5.0)
    ap.add_argument("--c2", type=float, default=0.0)
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=20240901)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", default="avg_sweep.csv")
    args = ap.parse_args()

    cfg = ExperimentConfig(n=args.n, c1=args.c1, c2=args.c2, trials=args.trials, seed=args.seed)
    results = run_avg_experiment(cfg, workers=args.workers, progress=True)
    write_avg_csv(args.out, results, cfg.seed)
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
