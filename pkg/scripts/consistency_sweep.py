#!/usr/bin/env python3
"""Consistency ratio across n, against the two closed-form predictions.

Existence-only solving, so n = 1000 rows are cheap.  Defaults run the
c1=3, c2=0 ladder; try --c1 4 --c2 4 for the variant with contradictions.
"""

import argparse

from randasp.csvout import write_consistency_csv
from randasp.experiments import ExperimentConfig, run_consistency_experiment


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=list(range(100, 1001, 100)))
    ap.add_argument("--c1", type=float, default=3.0)
    ap.add_argument("--c2", type=float, default=0.0)
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=20240904)
    ap.add_argument("--gamma", type=float, default=0.5)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", default="consistency_sweep.csv")
    args = ap.parse_args()

    cfg = ExperimentConfig(
        n=args.n, c1=args.c1, c2=args.c2, trials=args.trials, seed=args.seed, gamma=args.gamma
    )
    result = run_consistency_experiment(cfg, workers=args.workers, progress=True)
    write_consistency_csv(args.out, result, cfg.seed)
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
