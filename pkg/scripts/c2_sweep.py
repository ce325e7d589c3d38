#!/usr/bin/env python3
"""Average answer-set count as the contradiction-rule intensity c2 varies.

Defaults sweep c2 = 0..20 at n = 200, c1 = 10; the empirical means should
track limit_expected_total(c1, c2) = alpha e^{(c1-c2)/alpha} / (alpha + c1).
"""

import argparse

from randasp.csvout import write_avg_csv
from randasp.experiments import ExperimentConfig, run_avg_experiment


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=200)
    ap.add_argument("--c1", type=float, default=10.0)
    ap.add_argument("--c2", type=float, nargs="+", default=[float(v) for v in range(21)])
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=20240903)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", default="c2_sweep.csv")
    args = ap.parse_args()

    cfg = ExperimentConfig(n=args.n, c1=args.c1, c2=args.c2, trials=args.trials, seed=args.seed)
    results = run_avg_experiment(cfg, workers=args.workers, progress=True)
    write_avg_csv(args.out, results, cfg.seed)
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
