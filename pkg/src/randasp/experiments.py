"""Batch experiment harness: average counts, size distributions, consistency.

Trial t of a run seeded with s generates its program from sub-seed
mix_seed(s, t), so results are independent of scheduling; with workers > 1
trials are split into contiguous chunks executed in separate processes and
merged in chunk order.  All accumulators are integers (counts, histograms,
squared counts), which makes the reduction exact and byte-identical for any
worker count.
"""

from __future__ import annotations

import itertools
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .generate import LinearModelParams, generate_with_stats, mix_seed
from .solver import enumerate_answer_sets
from .theory import (
    chi,
    consistency_probability,
    expected_count_size_k,
    expected_total,
    limit_expected_total,
    theory_params,
)


@dataclass(frozen=True)
class ExperimentConfig:
    """Sweep grid (cross product of n, c1, c2 values) plus run controls."""

    n: tuple[int, ...]
    c1: tuple[float, ...]
    c2: tuple[float, ...]
    trials: int
    seed: int
    gamma: float = 0.5
    solver_limit: int | None = None

    def __init__(self, n, c1, c2, trials, seed, gamma=0.5, solver_limit=None):
        n = tuple(n) if isinstance(n, (tuple, list)) else (n,)
        c1 = tuple(c1) if isinstance(c1, (tuple, list)) else (c1,)
        c2 = tuple(c2) if isinstance(c2, (tuple, list)) else (c2,)
        if trials < 1:
            raise ValueError("trials must be at least 1")
        if not 0.0 < gamma <= 1.0:
            raise ValueError("gamma must lie in (0, 1]")
        for nn, a, b in itertools.product(n, c1, c2):
            LinearModelParams(nn, a, b)  # validates every combination
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "c1", c1)
        object.__setattr__(self, "c2", c2)
        object.__setattr__(self, "trials", trials)
        object.__setattr__(self, "seed", seed)
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "solver_limit", solver_limit)

    def combos(self):
        return itertools.product(self.n, self.c1, self.c2)


@dataclass(frozen=True)
class AvgResult:
    n: int
    c1: float
    c2: float
    trials: int
    avg_answer_sets: float
    stderr: float
    theory_finite_n: float
    theory_limit: float
    resamples: int = 0


@dataclass(frozen=True)
class DistResult:
    """Per-size curves for k = 0..n plus the normal-vs-empirical gap."""

    n: int
    c1: float
    c2: float
    trials: int
    totals: tuple[int, ...]  # answer sets of each size observed, all trials
    empirical_avg: tuple[float, ...]
    model_e_nk: tuple[float, ...]
    chi_k: tuple[float, ...]
    difference_rate: float
    resamples: int = 0


@dataclass(frozen=True)
class ConsRow:
    n: int
    c1: float
    c2: float
    trials: int
    empirical_ratio: float
    pred_full: float
    pred_gamma: float
    consistent: int = 0
    resamples: int = 0


@dataclass(frozen=True)
class ConsResult:
    gamma: float
    rows: tuple[ConsRow, ...]


def difference_rate(f, g) -> float:
    """D(f, g) = sum((f-g)^2) / sum(f^2) over a shared index range."""
    f = list(f)
    g = list(g)
    if len(f) != len(g):
        raise ValueError(f"curves must share an index range: {len(f)} vs {len(g)}")
    denom = math.fsum(x * x for x in f)
    if denom <= 0.0:
        raise ValueError("difference rate undefined: sum of squares of f is zero")
    num = math.fsum((x - y) * (x - y) for x, y in zip(f, g))
    return num / denom


# -- chunk workers (module-level: picklable for process pools) ----------------


def _count_chunk(args):
    """(sum, sum of squares, per-size histogram, resamples) over a trial range."""
    n, c1, c2, seed, start, stop, limit = args
    params = LinearModelParams(n, c1, c2)
    hist = [0] * (n + 1)
    total = sq = resamples = 0
    for t in range(start, stop):
        prog, attempts = generate_with_stats(params, mix_seed(seed, t))
        col = enumerate_answer_sets(prog, limit=limit)
        if col.truncated:
            raise RuntimeError(
                f"trial {t}: enumeration truncated at solver limit {limit}; "
                "aborting the row"
            )
        total += col.count
        sq += col.count * col.count
        for k, cnt in col.size_histogram.items():
            hist[k] += cnt
        resamples += attempts
    return start, total, sq, hist, resamples


def _existence_chunk(args):
    """(number of consistent programs, resamples) over a trial range."""
    n, c1, c2, seed, start, stop = args
    params = LinearModelParams(n, c1, c2)
    consistent = resamples = 0
    for t in range(start, stop):
        prog, attempts = generate_with_stats(params, mix_seed(seed, t))
        if enumerate_answer_sets(prog, limit=1).count > 0:
            consistent += 1
        resamples += attempts
    return start, consistent, resamples


def _chunk_ranges(trials: int, workers: int):
    per = (trials + workers - 1) // workers
    return [(lo, min(lo + per, trials)) for lo in range(0, trials, per)]


def _run_chunks(fn, arg_lists, workers: int):
    if workers <= 1 or len(arg_lists) <= 1:
        return [fn(a) for a in arg_lists]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(fn, arg_lists))
    return sorted(results, key=lambda r: r[0])  # merge in trial order


def _theory_columns(n: int, c1: float, c2: float) -> tuple[float, float]:
    if c1 == 0.0:
        return 0.0, float("nan")  # alpha undefined; expected total is exactly 0
    return expected_total(n, c1, c2), limit_expected_total(c1, c2)


def run_avg_experiment(cfg: ExperimentConfig, workers: int = 1, progress: bool = False) -> list[AvgResult]:
    """Mean answer-set count per (n, c1, c2) combination, with 3-sigma-ready stderr."""
    out = []
    for n, c1, c2 in cfg.combos():
        args = [
            (n, c1, c2, cfg.seed, lo, hi, cfg.solver_limit)
            for lo, hi in _chunk_ranges(cfg.trials, workers)
        ]
        total = sq = resamples = 0
        for _, t, s, _, rs in _run_chunks(_count_chunk, args, workers):
            total += t
            sq += s
            resamples += rs
        mean = total / cfg.trials
        var = (sq - total * total / cfg.trials) / (cfg.trials - 1) if cfg.trials > 1 else 0.0
        stderr = math.sqrt(max(var, 0.0) / cfg.trials)
        finite_n, limit = _theory_columns(n, c1, c2)
        out.append(
            AvgResult(n, c1, c2, cfg.trials, mean, stderr, finite_n, limit, resamples)
        )
        if progress:
            print(
                f"avg n={n} c1={c1} c2={c2}: mean={mean:.4f} (theory {finite_n:.4f})",
                file=sys.stderr,
            )
    return out


def run_dist_experiment(cfg: ExperimentConfig, workers: int = 1, progress: bool = False) -> DistResult:
    """Empirical per-size averages vs E[N_k] vs the Gaussian curve, single combo."""
    combos = list(cfg.combos())
    if len(combos) != 1:
        raise ValueError("distribution experiment needs exactly one (n, c1, c2) combination")
    n, c1, c2 = combos[0]
    args = [
        (n, c1, c2, cfg.seed, lo, hi, cfg.solver_limit)
        for lo, hi in _chunk_ranges(cfg.trials, workers)
    ]
    totals = [0] * (n + 1)
    resamples = 0
    for _, _, _, hist, rs in _run_chunks(_count_chunk, args, workers):
        for k, cnt in enumerate(hist):
            totals[k] += cnt
        resamples += rs
    empirical = [t / cfg.trials for t in totals]
    if c1 > 0.0:
        model = [0.0] + [expected_count_size_k(n, k, c1, c2) for k in range(1, n)] + [0.0]
        tp = theory_params(n, c1, c2)
        chi_k = [chi(float(k), tp) for k in range(n + 1)]
    else:
        model = [0.0] * (n + 1)
        chi_k = [0.0] * (n + 1)
    drate = difference_rate(chi_k[1:n], empirical[1:n])
    if progress:
        print(
            f"dist n={n} c1={c1} c2={c2}: {sum(totals)} answer sets, D={drate:.5f}",
            file=sys.stderr,
        )
    return DistResult(
        n=n,
        c1=c1,
        c2=c2,
        trials=cfg.trials,
        totals=tuple(totals),
        empirical_avg=tuple(empirical),
        model_e_nk=tuple(model),
        chi_k=tuple(chi_k),
        difference_rate=drate,
        resamples=resamples,
    )


def run_consistency_experiment(cfg: ExperimentConfig, workers: int = 1, progress: bool = False) -> ConsResult:
    """Fraction of consistent programs vs the two closed-form predictions."""
    rows = []
    for n, c1, c2 in cfg.combos():
        args = [
            (n, c1, c2, cfg.seed, lo, hi) for lo, hi in _chunk_ranges(cfg.trials, workers)
        ]
        consistent = resamples = 0
        for _, c, rs in _run_chunks(_existence_chunk, args, workers):
            consistent += c
            resamples += rs
        ratio = consistent / cfg.trials
        if c1 > 0.0:
            expected = expected_total(n, c1, c2)
            pred_full = consistency_probability(expected, 1.0)
            pred_gamma = consistency_probability(expected, cfg.gamma)
        else:
            pred_full = pred_gamma = 0.0
        rows.append(
            ConsRow(n, c1, c2, cfg.trials, ratio, pred_full, pred_gamma, consistent, resamples)
        )
        if progress:
            print(
                f"consistency n={n} c1={c1} c2={c2}: ratio={ratio:.4f} "
                f"in [{pred_gamma:.4f}, {pred_full:.4f}]?",
                file=sys.stderr,
            )
    return ConsResult(gamma=cfg.gamma, rows=tuple(rows))
