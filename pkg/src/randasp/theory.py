"""Closed-form statistics of the linear random-program model.

Quantities, for parameters (n, c1, c2) with p = c1/n, d = c2/n, q = 1 - p,
r = (1 - d)/q:

* alpha: unique root > 1 of alpha*ln(alpha) = c1 (equivalently
  alpha^alpha = e^c1).
* Pr(k): probability that a fixed size-k subset is an answer set,
      q^{(n-k)(n-k-1)} (1 - q^{n-k})^k (1 - d)^{n-k}.
* E[N_k] = C(n, k) Pr(k): expected number of size-k answer sets.
* expected_total = sum_k E[N_k], converging (n -> inf) to
      alpha * e^{(c1-c2)/alpha} / (alpha + c1).
* phi(x): Stirling-form continuous approximation of E[N_k]; chi(x) is its
  Gaussian approximation peaked at x0 = (alpha-1)n/alpha with width
  sigma = sqrt((alpha-1)n)/(alpha + c1).
* consistency_probability: 1 - e^{-gamma * expected_total}, the
  independence-heuristic estimate of P(at least one answer set); gamma = 1
  is the raw estimate, gamma around 0.5 fits observed dependence.

Everything that mixes huge and tiny factors is evaluated in log space
(log-gamma binomials), with exponentiation deferred to the last step.
`expected_count_size_k_exact` is an arbitrary-precision rational cross-check
for n <= 30.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.special import gammaln

ALPHA_RESIDUAL_TOL = 1e-12

# Ratio bounds E[N_k] / phi(k) implied by 1 <= n!/(e^-n n^n sqrt(2 pi n)) <= e/sqrt(2 pi).
STIRLING_LOWER = 2.0 * math.pi / math.e**2
STIRLING_UPPER = math.e / math.sqrt(2.0 * math.pi)

EXACT_ORACLE_MAX_N = 30


def _require_model(n: int, c1: float, c2: float) -> None:
    if n < 2:
        raise ValueError("n must be at least 2")
    if c1 < 0 or c2 < 0 or c1 + c2 <= 0:
        raise ValueError("need c1 >= 0, c2 >= 0, c1 + c2 > 0")
    if not n > max(c1, c2):
        raise ValueError(f"n must exceed max(c1, c2) = {max(c1, c2)}")


def solve_alpha(c1: float) -> float:
    """Root > 1 of f(a) = a ln a - c1: bisection to 1e-8, then Newton polish."""
    if c1 <= 0:
        raise ValueError("alpha is defined only for c1 > 0")

    def f(a: float) -> float:
        return a * math.log(a) - c1

    lo, hi = 1.0, max(math.e, c1 + 2.0)
    while f(hi) < 0:
        hi *= 2.0
    while hi - lo > 1e-8:
        mid = 0.5 * (lo + hi)
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
    a = 0.5 * (lo + hi)
    for _ in range(60):
        fa = f(a)
        if abs(fa) <= ALPHA_RESIDUAL_TOL:
            break
        a -= fa / (math.log(a) + 1.0)
    if abs(f(a)) > ALPHA_RESIDUAL_TOL:
        raise ArithmeticError(f"alpha solver did not converge for c1={c1}")
    return a


def log_prob_answer_set(n: int, k: int, c1: float, c2: float) -> float:
    """log Pr(k); -inf where the probability is exactly zero (e.g. c1 = 0)."""
    _require_model(n, c1, c2)
    if not 0 < k < n:
        raise ValueError(f"k must satisfy 0 < k < n, got k={k}, n={n}")
    p = c1 / n
    d = c2 / n
    if p == 0.0:
        return float("-inf")  # no pure rules, no supported atoms
    log_q = math.log1p(-p)
    t = (n - k) * log_q  # log q^{n-k} < 0
    log_kappa = math.log(-math.expm1(t))  # log(1 - q^{n-k}), stable at both ends
    return (n - k) * (n - k - 1) * log_q + k * log_kappa + (n - k) * math.log1p(-d)


def prob_answer_set(n: int, k: int, c1: float, c2: float) -> float:
    """Pr(k): probability that a fixed k-subset is an answer set."""
    return math.exp(log_prob_answer_set(n, k, c1, c2))


def _log_binom(n: int, k) -> np.ndarray | float:
    return gammaln(n + 1) - gammaln(np.asarray(k) + 1) - gammaln(n - np.asarray(k) + 1)


def expected_count_size_k(n: int, k: int, c1: float, c2: float) -> float:
    """E[N_k] = C(n, k) Pr(k), evaluated in log space."""
    return math.exp(float(_log_binom(n, k)) + log_prob_answer_set(n, k, c1, c2))


def expected_count_size_k_exact(n: int, k: int, c1: float, c2: float) -> Fraction:
    """Exact-rational E[N_k] for n <= 30 (cross-check oracle for the log path)."""
    _require_model(n, c1, c2)
    if not 0 < k < n:
        raise ValueError(f"k must satisfy 0 < k < n, got k={k}, n={n}")
    if n > EXACT_ORACLE_MAX_N:
        raise ValueError(f"exact oracle limited to n <= {EXACT_ORACLE_MAX_N}")
    q = 1 - Fraction(c1) / n
    d = Fraction(c2) / n
    pr = q ** ((n - k) * (n - k - 1)) * (1 - q ** (n - k)) ** k * (1 - d) ** (n - k)
    return math.comb(n, k) * pr


def _log_expected_counts(n: int, c1: float, c2: float) -> np.ndarray:
    """log E[N_k] for k = 1..n-1, vectorized."""
    k = np.arange(1, n, dtype=np.float64)
    p = c1 / n
    d = c2 / n
    if p == 0.0:
        return np.full(n - 1, -np.inf)
    log_q = math.log1p(-p)
    t = (n - k) * log_q
    log_kappa = np.log(-np.expm1(t))
    return (
        _log_binom(n, k)
        + (n - k) * (n - k - 1) * log_q
        + k * log_kappa
        + (n - k) * math.log1p(-d)
    )


def expected_total(n: int, c1: float, c2: float) -> float:
    """E[|AS|] = sum_{k=1}^{n-1} E[N_k]; terms summed in ascending magnitude."""
    _require_model(n, c1, c2)
    terms = np.exp(_log_expected_counts(n, c1, c2))
    return math.fsum(np.sort(terms).tolist())


def limit_expected_total(c1: float, c2: float) -> float:
    """n -> infinity limit of expected_total: alpha e^{(c1-c2)/alpha} / (alpha + c1)."""
    alpha = solve_alpha(c1)
    return alpha * math.exp((c1 - c2) / alpha) / (alpha + c1)


def log_phi(x: float, n: int, c1: float, c2: float) -> float:
    """log of the Stirling-form density phi(x) for real 0 < x < n."""
    _require_model(n, c1, c2)
    if not 0 < x < n:
        raise ValueError(f"x must satisfy 0 < x < n, got x={x}, n={n}")
    p = c1 / n
    d = c2 / n
    if p == 0.0:
        return float("-inf")
    log_q = math.log1p(-p)
    log_r = math.log1p(-d) - log_q
    t = (n - x) * log_q
    log_kappa = math.log(-math.expm1(t))
    log_n = math.log(n)
    return (
        0.5 * (log_n - math.log(2.0 * math.pi) - math.log(x) - math.log(n - x))
        + x * (log_n + log_kappa - math.log(x))
        + (n - x) * (log_n + log_r + t - math.log(n - x))
    )


def phi(x: float, n: int, c1: float, c2: float) -> float:
    """Stirling-form continuous approximation of E[N_x]."""
    return math.exp(log_phi(x, n, c1, c2))


@dataclass(frozen=True)
class TheoryParams:
    """All distribution parameters for fixed (n, c1, c2)."""

    n: int
    c1: float
    c2: float
    alpha: float
    x0: float
    sigma: float
    c0: float
    delta: float
    phi_x0_direct: float
    phi_x0_asymptotic: float
    limit_expected_total: float


def theory_params(n: int, c1: float, c2: float = 0.0) -> TheoryParams:
    """Compute alpha, x0, sigma, c0, delta and both phi(x0) evaluations.

    phi_x0_direct is phi evaluated at the peak; phi_x0_asymptotic is the
    closed form alpha e^{(c1-c2)/alpha} / sqrt(2 pi (alpha-1) n), which the
    direct value approaches at rate O(n^{-3/2}).
    """
    _require_model(n, c1, c2)
    alpha = solve_alpha(c1)
    x0 = (alpha - 1.0) * n / alpha
    sigma = math.sqrt((alpha - 1.0) * n) / (alpha + c1)
    c0 = max(math.sqrt(2.0) * (alpha + c1) / math.sqrt(alpha - 1.0), 1.0 / math.sqrt(c1))
    delta = c0 * math.sqrt(n * math.log(n))
    phi_direct = phi(x0, n, c1, c2)
    phi_asym = alpha * math.exp((c1 - c2) / alpha) / math.sqrt(2.0 * math.pi * (alpha - 1.0) * n)
    return TheoryParams(
        n=n,
        c1=c1,
        c2=c2,
        alpha=alpha,
        x0=x0,
        sigma=sigma,
        c0=c0,
        delta=delta,
        phi_x0_direct=phi_direct,
        phi_x0_asymptotic=phi_asym,
        limit_expected_total=alpha * math.exp((c1 - c2) / alpha) / (alpha + c1),
    )


def chi(x: float, tp: TheoryParams) -> float:
    """Gaussian approximation phi(x0) exp(-(x - x0)^2 / (2 sigma^2))."""
    z = (x - tp.x0) / tp.sigma
    return tp.phi_x0_direct * math.exp(-0.5 * z * z)


def consistency_probability(expected: float, gamma: float = 1.0) -> float:
    """1 - e^{-gamma * expected}; gamma = 1 recovers the raw independence estimate."""
    if expected < 0:
        raise ValueError("expected answer-set count must be non-negative")
    if not 0.0 < gamma <= 1.0:
        raise ValueError("gamma must lie in (0, 1]")
    return -math.expm1(-gamma * expected)
