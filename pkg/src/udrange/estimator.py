"""Probability that the unambiguous distance attains its maximum.

Equivalently: the probability that M indices drawn uniformly (with
replacement) from the plan's index set are setwise coprime. Three routes:
exact Mobius-weighted inclusion-exclusion, the 1/zeta(M) asymptotic, and
seeded Monte Carlo.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import sqrt
from typing import Iterable, Sequence

import numpy as np

from .numtheory import sieve_mobius, zeta_int
from .spectrum import FrequencyPlan, count_multiples_upto, sample_selection_batch

DEFAULT_SIEVE_LIMIT = 10_000_000
SIEVE_LIMIT_ENV = "UD_SIEVE_LIMIT"

MC_BLOCK_SIZE = 65_536  # fixed so results never depend on worker count


class SieveLimitError(RuntimeError):
    """Plan's largest index exceeds the configured Mobius sieve limit."""


def sieve_limit() -> int:
    raw = os.environ.get(SIEVE_LIMIT_ENV)
    return int(raw) if raw else DEFAULT_SIEVE_LIMIT


@dataclass(frozen=True)
class ProbabilityEstimate:
    """A value of P with its method tag and, for Monte Carlo, its error bar."""

    value: float
    method: str  # exact | asymptotic | monte_carlo
    m: int
    trials: int = 0
    std_error: float = 0.0
    exact_numerator: int | None = field(default=None, repr=False)
    exact_denominator: int | None = field(default=None, repr=False)


@lru_cache(maxsize=32)
def _coprimality_weights(plan: FrequencyPlan) -> tuple[tuple[int, int], ...]:
    """Aggregate Mobius weights by multiple-count value.

    For each j up to the plan's largest index let x_j be the number of plan
    indices divisible by j. Returns pairs (v, sum of mu(j) over j with
    x_j = v), so that Z = sum_v w_v * v^M for every M. x_j = 0 beyond the
    largest index, so the cutoff is exact, and grouping by value keeps the
    big-integer sum short.
    """
    k_max = plan.last_index
    mob = sieve_mobius(k_max)
    x = count_multiples_upto(plan, k_max)
    mu = mob.values[1:].astype(np.int64)
    mask = (mu != 0) & (x > 0)
    weights = np.bincount(x[mask], weights=mu[mask].astype(np.float64))
    # Each bin is a sum of +/-1 terms, far below 2**53: the float sums are exact.
    out = []
    for v in np.nonzero(weights)[0]:
        out.append((int(v), int(weights[v])))
    return tuple(out)


def prob_exact(plan: FrequencyPlan, m: int) -> ProbabilityEstimate:
    """Exact P = Z / N^M with Z = sum_j mu(j) * x_j^M in big-integer arithmetic.

    The alternating sum cancels catastrophically in floating point and N^M
    overflows fixed-width types, so everything stays integer until the final
    rounding. Raises SieveLimitError when the plan's largest index exceeds
    the sieve limit (default 10^7, override via UD_SIEVE_LIMIT).
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if plan.last_index > sieve_limit():
        raise SieveLimitError(
            f"largest plan index {plan.last_index} exceeds sieve limit "
            f"{sieve_limit()} (set {SIEVE_LIMIT_ENV} to raise it)"
        )
    z = sum(w * v**m for v, w in _coprimality_weights(plan))
    denom = plan.n_frequencies**m
    return ProbabilityEstimate(
        value=float(Fraction(z, denom)),
        method="exact",
        m=m,
        exact_numerator=z,
        exact_denominator=denom,
    )


def prob_asymptotic(m: int, tol: float = 1e-12) -> ProbabilityEstimate:
    """Asymptotic P = 1/zeta(M), accurate to tol.

    zeta(m) > 1, so the reciprocal's error is no larger than zeta's own.
    """
    if m < 2:
        raise ValueError(f"asymptotic form needs m >= 2, got {m}")
    return ProbabilityEstimate(value=1.0 / zeta_int(m, tol), method="asymptotic", m=m)


def _mc_block(
    plan: FrequencyPlan, m: int, n: int, seed_entropy: tuple[int, ...]
) -> int:
    rng = np.random.default_rng(np.random.SeedSequence(list(seed_entropy)))
    draws = sample_selection_batch(plan, m, n, rng)
    return int(np.count_nonzero(np.gcd.reduce(draws, axis=1) == 1))


def prob_montecarlo(
    plan: FrequencyPlan,
    m: int,
    trials: int,
    seed: int,
    workers: int = 1,
) -> ProbabilityEstimate:
    """Monte Carlo estimate of P over seeded with-replacement draws.

    Trials are split into fixed-size blocks, each driven by a substream
    derived from (seed, block index), so the result is bit-identical for any
    worker count.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if seed < 0:
        raise ValueError(f"seed must be non-negative, got {seed}")
    return _montecarlo_with_entropy(plan, m, trials, (seed,), workers)


@dataclass(frozen=True)
class SweepRow:
    """One (plan, M) cell of the reproduction sweep."""

    n_segments: int
    n_frequencies: int
    m: int
    exact: float
    asymptotic: float
    monte_carlo: float
    std_error: float
    trials: int
    seed: int


def _row_seed(master_seed: int, plan_idx: int, m: int) -> tuple[int, ...]:
    # Per-row derived entropy keeps rows reproducible under any execution order.
    return (master_seed, plan_idx, m)


def sweep(
    plans: Sequence[FrequencyPlan],
    m_values: Iterable[int],
    trials: int,
    seed: int,
    workers: int = 1,
) -> list[SweepRow]:
    """Exact, asymptotic and Monte Carlo estimates for every (plan, M) pair."""
    rows = []
    for plan_idx, plan in enumerate(plans):
        for m in m_values:
            exact = prob_exact(plan, m)
            asym = prob_asymptotic(m)
            mc_seed_entropy = _row_seed(seed, plan_idx, m)
            mc = _montecarlo_with_entropy(plan, m, trials, mc_seed_entropy, workers)
            rows.append(
                SweepRow(
                    n_segments=plan.n_segments,
                    n_frequencies=plan.n_frequencies,
                    m=m,
                    exact=exact.value,
                    asymptotic=asym.value,
                    monte_carlo=mc.value,
                    std_error=mc.std_error,
                    trials=trials,
                    seed=seed,
                )
            )
    return rows


def _montecarlo_with_entropy(
    plan: FrequencyPlan,
    m: int,
    trials: int,
    entropy: tuple[int, ...],
    workers: int,
) -> ProbabilityEstimate:
    blocks = [
        (b, min(MC_BLOCK_SIZE, trials - b * MC_BLOCK_SIZE))
        for b in range((trials + MC_BLOCK_SIZE - 1) // MC_BLOCK_SIZE)
    ]
    if workers > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            hits = sum(
                pool.map(
                    lambda bn: _mc_block(plan, m, bn[1], entropy + (bn[0],)),
                    blocks,
                )
            )
    else:
        hits = sum(_mc_block(plan, m, n, entropy + (b,)) for b, n in blocks)
    p_hat = hits / trials
    return ProbabilityEstimate(
        value=p_hat,
        method="monte_carlo",
        m=m,
        trials=trials,
        std_error=sqrt(p_hat * (1.0 - p_hat) / trials),
    )
