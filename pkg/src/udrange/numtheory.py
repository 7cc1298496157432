"""Number-theoretic primitives: Mobius sieve, integer-argument zeta, multi-way GCD."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


@dataclass(frozen=True)
class MobiusTable:
    """Tabulated Mobius function mu(j) for 1 <= j <= limit.

    ``values`` is an int8 array of length ``limit + 1``; ``values[j]`` is
    mu(j) and slot 0 is unused (kept zero so indices line up with j).
    """

    limit: int
    values: np.ndarray

    def __getitem__(self, j: int) -> int:
        if not 1 <= j <= self.limit:
            raise IndexError(f"j={j} outside sieve range 1..{self.limit}")
        return int(self.values[j])

    def mertens(self) -> int:
        """Cumulative sum of mu(j) for j up to the limit."""
        return int(self.values[1:].sum(dtype=np.int64))


def sieve_mobius(limit: int) -> MobiusTable:
    """Sieve mu(j) for all j <= limit.

    Marks every multiple of each prime with a sign flip and zeroes multiples
    of squared primes; O(limit log log limit) with flat int8 storage.
    """
    if limit < 1:
        raise ValueError(f"sieve limit must be >= 1, got {limit}")
    mu = np.ones(limit + 1, dtype=np.int8)
    mu[0] = 0
    if limit >= 2:
        is_prime = np.ones(limit + 1, dtype=bool)
        is_prime[:2] = False
        for p in range(2, math.isqrt(limit) + 1):
            if is_prime[p]:
                is_prime[p * p :: p] = False
        for p in np.nonzero(is_prime)[0]:
            p = int(p)
            mu[p::p] *= -1
            sq = p * p
            if sq <= limit:
                mu[sq::sq] = 0
    return MobiusTable(limit=limit, values=mu)


def zeta_int(m: int, tol: float = 1e-12) -> float:
    """Riemann zeta at an integer argument m >= 2 with certified error < tol.

    Sums the series head and closes it with an integral tail estimate plus
    Euler-Maclaurin correction terms; the first omitted term bounds the
    truncation error, so the cutoff J stays small even at tol = 1e-12.
    """
    if m < 2:
        raise ValueError(f"zeta series diverges for m < 2, got {m}")
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    # Error after the B2 term is below m(m+1)(m+2)/720 * J^-(m+3).
    c4 = m * (m + 1) * (m + 2) / 720.0
    J = max(2, math.ceil((c4 / (tol / 2.0)) ** (1.0 / (m + 3))))
    head = math.fsum(j ** -float(m) for j in range(1, J))
    tail = (
        J ** (1.0 - m) / (m - 1)
        + 0.5 * J ** -float(m)
        + (m / 12.0) * J ** -(m + 1.0)
    )
    return head + tail


def gcd_all(values: Iterable[int] | Sequence[int]) -> int:
    """GCD of a non-empty collection of positive integers.

    Early-exits once the running gcd hits 1, which is the common case for
    random inputs.
    """
    g = 0
    n = 0
    for v in values:
        v = int(v)
        if v < 1:
            raise ValueError(f"all values must be positive integers, got {v}")
        n += 1
        if g != 1:
            g = math.gcd(g, v)
    if n == 0:
        raise ValueError("gcd_all requires at least one value")
    return g
