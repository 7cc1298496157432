"""Independent reference computations used only by the tests.

Everything here deliberately avoids the code paths under test: mu comes from
sympy, zeta from mpmath, tuple counting from plain itertools + math.gcd.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import mpmath
import sympy

from udrange.spectrum import FrequencyPlan, enumerate_indices


def mobius_ref(n: int) -> int:
    return int(sympy.mobius(n))


def zeta_ref(m: int, dps: int = 30) -> float:
    with mpmath.workdps(dps):
        return float(mpmath.zeta(m))


def is_prime_trial_division(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def count_multiples_brute(plan: FrequencyPlan, j: int) -> int:
    return sum(1 for k in enumerate_indices(plan) if k % j == 0)


def coprime_fraction_brute(plan: FrequencyPlan, m: int) -> Fraction:
    """Exact P by enumerating every ordered m-tuple of plan indices."""
    indices = list(enumerate_indices(plan))
    hits = 0
    for tup in itertools.product(indices, repeat=m):
        g = tup[0]
        for v in tup[1:]:
            g = math.gcd(g, v)
            if g == 1:
                break
        if g == 1:
            hits += 1
    return Fraction(hits, len(indices) ** m)


def setwise_coprime_scan(values: tuple[int, ...]) -> bool:
    """Common-divisor scan: no d >= 2 divides every value."""
    upper = min(values)
    return not any(all(v % d == 0 for v in values) for d in range(2, upper + 1))
