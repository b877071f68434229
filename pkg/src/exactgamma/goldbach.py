"""Goldbach's identity sum_{n>=2}(zeta(n)-1) = 1 and the perfect-power double series.

Dropping the n = 2 term gives 2 - pi^2/6 = sum_{n>=3} sum_{k>=2} k^(-n), a
series of positive rationals; its terms 1/k^n are also enumerated here in
non-increasing order with multiplicity (1/64 appears for both 2^6 and 4^3,
since the double sum counts it twice).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .exact import Interval
from .oracle import zeta_minus_one_interval


def _zeta_sum_check(start_n: int, N: int, digits: int) -> Interval:
    # inner precision inflated so N-1 per-term widths stay below the target
    inner = digits + len(str(N)) + 1
    lo = Fraction(0)
    hi = Fraction(0)
    for n in range(start_n, N + 1):
        z = zeta_minus_one_interval(n, inner)
        lo += z.lo
        hi += z.hi
    # tail over n: zeta(n)-1 <= 2^-n + 2^(1-n)/(n-1), so
    # sum_{n>N} (zeta(n)-1) <= 2^-N + 2^(1-N)/N = 2^-N (1 + 2/N)
    tail = Fraction(1, 2 ** N) * (1 + Fraction(2, N))
    return Interval(lo, hi + tail)


def goldbach_check(N: int, digits: int) -> Interval:
    """Interval for sum_{n=2..N}(zeta(n)-1) plus a rigorous bound on the
    omitted tail; contains 1 when N and the precision are adequate."""
    if N < 2:
        raise ValueError("goldbach_check requires N >= 2")
    return _zeta_sum_check(2, N, digits)


def two_minus_zeta2_check(N: int, digits: int) -> Interval:
    """Interval for sum_{n=3..N}(zeta(n)-1); converges to 2 - pi^2/6."""
    if N < 3:
        raise ValueError("two_minus_zeta2_check requires N >= 3")
    return _zeta_sum_check(3, N, digits)


@dataclass(frozen=True)
class PowerTerm:
    """One term 1/k^n of the double series, k >= 2, n >= 3."""

    k: int
    n: int
    value: Fraction


def power_stream(count: int) -> Iterator[PowerTerm]:
    """First `count` terms of {1/k^n : k >= 2, n >= 3} in non-increasing value
    order, with multiplicity; equal values are ordered by ascending base.

    Priority queue seeded with (2, 3); popping (k, n) admits (k, n+1), and
    popping (k, 3) additionally admits base k+1.
    """
    if count < 1:
        raise ValueError("power_stream requires count >= 1")
    heap = [(2 ** 3, 2, 3)]
    for _ in range(count):
        kn, k, n = heapq.heappop(heap)
        yield PowerTerm(k, n, Fraction(1, kn))
        heapq.heappush(heap, (kn * k, k, n + 1))
        if n == 3:
            heapq.heappush(heap, ((k + 1) ** 3, k + 1, 3))
