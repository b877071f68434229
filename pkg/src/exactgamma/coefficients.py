"""Exact series coefficients via Stirling-number expansion and polynomial integration.

Two rational coefficient families are computed here:

* ``coeff_A(k)``: defined by an integral of the Pochhammer polynomial (-x)_k
  over [0, 1], scaled by (-1)^k / k!.
* ``coeff_a(k)``: the positive coefficients of the classical rational series
  for Euler's constant, gamma = sum a_k / k.

They are related by a_k = (-1)^(k+1) A_k, and ``coeff_a`` checks that identity
against an independent expand-and-integrate route on every call.

Note: k = 6 is the one index where published displays of the series disagree
with computation.  Both routes here, and the independent series cross-check in
:mod:`exactgamma.series`, give a_6 = 863/60480 (sixth series term 863/362880);
the sometimes-quoted 868/362880 fails every cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial


@dataclass(frozen=True)
class StirlingRow:
    """Signed first-kind Stirling coefficients of the degree-k falling factorial.

    x(x-1)...(x-k+1) = sum_j s[j-1] * x^j, j = 1..k.
    """

    k: int
    s: tuple[int, ...]


@lru_cache(maxsize=None)
def stirling_row(k: int) -> StirlingRow:
    """Row k of the signed Stirling numbers of the first kind.

    Recurrence: row(1) = (1,); s(k+1, j) = s(k, j-1) - k * s(k, j).
    """
    if k < 1:
        raise ValueError("stirling_row requires k >= 1")
    if k == 1:
        return StirlingRow(1, (1,))
    prev = stirling_row(k - 1).s
    m = k - 1
    row = tuple(
        (prev[j - 1] if j >= 1 else 0) - m * (prev[j] if j < m else 0)
        for j in range(k)
    )
    return StirlingRow(k, row)


def pochhammer_eval(z, n: int) -> Fraction:
    """Rising factorial (z)_n = z(z+1)...(z+n-1); (z)_0 = 1."""
    if n < 0:
        raise ValueError("pochhammer_eval requires n >= 0")
    z = Fraction(z)
    out = Fraction(1)
    for i in range(n):
        out *= z + i
    return out


@lru_cache(maxsize=None)
def coeff_A(k: int) -> Fraction:
    """A_k = ((-1)^k / k!) * integral over [0,1] of (-x)_k.

    Since (-x)_k = (-1)^k x(x-1)...(x-k+1), expanding the falling factorial
    over powers of x and integrating term-wise gives
    A_k = (1/k!) * sum_j s(k, j) / (j + 1).
    """
    if k < 0:
        raise ValueError("coeff_A requires k >= 0")
    if k == 0:
        return Fraction(1)
    row = stirling_row(k).s
    acc = Fraction(0)
    for j, sj in enumerate(row, start=1):
        acc += Fraction(sj, j + 1)
    return acc / factorial(k)


def _coeff_a_integral(k: int) -> Fraction:
    """Expand x * (1-x)(2-x)...(k-1-x) into monomials and integrate over [0,1]."""
    # poly[i] is the coefficient of x^i in (1-x)(2-x)...(k-1-x)
    poly = [1]
    for j in range(1, k):
        nxt = [0] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i] += j * c
            nxt[i + 1] -= c
        poly = nxt
    # multiply by x, then integrate: coefficient of x^i contributes c/(i+2)
    acc = Fraction(0)
    for i, c in enumerate(poly):
        acc += Fraction(c, i + 2)
    return acc / factorial(k)


@lru_cache(maxsize=None)
def coeff_a(k: int) -> Fraction:
    """a_k > 0, computed by two independent routes that must agree.

    Route 1 is the sign flip of :func:`coeff_A`; route 2 expands the
    polynomial x(1-x)(2-x)...(k-1-x) directly and integrates term-wise.
    """
    if k < 1:
        raise ValueError("coeff_a requires k >= 1")
    route1 = (-1) ** (k + 1) * coeff_A(k)
    route2 = _coeff_a_integral(k)
    if route1 != route2:
        raise AssertionError(
            f"coefficient routes disagree at k={k}: {route1} vs {route2}"
        )
    return route1


@dataclass(frozen=True)
class CoefficientPair:
    """(a_k, A_k) with the sign relation a_k = (-1)^(k+1) A_k."""

    k: int
    a: Fraction
    A: Fraction


def coeff_table(k_max: int) -> list[CoefficientPair]:
    """Pairs (k, a_k, A_k) for k = 1..k_max."""
    if k_max < 1:
        raise ValueError("coeff_table requires k_max >= 1")
    return [CoefficientPair(k, coeff_a(k), coeff_A(k)) for k in range(1, k_max + 1)]


COEFF6_NOTE = (
    "note: a_6 = 863/60480 (series term a_6/6 = 863/362880); the "
    "sometimes-quoted 868/362880 is inconsistent with both integral routes "
    "and with the transformed-series cross-check"
)
