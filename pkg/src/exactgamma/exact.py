"""Exact rational arithmetic, rigorous interval arithmetic, and digit rendering.

Everything here is built on `fractions.Fraction`, which already guarantees the
canonical form we need everywhere: lowest terms, positive denominator, zero as
0/1.  An :class:`Interval` is a pair of rational endpoints certified to contain
a real value; every operation returns an interval containing the exact image of
its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb


class ZeroDenominatorError(ZeroDivisionError):
    """Raised when a rational is constructed with denominator zero."""


class AmbiguousDigitsError(ValueError):
    """Raised when an interval straddles a digit boundary at the requested depth."""


class PrecisionUnreachableError(RuntimeError):
    """Raised when a requested precision cannot be met within configured limits."""


def rat_make(n: int, d: int) -> Fraction:
    """Return n/d in lowest terms with positive denominator."""
    if d == 0:
        raise ZeroDenominatorError("denominator must be nonzero")
    return Fraction(n, d)


def format_rational(q: Fraction) -> str:
    """Canonical text form: "p/q" in lowest terms, or "p" for integers."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


_HARMONIC: list[Fraction] = [Fraction(0)]


def harmonic(n: int) -> Fraction:
    """H_n = sum of 1/j for j = 1..n, exactly."""
    if n < 1:
        raise ValueError("harmonic requires n >= 1")
    while len(_HARMONIC) <= n:
        j = len(_HARMONIC)
        _HARMONIC.append(_HARMONIC[-1] + Fraction(1, j))
    return _HARMONIC[n]


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """n-th Bernoulli number, convention B_1 = -1/2.

    Computed by the recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1,
    with B_0 = 1.
    """
    if n < 0:
        raise ValueError("bernoulli requires n >= 0")
    if n == 0:
        return Fraction(1)
    acc = Fraction(0)
    for j in range(n):
        acc += comb(n + 1, j) * bernoulli(j)
    return -acc / (n + 1)


@dataclass(frozen=True)
class Interval:
    """Pair of rational endpoints certified to contain a real value."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"invalid interval [{self.lo}, {self.hi}]")

    @staticmethod
    def point(q) -> "Interval":
        q = Fraction(q)
        return Interval(q, q)

    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, q) -> bool:
        return self.lo <= q <= self.hi

    def contains_interval(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def overlaps(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def widened(self, r) -> "Interval":
        r = Fraction(r)
        return Interval(self.lo - r, self.hi + r)

    def __add__(self, other):
        return iv_add(self, _as_interval(other))

    def __radd__(self, other):
        return iv_add(_as_interval(other), self)

    def __sub__(self, other):
        return iv_sub(self, _as_interval(other))

    def __rsub__(self, other):
        return iv_sub(_as_interval(other), self)

    def __mul__(self, other):
        return iv_mul(self, _as_interval(other))

    def __rmul__(self, other):
        return iv_mul(_as_interval(other), self)

    def __neg__(self):
        return iv_neg(self)

    def __truediv__(self, other):
        q = Fraction(other)
        if q > 0:
            return Interval(self.lo / q, self.hi / q)
        if q < 0:
            return Interval(self.hi / q, self.lo / q)
        raise ZeroDenominatorError("interval division by zero scalar")

    def __str__(self):
        return f"[{format_rational(self.lo)}, {format_rational(self.hi)}]"


def _as_interval(x) -> Interval:
    if isinstance(x, Interval):
        return x
    return Interval.point(x)


def iv_add(x: Interval, y: Interval) -> Interval:
    return Interval(x.lo + y.lo, x.hi + y.hi)


def iv_sub(x: Interval, y: Interval) -> Interval:
    return Interval(x.lo - y.hi, x.hi - y.lo)


def iv_neg(x: Interval) -> Interval:
    return Interval(-x.hi, -x.lo)


def iv_mul(x: Interval, y: Interval) -> Interval:
    products = (x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi)
    return Interval(min(products), max(products))


@dataclass(frozen=True)
class DigitString:
    """Truncated decimal expansion in which every digit is certified correct."""

    sign: str  # "+" or "-"
    integer_part: str
    fractional_part: str

    def __str__(self):
        head = "-" if self.sign == "-" else ""
        if self.fractional_part:
            return f"{head}{self.integer_part}.{self.fractional_part}"
        return f"{head}{self.integer_part}"


def _trunc_scaled(q: Fraction) -> int:
    """Truncation toward zero of a scaled rational."""
    n, d = q.numerator, q.denominator
    if n >= 0:
        return n // d
    return -((-n) // d)


def decimal_digits(x: Interval, d: int) -> DigitString:
    """Exact truncated decimal expansion of the real enclosed by `x`.

    Truncates (never rounds).  If the interval straddles a digit boundary at
    position <= d the digits are not determined and an
    :class:`AmbiguousDigitsError` is raised; the caller must recompute the
    interval at higher precision.
    """
    if d < 0:
        raise ValueError("digit count must be nonnegative")
    scale = 10 ** d
    t_lo = _trunc_scaled(x.lo * scale)
    t_hi = _trunc_scaled(x.hi * scale)
    if t_lo != t_hi:
        raise AmbiguousDigitsError(
            f"interval {x} straddles a digit boundary at depth {d}"
        )
    t = t_lo
    sign = "-" if t < 0 else "+"
    m = abs(t)
    return DigitString(sign, str(m // scale), str(m % scale).zfill(d) if d else "")


def decimal_of(q, d: int) -> str:
    """Truncated decimal rendering of an exact rational."""
    return str(decimal_digits(Interval.point(Fraction(q)), d))
