"""Digits of Liouville's constant and of C - zeta(2) for rational C.

Liouville's constant sum_n 10^(-n!) has decimal digit 1 exactly at factorial
positions, a fully predictable pattern.  For any rational C > pi^2/6 the
difference C - pi^2/6 equals n + sum_k d_k/10^k, a series of nonnegative
rationals read off its certified decimal expansion.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import (
    AmbiguousDigitsError,
    DigitString,
    Interval,
    PrecisionUnreachableError,
    decimal_digits,
)
from .oracle import zeta2_interval

DEFAULT_PRECISION_CEILING = 200


def factorials_up_to(limit: int) -> list[int]:
    """All m! <= limit, by incremental multiplication."""
    if limit < 1:
        return []
    out = []
    f, m = 1, 1
    while f <= limit:
        out.append(f)
        m += 1
        f *= m
    return out


def liouville_digit(i: int) -> int:
    """i-th fractional decimal digit: 1 if i is a factorial, else 0."""
    if i < 1:
        raise ValueError("digit positions are 1-based")
    f, m = 1, 1
    while f < i:
        m += 1
        f *= m
    return 1 if f == i else 0


def liouville_prefix(d: int) -> DigitString:
    """First d fractional digits of Liouville's constant."""
    if d < 1:
        raise ValueError("liouville_prefix requires d >= 1")
    ones = set(factorials_up_to(d))
    frac = "".join("1" if i in ones else "0" for i in range(1, d + 1))
    return DigitString("+", "0", frac)


def c_minus_zeta2_digits(
    C,
    d: int,
    digits: int = 30,
    *,
    ceiling: int = DEFAULT_PRECISION_CEILING,
) -> DigitString:
    """Certified decimal expansion (integer part + d fractional digits) of
    C - zeta(2) for rational C > zeta(2).

    Digits are certified through interval refinement; on ambiguity the working
    precision doubles up to `ceiling`, then a hard error is raised.  The
    implied partial sums n + sum_{k<=d} d_k/10^k underestimate the true value
    by less than 10^(-d).
    """
    C = Fraction(C)
    if d < 1:
        raise ValueError("digit count must be >= 1")
    prec = max(digits, 10)
    # decide C > zeta(2); refinement terminates because C is rational and
    # zeta(2) is not
    while True:
        z2 = zeta2_interval(prec)
        if C > z2.hi:
            break
        if C < z2.lo:
            raise ValueError(f"C = {C} is not greater than zeta(2)")
        prec *= 2
        if prec > ceiling:
            raise PrecisionUnreachableError(
                "could not separate C from zeta(2) below the precision ceiling"
            )
    prec = max(prec, d + 5)
    while True:
        z2 = zeta2_interval(prec)
        diff = Interval(C - z2.hi, C - z2.lo)
        try:
            return decimal_digits(diff, d)
        except AmbiguousDigitsError:
            prec *= 2
            if prec > ceiling:
                raise PrecisionUnreachableError(
                    f"digit certification failed below the precision ceiling {ceiling}"
                )
