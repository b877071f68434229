"""Rigorous interval oracles for the transcendental anchors.

All oracles return an :class:`~exactgamma.exact.Interval` with rational
endpoints certified to contain the true value, with width at most
10^(-digits).  Tails are always added to the interval explicitly; there are no
safety-factor fudge constants.

Methods:

* arctan(1/q): alternating series, consecutive partial sums bracket the limit.
* pi: Machin's identity pi = 16 arctan(1/5) - 4 arctan(1/239).
* ln x: 2 atanh(u) with u = (x-1)/(x+1), geometric tail bound, with
  power-of-two argument reduction through a memoized ln 2.
* gamma: Euler-Maclaurin correction of H_N - ln N, remainder bounded by the
  magnitude of the first omitted Bernoulli term.
* zeta(n) - 1: exact partial sum plus an Euler-Maclaurin tail enclosure.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .exact import Interval, PrecisionUnreachableError, bernoulli, harmonic
from .coefficients import pochhammer_eval

DEFAULT_DIGIT_CEILING = 100


def atan_recip(q: int, digits: int) -> Interval:
    """arctan(1/q) via the alternating series sum (-1)^m / ((2m+1) q^(2m+1)).

    Consecutive partial sums bracket the limit, so the first unadded term is a
    rigorous tail bound.
    """
    if q < 2:
        raise ValueError("atan_recip requires q >= 2")
    if digits < 1:
        raise ValueError("digits must be >= 1")
    eps = Fraction(1, 10 ** digits)
    qq = q * q
    s = Fraction(0)
    power = q  # q^(2m+1)
    m = 0
    sign = 1
    while True:
        term = Fraction(1, (2 * m + 1) * power)
        if term <= eps:
            nxt = s + sign * term
            return Interval(min(s, nxt), max(s, nxt))
        s += sign * term
        sign = -sign
        power *= qq
        m += 1


def pi_interval(digits: int) -> Interval:
    """pi via Machin's identity, interval-propagated; width <= 10^(-digits)."""
    inner = digits + 2
    a5 = atan_recip(5, inner)
    a239 = atan_recip(239, inner)
    return 16 * a5 - 4 * a239


def zeta2_interval(digits: int) -> Interval:
    """zeta(2) = pi^2 / 6 with containment; width <= 10^(-digits)."""
    p = pi_interval(digits + 2)
    return p * p / 6


def _atanh_twice(x: Fraction, digits: int) -> Interval:
    """2 atanh((x-1)/(x+1)) = ln x for x in (1, 2]; geometric tail bound."""
    u = (x - 1) / (x + 1)
    eps = Fraction(1, 10 ** digits)
    u2 = u * u
    one_minus = 1 - u2
    term = u  # u^(2i+1)
    s = Fraction(0)
    i = 0
    while True:
        s += term / (2 * i + 1)
        i += 1
        term *= u2
        tail = term / ((2 * i + 1) * one_minus)
        if 2 * tail <= eps:
            return Interval(2 * s, 2 * (s + tail))


@lru_cache(maxsize=None)
def _ln2(digits: int) -> Interval:
    return _atanh_twice(Fraction(2), digits)


def ln_interval(x, digits: int) -> Interval:
    """Natural logarithm of a positive rational; width <= 10^(-digits)."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError("ln_interval requires x > 0")
    if digits < 1:
        raise ValueError("digits must be >= 1")
    if x == 1:
        return Interval.point(0)
    if x < 1:
        return -ln_interval(1 / x, digits)
    e = 0
    while x > 2:
        x /= 2
        e += 1
    series = _atanh_twice(x, digits + 2)
    if e == 0:
        return series
    ln2 = _ln2(digits + 2 + len(str(e)))
    return series + e * ln2


def gamma_oracle(
    digits: int,
    *,
    start_n: int | None = None,
    ceiling: int = DEFAULT_DIGIT_CEILING,
) -> Interval:
    """Euler's constant by Euler-Maclaurin summation, rigorously enclosed.

    gamma = H_N - ln N - 1/(2N) + sum_{j=1..m} B_{2j} / (2j N^{2j}) + R_m,
    with |R_m| bounded by the magnitude of the first omitted term.  N and m
    are chosen so that the remainder plus the ln-interval width stays below
    10^(-digits); the remainder is added to the interval radius.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    if digits > ceiling:
        raise PrecisionUnreachableError(
            f"requested {digits} digits exceeds configured ceiling {ceiling}"
        )
    target = Fraction(1, 10 ** digits)
    N = start_n if start_n is not None else max(16, digits)
    while True:
        m = _find_euler_maclaurin_depth(N, target / 4)
        if m is not None:
            break
        N *= 2
        if N > 10 ** 7:
            raise PrecisionUnreachableError(
                f"no Euler-Maclaurin parameters reach {digits} digits"
            )
    core = harmonic(N) - Fraction(1, 2 * N)
    n2 = N * N
    npow = n2  # N^(2j)
    for j in range(1, m + 1):
        core += bernoulli(2 * j) / (2 * j * npow)
        npow *= n2
    rem = abs(bernoulli(2 * (m + 1))) / ((2 * m + 2) * npow)
    ln_n = ln_interval(N, digits + 2)
    return Interval(core - rem - ln_n.hi, core + rem - ln_n.lo)


def _find_euler_maclaurin_depth(N: int, bound: Fraction) -> int | None:
    """Smallest m whose first omitted term is <= bound, or None if the terms
    start growing before the bound is reached (N too small)."""
    n2 = N * N
    npow = n2
    prev = None
    for j in range(1, 400):
        term = abs(bernoulli(2 * j)) / (2 * j * npow)
        if term <= bound:
            return j - 1
        if prev is not None and term > prev:
            return None
        prev = term
        npow *= n2
    return None


def zeta_minus_one_interval(n: int, digits: int) -> Interval:
    """zeta(n) - 1 = sum_{k=2..M} k^(-n) plus a rigorous tail enclosure.

    The tail sum_{k>M} k^(-n) is enclosed by Euler-Maclaurin: with a = M+1,

        tail = a^(1-n)/(n-1) + a^(-n)/2
               + sum_j (B_{2j}/(2j)!) (n)_{2j-1} a^(-(n+2j-1)) +- R,

    where (n)_m is the rising factorial and |R| is bounded by the first
    omitted term (the summand x^(-n) is completely monotone, so the
    correction series envelops the true tail).
    """
    if n < 2:
        raise ValueError("zeta_minus_one_interval requires n >= 2")
    if digits < 1:
        raise ValueError("digits must be >= 1")
    target = Fraction(1, 10 ** digits)
    M = 16
    while True:
        tail = _zeta_tail(n, M + 1, target / 2)
        if tail is not None:
            break
        M *= 2
        if M > 10 ** 6:
            raise PrecisionUnreachableError(
                f"no tail parameters reach {digits} digits for n={n}"
            )
    base = sum(Fraction(1, k ** n) for k in range(2, M + 1))
    return Interval(base + tail.lo, base + tail.hi)


def _zeta_tail(n: int, a: int, bound: Fraction) -> Interval | None:
    """Enclosure of sum_{k=a}^inf k^(-n), or None if `a` is too small."""
    mid = Fraction(1, (n - 1) * a ** (n - 1)) + Fraction(1, 2 * a ** n)
    fact = 2  # (2j)!
    prev = None
    terms = []
    for j in range(1, 400):
        term = bernoulli(2 * j) * pochhammer_eval(n, 2 * j - 1) / (
            fact * a ** (n + 2 * j - 1)
        )
        if abs(term) <= bound:
            mid += sum(terms)
            rem = abs(term)
            return Interval(mid - rem, mid + rem)
        if prev is not None and abs(term) > prev:
            return None
        prev = abs(term)
        terms.append(term)
        fact *= (2 * j + 1) * (2 * j + 2)
    return None
