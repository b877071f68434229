"""Series identities for Euler's constant and rational bracketing.

Three intertwined representations are handled here:

* the classical rational series gamma = sum_{k>=1} a_k / k, whose partial sums
  are exact rational lower bounds;
* a family decomposition gamma = sum_n f_n where each family n is
  (-1)^n sum_{k>=n+1} A_n / (k (k-n+1)); only the n = 1 family has an
  irrational (zeta(2)) part, every other family has a rational closed form by
  telescoping;
* the transformed series gamma = 3/2 - (1/2)(zeta(2) + sum_{n>=1} t_n) with
  positive rational terms t_n, so truncations give upper bounds.

The general rule t_n = 2 a_{n+1} (H_{n+1} - 1) / n is a reconstruction from
five known displayed fractions; it is gated by a self-test that verifies all
five before any term is handed out.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import Interval, PrecisionUnreachableError, harmonic
from .coefficients import coeff_A, coeff_a
from .oracle import zeta2_interval


class NotRationalLimitError(ValueError):
    """The n = 1 family has an irrational limit and no exact partial-sum target."""


@dataclass(frozen=True)
class Eq65Value:
    """Closed form of one series family: rational_part + zeta2_coeff * zeta(2)."""

    n: int
    rational_part: Fraction
    zeta2_coeff: Fraction


@dataclass(frozen=True)
class GammaBracket:
    """Rational lower bound and rigorous upper interval for Euler's constant."""

    terms_used: int
    lower: Fraction
    upper: Interval


def kluyver_partial(K: int) -> Fraction:
    """Exact sum_{k=1..K} a_k / k; always below gamma since every term is positive."""
    if K < 1:
        raise ValueError("kluyver_partial requires K >= 1")
    return sum(coeff_a(k) / k for k in range(1, K + 1))


def eq65_family(n: int) -> Eq65Value:
    """Closed form of family n.

    n = 0 telescopes to A_0 = 1; n = 1 is A_1 - A_1 zeta(2); for n >= 2 the
    telescoping identity sum_{k>=n+1} 1/(k(k-n+1)) = (H_n - 1)/(n-1) gives a
    rational value (-1)^n A_n (H_n - 1)/(n - 1).
    """
    if n < 0:
        raise ValueError("eq65_family requires n >= 0")
    if n == 0:
        return Eq65Value(0, Fraction(1), Fraction(0))
    if n == 1:
        a1 = coeff_A(1)
        return Eq65Value(1, a1, -a1)
    rational = (-1) ** n * coeff_A(n) * (harmonic(n) - 1) / (n - 1)
    return Eq65Value(n, rational, Fraction(0))


def _tree_sum(values: list[Fraction]) -> Fraction:
    """Pairwise summation; avoids quadratic denominator growth."""
    if not values:
        return Fraction(0)
    while len(values) > 1:
        values = [
            values[i] + values[i + 1] if i + 1 < len(values) else values[i]
            for i in range(0, len(values), 2)
        ]
    return values[0]


def eq65_family_numeric(n: int, terms: int) -> Fraction:
    """Literal partial sum of the first `terms` terms of family n.

    Brute-force oracle converging to eq65_family(n).rational_part; the n = 1
    family is excluded because its limit is irrational.
    """
    if n < 0:
        raise ValueError("eq65_family_numeric requires n >= 0")
    if n == 1:
        raise NotRationalLimitError("family n=1 has an irrational limit")
    if terms < 1:
        raise ValueError("terms must be >= 1")
    parts = [Fraction(1, k * (k - n + 1)) for k in range(n + 1, n + 1 + terms)]
    return (-1) ** n * coeff_A(n) * _tree_sum(parts)


def eq65_tail_bound(n: int, terms: int) -> Fraction:
    """Exact tail |A_n| sum_{k>n+terms} 1/(k(k-n+1)) for n >= 2.

    By telescoping this equals |A_n| (H_M - H_{M-n+1})/(n-1) with M = n+terms,
    a short exact sum of n-1 unit fractions.
    """
    if n < 2:
        raise ValueError("eq65_tail_bound requires n >= 2")
    M = n + terms
    gap = sum(Fraction(1, j) for j in range(M - n + 2, M + 1))
    return abs(coeff_A(n)) * gap / (n - 1)


# The five displayed fractions of the transformed series; the reconstruction
# below must reproduce all of them before it is trusted.
EQ69_PRINTED = (
    Fraction(1, 12),
    Fraction(5, 144),
    Fraction(247, 12960),
    Fraction(77, 6400),
    Fraction(25027, 3024000),
)

_eq69_checked = False


def _eq69_rule(n: int) -> Fraction:
    return 2 * coeff_a(n + 1) * (harmonic(n + 1) - 1) / n


def _ensure_eq69_validated():
    global _eq69_checked
    if _eq69_checked:
        return
    for n, printed in enumerate(EQ69_PRINTED, start=1):
        got = _eq69_rule(n)
        if got != printed:
            raise AssertionError(
                f"transformed-series rule failed self-test at n={n}: "
                f"rule gives {got}, known value is {printed}"
            )
    _eq69_checked = True


def eq69_term(n: int) -> Fraction:
    """Term t_n > 0 of the transformed series gamma = 3/2 - (1/2)(zeta(2) + sum t_n).

    Uses the reconstructed rule t_n = 2 a_{n+1} (H_{n+1} - 1)/n, validated once
    against the five known fractions.
    """
    if n < 1:
        raise ValueError("eq69_term requires n >= 1")
    _ensure_eq69_validated()
    return _eq69_rule(n)


def gamma_upper(K: int, digits: int) -> Interval:
    """Interval for 3/2 - (1/2)(zeta(2) + sum_{n=1..K} t_n).

    All omitted t_n are positive, so the enclosed value exceeds gamma.
    """
    if K < 1:
        raise ValueError("gamma_upper requires K >= 1")
    if digits < 5:
        raise PrecisionUnreachableError("gamma_upper needs at least 5 digits")
    t_sum = sum(eq69_term(n) for n in range(1, K + 1))
    z2 = zeta2_interval(digits)
    return Interval(
        Fraction(3, 2) - (z2.hi + t_sum) / 2,
        Fraction(3, 2) - (z2.lo + t_sum) / 2,
    )


def gamma_bracket(K: int, digits: int) -> GammaBracket:
    """Exact lower bound and rigorous upper interval after K terms each way."""
    return GammaBracket(K, kluyver_partial(K), gamma_upper(K, digits))
