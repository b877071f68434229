"""The two coefficient routes, their sign relation, and the k = 6 discrepancy.

a_k comes from integrating x(1-x)(2-x)...(k-1-x) over [0,1]; A_k from the
Pochhammer integral of (-x)_k.  They satisfy a_k = (-1)^(k+1) A_k, so
a_k = |A_k|.  Published displays of the series sometimes show the sixth term
as 868/362880; the computation (both routes, plus the transformed-series
cross-check) gives 863/362880.
"""

from fractions import Fraction

from exactgamma import coeff_table, eq69_term, format_rational, harmonic

print(f"{'k':>3} {'a_k':>14} {'A_k':>14} {'a_k/k':>14}")
for pair in coeff_table(10):
    print(
        f"{pair.k:>3} {format_rational(pair.a):>14} "
        f"{format_rational(pair.A):>14} {format_rational(pair.a / pair.k):>14}"
    )

print()
print("transformed-series terms t_n = 2 a_(n+1) (H_(n+1) - 1)/n:")
for n in range(1, 6):
    print(f"  t_{n} = {format_rational(eq69_term(n))}")

print()
h6 = harmonic(6)
good = 2 * Fraction(863, 60480) * (h6 - 1) / 5
bad = 2 * Fraction(868, 60480) * (h6 - 1) / 5
print("with a_6 = 863/60480: t_5 =", format_rational(good), "(matches)")
print("with a_6 = 868/60480: t_5 =", format_rational(bad), "(does not)")
