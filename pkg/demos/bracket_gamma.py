"""Bracketing Euler's constant between exact rational bounds.

Partial sums of the rational series gamma = sum a_k / k climb toward gamma
from below, while truncations of the transformed series
gamma = 3/2 - (1/2)(zeta(2) + sum t_n) descend from above.  Together they pin
gamma inside an ever-narrowing rational bracket, checked here against the
certified Euler-Maclaurin oracle.
"""

from exactgamma import decimal_digits, decimal_of, format_rational, gamma_bracket, gamma_oracle

oracle = gamma_oracle(45)
print("certified gamma digits:", decimal_digits(oracle, 39))
print()

print(f"{'K':>4} {'lower':>22} {'upper':>22} {'width':>12}")
for K in (1, 2, 5, 10, 25, 50, 100):
    br = gamma_bracket(K, 40)
    width = br.upper.hi - br.lower
    print(
        f"{K:>4} {decimal_of(br.lower, 12):>22} "
        f"{decimal_of(br.upper.hi, 12):>22} {decimal_of(width, 8):>12}"
    )
    assert br.lower < oracle.lo and oracle.hi < br.upper.lo

print()
br = gamma_bracket(7, 30)
print("exact lower bound after 7 terms:", format_rational(br.lower))
