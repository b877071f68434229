"""Rational series for irrational targets.

Two constructions of series of positive rationals with irrational-looking
sums: the perfect-power double series summing to 2 - pi^2/6 (a consequence of
Goldbach's identity sum_{n>=2}(zeta(n)-1) = 1), and the decimal expansion of
C - zeta(2) for a rational C.  Liouville's constant shows a provably
irrational number with perfectly regular digits.
"""

from exactgamma import (
    c_minus_zeta2_digits,
    decimal_of,
    format_rational,
    goldbach_check,
    liouville_prefix,
    power_stream,
    two_minus_zeta2_check,
    zeta2_interval,
)

iv = goldbach_check(60, 15)
print("sum_(n=2..60) (zeta(n)-1) + tail is inside")
print(f"  [{decimal_of(iv.lo, 16)}, {decimal_of(iv.hi, 16)}]  (contains 1: {iv.contains(1)})")

print()
print("perfect-power terms 1/k^n in non-increasing order (1/64 appears twice):")
total = 0
for t in power_stream(10):
    total += t.value
    print(f"  1/{t.k}^{t.n} = {format_rational(t.value)}   running sum {decimal_of(total, 8)}")
alt = two_minus_zeta2_check(60, 15)
z2 = zeta2_interval(15)
print("series limit:", decimal_of(alt.lo, 12), " vs 2 - zeta(2):", decimal_of(2 - z2.hi, 12))

print()
print("Liouville's constant, 25 digits: ", liouville_prefix(25))
print("2 - zeta(2) digits (a series of positive rationals for C - pi^2/6):")
print("  ", c_minus_zeta2_digits(2, 30))
print("5 - zeta(2):", c_minus_zeta2_digits(5, 10))
