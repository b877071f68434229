from fractions import Fraction as F

import pytest

from exactgamma import (
    Interval,
    PrecisionUnreachableError,
    c_minus_zeta2_digits,
    decimal_digits,
    factorials_up_to,
    liouville_digit,
    liouville_prefix,
    zeta2_interval,
)

DISPLAYED = "0.1100010000000000000000010"


def test_liouville_digit_examples():
    assert liouville_digit(1) == 1
    assert liouville_digit(2) == 1
    assert liouville_digit(3) == 0
    assert liouville_digit(24) == 1
    assert liouville_digit(25) == 0
    with pytest.raises(ValueError):
        liouville_digit(0)


def test_liouville_digit_positions():
    ones = {i for i in range(1, 1001) if liouville_digit(i) == 1}
    assert ones == {1, 2, 6, 24, 120, 720}
    assert ones == set(factorials_up_to(1000))


def test_ones_density():
    assert len(factorials_up_to(10 ** 3)) == 6
    assert len(factorials_up_to(10 ** 6)) == 9
    assert sum(liouville_digit(i) for i in range(1, 10 ** 3 + 1)) == 6


def test_liouville_prefix_examples():
    assert str(liouville_prefix(7)) == "0.1100010"
    assert str(liouville_prefix(25)) == DISPLAYED
    assert str(liouville_prefix(1)) == "0.1"


def test_liouville_prefix_reconstruction():
    for d in (7, 25, 120, 500):
        partial = sum(F(1, 10 ** f) for f in factorials_up_to(d))
        assert str(decimal_digits(Interval.point(partial), d)) == str(
            liouville_prefix(d)
        )


def test_c_minus_zeta2_examples():
    assert str(c_minus_zeta2_digits(2, 6)) == "0.355065"
    ds = c_minus_zeta2_digits(5, 3)
    assert ds.integer_part == "3"
    assert ds.fractional_part == "355"
    with pytest.raises(ValueError):
        c_minus_zeta2_digits(F(3, 2), 6)


def test_c_minus_zeta2_stability():
    base = c_minus_zeta2_digits(2, 20, 30)
    again = c_minus_zeta2_digits(2, 20, 40)
    assert base == again


def test_c_minus_zeta2_partial_sums_monotone():
    hi = 2 - zeta2_interval(40).lo
    prev = F(-1)
    for d in range(1, 15):
        ds = c_minus_zeta2_digits(2, d)
        partial = int(ds.integer_part) + F(int(ds.fractional_part), 10 ** d)
        assert partial >= prev
        assert partial < hi
        prev = partial


def test_c_minus_zeta2_ceiling():
    with pytest.raises(PrecisionUnreachableError):
        # force the comparison loop past a ceiling it can never satisfy
        c_minus_zeta2_digits(F(16449340668482264, 10 ** 16), 5, 10, ceiling=12)
