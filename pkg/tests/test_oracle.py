from fractions import Fraction as F

import pytest

from exactgamma import (
    Interval,
    PrecisionUnreachableError,
    atan_recip,
    decimal_digits,
    gamma_oracle,
    ln_interval,
    pi_interval,
    zeta2_interval,
    zeta_minus_one_interval,
)

GAMMA_39 = "0.577215664901532860606512090082402431042"


def test_atan_recip_precondition():
    with pytest.raises(ValueError):
        atan_recip(1, 10)


def test_atan_recip_values():
    assert str(decimal_digits(atan_recip(5, 12), 10)) == "0.1973955598"
    assert str(decimal_digits(atan_recip(239, 12), 10)) == "0.0041840760"
    assert atan_recip(5, 20).width() <= F(1, 10 ** 20)


def test_pi_interval():
    assert str(decimal_digits(pi_interval(12), 10)) == "3.1415926535"
    assert str(decimal_digits(pi_interval(3), 1)) == "3.1"
    assert pi_interval(40).width() <= F(1, 10 ** 40)


def test_zeta2_interval():
    assert str(decimal_digits(zeta2_interval(12), 10)) == "1.6449340668"
    assert str(decimal_digits(zeta2_interval(6), 3)) == "1.644"
    assert zeta2_interval(40).width() <= F(1, 10 ** 40)


def test_ln_interval_values():
    assert ln_interval(1, 10) == Interval.point(0)
    assert str(decimal_digits(ln_interval(2, 12), 10)) == "0.6931471805"
    assert str(decimal_digits(ln_interval(F(1, 2), 12), 10)) == "-0.6931471805"
    with pytest.raises(ValueError):
        ln_interval(0, 10)
    with pytest.raises(ValueError):
        ln_interval(-3, 10)


def test_ln_reciprocity():
    for x in (F(2), F(3), F(10), F(7, 3)):
        s = ln_interval(x, 25) + ln_interval(1 / x, 25)
        assert s.contains(0)


def test_ln_large_and_small_arguments():
    assert str(decimal_digits(ln_interval(1000, 12), 8)) == "6.90775527"
    assert str(decimal_digits(ln_interval(F(1, 1000), 12), 8)) == "-6.90775527"


def test_gamma_oracle_values():
    assert str(decimal_digits(gamma_oracle(12), 10)) == "0.5772156649"
    assert str(decimal_digits(gamma_oracle(45), 39)) == GAMMA_39
    assert str(decimal_digits(gamma_oracle(3), 1)) == "0.5"
    assert gamma_oracle(40).width() <= F(1, 10 ** 40)


def test_gamma_oracle_ceiling():
    with pytest.raises(PrecisionUnreachableError):
        gamma_oracle(120)
    assert str(decimal_digits(gamma_oracle(12, ceiling=150), 10)) == "0.5772156649"


def test_refinement_nesting():
    for make in (gamma_oracle, pi_interval, zeta2_interval):
        for d in (10, 20, 30):
            assert make(d).contains_interval(make(d + 10))
    for d in (10, 20, 30):
        assert ln_interval(2, d).contains_interval(ln_interval(2, d + 10))
        assert zeta_minus_one_interval(3, d).contains_interval(
            zeta_minus_one_interval(3, d + 10)
        )


def test_zeta_minus_one_values():
    z2m1 = zeta_minus_one_interval(2, 12)
    assert str(decimal_digits(z2m1, 10)) == "0.6449340668"
    assert str(decimal_digits(zeta_minus_one_interval(3, 12), 7)) == "0.2020569"
    z60 = zeta_minus_one_interval(60, 25)
    # dominated by the k = 2 term
    assert F(1, 2 ** 60) < z60.hi < F(2, 2 ** 60)
    with pytest.raises(ValueError):
        zeta_minus_one_interval(1, 10)


def test_cross_oracle_consistency():
    z = zeta_minus_one_interval(2, 30)
    shifted = Interval(z.lo + 1, z.hi + 1)
    assert shifted.overlaps(zeta2_interval(30))


def test_machin_residual():
    combo = 16 * atan_recip(5, 32) - 4 * atan_recip(239, 32)
    assert combo.overlaps(pi_interval(30))
    assert combo.contains_interval(pi_interval(40))
