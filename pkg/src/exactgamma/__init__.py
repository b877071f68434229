"""Exact rational series for Euler's constant, with rigorous interval oracles."""

from .exact import (
    AmbiguousDigitsError,
    DigitString,
    Interval,
    PrecisionUnreachableError,
    ZeroDenominatorError,
    bernoulli,
    decimal_digits,
    decimal_of,
    format_rational,
    harmonic,
    iv_add,
    iv_mul,
    iv_neg,
    iv_sub,
    parse_rational,
    rat_make,
)
from .coefficients import (
    CoefficientPair,
    StirlingRow,
    coeff_A,
    coeff_a,
    coeff_table,
    pochhammer_eval,
    stirling_row,
)
from .series import (
    Eq65Value,
    GammaBracket,
    NotRationalLimitError,
    eq65_family,
    eq65_family_numeric,
    eq65_tail_bound,
    eq69_term,
    gamma_bracket,
    gamma_upper,
    kluyver_partial,
)
from .oracle import (
    atan_recip,
    gamma_oracle,
    ln_interval,
    pi_interval,
    zeta2_interval,
    zeta_minus_one_interval,
)
from .goldbach import PowerTerm, goldbach_check, power_stream, two_minus_zeta2_check
from .liouville import (
    c_minus_zeta2_digits,
    factorials_up_to,
    liouville_digit,
    liouville_prefix,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
