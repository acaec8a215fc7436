import math
from fractions import Fraction

import pytest

from faulhaber.exact import (
    approx_decimal,
    binomial,
    format_rational,
    is_integer,
    modpow,
    reduce_fraction,
)


def binomial_oracle(n, j):
    # independent multiplicative route: each partial product is exact
    r = 1
    for i in range(1, j + 1):
        r = r * (n - j + i) // i
    return r


def test_binomial_small_cases():
    assert binomial(5, 2) == 10
    assert binomial(7, 0) == 1
    assert binomial(0, 0) == 1


def test_binomial_above_diagonal_is_zero():
    assert binomial(2, 5) == 0
    assert binomial(10, 11) == 0


def test_binomial_central_value_against_product_oracle():
    assert binomial_oracle(50, 25) == 126410606437752
    assert binomial(50, 25) == 126410606437752


def test_binomial_rejects_negative_arguments():
    with pytest.raises(ValueError):
        binomial(-1, 0)
    with pytest.raises(ValueError):
        binomial(3, -2)


def test_binomial_pascal_identity():
    for n in range(1, 65):
        for j in range(1, n + 1):
            assert binomial(n, j) == binomial(n - 1, j - 1) + binomial(n - 1, j)


def test_reduce_sign_normalization():
    q = reduce_fraction(2, -4)
    assert (q.numerator, q.denominator) == (-1, 2)


def test_reduce_zero_and_gcd():
    assert reduce_fraction(0, 7) == Fraction(0, 1)
    assert reduce_fraction(30, 12) == Fraction(5, 2)


def test_reduce_zero_denominator_raises():
    with pytest.raises(ZeroDivisionError):
        reduce_fraction(1, 0)


def test_reduced_form_is_canonical():
    for num in range(-30, 31):
        for den in range(-30, 31):
            if den == 0:
                continue
            q = reduce_fraction(num, den)
            assert q.denominator > 0
            assert math.gcd(abs(q.numerator), q.denominator) == 1


def test_modpow_small_cases():
    assert modpow(2, 10, 1000) == 24
    assert modpow(12345, 0, 7) == 1
    assert modpow(3, 100, 7) == 4  # Fermat: 3^100 = 3^(6*16+4) = 3^4 = 81 = 4 (mod 7)


def test_modpow_matches_exact_power():
    for b in range(13):
        for e in range(13):
            for m in range(1, 101):
                assert modpow(b, e, m) == (b**e) % m


def test_modpow_rejects_bad_inputs():
    with pytest.raises(ValueError):
        modpow(2, 3, 0)
    with pytest.raises(ValueError):
        modpow(2, -1, 5)


def test_is_integer():
    assert is_integer(Fraction(4, 2))
    assert not is_integer(Fraction(1, 2))


def test_format_rational():
    assert format_rational(Fraction(-1, 30)) == "-1/30"
    assert format_rational(Fraction(0)) == "0"
    assert format_rational(Fraction(9, 2)) == "9/2"
    assert format_rational(Fraction(10, 5)) == "2"


def test_approx_decimal_is_a_string():
    s = approx_decimal(Fraction(-1, 30))
    assert isinstance(s, str)
    assert s.startswith("-0.033")
