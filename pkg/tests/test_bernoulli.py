import math
from fractions import Fraction

import pytest

from faulhaber.bernoulli import (
    bernoulli_egf,
    bernoulli_recursive,
    is_regular,
    vsc_denominator,
)

GROUND_TRUTH_TO_4 = (
    Fraction(1),
    Fraction(-1, 2),
    Fraction(1, 6),
    Fraction(0),
    Fraction(-1, 30),
)


@pytest.mark.parametrize("route", [bernoulli_recursive, bernoulli_egf])
def test_first_five_values(route):
    assert route(4).values == GROUND_TRUTH_TO_4


def test_base_case_and_sign_convention():
    t = bernoulli_recursive(1)
    assert t[0] == 1
    assert t[1] == Fraction(-1, 2)


def test_sixth_value_both_routes():
    # denominator route confirms: primes with (p-1) | 6 are 2, 3, 7, product 42
    assert bernoulli_recursive(6)[6] == Fraction(1, 42)
    assert bernoulli_egf(6)[6] == Fraction(1, 42)


def test_egf_entry_8():
    assert bernoulli_egf(8)[8] == Fraction(-1, 30)


def test_routes_agree_to_40():
    rec = bernoulli_recursive(40)
    egf = bernoulli_egf(40)
    assert rec.values == egf.values
    assert rec.route == "recursive"
    assert egf.route == "egf"


def test_odd_indices_vanish_on_both_routes():
    rec = bernoulli_recursive(49)
    egf = bernoulli_egf(49)
    for m in range(1, 25):
        assert rec[2 * m + 1] == 0
        assert egf[2 * m + 1] == 0


def test_table_indexing_bounds():
    t = bernoulli_recursive(4)
    assert t.limit == 4
    with pytest.raises(IndexError):
        t[5]
    with pytest.raises(IndexError):
        t[-1]


def test_negative_limit_rejected():
    with pytest.raises(ValueError):
        bernoulli_recursive(-1)
    with pytest.raises(ValueError):
        bernoulli_egf(-1)


@pytest.mark.parametrize("k,expected", [(2, 6), (4, 30), (12, 2730)])
def test_vsc_denominator_known_values(k, expected):
    assert vsc_denominator(k) == expected


def test_vsc_denominator_rejects_odd():
    with pytest.raises(ValueError):
        vsc_denominator(3)
    with pytest.raises(ValueError):
        vsc_denominator(0)


def test_vsc_denominator_matches_reduced_denominators():
    table = bernoulli_recursive(60)
    for k in range(2, 61, 2):
        d = vsc_denominator(k)
        assert table.denominator(k) == d
        assert math.gcd(table.numerator(k), d) == 1


def test_regular_small_primes():
    assert is_regular(5) == (True, ())
    assert is_regular(7) == (True, ())


def test_irregular_37_with_offending_index():
    regular, offending = is_regular(37)
    assert not regular
    assert offending == (32,)
    # verify the witness directly: 37 divides that numerator
    assert bernoulli_recursive(32).numerator(32) % 37 == 0


def test_irregular_primes_below_100():
    irregular = set()
    for p in (5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
              61, 67, 71, 73, 79, 83, 89, 97):
        regular, _ = is_regular(p)
        if not regular:
            irregular.add(p)
    assert irregular == {37, 59, 67}


def test_is_regular_rejects_bad_inputs():
    with pytest.raises(ValueError):
        is_regular(3)
    with pytest.raises(ValueError):
        is_regular(9)
    with pytest.raises(ValueError):
        is_regular(4)


def test_memo_is_safe_under_concurrent_growth():
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=8) as pool:
        tables = list(pool.map(bernoulli_recursive, [150] * 8 + [80] * 8))
    reference = bernoulli_recursive(150)
    for t in tables:
        assert t.values == reference.values[: t.limit + 1]
