import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gsalg.magnitude import (ComparisonUndecided, Magnitude, MagnitudeError,
                             bitlen_lt_pow2, log2_bounds, magnitude_cmp)


def test_from_int_canonical_form():
    m = Magnitude.from_int(12)
    assert m.to_int() == 12
    assert Magnitude.from_int(1).to_int() == 1
    assert Magnitude.power(4, 10).to_int() == 4 ** 10
    assert Magnitude.pow2(100).to_int() == 1 << 100
    with pytest.raises(MagnitudeError):
        Magnitude.from_int(0)
    with pytest.raises(MagnitudeError):
        Magnitude.from_int(-3)


def test_canonical_equality_across_routes():
    # 8^10 = 2^30 = (2^5)^6, all collapse to one canonical form
    a = Magnitude.power(8, 10)
    b = Magnitude.pow2(30)
    c = Magnitude.power(32, 6)
    assert magnitude_cmp(a, b) == 0
    assert magnitude_cmp(b, c) == 0
    assert magnitude_cmp(a.mul(b), Magnitude.pow2(60)) == 0


@given(st.integers(1, 10 ** 9), st.integers(1, 10 ** 9))
def test_cmp_matches_int_order_small(x, y):
    assert magnitude_cmp(Magnitude.from_int(x), Magnitude.from_int(y)) == (
        (x > y) - (x < y))


@given(st.integers(1, 40), st.integers(0, 600), st.integers(1, 40), st.integers(0, 600))
def test_cmp_materializes_medium(c1, e1, c2, e2):
    a = Magnitude.from_int(2 * c1 + 1).mul(Magnitude.pow2(e1))
    b = Magnitude.from_int(2 * c2 + 1).mul(Magnitude.pow2(e2))
    x = (2 * c1 + 1) << e1
    y = (2 * c2 + 1) << e2
    assert magnitude_cmp(a, b) == ((x > y) - (x < y))


def test_cmp_huge_via_log_refinement():
    # 40^(8*101^3) against powers of two nearby: log2(40) = 5.3219...
    big = Magnitude.power(40, 8 * 101 ** 3)
    exact_log2 = 8 * 101 ** 3 * math.log2(40)
    below = Magnitude.pow2(int(exact_log2) - 1)
    above = Magnitude.pow2(int(exact_log2) + 2)
    assert magnitude_cmp(big, below) > 0
    assert magnitude_cmp(big, above) < 0
    # and a doubly-exponential gap decided by bit lengths alone
    assert magnitude_cmp(Magnitude.pow2(1 << 40), big) > 0


def test_cmp_mixed_int_argument():
    assert magnitude_cmp(Magnitude.pow2(10), 1024) == 0
    assert magnitude_cmp(1023, Magnitude.pow2(10)) < 0


def test_pow_int_and_mul():
    m = Magnitude.from_int(6)
    assert m.pow_int(5).to_int() == 6 ** 5
    assert m.pow_int(0).to_int() == 1
    assert (m * m).to_int() == 36


def test_bit_length_and_log2_floor():
    assert Magnitude.pow2(17).log2_floor() == 17
    assert Magnitude.pow2(17).is_power_of_two()
    assert Magnitude.from_int(12).bit_length() == 4
    assert not Magnitude.from_int(12).is_power_of_two()


def test_bitlen_lt_pow2_boundaries():
    # r < 2^t exactly when bit_length(r) <= t
    assert bitlen_lt_pow2(1, 1)
    assert bitlen_lt_pow2((1 << 64) - 1, 64)
    assert not bitlen_lt_pow2(1 << 64, 64)
    assert bitlen_lt_pow2(Magnitude.pow2(63), 64)
    assert not bitlen_lt_pow2(Magnitude.pow2(64), 64)
    big = Magnitude.power(40, 8 * 101 ** 3)   # about 2^43865502.7
    assert bitlen_lt_pow2(big, 43865503 + 10)
    assert not bitlen_lt_pow2(big, 43865503 - 10)


def test_log2_bounds_certified():
    lo, hi = log2_bounds(10, 30)
    true = math.log2(10)
    assert lo <= Fraction(true).limit_denominator(10 ** 12) <= hi
    assert hi - lo <= Fraction(1, 1 << 30)
    lo1, hi1 = log2_bounds(1, 10)
    assert lo1 == hi1 == 0
    lo2, hi2 = log2_bounds(1 << 20, 10)
    assert lo2 == hi2 == 20


@settings(max_examples=40)
@given(st.integers(2, 10 ** 6), st.integers(4, 10))
def test_log2_bounds_bracket_property(n, prec):
    lo, hi = log2_bounds(n, prec)
    assert hi - lo <= Fraction(1, 1 << prec)
    # 2^lo <= n <= 2^hi, cross-multiplied into integer comparisons
    assert 2 ** lo.numerator <= n ** lo.denominator
    assert n ** hi.denominator <= 2 ** hi.numerator


def test_json_round_trip():
    for m in (Magnitude.from_int(12), Magnitude.power(40, 8 * 101 ** 3),
              Magnitude.pow2(1 << 20)):
        back = Magnitude.from_json(m.to_json())
        assert magnitude_cmp(m, back) == 0


def test_exponent_budget_guard():
    # exponents may be huge, but their bit size is capped
    with pytest.raises(MagnitudeError):
        Magnitude.pow2(1 << (1 << 26))
    with pytest.raises(MagnitudeError):
        Magnitude.power(3, -1)


def test_materialize_guard_means_undecided_or_decides():
    # two magnitudes equal in value but built through different smooth routes
    # stay comparable; genuinely huge close calls may refuse instead of lying
    a = Magnitude.power(6, 1 << 10)
    b = Magnitude.power(36, 1 << 9)
    assert magnitude_cmp(a, b) == 0
    c = Magnitude.power(6, (1 << 22) + 1)
    d = Magnitude.power(6, 1 << 22).mul(Magnitude.from_int(6))
    try:
        assert magnitude_cmp(c, d) == 0
    except ComparisonUndecided:
        pass


def test_random_cross_check_with_ints():
    rng = random.Random(99)
    for _ in range(200):
        x = rng.randrange(1, 1 << 200)
        y = rng.randrange(1, 1 << 200)
        got = magnitude_cmp(Magnitude.from_int(x), Magnitude.from_int(y))
        assert got == ((x > y) - (x < y))
