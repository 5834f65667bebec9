from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gsalg.fields import GF2, GF3, QQ, Field, FieldError, field_by_name, is_prime


def test_primality_small():
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
    for n in range(2, 40):
        assert is_prime(n) == (n in primes)
    assert not is_prime(1) and not is_prime(0) and not is_prime(-7)


def test_field_construction():
    assert Field(7).char == 7
    with pytest.raises(FieldError):
        Field(6)
    with pytest.raises(FieldError):
        Field(1 << 31)


def test_coerce_fractions_mod_p():
    # 1/2 = 2 mod 3 since 2*2 = 4 = 1
    assert GF3.coerce(Fraction(1, 2)) == 2
    assert GF3.coerce(Fraction(-1)) == 2
    assert GF2.coerce(Fraction(5, 3)) == 1
    with pytest.raises(FieldError):
        GF3.coerce(Fraction(1, 3))
    assert QQ.coerce(2) == Fraction(2)


def test_field_by_name():
    assert field_by_name("gf2") == GF2
    assert field_by_name("gfp:3") == GF3
    assert field_by_name("gfp:101").char == 101
    for alias in ("q", "QQ", "rational", "rationals"):
        assert field_by_name(alias) == QQ
    with pytest.raises(FieldError):
        field_by_name("gf4")


@given(st.sampled_from([2, 3, 5, 101]), st.integers(1, 10 ** 6))
def test_inverse_is_inverse(p, a):
    fld = Field(p)
    x = a % p
    if x == 0:
        return
    assert fld.mul(x, fld.inv(x)) == 1


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_gfp_arithmetic_matches_int_mod(a, b):
    for fld in (GF2, GF3, Field(7)):
        p = fld.char
        assert fld.add(a % p, b % p) == (a + b) % p
        assert fld.mul(a % p, b % p) == (a * b) % p
        assert fld.sub(a % p, b % p) == (a - b) % p


def test_zero_inverse_raises():
    for fld in (GF2, GF3, QQ):
        with pytest.raises(ZeroDivisionError):
            fld.inv(fld.zero())
