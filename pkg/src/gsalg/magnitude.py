"""Exact comparison of huge formal products c * prod(b_i ** e_i).

Quantities like 40**(8*101**3) or 2**(2**91) cannot be materialized, but
every comparison the schedule machinery needs can still be decided
exactly: either both operands fit under a bit budget and are compared as
integers, or certified rational bounds on their base-2 logarithms are
refined until the intervals separate.  Equality of structurally distinct
forms is decided on a canonical prime-split factorization; if nothing
separates within the refinement budget an error is raised rather than
ever guessing from floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

__all__ = [
    "Magnitude",
    "MagnitudeError",
    "ComparisonUndecided",
    "log2_bounds",
    "bitlen_lt_pow2",
    "magnitude_cmp",
]

# Largest bit-size we are willing to materialize for a direct integer compare.
MATERIALIZE_BITS = 1 << 20
# Largest bit-size allowed for an exponent integer.
EXPONENT_BITS = 1 << 26
# Log-interval refinement schedule.
_PREC_START = 64
_PREC_LIMIT = 1 << 13
# Trial-division bound used when canonicalizing bases.
_SMALL_FACTOR_BOUND = 1 << 16


class MagnitudeError(ValueError):
    pass


class ComparisonUndecided(MagnitudeError):
    """Raised when refinement hits its budget without separating operands."""


def log2_bounds(n: int, prec: int) -> Tuple[Fraction, Fraction]:
    """Certified rationals lo <= log2(n) <= hi with width about 2**(1-prec).

    Exact (lo == hi) when n is a power of two.  Uses fixed-point interval
    squaring, so the cost is polynomial in ``prec`` and never touches the
    value 2**log2(n) itself.
    """
    if n <= 0:
        raise MagnitudeError("log2 of non-positive value")
    top = n.bit_length() - 1
    if n == 1 << top:
        return Fraction(top), Fraction(top)
    # each squaring can double the interval width, so guard bits scale
    # with the digit count
    s = 2 * prec + 8
    lo = (n << s) >> top          # floor of (n / 2**top) * 2**s
    hi = lo + 1
    acc_lo = Fraction(0)
    acc_hi = Fraction(0)
    w = Fraction(1)
    two = 1 << (s + 1)
    for _ in range(prec):
        lo = (lo * lo) >> s
        hi = (hi * hi + (1 << s) - 1) >> s
        w /= 2
        if lo >= two:
            acc_lo += w
            acc_hi += w
            lo >>= 1
            hi >>= 1
        elif hi >= two:
            # Interval straddles 2: remaining digits contribute somewhere
            # in [0, 2w].  Sound early exit.
            return Fraction(top) + acc_lo, Fraction(top) + acc_hi + 2 * w
    return Fraction(top) + acc_lo, Fraction(top) + acc_hi + w


def _iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n."""
    if n < 2 or k == 1:
        return n
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def _split_base(b: int) -> list[tuple[int, int]]:
    """Factor b into (base, multiplicity) pairs: small primes split off,
    perfect powers collapsed, any remaining large cofactor kept opaque."""
    out: list[tuple[int, int]] = []
    m = b
    for p in (2, 3, 5, 7, 11, 13):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
    q = 17
    while q * q <= m and q < _SMALL_FACTOR_BOUND:
        if m % q == 0:
            e = 0
            while m % q == 0:
                m //= q
                e += 1
            out.append((q, e))
        q += 2
    if m > 1:
        if q * q > m:
            out.append((m, 1))  # m is prime
        else:
            # perfect-power collapse on the opaque cofactor; prime
            # exponents suffice because the recursion collapses the rest
            for k in _small_primes(m.bit_length()):
                r = _iroot(m, k)
                if r > 1 and r ** k == m:
                    for base, e in _split_base(r):
                        out.append((base, e * k))
                    break
            else:
                out.append((m, 1))
    return out


def _small_primes(limit: int):
    if limit < 2:
        return
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, limit + 1):
        if sieve[i]:
            yield i
            for j in range(i * i, limit + 1, i):
                sieve[j] = 0


def _check_exponent(e: int) -> int:
    if e < 0:
        raise MagnitudeError("negative exponent")
    if e.bit_length() > EXPONENT_BITS:
        raise MagnitudeError("exponent exceeds the magnitude budget")
    return e


@dataclass(frozen=True)
class Magnitude:
    """A positive integer in the form coeff * prod(base_i ** exp_i).

    Canonical form: coeff >= 1 with its smooth part absorbed into the
    factor list, bases >= 2 sorted and distinct, exponents >= 1.
    Construct via :meth:`from_int`, :meth:`power`, or :meth:`pow2`.
    """

    coeff: int
    factors: Tuple[Tuple[int, int], ...]

    # -- constructors -------------------------------------------------
    @staticmethod
    def from_int(n: int) -> "Magnitude":
        if n < 1:
            raise MagnitudeError("magnitudes are positive integers")
        return _canonical(n, ())

    @staticmethod
    def power(base: int, exp: int) -> "Magnitude":
        if base < 1:
            raise MagnitudeError("base must be a positive integer")
        _check_exponent(exp)
        if base == 1 or exp == 0:
            return Magnitude.from_int(1)
        return _canonical(1, ((base, exp),))

    @staticmethod
    def pow2(exp: int) -> "Magnitude":
        """2**exp; exp may be huge (e.g. itself a power of two)."""
        return Magnitude.power(2, exp)

    # -- arithmetic ---------------------------------------------------
    def mul(self, other: "Magnitude") -> "Magnitude":
        return _canonical(self.coeff * other.coeff, self.factors + other.factors)

    def __mul__(self, other: "Magnitude") -> "Magnitude":
        return self.mul(other)

    def pow_int(self, k: int) -> "Magnitude":
        if k < 0:
            raise MagnitudeError("negative exponent")
        if k == 0:
            return Magnitude.from_int(1)
        fac = tuple((b, _check_exponent(e * k)) for b, e in self.factors)
        if self.coeff > 1 and self.coeff.bit_length() * k > MATERIALIZE_BITS:
            raise MagnitudeError("coefficient power exceeds the magnitude budget")
        return _canonical(self.coeff ** k if self.coeff > 1 else 1, fac)

    # -- size estimates ----------------------------------------------
    def bits_upper(self) -> int:
        """Upper bound on bit length (so on log2 + 1)."""
        total = self.coeff.bit_length()
        for b, e in self.factors:
            total += e * b.bit_length()
        return total

    def to_int(self) -> int:
        if self.bits_upper() > MATERIALIZE_BITS:
            raise MagnitudeError("magnitude too large to materialize")
        n = self.coeff
        for b, e in self.factors:
            n *= b ** e
        return n

    def log2_interval(self, prec: int) -> Tuple[Fraction, Fraction]:
        lo, hi = log2_bounds(self.coeff, prec)
        for b, e in self.factors:
            blo, bhi = log2_bounds(b, prec)
            lo += e * blo
            hi += e * bhi
        return lo, hi

    def is_power_of_two(self) -> bool:
        return self.coeff == 1 and all(b == 2 for b, _ in self.factors)

    def log2_floor(self) -> int:
        """Exact floor(log2(value))."""
        if self.is_power_of_two():
            return sum(e for _, e in self.factors)
        if self.bits_upper() <= MATERIALIZE_BITS:
            return self.to_int().bit_length() - 1
        prec = _PREC_START
        while prec <= _PREC_LIMIT:
            lo, hi = self.log2_interval(prec)
            flo, fhi = lo.__floor__(), hi.__floor__()
            if flo == fhi:
                return flo
            # value could still be an exact power of two at the boundary,
            # but non-2-smooth factors make log2 irrational, so refinement
            # must eventually separate.
            prec *= 4
        raise ComparisonUndecided("log2 floor not pinned within budget")

    def bit_length(self) -> int:
        return self.log2_floor() + 1

    # -- serialization -------------------------------------------------
    def to_json(self) -> dict:
        def enc_exp(e: int):
            if e.bit_length() > 64 and e == 1 << (e.bit_length() - 1):
                return {"base": "2", "exp": str(e.bit_length() - 1)}
            return str(e)

        return {
            "coeff": str(self.coeff),
            "factors": [{"base": str(b), "exp": enc_exp(e)} for b, e in self.factors],
        }

    @staticmethod
    def from_json(data: dict) -> "Magnitude":
        def dec_exp(e) -> int:
            if isinstance(e, dict):
                if e.get("base") != "2":
                    raise MagnitudeError("nested exponents must have base 2")
                return 1 << int(e["exp"])
            return int(e)

        fac = tuple((int(f["base"]), _check_exponent(dec_exp(f["exp"])))
                    for f in data.get("factors", []))
        return _canonical(int(data.get("coeff", "1")), fac)

    def __str__(self) -> str:
        parts = []
        if self.coeff != 1 or not self.factors:
            parts.append(str(self.coeff))
        for b, e in self.factors:
            if e.bit_length() > 64 and e == 1 << (e.bit_length() - 1):
                parts.append(f"{b}^(2^{e.bit_length() - 1})")
            else:
                parts.append(f"{b}^{e}")
        return " * ".join(parts)


def _canonical(coeff: int, factors: Tuple[Tuple[int, int], ...]) -> Magnitude:
    if coeff < 1:
        raise MagnitudeError("magnitudes are positive integers")
    merged: dict[int, int] = {}

    def add(base: int, exp: int):
        if base == 1 or exp == 0:
            return
        merged[base] = merged.get(base, 0) + exp

    for b, e in factors:
        if b < 1:
            raise MagnitudeError("base must be a positive integer")
        _check_exponent(e)
        for base, mult in _split_base(b):
            add(base, _check_exponent(mult * e))
    # absorb the smooth part of the coefficient
    rest = 1
    for base, mult in _split_base(coeff) if coeff > 1 else []:
        if base < _SMALL_FACTOR_BOUND or base in merged:
            add(base, mult)
        else:
            rest *= base ** mult
    for e in merged.values():
        _check_exponent(e)
    return Magnitude(rest, tuple(sorted(merged.items())))


def magnitude_cmp(a: Union[Magnitude, int], b: Union[Magnitude, int]) -> int:
    """-1, 0, or 1; every answer is certified exact."""
    if isinstance(a, int):
        a = Magnitude.from_int(a)
    if isinstance(b, int):
        b = Magnitude.from_int(b)
    if a == b:
        return 0
    if a.bits_upper() <= MATERIALIZE_BITS and b.bits_upper() <= MATERIALIZE_BITS:
        x, y = a.to_int(), b.to_int()
        return (x > y) - (x < y)
    prec = _PREC_START
    while prec <= _PREC_LIMIT:
        alo, ahi = a.log2_interval(prec)
        blo, bhi = b.log2_interval(prec)
        if ahi < blo:
            return -1
        if bhi < alo:
            return 1
        if alo == ahi and blo == bhi:
            return 0 if alo == blo else (1 if alo > blo else -1)
        prec *= 4
    raise ComparisonUndecided(f"cannot separate {a} and {b} within budget")


def bitlen_lt_pow2(r: Union[Magnitude, int], t: int) -> bool:
    """Decide r < 2**t without materializing 2**t.

    For integer r this is the identity r < 2**t  <=>  bit_length(r) <= t.
    """
    if t < 0:
        return False
    if isinstance(r, int):
        if r < 1:
            raise MagnitudeError("r must be a positive integer")
        return r.bit_length() <= t
    if r.is_power_of_two():
        return r.log2_floor() < t
    if r.bits_upper() <= MATERIALIZE_BITS:
        return r.to_int().bit_length() <= t
    prec = _PREC_START
    while prec <= _PREC_LIMIT:
        lo, hi = r.log2_interval(prec)
        if hi < t:
            return True
        if lo > t:
            return False
        prec *= 4
    raise ComparisonUndecided("bit-length comparison not separated within budget")
