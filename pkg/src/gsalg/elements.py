"""Elements of the free associative algebra: Fraction-weighted word sums.

Coefficients are kept as exact rationals regardless of the field a
computation eventually runs over; field reduction happens at the linear
algebra boundary.  Words are the (degree, index) pairs from
:mod:`gsalg.words`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Tuple

from .words import concat, letter_names, word_str

__all__ = ["Element"]

Word = Tuple[int, int]


class Element:
    __slots__ = ("d", "coeffs")

    def __init__(self, d: int, coeffs: Dict[Word, Fraction] | None = None):
        if d < 1:
            raise ValueError("need at least one generator")
        self.d = d
        self.coeffs: Dict[Word, Fraction] = {
            w: c for w, c in (coeffs or {}).items() if c != 0
        }

    # -- constructors --------------------------------------------------
    @staticmethod
    def zero(d: int) -> "Element":
        return Element(d)

    @staticmethod
    def monomial(d: int, k: int, idx: int, c=1) -> "Element":
        return Element(d, {(k, idx): Fraction(c)})

    @staticmethod
    def generator(d: int, i: int) -> "Element":
        if not 0 <= i < d:
            raise ValueError("generator index out of range")
        return Element.monomial(d, 1, i)

    @staticmethod
    def one(d: int) -> "Element":
        return Element.monomial(d, 0, 0)

    # -- ring operations -----------------------------------------------
    def _compat(self, other: "Element"):
        if self.d != other.d:
            raise ValueError("mixed generator counts")

    def __add__(self, other: "Element") -> "Element":
        self._compat(other)
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, Fraction(0)) + c
        return Element(self.d, out)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __neg__(self) -> "Element":
        return Element(self.d, {w: -c for w, c in self.coeffs.items()})

    def scale(self, c) -> "Element":
        c = Fraction(c)
        return Element(self.d, {w: c * v for w, v in self.coeffs.items()})

    def __rmul__(self, c) -> "Element":
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other) -> "Element":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._compat(other)
        out: Dict[Word, Fraction] = {}
        for (k1, i1), c1 in self.coeffs.items():
            for (k2, i2), c2 in other.coeffs.items():
                w = concat(self.d, k1, i1, k2, i2)
                out[w] = out.get(w, Fraction(0)) + c1 * c2
        return Element(self.d, out)

    # -- structure -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    def support(self) -> Iterable[Word]:
        return self.coeffs.keys()

    def degree(self) -> int:
        """Top degree; -1 for the zero element."""
        return max((k for k, _ in self.coeffs), default=-1)

    def min_degree(self) -> int:
        return min((k for k, _ in self.coeffs), default=-1)

    def is_homogeneous(self) -> bool:
        return self.degree() == self.min_degree()

    def homogeneous_component(self, k: int) -> "Element":
        return Element(self.d, {w: c for w, c in self.coeffs.items() if w[0] == k})

    def components(self) -> Dict[int, "Element"]:
        out: Dict[int, Element] = {}
        for (k, idx), c in self.coeffs.items():
            out.setdefault(k, Element(self.d)).coeffs[(k, idx)] = c
        return out

    def constant_term(self) -> Fraction:
        return self.coeffs.get((0, 0), Fraction(0))

    # -- comparison / display -------------------------------------------
    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Element)
            and self.d == other.d
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.d, frozenset(self.coeffs.items())))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        names = letter_names(self.d)
        parts = []
        for (k, idx) in sorted(self.coeffs):
            c = self.coeffs[(k, idx)]
            word = word_str(self.d, k, idx, names)
            if k == 0:
                body = str(abs(c))
            elif abs(c) == 1:
                body = word
            else:
                body = f"{abs(c)}*{word}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Element({self})"
