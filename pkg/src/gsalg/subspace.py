"""Homogeneous subspaces of the free algebra.

A Subspace lives inside the degree-k component A(k) over d letters.
Two storage backends:

* monomial: a set of word indices; the space they span.  Valid over any
  coefficient field, and every set operation (sum, intersection,
  complement, product) stays a set operation.
* rows: a reduced GF(2) basis (:class:`gsalg.linalg.BitBasis`) with bit
  j standing for word j.  Used for spans of genuine word sums; only
  supported over GF(2) and kept to modest degrees by capacity guards.

All the built-in constructions produce monomial spaces; the rows
backend exists so externally supplied spans can be checked too.
"""

from __future__ import annotations

from typing import Iterable, List, Optional

from .elements import Element
from .fields import GF2, Field
from .limits import CapacityError, require_capacity
from .linalg import BitBasis, bit_indices, intersect_bitspaces, product_bits
from .words import concat, num_words, word_str

__all__ = ["Subspace"]

# general (rows) backend is meant for validating hand-made spans, not
# for bulk computation; beyond this degree promote/materialize refuses
GENERAL_DEGREE_CAP = 12


def _guard_set(n: int, what: str):
    require_capacity(n * 64, what)


class Subspace:
    __slots__ = ("d", "k", "mono", "rows")

    def __init__(self, d: int, k: int, mono: Optional[frozenset] = None,
                 rows: Optional[BitBasis] = None):
        if (mono is None) == (rows is None):
            raise ValueError("exactly one backend expected")
        self.d = d
        self.k = k
        self.mono = mono
        self.rows = rows

    # -- constructors ---------------------------------------------------
    @staticmethod
    def monomial_span(d: int, k: int, indices: Iterable[int]) -> "Subspace":
        idx = frozenset(indices)
        n = num_words(d, k)
        for i in idx:
            if not 0 <= i < n:
                raise ValueError(f"word index {i} out of range for degree {k}")
        return Subspace(d, k, mono=idx)

    @staticmethod
    def zero_space(d: int, k: int) -> "Subspace":
        return Subspace(d, k, mono=frozenset())

    @staticmethod
    def full_space(d: int, k: int) -> "Subspace":
        n = num_words(d, k)
        _guard_set(n, f"full degree-{k} component")
        return Subspace(d, k, mono=frozenset(range(n)))

    @staticmethod
    def span_elements(d: int, k: int, elements: Iterable[Element],
                      field: Field = GF2) -> "Subspace":
        """Span of homogeneous degree-k elements.

        Plain word lists give a monomial space over any field; genuine
        sums are reduced over GF(2) (other fields are not supported for
        the rows backend).
        """
        elems = list(elements)
        singles = []
        for e in elems:
            if e.is_zero():
                continue
            if not e.is_homogeneous() or e.degree() != k:
                raise ValueError("spanning elements must be homogeneous of the stated degree")
            if len(e.coeffs) == 1:
                singles.append(next(iter(e.coeffs))[1])
            else:
                singles = None
                break
        if singles is not None:
            return Subspace.monomial_span(d, k, singles)
        if field != GF2:
            raise NotImplementedError("non-monomial spans are only supported over GF(2)")
        if k > GENERAL_DEGREE_CAP:
            raise CapacityError(
                f"general spans limited to degree {GENERAL_DEGREE_CAP}, got {k}")
        basis = BitBasis()
        for e in elems:
            v = 0
            for (deg, idx), c in e.coeffs.items():
                if field.coerce(c):
                    v |= 1 << idx
            basis.insert(v)
        return Subspace(d, k, rows=basis)

    # -- basic structure -------------------------------------------------
    @property
    def is_monomial(self) -> bool:
        return self.mono is not None

    @property
    def dim(self) -> int:
        return len(self.mono) if self.is_monomial else self.rows.rank

    @property
    def ambient_dim(self) -> int:
        return num_words(self.d, self.k)

    @property
    def codim(self) -> int:
        return self.ambient_dim - self.dim

    def monomials(self) -> frozenset:
        if not self.is_monomial:
            raise ValueError("not a monomial subspace")
        return self.mono

    def _as_basis(self) -> BitBasis:
        if not self.is_monomial:
            return self.rows
        if self.k > GENERAL_DEGREE_CAP:
            raise CapacityError(
                f"cannot promote a degree-{self.k} monomial space to the rows backend")
        b = BitBasis()
        for i in self.mono:
            b.insert(1 << i)
        return b

    def _check(self, other: "Subspace", same_degree=True):
        if self.d != other.d:
            raise ValueError("mixed alphabets")
        if same_degree and self.k != other.k:
            raise ValueError("mixed degrees")

    # -- membership -------------------------------------------------------
    def contains_word(self, idx: int) -> bool:
        if self.is_monomial:
            return idx in self.mono
        return self.rows.contains(1 << idx)

    def contains_element(self, e: Element, field: Field = GF2) -> bool:
        if e.is_zero():
            return True
        if not e.is_homogeneous() or e.degree() != self.k:
            return False
        if self.is_monomial:
            return all(idx in self.mono
                       for (deg, idx), c in e.coeffs.items() if field.coerce(c))
        if field != GF2:
            raise NotImplementedError("rows backend is GF(2) only")
        v = 0
        for (deg, idx), c in e.coeffs.items():
            if field.coerce(c):
                v |= 1 << idx
        return self.rows.contains(v)

    def is_subspace_of(self, other: "Subspace") -> bool:
        self._check(other)
        if self.is_monomial and other.is_monomial:
            return self.mono <= other.mono
        if self.is_monomial:
            return all(other.rows.contains(1 << i) for i in self.mono)
        target = other._as_basis()
        return all(target.contains(row) for row in self.rows.basis())

    def equals(self, other: "Subspace") -> bool:
        return self.is_subspace_of(other) and other.is_subspace_of(self)

    # -- lattice operations -------------------------------------------------
    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.is_monomial and other.is_monomial:
            return Subspace(self.d, self.k, mono=self.mono | other.mono)
        a, b = self._as_basis().copy(), other._as_basis()
        a.extend(b.basis())
        return Subspace(self.d, self.k, rows=a)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.is_monomial and other.is_monomial:
            return Subspace(self.d, self.k, mono=self.mono & other.mono)
        out = intersect_bitspaces(self._as_basis(), other._as_basis(),
                                  self.ambient_dim)
        return Subspace(self.d, self.k, rows=out)

    def complement(self) -> "Subspace":
        """A monomial complement: spanned by the words missing from a basis.

        For a monomial space this is the set complement; for a rows
        space the non-pivot words work (pivot words hit each basis row
        exactly once).
        """
        n = self.ambient_dim
        if self.is_monomial:
            _guard_set(n, f"complement in degree {self.k}")
            return Subspace(self.d, self.k,
                            mono=frozenset(range(n)) - self.mono)
        taken = set(self.rows.pivots())
        return Subspace(self.d, self.k,
                        mono=frozenset(i for i in range(n) if i not in taken))

    def product(self, other: "Subspace") -> "Subspace":
        """Span of pairwise concatenations, in degree k1 + k2."""
        self._check(other, same_degree=False)
        if self.is_monomial and other.is_monomial:
            _guard_set(len(self.mono) * len(other.mono),
                       f"product of degrees {self.k} and {other.k}")
            d, ka, kb = self.d, self.k, other.k
            block = num_words(d, kb)
            out = frozenset(i * block + j for i in self.mono for j in other.mono)
            return Subspace(d, ka + kb, mono=out)
        if self.d != 2:
            raise NotImplementedError("rows-backend products need d = 2")
        if self.k + other.k > GENERAL_DEGREE_CAP:
            raise CapacityError(
                f"rows-backend product degree {self.k + other.k} over the cap")
        basis = BitBasis()
        for u in self._as_basis().basis():
            for w in other._as_basis().basis():
                basis.insert(product_bits(u, w, other.k))
        return Subspace(2, self.k + other.k, rows=basis)

    # -- serialization -------------------------------------------------------
    def to_json(self) -> dict:
        if self.is_monomial:
            return {"d": self.d, "degree": self.k, "kind": "monomial",
                    "monomials": sorted(self.mono)}
        return {"d": self.d, "degree": self.k, "kind": "rows",
                "field": "gf2",
                "rows": [format(r, "x") for r in self.rows.basis()]}

    @staticmethod
    def from_json(data: dict) -> "Subspace":
        d, k = int(data["d"]), int(data["degree"])
        if data.get("kind", "monomial") == "monomial":
            return Subspace.monomial_span(d, k, (int(i) for i in data["monomials"]))
        basis = BitBasis()
        for r in data["rows"]:
            basis.insert(int(r, 16))
        return Subspace(d, k, rows=basis)

    def describe(self, limit: int = 8) -> str:
        kind = "monomial" if self.is_monomial else "gf2-span"
        head = f"{kind} subspace of A({self.k}), dim {self.dim}"
        if self.is_monomial and self.dim <= limit:
            words = ", ".join(word_str(self.d, self.k, i) for i in sorted(self.mono))
            return f"{head}: {{{words}}}" if words else f"{head} (zero)"
        return head

    def __repr__(self) -> str:
        return f"Subspace({self.describe()})"
