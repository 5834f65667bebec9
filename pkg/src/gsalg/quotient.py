"""Truncated ideals and finite-dimension certificates for quotient algebras.

Given relations f_1..f_m of order >= 2 in d noncommuting variables, the
degree-D truncation of the two-sided ideal they generate is the span of

    trunc_D(u * f * v),   deg u + deg v <= D - 2,

inside the space of polynomials of degree <= D.  Because every relation has
order >= 2, this span equals (I + F^{D+1}) /\ F_{<=D} exactly, where I is the
untruncated ideal and F^k the span of words of degree >= k.  Everything in
this module reduces to row echelon computations over that span:

* membership of an element (sound: a nonmember provably lies outside I),
* a certificate that the quotient is finite dimensional, namely the least k
  with every degree-k monomial in the span,
* a commutativity probe testing each commutator x_i x_j - x_j x_i.

A certificate k means F^k is contained in I + F^{D+1}.  Substituting the
inclusion into itself bounds F^k inside I + F^N for every N, so in the
completed power-series algebra the image of F^k lies in the closed ideal and
the quotient is nilpotent of index k: the certificate is complete there.  In
the free algebra itself it only asserts nilpotency up to precision D.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .elements import Element
from .fields import QQ, Field
from .limits import require_capacity
from .linalg import SparseBasis

__all__ = [
    "QuotientError",
    "TruncatedIdeal",
    "truncated_ideal_basis",
    "FinDimCertificate",
    "certify_finite_dimensional",
    "CommutativityStatus",
    "commutativity_status",
    "ThresholdInfo",
    "relation_threshold",
    "commutative_construction",
    "sample_presentation",
    "AuditReport",
    "audit_soundness",
]

_COLUMN_BUDGET = 10_000
_DENSE_MAX_PRIME = 1 << 15


class QuotientError(ValueError):
    """Bad input to a truncated-ideal computation."""


def default_precision_cap(n: int) -> int:
    """Largest supported truncation precision for ``n`` generators."""
    if n < 1:
        raise QuotientError(f"need at least one generator, got {n}")
    if n == 2:
        return 10
    cap, total = 1, n
    while total + n ** (cap + 1) <= _COLUMN_BUDGET:
        cap += 1
        total += n ** cap
    return max(cap, 2)


def _check_inputs(relations: Sequence[Element], n: Optional[int], D: int,
                  cap: Optional[int]) -> int:
    if n is None:
        if not relations:
            raise QuotientError("empty relation list needs an explicit generator count")
        n = relations[0].d
    if n < 1:
        raise QuotientError(f"need at least one generator, got {n}")
    for f in relations:
        if f.d != n:
            raise QuotientError(f"relation over {f.d} generators, expected {n}")
        if f.is_zero():
            raise QuotientError("zero relation is not allowed")
        if f.min_degree() < 2:
            raise QuotientError(f"relation of order {f.min_degree()} rejected, need order >= 2: {f}")
    if D < 2:
        raise QuotientError(f"precision must be at least 2, got {D}")
    limit = default_precision_cap(n) if cap is None else cap
    if D > limit:
        raise QuotientError(
            f"precision {D} exceeds the cap {limit} for {n} generators; pass cap= to override")
    return n


# ---------------------------------------------------------------------------
# dense row echelon bases over GF(p)
# ---------------------------------------------------------------------------

def _mod_reduce(block: np.ndarray, rows: np.ndarray, pivs: List[int], p: int) -> np.ndarray:
    """Eliminate the pivot columns of ``rows`` from every row of ``block``.

    ``rows`` is in reduced echelon form, so a single product per column chunk
    suffices.  Arithmetic runs in float64, exact because every accumulated
    sum stays far below 2**53 for p < 2**15.
    """
    if not pivs or not block.size:
        return block % p
    coef = block[:, pivs].astype(np.float64)
    if not coef.any():
        return block % p
    out = block.astype(np.float64)
    ncols = rows.shape[1]
    step = max(1024, (1 << 23) // max(1, rows.shape[0]))
    for lo in range(0, ncols, step):
        hi = min(ncols, lo + step)
        out[:, lo:hi] -= coef @ rows[:, lo:hi].astype(np.float64)
    return np.mod(out, p).astype(np.int64)


def _rref_small(mat: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    rows: List[np.ndarray] = []
    pivs: List[int] = []
    for raw in mat:
        v = raw % p
        for c, row in zip(pivs, rows):
            if v[c]:
                v = (v - int(v[c]) * row) % p
        nz = np.nonzero(v)[0]
        if not nz.size:
            continue
        c0 = int(nz[0])
        v = (v * pow(int(v[c0]), p - 2, p)) % p
        for i in range(len(rows)):
            if rows[i][c0]:
                rows[i] = (rows[i] - int(rows[i][c0]) * v) % p
        at = bisect.bisect_left(pivs, c0)
        pivs.insert(at, c0)
        rows.insert(at, v)
    if not rows:
        return np.zeros((0, mat.shape[1]), dtype=np.int64), []
    return np.array(rows, dtype=np.int64), pivs


def _rref_block(mat: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form of an integer matrix mod p, rows sorted by pivot."""
    if mat.shape[0] <= 64:
        return _rref_small(mat, p)
    half = mat.shape[0] // 2
    top, tpiv = _rref_block(mat[:half], p)
    rest = _mod_reduce(mat[half:], top, tpiv, p) if tpiv else mat[half:] % p
    bot, bpiv = _rref_block(rest, p)
    if bpiv and tpiv:
        top = _mod_reduce(top, bot, bpiv, p)
    rows = np.concatenate([top, bot]) if tpiv and bpiv else (top if tpiv else bot)
    pivs = tpiv + bpiv
    order = np.argsort(pivs, kind="stable")
    return rows[order], sorted(pivs)


class _GFpBasis:
    """Incremental reduced row echelon basis over GF(p), dense rows."""

    def __init__(self, p: int, ncols: int):
        if p >= _DENSE_MAX_PRIME:
            raise QuotientError(f"dense mod-p path limited to p < {_DENSE_MAX_PRIME}, got {p}")
        require_capacity(2 * ncols * ncols + 16 * ncols, "truncated ideal basis")
        self.p = p
        self.ncols = ncols
        self.rows = np.zeros((0, ncols), dtype=np.int16)
        self.piv: List[int] = []

    @property
    def rank(self) -> int:
        return len(self.piv)

    def insert_block(self, mat: np.ndarray) -> None:
        mat = _mod_reduce(mat.astype(np.int64), self.rows, self.piv, self.p)
        mat = mat[np.any(mat, axis=1)]
        if not mat.shape[0]:
            return
        new, npiv = _rref_block(mat, self.p)
        if not npiv:
            return
        if self.piv:
            old = _mod_reduce(self.rows.astype(np.int64), new, npiv, self.p)
        else:
            old = self.rows.astype(np.int64)
        rows = np.concatenate([old, new])
        pivs = self.piv + npiv
        order = np.argsort(pivs, kind="stable")
        self.rows = rows[order].astype(np.int16)
        self.piv = sorted(pivs)

    def residue(self, vec: np.ndarray) -> np.ndarray:
        out = _mod_reduce(vec.reshape(1, -1).astype(np.int64), self.rows, self.piv, self.p)
        return out[0]

    def contains(self, vec: np.ndarray) -> bool:
        return not self.residue(vec).any()

    def pivots(self) -> List[int]:
        return list(self.piv)


# ---------------------------------------------------------------------------
# span construction
# ---------------------------------------------------------------------------

def _element_terms(f: Element, fld: Field):
    """Relation as a list of (degree, word index, field coefficient)."""
    out = []
    for (k, idx), c in sorted(f.coeffs.items()):
        out.append((k, idx, fld.coerce(c)))
    return out


def _dense_batch(terms, n: int, su: int, sv: int, D: int,
                 offsets: Optional[List[int]], ncols: int, p: int) -> Optional[np.ndarray]:
    """All rows trunc_D(u f v) with deg u = su, deg v = sv, as a matrix mod p."""
    m = n ** su * n ** sv
    cols_used = False
    mat = np.zeros((m, ncols), dtype=np.int64)
    iu = np.repeat(np.arange(n ** su), n ** sv)
    iv = np.tile(np.arange(n ** sv), n ** su)
    rng = np.arange(m)
    for k, idx, c in terms:
        tot = su + k + sv
        if tot > D:
            continue
        cols = (iu * n ** k + idx) * n ** sv + iv
        if offsets is not None:
            cols = cols + offsets[tot]
        mat[rng, cols] = (mat[rng, cols] + int(c)) % p
        cols_used = True
    return mat if cols_used else None


def _sparse_vec(terms, n: int, su: int, iu: int, sv: int, iv: int, D: int,
                offsets: Optional[List[int]]) -> Dict[int, Fraction]:
    vec: Dict[int, Fraction] = {}
    for k, idx, c in terms:
        tot = su + k + sv
        if tot > D:
            continue
        col = (iu * n ** k + idx) * n ** sv + iv
        if offsets is not None:
            col += offsets[tot]
        vec[col] = vec.get(col, Fraction(0)) + c
    return {c: v for c, v in vec.items() if v}


_FULL = "full"


@dataclass
class TruncatedIdeal:
    """Echelonized span of a relation ideal truncated at a fixed precision.

    ``span_dims[j-1]`` counts independent leading terms of degree j in the
    span; for homogeneous relation sets this is the dimension of the ideal's
    degree-j slice.  ``quotient_dims`` subtracts from n**j, giving the graded
    dimensions of the quotient F_{<=D} / (I + F^{D+1}).
    """

    n: int
    precision: int
    field: Field
    homogeneous: bool
    span_dims: Tuple[int, ...]
    _blocks: Optional[Dict[int, object]]
    _mixed: Optional[object]
    _offsets: Optional[List[int]]

    @property
    def quotient_dims(self) -> Tuple[int, ...]:
        return tuple(self.n ** j - s for j, s in enumerate(self.span_dims, start=1))

    def contains(self, f: Element) -> bool:
        """Exact membership of f in (I + F^{D+1}) /\\ F_{<=D}.

        False is a proof that f is outside the untruncated ideal I; True only
        places f in I up to terms of degree > precision.
        """
        if f.d != self.n:
            raise QuotientError(f"element over {f.d} generators, expected {self.n}")
        if f.is_zero():
            return True
        if f.degree() > self.precision:
            raise QuotientError(
                f"membership is only defined up to degree {self.precision}, got {f.degree()}")
        if f.min_degree() < 2:
            return False
        if self.homogeneous:
            return all(self._block_contains(j, comp)
                       for j, comp in f.components().items())
        vec = self._vector(f, mixed=True)
        if self.field.is_rational:
            return self._mixed.contains(vec)
        return self._mixed.contains(self._dense_vector(vec))

    def certificate_degree(self) -> Optional[int]:
        """Least k with every monomial of each degree in [k, precision] in the span."""
        full = [self.span_dims[j - 1] == self.n ** j
                for j in range(1, self.precision + 1)]
        k = None
        for j in range(self.precision, 0, -1):
            if full[j - 1]:
                k = j
            else:
                break
        return k

    # -- internals ---------------------------------------------------

    def _block_contains(self, j: int, comp: Element) -> bool:
        if j < 2:
            return False
        block = self._blocks.get(j)
        if block is _FULL:
            return True
        if block is None:
            return False
        vec = self._vector(comp, mixed=False)
        if self.field.is_rational:
            return block.contains(vec)
        return block.contains(self._dense_vector(vec, ncols=self.n ** j))

    def _vector(self, f: Element, mixed: bool) -> Dict[int, Fraction]:
        vec: Dict[int, Fraction] = {}
        for (k, idx), c in f.coeffs.items():
            col = self._offsets[k] + idx if mixed else idx
            vec[col] = self.field.coerce(c)
        return vec

    def _dense_vector(self, vec: Dict[int, Fraction], ncols: Optional[int] = None) -> np.ndarray:
        out = np.zeros(ncols if ncols is not None else self._offsets[self.precision + 1],
                       dtype=np.int64)
        for col, c in vec.items():
            out[col] = int(c) % self.field.char
        return out

    def to_json(self) -> dict:
        return {
            "generators": self.n,
            "precision": self.precision,
            "field": self.field.name,
            "homogeneous": self.homogeneous,
            "span_dims": list(self.span_dims),
            "quotient_dims": list(self.quotient_dims),
        }


def truncated_ideal_basis(relations: Sequence[Element], n: Optional[int] = None,
                          D: int = 6, fld: Field = QQ,
                          cap: Optional[int] = None) -> TruncatedIdeal:
    """Echelonize span{trunc_D(u f v) : deg u + deg v <= D - 2}.

    Relations must have order >= 2, which makes the span equal to
    (I + F^{D+1}) /\\ F_{<=D} on the nose.  Homogeneous relation sets are
    processed degree by degree; once some degree has full rank every higher
    degree is full too (multiply a spanned monomial by a generator), so the
    scan stops early.
    """
    n = _check_inputs(relations, n, D, cap)
    homogeneous = all(f.is_homogeneous() for f in relations)
    terms = [( _element_terms(f, fld), f.min_degree(), f.degree()) for f in relations]
    if homogeneous:
        blocks, dims = _build_blocks(terms, n, D, fld)
        return TruncatedIdeal(n, D, fld, True, tuple(dims), blocks, None, None)
    offsets = [0] * (D + 2)
    for j in range(1, D + 1):
        offsets[j + 1] = offsets[j] + n ** j
    basis = _build_mixed(terms, n, D, fld, offsets)
    pivot_cols = basis.pivots()
    dims = [0] * D
    for col in pivot_cols:
        j = bisect.bisect_right(offsets, col, lo=1) - 1
        dims[j - 1] += 1
    return TruncatedIdeal(n, D, fld, False, tuple(dims), None, basis, offsets)


def _build_blocks(terms, n: int, D: int, fld: Field):
    blocks: Dict[int, object] = {}
    dims: List[int] = [0] * D
    full_from: Optional[int] = None
    for j in range(2, D + 1):
        if full_from is not None:
            blocks[j] = _FULL
            dims[j - 1] = n ** j
            continue
        ncols = n ** j
        if fld.is_rational:
            basis = SparseBasis()
            for tl, lo, hi in terms:
                if hi > j:
                    continue
                s = j - hi
                for su in range(s + 1):
                    sv = s - su
                    for iu in range(n ** su):
                        for iv in range(n ** sv):
                            vec = _sparse_vec(tl, n, su, iu, sv, iv, D, None)
                            if vec:
                                basis.insert(vec)
                    if basis.rank == ncols:
                        break
                if basis.rank == ncols:
                    break
            rank = basis.rank
        else:
            basis = _GFpBasis(fld.char, ncols)
            for tl, lo, hi in terms:
                if hi > j:
                    continue
                s = j - hi
                for su in range(s + 1):
                    sv = s - su
                    batch = _dense_batch(tl, n, su, sv, D, None, ncols, fld.char)
                    if batch is not None:
                        basis.insert_block(batch)
                    if basis.rank == ncols:
                        break
                if basis.rank == ncols:
                    break
            rank = basis.rank
        blocks[j] = _FULL if rank == ncols else basis
        dims[j - 1] = rank
        if rank == ncols:
            full_from = j
    return blocks, dims


def _build_mixed(terms, n: int, D: int, fld: Field, offsets: List[int]):
    ncols = offsets[D + 1]
    max_rank = ncols - n
    if fld.is_rational:
        basis = SparseBasis()
        for tl, lo, hi in terms:
            for su in range(D - 1):
                for sv in range(D - 1 - su):
                    if su + sv + lo > D:
                        continue
                    for iu in range(n ** su):
                        for iv in range(n ** sv):
                            vec = _sparse_vec(tl, n, su, iu, sv, iv, D, offsets)
                            if vec:
                                basis.insert(vec)
                if basis.rank == max_rank:
                    return basis
        return basis
    basis = _GFpBasis(fld.char, ncols)
    for tl, lo, hi in terms:
        for su in range(D - 1):
            for sv in range(D - 1 - su):
                if su + sv + lo > D:
                    continue
                batch = _dense_batch(tl, n, su, sv, D, offsets, ncols, fld.char)
                if batch is not None:
                    basis.insert_block(batch)
            if basis.rank == max_rank:
                return basis
    return basis


# ---------------------------------------------------------------------------
# finite-dimension certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FinDimCertificate:
    """Witness that every monomial of degree k lies in I + F^{D+1}.

    In the power-series completion this is a complete proof that the quotient
    is nilpotent of index k, hence of total dimension 1 + sum(dims).  In the
    free algebra it certifies nilpotency only up to the stated precision.
    """

    k: int
    precision: int
    dims: Tuple[int, ...]
    field: str

    @property
    def total_dim(self) -> int:
        return 1 + sum(self.dims)

    def to_json(self) -> dict:
        return {
            "certified": True,
            "k": self.k,
            "precision": self.precision,
            "quotient_dims": list(self.dims),
            "total_dim": self.total_dim,
            "field": self.field,
            "readings": {
                "power_series": f"complete: quotient is nilpotent of index {self.k}",
                "free_algebra": f"partial: nilpotency verified up to precision {self.precision}",
            },
        }


def certify_finite_dimensional(relations: Sequence[Element], n: Optional[int] = None,
                               D: int = 6, fld: Field = QQ,
                               cap: Optional[int] = None,
                               ideal: Optional[TruncatedIdeal] = None
                               ) -> Optional[FinDimCertificate]:
    """Certificate of finite dimension, or None when precision D cannot tell."""
    if ideal is None:
        ideal = truncated_ideal_basis(relations, n, D, fld, cap)
    k = ideal.certificate_degree()
    if k is None:
        return None
    return FinDimCertificate(k, ideal.precision, ideal.quotient_dims, ideal.field.name)


@dataclass(frozen=True)
class CommutativityStatus:
    """Outcome of testing every commutator x_i x_j - x_j x_i for membership.

    A failed membership is a proof of noncommutativity (the commutator is
    outside the full ideal, and commutators vanish in any commutative
    quotient).  Full membership only says commutative at this precision.
    """

    commutative_at_precision: bool
    witness: Optional[Tuple[int, int]]
    precision: int

    @property
    def status(self) -> str:
        if self.commutative_at_precision:
            return f"commutative at precision {self.precision}"
        return "noncommutative"

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "commutative_at_precision": self.commutative_at_precision,
            "witness": list(self.witness) if self.witness else None,
            "precision": self.precision,
        }


def commutativity_status(relations: Sequence[Element], n: Optional[int] = None,
                         D: int = 6, fld: Field = QQ,
                         cap: Optional[int] = None,
                         ideal: Optional[TruncatedIdeal] = None) -> CommutativityStatus:
    """Test all commutators of generators against the truncated ideal."""
    if ideal is None:
        ideal = truncated_ideal_basis(relations, n, D, fld, cap)
    n = ideal.n
    for i in range(1, n + 1):
        xi = Element.generator(n, i - 1)
        for j in range(i + 1, n + 1):
            xj = Element.generator(n, j - 1)
            if not ideal.contains(xi * xj - xj * xi):
                return CommutativityStatus(False, (i, j), ideal.precision)
    return CommutativityStatus(True, None, ideal.precision)


# ---------------------------------------------------------------------------
# relation-count threshold
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ThresholdInfo:
    """Relation counts at which finite dimension forces noncommutativity.

    Any quotient presented by at most ``forced_noncommutative`` relations of
    order >= 2 is noncommutative whenever it is finite dimensional.  The
    commutator-and-squares presentation shows ``construction_size`` relations
    suffice for a commutative finite-dimensional quotient.  Counts strictly
    between the two are unresolved.
    """

    n: int
    forced_noncommutative: int
    construction_size: int
    unresolved: Optional[int]

    def to_json(self) -> dict:
        return {
            "generators": self.n,
            "forced_noncommutative": self.forced_noncommutative,
            "construction_size": self.construction_size,
            "unresolved": self.unresolved,
        }


def relation_threshold(n: int) -> ThresholdInfo:
    """Largest relation count where finite dimensional still forces noncommutative."""
    if n < 2:
        raise QuotientError(f"threshold needs at least 2 generators, got {n}")
    size = n * (n + 1) // 2
    forced = 2 if n == 2 else size - 2
    gap = size - 1
    return ThresholdInfo(n, forced, size, gap if gap > forced else None)


def commutative_construction(n: int) -> List[Element]:
    """The n(n+1)/2 relations {x_i x_j - x_j x_i (i < j)} + {x_i**2}."""
    if n < 1:
        raise QuotientError(f"need at least one generator, got {n}")
    gens = [Element.generator(n, i) for i in range(n)]
    rels = [gens[i] * gens[j] - gens[j] * gens[i]
            for i in range(n) for j in range(i + 1, n)]
    rels.extend(g * g for g in gens)
    return rels


# ---------------------------------------------------------------------------
# randomized soundness audit
# ---------------------------------------------------------------------------

def sample_presentation(rng, n: int = 2, count: int = 2, max_degree: int = 4,
                        min_order: int = 2) -> List[Element]:
    """Random relations with coefficients uniform in {-1, 0, 1}."""
    words = [(k, idx) for k in range(min_order, max_degree + 1)
             for idx in range(n ** k)]
    rels: List[Element] = []
    while len(rels) < count:
        coeffs = {w: Fraction(rng.choice((-1, 0, 1))) for w in words}
        f = Element(n, {w: c for w, c in coeffs.items() if c})
        if f.is_zero() or f.min_degree() < min_order:
            continue
        rels.append(f)
    return rels


@dataclass
class AuditReport:
    """Tally of a randomized soundness audit of the certify/commutativity pair."""

    trials: int
    certified: int
    noncommutative: int
    commutative_at_precision: int
    counterexamples: List[List[str]]

    @property
    def sound(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "trials": self.trials,
            "certified": self.certified,
            "noncommutative": self.noncommutative,
            "commutative_at_precision": self.commutative_at_precision,
            "counterexamples": self.counterexamples,
            "sound": self.sound,
        }


def audit_soundness(rng, trials: int = 200, n: int = 2, min_count: int = 1,
                    max_count: int = 2, max_degree: int = 4, D: int = 6,
                    fld: Field = QQ) -> AuditReport:
    """Check that certified finite dimension always comes with a witness.

    With at most max_count = 2 relations on two generators, finite dimension
    is supposed to force noncommutativity; every certified presentation must
    therefore produce a noncommutativity witness.  Presentations that fail to
    certify are tallied but prove nothing either way.
    """
    certified = noncomm = comm = 0
    bad: List[List[str]] = []
    for _ in range(trials):
        count = rng.randint(min_count, max_count)
        rels = sample_presentation(rng, n=n, count=count, max_degree=max_degree)
        ideal = truncated_ideal_basis(rels, n=n, D=D, fld=fld)
        cert = certify_finite_dimensional(rels, ideal=ideal)
        status = commutativity_status(rels, ideal=ideal)
        if status.commutative_at_precision:
            comm += 1
        else:
            noncomm += 1
        if cert is not None:
            certified += 1
            if status.commutative_at_precision:
                bad.append([str(f) for f in rels])
    return AuditReport(trials, certified, noncomm, comm, bad)
