"""Growth series of finitely presented graded algebras.

Central inequality: for A = F/(relations) with d generators and r_i
relations in degree i, the graded dimensions a_n of any admissible
quotient satisfy

    a_n  >=  d*a_{n-1} - sum_i r_i * a_{n-i}        (n >= 1, a_0 = 1),

equivalently the coefficientwise bound H(t)*(1 - d*t + sum r_i t^i) >= 1.
Everything here is exact: integer coefficient recursions, Fraction
evaluation for certificates, GF(2)/GF(p)/rational row reduction for the
Hilbert series of concrete quotients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .elements import Element
from .fields import GF2, QQ, Field
from .limits import require_capacity
from .linalg import SparseBasis, pack_gf2, rref_gf2, rref_modp

__all__ = [
    "DegreeProfile",
    "gs_check",
    "gs_min_series",
    "SearchParams",
    "Certificate",
    "certify_infinite",
    "hilbert_quotient",
    "EntropyEstimate",
    "entropy_estimate",
]


@dataclass(frozen=True)
class DegreeProfile:
    """d generators and r_i defining relations in each degree i >= 2."""

    d: int
    counts: Tuple[Tuple[int, int], ...]  # (degree, count), sorted, counts > 0

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("need at least one generator")
        for deg, c in self.counts:
            if deg < 2:
                raise ValueError("relation degrees start at 2")
            if c < 1:
                raise ValueError("counts must be positive")

    @staticmethod
    def make(d: int, counts: Dict[int, int] | Sequence[Tuple[int, int]]) -> "DegreeProfile":
        items = dict(counts)
        return DegreeProfile(d, tuple(sorted((k, v) for k, v in items.items() if v)))

    @staticmethod
    def from_degrees(d: int, degrees: Iterable[int]) -> "DegreeProfile":
        out: Dict[int, int] = {}
        for deg in degrees:
            out[deg] = out.get(deg, 0) + 1
        return DegreeProfile.make(d, out)

    @staticmethod
    def of_relations(d: int, relations: Iterable[Element]) -> "DegreeProfile":
        return DegreeProfile.from_degrees(d, (f.degree() for f in relations))

    def r(self, i: int) -> int:
        for deg, c in self.counts:
            if deg == i:
                return c
        return 0

    @property
    def max_degree(self) -> int:
        return self.counts[-1][0] if self.counts else 0

    @property
    def total(self) -> int:
        return sum(c for _, c in self.counts)

    def poly(self, t: Fraction) -> Fraction:
        """1 - d*t + sum_i r_i t^i, evaluated exactly."""
        val = 1 - self.d * t
        for deg, c in self.counts:
            val += c * t ** deg
        return val


@dataclass
class GSReport:
    ok: bool
    defect: List[int]                 # b_n for each checked n
    first_violation: Optional[int]    # least n with b_n < required


def gs_check(profile: DegreeProfile, coeffs: Sequence[int]) -> GSReport:
    """Check the coefficientwise inequality for a candidate dimension series.

    coeffs[n] is the degree-n dimension; coeffs[0] must be 1.  Verifies
    b_n = a_n - d*a_{n-1} + sum_i r_i a_{n-i} >= (1 if n == 0 else 0)
    for every n in range.
    """
    if not coeffs or coeffs[0] != 1:
        raise ValueError("series must start with a_0 = 1")
    defect: List[int] = []
    first = None
    for n in range(len(coeffs)):
        b = coeffs[n]
        if n >= 1:
            b -= profile.d * coeffs[n - 1]
        for deg, c in profile.counts:
            if n >= deg:
                b += c * coeffs[n - deg]
        defect.append(b)
        need = 1 if n == 0 else 0
        if b < need and first is None:
            first = n
    return GSReport(first is None, defect, first)


def gs_min_series(profile: DegreeProfile, n_max: int) -> List[int]:
    """The clamped minimal series: the smallest coefficients any series
    satisfying the inequality can have.

    c_0 = 1, c_n = max(0, d*c_{n-1} - sum_i r_i c_{n-i}).
    """
    c = [1]
    for n in range(1, n_max + 1):
        v = profile.d * c[n - 1]
        for deg, cnt in profile.counts:
            if n >= deg:
                v -= cnt * c[n - deg]
        c.append(max(0, v))
    return c


# ---------------------------------------------------------------------
# infinite-dimensionality certificates


@dataclass(frozen=True)
class SearchParams:
    """Controls for the certificate search over rational t in (0, 1).

    The base grid is t = k/den for k = 1..den-1, scanned left to right
    (den defaults to max relation degree + 2).  If the grid fails,
    points approaching 1 (1 - 2**-j) and a dyadic refinement around the
    grid minimum are tried, all still exact.
    """

    grid_denominator: Optional[int] = None
    boundary_probes: int = 24
    refine_rounds: int = 10


@dataclass(frozen=True)
class Certificate:
    """A verified witness: poly(t) < 0 proves the quotient is infinite
    dimensional for any admissible choice of that many relations."""

    t: Fraction
    value: Fraction
    points_checked: int


def certify_infinite(profile: DegreeProfile,
                     params: SearchParams = SearchParams()) -> Optional[Certificate]:
    """Search for rational t in (0,1) with 1 - d*t + sum r_i t^i < 0.

    Returns the leftmost witness on the base grid when one exists there,
    otherwise the first found by refinement.  None means no witness was
    found within the search budget, which is inconclusive.
    """
    den = params.grid_denominator or profile.max_degree + 2
    if den < 2:
        den = 2
    checked = 0
    best_t = None
    best_v = None
    for k in range(1, den):
        t = Fraction(k, den)
        v = profile.poly(t)
        checked += 1
        if v < 0:
            return Certificate(t, v, checked)
        if best_v is None or v < best_v:
            best_t, best_v = t, v
    for j in range(1, params.boundary_probes + 1):
        t = 1 - Fraction(1, 1 << j)
        v = profile.poly(t)
        checked += 1
        if v < 0:
            return Certificate(t, v, checked)
    lo = max(Fraction(0), best_t - Fraction(1, den))
    hi = min(Fraction(1), best_t + Fraction(1, den))
    step = Fraction(1, den)
    center = best_t
    for _ in range(params.refine_rounds):
        step /= 2
        cands = [center - step, center + step]
        vals = []
        for t in cands:
            if not (0 < t < 1):
                continue
            v = profile.poly(t)
            checked += 1
            if v < 0:
                return Certificate(t, v, checked)
            vals.append((v, t))
        if not vals:
            break
        vbest, tbest = min(vals)
        if vbest < profile.poly(center):
            center = tbest
    return None


# ---------------------------------------------------------------------
# Hilbert series of graded quotients


def _check_homogeneous(relations: List[Element], d: int):
    for f in relations:
        if f.is_zero():
            raise ValueError("zero relation")
        if f.d != d:
            raise ValueError("relation over a different alphabet")
        if not f.is_homogeneous():
            raise ValueError(
                "graded dimension series needs homogeneous relations "
                "(use the truncated-quotient tools for general ones)")
        if f.degree() < 1:
            raise ValueError("relations must have positive degree")


def hilbert_quotient(relations: List[Element], n_max: int, d: int = 2,
                     fld: Field = GF2) -> List[int]:
    """Graded dimensions a_0..a_n of F/(ideal generated by the relations).

    The degree-n layer of the ideal is built incrementally as
    letter * layer(n-1) + sum_f f * A(n - deg f), which spans the same
    space as all u*f*v and keeps row counts near the ambient dimension.
    """
    _check_homogeneous(relations, d)
    by_degree: Dict[int, List[Element]] = {}
    for f in relations:
        by_degree.setdefault(f.degree(), []).append(f)
    dims = [1]
    if fld == GF2:
        basis_rows: List[int] = []
        for n in range(1, n_max + 1):
            ncols = d ** n
            require_capacity(ncols * (len(basis_rows) * d + 4) // 4,
                             f"ideal layer in degree {n}")
            rows: List[int] = []
            block = d ** (n - 1)
            for b in basis_rows:
                for letter in range(d):
                    rows.append(b << (letter * block))
            for m, fs in by_degree.items():
                if m > n:
                    continue
                shift = d ** (n - m)
                for f in fs:
                    spread = 0
                    for (deg, w), c in f.coeffs.items():
                        if fld.coerce(c):
                            spread |= 1 << (w * shift)
                    for u in range(shift):
                        rows.append(spread << u)
            rank, basis_rows = _gf2_reduce_rows(rows, ncols)
            dims.append(ncols - rank)
            if dims[-1] == 0:
                dims.extend([0] * (n_max - n))
                break
    else:
        dims = _hilbert_generic(by_degree, n_max, d, fld)
    return dims


def _gf2_reduce_rows(rows: List[int], ncols: int) -> Tuple[int, List[int]]:
    if not rows:
        return 0, []
    nbytes = (ncols + 7) // 8
    pad = (-nbytes) % 8
    buf = b"".join(r.to_bytes(nbytes + pad, "little") for r in rows)
    mat = np.frombuffer(buf, dtype=np.uint64).reshape(len(rows), (nbytes + pad) // 8).copy()
    rank, _ = rref_gf2(mat, ncols)
    out = [int.from_bytes(mat[i].tobytes(), "little") for i in range(rank)]
    return rank, out


def _hilbert_generic(by_degree: Dict[int, List[Element]], n_max: int, d: int,
                     fld: Field) -> List[int]:
    dims = [1]
    if fld == QQ:
        basis: List[Dict[int, Fraction]] = []
        for n in range(1, n_max + 1):
            sb = SparseBasis()
            block = d ** (n - 1)
            for row in basis:
                for letter in range(d):
                    off = letter * block
                    sb.insert({c + off: v for c, v in row.items()})
            for m, fs in by_degree.items():
                if m > n:
                    continue
                shift = d ** (n - m)
                for f in fs:
                    base = {w * shift: c for (deg, w), c in f.coeffs.items()}
                    for u in range(shift):
                        sb.insert({c + u: v for c, v in base.items()})
            basis = list(sb.rows.values())
            dims.append(d ** n - sb.rank)
            if dims[-1] == 0:
                dims.extend([0] * (n_max - n))
                break
        return dims
    p = fld.char
    basis_mat = np.zeros((0, 1), dtype=np.int64)
    for n in range(1, n_max + 1):
        ncols = d ** n
        require_capacity(ncols * 8 * (basis_mat.shape[0] * d + 4),
                         f"ideal layer in degree {n}")
        rows: List[np.ndarray] = []
        block = d ** (n - 1)
        for b in basis_mat:
            for letter in range(d):
                row = np.zeros(ncols, dtype=np.int64)
                row[letter * block:(letter + 1) * block] = b
                rows.append(row)
        for m, fs in by_degree.items():
            if m > n:
                continue
            shift = d ** (n - m)
            for f in fs:
                cols = []
                vals = []
                for (deg, w), c in f.coeffs.items():
                    cv = fld.coerce(c)
                    if cv:
                        cols.append(w * shift)
                        vals.append(cv)
                for u in range(shift):
                    row = np.zeros(ncols, dtype=np.int64)
                    row[[c + u for c in cols]] = vals
                    rows.append(row)
        if rows:
            mat = np.vstack(rows)
            rank, _ = rref_modp(mat, p)
            basis_mat = mat[:rank]
        else:
            rank = 0
            basis_mat = np.zeros((0, ncols), dtype=np.int64)
        dims.append(ncols - rank)
        if dims[-1] == 0:
            dims.extend([0] * (n_max - n))
            break
    return dims


# ---------------------------------------------------------------------
# entropy of a dimension series


@dataclass(frozen=True)
class EntropyEstimate:
    """max over the window n in [N/2, N] of coeffs[n] ** (1/n), held
    exactly as the pair (n_star, c_star) so comparisons stay certified."""

    n_star: int
    c_star: int
    window: Tuple[int, int]

    def as_float(self) -> float:
        return self.c_star ** (1.0 / self.n_star)

    def compare(self, q: Fraction) -> int:
        """Sign of (estimate - q), decided on integers."""
        q = Fraction(q)
        if q <= 0:
            return 1
        lhs = self.c_star * q.denominator ** self.n_star
        rhs = q.numerator ** self.n_star
        return (lhs > rhs) - (lhs < rhs)

    def at_most(self, q: Fraction) -> bool:
        return self.compare(q) <= 0


def entropy_estimate(coeffs: Sequence[int]) -> EntropyEstimate:
    """Window maximum of c_n**(1/n) over n in [N/2, N], N = len - 1.

    The argmax is found by exact cross-powering: c_n**m vs c_m**n.
    Zero coefficients count as zero and never win while any positive
    coefficient is in the window.
    """
    n_top = len(coeffs) - 1
    if n_top < 1:
        raise ValueError("need at least degrees 0..1")
    lo = max(1, n_top // 2)
    best_n, best_c = lo, coeffs[lo]
    for n in range(lo + 1, n_top + 1):
        c = coeffs[n]
        if c < 0:
            raise ValueError("negative coefficient")
        # c**(1/n) > best_c**(1/best_n) iff c**best_n > best_c**n
        if best_c == 0:
            bigger = c > 0
        elif c == 0:
            bigger = False
        else:
            bigger = c ** best_n > best_c ** n
        if bigger:
            best_n, best_c = n, c
    return EntropyEstimate(best_n, best_c, (lo, n_top))
