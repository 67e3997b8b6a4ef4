"""Bounded cochain complexes carried by subspaces of ambient coordinate spaces.

A complex holds degrees 0..N with a differential per degree n < N.  The
space at each degree is a subspace of the ambient coordinate space with
an explicit sparse basis and a sparse left inverse ("coords"), so
restricting operators to the subspace is a cheap composition instead of
a linear solve.

Cohomology dimensions come from exact ranks of the restricted
differentials.  Over prime fields that is one dense elimination; over
the rationals large integer matrices get a certified sandwich rank
(modular lower bound meeting the d.d = 0 upper bound) with a dense
Fraction elimination as the always-correct fallback.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import (ActionLeavesSubspace, ActionNotCompatible,
                     DegreeOutOfRange, NotASubcomplex)
from .fields import Field
from .linalg import (Matrix, kernel_basis, quotient, rank, rref,
                     solve_membership)
from .sparse import SparseMatrix, integer_gram, to_int64_dense

_SANDWICH_PRIMES = (1000003, 999983, 1000033)
_DENSE_RATIONAL_LIMIT = 120_000  # rows*cols beyond which Q matrices go modular first


class CochainSpace:
    """A subspace of k^ambient with basis and a left inverse of the basis."""

    __slots__ = ("ambient_dim", "basis", "coords", "is_full")

    def __init__(self, ambient_dim: int, basis: SparseMatrix, coords: SparseMatrix,
                 check: bool = True, is_full: bool = False):
        if basis.rows != ambient_dim or coords.cols != ambient_dim:
            raise ValueError("basis/coords must live in the ambient space")
        if basis.cols != coords.rows:
            raise ValueError("coords must be a left inverse of basis")
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.coords = coords
        self.is_full = is_full
        if check and not (coords @ basis).equals_identity():
            raise ValueError("coords is not a left inverse of basis")

    @staticmethod
    def full(field: Field, ambient_dim: int) -> "CochainSpace":
        eye = SparseMatrix.identity(field, ambient_dim)
        return CochainSpace(ambient_dim, eye, eye, check=False, is_full=True)

    @property
    def dim(self) -> int:
        return self.basis.cols

    def contains_column(self, vec: dict) -> bool:
        """Membership via the coords round trip (valid since coords.basis = id)."""
        return self.basis.apply(self.coords.apply(vec)) == vec

    def __repr__(self):
        return f"CochainSpace(dim {self.dim} of k^{self.ambient_dim})"


@dataclass
class ActionOperator:
    """Matrices of the adjacent-transposition generators on one ambient degree."""

    degree: int
    sigmas: list  # sigmas[i-1] is the operator of the transposition (i, i+1)


@dataclass
class CochainComplex:
    field: Field
    top_degree: int
    spaces: list  # CochainSpace per degree 0..N
    diffs: list   # SparseMatrix per degree 0..N-1, ambient(n) -> ambient(n+1)
    label: str = ""

    def ambient_dim(self, n: int) -> int:
        return self.spaces[n].ambient_dim

    def space_dims(self):
        return [s.dim for s in self.spaces]

    def restricted_diff(self, n: int) -> SparseMatrix:
        """The differential space(n) -> space(n+1) in subspace coordinates."""
        out = self.diffs[n]
        if not self.spaces[n].is_full:
            out = out @ self.spaces[n].basis
        if not self.spaces[n + 1].is_full:
            out = self.spaces[n + 1].coords @ out
        return out


@dataclass
class ComplexReport:
    degrees_checked: list = dc_field(default_factory=list)
    first_failure: int | None = None
    reason: str | None = None

    @property
    def passed(self) -> bool:
        return self.first_failure is None


def check_complex(c: CochainComplex) -> ComplexReport:
    """Verify image containment and d.d = 0 exactly, degree by degree."""
    report = ComplexReport()
    for n in range(c.top_degree):
        image_cols = [c.diffs[n].apply(col) for col in c.spaces[n].basis.cols_data]
        for col in image_cols:
            if not c.spaces[n + 1].contains_column(col):
                report.first_failure = n
                report.reason = "differential image leaves the next space"
                return report
        if n + 1 < c.top_degree:
            for col in image_cols:
                if c.diffs[n + 1].apply(col):
                    report.first_failure = n
                    report.reason = "d.d is nonzero"
                    return report
        report.degrees_checked.append(n)
    return report


# -- exact ranks of restricted differentials ------------------------------


def _integerize_columns(sm: SparseMatrix) -> SparseMatrix | None:
    """Scale each column by the lcm of its denominators (rank-preserving)."""
    out = SparseMatrix(sm.field, sm.rows, sm.cols)
    for j, col in enumerate(sm.cols_data):
        lcm = 1
        for v in col.values():
            if isinstance(v, Fraction):
                den = v.denominator
                g = _gcd(lcm, den)
                lcm = lcm // g * den
        for i, v in col.items():
            w = v * lcm
            if isinstance(w, Fraction):
                if w.denominator != 1:
                    return None
                w = w.numerator
            out.cols_data[j][i] = int(w)
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _rank_prime_int64(arr, p) -> int:
    from .linalg import _rank_prime
    return _rank_prime(arr, p)


def _certified_rational_rank(sm: SparseMatrix, upper: int | None) -> int:
    """Exact rank over Q.

    Small matrices get a dense Fraction elimination.  Large integer
    matrices first try to certify rank == upper via a modular lower
    bound (over Q, column independence mod q implies independence, and
    rank(M^T M) = rank(M)); on failure they fall back to the exact
    dense elimination.
    """
    if sm.rows == 0 or sm.cols == 0 or sm.is_zero():
        return 0
    if sm.rows * sm.cols <= _DENSE_RATIONAL_LIMIT or upper is None:
        return rank(sm.to_dense())
    scaled = _integerize_columns(sm)
    if scaled is not None:
        gram = integer_gram(scaled)
        if gram is not None:
            for q in _SANDWICH_PRIMES:
                if _rank_prime_int64(gram % q, q) == upper:
                    return upper
        for q in _SANDWICH_PRIMES[:1]:
            arr = to_int64_dense(scaled, q)
            if arr is not None and _rank_prime_int64(arr, q) == upper:
                return upper
    return rank(sm.to_dense())


def _restricted_rank(c: CochainComplex, reduced, n: int, prev_rank: int) -> int:
    sm = reduced[n]
    if sm.cols == 0 or sm.rows == 0:
        return 0
    if not c.field.is_rational:
        return rank(sm.to_dense())
    upper = None
    if n > 0:
        # valid upper bound only when im(d^{n-1}) lies in ker(d^n); verify it
        if (sm @ reduced[n - 1]).is_zero():
            upper = c.spaces[n].dim - prev_rank
    return _certified_rational_rank(sm, upper)


def cohomology_dims(c: CochainComplex, up_to: int) -> list:
    """Exact dims of H^0..H^up_to; needs up_to < top_degree."""
    if not (0 <= up_to < c.top_degree):
        raise DegreeOutOfRange(
            f"up_to must lie in 0..{c.top_degree - 1}, got {up_to}")
    reduced = {n: c.restricted_diff(n) for n in range(up_to + 1)}
    ranks = []
    prev = 0
    for n in range(up_to + 1):
        r = _restricted_rank(c, reduced, n, prev)
        ranks.append(r)
        prev = r
    dims = []
    for n in range(up_to + 1):
        below = ranks[n - 1] if n > 0 else 0
        dims.append(c.spaces[n].dim - ranks[n] - below)
    return dims


# -- fixed subcomplexes ---------------------------------------------------


def _left_inverse_dense(m: Matrix) -> Matrix:
    """A deterministic left inverse of a full-column-rank dense matrix."""
    field = m.field
    reduced, pivots = rref(m.transpose())
    # pivots of m^T are the pivot rows of m
    if len(pivots) != m.cols:
        raise ValueError("matrix does not have full column rank")
    square = Matrix.zeros(field, m.cols, m.cols)
    for i in range(m.cols):
        for k, r in enumerate(pivots):
            square._set(i, k, m[r, i])
    aug, piv2 = rref(square.transpose().hstack(Matrix.identity(field, m.cols)))
    if piv2 != list(range(m.cols)):
        raise ValueError("pivot square is singular")
    inv = Matrix.zeros(field, m.cols, m.cols)
    for i in range(m.cols):
        for j in range(m.cols):
            inv._set(i, j, aug[i, m.cols + j])
    left = Matrix.zeros(field, m.cols, m.rows)
    for i in range(m.cols):
        for k, r in enumerate(pivots):
            left._set(i, r, inv[i, k])
    return left


def restrict_operator(space: CochainSpace, op: SparseMatrix,
                      require_preserved: bool = True) -> SparseMatrix:
    """op in subspace coordinates; error if op does not preserve the subspace."""
    mapped = op @ space.basis
    reduced = space.coords @ mapped
    if require_preserved and not (space.basis @ reduced == mapped):
        raise ActionLeavesSubspace("operator does not preserve the subspace")
    return reduced


def fixed_subcomplex(c: CochainComplex, ops: list, through_degree: int | None = None) -> CochainComplex:
    """Replace space(n) by its intersection with the fixed points of ops[n].

    ops[n].sigmas act on ambient(n) and must preserve space(n).  Degrees
    above `through_degree` (default: all) keep their original space; the
    differential-compatibility check runs at every restricted degree.
    """
    if through_degree is None:
        through_degree = c.top_degree
    field = c.field
    new_spaces = []
    for n in range(c.top_degree + 1):
        space = c.spaces[n]
        sigmas = ops[n].sigmas if n < len(ops) and ops[n] is not None else []
        if n > through_degree or not sigmas:
            new_spaces.append(space)
            continue
        s = space.dim
        eye = Matrix.identity(field, s)
        stacked = []
        for sigma in sigmas:
            red = restrict_operator(space, sigma)
            stacked.append(red.to_dense() - eye)
        fixed = kernel_basis(Matrix.vstack(field, stacked))
        fdim = fixed.dim
        if fdim == s:
            new_spaces.append(space)
            continue
        if fdim == 0:
            zero_basis = SparseMatrix(field, space.ambient_dim, 0)
            zero_coords = SparseMatrix(field, 0, space.ambient_dim)
            new_spaces.append(CochainSpace(space.ambient_dim, zero_basis,
                                           zero_coords, check=False))
            continue
        fb = SparseMatrix.from_dense(fixed.basis)
        lb = SparseMatrix.from_dense(_left_inverse_dense(fixed.basis))
        new_spaces.append(CochainSpace(space.ambient_dim,
                                       space.basis @ fb,
                                       lb @ space.coords, check=False))
    out = CochainComplex(field, c.top_degree, new_spaces, c.diffs,
                         label=c.label + " fixed")
    # a fixed vector must stay fixed after applying the differential
    for n in range(min(through_degree + 1, c.top_degree)):
        next_sigmas = ops[n + 1].sigmas if n + 1 < len(ops) and ops[n + 1] is not None else []
        if not next_sigmas:
            continue
        for col in out.spaces[n].basis.cols_data:
            image = c.diffs[n].apply(col)
            for sigma in next_sigmas:
                if sigma.apply(image) != image:
                    raise ActionNotCompatible(
                        f"differential image at degree {n} is not fixed")
    return out


def coxeter_relations_hold(op: ActionOperator, space: CochainSpace):
    """Check the three Coxeter relation families on the given subspace.

    Returns (ok, name_of_first_failure).
    """
    sigmas = [restrict_operator(space, s) for s in op.sigmas]
    n = len(sigmas)
    field = space.basis.field
    eye = SparseMatrix.identity(field, space.dim)
    for i in range(n):
        if not (sigmas[i] @ sigmas[i] == eye):
            return False, f"sigma_{i + 1}^2 != id"
    for i in range(n - 1):
        lhs = sigmas[i] @ (sigmas[i + 1] @ sigmas[i])
        rhs = sigmas[i + 1] @ (sigmas[i] @ sigmas[i + 1])
        if not (lhs == rhs):
            return False, f"braid relation fails at {i + 1}"
    for i in range(n):
        for j in range(i + 2, n):
            if not (sigmas[i] @ sigmas[j] == sigmas[j] @ sigmas[i]):
                return False, f"commuting relation fails at ({i + 1},{j + 1})"
    return True, None


# -- induced maps on cohomology -------------------------------------------


@dataclass
class InducedMapReport:
    degrees: list
    matrices: list
    injective: list

    def matrix(self, n: int) -> Matrix:
        return self.matrices[self.degrees.index(n)]

    def is_injective(self, n: int) -> bool:
        return self.injective[self.degrees.index(n)]


def _cohomology_basis(c: CochainComplex, n: int):
    """Cocycle kernel basis at degree n with the projection onto H^n and a
    section choosing cocycle representatives of the quotient basis."""
    dn = c.restricted_diff(n).to_dense()
    cocycles = kernel_basis(dn)
    if n == 0:
        image_in_z = Matrix.zeros(c.field, cocycles.dim, 0)
    else:
        prev = c.restricted_diff(n - 1).to_dense()
        coords_cols = []
        for j in range(prev.cols):
            coords = solve_membership(cocycles, prev.column(j))
            if coords is None:
                raise NotASubcomplex("image column is not a cocycle")
            coords_cols.append(coords)
        image_in_z = Matrix.from_columns(c.field, coords_cols, rows=cocycles.dim)
    proj, sect = quotient(cocycles.dim, image_in_z)
    return cocycles, proj, sect


def induced_map_on_cohomology(sub: CochainComplex, full: CochainComplex,
                              up_to: int) -> InducedMapReport:
    """Matrices of H^n(sub) -> H^n(full) for the inclusion, with injectivity flags."""
    if sub.top_degree != full.top_degree or up_to >= sub.top_degree or \
            any(sub.ambient_dim(n) != full.ambient_dim(n)
                for n in range(min(up_to + 2, sub.top_degree + 1))):
        raise NotASubcomplex("ambient spaces disagree")
    for n in range(min(up_to + 2, sub.top_degree)):
        if not (sub.diffs[n] == full.diffs[n]):
            raise NotASubcomplex("differentials disagree")
    for n in range(up_to + 1):
        for col in sub.spaces[n].basis.cols_data:
            if not full.spaces[n].contains_column(col):
                raise NotASubcomplex(f"space at degree {n} is not contained")
    degrees, matrices, injective = [], [], []
    for n in range(up_to + 1):
        z_sub, _proj_sub, sect_sub = _cohomology_basis(sub, n)
        z_full, proj_full, _sect_full = _cohomology_basis(full, n)
        reps = z_sub.basis @ sect_sub  # cocycle representatives of H^n(sub) basis
        cols = []
        for j in range(reps.cols):
            # subspace-coordinate cocycle representative -> ambient -> full coordinates
            amb = sub.spaces[n].basis.apply(
                {i: v for i, v in enumerate(reps.column(j)) if v != 0})
            full_red = full.spaces[n].coords.apply(amb)
            vec = [full.field.zero()] * full.spaces[n].dim
            for i, v in full_red.items():
                vec[i] = v
            coords = solve_membership(z_full, vec)
            if coords is None:
                raise NotASubcomplex("sub cocycle is not a cocycle in the full complex")
            cols.append(proj_full.matvec(coords))
        mat = Matrix.from_columns(full.field, cols, rows=proj_full.rows)
        degrees.append(n)
        matrices.append(mat)
        injective.append(rank(mat) == mat.cols)
    return InducedMapReport(degrees, matrices, injective)


def euler_characteristic_consistent(c: CochainComplex) -> bool:
    """Alternating sums of space dims and cohomology dims agree on a
    complex whose differentials vanish at both ends of the degree range."""
    dims = cohomology_dims(c, c.top_degree - 1)
    top = c.spaces[c.top_degree].dim
    top_h = top - rank(c.restricted_diff(c.top_degree - 1).to_dense()) if top else 0
    chi_spaces = sum((-1) ** n * c.spaces[n].dim for n in range(c.top_degree + 1))
    chi_h = sum((-1) ** n * h for n, h in enumerate(dims)) \
        + (-1) ** c.top_degree * top_h
    return chi_spaces == chi_h
