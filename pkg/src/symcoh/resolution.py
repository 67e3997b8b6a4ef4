"""Coinvariant resolutions: the quotients of tensor powers by the signed
permutation action, their induced module structures, the exact augmented
complexes they form, the contracting homotopy, the Hom route to SH/SHH,
the projectivity splitting maps, and the cyclic-group rank table.

For group algebras away from characteristic 2 the coinvariants have the
strictly-increasing-tuple basis: repeated-entry tensors die and every
tuple equals its sorted form up to the permutation sign.  The generic
path builds the same quotient by elimination.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field as dc_field
from math import comb

from .bar import CohomologyReport
from .complexes import CochainComplex, CochainSpace, _left_inverse_dense, cohomology_dims
from .errors import (BudgetExceeded, CharacteristicDivides, InvalidPrime,
                     NotCocommutative)
from .fields import Field
from .hopf import HopfAlgebra, cyclic_group_table, group_algebra
from .linalg import Matrix, quotient, rank
from .modules import (Bimodule, LeftModule, hom_equivariant,
                      hom_equivariant_bimodule, kron, validate_bimodule,
                      validate_left_module)
from .sparse import SparseMatrix
from .tensors import (all_tuples, bar_chain_diff, flat, hochschild_chain_diff)

_GENERIC_QUOTIENT_LIMIT = 4096


def _sorted_with_sign(tup):
    """(sorted tuple, permutation sign), or None on a repeated entry."""
    inversions = 0
    n = len(tup)
    for i in range(n):
        for j in range(i + 1, n):
            if tup[i] == tup[j]:
                return None
            if tup[i] > tup[j]:
                inversions += 1
    return tuple(sorted(tup)), -1 if inversions % 2 else 1


def _swap_plus_identity_columns(field, d, slots, sym_slots):
    """Relation generators v . sigma_i - v = -(swap_i v + v) as sparse columns."""
    cols = []
    for i in range(1, sym_slots):
        for tup in all_tuples(d, slots):
            swapped = list(tup)
            swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
            col = {}
            col[flat(tuple(swapped), d)] = field.one()
            other = flat(tup, d)
            col[other] = field.add(col.get(other, field.zero()), field.one())
            cols.append({k: v for k, v in col.items() if v != 0})
    return cols


class CoinvariantSpace:
    """A^(tensor n+1) modulo the signed S_{n+1} action, with projection,
    section, labels and the induced left module structure."""

    def __init__(self, degree, ambient_dim, projection, section, labels,
                 module: LeftModule, fast_path: bool):
        self.degree = degree
        self.ambient_dim = ambient_dim
        self.projection = projection  # SparseMatrix dim x ambient
        self.section = section        # SparseMatrix ambient x dim
        self.basis_labels = labels
        self.module = module
        self.fast_path = fast_path

    @property
    def dim(self) -> int:
        return self.projection.rows

    def __repr__(self):
        return f"<Coinvariants degree {self.degree}, dim {self.dim}>"


def _fast_path_available(h: HopfAlgebra) -> bool:
    return h.group_like and h.field.characteristic != 2


def _generic_coinvariants(h, slots, sym_slots):
    d = h.dim
    ambient = d ** slots
    if ambient > _GENERIC_QUOTIENT_LIMIT:
        raise BudgetExceeded(f"generic coinvariant quotient on {ambient} coordinates")
    rel_cols = _swap_plus_identity_columns(h.field, d, slots, sym_slots)
    relations = Matrix.zeros(h.field, ambient, len(rel_cols))
    for j, col in enumerate(rel_cols):
        for i, v in col.items():
            relations._set(i, j, v)
    proj, sect = quotient(ambient, relations)
    return SparseMatrix.from_dense(proj), SparseMatrix.from_dense(sect)


def _group_diag_action_matrix(h, space_proj, space_sect, slots, g):
    """projection . (diagonal action of basis g) . section, densely."""
    from .tensors import diagonal_action
    op = diagonal_action(h, g, slots)
    return (space_proj @ (op @ space_sect)).to_dense()


def coinvariant_space(h: HopfAlgebra, n: int, force_generic: bool = False,
                      check: bool = True) -> CoinvariantSpace:
    """The degree-n coinvariant space of A^(tensor n+1).

    Group algebras in characteristic other than 2 take the sorted-tuple
    fast path; characteristic 2 falls back to the generic quotient (the
    sign argument that kills repeated entries fails there).
    """
    d = h.dim
    fld = h.field
    slots = n + 1
    if h.group_like and fld.characteristic == 2 and not force_generic:
        warnings.warn("characteristic 2: sorted-tuple fast path disabled "
                      "(odd characteristic is the intended setting)")
    if _fast_path_available(h) and not force_generic:
        labels = list(itertools.combinations(range(d), slots))
        label_rank = {lab: i for i, lab in enumerate(labels)}
        projection = SparseMatrix(fld, len(labels), d ** slots)
        section = SparseMatrix(fld, d ** slots, len(labels))
        one = fld.one()
        minus_one = fld.neg(one)
        # only distinct-entry tuples project to anything
        for lab, r in label_rank.items():
            for perm in itertools.permutations(lab):
                _key, sign = _sorted_with_sign(perm)
                projection.cols_data[flat(perm, d)][r] = one if sign > 0 else minus_one
        for lab, r in label_rank.items():
            section.cols_data[r][flat(lab, d)] = one
        table = h.group_table
        mats = []
        for g in range(d):
            mat = Matrix.zeros(fld, len(labels), len(labels))
            for lab, r in label_rank.items():
                moved = tuple(table[g][t] for t in lab)
                key, sign = _sorted_with_sign(moved)  # free orbits: no repeats
                mat._set(label_rank[key], r, one if sign > 0 else fld.neg(one))
            mats.append(mat)
        module = LeftModule(len(labels), mats)
        space = CoinvariantSpace(n, d ** slots, projection, section, labels,
                                 module, fast_path=True)
    else:
        projection, section = _generic_coinvariants(h, slots, slots)
        mats = [_group_diag_action_matrix(h, projection, section, slots, g)
                for g in range(d)]
        labels = _section_labels(section, d, slots)
        module = LeftModule(projection.rows, mats)
        space = CoinvariantSpace(n, d ** slots, projection, section, labels,
                                 module, fast_path=False)
    if check:
        if not (space.projection @ space.section).equals_identity():
            raise AssertionError("projection . section != id")
        validate_left_module(h, space.module)
        _check_action_well_defined(h, space)
    return space


def _section_labels(section: SparseMatrix, d, slots):
    labels = []
    for j in range(section.cols):
        col = section.cols_data[j]
        idx = min(col) if col else None
        labels.append(_unflat(idx, d, slots) if idx is not None else None)
    return labels


def _unflat(idx, d, slots):
    out = []
    for _ in range(slots):
        out.append(idx % d)
        idx //= d
    return tuple(reversed(out))


def _descends_to_quotient(field, d, slots, sym_slots, projected: SparseMatrix) -> bool:
    """True when projection . op kills every relation  swap_i(v) + v."""
    cols = projected.cols_data
    for tup in all_tuples(d, slots):
        base = cols[flat(tup, d)]
        for i in range(1, sym_slots):
            if tup[i - 1] <= tup[i]:
                continue  # each unordered pair once; i-1 == i gives 2v = 0 too
            swapped = list(tup)
            swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
            other = cols[flat(tuple(swapped), d)]
            if len(base) != len(other):
                return False
            for k, v in base.items():
                if field.add(v, other.get(k, field.zero())) != 0:
                    return False
        # repeated adjacent entries force 2v = 0 on the image column
        if base and any(tup[i - 1] == tup[i] for i in range(1, sym_slots)):
            if any(field.add(v, v) != 0 for v in base.values()):
                return False
    return True


def _check_action_well_defined(h, space):
    """The diagonal action must map relation vectors into ker(projection)."""
    from .tensors import diagonal_action
    if space.dim == 0:
        return
    d = h.dim
    slots = space.degree + 1
    for g in range(d):
        projected = space.projection @ diagonal_action(h, g, slots)
        if not _descends_to_quotient(h.field, d, slots, slots, projected):
            raise AssertionError("induced action is not well-defined")


# -- the resolution of k ----------------------------------------------------


@dataclass
class ResolutionComplex:
    hopf: HopfAlgebra
    top: int
    spaces: list            # CoinvariantSpace per degree 0..top
    boundaries: list        # Matrix, boundaries[n]: degree n -> n-1 (n >= 1)
    augmentation: Matrix    # 1 x dim(S_0)

    def dims(self):
        return [s.dim for s in self.spaces]

    def exactness_report(self):
        """Rank counting: exact at inner degrees, at degree 0 against the
        augmentation, and onto k.  The top degree is certified when the
        next space is already zero."""
        checks = []
        ranks = [rank(b) for b in self.boundaries[1:]]  # rank of d_n, n=1..top
        aug_rank = rank(self.augmentation)
        checks.append(("onto_k", aug_rank == 1))
        s0 = self.spaces[0].dim
        r1 = ranks[0] if self.top >= 1 else 0
        checks.append(("exact_at_0", aug_rank + r1 == s0))
        for n in range(1, self.top):
            sn = self.spaces[n].dim
            checks.append((f"exact_at_{n}", ranks[n - 1] + ranks[n] == sn))
        if self.spaces[self.top].dim == 0 or \
                (self.hopf.group_like and self.top + 2 > self.hopf.dim):
            sn = self.spaces[self.top].dim
            checks.append((f"exact_at_{self.top}",
                           (ranks[self.top - 1] if self.top >= 1 else aug_rank) == sn))
        return checks


def sym_resolution_complex(h: HopfAlgebra, top: int, force_generic: bool = False,
                           check: bool = True) -> ResolutionComplex:
    """The augmented coinvariant chain complex S_top -> ... -> S_0 -> k."""
    spaces = [coinvariant_space(h, n, force_generic=force_generic, check=check)
              for n in range(top + 1)]
    boundaries = [None]
    for n in range(1, top + 1):
        if spaces[n].dim == 0:
            boundaries.append(Matrix.zeros(h.field, spaces[n - 1].dim, 0))
            continue
        chain = bar_chain_diff(h, n)  # A^(n+1) -> A^(n)
        if check:
            _check_chain_well_defined(h, chain, spaces[n], spaces[n - 1], n + 1)
        boundaries.append(
            (spaces[n - 1].projection @ (chain @ spaces[n].section)).to_dense())
    aug = Matrix.zeros(h.field, 1, spaces[0].dim)
    sect0 = spaces[0].section
    for j in range(spaces[0].dim):
        total = h.field.zero()
        for i, v in sect0.cols_data[j].items():
            total = h.field.add(total, h.field.mul(v, h.counit[i]))
        aug._set(0, j, total)
    return ResolutionComplex(h, top, spaces, boundaries, aug)


def _check_chain_well_defined(h, chain, src: CoinvariantSpace, dst, sym_slots):
    if src.dim == 0:
        return
    projected = dst.projection @ chain
    if not _descends_to_quotient(h.field, h.dim, src.degree + 1, sym_slots, projected):
        raise AssertionError("induced boundary is not well-defined")


def _insert_unit_op(h: HopfAlgebra, slots: int) -> SparseMatrix:
    """A^(tensor slots) -> A^(tensor slots+1): prepend the unit."""
    d = h.dim
    out = SparseMatrix(h.field, d ** (slots + 1), d ** slots)
    for tup in all_tuples(d, slots):
        col = flat(tup, d)
        for u, uc in h.unit_dict().items():
            out.add_entry(flat((u,) + tup, d), col, uc)
    return out


@dataclass
class HomotopyReport:
    degrees: list
    passed: bool


def contracting_homotopy_check(h: HopfAlgebra, top: int,
                               force_generic: bool = False) -> HomotopyReport:
    """Assemble h_n = projection . (prepend 1) . section and verify
    d_{n+1} h_n + h_{n-1} d_n = id, with the augmentation conventions at
    degree 0."""
    res = sym_resolution_complex(h, top, force_generic=force_generic)
    spaces = res.spaces
    homotopies = []
    for n in range(top):
        ins = _insert_unit_op(h, n + 1)
        homotopies.append(
            (spaces[n + 1].projection @ (ins @ spaces[n].section)).to_dense())
    fld = h.field
    degrees = []
    ok = True
    # unit section k -> S_0 followed by the augmentation
    unit_col = Matrix.zeros(fld, spaces[0].dim, 1)
    unit_red = spaces[0].projection.apply(h.unit_dict())
    for i, v in unit_red.items():
        unit_col._set(i, 0, v)
    if not (res.augmentation @ unit_col) == Matrix.identity(fld, 1):
        ok = False
    ident0 = res.boundaries[1] @ homotopies[0] + unit_col @ res.augmentation
    good = ident0 == Matrix.identity(fld, spaces[0].dim)
    degrees.append((0, good))
    ok = ok and good
    for n in range(1, top):
        ident = res.boundaries[n + 1] @ homotopies[n] \
            + homotopies[n - 1] @ res.boundaries[n]
        good = ident == Matrix.identity(fld, spaces[n].dim)
        degrees.append((n, good))
        ok = ok and good
    return HomotopyReport(degrees, ok)


def sh_via_resolution(h: HopfAlgebra, mod: LeftModule, top: int,
                      force_generic: bool = False) -> CohomologyReport:
    """SH^0..SH^{top-1} from Hom_A(S_n, M) with the induced action."""
    if not h.is_cocommutative:
        raise NotCocommutative("symmetric cohomology needs a cocommutative algebra")
    validate_left_module(h, mod)
    res = sym_resolution_complex(h, top)
    m = mod.dim
    fld = h.field
    spaces = []
    diffs = []
    for n in range(top + 1):
        s = res.spaces[n].dim
        sub = hom_equivariant(h, res.spaces[n].module, mod)
        if sub.dim and s:
            basis = SparseMatrix.from_dense(sub.basis)
            coords = SparseMatrix.from_dense(_left_inverse_dense(sub.basis))
        else:
            basis = SparseMatrix(fld, m * s, 0)
            coords = SparseMatrix(fld, 0, m * s)
        spaces.append(CochainSpace(m * s, basis, coords, check=False))
    eye_m = Matrix.identity(fld, m)
    for n in range(top):
        diffs.append(SparseMatrix.from_dense(
            kron(res.boundaries[n + 1].transpose(), eye_m)))
    cpx = CochainComplex(fld, top, spaces, diffs, label="Hom(S,M)")
    dims = cohomology_dims(cpx, top - 1)
    return CohomologyReport(dims, "resolution", kind="SH")


# -- the bimodule resolution -------------------------------------------------


class BimoduleCoinvariantSpace:
    """Coinvariants of A^(tensor n+2) under S_{n+1} on the first n+1 slots,
    with the induced bimodule structure."""

    def __init__(self, degree, ambient_dim, projection, section, labels,
                 bimodule: Bimodule, fast_path: bool):
        self.degree = degree
        self.ambient_dim = ambient_dim
        self.projection = projection
        self.section = section
        self.basis_labels = labels
        self.bimodule = bimodule
        self.fast_path = fast_path

    @property
    def dim(self) -> int:
        return self.projection.rows


def bimodule_coinvariant_space(h: HopfAlgebra, n: int,
                               force_generic: bool = False,
                               check: bool = True) -> BimoduleCoinvariantSpace:
    d = h.dim
    fld = h.field
    slots = n + 2
    if _fast_path_available(h) and not force_generic:
        labels = [inc + (last,)
                  for inc in itertools.combinations(range(d), n + 1)
                  for last in range(d)]
        label_rank = {lab: i for i, lab in enumerate(labels)}
        projection = SparseMatrix(fld, len(labels), d ** slots)
        section = SparseMatrix(fld, d ** slots, len(labels))
        one = fld.one()
        minus_one = fld.neg(one)
        for inc in itertools.combinations(range(d), n + 1):
            for perm in itertools.permutations(inc):
                _key, sign = _sorted_with_sign(perm)
                value = one if sign > 0 else minus_one
                for last in range(d):
                    projection.cols_data[flat(perm + (last,), d)][
                        label_rank[inc + (last,)]] = value
        for lab, r in label_rank.items():
            section.cols_data[r][flat(lab, d)] = one
        table = h.group_table
        left, right = [], []
        for g in range(d):
            lmat = Matrix.zeros(fld, len(labels), len(labels))
            rmat = Matrix.zeros(fld, len(labels), len(labels))
            for lab, r in label_rank.items():
                moved = tuple(table[g][t] for t in lab[:-1])
                key, sign = _sorted_with_sign(moved)
                lmat._set(label_rank[key + (table[g][lab[-1]],)], r,
                          one if sign > 0 else fld.neg(one))
                rmat._set(label_rank[lab[:-1] + (table[lab[-1]][g],)], r, one)
            left.append(lmat)
            right.append(rmat)
        bim = Bimodule(len(labels), left, right)
        space = BimoduleCoinvariantSpace(n, d ** slots, projection, section,
                                         labels, bim, fast_path=True)
    else:
        projection, section = _generic_coinvariants(h, slots, n + 1)
        from .tensors import diagonal_action
        left = [(projection @ (diagonal_action(h, g, slots) @ section)).to_dense()
                for g in range(d)]
        right = [(projection @ (_last_right_mult(h, g, slots) @ section)).to_dense()
                 for g in range(d)]
        labels = _section_labels(section, d, slots)
        bim = Bimodule(projection.rows, left, right)
        space = BimoduleCoinvariantSpace(n, d ** slots, projection, section,
                                         labels, bim, fast_path=False)
    if check:
        if not (space.projection @ space.section).equals_identity():
            raise AssertionError("projection . section != id")
        validate_bimodule(h, space.bimodule)
        if space.dim:
            from .tensors import diagonal_action
            for g in range(d):
                for op in (diagonal_action(h, g, slots), _last_right_mult(h, g, slots)):
                    if not _descends_to_quotient(fld, d, slots, n + 1,
                                                 space.projection @ op):
                        raise AssertionError("induced bimodule action is not well-defined")
    return space


def _last_right_mult(h, g, slots):
    d = h.dim
    out = SparseMatrix(h.field, d ** slots, d ** slots)
    for tup in all_tuples(d, slots):
        col = flat(tup, d)
        for k, v in h.mult[tup[-1]][g].items():
            out.add_entry(flat(tup[:-1] + (k,), d), col, v)
    return out


@dataclass
class BimoduleResolution:
    hopf: HopfAlgebra
    top: int
    spaces: list
    boundaries: list
    augmentation: Matrix  # dim(A) x dim(S^e_0)
    factorization_checks: list = dc_field(default_factory=list)

    def dims(self):
        return [s.dim for s in self.spaces]

    def exactness_report(self):
        checks = []
        ranks = [rank(b) for b in self.boundaries[1:]]
        aug_rank = rank(self.augmentation)
        checks.append(("onto_A", aug_rank == self.hopf.dim))
        s0 = self.spaces[0].dim
        r1 = ranks[0] if self.top >= 1 else 0
        checks.append(("exact_at_0", aug_rank + r1 == s0))
        for n in range(1, self.top):
            sn = self.spaces[n].dim
            checks.append((f"exact_at_{n}", ranks[n - 1] + ranks[n] == sn))
        if self.hopf.group_like and self.top + 2 > self.hopf.dim:
            sn = self.spaces[self.top].dim
            checks.append((f"exact_at_{self.top}",
                           (ranks[self.top - 1] if self.top >= 1 else aug_rank) == sn))
        return checks


def hochschild_resolution(h: HopfAlgebra, top: int, force_generic: bool = False,
                          check: bool = True) -> BimoduleResolution:
    """The augmented bimodule complex of coinvariants of A^(tensor n+2),
    with the factorization check against (coinvariants tensor A)."""
    spaces = [bimodule_coinvariant_space(h, n, force_generic=force_generic,
                                         check=check) for n in range(top + 1)]
    boundaries = [None]
    for n in range(1, top + 1):
        if spaces[n].dim == 0:
            boundaries.append(Matrix.zeros(h.field, spaces[n - 1].dim, 0))
            continue
        chain = hochschild_chain_diff(h, n)
        if check:
            _check_chain_well_defined_bimodule(h, chain, spaces[n], spaces[n - 1])
        boundaries.append(
            (spaces[n - 1].projection @ (chain @ spaces[n].section)).to_dense())
    # augmentation: counit on the first slot times the last slot
    d = h.dim
    fld = h.field
    aug_ambient = SparseMatrix(fld, d, d * d)
    for tup in all_tuples(d, 2):
        eps = h.counit[tup[0]]
        if eps != 0:
            aug_ambient.add_entry(tup[1], flat(tup, d), eps)
    aug = (aug_ambient @ spaces[0].section).to_dense()
    res = BimoduleResolution(h, top, spaces, boundaries, aug)
    # dimension and structure comparison with (plain coinvariants) tensor A
    plain = [coinvariant_space(h, n, force_generic=force_generic, check=False)
             for n in range(top + 1)]
    for n in range(top + 1):
        ok_dim = spaces[n].dim == plain[n].dim * d
        res.factorization_checks.append((f"dim_{n}", ok_dim))
        if ok_dim and spaces[n].dim:
            ok_left = True
            ok_right = True
            for i in range(d):
                expect = Matrix.zeros(fld, spaces[n].dim, spaces[n].dim)
                for (j, k), c in h.comult[i].items():
                    expect = expect + kron(plain[n].module.action[j],
                                           _left_mult_matrix(h, k)).scale(c)
                if expect != spaces[n].bimodule.left[i]:
                    ok_left = False
                rexpect = kron(Matrix.identity(fld, plain[n].dim),
                               _right_mult_matrix(h, i))
                if rexpect != spaces[n].bimodule.right[i]:
                    ok_right = False
            res.factorization_checks.append((f"left_structure_{n}", ok_left))
            res.factorization_checks.append((f"right_structure_{n}", ok_right))
    return res


def _left_mult_matrix(h, i):
    m = Matrix.zeros(h.field, h.dim, h.dim)
    for j in range(h.dim):
        for k, c in h.mult[i][j].items():
            m._set(k, j, c)
    return m


def _right_mult_matrix(h, i):
    m = Matrix.zeros(h.field, h.dim, h.dim)
    for j in range(h.dim):
        for k, c in h.mult[j][i].items():
            m._set(k, j, c)
    return m


def _check_chain_well_defined_bimodule(h, chain, src, dst):
    if src.dim == 0:
        return
    projected = dst.projection @ chain
    if not _descends_to_quotient(h.field, h.dim, src.degree + 2,
                                 src.degree + 1, projected):
        raise AssertionError("induced boundary is not well-defined")


def shh_via_resolution(h: HopfAlgebra, bim: Bimodule, top: int) -> CohomologyReport:
    """SHH^0..SHH^{top-1} from Hom over the enveloping algebra of the
    bimodule coinvariant resolution."""
    if not h.is_cocommutative:
        raise NotCocommutative("symmetric Hochschild cohomology needs cocommutativity")
    validate_bimodule(h, bim)
    res = hochschild_resolution(h, top)
    m = bim.dim
    fld = h.field
    spaces = []
    diffs = []
    for n in range(top + 1):
        s = res.spaces[n].dim
        sub = hom_equivariant_bimodule(h, res.spaces[n].bimodule, bim)
        if sub.dim and s:
            basis = SparseMatrix.from_dense(sub.basis)
            coords = SparseMatrix.from_dense(_left_inverse_dense(sub.basis))
        else:
            basis = SparseMatrix(fld, m * s, 0)
            coords = SparseMatrix(fld, 0, m * s)
        spaces.append(CochainSpace(m * s, basis, coords, check=False))
    eye_m = Matrix.identity(fld, m)
    for n in range(top):
        diffs.append(SparseMatrix.from_dense(
            kron(res.boundaries[n + 1].transpose(), eye_m)))
    cpx = CochainComplex(fld, top, spaces, diffs, label="Hom(S^e,M)")
    dims = cohomology_dims(cpx, top - 1)
    return CohomologyReport(dims, "resolution", kind="SHH")


# -- projectivity splitting --------------------------------------------------


@dataclass
class SplittingReport:
    phi: Matrix
    psi: Matrix
    retract_ok: bool
    equivariant_ok: bool


def splitting_maps(h: HopfAlgebra, n: int, force_generic: bool = False) -> SplittingReport:
    """The averaged face map S_n -> A tensor S_{n-1} and its retraction.

    Exists only when the characteristic does not divide n+1; certifies
    the degree-n coinvariants as a direct summand of a free module.
    """
    if n < 1:
        raise ValueError("splitting is defined for n >= 1")
    p = h.field.characteristic
    if p and (n + 1) % p == 0:
        raise CharacteristicDivides(f"characteristic {p} divides {n + 1}")
    d = h.dim
    fld = h.field
    sn = coinvariant_space(h, n, force_generic=force_generic)
    sm = coinvariant_space(h, n - 1, force_generic=force_generic)
    inv_np1 = fld.inv(fld.from_int(n + 1))

    # ambient face map: tau -> sum_i (-1)^i tau_i tensor (tau without i)
    amb = SparseMatrix(fld, d * sm.dim, d ** (n + 1))
    for tup in all_tuples(d, n + 1):
        col = flat(tup, d)
        sign = fld.one()
        for i in range(n + 1):
            reduced = sm.projection.apply({flat(tup[:i] + tup[i + 1:], d): fld.one()})
            for r, v in reduced.items():
                amb.add_entry(tup[i] * sm.dim + r, col,
                              fld.mul(sign, fld.mul(v, inv_np1)))
            sign = fld.neg(sign)
    # well-definedness on the quotient
    for col in _swap_plus_identity_columns(fld, d, n + 1, n + 1):
        if amb.apply(col):
            raise AssertionError("phi is not well-defined on the coinvariants")
    phi = (amb @ sn.section).to_dense()

    psi_amb = SparseMatrix(fld, sn.dim, d * sm.dim)
    for a in range(d):
        for j in range(sm.dim):
            col = a * sm.dim + j
            for i, v in sm.section.cols_data[j].items():
                tup = _unflat(i, d, n)
                reduced = sn.projection.apply({flat((a,) + tup, d): v})
                for r, w in reduced.items():
                    psi_amb.add_entry(r, col, w)
    psi = psi_amb.to_dense()

    retract_ok = (psi @ phi) == Matrix.identity(fld, sn.dim)

    # both maps must commute with the A-actions (diagonal on A tensor S_{n-1})
    tensor_action = []
    for i in range(d):
        acc = Matrix.zeros(fld, d * sm.dim, d * sm.dim)
        for (j, k), c in h.comult[i].items():
            acc = acc + kron(_left_mult_matrix(h, j), sm.module.action[k]).scale(c)
        tensor_action.append(acc)
    equivariant_ok = True
    for i in range(d):
        if phi @ sn.module.action[i] != tensor_action[i] @ phi:
            equivariant_ok = False
        if psi @ tensor_action[i] != sn.module.action[i] @ psi:
            equivariant_ok = False
    return SplittingReport(phi, psi, retract_ok, equivariant_ok)


# -- the cyclic-group rank table ----------------------------------------------


@dataclass
class CpRankRow:
    n: int
    dim: int
    rank: int
    claimed_rank: int
    is_free: bool


def cp_rank_table(p: int, n_max: int | None = None) -> list:
    """Freeness certificates for the coinvariants of the cyclic group
    algebra in its own characteristic, degrees 1..p-2.

    The greedy pass keeps one sorted-tuple generator per group orbit
    (sign disregarded, as orbits of b and -b coincide as lines); the
    certificate checks that the kept orbits jointly form a basis.
    """
    from .fields import is_prime
    if p == 2 or not is_prime(p):
        raise InvalidPrime(f"{p} is not an odd prime")
    field = Field.prime(p)
    h = group_algebra(p, cyclic_group_table(p), field)
    top = p - 2 if n_max is None else min(n_max, p - 2)
    rows = []
    for n in range(1, top + 1):
        space = coinvariant_space(h, n)
        labels = space.basis_labels
        label_rank = {lab: i for i, lab in enumerate(labels)}
        covered = set()
        selected = []
        for lab in labels:
            if lab in covered:
                continue
            selected.append(lab)
            current = lab
            for _ in range(p):
                covered.add(current)
                moved = tuple(sorted((t + 1) % p for t in current))
                current = moved
        # certificate: all orbit translates of the kept generators span freely
        cols = []
        for lab in selected:
            coeff = field.one()
            col_tuple = lab
            for _ in range(p):
                cols.append({label_rank[col_tuple]: coeff})
                moved = tuple((t + 1) % p for t in col_tuple)
                key, sign = _sorted_with_sign(moved)
                col_tuple = key
                if sign < 0:
                    coeff = field.neg(coeff)
        mat = Matrix.zeros(field, space.dim, len(cols))
        for j, col in enumerate(cols):
            for i, v in col.items():
                mat._set(i, j, v)
        full = rank(mat)
        is_free = (len(selected) * p == space.dim) and (full == space.dim)
        rows.append(CpRankRow(n, space.dim, len(selected),
                              comb(p, n + 1) // p, is_free))
    return rows
