"""Standard and homogeneous cochain complexes of a cocommutative Hopf
algebra, the signed symmetric-group actions on them, the chain
isomorphisms between the two realizations, and symmetric cohomology.

The standard ("nonhomogeneous") complex lives on reduced coordinates
Hom_k(A^(tensor n), M); the equivariant evaluation f(a_0 tensor x) =
a_0 . f(1 tensor x) translates operators on the free resolution into
the boundary formulas used here.  The homogeneous
complex is the equivariant subspace of Hom_k(A^(tensor n+1), M) under
the diagonal action, with the action by signed slot swaps.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from .complexes import (ActionOperator, CochainComplex, CochainSpace,
                        _left_inverse_dense, cohomology_dims,
                        fixed_subcomplex, restrict_operator)
from .errors import BudgetExceeded, NotCocommutative
from .hopf import HopfAlgebra, iterated_comult
from .linalg import Matrix, intersect_kernels
from .modules import LeftModule, validate_left_module
from .sparse import SparseMatrix
from .tensors import (all_tuples, bar_chain_diff, cochain_precompose,
                      cochain_swap_sigma, diagonal_action, flat)

DEFAULT_BUDGET = 200_000
_GENERIC_SOLVE_LIMIT = 4096


@dataclass
class CohomologyReport:
    dims: list
    realization: str
    kind: str = "H"
    checks: list = dc_field(default_factory=list)
    routes: dict = dc_field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(ok for _name, ok in self.checks)


def require_budget(coords: int, budget: int, what: str):
    if coords > budget:
        raise BudgetExceeded(
            f"{what} needs {coords} coordinates, budget is {budget}")


def _require_cocommutative(h: HopfAlgebra):
    if not h.is_cocommutative:
        raise NotCocommutative("the symmetric-group action needs tw . comult = comult")


def _action_columns(m: LeftModule):
    """Per basis element: {value column j -> {value row j' -> entry}}."""
    cols = []
    for a in m.action:
        col = [dict() for _ in range(m.dim)]
        for j in range(m.dim):
            for i in range(m.dim):
                v = a[i, j]
                if v != 0:
                    col[j][i] = v
        cols.append(col)
    return cols


def _value_action_operator(field, tuples_count: int, act: Matrix) -> SparseMatrix:
    """Block-diagonal action on cochain values over every tuple coordinate."""
    m = act.rows
    out = SparseMatrix(field, tuples_count * m, tuples_count * m)
    entries = [(i, j, act[i, j]) for i in range(m) for j in range(m) if act[i, j] != 0]
    for t in range(tuples_count):
        base = t * m
        for i, j, v in entries:
            out.add_entry(base + i, base + j, v)
    return out


# -- the homogeneous (equivariant-subspace) realization -------------------


def equivariant_space(h: HopfAlgebra, mod: LeftModule, slots: int,
                      force_generic: bool = False) -> CochainSpace:
    """Equivariant maps A^(tensor slots) -> M under the diagonal action.

    Group algebras use the free-orbit basis (one functional per orbit
    representative and module basis vector); anything else solves the
    equivariance equations as one dense kernel.
    """
    d = h.dim
    m = mod.dim
    ambient = (d ** slots) * m
    if h.group_like and not force_generic:
        e = h.group_identity
        table = h.group_table
        act_cols = _action_columns(mod)
        reps = [(e,) + rest for rest in all_tuples(d, slots - 1)]
        basis = SparseMatrix(h.field, ambient, len(reps) * m)
        coords = SparseMatrix(h.field, len(reps) * m, ambient)
        one = h.field.one()
        for r_idx, rep in enumerate(reps):
            rep_flat = flat(rep, d)
            for j in range(m):
                col = r_idx * m + j
                coords.cols_data[rep_flat * m + j][col] = one
                for g in range(d):
                    moved = flat(tuple(table[g][t] for t in rep), d)
                    for j2, v in act_cols[g][j].items():
                        basis.add_entry(moved * m + j2, col, v)
        return CochainSpace(ambient, basis, coords, check=False)

    if ambient > _GENERIC_SOLVE_LIMIT:
        raise BudgetExceeded(
            f"generic equivariant solve on {ambient} coordinates is over the limit")
    constraints = []
    for b in range(d):
        pre = cochain_precompose(diagonal_action(h, b, slots), m, h.field)
        val = _value_action_operator(h.field, d ** slots, mod.action[b])
        constraints.append((pre - val).to_dense())
    sub = intersect_kernels(constraints)
    basis = SparseMatrix.from_dense(sub.basis)
    coords = SparseMatrix.from_dense(_left_inverse_dense(sub.basis))
    return CochainSpace(ambient, basis, coords, check=False)


def homogeneous_complex(h: HopfAlgebra, mod: LeftModule, top: int,
                        budget: int = DEFAULT_BUDGET,
                        force_generic: bool = False) -> CochainComplex:
    """Degrees 0..top of the equivariant realization; differential is
    precomposition with the alternating counit-deletion chain map."""
    validate_left_module(h, mod)
    m = mod.dim
    require_budget(m * h.dim ** (top + 1), budget, "homogeneous complex")
    spaces = [equivariant_space(h, mod, n + 1, force_generic=force_generic)
              for n in range(top + 1)]
    diffs = [cochain_precompose(bar_chain_diff(h, n + 1), m, h.field)
             for n in range(top)]
    return CochainComplex(h.field, top, spaces, diffs, label="K")


def sigma_homogeneous(h: HopfAlgebra, mod: LeftModule, n: int,
                      space: CochainSpace | None = None) -> ActionOperator:
    """Signed slot-swap generators on degree n of the homogeneous realization.

    If `space` is given, each generator is checked to preserve it
    (raising ActionLeavesSubspace otherwise).
    """
    _require_cocommutative(h)
    sigmas = [cochain_swap_sigma(h.field, h.dim, n + 1, i, mod.dim)
              for i in range(1, n + 1)]
    if space is not None:
        for s in sigmas:
            restrict_operator(space, s)
    return ActionOperator(n, sigmas)


# -- the nonhomogeneous (reduced-coordinate) realization -------------------


def nonhomogeneous_complex(h: HopfAlgebra, mod: LeftModule, top: int,
                           budget: int = DEFAULT_BUDGET) -> CochainComplex:
    """Degrees 0..top of the standard complex on Hom_k(A^(tensor n), M)."""
    validate_left_module(h, mod)
    d = h.dim
    m = mod.dim
    fld = h.field
    require_budget(m * d ** (top + 1), budget, "nonhomogeneous complex")
    act_cols = _action_columns(mod)
    spaces = [CochainSpace.full(fld, m * d ** n) for n in range(top + 1)]
    diffs = []
    for n in range(top):
        diff = SparseMatrix(fld, m * d ** (n + 1), m * d ** n)
        for tup in all_tuples(d, n + 1):
            row_base = flat(tup, d) * m
            # first face: the leading argument acts on the value
            tail = flat(tup[1:], d) * m
            for j in range(m):
                for j2, v in act_cols[tup[0]][j].items():
                    diff.add_entry(row_base + j2, tail + j, v)
            # inner faces: multiply adjacent arguments
            sign = fld.neg(fld.one())
            for i in range(n):
                for k, c in h.mult[tup[i]][tup[i + 1]].items():
                    col_base = flat(tup[:i] + (k,) + tup[i + 2:], d) * m
                    sc = fld.mul(sign, c)
                    for j in range(m):
                        diff.add_entry(row_base + j, col_base + j, sc)
                sign = fld.neg(sign)
            # last face: counit of the trailing argument
            eps = h.counit[tup[n]]
            if eps != 0:
                se = fld.mul(sign, eps)
                col_base = flat(tup[:n], d) * m
                for j in range(m):
                    diff.add_entry(row_base + j, col_base + j, se)
        diffs.append(diff)
    return CochainComplex(fld, top, spaces, diffs, label="C")


def _sweedler_triples(h: HopfAlgebra, i: int) -> dict:
    return iterated_comult(h, i, 2).coeffs


def sigma_nonhomogeneous(h: HopfAlgebra, mod: LeftModule, n: int) -> ActionOperator:
    """The (i, i+1) generators on reduced degree-n cochains.

    The interior formula substitutes the Sweedler triple of the i-th
    argument; at i = 1 the leading leg acts on the value, at i = n the
    trailing leg is dropped by the specialization a_0 = 1.
    """
    _require_cocommutative(h)
    if n < 1:
        return ActionOperator(n, [])
    d = h.dim
    m = mod.dim
    fld = h.field
    act_cols = _action_columns(mod)
    size = m * d ** n
    minus = fld.neg(fld.one())
    sigmas = []
    for i in range(1, n + 1):
        sig = SparseMatrix(fld, size, size)
        for tup in all_tuples(d, n):
            row_base = flat(tup, d) * m
            if i == 1 and n == 1:
                for (s1, s2), c in h.comult[tup[0]].items():
                    for u, su in h.antipode_column(s2).items():
                        coeff = fld.mul(minus, fld.mul(c, su))
                        col_base = flat((u,), d) * m
                        for j2 in range(m):
                            for j, av in act_cols[s1][j2].items():
                                sig.add_entry(row_base + j, col_base + j2,
                                              fld.mul(coeff, av))
            elif i == 1:
                for (s1, s2, s3), c in _sweedler_triples(h, tup[0]).items():
                    for u, su in h.antipode_column(s2).items():
                        for v, mv in h.mult[s3][tup[1]].items():
                            coeff = fld.mul(minus, fld.mul(c, fld.mul(su, mv)))
                            col_base = flat((u, v) + tup[2:], d) * m
                            for j2 in range(m):
                                for j, av in act_cols[s1][j2].items():
                                    sig.add_entry(row_base + j, col_base + j2,
                                                  fld.mul(coeff, av))
            elif i == n:
                for (s1, s2), c in h.comult[tup[n - 1]].items():
                    for a, ma in h.mult[tup[n - 2]][s1].items():
                        for u, su in h.antipode_column(s2).items():
                            coeff = fld.mul(minus, fld.mul(c, fld.mul(ma, su)))
                            col_base = flat(tup[:n - 2] + (a, u), d) * m
                            for j in range(m):
                                sig.add_entry(row_base + j, col_base + j, coeff)
            else:
                for (s1, s2, s3), c in _sweedler_triples(h, tup[i - 1]).items():
                    for a, ma in h.mult[tup[i - 2]][s1].items():
                        for u, su in h.antipode_column(s2).items():
                            for v, mv in h.mult[s3][tup[i]].items():
                                coeff = fld.mul(minus,
                                                fld.mul(fld.mul(c, ma), fld.mul(su, mv)))
                                col_base = flat(tup[:i - 2] + (a, u, v) + tup[i + 1:], d) * m
                                for j in range(m):
                                    sig.add_entry(row_base + j, col_base + j, coeff)
        sigmas.append(sig)
    return ActionOperator(n, sigmas)


def sigma_nonhomogeneous_ambient(h: HopfAlgebra, mod: LeftModule, n: int) -> ActionOperator:
    """The same action written on all of Hom_k(A^(tensor n+1), M), where the
    first tensor slot is the free module coordinate.  Used to cross-check
    the reduced boundary formulas under f(a_0 tensor x) = a_0 . f(1 tensor x)."""
    _require_cocommutative(h)
    d = h.dim
    m = mod.dim
    fld = h.field
    size = m * d ** (n + 1)
    minus = fld.neg(fld.one())
    sigmas = []
    for i in range(1, n + 1):
        sig = SparseMatrix(fld, size, size)
        for tup in all_tuples(d, n + 1):
            row_base = flat(tup, d) * m
            if i < n:
                for (s1, s2, s3), c in _sweedler_triples(h, tup[i]).items():
                    for a, ma in h.mult[tup[i - 1]][s1].items():
                        for u, su in h.antipode_column(s2).items():
                            for v, mv in h.mult[s3][tup[i + 1]].items():
                                coeff = fld.mul(minus,
                                                fld.mul(fld.mul(c, ma), fld.mul(su, mv)))
                                col_base = flat(tup[:i - 1] + (a, u, v) + tup[i + 2:], d) * m
                                for j in range(m):
                                    sig.add_entry(row_base + j, col_base + j, coeff)
            else:
                for (s1, s2), c in h.comult[tup[n]].items():
                    for a, ma in h.mult[tup[n - 1]][s1].items():
                        for u, su in h.antipode_column(s2).items():
                            coeff = fld.mul(minus, fld.mul(c, fld.mul(ma, su)))
                            col_base = flat(tup[:n - 1] + (a, u), d) * m
                            for j in range(m):
                                sig.add_entry(row_base + j, col_base + j, coeff)
        sigmas.append(sig)
    return ActionOperator(n, sigmas)


# -- the chain isomorphisms between the realizations ----------------------


def phi_psi(h: HopfAlgebra, mod: LeftModule, n: int):
    """Matrices of the mutually inverse chain maps between the realizations.

    phi: equivariant Hom(A^(n+1), M) -> reduced Hom(A^n, M), evaluating
    at nested products of leading Sweedler legs; psi goes back using the
    antipode to difference consecutive arguments.
    """
    d = h.dim
    m = mod.dim
    fld = h.field
    act_cols = _action_columns(mod)
    phi = SparseMatrix(fld, m * d ** n, m * d ** (n + 1))
    unit = h.unit_dict()

    for tup in all_tuples(d, n):
        row_base = flat(tup, d) * m
        legs = [iterated_comult(h, tup[r], n - 1 - r).coeffs for r in range(n)]
        for combo in itertools.product(*(legs[r].items() for r in range(n))):
            base_coeff = fld.one()
            for _t, c in combo:
                base_coeff = fld.mul(base_coeff, c)
            # slot s (1-based) is the product of leg s+1-r of argument r
            slot_vecs = []
            for s in range(1, n + 1):
                vec = None
                for r in range(s):
                    leg = {combo[r][0][s - 1 - r]: fld.one()}
                    vec = leg if vec is None else h.product(vec, leg)
                slot_vecs.append(vec)
            for head, hc in unit.items():
                for choice in itertools.product(*(v.items() for v in slot_vecs)):
                    coeff = fld.mul(base_coeff, hc)
                    arg = (head,) + tuple(k for k, _v in choice)
                    for _k, v in choice:
                        coeff = fld.mul(coeff, v)
                    if coeff == 0:
                        continue
                    col_base = flat(arg, d) * m
                    for j in range(m):
                        phi.add_entry(row_base + j, col_base + j, coeff)

    psi = SparseMatrix(fld, m * d ** (n + 1), m * d ** n)
    for tup in all_tuples(d, n + 1):
        row_base = flat(tup, d) * m
        pair_lists = [list(h.comult[tup[r]].items()) for r in range(n)]
        for combo in itertools.product(*pair_lists):
            base_coeff = fld.one()
            for _p, c in combo:
                base_coeff = fld.mul(base_coeff, c)
            head = combo[0][0][0] if n > 0 else tup[0]
            # slot k (1..n): S(second leg of a_{k-1}) * (first leg of a_k, or a_n bare)
            slot_vecs = []
            ok = True
            for k in range(1, n + 1):
                s_prev = combo[k - 1][0][1]
                nxt = combo[k][0][0] if k < n else tup[n]
                vec: dict = {}
                for u, su in h.antipode_column(s_prev).items():
                    for w, mw in h.mult[u][nxt].items():
                        vec[w] = fld.add(vec.get(w, fld.zero()), fld.mul(su, mw))
                vec = {k2: v for k2, v in vec.items() if v != 0}
                if not vec:
                    ok = False
                    break
                slot_vecs.append(vec)
            if not ok:
                continue
            for choice in itertools.product(*(v.items() for v in slot_vecs)):
                coeff = base_coeff
                arg = tuple(k2 for k2, _v in choice)
                for _k2, v in choice:
                    coeff = fld.mul(coeff, v)
                if coeff == 0:
                    continue
                col_base = flat(arg, d) * m
                for j2 in range(m):
                    for j, av in act_cols[head][j2].items():
                        psi.add_entry(row_base + j, col_base + j2,
                                      fld.mul(coeff, av))
    return phi, psi


# -- cohomology drivers ----------------------------------------------------


def _bar_complex_and_ops(h, mod, top, realization, budget, force_generic):
    if realization == "homogeneous":
        cpx = homogeneous_complex(h, mod, top, budget=budget,
                                  force_generic=force_generic)
        ops = [sigma_homogeneous(h, mod, n, space=cpx.spaces[n])
               for n in range(top + 1)]
    elif realization == "nonhomogeneous":
        cpx = nonhomogeneous_complex(h, mod, top, budget=budget)
        ops = [sigma_nonhomogeneous(h, mod, n) for n in range(top + 1)]
    else:
        raise ValueError(f"unknown realization {realization!r}")
    return cpx, ops


def classical_cohomology(h: HopfAlgebra, mod: LeftModule, top: int,
                         realization: str = "nonhomogeneous",
                         budget: int = DEFAULT_BUDGET,
                         force_generic: bool = False) -> CohomologyReport:
    """H^0..H^{top-1} from the chosen bar realization."""
    if realization == "homogeneous":
        cpx = homogeneous_complex(h, mod, top, budget=budget,
                                  force_generic=force_generic)
    else:
        cpx = nonhomogeneous_complex(h, mod, top, budget=budget)
    return CohomologyReport(cohomology_dims(cpx, top - 1), realization, kind="H")


def symmetric_cohomology(h: HopfAlgebra, mod: LeftModule, top: int,
                         realization: str = "homogeneous",
                         cross_check: bool = False,
                         budget: int = DEFAULT_BUDGET,
                         force_generic: bool = False) -> CohomologyReport:
    """SH^0..SH^{top-1}: cohomology of the fixed subcomplex.

    The homogeneous realization is the default (its action is a signed
    permutation); cross_check recomputes through the other realization
    and records agreement.
    """
    _require_cocommutative(h)
    validate_left_module(h, mod)
    cpx, ops = _bar_complex_and_ops(h, mod, top, realization, budget, force_generic)
    fixed = fixed_subcomplex(cpx, ops, through_degree=top - 1)
    dims = cohomology_dims(fixed, top - 1)
    report = CohomologyReport(dims, realization, kind="SH")
    report.routes[realization] = dims
    if cross_check:
        other = "nonhomogeneous" if realization == "homogeneous" else "homogeneous"
        cpx2, ops2 = _bar_complex_and_ops(h, mod, top, other, budget, force_generic)
        fixed2 = fixed_subcomplex(cpx2, ops2, through_degree=top - 1)
        dims2 = cohomology_dims(fixed2, top - 1)
        report.routes[other] = dims2
        report.checks.append(("realizations_agree", dims == dims2))
    return report
