import pytest

from symcoh.errors import InvalidBimodule
from symcoh.fields import Field
from symcoh.hopf import cyclic_group_table, group_algebra, symmetric_group_table
from symcoh.linalg import Matrix
from symcoh.modules import (Bimodule, adjoint_module, hom_equivariant,
                            hom_module, invariants, regular_bimodule,
                            regular_left_module, tensor_module,
                            trivial_bimodule, trivial_module,
                            validate_bimodule, validate_left_module)

GF3 = Field.prime(3)
GF5 = Field.prime(5)
QQ = Field.rationals()


def kC(n, field):
    return group_algebra(n, cyclic_group_table(n), field)


def kS3(field):
    return group_algebra(6, symmetric_group_table(3), field)


@pytest.mark.parametrize("make,field", [
    (lambda f: kC(3, f), GF3),
    (lambda f: kC(3, f), QQ),
    (lambda f: kS3(f), GF5),
])
def test_trivial_module_is_all_ones(make, field):
    h = make(field)
    triv = trivial_module(h)
    assert triv.dim == 1
    assert all(triv.action[i][0, 0] == field.one() for i in range(h.dim))
    assert validate_left_module(h, triv)


def test_regular_bimodule_structure():
    h = kC(3, GF3)
    reg = regular_bimodule(h)
    assert validate_bimodule(h, reg)
    # left action of g1 on e is g1
    assert reg.left[1].column(0) == [0, 1, 0]


def test_regular_bimodule_s3_actions_commute():
    h = kS3(GF5)
    reg = regular_bimodule(h)
    assert validate_bimodule(h, reg)


def test_unit_acts_as_identity():
    h = kS3(QQ)
    reg = regular_left_module(h)
    acted = reg.act_element(h, h.unit_dict())
    assert acted == Matrix.identity(QQ, 6)


def test_adjoint_of_abelian_regular_is_identity_action():
    h = kC(3, GF3)
    adj = adjoint_module(h, regular_bimodule(h))
    for i in range(h.dim):
        assert adj.action[i] == Matrix.identity(GF3, 3)
    assert validate_left_module(h, adj)


def test_adjoint_of_s3_regular_is_conjugation():
    h = kS3(GF5)
    adj = adjoint_module(h, regular_bimodule(h))
    assert validate_left_module(h, adj)
    table = h.group_table
    inv = h.group_inverse
    for t in range(6):
        # conjugation permutation x -> t x t^{-1}
        for x in range(6):
            y = table[table[t][x]][inv[t]]
            col = adj.action[t].column(x)
            assert col[y] == GF5.one()
            assert sum(1 for v in col if v != 0) == 1


def test_adjoint_of_trivial_is_trivial():
    h = kS3(GF5)
    adj = adjoint_module(h, trivial_bimodule(h))
    assert adj.dim == 1
    for i in range(h.dim):
        assert adj.action[i][0, 0] == h.counit[i]


def test_invalid_bimodule_rejected():
    h = kC(2, GF3)
    reg = regular_bimodule(h)
    shear = Matrix.from_rows(GF3, [[1, 1], [0, 1]])  # squares to a non-identity
    broken = Bimodule(2, reg.left, [Matrix.identity(GF3, 2), shear])
    with pytest.raises(InvalidBimodule):
        adjoint_module(h, broken)


def test_invariants_trivial_module_is_full():
    h = kS3(GF5)
    assert invariants(h, trivial_module(h)).dim == 1


@pytest.mark.parametrize("field", [GF3, QQ])
def test_invariants_regular_kc3_is_norm_line(field):
    h = kC(3, field)
    inv = invariants(h, regular_left_module(h))
    assert inv.dim == 1
    # oracle: the fixed line is spanned by the sum of all group elements
    vec = inv.basis.column(0)
    assert vec[0] == vec[1] == vec[2] != 0


def test_hom_equivariant_from_regular_is_free():
    h = kC(3, GF3)
    m = regular_left_module(h)
    s = hom_equivariant(h, regular_left_module(h), m)
    assert s.dim == m.dim


def test_hom_equivariant_trivial_trivial():
    h = kS3(GF5)
    s = hom_equivariant(h, trivial_module(h), trivial_module(h))
    assert s.dim == 1


def test_hom_from_trivial_to_regular_kc3_gf3():
    h = kC(3, GF3)
    s = hom_equivariant(h, trivial_module(h), regular_left_module(h))
    assert s.dim == 1


def test_hom_vs_invariants_dimension():
    # Hom_A(X, M) and the invariants of Hom_k(X, M) have the same dimension
    cases = [
        (kC(3, GF3), "regular", "trivial"),
        (kC(3, QQ), "trivial", "regular"),
        (kS3(GF5), "regular", "regular"),
    ]
    for h, xs, ms in cases:
        x = regular_left_module(h) if xs == "regular" else trivial_module(h)
        m = regular_left_module(h) if ms == "regular" else trivial_module(h)
        hm = hom_module(h, x, m)
        assert validate_left_module(h, hm)
        assert hom_equivariant(h, x, m).dim == invariants(h, hm).dim


def test_tensor_hom_adjunction_dimensions():
    # dim Hom_A(L tensor M, N) = dim Hom_A(L, Hom_k(M, N))
    for h in (kC(3, GF3), kC(2, QQ), kS3(GF5)):
        l = regular_left_module(h)
        m = trivial_module(h)
        n = regular_left_module(h)
        lm = tensor_module(h, l, m)
        assert validate_left_module(h, lm)
        lhs = hom_equivariant(h, lm, n).dim
        rhs = hom_equivariant(h, l, hom_module(h, m, n)).dim
        assert lhs == rhs
    # a case with both factors of dimension > 1
    h = kC(3, GF3)
    l = regular_left_module(h)
    m = regular_left_module(h)
    n = trivial_module(h)
    lhs = hom_equivariant(h, tensor_module(h, l, m), n).dim
    rhs = hom_equivariant(h, l, hom_module(h, m, n)).dim
    assert lhs == rhs
