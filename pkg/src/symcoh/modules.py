"""Left modules and bimodules over a Hopf algebra, given by action matrices.

Conventions fixed for the whole package:
  * Hom_k(X, M) is flattened column-major by domain index:
    a matrix F lands at flat index  col * dim(M) + row.
  * L tensor M is flattened with the left factor most significant:
    (l, m) lands at  l * dim(M) + m.
Both match kron(A, B) with A indexing the most significant part.
"""

from __future__ import annotations

from .errors import InvalidBimodule, InvalidModule
from .hopf import HopfAlgebra
from .linalg import Matrix, Subspace, intersect_kernels


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product with the left factor most significant."""
    out = Matrix.zeros(a.field, a.rows * b.rows, a.cols * b.cols)
    for i1 in range(a.rows):
        for j1 in range(a.cols):
            v = a[i1, j1]
            if v == 0:
                continue
            for i2 in range(b.rows):
                for j2 in range(b.cols):
                    w = b[i2, j2]
                    if w != 0:
                        out._set(i1 * b.rows + i2, j1 * b.cols + j2, a.field.mul(v, w))
    return out


class LeftModule:
    """A left module: one action matrix per algebra basis element."""

    def __init__(self, dim: int, action: list):
        self.dim = dim
        self.action = action

    def act(self, i: int) -> Matrix:
        return self.action[i]

    def act_element(self, h: HopfAlgebra, vec: dict) -> Matrix:
        """Action matrix of the algebra element with coordinates vec."""
        out = Matrix.zeros(self.action[0].field, self.dim, self.dim)
        for i, c in vec.items():
            out = out + self.action[i].scale(c)
        return out

    def __repr__(self):
        return f"<LeftModule dim {self.dim}>"


class Bimodule:
    """Commuting left and right actions; right[i] is the matrix of m -> m . b_i."""

    def __init__(self, dim: int, left: list, right: list):
        self.dim = dim
        self.left = left
        self.right = right

    def left_module(self) -> LeftModule:
        return LeftModule(self.dim, self.left)

    def right_act_element(self, h: HopfAlgebra, vec: dict) -> Matrix:
        out = Matrix.zeros(self.right[0].field, self.dim, self.dim)
        for i, c in vec.items():
            out = out + self.right[i].scale(c)
        return out

    def __repr__(self):
        return f"<Bimodule dim {self.dim}>"


def _is_unital_representation(h: HopfAlgebra, mats, compose):
    """Check rho(1) = id and rho(b_i b_j) = compose(rho_i, rho_j)."""
    fld = h.field
    m = mats[0].rows
    unit_mat = Matrix.zeros(fld, m, m)
    for i, c in h.unit_dict().items():
        unit_mat = unit_mat + mats[i].scale(c)
    if unit_mat != Matrix.identity(fld, m):
        return False, "unit does not act as identity"
    for i in range(h.dim):
        for j in range(h.dim):
            expect = Matrix.zeros(fld, m, m)
            for k, c in h.mult[i][j].items():
                expect = expect + mats[k].scale(c)
            if compose(mats[i], mats[j]) != expect:
                return False, f"representation identity fails at ({h.basis_labels[i]}, {h.basis_labels[j]})"
    return True, None


def validate_left_module(h: HopfAlgebra, mod: LeftModule, raise_on_fail: bool = True) -> bool:
    if len(mod.action) != h.dim or any(a.rows != mod.dim or a.cols != mod.dim
                                       for a in mod.action):
        if raise_on_fail:
            raise InvalidModule("action matrix shapes do not match")
        return False
    ok, why = _is_unital_representation(h, mod.action, lambda a, b: a @ b)
    if not ok and raise_on_fail:
        raise InvalidModule(why)
    return ok


def validate_bimodule(h: HopfAlgebra, mod: Bimodule, raise_on_fail: bool = True) -> bool:
    shapes_ok = (len(mod.left) == h.dim == len(mod.right)
                 and all(a.rows == mod.dim == a.cols for a in mod.left + mod.right))
    if not shapes_ok:
        if raise_on_fail:
            raise InvalidBimodule("action matrix shapes do not match")
        return False
    ok, why = _is_unital_representation(h, mod.left, lambda a, b: a @ b)
    if ok:
        # right action is an anti-homomorphism: R(b_i b_j) = R_j R_i
        ok, why = _is_unital_representation(h, mod.right, lambda a, b: b @ a)
        why = why and f"right {why}"
    if ok:
        for i in range(h.dim):
            for j in range(h.dim):
                if mod.left[i] @ mod.right[j] != mod.right[j] @ mod.left[i]:
                    ok, why = False, "left and right actions do not commute"
                    break
            if not ok:
                break
    if not ok and raise_on_fail:
        raise InvalidBimodule(why)
    return ok


# -- constructions -------------------------------------------------------


def trivial_module(h: HopfAlgebra) -> LeftModule:
    """The base field with action through the counit."""
    return LeftModule(1, [Matrix.from_rows(h.field, [[h.counit[i]]]) for i in range(h.dim)])


def trivial_bimodule(h: HopfAlgebra) -> Bimodule:
    mats = [Matrix.from_rows(h.field, [[h.counit[i]]]) for i in range(h.dim)]
    return Bimodule(1, mats, [m.copy() for m in mats])


def regular_left_module(h: HopfAlgebra) -> LeftModule:
    mats = []
    for i in range(h.dim):
        m = Matrix.zeros(h.field, h.dim, h.dim)
        for j in range(h.dim):
            for k, c in h.mult[i][j].items():
                m._set(k, j, c)
        mats.append(m)
    return LeftModule(h.dim, mats)


def regular_bimodule(h: HopfAlgebra) -> Bimodule:
    """A acting on itself by left and right multiplication."""
    left = regular_left_module(h).action
    right = []
    for i in range(h.dim):
        m = Matrix.zeros(h.field, h.dim, h.dim)
        for j in range(h.dim):
            for k, c in h.mult[j][i].items():
                m._set(k, j, c)
        right.append(m)
    return Bimodule(h.dim, left, right)


def adjoint_module(h: HopfAlgebra, bim: Bimodule) -> LeftModule:
    """The left module on bim with a . m = a1 m S(a2)."""
    validate_bimodule(h, bim)
    fld = h.field
    mats = []
    for i in range(h.dim):
        acc = Matrix.zeros(fld, bim.dim, bim.dim)
        for (j, k), c in h.comult[i].items():
            right_of_sk = bim.right_act_element(h, h.antipode_column(k))
            acc = acc + (bim.left[j] @ right_of_sk).scale(c)
        mats.append(acc)
    return LeftModule(bim.dim, mats)


def invariants(h: HopfAlgebra, mod: LeftModule) -> Subspace:
    """The subspace where every b_i acts by its counit scalar."""
    fld = h.field
    eye = Matrix.identity(fld, mod.dim)
    mats = [mod.action[i] - eye.scale(h.counit[i]) for i in range(h.dim)]
    return intersect_kernels(mats)


def hom_module(h: HopfAlgebra, x: LeftModule, m: LeftModule) -> LeftModule:
    """Hom_k(X, M) with the action (a . F)(v) = a1 F(S(a2) v), flattened."""
    fld = h.field
    mats = []
    for i in range(h.dim):
        acc = Matrix.zeros(fld, m.dim * x.dim, m.dim * x.dim)
        for (j, k), c in h.comult[i].items():
            x_of_sk = x.act_element(h, h.antipode_column(k))
            acc = acc + kron(x_of_sk.transpose(), m.action[j]).scale(c)
        mats.append(acc)
    return LeftModule(m.dim * x.dim, mats)


def tensor_module(h: HopfAlgebra, l: LeftModule, m: LeftModule) -> LeftModule:
    """L tensor M with the diagonal action a . (l tensor m) = a1 l tensor a2 m."""
    fld = h.field
    mats = []
    for i in range(h.dim):
        acc = Matrix.zeros(fld, l.dim * m.dim, l.dim * m.dim)
        for (j, k), c in h.comult[i].items():
            acc = acc + kron(l.action[j], m.action[k]).scale(c)
        mats.append(acc)
    return LeftModule(l.dim * m.dim, mats)


def hom_equivariant(h: HopfAlgebra, x: LeftModule, m: LeftModule) -> Subspace:
    """Hom_A(X, M) inside flattened Hom_k(X, M): F rho^X_i = rho^M_i F for all i."""
    fld = h.field
    eye_m = Matrix.identity(fld, m.dim)
    eye_x = Matrix.identity(fld, x.dim)
    constraints = []
    for i in range(h.dim):
        constraints.append(kron(x.action[i].transpose(), eye_m) - kron(eye_x, m.action[i]))
    return intersect_kernels(constraints)


def hom_equivariant_bimodule(h: HopfAlgebra, x: Bimodule, m: Bimodule) -> Subspace:
    """Bimodule homomorphisms X -> M inside flattened Hom_k(X, M)."""
    fld = h.field
    eye_m = Matrix.identity(fld, m.dim)
    eye_x = Matrix.identity(fld, x.dim)
    constraints = []
    for i in range(h.dim):
        constraints.append(kron(x.left[i].transpose(), eye_m) - kron(eye_x, m.left[i]))
        constraints.append(kron(x.right[i].transpose(), eye_m) - kron(eye_x, m.right[i]))
    return intersect_kernels(constraints)
