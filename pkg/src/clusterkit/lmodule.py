"""Finite-dimensional modules over a restricted Lie algebra, as action matrices."""

from __future__ import annotations

from typing import Sequence

from .characters import Character
from .errors import PreconditionError
from .fields import FiniteField
from .lie import LieAlgebra, Report, Subalgebra
from .linalg import Matrix, rref


class LieModule:
    """Module V with ``action[i]`` the matrix of basis element e_i."""

    def __init__(self, algebra: LieAlgebra, action: Sequence[Matrix]):
        self.algebra = algebra
        self.action = tuple(action)
        if len(self.action) != algebra.dim:
            raise ValueError(f"need {algebra.dim} action matrices, got {len(self.action)}")
        dims = {R.shape for R in self.action}
        if len(dims) > 1 or any(r != c for r, c in dims):
            raise ValueError("action matrices must be square of one size")
        if any(R.field is not algebra.field for R in self.action):
            raise ValueError("action matrices must live over the algebra's field")
        self.dim = self.action[0].nrows if self.action else 0

    @classmethod
    def from_lists(cls, algebra: LieAlgebra, mats) -> "LieModule":
        """Build from nested lists of user scalars (ints mod p or digit lists)."""
        F = algebra.field
        return cls(algebra, [Matrix(F, [[F.coerce(a) for a in row] for row in m]) for m in mats])

    def __repr__(self):
        return f"LieModule(dim={self.dim}, over {self.algebra!r})"

    @property
    def field(self) -> FiniteField:
        return self.algebra.field

    def rho(self, x: Sequence[int]) -> Matrix:
        F = self.field
        acc = Matrix.zeros(F, self.dim, self.dim)
        for c, R in zip(x, self.action):
            if c:
                acc = acc + R.scale(c)
        return acc

    def phi(self, x: Sequence[int]) -> Matrix:
        """rho(x)^p - rho(x^[p])."""
        if len(x) != self.algebra.dim:
            raise ValueError(f"expected {self.algebra.dim} coordinates, got {len(x)}")
        return self.rho(x) ** self.algebra.p - self.rho(self.algebra.p_power(x))

    def phi_basis(self, i: int) -> Matrix:
        return self.action[i] ** self.algebra.p - self.rho(self.algebra.pmap[i])

    def extend(self, K: FiniteField) -> "LieModule":
        if K is self.field:
            return self
        return LieModule(extend_algebra(self.algebra, K), [R.extend(K) for R in self.action])


def extend_algebra(A: LieAlgebra, K: FiniteField) -> LieAlgebra:
    return A.extend(K)


def validate_module(M: LieModule) -> Report:
    """Check [R_i, R_j] = sum_k c_ij^k R_k for i < j."""
    A = M.algebra
    rep = Report()
    for i in range(A.dim):
        for j in range(i + 1, A.dim):
            lhs = M.action[i].commutator(M.action[j])
            rhs = M.rho(A.brackets[i][j])
            if lhs != rhs:
                rep.violations.append(f"[rho({A.names[i]}), rho({A.names[j]})] != rho([{A.names[i]},{A.names[j]}])")
    return rep


def phi(M: LieModule, x: Sequence[int]) -> Matrix:
    return M.phi(x)


def has_character(M: LieModule, base_q: int | None = None) -> Character | None:
    """The character c of M when every phi(e_i) is a scalar over M's own field."""
    if M.dim == 0:
        raise PreconditionError("zero-dimensional module")
    F = M.field
    values = []
    for i in range(M.algebra.dim):
        mu = M.phi_basis(i).is_scalar()
        if mu is None:
            return None
        values.append(F.pth_root(mu))
    return Character(tuple(values), F, base_q or F.q)


def kron(A: Matrix, B: Matrix) -> Matrix:
    F = A.field
    rows = []
    for ra in A.rows:
        for rb in B.rows:
            rows.append([F.mul(a, b) for a in ra for b in rb])
    return Matrix(F, rows, A.ncols * B.ncols)


def hom_module(V: LieModule, W: LieModule) -> LieModule:
    """Hom(V, W) with (x.f) = rho_W(x) f - f rho_V(x), matrix units row-major."""
    if V.algebra is not W.algebra:
        raise PreconditionError("Hom of modules over different algebras")
    F = V.field
    Iv = Matrix.identity(F, V.dim)
    Iw = Matrix.identity(F, W.dim)
    action = [kron(Rw, Iv) - kron(Iw, Rv.T) for Rv, Rw in zip(V.action, W.action)]
    return LieModule(V.algebra, action)


def restrict(V: LieModule, S: Subalgebra) -> LieModule:
    """V viewed as a module over the p-subalgebra S."""
    if S.parent is not V.algebra:
        raise PreconditionError("subalgebra of a different algebra")
    return LieModule(S.algebra, [V.action[i] for i in S.indices])


def direct_sum(*mods: LieModule) -> LieModule:
    A = mods[0].algebra
    F = A.field
    d = sum(M.dim for M in mods)
    action = []
    for i in range(A.dim):
        rows = []
        off = 0
        for M in mods:
            for r in M.action[i].rows:
                rows.append([0] * off + list(r) + [0] * (d - off - M.dim))
            off += M.dim
        action.append(Matrix(F, rows, d))
    return LieModule(A, action)


def change_basis(M: LieModule, P: Matrix) -> LieModule:
    """The module on the new basis given by the columns of invertible P."""
    Pinv = P.inverse()
    return LieModule(M.algebra, [Pinv @ R @ P for R in M.action])


def _pivot_rows(B: Matrix) -> list[int]:
    # canonical bases have an identity block in their pivot rows
    piv = []
    for col in B.columns():
        piv.append(next(i for i, a in enumerate(col) if a))
    return piv


def submodule(M: LieModule, B: Matrix) -> LieModule:
    """Action on an invariant subspace with canonical column basis B."""
    piv = _pivot_rows(B)
    action = []
    for R in M.action:
        RB = R @ B
        action.append(RB.submatrix(piv, range(B.ncols)))
    return LieModule(M.algebra, action)


def quotient(M: LieModule, B: Matrix) -> LieModule:
    """Action on M / span(B), coordinates on the non-pivot standard vectors."""
    F = M.field
    piv = _pivot_rows(B)
    rest = [i for i in range(M.dim) if i not in set(piv)]
    cols = B.columns()
    action = []
    for R in M.action:
        out_cols = []
        for j in rest:
            v = [r[j] for r in R.rows]
            for pr, u in zip(piv, cols):
                if v[pr]:
                    v = F.axpy(v, F.neg(v[pr]), u)
            out_cols.append([v[i] for i in rest])
        action.append(Matrix.from_columns(F, out_cols, len(rest)))
    return LieModule(M.algebra, action)


def is_invariant(M: LieModule, B: Matrix, indices: Sequence[int] | None = None) -> bool:
    """Whether span(B) is stable under the given basis elements (default: all)."""
    F = M.field
    idx = range(M.algebra.dim) if indices is None else indices
    base = B.columns()
    k = len(rref(F, base)[0]) if base else 0
    for i in idx:
        img = (M.action[i] @ B).columns()
        if img and len(rref(F, base + img)[0]) != k:
            return False
    return True
