"""Restricted Lie algebras given by structure constants and basis p-powers."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .fields import FiniteField
from .linalg import Matrix, in_span, kernel, span


@dataclass
class Report:
    """Outcome of a validation: truthy iff no violations were found."""

    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


class LieAlgebra:
    """A restricted Lie algebra (L, [p]) on a fixed basis e_1..e_n.

    ``brackets[i][j]`` is the coordinate vector of [e_i, e_j] and ``pmap[i]``
    the coordinate vector of e_i^[p].  Indices are 0-based in code.
    """

    def __init__(self, field: FiniteField, names: Sequence[str], brackets, pmap):
        self.field = field
        self.names = tuple(names)
        self.dim = n = len(self.names)
        self.brackets = tuple(tuple(tuple(v) for v in row) for row in brackets)
        self.pmap = tuple(tuple(v) for v in pmap)
        if len(self.brackets) != n or any(len(r) != n or any(len(v) != n for v in r) for r in self.brackets):
            raise ValueError("structure constants must form an n x n array of n-vectors")
        if len(self.pmap) != n or any(len(v) != n for v in self.pmap):
            raise ValueError("p-map needs one n-vector per basis element")
        # ambient data when built from a p-subalgebra
        self.parent: LieAlgebra | None = None
        self.parent_indices: tuple[int, ...] | None = None

    @classmethod
    def from_table(cls, field, names, table: dict, pmap):
        """Build from {(i, j): vector} for i < j; the rest follows by antisymmetry."""
        n = len(names)
        br = [[[0] * n for _ in range(n)] for _ in range(n)]
        for (i, j), vec in table.items():
            vec = [field.coerce(v) for v in vec]
            br[i][j] = list(vec)
            br[j][i] = [field.neg(v) for v in vec]
        return cls(field, names, br, [[field.coerce(v) for v in row] for row in pmap])

    @classmethod
    def abelian(cls, field, n, pmap=None, names=None):
        names = names or [f"a{i + 1}" for i in range(n)]
        pmap = [[field.coerce(v) for v in row] for row in pmap] if pmap else [[0] * n for _ in range(n)]
        return cls(field, names, [[[0] * n for _ in range(n)] for _ in range(n)], pmap)

    def __repr__(self):
        return f"LieAlgebra({self.field!r}, {list(self.names)})"

    @property
    def p(self):
        return self.field.p

    def unit(self, i: int) -> list[int]:
        v = [0] * self.dim
        v[i] = 1
        return v

    def bracket(self, u: Sequence[int], v: Sequence[int]) -> list[int]:
        F = self.field
        out = [0] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                c = F.mul(a, b)
                out = F.axpy(out, c, list(self.brackets[i][j]))
        return out

    @cached_property
    def is_abelian(self) -> bool:
        return not any(any(v) for row in self.brackets for v in row)

    @cached_property
    def _ad_basis(self) -> list[Matrix]:
        n = self.dim
        return [Matrix.from_columns(self.field, [self.brackets[i][j] for j in range(n)], n) for i in range(n)]

    def ad_matrix(self, v: Sequence[int]) -> Matrix:
        """Matrix of w -> [v, w]; column j holds [v, e_j]."""
        if len(v) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(v)}")
        F = self.field
        n = self.dim
        acc = Matrix.zeros(F, n, n)
        for i, a in enumerate(v):
            if a:
                acc = acc + self._ad_basis[i].scale(a)
        return acc

    def p_power(self, v: Sequence[int]) -> list[int]:
        """v^[p] from the basis values by Jacobson's formula.

        For a sum a + b the correction term is sum_i s_i(a, b) where i*s_i is
        the coefficient of t^(i-1) in ad(ta + b)^(p-1)(a).
        """
        if len(v) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(v)}")
        F = self.field
        p = self.p
        acc = None
        result = [0] * self.dim
        for i, c in enumerate(v):
            if not c:
                continue
            term = F.scale(c, self.unit(i))
            result = F.axpy(result, F.pow(c, p), list(self.pmap[i]))
            if acc is not None and not self.is_abelian:
                result = [F.add(x, y) for x, y in zip(result, self._jacobson_terms(acc, term))]
                acc = [F.add(x, y) for x, y in zip(acc, term)]
            else:
                acc = term
        return result

    def _jacobson_terms(self, a, b) -> list[int]:
        F = self.field
        p = self.p
        n = self.dim
        ad_a, ad_b = self.ad_matrix(a), self.ad_matrix(b)
        # polynomial in t with vector coefficients
        poly = [list(a)]
        for _ in range(p - 1):
            nxt = [[0] * n for _ in range(len(poly) + 1)]
            for d, vec in enumerate(poly):
                nxt[d] = [F.add(x, y) for x, y in zip(nxt[d], ad_b @ vec)]
                nxt[d + 1] = [F.add(x, y) for x, y in zip(nxt[d + 1], ad_a @ vec)]
            poly = nxt
        total = [0] * n
        for i in range(1, p):
            coef = poly[i - 1] if i - 1 < len(poly) else [0] * n
            total = F.axpy(total, F.inv(i % p), coef)
        return total

    def center(self) -> Matrix:
        n = self.dim
        rows = []
        for j in range(n):
            rows.extend(self.ad_matrix(self.unit(j)).rows)
        # x central iff [e_j, x] = 0 for all j
        return kernel(Matrix(self.field, rows, n))

    def extend(self, K: FiniteField) -> "LieAlgebra":
        """Scalar extension to K, cached so separately extended modules still match."""
        if K is self.field:
            return self
        cache = self.__dict__.setdefault("_extensions", {})
        if K.k not in cache:
            emb = self.field.embedding(K)
            br = [[[emb[a] for a in v] for v in row] for row in self.brackets]
            pm = [[emb[a] for a in v] for v in self.pmap]
            cache[K.k] = LieAlgebra(K, self.names, br, pm)
        return cache[K.k]


def ad_matrix(A: LieAlgebra, v: Sequence[int]) -> Matrix:
    return A.ad_matrix(v)


def p_power(A: LieAlgebra, v: Sequence[int]) -> list[int]:
    return A.p_power(v)


def validate_algebra(A: LieAlgebra) -> Report:
    """Check antisymmetry, Jacobi and ad(e_i^[p]) = (ad e_i)^p on the basis."""
    F = A.field
    n = A.dim
    rep = Report()
    for i in range(n):
        if any(A.brackets[i][i]):
            rep.violations.append(f"[{A.names[i]},{A.names[i]}] != 0")
        for j in range(i + 1, n):
            if any(F.add(a, b) for a, b in zip(A.brackets[i][j], A.brackets[j][i])):
                rep.violations.append(f"antisymmetry fails for ({A.names[i]},{A.names[j]})")
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                ei, ej, ek = A.unit(i), A.unit(j), A.unit(k)
                t1 = A.bracket(ei, A.bracket(ej, ek))
                t2 = A.bracket(ej, A.bracket(ek, ei))
                t3 = A.bracket(ek, A.bracket(ei, ej))
                if any(F.add(F.add(a, b), c) for a, b, c in zip(t1, t2, t3)):
                    rep.violations.append(
                        f"Jacobi identity fails for ({A.names[i]},{A.names[j]},{A.names[k]})")
    for i in range(n):
        lhs = A.ad_matrix(list(A.pmap[i]))
        rhs = A.ad_matrix(A.unit(i)) ** A.p
        if lhs != rhs:
            rep.violations.append(f"ad({A.names[i]}^[p]) != (ad {A.names[i]})^p")
    return rep


class Subalgebra:
    """Subalgebra spanned by a subset of the ambient basis."""

    def __init__(self, parent: LieAlgebra, indices: Sequence[int]):
        idx = tuple(sorted(set(indices)))
        if any(i < 0 or i >= parent.dim for i in idx):
            raise ValueError(f"basis index out of range in {list(indices)}")
        self.parent = parent
        self.indices = idx
        inside = set(idx)
        for a in idx:
            for b in idx:
                if any(parent.brackets[a][b][k] for k in range(parent.dim) if k not in inside):
                    raise ValueError(
                        f"not bracket-closed: [{parent.names[a]},{parent.names[b]}] leaves the span")

    def __repr__(self):
        return f"Subalgebra<{', '.join(self.parent.names[i] for i in self.indices)}>"

    @property
    def dim(self):
        return len(self.indices)

    @property
    def cobasis(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.parent.dim) if i not in self.indices)

    def basis_matrix(self) -> Matrix:
        P = self.parent
        return Matrix.from_columns(P.field, [P.unit(i) for i in self.indices], P.dim)

    def is_p_closed(self) -> bool:
        inside = set(self.indices)
        return all(not self.parent.pmap[i][k] for i in self.indices
                   for k in range(self.parent.dim) if k not in inside)

    @cached_property
    def algebra(self) -> LieAlgebra:
        """S as a restricted Lie algebra in its own right (needs p-closure)."""
        if not self.is_p_closed():
            raise ValueError(f"{self!r} is not closed under the p-map")
        P = self.parent
        idx = self.indices
        br = [[[P.brackets[a][b][k] for k in idx] for b in idx] for a in idx]
        pm = [[P.pmap[a][k] for k in idx] for a in idx]
        S = LieAlgebra(P.field, [P.names[i] for i in idx], br, pm)
        S.parent, S.parent_indices = P, idx
        return S


def _as_subspace(S) -> Matrix:
    return S.basis_matrix() if isinstance(S, Subalgebra) else S


def is_subalgebra(A: LieAlgebra, U: Matrix) -> bool:
    cols = U.columns()
    return all(in_span(U, A.bracket(u, v)) for u in cols for v in cols)


def idealizer(S, algebra: LieAlgebra | None = None) -> Matrix:
    """{x in L : [x, S] in S} as a column basis.

    ``S`` is a :class:`Subalgebra` or a column-basis matrix (then pass the algebra).
    """
    A = S.parent if isinstance(S, Subalgebra) else algebra
    U = _as_subspace(S)
    if not is_subalgebra(A, U):
        raise ValueError("idealizer of a subspace that is not bracket-closed")
    F = A.field
    n = A.dim
    if U.ncols == 0:
        return Matrix.identity(F, n)
    ann = kernel(U.T)  # columns q with q . u = 0
    if ann.ncols == 0:
        return Matrix.identity(F, n)
    Q = ann.T
    rows = []
    for u in U.columns():
        rows.extend((Q @ A.ad_matrix(u)).rows)
    return kernel(Matrix(F, rows, n))


def subnormal_chain(S, algebra: LieAlgebra | None = None) -> list[Matrix] | None:
    """Iterated idealizers S = S_0 < S_1 < ... reaching L, or None if they stall."""
    A = S.parent if isinstance(S, Subalgebra) else algebra
    cur = span(A.field, _as_subspace(S).columns(), A.dim)
    chain = [cur]
    while cur.ncols < A.dim:
        nxt = idealizer(cur, A)
        if nxt.ncols == cur.ncols:
            return None
        chain.append(nxt)
        cur = nxt
    return chain
