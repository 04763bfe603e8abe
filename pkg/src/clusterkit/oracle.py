"""Brute-force ground truth by exhaustive spinning.

Nothing here looks at eigenvalues: submodules come from closing vectors
under the action, characters from modules on which every phi(e_i) is
already a scalar.  Scans are limited to |field|^dim <= ``bound``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .characters import Cluster
from .clusters import splitting_field
from .errors import EnumerationBoundError, InvariantViolation, PreconditionError
from .lie import Subalgebra
from .linalg import Matrix, kernel, span
from .lmodule import LieModule, has_character, quotient, restrict, submodule

DEFAULT_BOUND = 1 << 14


def _check_bound(M: LieModule, bound: int):
    if M.field.q ** M.dim > bound:
        raise EnumerationBoundError(f"|F|^dim = {M.field.q}^{M.dim} exceeds the bound {bound}")


def spin(M: LieModule, v) -> Matrix:
    """Smallest submodule containing v, as a canonical column basis."""
    F = M.field
    if len(v) != M.dim:
        raise ValueError(f"vector of length {len(v)} for a module of dimension {M.dim}")
    basis: list[tuple[int, list[int]]] = []
    queue = [list(v)]
    mats = [R.rows for R in M.action]
    while queue:
        w = queue.pop()
        for pc, b in basis:
            if w[pc]:
                w = F.axpy(w, F.neg(w[pc]), b)
        pc = next((j for j, a in enumerate(w) if a), None)
        if pc is None:
            continue
        w = F.scale(F.inv(w[pc]), w)
        basis.append((pc, w))
        if len(basis) == M.dim:
            break
        for rows in mats:
            queue.append([F.dot(r, w) for r in rows])
    return span(F, [b for _, b in basis], M.dim)


def _normalized_vectors(F, d):
    """Nonzero vectors with leading entry 1, in lexicographic order."""
    for lead in reversed(range(d)):
        for tail in itertools.product(range(F.q), repeat=d - lead - 1):
            yield [0] * lead + [1] + list(tail)


def is_irreducible(M: LieModule, bound: int = DEFAULT_BOUND) -> bool:
    if M.dim == 0:
        raise PreconditionError("zero-dimensional module")
    _check_bound(M, bound)
    return all(spin(M, v).ncols == M.dim for v in _normalized_vectors(M.field, M.dim))


def minimal_submodule(M: LieModule, rng: random.Random | None = None) -> Matrix:
    """Minimal-dimension cyclic submodule; ties go to the smallest echelon basis.

    With ``rng`` the scan order is shuffled and the first minimum wins.
    """
    vecs = _normalized_vectors(M.field, M.dim)
    if rng is not None:
        vecs = list(vecs)
        rng.shuffle(vecs)
    best = None
    for v in vecs:
        U = spin(M, v)
        if best is None or U.ncols < best.ncols or (
                rng is None and U.ncols == best.ncols and U.T.rows < best.T.rows):
            best = U
        if best.ncols == 1:
            # in lex order the first line found is the smallest one
            break
    return best


@dataclass
class CompositionSeries:
    factors: list[LieModule]

    @property
    def dims(self) -> list[int]:
        return [X.dim for X in self.factors]


def composition_factors(M: LieModule, bound: int = DEFAULT_BOUND, rng: random.Random | None = None) -> CompositionSeries:
    _check_bound(M, bound)
    factors = []
    cur = M
    while cur.dim:
        U = minimal_submodule(cur, rng)
        factors.append(submodule(cur, U))
        cur = quotient(cur, U)
    return CompositionSeries(factors)


def cluster_by_factors(M: LieModule, bound: int = DEFAULT_BOUND, splitting_degree: int | None = None) -> Cluster:
    """Union of the characters of the composition factors of K (x) M."""
    K = splitting_field(M, None, splitting_degree)
    MK = M.extend(K)
    _check_bound(MK, bound)
    chars = []
    for X in composition_factors(MK, bound).factors:
        c = has_character(X, M.field.q)
        if c is None:
            raise InvariantViolation("composition factor over K without a character")
        chars.append(c)
    return Cluster(chars, K, M.field.q)


def hom_dim(V: LieModule, W: LieModule) -> int:
    """dim of {f : rho_W(x) f = f rho_V(x) for all basis x}, unknowns f[a][b] row-major."""
    if V.algebra is not W.algebra:
        raise PreconditionError("modules over different algebras")
    F = V.field
    m, n = W.dim, V.dim
    rows = []
    for Rv, Rw in zip(V.action, W.action):
        # entry (a, b) of Rw f - f Rv
        for a in range(m):
            for b in range(n):
                row = [0] * (m * n)
                for c in range(m):
                    if Rw.rows[a][c]:
                        row[c * n + b] = F.add(row[c * n + b], Rw.rows[a][c])
                for c in range(n):
                    if Rv.rows[c][b]:
                        row[a * n + c] = F.sub(row[a * n + c], Rv.rows[c][b])
                rows.append(row)
    if not rows:
        return m * n
    return kernel(Matrix(F, rows, m * n)).ncols


def reciprocity_dims(W: LieModule, S: Subalgebra, induced: LieModule, V: LieModule) -> tuple[int, int]:
    """(dim Hom_L(ind W, V), dim Hom_S(W, res V))."""
    return hom_dim(induced, V), hom_dim(W, restrict(V, S))
