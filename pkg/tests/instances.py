"""Deterministic random algebras and modules for the property suites.

Every generator returns modules whose bracket identities hold by
construction; ``suite`` asserts it anyway.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from clusterkit import LieAlgebra, LieModule, Matrix, Subalgebra, make_field
from clusterkit.lie import validate_algebra
from clusterkit.linalg import Poly
from clusterkit.lmodule import change_basis, direct_sum, validate_module

MAX_DIM = 6


@dataclass
class Instance:
    name: str
    module: LieModule
    subnormal: Subalgebra | None = None

    @property
    def algebra(self):
        return self.module.algebra


def rand_elem(F, rng, nonzero=False):
    lo = 1 if nonzero else 0
    return rng.randrange(lo, F.q)


def rand_matrix(F, n, rng, density=1.0):
    return Matrix(F, [[rand_elem(F, rng) if rng.random() < density else 0 for _ in range(n)] for _ in range(n)], n)


def rand_invertible(F, n, rng):
    while True:
        P = rand_matrix(F, n, rng)
        if P.rank() == n:
            return P


def rand_poly(F, deg, rng):
    return Poly(F, [rand_elem(F, rng) for _ in range(deg + 1)])


def scalar_matrix(F, n, c):
    return Matrix.scalar(F, n, c)


def jordanish(F, n, rng):
    """Random matrix biased towards repeated eigenvalues and nontrivial Jordan blocks."""
    kind = rng.randrange(4)
    if kind == 0:
        return rand_matrix(F, n, rng)
    rows = [[0] * n for _ in range(n)]
    lam = rand_elem(F, rng)
    for i in range(n):
        rows[i][i] = lam if kind != 3 or rng.random() < 0.5 else rand_elem(F, rng)
        if i + 1 < n and kind in (1, 3):
            rows[i][i + 1] = rng.choice([0, 1])
    A = Matrix(F, rows, n)
    if kind == 2:
        # companion matrix of a random monic polynomial
        c = [rand_elem(F, rng) for _ in range(n)]
        rows = [[0] * n for _ in range(n)]
        for i in range(1, n):
            rows[i][i - 1] = 1
        for i in range(n):
            rows[i][n - 1] = F.neg(c[i])
        A = Matrix(F, rows, n)
    return A


# --- algebras ---

def abelian_algebra(F, n, rng):
    pmap = [[rand_elem(F, rng) if rng.random() < 0.6 else 0 for _ in range(n)] for _ in range(n)]
    return LieAlgebra.abelian(F, n, pmap=pmap)


def solvable_algebra(F, rng, central=False):
    """<x, y | [x, y] = y>, optionally with a central z."""
    if not central:
        return LieAlgebra.from_table(F, ["x", "y"], {(0, 1): [0, 1]}, [[1, 0], [0, 0]])
    a, b, c = (rand_elem(F, rng) for _ in range(3))
    return LieAlgebra.from_table(F, ["x", "y", "z"], {(0, 1): [0, 1, 0]},
                                 [[1, 0, a], [0, 0, b], [0, 0, c]])


def heisenberg_algebra(F, rng):
    a, b, c = (rand_elem(F, rng) for _ in range(3))
    return LieAlgebra.from_table(F, ["x", "y", "z"], {(0, 1): [0, 0, 1]},
                                 [[0, 0, a], [0, 0, b], [0, 0, c]])


def sl2_algebra(F):
    """Basis e, h, f with [e, f] = h, [h, e] = 2e, [h, f] = -2f."""
    two = F.coerce(2)
    return LieAlgebra.from_table(F, ["e", "h", "f"],
                                 {(0, 2): [0, 1, 0], (1, 0): [two, 0, 0], (1, 2): [0, 0, F.neg(two)]},
                                 [[0, 0, 0], [0, 1, 0], [0, 0, 0]])


# --- modules ---

def commuting_module(L, d, rng):
    """Abelian L acting by polynomials in one random matrix."""
    F = L.field
    A = jordanish(F, d, rng)
    return LieModule(L, [A.eval_poly(rand_poly(F, rng.randrange(1, 3), rng)) for _ in range(L.dim)])


def chain_module(L, rng, max_dim=MAX_DIM):
    """For [x, y] = y: blocks U_0..U_{m-1} with x = A + j on U_j and y shifting blocks.

    When m = p the last block may wrap around to U_0 by a polynomial in A.
    """
    F = L.field
    p = F.p
    k = rng.randrange(1, max(1, max_dim // 2) + 1)
    m_choices = [m for m in range(1, p + 1) if m * k <= max_dim]
    m = rng.choice(m_choices)
    A = jordanish(F, k, rng)
    B = A.eval_poly(rand_poly(F, rng.randrange(0, 2), rng)) if m == p else None
    d = m * k
    X = [[0] * d for _ in range(d)]
    Y = [[0] * d for _ in range(d)]
    for j in range(m):
        Aj = A + scalar_matrix(F, k, F.coerce(j))
        for a in range(k):
            for b in range(k):
                X[j * k + a][j * k + b] = Aj.rows[a][b]
        if j + 1 < m:
            for a in range(k):
                Y[(j + 1) * k + a][j * k + a] = 1
        elif B is not None:
            for a in range(k):
                for b in range(k):
                    Y[a][j * k + b] = B.rows[a][b]
    mats = [Matrix(F, X, d), Matrix(F, Y, d)]
    if L.dim == 3:
        mats.append(scalar_matrix(F, d, rand_elem(F, rng)))
    return LieModule(L, mats)


def heisenberg_module(L, rng):
    """z acts by zeta; x = zeta d/dt + a, y = t + b on F[t]/(t^p - c), or commuting when zeta = 0."""
    F = L.field
    p = F.p
    zeta = rand_elem(F, rng)
    if zeta == 0:
        d = rng.randrange(1, 5)
        A = jordanish(F, d, rng)
        return LieModule(L, [A.eval_poly(rand_poly(F, 2, rng)), A.eval_poly(rand_poly(F, 2, rng)),
                             Matrix.zeros(F, d, d)])
    c = rand_elem(F, rng)
    D = [[0] * p for _ in range(p)]
    T = [[0] * p for _ in range(p)]
    for j in range(1, p):
        D[j - 1][j] = F.mul(zeta, F.coerce(j))
    for j in range(p - 1):
        T[j + 1][j] = 1
    T[0][p - 1] = c
    a, b = rand_elem(F, rng), rand_elem(F, rng)
    X = Matrix(F, D, p) + scalar_matrix(F, p, a)
    Y = Matrix(F, T, p) + scalar_matrix(F, p, b)
    return LieModule(L, [X, Y, scalar_matrix(F, p, zeta)])


def sl2_module(L, rng):
    """Either a restricted simple module L(k) or a baby Verma module with f^p acting by xi."""
    F = L.field
    p = F.p
    if rng.random() < 0.5:
        k = rng.randrange(0, min(p, MAX_DIM))
        lam, n, xi = F.coerce(k), k + 1, None
    else:
        lam, n, xi = rand_elem(F, rng), p, rand_elem(F, rng)
    E = [[0] * n for _ in range(n)]
    H = [[0] * n for _ in range(n)]
    Fm = [[0] * n for _ in range(n)]
    for j in range(n):
        H[j][j] = F.sub(lam, F.coerce(2 * j))
        if j + 1 < n:
            Fm[j + 1][j] = 1
        if j > 0:
            E[j - 1][j] = F.mul(F.coerce(j), F.add(F.sub(lam, F.coerce(j)), 1))
    if xi is not None:
        Fm[0][n - 1] = xi
    return LieModule(L, [Matrix(F, E, n), Matrix(F, H, n), Matrix(F, Fm, n)])


# --- combinators ---

def combine(L, base_gen, rng):
    """A module built from one or two base modules by sums and basis changes."""
    M = base_gen()
    r = rng.random()
    if r < 0.3 and M.dim <= MAX_DIM // 2:
        N = base_gen()
        if M.dim + N.dim <= MAX_DIM:
            M = direct_sum(M, N)
    if rng.random() < 0.6:
        M = change_basis(M, rand_invertible(L.field, M.dim, rng))
    return M


FIELDS = [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2)]


def suite(seed: int = 2024, count: int = 220) -> list[Instance]:
    rng = random.Random(seed)
    out: list[Instance] = []
    n = 0
    while len(out) < count:
        p, k = FIELDS[n % len(FIELDS)]
        family = n // len(FIELDS) % 5
        n += 1
        F = make_field(p, k)
        if family == 0:
            L = abelian_algebra(F, rng.randrange(1, 4), rng)
            d = rng.randrange(1, 5)
            M = combine(L, lambda: commuting_module(L, d, rng), rng)
            S = Subalgebra(L, rng.sample(range(L.dim), rng.randrange(1, L.dim + 1)))
            out.append(Instance(f"abelian-{len(out)}", M, S))
        elif family == 1:
            L = solvable_algebra(F, rng, central=rng.random() < 0.3)
            M = combine(L, lambda: chain_module(L, rng, MAX_DIM // 2 if rng.random() < 0.5 else MAX_DIM), rng)
            out.append(Instance(f"solvable-{len(out)}", M, Subalgebra(L, [1])))
        elif family == 2:
            L = heisenberg_algebra(F, rng)
            M = combine(L, lambda: heisenberg_module(L, rng), rng)
            S = Subalgebra(L, rng.choice([[2], [1, 2], [0, 2]]))
            out.append(Instance(f"heisenberg-{len(out)}", M, S))
        elif family == 3 and p > 2 and k == 1:
            L = sl2_algebra(F)
            M = combine(L, lambda: sl2_module(L, rng), rng)
            out.append(Instance(f"sl2-{len(out)}", M, None))
        elif family == 4:
            # a module and its dual-like partner glued through Hom keeps dims small
            L = abelian_algebra(F, rng.randrange(1, 3), rng)
            M = combine(L, lambda: commuting_module(L, rng.randrange(1, 4), rng), rng)
            out.append(Instance(f"abelian-small-{len(out)}", M, Subalgebra(L, [0])))
    for inst in out:
        assert validate_algebra(inst.algebra), inst.name
        assert validate_module(inst.module), inst.name
        assert inst.module.dim <= MAX_DIM
    return out


def random_cobasis_values(c, count, rng):
    """Random values in F[c], as encodings in c's field."""
    from clusterkit.clusters import character_field
    K = c.field
    deg = character_field(c)
    s = 0
    while K.p ** s != c.base_q:
        s += 1
    sub = [a for a in range(K.q) if K.frob(a, s * deg) == a]
    return [rng.choice(sub) for _ in range(count)]


@dataclass
class Triple:
    name: str
    W: LieModule
    S: Subalgebra
    C: object  # Cluster of L restricting simply to S
    V: LieModule


def _amenable_simple(W):
    from clusterkit.clusters import compute_cluster, is_amenable
    return bool(is_amenable(W)) and len(compute_cluster(W).orbits()) == 1


def _reciprocity_setup(F, rng, kind):
    if kind == 0:
        L = solvable_algebra(F, rng)
        S = Subalgebra(L, [0])
    elif kind == 1:
        L = heisenberg_algebra(F, rng)
        S = Subalgebra(L, [1, 2])
    elif kind == 2:
        r, s = rand_elem(F, rng), rand_elem(F, rng)
        L = LieAlgebra.abelian(F, 2, pmap=[[r, 0], [s, rand_elem(F, rng)]])
        S = Subalgebra(L, [0])
    else:
        L = sl2_algebra(F)
        S = Subalgebra(L, [0, 1])
    return L, S


def reciprocity_triples(seed: int = 7, count: int = 24) -> list[Triple]:
    from clusterkit.clusters import compute_cluster
    from clusterkit.induction import extend_character, induce
    from clusterkit.oracle import spin
    from clusterkit.lmodule import submodule

    rng = random.Random(seed)
    fields = [(2, 1), (3, 1), (2, 2)]
    out = []
    n = 0
    while len(out) < count:
        p, k = fields[n % len(fields)]
        kind = n // len(fields) % 4
        n += 1
        F = make_field(p, k)
        if kind == 3 and (p == 2 or k > 1):
            continue
        L, S = _reciprocity_setup(F, rng, kind)
        A = S.algebra
        dmax = MAX_DIM // p ** len(S.cobasis)
        if dmax < 1:
            continue
        for _ in range(20):
            W = commuting_module(A, rng.randrange(1, dmax + 1), rng) if kind != 3 else _borel_module(A, rng)
            if _amenable_simple(W):
                break
        else:
            continue
        clW = compute_cluster(W)
        c = clW.chars[rng.randrange(len(clW))]
        C = extend_character(c, random_cobasis_values(c, len(S.cobasis), rng), S)
        ind = induce(W, S, C).module
        choice = len(out) % 3
        if choice == 0:
            V = ind
        elif choice == 1:
            v = [rand_elem(F, rng) for _ in range(ind.dim)]
            if not any(v):
                v[0] = 1
            V = submodule(ind, spin(ind, v))
        else:
            V = change_basis(ind, rand_invertible(F, ind.dim, rng))
        out.append(Triple(f"triple-{len(out)}-{F!r}-{kind}", W, S, C, V))
    return out


def _borel_module(A, rng):
    """Module for <e, h> with e nilpotent and h diagonal in steps of 2, or one-dimensional."""
    F = A.field
    lam = rand_elem(F, rng)
    if rng.random() < 0.5:
        return LieModule(A, [Matrix.zeros(F, 1, 1), Matrix(F, [[lam]], 1)])
    # h v0 = lam v0, h v1 = (lam + 2) v1, e v0 = v1
    E = Matrix(F, [[0, 0], [1, 0]], 2)
    H = Matrix(F, [[lam, 0], [0, F.add(lam, F.coerce(2))]], 2)
    return LieModule(A, [E, H])
