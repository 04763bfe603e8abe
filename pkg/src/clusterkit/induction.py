"""C-induced modules ind_S^L(W, C).

The induced module has the F-basis e(r) (x) b^j where e(r) runs over ordered
monomials in the cobasis with exponents below p and b^j over the given basis
of W.  Over K, b^j splits as the sum of its components b^j_c in the
c-components of W, and each component lives in u(L, c) (x)_{u(S, c)} W_c.
The action of a basis element of L on e(r) (x) w is found by commuting it
to the left of e(r) and reducing p-th powers with e^p = e^[p] + c(e)^p.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .characters import Character, Cluster
from .clusters import character_field, cluster_in_field, is_amenable, phi_family
from .errors import InvariantViolation, PreconditionError
from .fields import FieldElem, FiniteField
from .lie import Subalgebra
from .linalg import Matrix, stable_kernel, intersect
from .lmodule import LieModule, validate_module


def restricts_simply(C: Cluster, S: Subalgebra | Sequence[int]) -> bool:
    """Distinct members of C have distinct restrictions to S."""
    idx = S.indices if isinstance(S, Subalgebra) else tuple(S)
    seen = set()
    for c in C:
        r = tuple(c.values[i] for i in idx)
        if r in seen:
            return False
        seen.add(r)
    return True


def extend_character(c_S: Character, cobasis_values: Sequence, S: Subalgebra) -> Cluster:
    """Orbit of the character of L that agrees with c_S on S and takes the given cobasis values.

    Values are ints encoded in ``c_S.field`` or :class:`FieldElem`; each must lie in F[c_S].
    """
    K = c_S.field
    cob = S.cobasis
    if len(cobasis_values) != len(cob):
        raise PreconditionError(f"need {len(cob)} cobasis values, got {len(cobasis_values)}")
    vals = []
    for v in cobasis_values:
        if isinstance(v, FieldElem):
            if v.field is not K:
                raise PreconditionError("cobasis value from another field")
            v = v.value
        vals.append(v)
    deg = character_field(c_S)
    s = 0
    while K.p ** s != c_S.base_q:
        s += 1
    for v in vals:
        if K.frob(v, s * deg) != v:
            raise PreconditionError(f"cobasis value {list(K.digits(v))} is not in F[c]")
    full = [0] * S.parent.dim
    for i, v in zip(S.indices, c_S.values):
        full[i] = v
    for i, v in zip(cob, vals):
        full[i] = v
    c = Character(tuple(full), K, c_S.base_q)
    return Cluster(c.orbit(), K, c_S.base_q)


class _Straightener:
    """Action of L on u(L, c) (x) W in the PBW basis, for one fixed c.

    ``act(i, r)`` returns {r': T} meaning e_i . (e(r) (x) w) = sum e(r') (x) T w.
    """

    def __init__(self, L, S_idx, rho_S, reductions, G: FiniteField, k: int):
        self.L = L
        self.G = G
        self.k = k
        self.p = L.p
        self.cob = [i for i in range(L.dim) if i not in set(S_idx)]
        self.cob_pos = {i: j for j, i in enumerate(self.cob)}
        self.rho = dict(zip(S_idx, rho_S))
        self.red = reductions  # c(f_j)^p per cobasis position, in G
        self.emb = L.field.embedding(G)
        self.I = Matrix.identity(G, k)
        self.memo: dict = {}

    def _add(self, acc, r, T):
        if r in acc:
            acc[r] = acc[r] + T
        else:
            acc[r] = T

    def act_vec(self, x, r):
        out: dict = {}
        for i, a in enumerate(x):
            if a:
                a = self.emb[a]
                for rr, T in self.act(i, r).items():
                    self._add(out, rr, T.scale(a))
        return out

    def apply(self, i, D):
        """e_i applied to an element {r: T}."""
        out: dict = {}
        for r, T in D.items():
            for rr, U in self.act(i, r).items():
                self._add(out, rr, U @ T)
        return out

    def act(self, i, r):
        key = (i, r)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        res = self._act(i, r)
        self.memo[key] = res
        return res

    def _act(self, i, r):
        p = self.p
        nz = [j for j, e in enumerate(r) if e]
        if not nz:
            if i in self.rho:
                return {r: self.rho[i]}
            new = list(r)
            new[self.cob_pos[i]] = 1
            return {tuple(new): self.I}
        j0 = nz[0]
        jp = self.cob_pos.get(i)
        if jp is not None and jp <= j0:
            new = list(r)
            new[jp] += 1
            if new[jp] < p:
                return {tuple(new): self.I}
            # e_j^p = e_j^[p] + c(e_j)^p
            new[jp] = 0
            rest = tuple(new)
            out = self.act_vec(self.L.pmap[i], rest)
            self._add(out, rest, self.I.scale(self.red[jp]))
            return out
        f = self.cob[j0]
        lower = list(r)
        lower[j0] -= 1
        lower = tuple(lower)
        # x f e(r') = f (x e(r')) + [x, f] e(r')
        out = self.apply(f, self.act(i, lower))
        for rr, T in self.act_vec(self.L.bracket(self.L.unit(i), self.L.unit(f)), lower).items():
            self._add(out, rr, T)
        return out


@dataclass
class InducedModule:
    module: LieModule
    labels: list[tuple[tuple[int, ...], int]]
    cluster: Cluster
    subalgebra: Subalgebra
    source: LieModule

    @property
    def dim(self):
        return self.module.dim


def pbw_exponents(p: int, m: int) -> list[tuple[int, ...]]:
    return list(itertools.product(range(p), repeat=m))


def _check_preconditions(W: LieModule, S: Subalgebra, C: Cluster):
    if not S.is_p_closed():
        raise PreconditionError(f"{S!r} is not a p-subalgebra")
    if W.algebra is not S.algebra:
        raise PreconditionError("W is not a module over the given subalgebra")
    if not validate_module(W):
        raise PreconditionError("W fails the bracket identities")
    if not len(C):
        raise PreconditionError("empty cluster")
    if not C.is_closed():
        raise PreconditionError("C is not closed under conjugation")
    if not is_amenable(W):
        raise PreconditionError("W is not amenable")
    if not restricts_simply(C, S):
        raise PreconditionError("C does not restrict simply to S")


def _components(W: LieModule, S: Subalgebra, C: Cluster) -> list[Matrix]:
    """W_c over K for each c in C (in C's order); checks C|S = cl(W)."""
    K = C.field
    phis = phi_family(W)
    emb = W.field.embedding(K)
    k = W.dim
    comps = []
    for c in C:
        B = Matrix.identity(K, k)
        for P, s in zip(phis, S.indices):
            mu = K.pow(c.values[s], K.p)
            G, _ = stable_kernel(P.map(emb, K) - Matrix.scalar(K, k, mu))
            B = intersect(B, G)
        if B.ncols == 0:
            raise PreconditionError(f"{c!r} restricted to S is not in cl(W)")
        comps.append(B)
    if sum(B.ncols for B in comps) != k:
        raise PreconditionError("restriction of C to S does not exhaust cl(W)")
    return comps


def _assemble(straighteners, projections, L, S, k, G):
    """Action matrices on the labelled basis, summed over the components."""
    m = L.dim - S.dim
    exps = pbw_exponents(L.p, m)
    pos = {r: n for n, r in enumerate(exps)}
    N = len(exps) * k
    mats = []
    for i in range(L.dim):
        rows = [[0] * N for _ in range(N)]
        for r in exps:
            col0 = pos[r] * k
            for st, P in zip(straighteners, projections):
                for rr, T in st.act(i, r).items():
                    TP = T @ P if P is not None else T
                    row0 = pos[rr] * k
                    for a in range(k):
                        ra = rows[row0 + a]
                        for b in range(k):
                            v = TP.rows[a][b]
                            if v:
                                ra[col0 + b] = G.add(ra[col0 + b], v)
        mats.append(rows)
    labels = [(r, j) for r in exps for j in range(k)]
    return mats, labels


def induce(W: LieModule, S: Subalgebra, C: Cluster, method: str = "general", check: bool = True) -> InducedModule:
    """ind_S^L(W, C) on the basis e(r) (x) b^j, ordered by r then j.

    ``method="rational"`` skips the character decomposition of W; it needs
    every cobasis value of C to lie in F.
    """
    _check_preconditions(W, S, C)
    L = S.parent
    F = L.field
    K = C.field
    k = W.dim
    cob = S.cobasis
    comps = _components(W, S, C)
    if method == "general":
        emb = F.embedding(K)
        B = comps[0]
        for X in comps[1:]:
            B = B.hstack(X)
        Binv = B.inverse()
        sts, projs = [], []
        off = 0
        for c, X in zip(C, comps):
            sel = Matrix(K, [[1 if a == b and off <= a < off + X.ncols else 0 for b in range(k)] for a in range(k)], k)
            projs.append(B @ sel @ Binv)
            off += X.ncols
            red = [K.pow(c.values[i], K.p) for i in cob]
            rho = [R.map(emb, K) for R in W.action]
            sts.append(_Straightener(L, S.indices, rho, red, K, k))
        mats, labels = _assemble(sts, projs, L, S, k, K)
        back = F.restriction(K)
        try:
            fmats = [[[back[a] for a in row] for row in M] for M in mats]
        except KeyError:
            raise InvariantViolation("induced action has an entry outside the base field")
    elif method == "rational":
        back = F.restriction(K)
        c0 = C.chars[0]
        try:
            red = [F.pow(back[c0.values[i]], F.p) for i in cob]
        except KeyError:
            raise PreconditionError("rational shortcut needs cobasis values in the base field")
        st = _Straightener(L, S.indices, list(W.action), red, F, k)
        fmats, labels = _assemble([st], [None], L, S, k, F)
    else:
        raise ValueError(f"unknown method {method!r}")
    V = LieModule(L, [Matrix(F, M, len(labels)) for M in fmats])
    if check:
        if not validate_module(V):
            raise InvariantViolation("induced module fails the bracket identities")
        got = cluster_in_field(V, K)
        if got.value_set() != C.value_set():
            raise InvariantViolation("cluster of the induced module differs from C")
    return InducedModule(V, labels, C, S, W)
