"""Clusters of modules and the cluster direct-sum decomposition.

The characters of the composition factors of K (x) V are read off from the
joint generalized eigenspaces of the commuting family phi(e_i) over a
splitting field K: on the summand belonging to c, phi(e_i) has the single
eigenvalue c(e_i)^p.  The F-rational decomposition then collects the
conjugates of each character, using the annihilating polynomials
prod_c (t - c(e_j)^p), which have coefficients in F.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Sequence

from .characters import Character, Cluster
from .errors import InvariantViolation, PreconditionError
from .fields import FiniteField, field_degree_of, make_field
from .lie import Subalgebra, subnormal_chain
from .linalg import (Matrix, Poly, derivative, factor_degrees, intersect, min_poly, poly_gcd, roots_in_field, rref,
                     span, stable_kernel)
from .lmodule import LieModule, is_invariant, submodule


def conjugate(c: Character, e: int) -> Character:
    """c^alpha for alpha = (a -> a^q)^e."""
    return c.frob(e)


def character_field(c: Character) -> int:
    """[F[c] : F]."""
    return field_degree_of(c.elems(), c.base_q)


def is_simple(C: Cluster) -> bool:
    if not len(C):
        raise PreconditionError("empty cluster")
    return len(C.orbits()) == 1


def _indices(M: LieModule, indices):
    return tuple(range(M.algebra.dim)) if indices is None else tuple(indices)


def phi_family(M: LieModule, indices=None) -> list[Matrix]:
    return [M.phi_basis(i) for i in _indices(M, indices)]


def minimal_splitting_degree(phis: Sequence[Matrix]) -> int:
    """lcm of the irreducible-factor degrees of the phi minimal polynomials."""
    D = 1
    for P in phis:
        for d in factor_degrees(min_poly(P)):
            D = math.lcm(D, d)
    return D


def splitting_field(M: LieModule, indices=None, splitting_degree: int | None = None) -> FiniteField:
    F = M.field
    D = minimal_splitting_degree(phi_family(M, indices))
    if splitting_degree is not None:
        if splitting_degree != D:
            warnings.warn(
                f"splitting degree {splitting_degree} differs from the computed minimum {D}",
                stacklevel=2)
        D = math.lcm(D, splitting_degree)
    return make_field(F.p, F.k * D)


@dataclass
class JointSpace:
    eigenvalues: tuple[int, ...]
    basis: Matrix  # over K


def joint_spaces(phis: Sequence[Matrix], K: FiniteField) -> list[JointSpace]:
    """Nonzero joint generalized eigenspaces over K of commuting matrices over F."""
    if not phis:
        raise PreconditionError("empty family")
    F = phis[0].field
    d = phis[0].nrows
    emb = F.embedding(K)
    current = [((), Matrix.identity(K, d))]
    for P in phis:
        PK = P.map(emb, K)
        mus = sorted(set(roots_in_field(min_poly(P), K, emb)))
        nxt = []
        for mu in mus:
            G, _ = stable_kernel(PK - Matrix.scalar(K, d, mu))
            for vals, B in current:
                X = intersect(B, G)
                if X.ncols:
                    nxt.append((vals + (mu,), X))
        current = nxt
    total = sum(B.ncols for _, B in current)
    if total != d:
        raise InvariantViolation(f"joint eigenspaces span {total} of {d} dimensions; K too small?")
    return [JointSpace(vals, B) for vals, B in current]


def _cluster_from_spaces(spaces, K, q) -> Cluster:
    chars = [Character(tuple(K.pth_root(mu) for mu in s.eigenvalues), K, q) for s in spaces]
    return Cluster(chars, K, q)


def compute_cluster(M: LieModule, indices=None, splitting_degree: int | None = None) -> Cluster:
    """cl(M): characters (on the chosen basis elements) of the composition factors over K."""
    if M.dim == 0:
        raise PreconditionError("zero-dimensional module")
    K = splitting_field(M, indices, splitting_degree)
    spaces = joint_spaces(phi_family(M, indices), K)
    return _cluster_from_spaces(spaces, K, M.field.q)


def cluster_in_field(M: LieModule, K: FiniteField, indices=None) -> Cluster:
    """cl(M) computed in a given K, which must contain every eigenvalue."""
    if M.dim == 0:
        raise PreconditionError("zero-dimensional module")
    return _cluster_from_spaces(joint_spaces(phi_family(M, indices), K), K, M.field.q)


@dataclass
class Part:
    cluster: Cluster
    basis: Matrix  # columns, over F
    exponent: int

    @property
    def dim(self):
        return self.basis.ncols


@dataclass
class ClusterDecomposition:
    module: LieModule
    field: FiniteField  # the splitting field K
    parts: list[Part] = field(default_factory=list)
    indices: tuple[int, ...] = ()

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)


def annihilator_poly(C: Cluster, j: int, F: FiniteField) -> Poly:
    """prod over c in C of (t - c(e_j)^p), pulled back to F."""
    K = C.field
    f = Poly.from_roots(K, [K.pow(c.values[j], K.p) for c in C])
    back = F.restriction(K)
    try:
        return Poly(F, [back[a] for a in f.coeffs])
    except KeyError:
        raise InvariantViolation(f"annihilating polynomial for position {j} is not defined over {F}")


def _descend(spaces: Sequence[Matrix], F: FiniteField, K: FiniteField, d: int) -> Matrix:
    """F-points of a Galois-stable K-subspace, spanned by traces Tr(t^j u)."""
    D = K.k // F.k
    back = F.restriction(K)
    gens = [1]
    for _ in range(D - 1):
        gens.append(K.mul(gens[-1], K.gen))
    vecs = []
    for B in spaces:
        for u in B.columns():
            for g in gens:
                w = K.scale(g, u)
                tr = [0] * d
                cur = w
                for _ in range(D):
                    tr = [K.add(a, b) for a, b in zip(tr, cur)]
                    cur = [K.frob(a, F.k) for a in cur]
                vecs.append([back[a] for a in tr])
    return span(F, vecs, d)


def _decompose(M: LieModule, idx: tuple[int, ...], splitting_degree, invariance: Sequence[int]) -> ClusterDecomposition:
    if M.dim == 0:
        raise PreconditionError("zero-dimensional module")
    F = M.field
    d = M.dim
    phis = phi_family(M, idx)
    K = splitting_field(M, idx, splitting_degree)
    spaces = joint_spaces(phis, K)
    cl = _cluster_from_spaces(spaces, K, F.q)
    by_values = {s.eigenvalues: s for s in spaces}
    dec = ClusterDecomposition(M, K, [], idx)
    for C in cl.orbits():
        kspaces = [by_values[tuple(K.pow(v, K.p) for v in c.values)].basis for c in C]
        kdim = sum(B.ncols for B in kspaces)
        V = Matrix.identity(F, d)
        r = 1
        for pos, P in enumerate(phis):
            m = annihilator_poly(C, pos, F)
            G, rj = stable_kernel(P.eval_poly(m))
            V = intersect(V, G)
            r = max(r, rj)
        if V.ncols != kdim:
            # basis elements alone cannot separate C from a cluster with the
            # same value multisets on every basis element; descend from K
            V = _descend(kspaces, F, K, d)
        dec.parts.append(Part(C, V, r))
    _verify(dec, invariance)
    return dec


def _verify(dec: ClusterDecomposition, invariance: Sequence[int]):
    M = dec.module
    F = M.field
    d = M.dim
    vecs = [v for part in dec.parts for v in part.basis.columns()]
    if len(vecs) != d or len(rref(F, vecs)[0]) != d:
        raise InvariantViolation("cluster components do not form a direct sum of the whole module")
    K = dec.field
    for part in dec.parts:
        if not is_invariant(M, part.basis, invariance):
            raise InvariantViolation("cluster component is not invariant under the action")
        sub = submodule(M, part.basis)
        got = cluster_in_field(sub, K, dec.indices) if sub.dim else None
        if got is None or got.value_set() != part.cluster.value_set():
            raise InvariantViolation("cluster of a component differs from its label")


def cluster_decompose(M: LieModule, splitting_degree: int | None = None) -> ClusterDecomposition:
    """V = V_1 + ... + V_k with cl(V_i) the simple clusters of cl(V)."""
    idx = tuple(range(M.algebra.dim))
    return _decompose(M, idx, splitting_degree, idx)


def decompose_wrt(M: LieModule, S: Subalgebra, splitting_degree: int | None = None) -> ClusterDecomposition:
    """Cluster decomposition with respect to a subnormal subalgebra S.

    phi is formed for the basis elements of S with the p-map of L; the
    components are checked to be L-submodules.
    """
    if S.parent is not M.algebra:
        raise PreconditionError("subalgebra of a different algebra")
    if subnormal_chain(S) is None:
        raise PreconditionError(f"{S!r} is not subnormal")
    return _decompose(M, S.indices, splitting_degree, tuple(range(M.algebra.dim)))


@dataclass
class AmenabilityReport:
    amenable: bool
    min_polys: list[Poly]
    gcds: list[Poly]

    def __bool__(self):
        return self.amenable


def is_amenable(M: LieModule) -> AmenabilityReport:
    """Amenable iff every phi(e_i) has a squarefree minimal polynomial."""
    mps = [min_poly(P) for P in phi_family(M)]
    gcds = [poly_gcd(m, derivative(m)) for m in mps]
    return AmenabilityReport(all(g.degree == 0 for g in gcds), mps, gcds)
