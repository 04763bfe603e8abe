"""Amenability by the squarefree test, checked against brute force.

A module is amenable when each phi(e_i) has a squarefree minimal polynomial.
The 3x3 nilpotent Jordan block at p = 2 is not: phi(x) = rho(x)^2 is a
nonzero nilpotent.  For a handful of random commuting modules the cluster is
compared with the characters of an exhaustive composition series.
"""

import random

from clusterkit import LieAlgebra, LieModule, Matrix, compute_cluster, is_amenable, make_field
from clusterkit.fixtures import jordan_module
from clusterkit.errors import EnumerationBoundError
from clusterkit.oracle import cluster_by_factors, composition_factors


def random_commuting_module(F, rng, d):
    # polynomials in one random matrix commute with each other
    A = Matrix(F, [[rng.randrange(F.q) for _ in range(d)] for _ in range(d)], d)
    I = Matrix.identity(F, d)
    mats = [I.scale(rng.randrange(F.q)) + A.scale(rng.randrange(F.q)) + (A @ A).scale(rng.randrange(F.q))
            for _ in range(2)]
    L = LieAlgebra.abelian(F, 2, pmap=[[rng.randrange(F.q) for _ in range(2)] for _ in range(2)])
    return LieModule(L, mats)


def main():
    J = jordan_module()
    rep = is_amenable(J)
    print(f"Jordan block, p = 2: minimal polynomial of phi(x) {rep.min_polys[0].coeffs},"
          f" gcd with derivative {rep.gcds[0].coeffs}, amenable: {bool(rep)}")

    rng = random.Random(5)
    for p in (2, 3, 5):
        F = make_field(p)
        for _ in range(3):
            M = random_commuting_module(F, rng, rng.randrange(2, 5))
            C = compute_cluster(M)
            try:
                verdict = f"oracle agrees: {C == cluster_by_factors(M)}"
            except EnumerationBoundError:
                verdict = "too large for the oracle over the splitting field"
            dims = composition_factors(M).dims
            print(f"GF({p}) dim {M.dim}: cluster {C.to_json()} over GF({C.field.q}), {verdict},"
                  f" composition factor dims over GF({p}) {dims}, amenable: {bool(is_amenable(M))}")


if __name__ == "__main__":
    main()
