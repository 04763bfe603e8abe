"""Induce a rotation module from <x> up to <x, y | [x, y] = y> over GF(3).

W is the 2-dim module x b1 = b2, x b2 = -b1.  Its cluster is {i, -i} in GF(9).
Extending the character by c(y) = alpha + i*beta gives a cluster of L that
restricts simply to S, and the induced module has dimension 3 * 2 = 6.
"""

import itertools

from clusterkit import compute_cluster, hom_module, is_amenable
from clusterkit.fixtures import rotation_induced, rotation_module, two_dim_solvable
from clusterkit.lmodule import restrict
from clusterkit.oracle import hom_dim


def show(M, names):
    for name, R in zip(names, M.action):
        print(f"  {name}:")
        for row in R.rows:
            print("    " + " ".join(str(a) for a in row))


def main():
    L, S = two_dim_solvable()
    W = rotation_module(S)
    C = compute_cluster(W)
    K = C.field
    print(f"cluster of W over {K!r} (modulus, lowest degree first: {K.modulus}):")
    for c in C:
        print("  x ->", c.to_digits()[0])
    print("W amenable:", bool(is_amenable(W)))
    print("cluster of Hom(W, W):", compute_cluster(hom_module(W, W)).to_json())

    for alpha, beta in itertools.product(range(3), repeat=2):
        ind = rotation_induced(alpha, beta)
        V = ind.module
        print(f"\nalpha={alpha} beta={beta}: basis y^r (x) b_j ordered (r, j) = {ind.labels}")
        show(V, L.names)
        left = hom_dim(V, V)
        right = hom_dim(ind.source, restrict(V, ind.subalgebra))
        print(f"  dim Hom_L(ind W, ind W) = {left}, dim Hom_S(W, res ind W) = {right}")


if __name__ == "__main__":
    main()
