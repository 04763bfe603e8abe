"""The cluster decomposition depends on the p-map, not only on the algebra.

L = <a1, a2> is abelian and acts on <v1, v2> by a_i v_i = v_i, a_i v_j = 0.
With both p-powers zero the module splits into two lines with different
characters.  With a1^[p] = a1 and a2^[p] = -a1 it has the single character
(0, 1).  Leaving a1^[p] = 0 gives two characters (0, 1) and (1, 1) instead.
"""

from clusterkit import cluster_decompose, compute_cluster
from clusterkit.fixtures import P_MAPS, diagonal_pair


def main():
    for name in ("zero", "toral", "nil"):
        L, V = diagonal_pair(name)
        print(f"p-map {name}: a1^[p] = {list(L.pmap[0])}, a2^[p] = {list(L.pmap[1])} (given as {P_MAPS[name]})")
        print("  cluster:", sorted(compute_cluster(V).value_set()))
        for part in cluster_decompose(V):
            print(f"  part of dim {part.dim}: characters {sorted(part.cluster.value_set())},"
                  f" basis columns {part.basis.columns()}")


if __name__ == "__main__":
    main()
