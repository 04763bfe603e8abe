import random

import pytest

from clusterkit import LieAlgebra, LieModule, make_field
from clusterkit.clusters import compute_cluster
from clusterkit.errors import EnumerationBoundError
from clusterkit.fixtures import diagonal_pair, rotation_induced, rotation_module, two_dim_solvable
from clusterkit.oracle import (cluster_by_factors, composition_factors, hom_dim, is_irreducible,
                               minimal_submodule, reciprocity_dims, spin)

F3 = make_field(3)


def rotation():
    _, S = two_dim_solvable()
    return rotation_module(S)


def test_spin_examples():
    _, V = diagonal_pair("zero")
    assert spin(V, [1, 0]).columns() == [[1, 0]]
    assert spin(rotation(), [1, 0]).ncols == 2
    assert spin(V, [0, 0]).ncols == 0


def test_irreducibility():
    assert is_irreducible(rotation())
    _, V = diagonal_pair("zero")
    assert not is_irreducible(V)
    L = LieAlgebra.abelian(F3, 1)
    assert is_irreducible(LieModule.from_lists(L, [[[2]]]))


def test_composition_factors():
    _, V = diagonal_pair("zero")
    assert composition_factors(V).dims == [1, 1]
    assert composition_factors(rotation()).dims == [2]
    L = LieAlgebra.abelian(F3, 1)
    U = LieModule.from_lists(L, [[[0, 1], [0, 0]]])
    assert composition_factors(U).dims == [1, 1]


def test_minimal_submodule_prefers_smallest_echelon():
    _, V = diagonal_pair("zero")
    assert minimal_submodule(V).columns() == [[0, 1]]
    rng = random.Random(3)
    assert minimal_submodule(V, rng).ncols == 1


def test_cluster_by_factors_examples():
    assert cluster_by_factors(rotation()) == compute_cluster(rotation())
    _, V = diagonal_pair("nil")
    assert cluster_by_factors(V).value_set() == {(0, 1), (1, 1)}


def test_bound_is_enforced():
    ind = rotation_induced(1, 0).module  # 9^6 vectors over the splitting field
    with pytest.raises(EnumerationBoundError):
        cluster_by_factors(ind)
    with pytest.raises(EnumerationBoundError):
        is_irreducible(ind, bound=100)


def test_hom_dims_and_reciprocity():
    W = rotation()
    assert hom_dim(W, W) == 2
    ind = rotation_induced(1, 0)
    assert reciprocity_dims(ind.source, ind.subalgebra, ind.module, ind.module) == (2, 2)
    _, V = diagonal_pair("zero")
    assert hom_dim(V, V) == 2
