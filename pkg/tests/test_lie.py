import pytest

from clusterkit import LieAlgebra, Subalgebra, make_field
from clusterkit.fixtures import two_dim_solvable
from clusterkit.lie import idealizer, subnormal_chain, validate_algebra
from clusterkit.linalg import Matrix

F3 = make_field(3)


def test_solvable_example_is_restricted():
    L, _ = two_dim_solvable()
    assert validate_algebra(L)
    assert L.bracket([1, 0], [0, 1]) == [0, 1]
    assert L.bracket([0, 1], [1, 0]) == [0, 2]


def test_abelian_any_pmap_is_valid():
    L = LieAlgebra.abelian(F3, 2, pmap=[[1, 2], [2, 2]])
    assert validate_algebra(L)


def test_bad_pmap_is_rejected():
    L = LieAlgebra.from_table(F3, ["x", "y"], {(0, 1): [0, 1]}, [[1, 0], [1, 0]])
    rep = validate_algebra(L)
    assert not rep
    assert any("y" in v for v in rep.violations)


def test_jacobi_failure_detected():
    # [x, y] = z, [y, z] = x, [z, x] = z violates Jacobi over GF(3)
    L = LieAlgebra.from_table(F3, ["x", "y", "z"], {(0, 1): [0, 0, 1], (1, 2): [1, 0, 0], (2, 0): [0, 0, 1]},
                              [[0, 0, 0]] * 3)
    assert any("Jacobi" in v for v in validate_algebra(L).violations)


def test_p_power_on_basis_and_sums():
    L, _ = two_dim_solvable()
    assert L.p_power([1, 0]) == [1, 0]
    assert L.p_power([0, 1]) == [0, 0]
    # (x + y)^[3] = x + y: ad(tx + y)^2 (x) = -t y gives s_1 = 0, s_2 = y
    assert L.p_power([1, 1]) == [1, 1]
    A = LieAlgebra.abelian(F3, 2, pmap=[[1, 2], [0, 1]])
    assert A.p_power([1, 1]) == [1, 0]
    assert A.p_power([2, 0]) == [2, 1]  # (2a)^[3] = 8 a^[3] = 2 a^[3]


def test_ad_matrix():
    L, _ = two_dim_solvable()
    assert L.ad_matrix([1, 0]) == Matrix(F3, [[0, 0], [0, 1]])
    assert L.ad_matrix([0, 1]) == Matrix(F3, [[0, 0], [2, 0]])
    A = LieAlgebra.abelian(F3, 3)
    assert A.ad_matrix([1, 2, 0]).is_zero()


def test_p_power_satisfies_ad_identity_on_combinations():
    L, _ = two_dim_solvable()
    for a in range(3):
        for b in range(3):
            v = [a, b]
            assert L.ad_matrix(L.p_power(v)) == L.ad_matrix(v) ** 3


def test_subalgebra_checks():
    L, S = two_dim_solvable()
    assert S.cobasis == (1,)
    assert S.is_p_closed()
    assert S.algebra.dim == 1 and S.algebra.parent is L
    H = LieAlgebra.from_table(F3, ["x", "y", "z"], {(0, 1): [0, 0, 1]}, [[0] * 3] * 3)
    with pytest.raises(ValueError):
        Subalgebra(H, [0, 1])
    Sy = Subalgebra(L, [1])
    assert Sy.is_p_closed()
    L2 = LieAlgebra.from_table(F3, ["x", "y", "z"], {(0, 1): [0, 1, 0]}, [[1, 0, 1], [0, 0, 0], [0, 0, 0]])
    with pytest.raises(ValueError):
        Subalgebra(L2, [0]).algebra


def test_idealizer_and_subnormal():
    L, S = two_dim_solvable()
    Sy = Subalgebra(L, [1])
    assert idealizer(Sy).ncols == 2
    assert idealizer(S).columns() == [[1, 0]]
    assert idealizer(Subalgebra(L, [0, 1])).ncols == 2
    assert subnormal_chain(S) is None
    chain = subnormal_chain(Sy)
    assert [B.ncols for B in chain] == [1, 2]
    assert [B.ncols for B in subnormal_chain(Subalgebra(L, [0, 1]))] == [2]


def test_heisenberg_chain():
    H = LieAlgebra.from_table(F3, ["x", "y", "z"], {(0, 1): [0, 0, 1]}, [[0] * 3] * 3)
    assert [B.ncols for B in subnormal_chain(Subalgebra(H, [0]))] == [1, 2, 3]
    assert H.center().columns() == [[0, 0, 1]]


def test_center_of_solvable_is_zero():
    L, _ = two_dim_solvable()
    assert L.center().ncols == 0


def test_extend_is_cached():
    L, _ = two_dim_solvable()
    K = make_field(3, 2)
    assert L.extend(K) is L.extend(K)
    assert L.extend(K).field is K
    assert validate_algebra(L.extend(K))
