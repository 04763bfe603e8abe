import pytest

from clusterkit import LieAlgebra, LieModule, make_field
from clusterkit.fixtures import diagonal_pair, rotation_module, two_dim_solvable
from clusterkit.linalg import Matrix
from clusterkit.lmodule import (change_basis, direct_sum, has_character, hom_module, is_invariant, kron, quotient,
                                restrict, submodule, validate_module)
from clusterkit.oracle import spin

F3 = make_field(3)


def test_rotation_module_valid_and_phi():
    _, S = two_dim_solvable()
    W = rotation_module(S)
    assert validate_module(W)
    # rho(x)^3 - rho(x) = -2 rho(x) = rho(x) over GF(3)
    assert W.phi([1]) == W.action[0]
    assert W.phi([0]).is_zero()
    assert has_character(W) is None


def test_diagonal_module_and_characters():
    L, V = diagonal_pair("zero")
    assert validate_module(V)
    assert V.phi_basis(0) == Matrix(F3, [[1, 0], [0, 0]])
    line = submodule(V, Matrix.from_columns(F3, [[1, 0]], 2))
    assert has_character(line).values == (1, 0)


def test_trivial_module_character_zero():
    L = LieAlgebra.abelian(F3, 2)
    T = LieModule(L, [Matrix.zeros(F3, 1, 1)] * 2)
    assert has_character(T).values == (0, 0)


def test_invalid_module():
    L, _ = two_dim_solvable()
    A = Matrix(F3, [[1, 1], [0, 1]])
    assert not validate_module(LieModule(L, [A, A]))


def test_wrong_shapes_rejected():
    L, _ = two_dim_solvable()
    with pytest.raises(ValueError):
        LieModule(L, [Matrix.identity(F3, 2)])
    with pytest.raises(ValueError):
        LieModule(L, [Matrix.identity(F3, 2), Matrix.identity(F3, 3)])


def test_hom_of_lines_subtracts_characters():
    L = LieAlgebra.abelian(F3, 1)
    V = LieModule.from_lists(L, [[[1]]])
    W = LieModule.from_lists(L, [[[2]]])
    H = hom_module(V, W)
    assert H.dim == 1 and H.action[0] == Matrix(F3, [[1]])
    assert has_character(H).values == (1,)


def test_hom_dimension_and_validity():
    _, S = two_dim_solvable()
    W = rotation_module(S)
    H = hom_module(W, W)
    assert H.dim == 4 and validate_module(H)


def test_kron():
    A = Matrix(F3, [[1, 2], [0, 1]])
    B = Matrix.identity(F3, 2)
    assert kron(A, B).rows[0] == (1, 0, 2, 0)


def test_submodule_quotient_and_spin():
    _, S = two_dim_solvable()
    W = rotation_module(S)
    assert spin(W, [1, 0]).ncols == 2
    L, V = diagonal_pair("zero")
    U = spin(V, [1, 0])
    assert U.columns() == [[1, 0]]
    assert spin(V, [0, 0]).ncols == 0
    assert is_invariant(V, U)
    Q = quotient(V, U)
    assert Q.dim == 1 and Q.action[1] == Matrix(F3, [[1]])
    assert validate_module(Q)


def test_restrict_direct_sum_change_basis():
    L, S = two_dim_solvable()
    M = LieModule.from_lists(L, [[[0, 0], [0, 1]], [[0, 0], [1, 0]]])
    assert validate_module(M)
    R = restrict(M, S)
    assert R.algebra is S.algebra and R.dim == 2
    D = direct_sum(M, M)
    assert D.dim == 4 and validate_module(D)
    P = Matrix(F3, [[1, 1], [0, 1]])
    N = change_basis(M, P)
    assert validate_module(N)
    assert N.action[0] == P.inverse() @ M.action[0] @ P


def test_extension_keeps_validity():
    _, S = two_dim_solvable()
    W = rotation_module(S)
    K = make_field(3, 2)
    WK = W.extend(K)
    assert WK.field is K and validate_module(WK)
    i = K.from_digits([0, 1])
    # phi_x acts on W_1 = <-b1 - i b2> by -i
    v = [K.neg(1), K.neg(i)]
    assert WK.phi_basis(0) @ v == K.scale(K.neg(i), v)
