"""Small worked examples used by the tests, demos and CLI fixtures."""

from __future__ import annotations

from .clusters import compute_cluster
from .fields import make_field
from .induction import extend_character, induce
from .lie import LieAlgebra, Subalgebra
from .lmodule import LieModule

GF3 = make_field(3)


def two_dim_solvable():
    """<x, y | [x, y] = y> over GF(3) with x^[3] = x, y^[3] = 0, and S = <x>."""
    L = LieAlgebra.from_table(GF3, ["x", "y"], {(0, 1): [0, 1]}, [[1, 0], [0, 0]])
    return L, Subalgebra(L, [0])


def rotation_module(S: Subalgebra) -> LieModule:
    """x b1 = b2, x b2 = -b1."""
    return LieModule.from_lists(S.algebra, [[[0, -1], [1, 0]]])


def rotation_cluster(alpha: int, beta: int, S: Subalgebra | None = None):
    """Orbit of the character with c(x) = i and c(y) = alpha + i*beta in GF(9)."""
    if S is None:
        _, S = two_dim_solvable()
    W = rotation_module(S)
    cl = compute_cluster(W)
    K = cl.field
    return extend_character(cl.chars[0], [K.from_digits([alpha, beta])], S)


def rotation_induced(alpha: int, beta: int, method: str = "general"):
    L, S = two_dim_solvable()
    W = rotation_module(S)
    return induce(W, S, rotation_cluster(alpha, beta, S), method=method)


P_MAPS = {
    # both p-powers zero
    "zero": [[0, 0], [0, 0]],
    # a1^[p] = a1, a2^[p] = -a1: the values giving V the single character (0, 1)
    "toral": [[1, 0], [-1, 0]],
    # a1^[p] = 0, a2^[p] = -a1
    "nil": [[0, 0], [-1, 0]],
}


def diagonal_pair(pmap: str = "zero", p: int = 3):
    """Abelian <a1, a2> acting on <v1, v2> by a_i v_i = v_i, a_i v_j = 0."""
    F = make_field(p)
    L = LieAlgebra.abelian(F, 2, pmap=P_MAPS[pmap])
    V = LieModule.from_lists(L, [[[1, 0], [0, 0]], [[0, 0], [0, 1]]])
    return L, V


def jordan_module():
    """p = 2, one-dimensional <x> with x^[2] = 0 acting by a 3x3 nilpotent Jordan block."""
    F = make_field(2)
    L = LieAlgebra.abelian(F, 1, names=["x"])
    return LieModule.from_lists(L, [[[0, 1, 0], [0, 0, 1], [0, 0, 0]]])


def rotation_document(alpha: int = 0, beta: int = 0) -> dict:
    """The two-dimensional solvable example as a problem document."""
    return {
        "field": {"p": 3, "m": 1},
        "algebra": {
            "dim": 2,
            "names": ["x", "y"],
            "brackets": [[1, 2, [0, 1]]],
            "pmap": [[1, 0], [0, 0]],
        },
        "subalgebras": {"S": [1]},
        "modules": {"W": {"dim": 2, "over": "S", "action": [[[0, 2], [1, 0]]]}},
        "tasks": [
            {"command": "cluster", "module": "W"},
            {"command": "amenable", "module": "W"},
            {"command": "homcluster", "source": "W", "target": "W"},
            {"command": "oracle-compare", "module": "W"},
            {"command": "induce", "module": "W", "subalgebra": "S", "cobasis_values": [[alpha, beta]]},
        ],
    }


def diagonal_document(pmap: str = "zero") -> dict:
    reduced = [[a % 3 for a in row] for row in P_MAPS[pmap]]
    return {
        "field": {"p": 3, "m": 1},
        "algebra": {"dim": 2, "names": ["a1", "a2"], "brackets": [], "pmap": reduced},
        "subalgebras": {"A1": [1]},
        "modules": {"V": {"dim": 2, "action": [[[1, 0], [0, 0]], [[0, 0], [0, 1]]]}},
        "tasks": [
            {"command": "cluster", "module": "V"},
            {"command": "decompose", "module": "V"},
            {"command": "amenable", "module": "V"},
            {"command": "oracle-compare", "module": "V"},
        ],
    }
