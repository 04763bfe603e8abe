import pytest
from hypothesis import given, settings, strategies as st

from clusterkit.fields import (canonical_modulus, field_degree_of, frobenius, galois_orbit, is_prime,
                               make_field, orbit_of, pth_root)

FIELD_PARAMS = [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2), (5, 2), (2, 4), (3, 3)]


def test_prime_field_modulus():
    F = make_field(3, 1)
    assert F.q == 3
    assert F.modulus == (0, 1)


@pytest.mark.parametrize("p,k,expected", [
    # lowest degree first; cross-checked against an independent irreducibility scan
    (3, 2, (1, 0, 1)),        # t^2 + 1
    (2, 3, (1, 1, 0, 1)),     # t^3 + t + 1
    (5, 3, (1, 1, 0, 1)),     # t^3 + t + 1
    (3, 4, (2, 1, 0, 0, 1)),  # t^4 + t + 2
    (2, 2, (1, 1, 1)),        # t^2 + t + 1
])
def test_canonical_modulus(p, k, expected):
    assert canonical_modulus(p, k) == expected
    assert make_field(p, k).modulus == expected


def test_make_field_is_cached_and_checks_input():
    assert make_field(3, 2) is make_field(3, 2)
    with pytest.raises(ValueError):
        make_field(4, 1)
    with pytest.raises(ValueError):
        make_field(3, 0)


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_i_in_gf9():
    K = make_field(3, 2)
    i = K([0, 1])
    assert i * i == K(-1)
    assert frobenius(i, 1) == -i
    assert frobenius(i, 2) == i
    assert pth_root(-i) == i
    assert pth_root(K(1)) == K(1)


def test_prime_field_frobenius_and_roots():
    F = make_field(3)
    for a in F.elements():
        assert F.frob(a, 1) == a
        assert F.pth_root(a) == a
    assert pth_root(F(2)) == F(2)


def test_coerce():
    K = make_field(3, 2)
    assert K.coerce(-1) == 2
    assert K.coerce([0, 1]) == 3
    assert K.coerce([1]) == 1
    with pytest.raises(ValueError):
        K.coerce([0, 0, 1])


def test_orbits_and_degrees():
    K = make_field(3, 2)
    i = K([0, 1])
    orb = galois_orbit([i, K([1, 2])], 3)
    assert orb == {(i, K([1, 2])), (-i, K([1, 1]))}
    assert galois_orbit([K(1), K(2)], 3) == {(K(1), K(2))}
    assert field_degree_of([i], 3) == 2
    assert field_degree_of([K(1), K(2)], 3) == 1
    assert field_degree_of([i, K([1, 1])], 3) == 2
    K4 = make_field(3, 4)
    j = K.embedding(K4)[i.value]
    assert len(orbit_of(K4, [j], 3)) == 2
    assert field_degree_of([K4(K4.digits(j))], 3) == 2


def test_embedding_is_a_ring_map():
    for (p, k), (_, m) in [((2, 2), (2, 4)), ((3, 1), (3, 2)), ((2, 3), (2, 6)), ((3, 2), (3, 4))]:
        F, K = make_field(p, k), make_field(p, m)
        emb = F.embedding(K)
        for a in F.elements():
            for b in F.elements():
                assert emb[F.add(a, b)] == K.add(emb[a], emb[b])
                assert emb[F.mul(a, b)] == K.mul(emb[a], emb[b])
        assert F.restriction(K)[emb[F.gen]] == F.gen
        assert K.contains_subfield(F)
    with pytest.raises(ValueError):
        make_field(2, 2).embedding(make_field(2, 3))


def test_subfield_of_extension_base():
    # GF(4) is a subfield of GF(16) and of GF(64) but not of GF(8)
    F = make_field(2, 2)
    assert make_field(2, 4).contains_subfield(F)
    assert make_field(2, 6).contains_subfield(F)
    assert not make_field(2, 3).contains_subfield(F)


fields = st.sampled_from(FIELD_PARAMS).map(lambda pk: make_field(*pk))


@st.composite
def field_and_elems(draw, n=2):
    F = draw(fields)
    return (F, *[draw(st.integers(0, F.q - 1)) for _ in range(n)])


@settings(max_examples=200, deadline=None)
@given(field_and_elems(2))
def test_frobenius_is_a_field_automorphism(data):
    F, a, b = data
    assert F.frob(F.add(a, b)) == F.add(F.frob(a), F.frob(b))
    assert F.frob(F.mul(a, b)) == F.mul(F.frob(a), F.frob(b))
    assert F.frob(a, F.k) == a


@settings(max_examples=200, deadline=None)
@given(field_and_elems(1))
def test_pth_root_inverts_pth_power(data):
    F, a = data
    assert F.pow(F.pth_root(a), F.p) == a
    assert F.pth_root(F.pow(a, F.p)) == a


@settings(max_examples=200, deadline=None)
@given(field_and_elems(3))
def test_field_axioms(data):
    F, a, b, c = data
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    assert F.sub(F.add(a, b), b) == a
    if a:
        assert F.mul(a, F.inv(a)) == 1
        assert F.div(F.mul(a, b), a) == b
        assert F.pow(a, F.q - 1) == 1
