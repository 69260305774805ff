import json
import random
from importlib import resources

import pytest

from lagloci import generate as gen
from lagloci.fixtures import FIXTURES, build_fixture, fixture_matrix, fixture_text, load_fixture
from lagloci.ideals import Ideal, ideal_equal
from lagloci.jsonio import (InputError, dumps, ideal_from_json, matrix_from_json, matrix_to_json,
                            pair_from_json, pair_to_json, poly_from_json, poly_to_json,
                            quadspace_from_json, read_ring)
from lagloci.linalg import is_alternating, mat_equal
from lagloci.quadform import is_lagrangian
from lagloci.rings import GF, QQ, LocalRing, PolyRing


@pytest.mark.parametrize("name", FIXTURES)
def test_shipped_fixture_matches_builder(name):
    shipped = resources.files("lagloci").joinpath("data", f"{name}.json").read_text()
    assert shipped == fixture_text(name)
    assert load_fixture(name) == json.loads(fixture_text(name))


def test_fixture_matrices_validate():
    for name in ("koszul-point", "generic-5x5"):
        A, R = fixture_matrix(name)
        assert is_alternating(A) and A.shape[0] % 2 == 1


def test_f2_fixture_validates():
    data = load_fixture("f2-space")
    R = read_ring(data)
    V = quadspace_from_json(R, data["space"])
    subs = {k: matrix_from_json(R, v) for k, v in data["subspaces"].items()}
    assert is_lagrangian(V, subs["U"]) and is_lagrangian(V, subs["U'"])
    assert not is_lagrangian(V, subs["U''"])


def test_unknown_fixture():
    with pytest.raises(KeyError):
        load_fixture("nope")
    with pytest.raises(KeyError):
        build_fixture("nope")


def test_poly_roundtrip():
    for K in (QQ, GF(2), GF(7)):
        R = PolyRing(K, ("x", "y"))
        rng = random.Random(1)
        for _ in range(10):
            p = gen.random_entry(R, rng, degree=3)
            assert poly_from_json(R, json.loads(json.dumps(poly_to_json(p)))) == p


def test_rational_coefficients_are_strings():
    R = PolyRing(QQ, ("x",))
    (x,) = R.gens()
    data = poly_to_json(x * QQ(1) / 3 + 2)
    assert {"c": "1/3", "e": [1]} in data and {"c": 2, "e": [0]} in data


def test_local_roundtrip():
    R = PolyRing(QQ, ("x",))
    (x,) = R.gens()
    L = LocalRing(R)
    v = L(x) * L.inv(L(1 + x))
    assert poly_from_json(L, poly_to_json(v)) == v


def test_bad_coefficients():
    R = PolyRing(QQ, ("x",))
    with pytest.raises(InputError):
        poly_from_json(R, [{"c": 1.5, "e": [1]}])
    with pytest.raises(InputError):
        poly_from_json(R, [{"c": "1/0", "e": [1]}])
    with pytest.raises(InputError):
        poly_from_json(R, [{"c": 1, "e": [1, 2]}])


def test_matrix_and_ideal_roundtrip():
    A, R = fixture_matrix("generic-5x5")
    assert mat_equal(matrix_from_json(R, json.loads(dumps(matrix_to_json(A)))), A)
    I = Ideal([A[0, 1], A[0, 2]], R)
    J = ideal_from_json(R, json.loads(dumps(I.to_json())))
    assert ideal_equal(I, J)


def test_pair_roundtrip():
    P, _ = gen.random_polynomial_pair(PolyRing(GF(3), ("x", "y")), 2, random.Random(2))
    Q = pair_from_json(json.loads(dumps(pair_to_json(P))))
    assert mat_equal(Q.E.gens, P.E.gens) and mat_equal(Q.F.gens, P.F.gens)


@pytest.mark.parametrize("kind", gen.KINDS)
def test_generate_is_deterministic(kind):
    a = dumps(gen.generate_instance(kind, 3, 1, "Q", 42))
    b = dumps(gen.generate_instance(kind, 3, 1, "Q", 42))
    assert a == b
    assert a != dumps(gen.generate_instance(kind, 3, 1, "Q", 43))


def test_generate_examples():
    alt = gen.generate_instance("alternating", 5, 1, "Q", 42)
    A = matrix_from_json(read_ring(alt), alt["matrix"])
    assert A.shape == (5, 5) and is_alternating(A)
    assert all(x.degree() == 1 for x in A.flat if x)
    lp = gen.generate_instance("lagrangian-pair", 3, 1, "Fp:2", 7)
    P = pair_from_json(lp)
    assert is_lagrangian(P.ambient, P.E.gens) and is_lagrangian(P.ambient, P.F.gens)
    sp = gen.generate_instance("split-pair", 3, 1, "Q", 1)
    R = read_ring(sp)
    psi, phi = matrix_from_json(R, sp["psi"]), matrix_from_json(R, sp["phi"])
    assert is_alternating(phi.T @ psi)


def test_generate_unsupported():
    with pytest.raises(gen.UnsupportedKind):
        gen.generate_instance("triangle", 3)
