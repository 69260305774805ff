"""Example fixtures shipped with the package.

The JSON files under ``data/`` are produced by :func:`build_fixture` and
read back with :func:`load_fixture`; ``tests/test_fixtures.py`` checks
that the two agree.
"""

import json
import random
from importlib import resources

import numpy as np

from .generate import koszul_matrix, random_alternating
from .jsonio import (dumps, matrix_from_json, matrix_to_json, poly_to_json, quadspace_to_json,
                     ring_descriptor)
from .quadform import hyperbolic
from .resolutions import omega_twists, threefold_sheaf_twists
from .rings import GF, QQ, PolyRing, ring_from_descriptor

FIXTURES = ("koszul-point", "generic-5x5", "f2-space", "threefold-chi")
GENERIC_SEED = 5


def koszul_point():
    R = PolyRing(QQ, ("x1", "x2", "x3"))
    return koszul_matrix(R), R


def generic_5x5():
    R = PolyRing(QQ, ("x0", "x1", "x2", "x3"))
    A = random_alternating(R, 5, random.Random(GENERIC_SEED), 1, constant=False,
                           homogeneous=True)
    return A, R


def _f2_subspaces(K):
    one, zero = K(1), K(0)
    col = lambda *v: [K(x) for x in v]
    U = np.array([col(0, 0), col(0, 0), col(1, 0), col(0, 1)], dtype=object)
    U1 = np.array([col(1, 0), col(0, 1), col(0, 0), col(0, 0)], dtype=object)
    # x1 + x3 = x2 + x4 = 0, exactly as the example states it
    U2 = np.array([[one, zero], [zero, one], [one, zero], [zero, one]], dtype=object)
    return {"U": U, "U'": U1, "U''": U2}


def build_fixture(name):
    if name == "koszul-point":
        A, R = koszul_point()
        return {"name": name, "ring": ring_descriptor(R), "matrix": matrix_to_json(A),
                "expected": {"twists": [[0], [-1] * 3, [-2] * 3, [-3]], "codim": 3,
                             "pfaffians": [poly_to_json(p) for p in _koszul_vector(A, R)]}}
    if name == "generic-5x5":
        A, R = generic_5x5()
        return {"name": name, "seed": GENERIC_SEED, "ring": ring_descriptor(R),
                "matrix": matrix_to_json(A),
                "expected": {"twists": [[0], [-2] * 5, [-3] * 5, [-5]], "codim": 3}}
    if name == "f2-space":
        K = GF(2)
        V = hyperbolic(2, ring=K)
        subs = {k: matrix_to_json(v) for k, v in _f2_subspaces(K).items()}
        return {"name": name, "ring": ring_descriptor(K), "space": quadspace_to_json(V),
                "subspaces": subs,
                "expected": {"lagrangians": 6, "literal_U''_lagrangian": False}}
    if name == "threefold-chi":
        return {"name": name, "n": 5, "ell": 6, "shift": -3,
                "omega3_twisted": [[c, d + 3] for c, d in omega_twists(5, 3)],
                "trivial_rank": 10,
                "virtual_twists": [[c, d] for c, d in threefold_sheaf_twists()],
                "expected": {"chi": 1, "obstructed": True}}
    raise KeyError(f"unknown fixture {name!r}; known: {FIXTURES}")


def _koszul_vector(A, R):
    from .pfaffian import submaximal_pfaffian_vector
    return submaximal_pfaffian_vector(A, R)


def fixture_text(name):
    return dumps(build_fixture(name)) + "\n"


def load_fixture(name):
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; known: {FIXTURES}")
    text = resources.files("lagloci").joinpath("data", f"{name}.json").read_text()
    return json.loads(text)


def fixture_matrix(name):
    """``(matrix, ring)`` of a matrix fixture."""
    data = load_fixture(name)
    R = ring_from_descriptor(data["ring"])
    return matrix_from_json(R, data["matrix"]), R


def write_fixtures(directory):
    import pathlib
    d = pathlib.Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    for name in FIXTURES:
        (d / f"{name}.json").write_text(fixture_text(name))
