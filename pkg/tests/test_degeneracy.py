import random

import numpy as np

from lagloci import generate as gen
from lagloci.degeneracy import (check_complement_independence, check_vanishing, degeneracy_ideal,
                                pfaffian_order, symmetric_degeneracy_ideal)
from lagloci.fixtures import fixture_matrix
from lagloci.ideals import Ideal, ideal_codim, ideal_equal
from lagloci.linalg import coerce, identity, matrix, zeros
from lagloci.pairs import graph_pair, symmetric_graph_pair
from lagloci.quadform import LagSub
from lagloci.rings import QQ, PolyRing

R3 = PolyRing(QQ, ("x1", "x2", "x3"))


def test_pfaffian_order():
    assert pfaffian_order(3, 3) == 2
    assert pfaffian_order(3, 1) == 4
    assert pfaffian_order(5, 3) == 4


def test_koszul_pair():
    P = graph_pair(gen.koszul_matrix(R3))
    res = degeneracy_ideal(P, 3)
    assert ideal_equal(res.ideal, Ideal(list(R3.gens()), R3))
    assert ideal_codim(res.ideal) == 3


def test_koszul_pair_m1_is_everything():
    res = degeneracy_ideal(graph_pair(gen.koszul_matrix(R3)), 1)
    assert res.ideal.is_zero()


def test_order_swap():
    P = graph_pair(gen.koszul_matrix(R3))
    assert ideal_equal(degeneracy_ideal(P, 3).ideal, degeneracy_ideal(P.swapped(), 3).ideal)


def test_generic_five():
    A, R = fixture_matrix("generic-5x5")
    res = degeneracy_ideal(graph_pair(A), 3)
    assert len(res.ideal.gens) == 5
    assert all(g.degree() == 2 for g in res.ideal.gens)
    assert ideal_codim(res.ideal) == 3


def test_vanishing_matches_intersections():
    rng = random.Random(6)
    for _ in range(3):
        P, _ = gen.random_polynomial_pair(R3, 3, rng)
        for m in (1, 3):
            res = degeneracy_ideal(P, m)
            checked, bad = check_vanishing(P, res, samples=8, seed=1)
            assert checked and not bad


def test_complement_independence_same_complement():
    P = graph_pair(gen.koszul_matrix(R3))
    M = coerce(R3, np.vstack([identity(QQ, 3), zeros(QQ, 3)]))
    assert check_complement_independence(P, 3, LagSub(M, P.ambient), LagSub(M, P.ambient))


def test_complement_independence_random():
    rng = random.Random(12)
    for _ in range(5):
        n = rng.choice((3, 4))
        zeta = gen.random_alternating(R3, n, rng, 1, bound=2, constant=False)
        P = graph_pair(zeta)
        h = gen.random_alternating(QQ, n, rng, bound=2)
        M1 = coerce(R3, np.vstack([identity(QQ, n), zeros(QQ, n)]))
        M2 = coerce(R3, np.vstack([identity(QQ, n), h]))
        m = rng.choice(range(2 - n % 2, n + 1, 2))
        assert check_complement_independence(P, m, LagSub(M1, P.ambient), LagSub(M2, P.ambient))


def test_symmetric_examples():
    x, y, z = R3.gens()
    S = matrix(R3, [[x, y], [y, z]])
    P = symmetric_graph_pair(S)
    assert ideal_equal(symmetric_degeneracy_ideal(P, 1), Ideal([x * z - y * y], R3))
    assert ideal_equal(symmetric_degeneracy_ideal(P, 2), Ideal([x, y, z], R3))
    Z = symmetric_degeneracy_ideal(symmetric_graph_pair(zeros(R3, 2)), 2)
    assert Z.is_zero()
