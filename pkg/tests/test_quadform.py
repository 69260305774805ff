import random

import numpy as np
import pytest

from lagloci import generate as gen
from lagloci.linalg import field_inverse, identity, mat_det, mat_equal, matrix, zeros
from lagloci.pairs import common_complement
from lagloci.quadform import (NonAlternatingGraph, NotComplementary, QuadSpace,
                              bilinear_of_quadratic, forms_equal, graph_subspace, hyperbolic,
                              hyperbolic_doubling, is_lagrangian, isometry_to_hyperbolic,
                              summand)
from lagloci.rings import GF, QQ, PolyRing


def test_bilinear_examples():
    assert mat_equal(bilinear_of_quadratic(QuadSpace(matrix(QQ, [[0, 1], [0, 0]]))),
                     matrix(QQ, [[0, 1], [1, 0]]))
    assert mat_equal(bilinear_of_quadratic(QuadSpace(matrix(QQ, [[1, 0], [0, 1]]))),
                     matrix(QQ, [[2, 0], [0, 2]]))


def test_bilinear_char_two_collapse():
    # q = x1^2 over F2 has zero polar form; the space is degenerate
    K = GF(2)
    Q = matrix(K, [[1, 0], [0, 0]])
    B = Q + Q.T
    assert all(not x for x in B.flat)
    try:
        V = QuadSpace(Q, ring=K)
    except ValueError:
        return
    assert all(not x for x in bilinear_of_quadratic(V).flat)


def test_hyperbolic():
    V = hyperbolic(1, ring=QQ)
    assert mat_equal(V.gram_upper, matrix(QQ, [[0, 1], [0, 0]]))
    V2 = hyperbolic(2, ring=QQ)
    assert is_lagrangian(V2, summand(V2, "F").gens)
    assert is_lagrangian(V2, summand(V2, "F*").gens)
    W = hyperbolic(2, ring=GF(2))
    assert mat_det(W.bilinear()) != 0


def test_f2_lagrangian_examples():
    K = GF(2)
    V = hyperbolic(2, ring=K)  # q = x1 x3 + x2 x4
    c = lambda *v: [K(t) for t in v]
    bad = np.array([c(1, 0), c(0, 1), c(1, 0), c(0, 1)], dtype=object)  # e1+e3, e2+e4
    good = np.array([c(1, 0), c(0, 1), c(0, 1), c(1, 0)], dtype=object)  # e1+e4, e2+e3
    assert V.q(np.array(c(1, 0, 1, 0), dtype=object)) == K(1)
    assert not is_lagrangian(V, bad)
    assert is_lagrangian(V, good)


def test_graph_subspace():
    V = hyperbolic(3, ring=QQ)
    G = graph_subspace(V, zeros(QQ, 3))
    assert mat_equal(G.gens, summand(V, "F").gens)
    R = PolyRing(QQ, ("a", "b", "c"))
    a, b, c = R.gens()
    VR = hyperbolic(3, ring=R)
    Z = matrix(R, [[0, a, b], [-a, 0, c], [-b, -c, 0]])
    assert is_lagrangian(VR, graph_subspace(VR, Z).gens)
    with pytest.raises(NonAlternatingGraph):
        graph_subspace(V, matrix(QQ, [[0, 1, 0], [1, 0, 0], [0, 0, 0]]))


def test_isometry_identity_on_hyperbolic():
    V = hyperbolic(2, ring=QQ)
    T = isometry_to_hyperbolic(V, summand(V, "F"), summand(V, "F*"))
    assert mat_equal(T, identity(QQ, 4))


def test_isometry_conjugates_to_hyperbolic():
    rng = random.Random(4)
    for _ in range(5):
        P = gen.random_field_pair(QQ, 2, rng)
        V = P.ambient
        M = common_complement(P).M
        T = isometry_to_hyperbolic(V, P.F, M)
        # q(T^-1 y) = q_h(y): T^-T Q T^-1 and Q_h differ by an alternating matrix
        U = field_inverse(T, QQ)
        assert forms_equal(U.T @ V.gram_upper @ U, hyperbolic(2, ring=QQ).gram_upper)


def test_isometry_requires_complement():
    V = hyperbolic(2, ring=QQ)
    F = summand(V, "F")
    with pytest.raises(NotComplementary):
        isometry_to_hyperbolic(V, F, F)


def test_hyperbolic_doubling():
    V = hyperbolic(1, ring=QQ)
    F = summand(V, "F")
    H, L = hyperbolic_doubling(V, F, F)
    assert H.rank == 4 and L.gens.shape == (4, 2)
    rng = random.Random(9)
    P = gen.random_field_pair(QQ, 2, rng)
    H, L = hyperbolic_doubling(P.ambient, P.E, P.F)
    assert is_lagrangian(H, L.gens)


def test_hyperbolic_doubling_char_two():
    rng = random.Random(1)
    K = GF(2)
    for _ in range(5):
        P = gen.random_field_pair(K, 2, rng)
        H, L = hyperbolic_doubling(P.ambient, P.E, P.F)
        assert is_lagrangian(H, L.gens)
