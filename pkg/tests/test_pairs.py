import random

import numpy as np
import pytest

from lagloci import generate as gen
from lagloci.degeneracy import sample_points
from lagloci.linalg import identity, is_alternating, mat_equal, matrix, rank, zeros
from lagloci.pairs import (ParityViolation, PairData, common_complement, complement_transform,
                           graph_pair, homotopy_involution, intersection, lambda_of_pair,
                           localize_alternating, pad_even)
from lagloci.quadform import LagSub, hyperbolic, is_lagrangian, summand
from lagloci.ideals import Ideal, ideal_equal
from lagloci.pfaffian import pfaffian_ideal, sub_pfaffians
from lagloci.rings import GF, QQ, LocalRing, NotAUnit, PolyRing

R3 = PolyRing(QQ, ("x1", "x2", "x3"))


def field_pair(K, n, E="F", F="F"):
    V = hyperbolic(n, ring=K)
    return PairData(V, summand(V, E), summand(V, F))


def test_intersection_examples():
    dim, basis = intersection(field_pair(QQ, 2))
    assert dim == 2 and rank(basis, QQ) == 2
    dim, basis = intersection(field_pair(QQ, 2, "F", "F*"))
    assert dim == 0 and basis.shape[1] == 0


def test_intersection_koszul_at_origin():
    P = graph_pair(gen.koszul_matrix(R3))
    assert intersection(P)[0] == 3
    # away from the origin the Koszul matrix has rank 2
    assert intersection(P, (QQ(1), QQ(2), QQ(3)))[0] == 1


def test_common_complement_of_summands():
    P = field_pair(QQ, 2, "F", "F*")
    w = common_complement(P)
    assert w.valid
    assert is_lagrangian(P.ambient, w.M.gens)


def test_common_complement_equal_lagrangians():
    for K in (QQ, GF(2), GF(3)):
        P = field_pair(K, 3)
        w = common_complement(P)
        assert w.valid and rank(np.hstack([P.E.gens, w.M.gens]), K) == 6


def test_parity_violation():
    V = hyperbolic(2, ring=QQ)
    c = lambda *v: [QQ(t) for t in v]
    # swap one coordinate pair of F: dim(E cap F) = 1, but n = 2
    E = LagSub(np.array([c(1, 0), c(0, 0), c(0, 0), c(0, 1)], dtype=object), V)
    P = PairData(V, E, summand(V, "F"))
    assert intersection(P)[0] == 1
    with pytest.raises(ParityViolation):
        common_complement(P)


@pytest.mark.parametrize("K", [QQ, GF(2), GF(3)])
def test_random_consistent_pairs_have_complements(K):
    rng = random.Random(21)
    for _ in range(10):
        P = gen.random_field_pair(K, rng.randint(1, 4), rng)
        w = common_complement(P)
        assert w.valid and is_lagrangian(P.ambient, w.M.gens)


@pytest.mark.parametrize("K", [QQ, GF(2), GF(3)])
def test_violating_pairs_rejected(K):
    rng = random.Random(22)
    for _ in range(5):
        P = gen.random_field_pair(K, rng.randint(1, 4), rng, parity="violating")
        with pytest.raises(ParityViolation):
            common_complement(P)


def test_lambda_of_graph_pair():
    Z = gen.koszul_matrix(R3)
    assert mat_equal(lambda_of_pair(graph_pair(Z)), Z)


def test_lambda_equal_and_complementary():
    lam = lambda_of_pair(field_pair(QQ, 3))
    assert is_alternating(lam) and all(not x for x in lam.flat)
    lam = lambda_of_pair(field_pair(QQ, 3, "F", "F*"))
    assert mat_equal(lam, identity(QQ, 3)) or mat_equal(lam, -identity(QQ, 3))


def test_pad_even():
    P = graph_pair(gen.koszul_matrix(R3))
    P4 = pad_even(P)
    assert P4.n == 4
    lam = lambda_of_pair(P4)
    Z = gen.koszul_matrix(R3)
    assert mat_equal(lam[:3, :3], Z) and lam[3, 3] == 1
    for pt in sample_points(R3, 5, seed=1):
        assert intersection(P, pt)[0] == intersection(P4, pt)[0]
    P5 = pad_even(P4)
    for pt in sample_points(R3, 3, seed=2):
        assert intersection(P5, pt)[0] == intersection(P, pt)[0]


def test_localize_alternating_identity_case():
    Z = gen.koszul_matrix(R3)
    la = localize_alternating(graph_pair(Z), pad=False)
    assert mat_equal(la.iota, identity(la.iota[0, 0].ring if hasattr(la.iota[0, 0], "ring")
                                       else QQ, 3))
    assert mat_equal(la.zeta_poly, Z)


def test_localize_alternating_generic_complement():
    rng = random.Random(3)
    for _ in range(3):
        P, zeta = gen.random_polynomial_pair(R3, 3, rng)
        la = localize_alternating(P)
        assert is_alternating(la.zeta)
        # same Pfaffian ideal as the map it was built from, near the origin
        I = pfaffian_ideal(la.zeta, 2)
        J = Ideal(sub_pfaffians(zeta, 2, R3), R3, I.inverted_list())
        assert ideal_equal(I, J)


def test_complement_transform_examples():
    R = PolyRing(QQ, ("y", "z"))
    y, z = R.gens()
    L = LocalRing(R)
    Z = matrix(L, [[0, z], [-z, 0]])
    H = matrix(L, [[0, y], [-y, 0]])
    assert mat_equal(complement_transform(Z, zeros(L, 2)), Z)
    w = L(z) * L.inv(L(1 + y * z))
    assert mat_equal(complement_transform(Z, H), matrix(L, [[0, w], [-w, 0]]))
    # h = zeta^{-1}-like: det(1 - h zeta) vanishes at the origin
    Z1 = matrix(L, [[0, 1 + z], [-1 - z, 0]])
    H1 = matrix(L, [[0, -1], [1, 0]])
    with pytest.raises(NotAUnit):
        complement_transform(Z1, H1)


def test_involution_examples():
    R = PolyRing(QQ, ("y", "z"))
    y, z = R.gens()
    L = LocalRing(R)
    Z = matrix(L, [[0, z], [-z, 0]])
    H = matrix(L, [[0, y], [-y, 0]])
    z0, h0 = homotopy_involution(Z, zeros(L, 2))
    assert mat_equal(z0, Z) and all(not x for x in h0.flat)
    z1, h1 = homotopy_involution(Z, H)
    s = L(1 + y * z)
    assert mat_equal(z1, Z * s)
    assert mat_equal(h1, -H * L.inv(s * s))
    z2, h2 = homotopy_involution(z1, h1)
    assert mat_equal(z2, Z) and mat_equal(h2, H)
    with pytest.raises(NotAUnit):
        homotopy_involution(matrix(L, [[0, 1], [-1, 0]]), matrix(L, [[0, -1], [1, 0]]))
