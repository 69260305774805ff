import random

import pytest

from lagloci import generate as gen
from lagloci.linalg import (NotAField, NotSquare, cofactor_det, identity, local_invert,
                            local_matmul, mat_det, mat_equal, mat_rank_kernel, matrix, rank, zeros)
from lagloci.rings import GF, QQ, LocalRing, NotAUnit, PolyRing


def test_det_identity():
    assert mat_det(identity(QQ, 4)) == 1


def test_det_two_by_two_alternating():
    R = PolyRing(QQ, ("a",))
    (a,) = R.gens()
    assert mat_det(matrix(R, [[0, a], [-a, 0]])) == a * a


def test_det_vandermonde():
    V = matrix(QQ, [[1, 1, 1], [1, 2, 4], [1, 3, 9]])
    assert mat_det(V) == 2
    assert cofactor_det(V) == 2


def test_det_non_square():
    with pytest.raises(NotSquare):
        mat_det(zeros(QQ, 2, 3))


@pytest.mark.parametrize("K", [QQ, GF(7)])
def test_det_multiplicative(K):
    rng = random.Random(11)
    for _ in range(20):
        A = gen.random_matrix(K, 4, 4, rng)
        B = gen.random_matrix(K, 4, 4, rng)
        assert mat_det(A @ B) == mat_det(A) * mat_det(B)


def test_bareiss_matches_cofactor_over_polynomials():
    rng = random.Random(3)
    R = PolyRing(QQ, ("x", "y"))
    for n in range(1, 6):
        M = gen.random_matrix(R, n, n, rng)
        assert mat_det(M) == cofactor_det(M)


def test_rank_kernel_examples():
    r, K = mat_rank_kernel(identity(QQ, 3))
    assert r == 3 and K.shape[1] == 0
    A = matrix(QQ, [[0, 1, 2], [-1, 0, 3], [-2, -3, 0]])
    r, K = mat_rank_kernel(A)
    assert r == 2 and K.shape[1] == 1
    v = K[:, 0]
    # proportional to (3, -2, 1)
    assert v[0] * -2 == v[1] * 3 and v[1] * 1 == v[2] * -2
    r, K = mat_rank_kernel(zeros(QQ, 2, 3))
    assert r == 0 and mat_equal(K, identity(QQ, 3))


def test_rank_kernel_properties():
    rng = random.Random(5)
    for K in (QQ, GF(2), GF(3)):
        for _ in range(15):
            M = gen.random_matrix(K, rng.randint(1, 5), rng.randint(1, 5), rng)
            r, N = mat_rank_kernel(M, K)
            assert r + N.shape[1] == M.shape[1]
            assert all(not x for x in (M @ N).flat)
            assert rank(N, K) == N.shape[1]


def test_rank_needs_field():
    R = PolyRing(QQ, ("x",))
    (x,) = R.gens()
    with pytest.raises(NotAField):
        mat_rank_kernel(matrix(R, [[x]]))


def test_local_invert():
    R = PolyRing(QQ, ("x", "y"))
    x, y = R.gens()
    L = LocalRing(R)
    assert mat_equal(local_invert(identity(L, 3)), identity(L, 3))
    inv = local_invert(matrix(L, [[1 + x * y]]))
    assert inv[0, 0] == L.inv(L(1 + x * y))
    with pytest.raises(NotAUnit):
        local_invert(matrix(L, [[x]]))


def test_local_invert_two_sided():
    rng = random.Random(8)
    R = PolyRing(QQ, ("x", "y"))
    L = LocalRing(R)
    for _ in range(5):
        M = gen.random_matrix(R, 3, 3, rng)
        for i in range(3):
            M[i, i] = M[i, i] + 5  # unit at the origin, generically
        try:
            Mi = local_invert(matrix(L, M.tolist()))
        except NotAUnit:
            continue
        ML = matrix(L, M.tolist())
        assert mat_equal(local_matmul(ML, Mi, ring=L), identity(L, 3))
        assert mat_equal(local_matmul(Mi, ML, ring=L), identity(L, 3))


def test_local_matmul_matches_plain_product():
    R = PolyRing(QQ, ("x",))
    (x,) = R.gens()
    L = LocalRing(R)
    A = matrix(L, [[L(x) * L.inv(L(1 + x)), L(1)], [L(0), L.inv(L(1 - x))]])
    B = matrix(L, [[L(1), L(x)], [L(x) * L.inv(L(1 + x)), L(2)]])
    assert mat_equal(local_matmul(A, B, ring=L), A @ B)
