"""Pfaffians and Pfaffian ideals of alternating matrices."""

from itertools import combinations

import numpy as np

from .ideals import Ideal
from .linalg import is_alternating, ring_of_matrix
from .rings import LocalRing, PolyRing


class OddSizePfaffian(ValueError):
    pass


class NotAlternating(ValueError):
    pass


def check_alternating(A):
    if not is_alternating(A):
        raise NotAlternating("matrix is not alternating (A^T = -A with zero diagonal)")
    return A


class _PfaffianTable:
    """Pfaffians of the principal submatrices of one matrix, memoized on
    the sorted index tuple."""

    def __init__(self, A, ring):
        self.A = A
        self.ring = ring
        self.memo = {(): ring.one}

    def __call__(self, idx):
        idx = tuple(idx)
        hit = self.memo.get(idx)
        if hit is not None:
            return hit
        if len(idx) % 2:
            raise OddSizePfaffian(f"Pfaffian of a {len(idx)}x{len(idx)} matrix")
        A = self.A
        i0 = idx[0]
        total = self.ring.zero
        for k in range(1, len(idx)):
            a = A[i0, idx[k]]
            if not a:
                continue
            rest = idx[1:k] + idx[k + 1:]
            term = a * self(rest)
            total = total + term if k % 2 == 1 else total - term
        self.memo[idx] = total
        return total


def pfaffian(A, ring=None):
    """Pfaffian by recursive expansion along the first row.

    Normalized so that ``pfaffian([[0, a], [-a, 0]]) == a``; the empty
    matrix has Pfaffian 1.
    """
    A = np.asarray(A, dtype=object)
    check_alternating(A)
    n = A.shape[0]
    if n % 2:
        raise OddSizePfaffian(f"Pfaffian of a {n}x{n} matrix")
    ring = ring or ring_of_matrix(A)
    return _PfaffianTable(A, ring)(range(n))


def sub_pfaffians(A, order, ring=None):
    """Pfaffians of all principal ``order x order`` submatrices.

    ``order == 0`` gives ``[1]``; an order larger than the matrix gives
    ``[]``.  Subsets are enumerated in lexicographic order.
    """
    if order % 2:
        raise OddSizePfaffian(f"Pfaffians of odd order {order}")
    A = np.asarray(A, dtype=object)
    check_alternating(A)
    ring = ring or ring_of_matrix(A)
    n = A.shape[0]
    if order < 0:
        raise ValueError("negative Pfaffian order")
    if order > n:
        return []
    table = _PfaffianTable(A, ring)
    return [table(S) for S in combinations(range(n), order)]


def submaximal_pfaffian_vector(A, ring=None):
    """``v_i = (-1)^i Pf(A without row/column i)`` (0-based ``i``).

    For odd-size alternating ``A`` this satisfies ``A @ v == 0``.
    """
    A = np.asarray(A, dtype=object)
    check_alternating(A)
    n = A.shape[0]
    if n % 2 == 0:
        raise ValueError(f"submaximal Pfaffian vector needs odd size, got {n}")
    ring = ring or ring_of_matrix(A)
    table = _PfaffianTable(A, ring)
    v = np.empty(n, dtype=object)
    for i in range(n):
        p = table([j for j in range(n) if j != i])
        v[i] = p if i % 2 == 0 else -p
    return v


def pfaffian_ideal(A, order, ring=None):
    """Ideal generated by the ``order x order`` principal Pfaffians.

    Orders ``<= 0`` give the unit ideal, orders above the size the zero
    ideal.  Local-ring entries contribute their numerators and their
    denominators are recorded as inverted units.
    """
    A = np.asarray(A, dtype=object)
    ring = ring or ring_of_matrix(A)
    R = ring.poly_ring if isinstance(ring, LocalRing) else ring
    if not isinstance(R, PolyRing):
        raise TypeError(f"Pfaffian ideals need a polynomial ring, got {ring!r}")
    if order <= 0:
        return Ideal([R.one], R)
    return Ideal(sub_pfaffians(A, order, ring), R)
