"""Dense exact matrices as numpy object arrays.

Entries are ring elements from :mod:`lagloci.rings`.  Every constructor
coerces its entries into one ring, so the ring of a nonempty matrix can be
read off any entry; pass ``ring=`` explicitly for empty matrices.
"""

from itertools import combinations

import numpy as np

from .rings import (QQ, LocalElt, LocalRing, NotAUnit, Poly, PolyRing,
                    numerator_denominator, ring_of)


class NotSquare(ValueError):
    pass


class NotAField(TypeError):
    pass


def matrix(ring, rows):
    rows = [list(r) for r in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    M = np.empty((nrows, ncols), dtype=object)
    for i, r in enumerate(rows):
        if len(r) != ncols:
            raise ValueError("ragged matrix")
        for j, x in enumerate(r):
            M[i, j] = ring(x)
    return M


def zeros(ring, nrows, ncols=None):
    ncols = nrows if ncols is None else ncols
    M = np.empty((nrows, ncols), dtype=object)
    z = ring.zero
    for idx in np.ndindex(M.shape):
        M[idx] = z
    return M


def identity(ring, n):
    M = zeros(ring, n)
    for i in range(n):
        M[i, i] = ring.one
    return M


def coerce(ring, M):
    M = np.asarray(M, dtype=object)
    out = np.empty(M.shape, dtype=object)
    for idx in np.ndindex(M.shape):
        out[idx] = ring(M[idx])
    return out


def ring_of_matrix(M, default=QQ):
    if M.size == 0:
        return default
    return ring_of(M.flat[0])


def block(ring, blocks):
    """``np.block`` for object matrices; ``None`` entries become zero blocks
    sized from their row/column neighbours."""
    heights = []
    for row in blocks:
        h = next(b.shape[0] for b in row if b is not None)
        heights.append(h)
    widths = []
    for j in range(len(blocks[0])):
        w = next(row[j].shape[1] for row in blocks if row[j] is not None)
        widths.append(w)
    filled = [[b if b is not None else zeros(ring, heights[i], widths[j])
               for j, b in enumerate(row)] for i, row in enumerate(blocks)]
    if not any(heights) or not any(widths):
        return zeros(ring, sum(heights), sum(widths))
    return np.block(filled)


def diag_blocks(ring, *blocks):
    n = len(blocks)
    return block(ring, [[blocks[i] if i == j else None for j in range(n)]
                        for i in range(n)])


def mat_equal(A, B):
    if A.shape != B.shape:
        return False
    return all(A[idx] == B[idx] for idx in np.ndindex(A.shape))


def is_zero(M):
    return all(not M[idx] for idx in np.ndindex(M.shape))


def is_alternating(A):
    """``A^T = -A`` and zero diagonal; the diagonal condition matters in
    characteristic 2."""
    n, m = A.shape
    if n != m:
        return False
    for i in range(n):
        if A[i, i]:
            return False
        for j in range(i + 1, n):
            if A[i, j] + A[j, i]:
                return False
    return True


def is_symmetric(A):
    n, m = A.shape
    return n == m and all(A[i, j] == A[j, i] for i in range(n) for j in range(i + 1, n))


def evaluate(M, point):
    """Specialize a polynomial/local matrix at a point of the base field."""
    out = np.empty(M.shape, dtype=object)
    for idx in np.ndindex(M.shape):
        x = M[idx]
        if isinstance(x, (Poly, LocalElt)):
            out[idx] = x.evaluate(point)
        else:
            out[idx] = x
    return out


def at_origin(M):
    R = ring_of_matrix(M)
    if isinstance(R, (PolyRing, LocalRing)):
        return evaluate(M, [0] * R.nvars)
    return M


# -- determinants ------------------------------------------------------------


def _bareiss_det(M, ring):
    n = M.shape[0]
    A = M.copy()
    sign = 1
    prev = ring.one
    for k in range(n - 1):
        if not A[k, k]:
            for i in range(k + 1, n):
                if A[i, k]:
                    A[[k, i]] = A[[i, k]]
                    sign = -sign
                    break
            else:
                return ring.zero
        piv = A[k, k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i, j] = ring.exact_div(A[i, j] * piv - A[i, k] * A[k, j], prev)
        prev = piv
    d = A[n - 1, n - 1]
    return d if sign == 1 else -d


def mat_det(M, ring=None):
    """Determinant by fraction-free (Bareiss) elimination.

    Over the local ring the rows are cleared of denominators first, so all
    divisions happen in the polynomial ring.
    """
    M = np.asarray(M, dtype=object)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise NotSquare(f"determinant of a {M.shape} matrix")
    ring = ring or ring_of_matrix(M)
    n = M.shape[0]
    if n == 0:
        return ring.one
    if isinstance(ring, LocalRing):
        N, dens = clear_row_denominators(M, ring.poly_ring)
        d = _bareiss_det(N, ring.poly_ring)
        den = ring.poly_ring.one
        for x in dens:
            den = den * x
        return LocalElt(d, den)
    return _bareiss_det(M, ring)


def cofactor_det(M, ring=None):
    """Laplace expansion along the first row.  Oracle only: factorial time."""
    ring = ring or ring_of_matrix(M)
    n = M.shape[0]
    if n == 0:
        return ring.one
    total = ring.zero
    for j in range(n):
        if not M[0, j]:
            continue
        minor = np.delete(np.delete(M, 0, axis=0), j, axis=1)
        term = M[0, j] * cofactor_det(minor, ring)
        total = total + term if j % 2 == 0 else total - term
    return total


def clear_row_denominators(M, poly_ring):
    """Multiply each row by the product of its denominators.

    Returns the polynomial matrix and the list of row multipliers.
    """
    n, m = M.shape
    N = np.empty((n, m), dtype=object)
    dens = []
    for i in range(n):
        parts = [numerator_denominator(M[i, j], poly_ring) for j in range(m)]
        d = poly_ring.one
        seen = []
        for _, den in parts:
            if den != 1 and all(den != s for s in seen):
                seen.append(den)
                d = d * den
        for j, (num, den) in enumerate(parts):
            N[i, j] = num * poly_ring.exact_div(d, den) if den != 1 else num * d
        dens.append(d)
    return N, dens


def clear_denominators(M, poly_ring):
    """Scale a whole matrix by a common denominator: returns ``(N, d)`` with
    ``M = N / d``."""
    seen = []
    d = poly_ring.one
    for idx in np.ndindex(M.shape):
        _, den = numerator_denominator(M[idx], poly_ring)
        if den != 1 and all(den != s for s in seen):
            seen.append(den)
            d = d * den
    N = np.empty(M.shape, dtype=object)
    for idx in np.ndindex(M.shape):
        num, den = numerator_denominator(M[idx], poly_ring)
        N[idx] = num * poly_ring.exact_div(d, den) if den != 1 else num * d
    return N, d


def minors(M, k, ring=None):
    """All ``k x k`` minors (rows and columns in lexicographic order)."""
    ring = ring or ring_of_matrix(M)
    n, m = M.shape
    out = []
    for rows in combinations(range(n), k):
        sub_r = M[list(rows), :]
        for cols in combinations(range(m), k):
            out.append(mat_det(sub_r[:, list(cols)], ring))
    return out


def adjugate(M, ring=None):
    ring = ring or ring_of_matrix(M)
    n = M.shape[0]
    adj = zeros(ring, n)
    for i in range(n):
        for j in range(n):
            sub = np.delete(np.delete(M, i, axis=0), j, axis=1)
            c = mat_det(sub, ring)
            adj[j, i] = c if (i + j) % 2 == 0 else -c
    return adj


# -- fields: rank and kernel --------------------------------------------------


def rref(M, field):
    """Reduced row echelon form over a field; returns (R, pivot columns)."""
    A = coerce(field, M)
    n, m = A.shape
    pivots = []
    r = 0
    for c in range(m):
        if r == n:
            break
        p = next((i for i in range(r, n) if A[i, c]), None)
        if p is None:
            continue
        if p != r:
            A[[r, p]] = A[[p, r]]
        inv = field.inv(A[r, c])
        for j in range(c, m):
            A[r, j] = A[r, j] * inv
        for i in range(n):
            if i != r and A[i, c]:
                f = A[i, c]
                for j in range(c, m):
                    A[i, j] = A[i, j] - f * A[r, j]
        pivots.append(c)
        r += 1
    return A, pivots


def mat_rank_kernel(M, field=None):
    """Rank and a kernel basis (as columns) of a matrix over a field."""
    field = field or ring_of_matrix(M)
    if not field.is_field:
        raise NotAField(f"rank/kernel needs field entries, got {field!r}; "
                        "specialize polynomial matrices first")
    n, m = M.shape
    R, pivots = rref(M, field)
    free = [c for c in range(m) if c not in pivots]
    K = zeros(field, m, len(free))
    for k, fcol in enumerate(free):
        K[fcol, k] = field.one
        for r, pcol in enumerate(pivots):
            K[pcol, k] = -R[r, fcol]
    return len(pivots), K


def rank(M, field=None):
    return mat_rank_kernel(M, field)[0]


def solve(A, B, field=None):
    """Solve ``A X = B`` over a field (raises if inconsistent)."""
    field = field or ring_of_matrix(A)
    n, m = A.shape
    aug = np.hstack([coerce(field, A), coerce(field, B)])
    R, pivots = rref(aug, field)
    if any(p >= m for p in pivots):
        raise ValueError("inconsistent linear system")
    X = zeros(field, m, B.shape[1])
    for r, pcol in enumerate(pivots):
        for k in range(B.shape[1]):
            X[pcol, k] = R[r, m + k]
    return X


def field_inverse(M, field=None):
    field = field or ring_of_matrix(M)
    n = M.shape[0]
    if rank(M, field) != n:
        raise NotAUnit("singular matrix")
    return solve(M, identity(field, n), field)


def column_basis(M, field=None):
    """Indices of a maximal set of independent columns, chosen greedily
    left to right."""
    field = field or ring_of_matrix(M)
    _, pivots = rref(M, field)
    return pivots


def frac_rank(M, ring=None):
    """Rank over the fraction field, by fraction-free elimination."""
    ring = ring or ring_of_matrix(M)
    if ring.is_field:
        return rank(M, ring)
    if isinstance(ring, LocalRing):
        M, _ = clear_row_denominators(M, ring.poly_ring)
        ring = ring.poly_ring
    A = M.copy()
    n, m = A.shape
    r = 0
    prev = ring.one
    for c in range(m):
        if r == n:
            break
        p = next((i for i in range(r, n) if A[i, c]), None)
        if p is None:
            continue
        if p != r:
            A[[r, p]] = A[[p, r]]
        piv = A[r, c]
        for i in range(r + 1, n):
            for j in range(c + 1, m):
                A[i, j] = ring.exact_div(A[i, j] * piv - A[i, c] * A[r, j], prev)
            A[i, c] = ring.zero
        prev = piv
        r += 1
    return r


# -- local ring ---------------------------------------------------------------


def local_invert(M, ring=None):
    """Inverse of a square matrix over the local ring at the origin.

    Succeeds iff ``det(M)`` has nonzero constant term; the result satisfies
    ``M @ inv == inv @ M == I`` exactly.
    """
    M = np.asarray(M, dtype=object)
    if M.shape[0] != M.shape[1]:
        raise NotSquare(f"inverse of a {M.shape} matrix")
    ring = ring or ring_of_matrix(M)
    if not isinstance(ring, LocalRing):
        if isinstance(ring, PolyRing):
            ring = LocalRing(ring)
            M = coerce(ring, M)
        else:
            return field_inverse(M, ring)
    R = ring.poly_ring
    n = M.shape[0]
    N, dens = clear_row_denominators(M, R)
    d = _bareiss_det(N, R) if n else R.one
    if d.constant_term() == 0:
        raise NotAUnit("determinant vanishes at the origin")
    adj = adjugate(N, R) if n else N
    inv = zeros(ring, n)
    for i in range(n):
        for j in range(n):
            # M^{-1} = N^{-1} diag(dens)
            inv[i, j] = LocalElt(adj[i, j] * dens[j], d)
    return inv


def _clear_lcm(M, R):
    """``(N, d)`` with ``M = N / d``, ``d`` the lcm of the denominators."""
    from .symbridge import poly_gcd
    d = R.one
    for x in M.flat:
        e = x.den
        if e.is_constant():
            continue
        g = poly_gcd([d, e])
        d = d * R.exact_div(e, g)
    N = np.empty(M.shape, dtype=object)
    for idx in np.ndindex(M.shape):
        x = M[idx]
        N[idx] = x.num * R.exact_div(d, x.den)
    return N, d


def local_matmul(*Ms, ring=None):
    """Product of matrices over the local ring, computed on polynomial
    numerators over a common denominator and reduced entrywise.

    Plain ``@`` on local fractions multiplies denominators term by term;
    this keeps them at the lcm."""
    from .symbridge import cancel, poly_gcd
    L = ring or ring_of_matrix(Ms[0])
    if not isinstance(L, LocalRing):
        L = LocalRing(L)
    R = L.poly_ring
    num, den = None, R.one
    for M in Ms:
        N, d = _clear_lcm(coerce(L, M), R)
        num = N if num is None else num @ N
        den = den * d
    if not den.is_constant():
        g = poly_gcd(list(num.flat) + [den])
        if g is not None and not g.is_constant():
            num = np.array([[R.exact_div(x, g) for x in row] for row in num], dtype=object)
            den = R.exact_div(den, g)
    out = np.empty(num.shape, dtype=object)
    for idx in np.ndindex(num.shape):
        out[idx] = cancel(LocalElt(num[idx], den))
    return out


def fraction_free_solve(A, B, ring=None):
    """Fraction-free Gauss-Jordan on ``[A | B]`` over an integral domain.

    Returns ``(d, X)`` with ``A @ X == d * B`` and ``d = det(A)``; raises
    :class:`NotAUnit` if ``A`` is singular.
    """
    ring = ring or ring_of_matrix(A)
    n = A.shape[0]
    W = np.hstack([A, B]).copy()
    m = W.shape[1]
    prev = ring.one
    sign = 1
    for k in range(n):
        if not W[k, k]:
            p = next((i for i in range(k + 1, n) if W[i, k]), None)
            if p is None:
                raise NotAUnit("singular system")
            W[[k, p]] = W[[p, k]]
            sign = -sign
        piv = W[k, k]
        for i in range(n):
            if i == k:
                continue
            a = W[i, k]
            for j in range(m):
                if j != k:
                    W[i, j] = ring.exact_div(W[i, j] * piv - a * W[k, j], prev)
            W[i, k] = ring.zero
        prev = piv
    d = W[n - 1, n - 1] if n else ring.one
    # every diagonal entry now equals the last pivot, i.e. sign * det(A)
    X = W[:, n:]
    if sign < 0:
        d = -d
        X = -X
    return d, X


def is_constant_matrix(M):
    return all(not isinstance(x, (Poly, LocalElt)) or
               (x.is_constant() if isinstance(x, Poly) else
                x.num.is_constant() and x.den.is_constant())
               for x in M.flat)
