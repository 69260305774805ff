"""Pairs of Lagrangian submodules: intersections, common complements,
local alternation of the pairing map and the complement-change calculus.

Conventions.  For ``E = im f`` and ``F = im g`` the pairing map is
``lambda = g^T B f`` with ``B = Q + Q^T``; its kernel at a point is
``E(x) cap F(x)``.  In the hyperbolic space ``F + F^*`` the graph
``im(zeta; 1)`` paired against the second summand ``im(0; 1)`` gives
``lambda = zeta``.
"""

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .linalg import (block, coerce, column_basis, evaluate, field_inverse, fraction_free_solve,
                     identity, is_alternating, is_constant_matrix, local_invert, local_matmul, mat_det,
                     mat_rank_kernel, rank, zeros)
from .quadform import (LagSub, NotLagrangian, QuadSpace, SymplecticSpace, graph_subspace,
                       hyperbolic, is_lagrangian, summand)
from .rings import LocalElt, LocalRing, PolyRing, RingMismatch, base_field


class ParityViolation(ValueError):
    pass


class NoCommonComplement(ValueError):
    pass


@dataclass
class PairData:
    ambient: object
    E: LagSub
    F: LagSub

    def __post_init__(self):
        for L in (self.E, self.F):
            if L.gens.shape[0] != self.ambient.rank:
                raise RingMismatch("generator matrix does not live in the ambient")
            if L.parent is None:
                L.parent = self.ambient

    @property
    def n(self):
        return self.ambient.n

    @property
    def ring(self):
        return self.ambient.ring

    def swapped(self):
        return PairData(self.ambient, self.F, self.E)


@dataclass
class ComplementWitness:
    """A Lagrangian ``M`` with the rank certificates ``rank[E|M]`` and
    ``rank[F|M]`` (both ``2n``) at ``point``."""

    M: LagSub
    rank_E: int
    rank_F: int
    point: tuple = field(default=())

    @property
    def valid(self):
        n2 = self.M.gens.shape[0]
        return self.rank_E == n2 and self.rank_F == n2


def graph_pair(zeta, ring=None):
    """``E = im(zeta; 1)``, ``F = im(0; 1)`` in the hyperbolic space, so
    that ``lambda = zeta``."""
    zeta = np.asarray(zeta, dtype=object)
    from .linalg import ring_of_matrix
    ring = ring or ring_of_matrix(zeta)
    n = zeta.shape[0]
    H = hyperbolic(n, ring=ring)
    return PairData(H, graph_subspace(H, zeta, "F*-to-F"), summand(H, "F*"))


def split_pair(psi, phi, ring=None):
    """``E = im(psi; phi)`` against the summand ``im(0; 1)``: ``lambda = psi``."""
    from .linalg import ring_of_matrix
    ring = ring or ring_of_matrix(psi)
    psi, phi = coerce(ring, psi), coerce(ring, phi)
    n = psi.shape[0]
    H = hyperbolic(n, ring=ring)
    return PairData(H, LagSub(np.vstack([psi, phi]), H), summand(H, "F*"))


def symmetric_graph_pair(S, ring=None):
    """Symplectic analogue: ``E = im(1; S)`` (isotropic iff ``S`` is
    symmetric) against ``F = im(1; 0)`` gives ``lambda = S``."""
    from .linalg import ring_of_matrix
    from .quadform import hyperbolic_symplectic
    ring = ring or ring_of_matrix(S)
    S = coerce(ring, S)
    n = S.shape[0]
    W = hyperbolic_symplectic(n, ring=ring)
    I, Z = identity(ring, n), zeros(ring, n)
    return PairData(W, LagSub(np.vstack([I, S]), W), LagSub(np.vstack([I, Z]), W))


# -- pointwise data -------------------------------------------------------------


def _origin(ring):
    if isinstance(ring, (PolyRing, LocalRing)):
        return (0,) * ring.nvars
    return ()


def specialize(M, ring, at=None):
    """Matrix over the base field obtained by evaluating at ``at``
    (default: the origin)."""
    if isinstance(ring, (PolyRing, LocalRing)):
        pt = _origin(ring) if at is None else tuple(at)
        return evaluate(M, pt)
    return M


def lambda_of_pair(P):
    """``g^T B f``."""
    if P.E.parent is not P.ambient or P.F.parent is not P.ambient:
        raise RingMismatch("E and F must live in the pair's ambient")
    return P.F.gens.T @ P.ambient.bilinear() @ P.E.gens


def intersection(P, at=None):
    """``(dim, basis)`` of ``E(x) cap F(x)``, the basis as columns in the
    ambient."""
    K = base_field(P.ring)
    f = specialize(P.E.gens, P.ring, at)
    g = specialize(P.F.gens, P.ring, at)
    rf, rg = rank(f, K), rank(g, K)
    _, ker = mat_rank_kernel(np.hstack([f, -g]), K)
    vecs = f @ ker[:f.shape[1], :] if ker.shape[1] else zeros(K, f.shape[0], 0)
    if vecs.shape[1]:
        vecs = vecs[:, column_basis(vecs, K)]
    dim = rf + rg - rank(np.hstack([f, g]), K)
    return dim, vecs


# -- common complements (over a field) ------------------------------------------


def _q(V, x):
    return x @ V.gram_upper @ x


def _completion(base, cands, K):
    """Columns of ``cands`` extending the columns of ``base`` to a basis of
    their joint span (left-to-right echelon selection)."""
    k = base.shape[1]
    piv = column_basis(np.hstack([base, cands]), K)
    return cands[:, [p - k for p in piv if p >= k]]


def _lagrangian_complement_in(V, Kb, W, B):
    """Greedy hyperbolic-pair construction: given an isotropic basis ``Kb``
    (columns) and vectors ``W`` completing it to a nondegenerate subspace
    in which it is Lagrangian, return an isotropic ``P`` with
    ``b(k_i, p_j) = delta_ij``."""
    ks = [Kb[:, i].copy() for i in range(Kb.shape[1])]
    ws = [W[:, i].copy() for i in range(W.shape[1])]
    out = []
    F = base_field(V.ring)
    b = lambda x, y: x @ B @ y
    while ks:
        k = ks.pop(0)
        j = next((j for j, w in enumerate(ws) if b(k, w) != 0), None)
        if j is None:
            raise NoCommonComplement("bilinear form degenerate on the complement")
        w = ws.pop(j)
        w = w * F.inv(b(k, w))
        w = w - _q(V, w) * k
        out.append(w)
        proj = lambda x: x - b(x, w) * k - b(x, k) * w
        ks = [proj(x) for x in ks]
        ws = [proj(x) for x in ws]
    if not out:
        return zeros(F, V.rank, 0)
    return np.column_stack(out)


def _complement_over_field(V, U, U2):
    F = base_field(V.ring)
    B = V.bilinear()
    n = V.n
    # K = U cap U'
    _, ker = mat_rank_kernel(np.hstack([U, -U2]), F)
    Kb = U @ ker[:n, :] if ker.shape[1] else zeros(F, 2 * n, 0)
    if Kb.shape[1]:
        Kb = Kb[:, column_basis(Kb, F)]
    k = Kb.shape[1]
    if (n - k) % 2:
        raise ParityViolation(f"dim(E cap F) = {k} has the wrong parity for rank {n}")
    f = _completion(Kb, U, F)
    g0 = _completion(Kb, U2, F)
    s = f.shape[1]
    if s:
        G = f.T @ B @ g0
        g = g0 @ field_inverse(G, F)
    else:
        g = g0
    cols = []
    for i in range(0, s, 2):
        cols.append(f[:, i] + g[:, i + 1])
        cols.append(f[:, i + 1] - g[:, i])
    # N = span(f, g); complement P of K inside N^perp
    if s:
        Nmat = np.hstack([f, g])
        _, perp = mat_rank_kernel(Nmat.T @ B, F)
    else:
        perp = identity(F, 2 * n)
    W = _completion(Kb, perp, F)
    Pm = _lagrangian_complement_in(V, Kb, W, B)
    if cols:
        Mm = np.hstack([np.column_stack(cols), Pm])
    else:
        Mm = Pm
    return Mm


def _field_ambient(V, at=None):
    """The ambient specialized at a point, as a space over the base field."""
    K = base_field(V.ring)
    Q = specialize(V.gram_upper, V.ring, at)
    return QuadSpace(coerce(K, Q), V.twist, K)


def certify_complement(P, M, at=None):
    K = base_field(P.ring)
    m = specialize(M.gens if isinstance(M, LagSub) else M, P.ring, at)
    f = specialize(P.E.gens, P.ring, at)
    g = specialize(P.F.gens, P.ring, at)
    rE = rank(np.hstack([f, m]), K)
    rF = rank(np.hstack([g, m]), K)
    pt = _origin(P.ring) if at is None else tuple(at)
    Mg = M if isinstance(M, LagSub) else LagSub(coerce(P.ring, M), P.ambient)
    return ComplementWitness(Mg, rE, rF, pt)


def common_complement(P, at=None):
    """Common Lagrangian complement of ``E`` and ``F`` at a point, extended
    as a constant submodule.  Follows the explicit construction: split off
    the part of ``E + F`` on which ``b`` is perfect, pair it up, and finish
    with a greedy Lagrangian complement of ``E cap F`` inside the
    orthogonal."""
    if isinstance(P.ambient, SymplecticSpace):
        raise TypeError("common complements are implemented for quadratic ambients")
    V0 = _field_ambient(P.ambient, at)
    K = base_field(P.ring)
    U = coerce(K, specialize(P.E.gens, P.ring, at))
    U2 = coerce(K, specialize(P.F.gens, P.ring, at))
    for L in (U, U2):
        if not is_lagrangian(V0, L):
            raise NotLagrangian("input is not Lagrangian at the point")
    Mm = _complement_over_field(V0, U, U2)
    M = LagSub(coerce(P.ring, Mm), P.ambient)
    w = certify_complement(P, M, at)
    if not (w.valid and V0.is_isotropic(Mm)):
        raise NoCommonComplement("construction failed to certify")  # pragma: no cover
    return w


# -- padding and local alternation ---------------------------------------------


def pad_even(P):
    """``V + O + L`` with ``E + O`` and ``F + L``; ``lambda`` becomes
    ``diag(lambda, 1)``."""
    V, R = P.ambient, P.ring
    n2 = V.rank
    plane = block(R, [[zeros(R, 1), identity(R, 1)], [zeros(R, 1), zeros(R, 1)]])
    Q1 = block(R, [[V.gram_upper, None], [None, plane]])
    V1 = QuadSpace(Q1, V.twist, R)
    if hasattr(V, "F_twists"):
        V1.F_twists = list(V.F_twists) + [0]
    eO = zeros(R, n2 + 2, 1)
    eO[n2, 0] = R.one
    eL = zeros(R, n2 + 2, 1)
    eL[n2 + 1, 0] = R.one
    f1 = np.hstack([np.vstack([P.E.gens, zeros(R, 2, P.E.n)]), eO])
    g1 = np.hstack([np.vstack([P.F.gens, zeros(R, 2, P.F.n)]), eL])
    return PairData(V1, LagSub(f1, V1), LagSub(g1, V1))


def parity_ok(P, at=None):
    dim, _ = intersection(P, at)
    return (P.n - dim) % 2 == 0


@dataclass
class LocalAlternation:
    """``zeta = lambda iota`` and a polynomial matrix congruent to ``zeta``
    over the local ring, together with the units that make the congruence
    invertible."""

    pair: PairData
    complement: ComplementWitness
    iota: np.ndarray
    zeta: np.ndarray
    zeta_poly: np.ndarray
    inverted: list
    padded: bool = False


def _column_cleared(M, R):
    """Scale columns by unit denominators (the submodule is unchanged)."""
    M = M.copy()
    for j in range(M.shape[1]):
        d = R.one
        for x in M[:, j]:
            if isinstance(x, LocalElt) and not x.den.is_constant():
                d = d * x.den
        for i in range(M.shape[0]):
            x = M[i, j] * d
            M[i, j] = R(x)
    return M


def localize_alternating(P, M=None, pad=True):
    """Find ``iota`` invertible with ``zeta = lambda iota`` alternating.

    ``M`` (a common complement) defaults to :func:`common_complement` at the
    origin.  When ``dim(E cap F)`` has the wrong parity at the origin the
    pair is first padded by a hyperbolic plane (if ``pad``)."""
    padded = False
    if not parity_ok(P):
        if not pad:
            raise ParityViolation("dim(E cap F) and rank(E) differ in parity at the origin")
        P = pad_even(P)
        padded = True
        M = None
    ring = P.ring
    w = common_complement(P) if M is None else (
        M if isinstance(M, ComplementWitness) else certify_complement(P, M))
    if not w.valid:
        raise ValueError("M is not complementary to E and F at the origin")
    n = P.n
    B = P.ambient.bilinear()
    if isinstance(ring, (PolyRing, LocalRing)):
        R = ring.poly_ring if isinstance(ring, LocalRing) else ring
        f = _column_cleared(P.E.gens, R)
        g = _column_cleared(P.F.gens, R)
        m = _column_cleared(w.M.gens, R)
        B = coerce(R, specialize(B, ring) if is_constant_matrix(B) else B)
    else:
        R = ring
        f, g, m = P.E.gens, P.F.gens, w.M.gens
    gm = np.hstack([g, m])
    N = g.T @ B @ m
    if R.is_field or is_constant_matrix(gm):
        K = base_field(R)
        inv = coerce(R, field_inverse(coerce(K, specialize(gm, R)), K))
        sol = inv @ f
        D = R.one
    else:
        D, sol = fraction_free_solve(gm, f, R)
    Ahat, Chat = sol[:n, :], sol[n:, :]
    zeta_poly = Ahat.T @ N @ Chat
    inverted = []
    if R.is_field:
        L = R
        A, C = Ahat, Chat
        iota = field_inverse(A, R)
        zeta = N @ C @ iota
    else:
        L = LocalRing(R)
        detA = mat_det(Ahat, R)
        for d in (D, detA):
            if not d.is_constant():
                inverted.append(d)
        Dl = L(D)
        A = coerce(L, Ahat) * (L.one / Dl)
        C = coerce(L, Chat) * (L.one / Dl)
        iota = local_invert(A)
        zeta = coerce(L, N) @ C @ iota
    return LocalAlternation(P, w, iota, zeta, zeta_poly, inverted, padded)


# -- the complement-change calculus ---------------------------------------------


def _local(M):
    from .linalg import ring_of_matrix
    R = ring_of_matrix(M)
    if isinstance(R, PolyRing):
        return coerce(LocalRing(R), M), LocalRing(R)
    return M, R


def _mm(L, *Ms):
    if L.is_field:
        out = Ms[0]
        for M in Ms[1:]:
            out = out @ M
        return out
    return local_matmul(*Ms, ring=L)


def _u(zeta, h):
    zeta, L = _local(zeta)
    h = coerce(L, h)
    n = zeta.shape[0]
    return zeta, h, identity(L, n) - _mm(L, h, zeta), L


def complement_transform(zeta, h):
    """``zeta u^{-1}`` with ``u = 1 - h zeta``; the identity
    ``zeta u^{-1} = (u^{-1})^T (zeta - zeta h zeta) u^{-1}`` is checked."""
    if not (is_alternating(zeta) and is_alternating(h)):
        raise ValueError("zeta and h must be alternating")
    zeta, h, u, L = _u(zeta, h)
    ui = local_invert(u) if not L.is_field else field_inverse(u, L)
    out = _mm(L, zeta, ui)
    other = _mm(L, ui.T, zeta - _mm(L, zeta, h, zeta), ui)
    assert all(a == b for a, b in zip(out.flat, other.flat))
    assert is_alternating(out)
    return out


def homotopy_involution(zeta, h):
    """``(zeta u, -u^{-1} h (u^T)^{-1})``; applying it twice is the
    identity."""
    zeta, h, u, L = _u(zeta, h)
    ui = local_invert(u) if not L.is_field else field_inverse(u, L)
    z2 = _mm(L, zeta, u)
    h2 = -_mm(L, ui, h, ui.T)
    return z2, h2


# -- finite fields: exhaustive data ---------------------------------------------


def _rref_key(M, K):
    from .linalg import rref
    R, piv = rref(M, K)
    return tuple(tuple(int(x) if not hasattr(x, "v") else x.v for x in R[i, :])
                 for i in range(len(piv)))


def all_lagrangians(V):
    """Every Lagrangian subspace of a small quadratic space over a prime
    field, as ``2n x n`` matrices (exhaustive, desk scale only)."""
    K = V.ring
    n2, n = V.rank, V.n
    seen = {}
    vectors = [np.array([K(c) for c in v], dtype=object)
               for v in product(range(K.p), repeat=n2) if any(v)]
    for combo in product(vectors, repeat=n):
        M = np.column_stack(combo)
        if rank(M, K) != n or not V.is_isotropic(M):
            continue
        key = _rref_key(M.T, K)
        if key not in seen:
            seen[key] = M
    return list(seen.values())


def _complementary(A, B, K):
    return rank(np.hstack([A, B]), K) == A.shape[0]


def find_triple_without_complement(V):
    """Search for three Lagrangians, pairwise with intersection dimension
    congruent to ``n`` mod 2, admitting no common complement.

    Returns ``(triple, lagrangians)``; ``triple`` is ``None`` if none
    exists."""
    K = V.ring
    n = V.n
    lags = all_lagrangians(V)

    def dim_cap(A, B):
        return 2 * n - rank(np.hstack([A, B]), K)

    from itertools import combinations
    for a, b, c in combinations(range(len(lags)), 3):
        T = (lags[a], lags[b], lags[c])
        if any((n - dim_cap(X, Y)) % 2 for X, Y in ((T[0], T[1]), (T[0], T[2]), (T[1], T[2]))):
            continue
        if not any(all(_complementary(X, M, K) for X in T) for M in lags):
            return T, lags
    return None, lags
