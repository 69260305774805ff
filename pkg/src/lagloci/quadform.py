"""Twisted quadratic (and symplectic) spaces and their Lagrangian submodules.

A quadratic form is stored by an upper-triangular matrix ``Q`` with
``q(x) = x^T Q x``; the associated bilinear form is ``B = Q + Q^T``.
Keeping ``Q`` rather than ``B`` is what makes characteristic 2 work: a
subspace spanned by the columns of ``M`` is totally isotropic for ``q``
exactly when ``M^T Q M`` is alternating.
"""

from dataclasses import dataclass, field

import numpy as np

from .linalg import (at_origin, block, coerce, evaluate, identity, is_alternating,
                     local_invert, mat_det, rank, ring_of_matrix, zeros)
from .rings import LocalRing, NotAUnit, PolyRing, base_field


class NotLagrangian(ValueError):
    pass


class NonAlternatingGraph(NotLagrangian):
    pass


class NotComplementary(ValueError):
    pass


class DegenerateForm(ValueError):
    pass


def upper_representative(Q):
    """Upper-triangular matrix defining the same quadratic form as ``Q``."""
    n = Q.shape[0]
    U = Q.copy()
    for i in range(n):
        for j in range(i):
            U[j, i] = U[j, i] + U[i, j]
            U[i, j] = U[i, j] * 0
    return U


@dataclass
class QuadSpace:
    """Free module of rank ``2n`` with an ``L``-valued quadratic form.

    ``twist`` is the degree of the value line bundle ``L``.
    """

    gram_upper: np.ndarray
    twist: int = 0
    ring: object = None

    def __post_init__(self):
        if self.ring is None:
            self.ring = ring_of_matrix(self.gram_upper)
        self.gram_upper = upper_representative(coerce(self.ring, self.gram_upper))
        if self.gram_upper.shape[0] % 2:
            raise ValueError("quadratic spaces here have even rank")

    @property
    def rank(self):
        return self.gram_upper.shape[0]

    @property
    def n(self):
        return self.rank // 2

    @property
    def kind(self):
        return "orthogonal"

    def bilinear(self):
        return bilinear_of_quadratic(self)

    def q(self, x):
        x = np.asarray(x, dtype=object)
        return x @ self.gram_upper @ x

    def is_nonsingular(self):
        B = at_origin(self.bilinear())
        return rank(B, base_field(self.ring)) == self.rank

    def isotropy_matrix(self, M):
        """``M^T Q M``: alternating iff the columns span a q-isotropic
        submodule."""
        return M.T @ self.gram_upper @ M

    def is_isotropic(self, M):
        return is_alternating(self.isotropy_matrix(M))


@dataclass
class SymplecticSpace:
    """Free module of rank ``2n`` with an alternating ``L``-valued form."""

    omega: np.ndarray
    twist: int = 0
    ring: object = None

    def __post_init__(self):
        if self.ring is None:
            self.ring = ring_of_matrix(self.omega)
        self.omega = coerce(self.ring, self.omega)
        if not is_alternating(self.omega):
            raise DegenerateForm("symplectic Gram matrix must be alternating")

    @property
    def rank(self):
        return self.omega.shape[0]

    @property
    def n(self):
        return self.rank // 2

    @property
    def kind(self):
        return "symplectic"

    def bilinear(self):
        return self.omega

    def is_nonsingular(self):
        return rank(at_origin(self.omega), base_field(self.ring)) == self.rank

    def isotropy_matrix(self, M):
        return M.T @ self.omega @ M

    def is_isotropic(self, M):
        return all(not x for x in self.isotropy_matrix(M).flat)


@dataclass
class LagSub:
    """Lagrangian submodule spanned by the columns of a ``2n x n`` matrix."""

    gens: np.ndarray
    parent: object = field(repr=False, default=None)

    @property
    def n(self):
        return self.gens.shape[1]


def bilinear_of_quadratic(V):
    """``B = Q + Q^T``, i.e. ``b(x, y) = q(x + y) - q(x) - q(y)``."""
    Q = V.gram_upper if isinstance(V, QuadSpace) else np.asarray(V, dtype=object)
    return Q + Q.T


def hyperbolic(n, twist=0, F_twists=None, ring=None):
    """``F + F^*(L)`` with ``q_h(e + a) = a(e)``: ``Q = [[0, I], [0, 0]]``.

    ``F_twists`` are recorded for graded bookkeeping only.
    """
    from .rings import QQ
    ring = ring or QQ
    if F_twists is not None and len(F_twists) != n:
        raise ValueError("need one twist per summand of F")
    Q = block(ring, [[zeros(ring, n), identity(ring, n)],
                     [zeros(ring, n), zeros(ring, n)]])
    V = QuadSpace(Q, twist, ring)
    V.F_twists = list(F_twists) if F_twists is not None else [0] * n
    return V


def hyperbolic_symplectic(n, twist=0, ring=None):
    """``H + H^*(L)`` with ``omega = [[0, I], [-I, 0]]``."""
    from .rings import QQ
    ring = ring or QQ
    Om = block(ring, [[zeros(ring, n), identity(ring, n)],
                      [-identity(ring, n), zeros(ring, n)]])
    return SymplecticSpace(Om, twist, ring)


def summand(V, which):
    """Coordinate summand ``"F"`` (first ``n`` coordinates) or ``"F*"``."""
    n, R = V.n, V.ring
    if which == "F":
        M = block(R, [[identity(R, n)], [zeros(R, n)]])
    elif which in ("F*", "Fstar"):
        M = block(R, [[zeros(R, n)], [identity(R, n)]])
    else:
        raise ValueError(f"unknown summand {which!r}")
    return LagSub(M, V)


def _rank_at(M, ring, at=None):
    F = base_field(ring)
    if isinstance(ring, (PolyRing, LocalRing)):
        pt = at if at is not None else [0] * ring.nvars
        return rank(evaluate(M, pt), F)
    return rank(M, F)


def is_lagrangian(V, M, at=None):
    """Columns independent at ``at`` (default: the origin) and totally
    isotropic.  In characteristic 2 this is stronger than
    ``b``-isotropy."""
    M = M.gens if isinstance(M, LagSub) else M
    if M.shape != (V.rank, V.n):
        raise ValueError(f"expected a {V.rank}x{V.n} generator matrix, got {M.shape}")
    M = coerce(V.ring, M)
    return _rank_at(M, V.ring, at) == V.n and V.is_isotropic(M)


def lagsub(V, M, at=None):
    """Validated :class:`LagSub`."""
    M = coerce(V.ring, M)
    if not is_lagrangian(V, M, at):
        raise NotLagrangian("generators do not span a Lagrangian submodule")
    return LagSub(M, V)


def graph_subspace(V, zeta, direction="F-to-F*"):
    """Graph of ``zeta``: ``im(1; zeta)`` for ``F -> F^*(L)`` or
    ``im(zeta; 1)`` for ``F^*(L) -> F``.  Lagrangian iff ``zeta`` is
    alternating."""
    R = V.ring
    zeta = coerce(R, zeta)
    n = zeta.shape[0]
    if V.n != n:
        raise ValueError("graph map size does not match the ambient")
    if not is_alternating(zeta):
        raise NonAlternatingGraph("graph of a non-alternating map is not Lagrangian")
    if direction == "F-to-F*":
        M = block(R, [[identity(R, n)], [zeta]])
    elif direction == "F*-to-F":
        M = block(R, [[zeta], [identity(R, n)]])
    else:
        raise ValueError(f"unknown direction {direction!r}")
    return LagSub(M, V)


def _invert(M, ring):
    if ring.is_field:
        from .linalg import field_inverse
        return field_inverse(M, ring)
    return local_invert(M)


def isometry_to_hyperbolic(V, F, M):
    """Isometry ``V -> F + F^*(L)`` that is the identity on ``F`` and sends
    the complement ``M`` onto the second summand, identified with
    ``F^*(L)`` through ``N = g^T B m``."""
    g = F.gens if isinstance(F, LagSub) else F
    m = M.gens if isinstance(M, LagSub) else M
    R = V.ring
    n = V.n
    basis = np.hstack([g, m])
    if _rank_at(basis, R) < 2 * n:
        raise NotComplementary("F and M do not span the ambient")
    N = g.T @ V.bilinear() @ m
    work = R
    if isinstance(R, PolyRing):
        work = LocalRing(R)
        basis, N = coerce(work, basis), coerce(work, N)
    inv = _invert(basis, work)
    D = block(work, [[identity(work, n), None], [None, N]])
    return D @ inv


def hyperbolic_doubling(V, E, F):
    """Embed ``E + F`` as a Lagrangian of ``V + V^*(L)`` via
    ``[[f, g], [a f, -a^T g]]`` where ``a`` is the stored upper-triangular
    lift of ``q``.  Returns the hyperbolic space of rank ``4n`` and the
    Lagrangian of rank ``2n``."""
    R = V.ring
    B = V.bilinear()
    d = mat_det(at_origin(B), base_field(R))
    if d == 0:
        raise DegenerateForm("bilinear form is not invertible; cannot double")
    f = E.gens if isinstance(E, LagSub) else E
    g = F.gens if isinstance(F, LagSub) else F
    a = V.gram_upper
    M = block(R, [[f, g], [a @ f, -(a.T @ g)]])
    H = hyperbolic(V.rank, V.twist, ring=R)
    return H, LagSub(M, H)


def forms_equal(Q1, Q2):
    """Quadratic forms agree iff their representatives differ by an
    alternating matrix."""
    return is_alternating(Q1 - Q2)


def is_invertible(M, ring):
    if ring.is_field:
        return mat_det(M, ring) != 0
    try:
        local_invert(M)
        return True
    except NotAUnit:
        return False
