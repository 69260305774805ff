"""Buchsbaum-Eisenbud complexes and symmetric quasi-isomorphisms.

Graded conventions: ``R(a)`` is written as the twist ``a``; a matrix entry
mapping the summand ``R(a_j)`` of the source to ``R(b_i)`` of the target is
homogeneous of degree ``b_i - a_j``.  A :class:`ChainComplex` stores
``twists[k]`` for ``F_k`` and ``maps[k - 1] = d_k : F_k -> F_{k-1}``.

Split pairs ``E = im(psi; phi)`` in ``F + F^*(L)`` with ``F = sum O(f_i)``,
``E = sum O(e_j)`` and ``L = O(l)`` give the ladder

    top     0 -> R(a3) --v--> E --psi--> F --(phi v)^T--> R
    bottom  0 -> R(a3) --phi v--> F^*(L) --(-psi^T)--> E^*(L) --v^T--> R

(all twisted by ``M``), joined by the chain map ``(1, phi, phi^T, 1)``.
"""

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .ideals import Ideal, grade, ideal_codim, ideal_colon, ideal_equal, ideal_square
from .linalg import (adjugate, block, clear_denominators, coerce, evaluate, frac_rank,
                     identity, is_alternating, is_symmetric, is_zero, local_invert, local_matmul,
                     mat_det,
                     mat_equal, minors, rank, ring_of_matrix, rref, zeros)
from .pfaffian import NotAlternating, pfaffian, sub_pfaffians, submaximal_pfaffian_vector
from .rings import QQ, LocalElt, LocalRing, NotAUnit, Poly, PolyRing


class GradeViolation(ValueError):
    pass


class NotSubbundle(ValueError):
    pass


class NotSymmetric(ValueError):
    pass


class TwistParityError(ValueError):
    pass


class NotUnitMultiple(ArithmeticError):
    """det(phi) is not a local unit times Pf(gamma)^2."""


class ZeroDivisorDet(ValueError):
    pass


# -- complexes ------------------------------------------------------------------


@dataclass
class ChainComplex:
    twists: list
    maps: list
    ring: object = None

    def __post_init__(self):
        if len(self.twists) != len(self.maps) + 1:
            raise ValueError("need one twist list per module")
        for k, d in enumerate(self.maps, start=1):
            if d.shape != (len(self.twists[k - 1]), len(self.twists[k])):
                raise ValueError(f"d_{k} has shape {d.shape}, modules have ranks "
                                 f"{len(self.twists[k - 1])} and {len(self.twists[k])}")
        if self.ring is None:
            self.ring = ring_of_matrix(self.maps[0]) if self.maps else QQ

    @property
    def length(self):
        return len(self.maps)

    @property
    def ranks(self):
        return [len(t) for t in self.twists]

    def d(self, k):
        return self.maps[k - 1]

    def is_complex(self):
        return all(is_zero(self.maps[k - 1] @ self.maps[k]) for k in range(1, self.length))

    def degrees_consistent(self):
        """Every nonzero entry is homogeneous of the degree dictated by the
        twists."""
        for k, d in enumerate(self.maps, start=1):
            for (i, j), x in np.ndenumerate(d):
                if not x:
                    continue
                want = self.twists[k - 1][i] - self.twists[k][j]
                if not isinstance(x, Poly):
                    if want != 0:
                        return False
                    continue
                if not x.is_homogeneous() or x.degree() != want:
                    return False
        return True

    def to_json(self):
        from .jsonio import matrix_to_json
        return {"twists": [list(t) for t in self.twists],
                "maps": [matrix_to_json(d) for d in self.maps]}


def koszul_complex(gens, twists=None):
    """Koszul complex of a sequence of 2 or 3 forms (desk scale)."""
    gens = list(gens)
    R = gens[0].ring
    c = len(gens)
    degs = [g.degree() for g in gens] if twists is None else twists
    if c == 1:
        return ChainComplex([[0], [-degs[0]]], [np.array([[gens[0]]], dtype=object)], R)
    if c == 2:
        a, b = gens
        d1 = np.array([[a, b]], dtype=object)
        d2 = np.array([[-b], [a]], dtype=object)
        return ChainComplex([[0], [-degs[0], -degs[1]], [-degs[0] - degs[1]]], [d1, d2], R)
    if c == 3:
        a, b, cc = gens
        z = R.zero
        d1 = np.array([[a, b, cc]], dtype=object)
        d2 = np.array([[-b, -cc, z], [a, z, -cc], [z, a, b]], dtype=object)
        d3 = np.array([[cc], [-b], [a]], dtype=object)
        da, db, dc = degs
        tw = [[0], [-da, -db, -dc], [-da - db, -da - dc, -db - dc], [-da - db - dc]]
        return ChainComplex(tw, [d1, d2, d3], R)
    raise ValueError("Koszul complexes of length <= 3 only")


def _poly_ring(M):
    R = ring_of_matrix(M)
    if isinstance(R, LocalRing):
        return R.poly_ring
    if not isinstance(R, PolyRing):
        raise TypeError(f"need polynomial entries, got {R!r}")
    return R


def check_exactness(C):
    """Buchsbaum-Eisenbud acyclicity criterion: with expected ranks
    ``r_k = rk F_k - r_{k+1}``, each ``d_k`` has rank ``r_k`` and the ideal
    of its ``r_k``-minors has grade ``>= k``."""
    if not C.is_complex():
        return False
    R = C.ring
    L = C.length
    expected = [0] * (L + 2)
    for k in range(L, 0, -1):
        expected[k] = C.ranks[k] - expected[k + 1]
        if expected[k] < 0:
            return False
    for k in range(1, L + 1):
        d = C.d(k)
        r = expected[k]
        if frac_rank(d, R) != r:
            return False
        if r == 0:
            continue
        I = Ideal(minors(d, r, R), R)
        if grade(I) < k:
            return False
    return True


# -- Buchsbaum-Eisenbud ----------------------------------------------------------


def be_complex(A, check_grade=True):
    """``0 -> R(-t) -> F^* -> F -> R`` for an odd alternating ``A`` whose
    submaximal Pfaffians generate an ideal of grade 3."""
    A = np.asarray(A, dtype=object)
    if not is_alternating(A):
        raise NotAlternating("BE complexes need an alternating matrix")
    n = A.shape[0]
    if n % 2 == 0:
        raise ValueError("BE complexes need an odd-size matrix")
    R = _poly_ring(A)
    v = submaximal_pfaffian_vector(A, R)
    if check_grade:
        codim, unit = ideal_codim(Ideal(list(v), R), with_flag=True)
        if unit or codim != 3:
            raise GradeViolation(f"Pfaffian ideal has codim {codim}{' (unit ideal)' if unit else ''}, "
                                 "need 3")
    if any(not p for p in v):
        raise GradeViolation("a submaximal Pfaffian vanishes; cannot grade the complex")
    d = [p.degree() for p in v]
    t = None
    for i in range(n):
        for j in range(i + 1, n):
            a = A[i, j]
            if not a:
                continue
            if not a.is_homogeneous():
                raise ValueError("matrix entries must be homogeneous")
            tij = a.degree() + d[i] + d[j]
            if t is None:
                t = tij
            elif t != tij:
                raise ValueError("entry degrees are not compatible with a grading")
    if t is None:
        raise GradeViolation("zero matrix")
    twists = [[0], [-x for x in d], [-(t - x) for x in d], [-t]]
    d1 = v.reshape(1, n)
    d3 = v.reshape(n, 1)
    return ChainComplex(twists, [d1, A.copy(), d3], R)


def verify_square(lam, Z):
    """Submaximal minors of ``lam`` generate ``Z^2``."""
    lam = np.asarray(lam, dtype=object)
    n = lam.shape[0]
    R = Z.ring
    M = Ideal(minors(lam, n - 1), R)
    return ideal_equal(M, ideal_square(Z))


# -- twists ----------------------------------------------------------------------


def _degree(x):
    if isinstance(x, Poly):
        if not x.is_homogeneous():
            raise ValueError("entries must be homogeneous to infer twists")
        return x.degree()
    return 0


def infer_twists(psi, phi):
    """Solve ``f_i - e_j = deg psi_ij`` and ``l - f_i - e_j = deg phi_ij``
    over the nonzero entries; free unknowns are set to 0, with the twists of
    ``F`` chosen free first."""
    n_f, n_e = psi.shape
    # unknown order: l, e_0.., f_0..; free variables come last in echelon order
    nv = 1 + n_e + n_f
    rows = []
    for (i, j), x in np.ndenumerate(psi):
        if x:
            r = [0] * (nv + 1)
            r[1 + j] = -1
            r[1 + n_e + i] = 1
            r[nv] = _degree(x)
            rows.append(r)
    for (i, j), x in np.ndenumerate(phi):
        if x:
            r = [0] * (nv + 1)
            r[0] = 1
            r[1 + j] = -1
            r[1 + n_e + i] -= 1
            r[nv] = _degree(x)
            rows.append(r)
    if not rows:
        return {"E": [0] * n_e, "F": [0] * n_f, "L": 0}
    M = np.array([[Fraction(x) for x in r] for r in rows], dtype=object)
    Rr, piv = rref(M, QQ)
    if nv in piv:
        raise ValueError("entry degrees admit no consistent grading")
    sol = [Fraction(0)] * nv
    for r, c in enumerate(piv):
        sol[c] = Rr[r, nv]
    if any(s.denominator != 1 for s in sol):
        raise ValueError("entry degrees admit no integral grading")
    sol = [int(s) for s in sol]
    return {"L": sol[0], "E": sol[1:1 + n_e], "F": sol[1 + n_e:]}


def twist_of_M(twists):
    """``deg M`` from ``2 deg M = deg L_{E,F} - deg L`` with
    ``deg L_{E,F} = sum(e) - sum(f)``."""
    s = sum(twists["E"]) - sum(twists["F"]) - twists["L"]
    if s % 2:
        raise TwistParityError(f"2 deg(M) = {s} is odd; no square root over this grading")
    return s // 2


# -- symmetric resolutions -----------------------------------------------------


@dataclass
class SymResolution:
    top: ChainComplex
    bottom: ChainComplex
    chain_map: list
    twists: dict
    psi: np.ndarray = field(repr=False, default=None)
    phi: np.ndarray = field(repr=False, default=None)
    kind: str = "alternating"

    def ladder_commutes(self):
        c = self.chain_map
        for k in range(1, self.top.length + 1):
            lhs = self.bottom.d(k) @ c[k]
            rhs = c[k - 1] @ self.top.d(k)
            if not mat_equal(lhs, rhs):
                return False
        return True

    def bottom_is_twisted_dual(self):
        """``bottom d_k = +- (top d_{L+1-k})^T``, the sign being ``-1`` on
        the middle map of a length-3 ladder."""
        L = self.top.length
        for k in range(1, L + 1):
            sign = -1 if (L == 3 and k == 2) else 1
            if not mat_equal(self.bottom.d(k), sign * self.top.d(L + 1 - k).T):
                return False
        D = self.top.twists[L][0] if L == 3 else self.twists["L"]
        if L == 3:
            return all(self.bottom.twists[k] == [D - a for a in self.top.twists[L - k]]
                       for k in range(L + 1))
        return all(self.bottom.twists[k] == [D - a for a in self.top.twists[L - k]]
                   for k in range(L + 1))

    def to_json(self):
        from .jsonio import matrix_to_json
        return {"kind": self.kind,
                "top": self.top.to_json(), "bottom": self.bottom.to_json(),
                "chain_map": [matrix_to_json(c) for c in self.chain_map],
                "twists": {k: v for k, v in self.twists.items()}}


def _sample_points(R, count, seed):
    rng = random.Random(seed)
    K = R.field
    pts = []
    while len(pts) < count:
        if hasattr(K, "p"):
            x = tuple(K(rng.randrange(K.p)) for _ in range(R.nvars))
        else:
            x = tuple(K(rng.randint(-3, 3)) for _ in range(R.nvars))
        if any(x):
            pts.append(x)
    return pts


def _graded(M):
    return all(not isinstance(x, Poly) or (x.is_homogeneous()) for x in M.flat)


def check_subbundle(frame, samples=5, seed=0):
    """Columns independent at the origin (non-graded input) or at sampled
    nonzero points (graded input, where the origin is the cone point)."""
    R = _poly_ring(frame)
    n = frame.shape[1]
    pts = _sample_points(R, samples, seed)
    if not _graded(frame):
        pts = [tuple(R.field(0) for _ in range(R.nvars))] + pts
    for x in pts:
        if rank(evaluate(frame, x), R.field) < n:
            return False, x
    return True, None


def _primitive(vec, R):
    from .symbridge import poly_gcd
    g = poly_gcd(list(vec))
    if g is None:
        return vec
    return np.array([R.exact_div(p, g) if p else p for p in vec], dtype=object)


def kernel_generator(psi, phi=None):
    """Primitive generator of the kernel of a corank-1 square matrix: the
    submaximal Pfaffians of ``phi^T psi`` (odd size) or a column of the
    adjugate, divided by their gcd."""
    R = _poly_ring(psi)
    n = psi.shape[0]
    cands = []
    if phi is not None and n % 2 == 1:
        mu = phi.T @ psi
        if is_alternating(mu):
            cands.append(submaximal_pfaffian_vector(mu, R))
    adj = adjugate(psi, R)
    cands.extend(adj[:, j] for j in range(n))
    for v in cands:
        if all(not p for p in v):
            continue
        v = _primitive(np.asarray(v, dtype=object), R)
        if is_zero((psi @ v.reshape(n, 1))):
            return v
    raise ValueError("kernel of psi is not generically of rank 1")


def dual_diagram(psi, phi, twists=None, check=True, samples=5, seed=0):
    """Symmetric quasi-isomorphism for a split pair ``(psi; phi)`` with
    ``phi^T psi`` alternating."""
    R = _poly_ring(psi)
    psi, phi = coerce(R, psi), coerce(R, phi)
    n = psi.shape[0]
    mu = phi.T @ psi
    if not is_alternating(mu):
        raise NotAlternating("phi^T psi is not alternating")
    frame = np.vstack([psi, phi])
    ok, x = check_subbundle(frame, samples, seed)
    if not ok:
        raise NotSubbundle(f"columns of (psi; phi) are dependent at {x}")
    v = kernel_generator(psi, phi)
    tw = dict(infer_twists(psi, phi) if twists is None else twists)
    mdeg = twist_of_M(tw)
    e, f, l = tw["E"], tw["F"], tw["L"]
    a3 = l + mdeg
    D = a3 + mdeg
    top_tw = [[0], [x + mdeg for x in f], [x + mdeg for x in e], [D]]
    bot_tw = [[D - a for a in top_tw[3 - k]] for k in range(4)]
    phv = phi @ v.reshape(n, 1)
    top = ChainComplex(top_tw, [phv.T.copy(), psi, v.reshape(n, 1)], R)
    bottom = ChainComplex(bot_tw, [v.reshape(1, n), -psi.T, phv], R)
    one = identity(R, 1)
    cmap = [one, phi.T.copy(), phi, one]
    twd = {"E": list(e), "F": list(f), "L": l, "M": mdeg, "L_EF": sum(e) - sum(f)}
    S = SymResolution(top, bottom, cmap, twd, psi, phi, "alternating")
    if check:
        if not (top.is_complex() and bottom.is_complex()):
            raise AssertionError("d o d != 0")  # pragma: no cover
        if not S.ladder_commutes():
            raise AssertionError("ladder does not commute")  # pragma: no cover
        if not S.bottom_is_twisted_dual():
            raise AssertionError("bottom row is not the twisted dual")  # pragma: no cover
        if not top.degrees_consistent():
            raise ValueError("twists do not match the entry degrees")
        if not check_exactness(top):
            raise GradeViolation("top row is not exact")
    return S


def symmetric_codim1_resolution(psi, phi, twists=None, check=True, samples=5, seed=0):
    """Length-1 ladder ``G --psi--> H`` over ``H^*(L) --psi^T--> G^*(L)``
    with chain map ``(phi^T, phi)``; ``phi^T psi`` must be symmetric."""
    R = _poly_ring(psi)
    psi, phi = coerce(R, psi), coerce(R, phi)
    mu = phi.T @ psi
    if not is_symmetric(mu):
        raise NotSymmetric("phi^T psi is not symmetric")
    frame = np.vstack([psi, phi])
    ok, x = check_subbundle(frame, samples, seed)
    if not ok:
        raise NotSubbundle(f"columns of (psi; phi) are dependent at {x}")
    tw = dict(infer_twists(psi, phi) if twists is None else twists)
    g, h, l = tw["E"], tw["F"], tw["L"]
    top = ChainComplex([list(h), list(g)], [psi], R)
    bottom = ChainComplex([[l - a for a in g], [l - a for a in h]], [psi.T.copy()], R)
    S = SymResolution(top, bottom, [phi.T.copy(), phi], {"G": list(g), "H": list(h), "L": l},
                      psi, phi, "symmetric")
    if check:
        if not S.ladder_commutes():
            raise AssertionError("ladder does not commute")  # pragma: no cover
        # (psi; phi) is Lagrangian for omega = [[0, 1], [-1, 0]]
        H = psi.shape[0]
        Om = block(R, [[zeros(R, H), identity(R, H)], [-identity(R, H), zeros(R, H)]])
        if not is_zero(frame.T @ Om @ frame):
            raise AssertionError("not isotropic")  # pragma: no cover
        if not top.degrees_consistent():
            raise ValueError("twists do not match the entry degrees")
        if not check_exactness(top):
            raise GradeViolation("psi is not injective")
    return S


# -- local equations ----------------------------------------------------------------


def _to_local(M):
    R = ring_of_matrix(M)
    L = R if isinstance(R, LocalRing) else LocalRing(R)
    return coerce(L, M), L


def homotopy_symmetrize(psi, phi, h):
    """``mu = phi^T psi + psi^T h psi = (phi - h psi)^T psi``."""
    if not is_alternating(h):
        raise NotAlternating("h must be alternating")
    d = mat_det(phi - h @ psi)
    unit = d.constant_term() != 0 if isinstance(d, Poly) else (
        d.num.constant_term() != 0 if isinstance(d, LocalElt) else d != 0)
    if not unit:
        raise NotAUnit("phi - h psi is not invertible at the origin")
    mu = phi.T @ psi + psi.T @ h @ psi
    if not is_alternating(mu):
        raise NotAlternating("phi^T psi is not alternating")
    return mu


def split_homotopy(psi, phi):
    """Alternating ``h`` with ``M = im(1; h)`` a common complement of
    ``im(psi; phi)`` and ``im(0; 1)`` at the origin."""
    from .linalg import field_inverse
    from .pairs import common_complement, specialize, split_pair
    P = split_pair(psi, phi)
    w = common_complement(P)
    K = P.ring if P.ring.is_field else P.ring.field
    n = P.n
    M = coerce(K, specialize(w.M.gens, P.ring))
    h = M[n:, :] @ field_inverse(M[:n, :], K)
    return coerce(P.ring, h)


def strategy_one_ideal(psi, phi, m=3, h=None):
    """Pfaffian ideal of ``mu`` (order ``n - m + 2``), localized at
    ``det(phi - h psi)``."""
    R = _poly_ring(psi)
    if h is None:
        h = split_homotopy(psi, phi)
    mu = homotopy_symmetrize(psi, phi, h)
    n = psi.shape[0]
    d = mat_det(phi - h @ psi)
    order = n - m + 2
    inv = [d] if isinstance(d, Poly) and not d.is_constant() else []
    return Ideal(sub_pfaffians(mu, order, R), R, inv), mu, h


def _cancel_all(M):
    from .symbridge import cancel
    for idx in np.ndindex(M.shape):
        M[idx] = cancel(M[idx])
    return M


def _cancel_row(v):
    from .symbridge import cancel
    return np.array([cancel(x) for x in v], dtype=object)


@dataclass
class StandardForm:
    P: np.ndarray
    Q: np.ndarray
    beta: np.ndarray
    gamma: np.ndarray

    def __iter__(self):
        return iter((self.P, self.Q, self.beta, self.gamma))


def standard_local_form(psi, phi):
    """``(P, Q, beta, gamma)`` with ``Q^-1 psi P = diag(beta, 1)`` and
    ``Q^T phi P = diag(1, gamma)``, ``beta`` and ``gamma`` alternating.

    Pivots are units of the local ring (constants preferred); the last step
    uses ``Q = [[1, -psi21^T gamma], [0, 1]]`` and
    ``P = [[1, 0], [-psi21, 1]]``."""
    psi, L = _to_local(psi)
    phi = coerce(L, phi)
    n = psi.shape[0]
    if not is_alternating(phi.T @ psi):
        raise NotAlternating("phi^T psi is not alternating")
    K = L.field
    origin = (0,) * L.nvars
    if rank(evaluate(np.vstack([psi, phi]), origin), K) < n:
        raise NotSubbundle("columns of (psi; phi) are dependent modulo the maximal ideal")
    W = phi.copy()
    Lrow = identity(L, n)   # row operations: Lrow phi Pc = diag(1, delta)
    Qinv = identity(L, n)   # (Lrow^-1)^T
    Pc = identity(L, n)
    r = 0
    while r < n:
        best = None
        for i in range(r, n):
            for j in range(r, n):
                x = W[i, j]
                if x and x.is_unit():
                    const = x.num.is_constant() and x.den.is_constant()
                    if best is None or (const and not best[2]):
                        best = (i, j, const)
            if best and best[2]:
                break
        if best is None:
            break
        i, j, _ = best
        if i != r:
            W[[r, i]] = W[[i, r]]
            Lrow[[r, i]] = Lrow[[i, r]]
            Qinv[[r, i]] = Qinv[[i, r]]
        if j != r:
            W[:, [r, j]] = W[:, [j, r]]
            Pc[:, [r, j]] = Pc[:, [j, r]]
        c = W[r, r]
        ci = L.inv(c)
        W[r, :] = _cancel_row(W[r, :] * ci)
        Lrow[r, :] = _cancel_row(Lrow[r, :] * ci)
        Qinv[r, :] = _cancel_row(Qinv[r, :] * c)
        for i2 in range(n):
            if i2 != r and W[i2, r]:
                a = W[i2, r]
                W[i2, :] = _cancel_row(W[i2, :] - a * W[r, :])
                Lrow[i2, :] = _cancel_row(Lrow[i2, :] - a * Lrow[r, :])
                Qinv[r, :] = _cancel_row(Qinv[r, :] + a * Qinv[i2, :])
        for j2 in range(n):
            if j2 != r and W[r, j2]:
                a = W[r, j2]
                W[:, j2] = _cancel_row(W[:, j2] - a * W[:, r])
                Pc[:, j2] = _cancel_row(Pc[:, j2] - a * Pc[:, r])
        r += 1
    Q1, P1 = Lrow.T.copy(), Pc
    mm = lambda *Ms: local_matmul(*Ms, ring=L)
    psi1 = mm(Qinv, psi, P1)
    delta = W[r:, r:]
    s = n - r
    if s:
        psi22 = psi1[r:, r:]
        try:
            psi22_inv = _cancel_all(local_invert(psi22))
        except NotAUnit as exc:
            raise NotAUnit("psi22 is not invertible; input is not a subbundle") from exc
        P2 = block(L, [[identity(L, r), None], [None, psi22_inv]]) if r else psi22_inv
        gamma = mm(delta, psi22_inv)
    else:
        P2 = identity(L, n)
        gamma = zeros(L, 0)
    psi2 = mm(psi1, P2)
    psi11 = psi2[:r, :r]
    psi21 = psi2[r:, :r]
    beta = _cancel_all(psi11 + mm(psi21.T, gamma, psi21)) if s else psi11
    if r and s:
        corr = mm(psi21.T, gamma)
        Q3 = block(L, [[identity(L, r), -corr], [None, identity(L, s)]])
        P3 = block(L, [[identity(L, r), None], [-psi21, identity(L, s)]])
        Q3inv = block(L, [[identity(L, r), corr], [None, identity(L, s)]])
    else:
        Q3 = P3 = Q3inv = identity(L, n)
    P = mm(P1, P2, P3)
    Q = mm(Q1, Q3)
    Qi = mm(Q3inv, Qinv)
    # multiply-back checks
    if r and s:
        want = block(L, [[beta, None], [None, identity(L, s)]])
        want2 = block(L, [[identity(L, r), None], [None, gamma]])
    else:
        want = beta if r else identity(L, n)
        want2 = identity(L, n) if r else gamma
    if not mat_equal(mm(Qi, psi, P), want):
        raise AssertionError("Q^-1 psi P is not diag(beta, 1)")  # pragma: no cover
    if not mat_equal(mm(Q.T, phi, P), want2):
        raise AssertionError("Q^T phi P is not diag(1, gamma)")  # pragma: no cover
    if not (is_alternating(beta) and is_alternating(gamma)):
        raise AssertionError("beta or gamma not alternating")  # pragma: no cover
    return StandardForm(P, Q, beta, gamma)


def _is_local_unit_ratio(num, den):
    """``num / den`` (polynomials) is a unit of the local ring."""
    from .symbridge import poly_gcd
    g = poly_gcd([num, den])
    R = num.ring
    a, b = R.exact_div(num, g), R.exact_div(den, g)
    return a.constant_term() != 0 and b.constant_term() != 0


def colon_equations(psi, phi, m=3, form=None, details=False):
    """``(Pf(phi^T psi) : f)`` with ``f = Pf(gamma)`` from the standard local
    form; checks ``det(phi) = unit * f^2``."""
    R = _poly_ring(psi)
    if form is None:
        form = standard_local_form(psi, phi)
    gamma = form.gamma
    L = LocalRing(R)
    f = pfaffian(gamma, L) if gamma.shape[0] else L.one
    dphi = mat_det(coerce(L, phi))
    if not dphi:
        raise ZeroDivisorDet("det(phi) = 0")
    # det(phi) * f.den^2 / (f.num^2 * dphi.den) must be a unit
    if not _is_local_unit_ratio(dphi.num * f.den ** 2, dphi.den * f.num ** 2):
        raise NotUnitMultiple("det(phi) is not a unit multiple of Pf(gamma)^2")
    mu = phi.T @ psi
    n = psi.shape[0]
    muR = coerce(L, mu)
    N, d = clear_denominators(muR, R)
    order = n - m + 2
    inv = [d] if not d.is_constant() else []
    I = Ideal(sub_pfaffians(N, order, R), R, inv)
    out = ideal_colon(I, f)
    if details:
        return out, {"f": f, "det_phi": dphi, "form": form}
    return out


# -- Euler characteristics on projective space -----------------------------------


def binom_poly(x, k):
    """``x (x-1) ... (x-k+1) / k!`` for any integer ``x``."""
    num = 1
    for i in range(k):
        num *= x - i
    return num // math.factorial(k)


def _normalize_virtual(vt):
    if isinstance(vt, dict):
        return [(c, d) for d, c in vt.items()]
    return [(int(c), int(d)) for c, d in vt]


def euler_characteristic(virtual_twists, n, m=0):
    """``chi(F(m))`` on ``P^n`` for ``F = sum c * O(d)`` given as
    ``(c, d)`` pairs: ``sum c * C(n + m + d, n)``."""
    return sum(c * binom_poly(n + m + d, n) for c, d in _normalize_virtual(virtual_twists))


def combine(*vts):
    out = {}
    for vt in vts:
        for c, d in _normalize_virtual(vt):
            out[d] = out.get(d, 0) + c
    return sorted(((c, d) for d, c in out.items() if c), key=lambda cd: -cd[1])


def scale(vt, k):
    return [(k * c, d) for c, d in _normalize_virtual(vt)]


def shift(vt, k):
    return [(c, d + k) for c, d in _normalize_virtual(vt)]


def omega_twists(n, p):
    """``Omega^p`` on ``P^n`` from the truncated Koszul complex."""
    return [((-1) ** (p - i) * math.comb(n + 1, i), -i) for i in range(p + 1)]


def restrict_to_hypersurface(vt, d):
    """``O_S(k) = O(k) - O(k - d)`` for a hypersurface of degree ``d``."""
    return combine(vt, [(-c, k - d) for c, k in _normalize_virtual(vt)])


def threefold_sheaf_twists():
    """Cokernel of ``Omega^3(3) -> W (x) O`` on ``P^5``, ``W`` of rank 10."""
    return combine([(10, 0)], scale(shift(omega_twists(5, 3), 3), -1))


def surface_cotangent_twists(d):
    """``Omega_S`` for a surface ``S`` of degree ``d`` in ``P^3``:
    ``Omega_{P^3}|_S - O_S(-d)``."""
    return combine(restrict_to_hypersurface(omega_twists(3, 1), d),
                   scale(restrict_to_hypersurface([(1, -d)], d), -1))


def parity_obstruction_codim1(n, ell, chi, kind="symmetric"):
    """``True`` when the parity condition fails: for symmetric sheaves
    ``n = 1 mod 4``, for skew-symmetric ones ``n = 3 mod 4``; in both cases
    ``ell`` even and ``chi(F(-ell/2))`` odd."""
    if kind not in ("symmetric", "skew"):
        raise ValueError(f"unknown kind {kind!r}")
    target = 1 if kind == "symmetric" else 3
    return n % 4 == target and ell % 2 == 0 and chi % 2 == 1
