"""Seeded random instances.

Every generator takes a :class:`random.Random` (or a seed) so that runs
are reproducible; the JSON front end :func:`generate_instance` is
byte-for-byte deterministic for a fixed seed.
"""

import random

import numpy as np

from .linalg import block, coerce, field_inverse, identity, rank, zeros
from .quadform import LagSub, hyperbolic
from .rings import QQ, GF, PolyRing, base_field


class UnsupportedKind(ValueError):
    pass


KINDS = ("alternating", "lagrangian-pair", "split-pair", "symmetric")


def _rng(seed):
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_entry(ring, rng, degree=1, bound=3, constant=True, homogeneous=False):
    if ring.is_field:
        return ring.random_element(rng, bound)
    if homogeneous:
        return ring.random_element(rng, degree, bound, homogeneous=True)
    p = ring.random_element(rng, degree, bound)
    if not constant:
        p = p - p.constant_term()
    return p


def random_alternating(ring, n, rng, degree=1, bound=3, constant=True, homogeneous=False):
    rng = _rng(rng)
    A = zeros(ring, n)
    for i in range(n):
        for j in range(i + 1, n):
            a = random_entry(ring, rng, degree, bound, constant, homogeneous)
            A[i, j] = a
            A[j, i] = -a
    return A


def random_symmetric(ring, n, rng, degree=1, bound=3, constant=True, homogeneous=False):
    rng = _rng(rng)
    A = zeros(ring, n)
    for i in range(n):
        for j in range(i, n):
            a = random_entry(ring, rng, degree, bound, constant, homogeneous)
            A[i, j] = a
            A[j, i] = a
    return A


def random_matrix(ring, r, c, rng, degree=1, bound=3, constant=True):
    rng = _rng(rng)
    M = zeros(ring, r, c)
    for idx in np.ndindex(M.shape):
        M[idx] = random_entry(ring, rng, degree, bound, constant)
    return M


def random_invertible(field, n, rng, bound=3):
    rng = _rng(rng)
    while True:
        M = zeros(field, n)
        for idx in np.ndindex(M.shape):
            M[idx] = field.random_element(rng, bound)
        if rank(M, field) == n:
            return M


def random_unimodular(field, n, rng, steps=None):
    """Product of elementary matrices with entries in ``{-1, 0, 1}`` and a
    permutation: invertible with small integral entries and inverse."""
    rng = _rng(rng)
    M = identity(field, n)
    for _ in range(steps if steps is not None else 2 * n):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i != j:
            M[i, :] = M[i, :] + rng.choice((-1, 1)) * M[j, :]
    perm = list(range(n))
    rng.shuffle(perm)
    return M[perm, :]


def random_isometry(field, n, rng, steps=3, swaps=False):
    """Random element of the orthogonal group of the hyperbolic form on
    ``field^{2n}``, built from shears ``[[1, 0], [S, 1]]``,
    ``[[1, S], [0, 1]]`` (``S`` alternating) and ``diag(P, P^-T)``.
    With ``swaps`` a coordinate of ``F`` may be exchanged with its dual,
    which flips the parity of intersection dimensions."""
    rng = _rng(rng)
    I, Z = identity(field, n), zeros(field, n)
    T = identity(field, 2 * n)
    for _ in range(steps):
        S = random_alternating(field, n, rng)
        T = block(field, [[I, Z], [S, I]]) @ T
        S = random_alternating(field, n, rng)
        T = block(field, [[I, S], [Z, I]]) @ T
        P = random_invertible(field, n, rng)
        T = block(field, [[P, Z], [Z, field_inverse(P.T, field)]]) @ T
    if swaps:
        i = rng.randrange(n)
        Sw = identity(field, 2 * n)
        Sw[i, i] = Sw[n + i, n + i] = field.zero
        Sw[i, n + i] = Sw[n + i, i] = field.one
        T = Sw @ T
    return T


def random_field_pair(field, n, rng, parity="consistent"):
    """Two Lagrangians of the hyperbolic space over ``field``.

    ``parity="consistent"`` makes ``dim(E cap F) = n mod 2`` (any even
    corank is possible); ``"violating"`` flips it."""
    from .pairs import PairData
    rng = _rng(rng)
    H = hyperbolic(n, ring=field)
    # F = first summand, E = graph of an alternating map of random even rank
    r = 2 * rng.randint(0, n // 2)
    X = random_matrix(field, r, n, rng)
    J = zeros(field, r)
    for i in range(0, r, 2):
        J[i, i + 1] = field.one
        J[i + 1, i] = -field.one
    S = X.T @ J @ X
    E = np.vstack([identity(field, n), S])
    F = np.vstack([identity(field, n), zeros(field, n)])
    if parity == "violating":
        # exchanging one pair of coordinates on E only changes its family
        Sw = identity(field, 2 * n)
        i = rng.randrange(n)
        Sw[i, i] = Sw[n + i, n + i] = field.zero
        Sw[i, n + i] = Sw[n + i, i] = field.one
        E = Sw @ E
    T = random_isometry(field, n, rng)
    return PairData(H, LagSub(T @ E, H), LagSub(T @ F, H))


def random_polynomial_pair(ring, n, rng, degree=1, constant=True):
    """``E = T im(zeta; 1)``, ``F = T im(0; 1)`` with ``T`` a random
    constant isometry; ``lambda`` is congruent to ``zeta``."""
    from .pairs import PairData
    rng = _rng(rng)
    K = base_field(ring)
    zeta = random_alternating(ring, n, rng, degree, constant=constant)
    T = coerce(ring, random_isometry(K, n, rng))
    H = hyperbolic(n, ring=ring)
    E = T @ np.vstack([zeta, identity(ring, n)])
    F = T @ np.vstack([zeros(ring, n), identity(ring, n)])
    return PairData(H, LagSub(E, H), LagSub(F, H)), zeta


def random_split_pair(ring, n, rng, degree=1):
    """``(psi, phi)`` with ``phi^T psi`` alternating: a random isotropic frame
    ``T (zeta; 1)`` of the hyperbolic space."""
    rng = _rng(rng)
    K = base_field(ring)
    zeta = random_alternating(ring, n, rng, degree)
    T = coerce(ring, random_isometry(K, n, rng))
    frame = T @ np.vstack([zeta, identity(ring, n)])
    return frame[:n, :], frame[n:, :]


def koszul_matrix(ring, names=None):
    """``[[0, x3, x2], [-x3, 0, x1], [-x2, -x1, 0]]`` in the first three
    variables; its submaximal Pfaffians are ``(x1, -x2, x3)``."""
    x1, x2, x3 = ring.gens()[:3]
    z = ring.zero
    from .linalg import matrix
    return matrix(ring, [[z, x3, x2], [-x3, z, x1], [-x2, -x1, z]])


def lambda_beta_instance(seed, n=None, nvars=3, field=QQ, h_degree=1):
    """``(zeta, h)``: alternating, entries of degree <= 1, ``zeta(0) = 0``
    so that ``u = 1 - h zeta`` is a unit.  ``h_degree=0`` makes ``h``
    constant."""
    rng = _rng(seed)
    R = PolyRing(field, [f"x{i + 1}" for i in range(nvars)])
    n = n or rng.randint(2, 5)
    zeta = random_alternating(R, n, rng, 1, bound=2, constant=False)
    if h_degree == 0:
        h = coerce(R, random_alternating(field, n, rng, bound=2))
    else:
        h = random_alternating(R, n, rng, h_degree, bound=2, constant=True)
    return zeta, h


def strategy_instance(seed, field=QQ):
    """Split pair in standard form up to random constant changes of basis:
    ``psi = Q diag(beta, 1) P^-1``, ``phi = Q^-T diag(1, gamma) P^-1`` with
    ``beta`` a Koszul-like 3x3 and ``gamma = [[0, g], [-g, 0]]``."""
    rng = _rng(seed)
    R = PolyRing(field, ["x", "y", "z"])
    x, y, z = R.gens()
    lin = lambda: sum((field(rng.randint(-1, 1)) * v for v in (x, y, z)), R.zero)
    a = [lin() for _ in range(3)]
    while True:
        # keep beta's entries independent so that its Pfaffians cut out the origin
        C = np.array([[p.terms.get(e, field.zero) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
                      for p in a], dtype=object)
        if rank(C, field) == 3:
            break
        a = [lin() for _ in range(3)]
    g = lin()
    while not g:
        g = lin()
    from .linalg import matrix
    zr = R.zero
    beta = matrix(R, [[zr, a[2], a[1]], [-a[2], zr, a[0]], [-a[1], -a[0], zr]])
    gamma = matrix(R, [[zr, g], [-g, zr]])
    P = coerce(R, random_unimodular(field, 5, rng))
    Q = coerce(R, random_unimodular(field, 5, rng))
    Pi = coerce(R, field_inverse(coerce(field, P), field))
    QiT = coerce(R, field_inverse(coerce(field, Q), field)).T
    psi = Q @ block(R, [[beta, None], [None, identity(R, 2)]]) @ Pi
    phi = QiT @ block(R, [[identity(R, 3), None], [None, gamma]]) @ Pi
    return psi, phi, {"beta": beta, "gamma": gamma, "g": g}


def symmetric_instance(seed, field=QQ, n=None):
    """``(psi, phi) = (S P, P)`` with ``S`` symmetric linear and ``P`` a
    random constant invertible matrix, so ``phi^T psi = P^T S P``."""
    rng = _rng(seed)
    R = PolyRing(field, ["x", "y", "z"])
    n = n or rng.randint(1, 3)
    S = random_symmetric(R, n, rng, 1, constant=False, homogeneous=True)
    P = coerce(R, random_invertible(field, n, rng))
    return S @ P, P


# -- JSON front end -------------------------------------------------------------


def _field_of(name):
    if isinstance(name, str):
        if name == "Q":
            return QQ
        if name.startswith("Fp:"):
            return GF(int(name[3:]))
        if name.startswith("F") and name[1:].isdigit():
            return GF(int(name[1:]))
        raise ValueError(f"unknown field {name!r}")
    return name


def generate_instance(kind, size, degree=1, field="Q", seed=0, nvars=3):
    """JSON instance of the given kind; deterministic in ``seed``."""
    from .jsonio import matrix_to_json, pair_to_json, ring_descriptor
    if kind not in KINDS:
        raise UnsupportedKind(f"unknown instance kind {kind!r}; expected one of {KINDS}")
    K = _field_of(field)
    rng = random.Random(seed)
    names = [f"x{i}" for i in range(nvars)]
    R = PolyRing(K, names) if nvars else K
    out = {"kind": kind, "seed": seed, "size": size, "degree": degree,
           "ring": ring_descriptor(R)}
    if kind == "alternating":
        out["matrix"] = matrix_to_json(random_alternating(R, size, rng, degree,
                                                          constant=False, homogeneous=True))
    elif kind == "symmetric":
        out["matrix"] = matrix_to_json(random_symmetric(R, size, rng, degree,
                                                        constant=False, homogeneous=True))
    elif kind == "lagrangian-pair":
        P, _ = random_polynomial_pair(R, size, rng, degree)
        out.update(pair_to_json(P))
    else:
        psi, phi = random_split_pair(R, size, rng, degree)
        out["psi"] = matrix_to_json(psi)
        out["phi"] = matrix_to_json(phi)
    return out
