"""Scheme structure on Lagrangian degeneracy loci.

``Z_m(E, F)`` is cut out by the Pfaffians of order ``rk(E) - m + 2`` of a
local alternating representative ``zeta = lambda iota`` of the pairing map.
The ideal is computed from a polynomial matrix congruent to ``zeta`` over
the local ring, so it lives in ``R[1/d]`` for the recorded unit ``d``.
"""

import random
from dataclasses import dataclass, field

import numpy as np

from .ideals import Ideal, ideal_codim, ideal_equal
from .linalg import minors
from .pairs import ParityViolation, certify_complement, intersection, localize_alternating
from .pfaffian import sub_pfaffians, submaximal_pfaffian_vector
from .quadform import SymplecticSpace
from .rings import LocalElt, LocalRing, NotAUnit, PolyRing


@dataclass
class DegeneracyResult:
    m: int
    ideal: Ideal
    zeta_used: np.ndarray
    iota_used: np.ndarray
    kernel_line: object = None
    order: int = 0
    padded: bool = False
    zeta_poly: np.ndarray = field(default=None, repr=False)
    local: object = field(default=None, repr=False)


def _poly_ring(ring):
    if isinstance(ring, LocalRing):
        return ring.poly_ring
    if isinstance(ring, PolyRing):
        return ring
    raise TypeError(f"degeneracy ideals need polynomial coefficients, got {ring!r}")


def pfaffian_order(n, m):
    return n - m + 2


def degeneracy_ideal(P, m, M=None, kernel=True):
    """Ideal of ``Z_m(E, F)`` near the origin.

    The pair is padded by a hyperbolic plane when ``dim(E cap F)`` and
    ``rk(E)`` differ in parity; ``m`` must then have the parity of the
    (padded) rank."""
    R = _poly_ring(P.ring)
    la = localize_alternating(P, M)
    n = la.pair.n
    if (n - m) % 2:
        raise ParityViolation(f"m = {m} and rank {n} differ in parity; Z_{m} = Z_{m + 1}")
    order = pfaffian_order(n, m)
    if order <= 0:
        I = Ideal([R.one], R)
    else:
        gens = sub_pfaffians(la.zeta_poly, order, R) if order <= n else []
        I = Ideal(gens, R, la.inverted)
    line = None
    if kernel and m == 3 and n % 2 == 1 and not I.is_zero():
        codim, unit = ideal_codim(I, with_flag=True)
        if codim == 3 and not unit:
            line = submaximal_pfaffian_vector(la.zeta_poly, R)
    return DegeneracyResult(m, I, la.zeta, la.iota, line, order, la.padded, la.zeta_poly, la)


def _vanishes(I, point):
    return all(g.evaluate(point) == 0 for g in I.gens)


def sample_points(ring, count, seed=0, box=3):
    rng = random.Random(seed)
    K = ring.field
    pts = []
    for _ in range(count):
        if hasattr(K, "p"):
            pts.append(tuple(K(rng.randrange(K.p)) for _ in range(ring.nvars)))
        else:
            pts.append(tuple(K(rng.randint(-box, box)) for _ in range(ring.nvars)))
    return pts


def check_vanishing(P, result, samples=25, seed=0, box=3, points=None):
    """Compare ``V(ideal)`` with ``{x : dim(E(x) cap F(x)) >= m}`` at sampled
    points where the local chart is valid.

    Returns ``(checked, mismatches)``; points where an inverted unit
    vanishes or the complement degenerates are skipped."""
    R = _poly_ring(P.ring)
    la = result.local
    pts = list(points) if points is not None else sample_points(R, samples, seed, box)
    # make sure the origin is always part of the sample
    pts = [tuple(R.field(0) for _ in range(R.nvars))] + pts
    checked, bad = 0, []
    for x in pts:
        if any(d.evaluate(x) == 0 for d in result.ideal.inverted):
            continue
        try:
            if la is not None and not certify_complement(la.pair, la.complement.M, x).valid:
                continue
            dim, _ = intersection(P, x)
        except NotAUnit:
            continue
        checked += 1
        if _vanishes(result.ideal, x) != (dim >= result.m):
            bad.append((x, dim))
    return checked, bad


def check_complement_independence(P, m, M1, M2):
    """The ideal does not depend on the chosen common complement."""
    r1 = degeneracy_ideal(P, m, M1, kernel=False)
    r2 = degeneracy_ideal(P, m, M2, kernel=False)
    return ideal_equal(r1.ideal, r2.ideal)


def symmetric_degeneracy_ideal(P, m):
    """Symplectic analogue: minors of order ``rk - m + 1`` of the pairing map
    ``g^T omega f``.  No parity constraint on ``m``."""
    if not isinstance(P.ambient, SymplecticSpace):
        raise TypeError("symmetric degeneracy loci need a symplectic ambient")
    R = _poly_ring(P.ring)
    lam = P.F.gens.T @ P.ambient.omega @ P.E.gens
    n = P.n
    order = n - m + 1
    if order <= 0:
        return Ideal([R.one], R)
    if order > n:
        return Ideal([], R)
    gens = minors(lam, order, P.ring)
    inv = [g.den for g in gens if isinstance(g, LocalElt) and not g.den.is_constant()]
    return Ideal(gens, R, inv)
