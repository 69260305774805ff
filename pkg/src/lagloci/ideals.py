"""Ideals in polynomial rings over QQ and GF(p).

A small Buchberger engine (normal selection strategy, product and chain
criteria) provides membership, equality, colon, products and codimension.

An :class:`Ideal` may carry a list of *inverted* polynomials: units of the
local ring that were cleared from denominators.  Such an ideal lives in
``R[1/d]`` (``d`` the product of the inverted elements) and all
comparisons are made there, via the Rabinowitsch trick ``R[t]/(1 - t d)``.
Equality in ``R[1/d]`` implies equality in the local ring at the origin
because ``d`` does not vanish there.
"""

import math
from itertools import combinations

from .rings import LocalElt, LocalRing, Poly, PolyRing, RingMismatch, elimination_key, grevlex_key


class UnsupportedRing(TypeError):
    pass


# -- raw Buchberger on term dicts ----------------------------------------------


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _lead(p, key):
    return max(p, key=key)


def _monic(p, key, field):
    inv = field.inv(p[_lead(p, key)])
    return {e: c * inv for e, c in p.items()}


def _sub_multiple(p, g, m, f):
    """p -= f * x^m * g, in place."""
    for k, v in g.items():
        t = tuple(a + b for a, b in zip(m, k))
        s = p.get(t)
        s = -f * v if s is None else s - f * v
        if s == 0:
            p.pop(t, None)
        else:
            p[t] = s


def _reduce(p, basis, key, full=True):
    """Normal form of ``p`` modulo ``basis`` (list of (lm, monic terms))."""
    p = dict(p)
    r = {}
    while p:
        e = _lead(p, key)
        c = p[e]
        for gm, g in basis:
            if _divides(gm, e):
                _sub_multiple(p, g, tuple(a - b for a, b in zip(e, gm)), c)
                break
        else:
            if not full:
                r.update(p)
                return r
            r[e] = c
            del p[e]
    return r


def _spoly(f, fm, g, gm):
    l = _lcm(fm, gm)
    mf = tuple(a - b for a, b in zip(l, fm))
    mg = tuple(a - b for a, b in zip(l, gm))
    out = {}
    for k, v in f.items():
        out[tuple(a + b for a, b in zip(mf, k))] = v
    for k, v in g.items():
        t = tuple(a + b for a, b in zip(mg, k))
        s = out.get(t)
        s = -v if s is None else s - v
        if s == 0:
            out.pop(t, None)
        else:
            out[t] = s
    return out


def buchberger(polys, field, key=grevlex_key):
    """Reduced Groebner basis of term dicts under the order ``key``."""
    basis = []  # (lm, monic terms)
    pairs = []

    def add(h):
        hm = _lead(h, key)
        h = _monic(h, key, field)
        idx = len(basis)
        basis.append((hm, h))
        for i in range(idx):
            pairs.append((i, idx))

    for p in polys:
        if not p:
            continue
        h = _reduce(p, basis, key)
        if h:
            add(h)

    done = set()
    while pairs:
        # normal strategy: smallest lcm first
        pairs.sort(key=lambda ij: key(_lcm(basis[ij[0]][0], basis[ij[1]][0])))
        i, j = pairs.pop(0)
        done.add((i, j))
        fm, f = basis[i]
        gm, g = basis[j]
        l = _lcm(fm, gm)
        if all(a + b == c for a, b, c in zip(fm, gm, l)):
            continue  # coprime leading monomials
        skip = False
        for k, (km, _) in enumerate(basis):
            if k in (i, j) or not _divides(km, l):
                continue
            a, b = (min(i, k), max(i, k)), (min(j, k), max(j, k))
            if a in done and b in done:
                skip = True
                break
        if skip:
            continue
        h = _reduce(_spoly(f, fm, g, gm), basis, key)
        if h:
            add(h)

    # minimalize and interreduce
    lms = [m for m, _ in basis]
    keep = []
    for i, (m, g) in enumerate(basis):
        if any(j != i and _divides(lms[j], m) and (lms[j] != m or j < i)
               for j in range(len(basis))):
            continue
        keep.append((m, g))
    reduced = []
    for i, (m, g) in enumerate(keep):
        others = [b for j, b in enumerate(keep) if j != i]
        reduced.append((m, _reduce(g, others, key)))
    reduced.sort(key=lambda mg: key(mg[0]))
    return [g for _, g in reduced]


# -- Ideal --------------------------------------------------------------------


def _as_poly(ring, f):
    if isinstance(f, LocalElt):
        return f.num
    return ring(f)


class Ideal:
    """Ideal of a polynomial ring, optionally with some elements inverted."""

    def __init__(self, gens, ring=None, inverted=()):
        gens = list(gens)
        if ring is None:
            if not gens:
                raise ValueError("ring required for an ideal without generators")
            ring = gens[0].ring
        if isinstance(ring, LocalRing):
            ring = ring.poly_ring
        if not isinstance(ring, PolyRing):
            raise UnsupportedRing(f"ideals live in polynomial rings, not {ring!r}")
        self.ring = ring
        self._inverted = []
        inv = []
        for f in gens:
            if isinstance(f, LocalElt):
                # a unit denominator is dropped and remembered
                if not f.den.is_constant():
                    inv.append(f.den)
        self.gens = [p for p in (_as_poly(ring, f) for f in gens) if p]
        for d in list(inverted) + inv:
            d = ring(d)
            if d and not d.is_constant():
                d = d.monic()
            if d.is_constant():
                if d.constant_term() == 0:
                    raise ValueError("cannot invert zero")
                continue
            if all(d != e for e in self.inverted_list()):
                self._inverted.append(d)
        self._gb = None
        self._membership_gb = None

    def inverted_list(self):
        return self._inverted

    @property
    def inverted(self):
        return tuple(self.inverted_list())

    def __repr__(self):
        inv = f", inverting {list(self.inverted)}" if self.inverted else ""
        return f"Ideal({self.gens}{inv})"

    def localized(self, inverted):
        """Same generators, with extra elements inverted."""
        return Ideal(self.gens, self.ring, self.inverted + tuple(inverted))

    # Groebner data --------------------------------------------------------

    def _extended(self):
        """Ring with an extra leading variable ``t`` and the image of the
        Rabinowitsch relation ``1 - t*d``."""
        R = self.ring
        d = R.one
        for x in self.inverted:
            d = d * x
        Rt = PolyRing(R.field, ("_t",) + R.names)
        lift = lambda p: {(0,) + e: c for e, c in p.terms.items()}
        rel = {(0,) * (R.nvars + 1): R.field.one}
        for e, c in d.terms.items():
            t = (1,) + e
            rel[t] = rel.get(t, R.field.zero) - c
        rel = {e: c for e, c in rel.items() if c != 0}
        return Rt, [lift(g) for g in self.gens] + [rel]

    def groebner(self):
        """Reduced Groebner basis (grevlex) of the ideal, contracted to the
        polynomial ring when elements are inverted (i.e. of ``I : d^oo``)."""
        if self._gb is None:
            R = self.ring
            if not self.inverted:
                gb = buchberger([g.terms for g in self.gens], R.field)
            else:
                _, polys = self._extended()
                gb_t = buchberger(polys, R.field, elimination_key(1))
                gb = buchberger([{e[1:]: c for e, c in g.items()}
                                 for g in gb_t if all(e[0] == 0 for e in g)], R.field)
            self._gb = [Poly(R, g) for g in gb]
        return self._gb

    def _membership_basis(self):
        if self._membership_gb is None:
            if not self.inverted:
                self._membership_gb = [(g.lm(), g.terms) for g in self.groebner()]
            else:
                _, polys = self._extended()
                gb = buchberger(polys, self.ring.field)
                self._membership_gb = [(_lead(g, grevlex_key), g) for g in gb]
        return self._membership_gb

    def reduce(self, f):
        """Normal form modulo the Groebner basis of the contracted ideal."""
        f = _as_poly(self.ring, f)
        basis = [(g.lm(), g.terms) for g in self.groebner()]
        return Poly(self.ring, _reduce(f.terms, basis, grevlex_key))

    def contains(self, f):
        f = _as_poly(self.ring, f)
        if not f:
            return True
        if not self.inverted:
            basis = self._membership_basis()
            return not _reduce(f.terms, basis, grevlex_key, full=False)
        basis = self._membership_basis()
        return not _reduce({(0,) + e: c for e, c in f.terms.items()}, basis,
                           grevlex_key, full=False)

    __contains__ = contains

    def is_unit_ideal(self):
        return self.contains(self.ring.one)

    def is_zero(self):
        return not self.gens

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_equal(self, other)

    __hash__ = None

    def to_json(self):
        from .jsonio import poly_to_json
        out = {"gens": [poly_to_json(g) for g in self.gens]}
        if self.inverted:
            out["inverted"] = [poly_to_json(d) for d in self.inverted]
        return out


def _check_same_ring(I, J):
    if I.ring != J.ring:
        raise RingMismatch(f"{I.ring!r} vs {J.ring!r}")


def ideal_member(f, I):
    if isinstance(f, Poly) and f.ring != I.ring:
        raise RingMismatch(f"{f.ring!r} vs {I.ring!r}")
    return I.contains(f)


def groebner(I):
    return I.groebner()


def ideal_contains(I, J):
    """``J`` is contained in ``I`` (in the common localization)."""
    _check_same_ring(I, J)
    big = I.localized(J.inverted) if J.inverted else I
    return all(big.contains(g) for g in J.gens)


def ideal_equal(I, J):
    """Equality of ideals, in ``R[1/d]`` when either side inverts ``d``."""
    _check_same_ring(I, J)
    if I is J:
        return True
    inv = tuple(I.inverted) + tuple(J.inverted)
    I2 = I.localized(J.inverted) if J.inverted else I
    J2 = J.localized(I.inverted) if I.inverted else J
    if not inv:
        return [g.terms for g in I.groebner()] == [g.terms for g in J.groebner()]
    return all(I2.contains(g) for g in J.gens) and all(J2.contains(g) for g in I.gens)


def local_contains(I, f):
    """``f`` lies in the localization of ``I`` at the origin, i.e. some
    ``s`` with ``s(0) != 0`` has ``s f`` in ``I``.  Inverted elements of
    ``I`` are units there and are simply dropped."""
    R = I.ring
    f = _as_poly(R, f)
    base = Ideal(I.gens, R)
    if not f or base.contains(f):
        return True
    colon = ideal_colon(base, f)
    return any(g.constant_term() != 0 for g in colon.gens)


def ideal_equal_local(I, J):
    """Equality of the localizations at the origin."""
    _check_same_ring(I, J)
    return (all(local_contains(I, g) for g in J.gens)
            and all(local_contains(J, g) for g in I.gens))


def ideal_sum(I, J):
    _check_same_ring(I, J)
    return Ideal(I.gens + J.gens, I.ring, I.inverted + J.inverted)


def ideal_product(I, J):
    _check_same_ring(I, J)
    return Ideal([f * g for f in I.gens for g in J.gens], I.ring, I.inverted + J.inverted)


def ideal_square(I):
    """Generated by the pairwise products ``g_i g_j`` (``i <= j``)."""
    gens = I.gens
    return Ideal([gens[i] * gens[j] for i in range(len(gens)) for j in range(i, len(gens))],
                 I.ring, I.inverted)


def ideal_intersection(I, J):
    """``I`` cap ``J`` by elimination of ``t`` from ``t I + (1 - t) J``."""
    _check_same_ring(I, J)
    R = I.ring
    polys = []
    for g in I.gens:
        polys.append({(1,) + e: c for e, c in g.terms.items()})
    for g in J.gens:
        p = {(0,) + e: c for e, c in g.terms.items()}
        for e, c in g.terms.items():
            p[(1,) + e] = p.get((1,) + e, R.field.zero) - c
        polys.append({e: c for e, c in p.items() if c != 0})
    gb = buchberger(polys, R.field, elimination_key(1))
    gens = [Poly(R, {e[1:]: c for e, c in g.items()}) for g in gb
            if all(e[0] == 0 for e in g)]
    return Ideal(gens, R, I.inverted + J.inverted)


def ideal_colon(I, f):
    """``(I : f) = {g : f g in I}``, computed as ``(I cap (f)) / f``."""
    R = I.ring
    if isinstance(f, LocalElt):
        # dividing by a unit denominator does not change the colon ideal
        extra = () if f.den.is_constant() else (f.den,)
        f = f.num
    else:
        extra = ()
        f = R(f)
    if not f:
        raise ZeroDivisionError("colon by the zero polynomial")
    if f.is_constant():
        return Ideal(I.gens, R, I.inverted + extra)
    base = Ideal(I.groebner(), R) if I.inverted else I
    inter = ideal_intersection(base, Ideal([f], R))
    return Ideal([R.exact_div(g, f) for g in inter.gens], R, I.inverted + extra)


def saturate(I, f):
    """``I : f^oo`` as an ordinary polynomial ideal."""
    return Ideal(Ideal(I.gens, I.ring, I.inverted + (I.ring(f),)).groebner(), I.ring)


def _krull_dim_of_monomials(lms, nvars):
    if not lms:
        return nvars
    supports = [frozenset(i for i, k in enumerate(m) if k) for m in lms]
    if any(not s for s in supports):
        return -1
    for size in range(nvars, -1, -1):
        for S in combinations(range(nvars), size):
            S = frozenset(S)
            if all(not s <= S for s in supports):
                return size
    return 0


def ideal_codim(I, with_flag=False):
    """Codimension ``nvars - dim R/I`` from the leading-term ideal.

    The unit ideal has no codimension; it is reported as ``nvars`` with the
    flag set (``with_flag=True`` returns ``(codim, is_unit)``).
    """
    gb = I.groebner()
    n = I.ring.nvars
    d = _krull_dim_of_monomials([g.lm() for g in gb], n)
    is_unit = d < 0
    codim = n if is_unit else n - d
    return (codim, is_unit) if with_flag else codim


def grade(I):
    """Grade in a polynomial ring over a field (= codimension); the unit
    ideal has infinite grade."""
    codim, is_unit = ideal_codim(I, with_flag=True)
    return math.inf if is_unit else codim
