"""Conversions to sympy for multivariate gcd.

Only used where the exact engine needs a multivariate gcd: primitive
kernel vectors and cancelling common factors of local fractions.
"""

from fractions import Fraction

import sympy

from .rings import LocalElt, Poly


def _gens(ring):
    return sympy.symbols(list(ring.names)) if ring.nvars else []


def _domain(ring):
    p = getattr(ring.field, "p", None)
    return {"modulus": p} if p else {"domain": "QQ"}


def to_sympy(p):
    R = p.ring
    terms = {}
    for e, c in p.terms.items():
        v = c.v if hasattr(c, "v") else sympy.Rational(int(c.numerator), int(c.denominator))
        terms[e] = v
    gens = _gens(R)
    if not gens:
        raise ValueError("need at least one variable")
    return sympy.Poly.from_dict(terms or {(0,) * R.nvars: 0}, *gens, **_domain(R))


def from_sympy(sp, ring):
    terms = {}
    for e, c in sp.terms():
        if getattr(ring.field, "p", None):
            v = ring.field(int(c) % ring.field.p)
        else:
            c = sympy.Rational(c)
            v = ring.field(Fraction(int(c.p), int(c.q)))
        if v != 0:
            terms[tuple(e)] = v
    return Poly(ring, terms)


def poly_gcd(polys):
    """Monic gcd of a list of polynomials (0 if all vanish)."""
    polys = [p for p in polys if p]
    if not polys:
        return None
    ring = polys[0].ring
    if ring.nvars == 0:
        return ring.one
    g = to_sympy(polys[0])
    for p in polys[1:]:
        g = sympy.gcd(g, to_sympy(p))
        if g.is_ground:
            return ring.one
    out = from_sympy(g, ring)
    return out.monic()


def cancel(x):
    """Local fraction with common factors of numerator and denominator
    removed."""
    if not isinstance(x, LocalElt) or x.den.is_constant() or not x.num:
        return x
    g = poly_gcd([x.num, x.den])
    R = x.num.ring
    num, den = R.exact_div(x.num, g), R.exact_div(x.den, g)
    # make the denominator monic so equal fractions share a representation
    c = R.field.inv(den.lc())
    return LocalElt(num * c, den * c)

