"""JSON encoding of rings, polynomials, matrices, ideals and quadratic data.

Formats::

    ring     {"field": "Q" | {"Fp": p}, "vars": [...], "local": bool}
    poly     [{"c": int | "a/b", "e": [exponents]}, ...]
    local    {"num": poly, "den": poly}
    matrix   {"rows": r, "cols": c, "entries": [[poly, ...], ...]}
    ideal    {"gens": [poly, ...]}        (plus "inverted" when localized)
    quad     {"rank": 2n, "twist": t, "gram_upper": matrix}
    lagsub   {"gens": matrix}

Scalars are written as constant polynomials so that one reader handles
every entry type.  Output is deterministic: terms are sorted by the
monomial order, keys are sorted on dump.
"""

import json
from fractions import Fraction

import numpy as np

from .rings import (QQ, FpElt, LocalElt, LocalRing, Poly, PolyRing, grevlex_key,
                    ring_from_descriptor)


class InputError(ValueError):
    """Malformed JSON input."""


def ring_descriptor(ring):
    if isinstance(ring, (PolyRing, LocalRing)):
        return ring.descriptor()
    return {"field": ring.descriptor(), "vars": [], "local": False}


def _scalar_to_json(c):
    if isinstance(c, FpElt):
        return c.v
    num, den = int(c.numerator), int(c.denominator)
    return num if den == 1 else f"{num}/{den}"


def poly_to_json(p):
    if isinstance(p, LocalElt):
        return {"num": poly_to_json(p.num), "den": poly_to_json(p.den)}
    if isinstance(p, Poly):
        exps = sorted(p.terms, key=grevlex_key, reverse=True)
        return [{"c": _scalar_to_json(p.terms[e]), "e": list(e)} for e in exps]
    if not p:
        return []
    return [{"c": _scalar_to_json(p), "e": []}]


def _scalar_from_json(field, c):
    if isinstance(c, bool) or not isinstance(c, (int, str)):
        raise InputError(f"bad coefficient {c!r}")
    try:
        return field(Fraction(c) if isinstance(c, str) else c)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad coefficient {c!r}") from exc


def poly_from_json(ring, data):
    """Read an entry of ``ring``; also accepts bare ints and ``"a/b"``."""
    if isinstance(ring, LocalRing):
        if isinstance(data, dict):
            if set(data) != {"num", "den"}:
                raise InputError(f"local element needs num/den, got {sorted(data)}")
            num = poly_from_json(ring.poly_ring, data["num"])
            den = poly_from_json(ring.poly_ring, data["den"])
            return LocalElt(num, den)
        return ring(poly_from_json(ring.poly_ring, data))
    field = ring.field if isinstance(ring, PolyRing) else ring
    if isinstance(data, (int, str)) and not isinstance(data, bool):
        c = _scalar_from_json(field, data)
        return ring(c) if isinstance(ring, PolyRing) else c
    if not isinstance(data, list):
        raise InputError(f"polynomial must be a term list, got {type(data).__name__}")
    nv = ring.nvars if isinstance(ring, PolyRing) else 0
    terms = {}
    for t in data:
        if not isinstance(t, dict) or "c" not in t or "e" not in t:
            raise InputError(f"bad term {t!r}")
        e = tuple(t["e"])
        if len(e) != nv or any(not isinstance(k, int) or k < 0 for k in e):
            raise InputError(f"exponent {list(e)} does not fit {nv} variables")
        c = _scalar_from_json(field, t["c"])
        terms[e] = terms.get(e, field.zero) + c
    terms = {e: c for e, c in terms.items() if c != 0}
    if isinstance(ring, PolyRing):
        return Poly(ring, terms)
    return terms.get((), field.zero)


def matrix_to_json(M):
    r, c = M.shape
    return {"rows": r, "cols": c,
            "entries": [[poly_to_json(M[i, j]) for j in range(c)] for i in range(r)]}


def matrix_from_json(ring, data):
    try:
        r, c, rows = data["rows"], data["cols"], data["entries"]
    except (KeyError, TypeError) as exc:
        raise InputError("matrix needs rows, cols and entries") from exc
    if len(rows) != r or any(len(row) != c for row in rows):
        raise InputError(f"entries do not form a {r}x{c} matrix")
    M = np.empty((r, c), dtype=object)
    for i in range(r):
        for j in range(c):
            M[i, j] = poly_from_json(ring, rows[i][j])
    return M


def ideal_to_json(I):
    return I.to_json()


def ideal_from_json(ring, data):
    from .ideals import Ideal
    R = ring.poly_ring if isinstance(ring, LocalRing) else ring
    if not isinstance(R, PolyRing):
        raise InputError("ideals need a polynomial ring (give --vars)")
    gens = [poly_from_json(R, g) for g in data.get("gens", [])]
    inv = [poly_from_json(R, g) for g in data.get("inverted", [])]
    return Ideal(gens, R, inv)


def quadspace_to_json(V):
    return {"rank": V.rank, "twist": V.twist, "gram_upper": matrix_to_json(V.gram_upper)}


def quadspace_from_json(ring, data):
    from .quadform import QuadSpace
    Q = matrix_from_json(ring, data["gram_upper"])
    if "rank" in data and data["rank"] != Q.shape[0]:
        raise InputError("rank does not match the Gram matrix")
    return QuadSpace(Q, int(data.get("twist", 0)), ring)


def lagsub_to_json(L):
    return {"gens": matrix_to_json(L.gens)}


def pair_to_json(P):
    return {"ring": ring_descriptor(P.ambient.ring),
            "ambient": quadspace_to_json(P.ambient),
            "E": lagsub_to_json(P.E), "F": lagsub_to_json(P.F)}


def pair_from_json(data, ring=None):
    from .pairs import PairData
    from .quadform import LagSub
    if ring is None:
        if "ring" not in data:
            raise InputError("pair needs a ring descriptor")
        ring = ring_from_descriptor(data["ring"])
    V = quadspace_from_json(ring, data["ambient"])
    E = LagSub(matrix_from_json(ring, data["E"]["gens"]), V)
    F = LagSub(matrix_from_json(ring, data["F"]["gens"]), V)
    return PairData(V, E, F)


def read_ring(data, default=None):
    if "ring" in data:
        try:
            return ring_from_descriptor(data["ring"])
        except (ValueError, TypeError) as exc:
            raise InputError(str(exc)) from exc
    if default is None:
        return QQ
    return default


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2)
