"""Exact coefficient rings.

Four kinds of ring are supported:

* ``QQ`` -- rationals, elements are ``gmpy2.mpq`` (``Fraction`` accepted);
* ``GF(p)`` -- prime fields, elements are :class:`FpElt`;
* :class:`PolyRing` -- multivariate polynomials over one of the above;
* :class:`LocalRing` -- a polynomial ring localized at the origin, i.e.
  fractions whose denominator has a nonzero constant term.

Elements behave like numbers (``+``, ``-``, ``*``, ``**``, ``==``) and
mix freely with Python ints, so they can live in numpy object arrays.
"""

from fractions import Fraction

import gmpy2
from operator import add
from functools import lru_cache


class NotAUnit(ArithmeticError):
    """An element (or determinant) is not invertible where it has to be."""


class RingMismatch(TypeError):
    pass


def _is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


# -- fields -----------------------------------------------------------------


mpq = gmpy2.mpq
RATIONAL = (Fraction, type(mpq()))


class RationalField:
    char = 0
    is_field = True

    def __call__(self, x=0):
        if isinstance(x, RATIONAL) or isinstance(x, int):
            return mpq(x)
        if isinstance(x, str):
            return mpq(Fraction(x))
        if isinstance(x, Poly) and x.is_constant():
            return self(x.constant_term())
        raise RingMismatch(f"cannot coerce {x!r} into QQ")

    @property
    def zero(self):
        return mpq(0)

    @property
    def one(self):
        return mpq(1)

    def is_unit(self, a):
        return a != 0

    def inv(self, a):
        if a == 0:
            raise NotAUnit("division by zero in QQ")
        return 1 / a

    def exact_div(self, a, b):
        return a / b

    def random_element(self, rng, bound=5):
        return mpq(rng.randint(-bound, bound))

    def elements(self):
        raise ValueError("QQ is infinite")

    def descriptor(self):
        return "Q"

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


QQ = RationalField()


class FpElt:
    """Residue class modulo a prime ``p``, stored in ``[0, p)``."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, FpElt):
            if other.p != self.p:
                raise RingMismatch(f"GF({self.p}) vs GF({other.p})")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, RATIONAL):
            return int(other.numerator) * pow(int(other.denominator), -1, self.p)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElt(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElt(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElt(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElt(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElt(-self.v, self.p)

    def __pos__(self):
        return self

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o % self.p == 0:
            raise NotAUnit(f"division by zero in GF({self.p})")
        return FpElt(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElt(o, self.p) / self

    def __pow__(self, e):
        if e < 0:
            return FpElt(pow(self.v, -1, self.p), self.p) ** (-e)
        return FpElt(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return str(self.v)


class PrimeField:
    is_field = True

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.char = p

    def __call__(self, x=0):
        if isinstance(x, FpElt):
            if x.p != self.p:
                raise RingMismatch(f"GF({x.p}) element in GF({self.p})")
            return x
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, RATIONAL):
            if x.denominator % self.p == 0:
                raise NotAUnit(f"{x} has no image in GF({self.p})")
            return FpElt(int(x.numerator) * pow(int(x.denominator), -1, self.p), self.p)
        if isinstance(x, int):
            return FpElt(x, self.p)
        if isinstance(x, Poly) and x.is_constant():
            return self(x.constant_term())
        raise RingMismatch(f"cannot coerce {x!r} into GF({self.p})")

    @property
    def zero(self):
        return FpElt(0, self.p)

    @property
    def one(self):
        return FpElt(1, self.p)

    def is_unit(self, a):
        return a != 0

    def inv(self, a):
        return self.one / a

    def exact_div(self, a, b):
        return a / b

    def random_element(self, rng, bound=None):
        return FpElt(rng.randrange(self.p), self.p)

    def elements(self):
        return [FpElt(v, self.p) for v in range(self.p)]

    def descriptor(self):
        return {"Fp": self.p}

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


@lru_cache(maxsize=None)
def GF(p):
    return PrimeField(p)


# -- monomial orders ---------------------------------------------------------


def grevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


def elimination_key(k):
    """Block order: the first ``k`` variables are eliminated first, grevlex
    inside each block."""

    def key(e):
        head, tail = e[:k], e[k:]
        return (sum(head), tuple(-x for x in reversed(head)),
                sum(tail), tuple(-x for x in reversed(tail)))

    return key


# -- polynomials -------------------------------------------------------------


class PolyRing:
    """``field[vars]`` with the graded reverse lexicographic order."""

    is_field = False

    def __init__(self, field, names):
        if isinstance(names, str):
            names = names.replace(",", " ").split()
        self.field = field
        self.names = tuple(names)
        self.nvars = len(self.names)
        self.char = field.char

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and other.field == self.field
                and other.names == self.names)

    def __hash__(self):
        return hash((self.field, self.names))

    def __repr__(self):
        return f"{self.field!r}[{', '.join(self.names)}]"

    @property
    def zero(self):
        return Poly(self, {})

    @property
    def one(self):
        return self.constant(1)

    def constant(self, c):
        c = self.field(c)
        return Poly(self, {(0,) * self.nvars: c} if c != 0 else {})

    def gens(self):
        out = []
        for i in range(self.nvars):
            e = [0] * self.nvars
            e[i] = 1
            out.append(Poly(self, {tuple(e): self.field.one}))
        return out

    def gen(self, name):
        return self.gens()[self.names.index(name)]

    def __call__(self, x=0):
        if isinstance(x, Poly):
            if x.ring == self:
                return x
            if x.ring.field == self.field and set(x.ring.names) <= set(self.names):
                idx = [self.names.index(n) for n in x.ring.names]
                terms = {}
                for e, c in x.terms.items():
                    ne = [0] * self.nvars
                    for i, k in zip(idx, e):
                        ne[i] = k
                    terms[tuple(ne)] = c
                return Poly(self, terms)
            raise RingMismatch(f"cannot coerce {x!r} into {self!r}")
        if isinstance(x, LocalElt):
            if x.den.is_constant():
                return self(x.num) * self.field.inv(x.den.constant_term())
            q, r = x.num.divmod(x.den)
            if r:
                raise RingMismatch(f"{x!r} is not a polynomial")
            return q
        return self.constant(x)

    def monomial(self, exps, c=1):
        c = self.field(c)
        return Poly(self, {tuple(exps): c} if c != 0 else {})

    def is_unit(self, a):
        return a.is_constant() and a.constant_term() != 0

    def exact_div(self, a, b):
        q, r = a.divmod(b)
        if r:
            raise ArithmeticError(f"{b} does not divide {a}")
        return q

    def random_element(self, rng, degree=1, bound=5, density=1.0, homogeneous=False):
        terms = {}
        degrees = [degree] if homogeneous else range(degree + 1)
        for e in _exponents_upto(self.nvars, degree):
            if sum(e) not in degrees:
                continue
            if rng.random() > density:
                continue
            c = self.field.random_element(rng, bound)
            if c != 0:
                terms[e] = c
        return Poly(self, terms)

    def descriptor(self):
        return {"field": self.field.descriptor(), "vars": list(self.names), "local": False}


def _exponents_upto(n, d):
    if n == 0:
        yield ()
        return
    for k in range(d + 1):
        for rest in _exponents_upto(n - 1, d - k):
            yield (k,) + rest


def _coerce_poly(ring, x):
    if isinstance(x, Poly):
        if x.ring != ring:
            return ring(x)
        return x
    if isinstance(x, (int, FpElt) + RATIONAL):
        return ring.constant(x)
    return None


class Poly:
    """Sparse polynomial: ``terms`` maps exponent tuples to nonzero
    coefficients."""

    __slots__ = ("ring", "terms", "_lead")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._lead = None

    # leading data (grevlex) -------------------------------------------------

    def lm(self):
        if self._lead is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading monomial")
            self._lead = max(self.terms, key=grevlex_key)
        return self._lead

    def lc(self):
        return self.terms[self.lm()]

    def degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero)

    def monic(self):
        inv = self.ring.field.inv(self.lc())
        return Poly(self.ring, {e: c * inv for e, c in self.terms.items()})

    # arithmetic -------------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        o = _coerce_poly(self.ring, other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in o.terms.items():
            s = terms.get(e)
            if s is None:
                terms[e] = c
            else:
                s = s + c
                if s == 0:
                    del terms[e]
                else:
                    terms[e] = s
        return Poly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = _coerce_poly(self.ring, other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce_poly(self.ring, other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, LocalElt):
            return NotImplemented
        o = _coerce_poly(self.ring, other)
        if o is None:
            return NotImplemented
        if not self.terms or not o.terms:
            return Poly(self.ring, {})
        terms = {}
        get = terms.get
        items2 = list(o.terms.items())
        for e1, c1 in self.terms.items():
            for e2, c2 in items2:
                e = tuple(map(add, e1, e2))
                s = get(e)
                terms[e] = c1 * c2 if s is None else s + c1 * c2
        return Poly(self.ring, {e: c for e, c in terms.items() if c != 0})

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = self.ring.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __truediv__(self, other):
        if isinstance(other, Poly):
            if other.is_constant():
                other = other.constant_term()
            else:
                return self.ring.exact_div(self, other)
        inv = self.ring.field.inv(self.ring.field(other))
        return Poly(self.ring, {e: c * inv for e, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, LocalElt):
            return other == self
        o = _coerce_poly(self.ring, other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def mul_term(self, e, c):
        return Poly(self.ring, {tuple(a + b for a, b in zip(e, k)): v * c
                                for k, v in self.terms.items()})

    def divmod(self, other):
        """Multivariate division by a single polynomial (grevlex)."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        lm, lc = other.lm(), other.lc()
        inv = self.ring.field.inv(lc)
        q = {}
        r = {}
        p = dict(self.terms)
        while p:
            e = max(p, key=grevlex_key)
            c = p[e]
            if all(a >= b for a, b in zip(e, lm)):
                m = tuple(a - b for a, b in zip(e, lm))
                f = c * inv
                q[m] = f
                for k, v in other.terms.items():
                    t = tuple(a + b for a, b in zip(m, k))
                    s = p.get(t)
                    s = -f * v if s is None else s - f * v
                    if s == 0:
                        p.pop(t, None)
                    else:
                        p[t] = s
            else:
                r[e] = c
                del p[e]
        return Poly(self.ring, q), Poly(self.ring, r)

    # evaluation ---------------------------------------------------------------

    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = point[0]
        return self.evaluate(point)

    def evaluate(self, point):
        """Value at a point whose coordinates live in the coefficient field."""
        F = self.ring.field
        pt = [F(x) for x in point]
        total = F.zero
        for e, c in self.terms.items():
            v = c
            for x, k in zip(pt, e):
                if k:
                    v = v * x ** k
            total = total + v
        return total

    def substitute(self, images):
        """Ring map sending variable ``i`` to ``images[i]``."""
        out = None
        for e, c in self.terms.items():
            t = c
            for x, k in zip(images, e):
                if k:
                    t = x ** k * t
            out = t if out is None else out + t
        if out is None:
            return self.ring.zero
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=grevlex_key, reverse=True):
            c = self.terms[e]
            mono = "*".join(n if k == 1 else f"{n}^{k}"
                            for n, k in zip(self.ring.names, e) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


# -- localization at the origin ----------------------------------------------


class LocalRing:
    """``R_m``: the polynomial ring localized at the maximal ideal of the
    origin."""

    is_field = False

    def __init__(self, poly_ring):
        self.poly_ring = poly_ring
        self.field = poly_ring.field
        self.names = poly_ring.names
        self.nvars = poly_ring.nvars
        self.char = poly_ring.char

    def __eq__(self, other):
        return isinstance(other, LocalRing) and other.poly_ring == self.poly_ring

    def __hash__(self):
        return hash(("local", self.poly_ring))

    def __repr__(self):
        return f"{self.poly_ring!r}_(0)"

    @property
    def zero(self):
        return LocalElt(self.poly_ring.zero, self.poly_ring.one)

    @property
    def one(self):
        return LocalElt(self.poly_ring.one, self.poly_ring.one)

    def gens(self):
        return [self(g) for g in self.poly_ring.gens()]

    def __call__(self, x=0, den=None):
        if isinstance(x, LocalElt):
            if den is None:
                return x
            return x / self(den)
        num = self.poly_ring(x)
        den = self.poly_ring.one if den is None else self.poly_ring(den)
        return LocalElt(num, den)

    def is_unit(self, a):
        a = self(a)
        return a.num.constant_term() != 0

    def inv(self, a):
        a = self(a)
        if not self.is_unit(a):
            raise NotAUnit(f"{a!r} lies in the maximal ideal")
        return LocalElt(a.den, a.num)

    def exact_div(self, a, b):
        return self(a) * self.inv(b)

    def descriptor(self):
        d = self.poly_ring.descriptor()
        d["local"] = True
        return d


class LocalElt:
    """``num / den`` with ``den(0) != 0``.  No gcd normalization: equality is
    tested by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        if den.constant_term() == 0:
            raise NotAUnit(f"denominator {den!r} vanishes at the origin")
        if den.is_constant():
            inv = num.ring.field.inv(den.constant_term())
            num = Poly(num.ring, {e: c * inv for e, c in num.terms.items()})
            den = num.ring.one
        elif num and den.degree() <= num.degree():
            q, r = num.divmod(den)
            if not r:
                num, den = q, num.ring.one
        elif not num:
            den = num.ring.one
        self.num = num
        self.den = den

    @property
    def ring(self):
        return LocalRing(self.num.ring)

    def _coerce(self, other):
        if isinstance(other, LocalElt):
            return other
        if isinstance(other, Poly):
            return LocalElt(self.num.ring(other), self.num.ring.one)
        if isinstance(other, (int, FpElt) + RATIONAL):
            return LocalElt(self.num.ring.constant(other), self.num.ring.one)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return LocalElt(self.num + o.num, self.den)
        return LocalElt(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return LocalElt(-self.num, self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return LocalElt(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.num.constant_term() == 0:
            raise NotAUnit(f"{o!r} is not a unit of the local ring")
        return LocalElt(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n):
        if n < 0:
            return (self.ring.one / self) ** (-n)
        return LocalElt(self.num ** n, self.den ** n)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        # equal elements need not share a representation
        return hash(self.num.ring)

    def __bool__(self):
        return bool(self.num)

    def is_unit(self):
        return self.num.constant_term() != 0

    def evaluate(self, point):
        d = self.den.evaluate(point)
        if d == 0:
            raise NotAUnit("denominator vanishes at the evaluation point")
        return self.num.evaluate(point) / d

    def __repr__(self):
        if self.den == 1:
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"


# -- helpers ------------------------------------------------------------------


def ring_of(x):
    """Ring an element belongs to (ints and Fractions count as rationals)."""
    if isinstance(x, Poly):
        return x.ring
    if isinstance(x, LocalElt):
        return x.ring
    if isinstance(x, FpElt):
        return GF(x.p)
    if isinstance(x, (int,) + RATIONAL):
        return QQ
    raise RingMismatch(f"{x!r} is not a ring element")


def base_field(ring):
    return ring if ring.is_field else ring.field


def polynomial_ring(ring):
    """Polynomial ring underlying ``ring`` (``None`` for a bare field)."""
    if isinstance(ring, PolyRing):
        return ring
    if isinstance(ring, LocalRing):
        return ring.poly_ring
    return None


def numerator_denominator(x, poly_ring):
    """Split an element into (polynomial numerator, polynomial denominator)."""
    if isinstance(x, LocalElt):
        return x.num, x.den
    return poly_ring(x), poly_ring.one


def ring_from_descriptor(desc):
    field = desc.get("field", "Q")
    if field == "Q":
        F = QQ
    elif isinstance(field, dict) and "Fp" in field:
        F = GF(int(field["Fp"]))
    elif isinstance(field, str) and field.startswith("Fp:"):
        F = GF(int(field[3:]))
    else:
        raise ValueError(f"unknown field descriptor {field!r}")
    names = desc.get("vars", [])
    if not names:
        return F
    R = PolyRing(F, names)
    return LocalRing(R) if desc.get("local") else R

