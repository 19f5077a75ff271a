"""Exact commutative coefficient rings.

Three families of rings live here, all behind the same small contract
(``ring(x)`` coerces, ``ring.zero`` / ``ring.one``, elements overload the
arithmetic operators and compare exactly):

* ``QQ`` -- the rationals; elements are plain :class:`fractions.Fraction`.
* ``cyclotomic_field(n)`` -- Q(zeta_n), elements reduced modulo the n-th
  cyclotomic polynomial so that equality is coefficient comparison.
* ``polynomial_ring(base, names)`` -- sparse multivariate polynomials over
  any commutative ring of this package, graded-lex ordered.

Ring descriptors are cached, so two rings built from the same data are the
same object and ``a.ring is b.ring`` is the compatibility test.
"""

import re
from fractions import Fraction
from functools import lru_cache

from . import _linear
from .errors import InputError, NotInvertibleError, PreconditionError, StructuralError


def is_scalar(x):
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def ring_of(x):
    """The ring descriptor an element belongs to (plain rationals belong to QQ)."""
    r = getattr(x, "ring", None)
    if r is not None:
        return r
    if is_scalar(x):
        return QQ
    raise StructuralError(f"not a ring element: {x!r}")


class Ring:
    """Common behaviour of ring descriptors."""

    commutative = True
    is_field = False

    def __call__(self, x):
        raise NotImplementedError

    def names(self):
        """Names the text parser resolves for this ring."""
        return {}

    def parse(self, text):
        return parse_expression(text, self, self.names())

    def is_unit(self, x):
        raise PreconditionError(f"unit check unavailable over {self}")

    def inverse(self, x):
        raise PreconditionError(f"inversion unavailable over {self}")


class RationalField(Ring):
    is_field = True

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x
        if is_scalar(x):
            return Fraction(x)
        if isinstance(x, str):
            return self.parse(x)
        raise StructuralError(f"cannot coerce {x!r} into QQ")

    def __repr__(self):
        return "QQ"

    def is_unit(self, x):
        return x != 0

    def inverse(self, x):
        if not x:
            raise NotInvertibleError("zero is not invertible")
        return 1 / Fraction(x)

    def random_element(self, rng, bound=3):
        return Fraction(rng.randint(-bound, bound))

    # coordinates over Q, used when solving linear systems
    dimension = 1

    def to_rationals(self, x):
        return [Fraction(x)]

    def from_rationals(self, v):
        return Fraction(v[0])


QQ = RationalField()


# ---------------------------------------------------------------------------
# term formatting shared by every element type

def factor_form(c):
    """Split a coefficient into (negative, text) with text safe as a factor."""
    if isinstance(c, Fraction) or is_scalar(c):
        c = Fraction(c)
        return c < 0, str(abs(c))
    f = getattr(c, "_factor_form", None)
    if f is not None:
        return f()
    return False, f"({c})"


def format_terms(pairs):
    """Render [(coefficient, monomial_text)] as 'a*m1 - b*m2 + ...'."""
    out = []
    for idx, (c, mono) in enumerate(pairs):
        neg, body = factor_form(c)
        if mono:
            text = mono if body == "1" else f"{body}*{mono}"
        else:
            text = body
        if idx == 0:
            out.append(("-" if neg else "") + text)
        else:
            out.append((" - " if neg else " + ") + text)
    return "".join(out) or "0"


def _single_term_form(pairs, whole):
    if len(pairs) == 1:
        c, mono = pairs[0]
        neg, body = factor_form(c)
        if not mono:
            return neg, body
        return neg, mono if body == "1" else f"{body}*{mono}"
    return False, f"({whole})"


# ---------------------------------------------------------------------------
# cyclotomic fields

def _poly_divexact(num, den):
    """Exact division of integer polynomials (coefficient lists, low first)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        q = num[k + len(den) - 1] // den[-1]
        out[k] = q
        for i, d in enumerate(den):
            num[k + i] -= q * d
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise StructuralError("cyclotomic index must be positive")
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p = _poly_divexact(p, cyclotomic_polynomial(d))
    return tuple(p)


def _reduce_mod(raw, modulus):
    """Remainder of a Fraction coefficient list modulo a monic integer polynomial."""
    deg = len(modulus) - 1
    c = [Fraction(x) for x in raw]
    for k in range(len(c) - 1, deg - 1, -1):
        q = c[k]
        if q:
            for i in range(deg + 1):
                c[k - deg + i] -= q * modulus[i]
    c = c[:deg] + [Fraction(0)] * max(0, deg - len(c))
    return tuple(c)


class CyclotomicField(Ring):
    is_field = True

    def __init__(self, n):
        self.n = n
        self.modulus = cyclotomic_polynomial(n)
        self.degree = len(self.modulus) - 1
        zeros = (Fraction(0),) * self.degree
        self.zero = CycloElement(self, zeros)
        self.one = CycloElement(self, (Fraction(1),) + zeros[1:])
        self.gen = self.reduce([0, 1])
        self.dimension = self.degree

    def __repr__(self):
        return f"QQ(zeta_{self.n})"

    def __reduce__(self):
        return (cyclotomic_field, (self.n,))

    def names(self):
        return {"z": self.gen, "ζ": self.gen}

    def reduce(self, raw):
        return CycloElement(self, _reduce_mod(raw, self.modulus))

    def zeta(self, k):
        k %= self.n
        return self.reduce([0] * k + [1])

    def __call__(self, x):
        if isinstance(x, CycloElement):
            if x.ring is self:
                return x
            src = x.ring.n
            if self.n % src == 0:
                step = self.n // src
                raw = [Fraction(0)] * (step * (len(x.c) - 1) + 1)
                for k, a in enumerate(x.c):
                    raw[k * step] = a
                return self.reduce(raw)
            raise StructuralError(f"cannot embed {x.ring} into {self}")
        if is_scalar(x):
            return self.reduce([x])
        if isinstance(x, str):
            return self.parse(x)
        raise StructuralError(f"cannot coerce {x!r} into {self}")

    def is_unit(self, x):
        return bool(self(x))

    def inverse(self, x):
        x = self(x)
        if not x:
            raise NotInvertibleError("zero is not invertible")
        # solve x * y = 1 through the multiplication matrix of x
        cols = [(x * self.zeta(k)).c for k in range(self.degree)]
        mat = [[cols[j][i] for j in range(self.degree)] for i in range(self.degree)]
        y = _linear.solve(mat, list(self.one.c))
        return CycloElement(self, tuple(y))

    def random_element(self, rng, bound=3):
        return CycloElement(self, tuple(Fraction(rng.randint(-bound, bound)) for _ in range(self.degree)))

    def to_rationals(self, x):
        return list(x.c)

    def from_rationals(self, v):
        return CycloElement(self, tuple(Fraction(a) for a in v))


@lru_cache(maxsize=None)
def cyclotomic_field(n):
    if n < 1:
        raise StructuralError("cyclotomic index must be positive")
    return CyclotomicField(n)


class CycloElement:
    """Element of Q(zeta_n) stored as its canonical remainder modulo Phi_n."""

    __slots__ = ("ring", "c")

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.c = coeffs

    def _other(self, other):
        if isinstance(other, CycloElement):
            if other.ring is not self.ring:
                raise StructuralError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if is_scalar(other):
            return self.ring(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return CycloElement(self.ring, tuple(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        return CycloElement(self.ring, tuple(-a for a in self.c))

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return CycloElement(self.ring, tuple(a - b for a, b in zip(self.c, o.c)))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if is_scalar(other):
            return CycloElement(self.ring, tuple(a * other for a in self.c))
        o = self._other(other)
        if o is None:
            return NotImplemented
        raw = [Fraction(0)] * (2 * len(self.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        raw[i + j] += a * b
        return self.ring.reduce(raw)

    __rmul__ = __mul__

    def __pow__(self, k):
        return _power(self, k, self.ring.one)

    def __bool__(self):
        return any(self.c)

    def __eq__(self, other):
        if isinstance(other, CycloElement):
            return other.ring is self.ring and other.c == self.c
        if is_scalar(other):
            return self.c == self.ring(other).c
        return NotImplemented

    def __hash__(self):
        if not any(self.c[1:]):
            return hash(self.c[0])
        return hash((self.ring.n, self.c))

    def conj(self):
        """Complex conjugate: zeta -> zeta^(n-1)."""
        n = self.ring.n
        raw = [Fraction(0)] * n
        for k, a in enumerate(self.c):
            raw[(-k) % n] += a
        return self.ring.reduce(raw)

    def is_rational(self):
        return not any(self.c[1:])

    def rational(self):
        if not self.is_rational():
            raise StructuralError(f"{self} is not rational")
        return self.c[0]

    def _pairs(self):
        out = []
        for k, a in enumerate(self.c):
            if a:
                out.append((a, "" if k == 0 else ("z" if k == 1 else f"z^{k}")))
        return out

    def _factor_form(self):
        return _single_term_form(self._pairs(), str(self))

    def __str__(self):
        return format_terms(self._pairs())

    def __repr__(self):
        return f"CycloElement({self.ring.n}, {self})"


def cyclo_reduce(raw_coeffs, n):
    """Canonical element of Q(zeta_n) for the raw polynomial sum(raw[k] * zeta^k)."""
    return cyclotomic_field(n).reduce([Fraction(x) for x in raw_coeffs] or [0])


def zeta_power(n, k):
    return cyclotomic_field(n).zeta(k)


def _power(x, k, one):
    if k < 0:
        raise StructuralError("negative powers are not supported")
    result = one
    base = x
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


# ---------------------------------------------------------------------------
# sparse polynomials

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")


def grlex_key(exp):
    return (sum(exp), exp)


class PolynomialRing(Ring):
    """base[names...]; requires a commutative base ring."""

    def __init__(self, base, names):
        if not getattr(base, "commutative", False):
            raise StructuralError(f"polynomial coefficients must be commutative, got {base}")
        if len(set(names)) != len(names):
            raise StructuralError("duplicate variable names")
        for v in names:
            if not _NAME.match(v):
                raise StructuralError(f"invalid variable name {v!r}")
        self.base = base
        self.vars = tuple(names)
        self.nvars = len(names)
        self._zero_exp = (0,) * self.nvars
        self.zero = Poly(self, {})
        self.one = Poly(self, {self._zero_exp: base.one})

    def __repr__(self):
        return f"{self.base}[{', '.join(self.vars)}]"

    def __reduce__(self):
        return (polynomial_ring, (self.base, self.vars))

    def names(self):
        d = dict(self.base.names())
        d.update({v: self.gen(i) for i, v in enumerate(self.vars)})
        return d

    def gen(self, which):
        i = self.vars.index(which) if isinstance(which, str) else which
        exp = tuple(1 if k == i else 0 for k in range(self.nvars))
        return Poly(self, {exp: self.base.one})

    def gens(self):
        return [self.gen(i) for i in range(self.nvars)]

    def constant(self, c):
        c = self.base(c)
        return Poly(self, {self._zero_exp: c} if c else {})

    def __call__(self, x):
        if isinstance(x, Poly):
            if x.ring is self:
                return x
            raise StructuralError(f"ring mismatch: {x.ring} vs {self}")
        if isinstance(x, str):
            return self.parse(x)
        return self.constant(x)

    def is_unit(self, x):
        if not self.base.is_field:
            raise PreconditionError(f"unit check unavailable over {self}")
        x = self(x)
        return len(x.terms) == 1 and self._zero_exp in x.terms

    def inverse(self, x):
        if not self.is_unit(x):
            raise NotInvertibleError(f"{x} is not a unit")
        return self.constant(self.base.inverse(x.terms[self._zero_exp]))

    def random_element(self, rng, bound=3, max_terms=3, max_degree=2):
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            exp = tuple(rng.randint(0, max_degree) for _ in range(self.nvars))
            terms[exp] = self.base.random_element(rng, bound)
        return poly_normalize(self, terms.items())


def polynomial_ring(base, names):
    return _polynomial_ring(base, tuple(names))


@lru_cache(maxsize=None)
def _polynomial_ring(base, names):
    return PolynomialRing(base, names)


def _add_into(acc, exp, c):
    if exp in acc:
        s = acc[exp] + c
        if s:
            acc[exp] = s
        else:
            del acc[exp]
    elif c:
        acc[exp] = c


class Poly:
    """Sparse polynomial: {exponent tuple: nonzero coefficient}."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def _other(self, other):
        if isinstance(other, Poly):
            if other.ring is not self.ring:
                raise StructuralError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if getattr(other, "_outer", False):
            return None
        return self.ring.constant(other)

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        acc = dict(self.terms)
        for e, c in o.terms.items():
            _add_into(acc, e, c)
        return Poly(self.ring, acc)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        acc = dict(self.terms)
        for e, c in o.terms.items():
            _add_into(acc, e, -c)
        return Poly(self.ring, acc)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        acc = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple([a + b for a, b in zip(e1, e2)])
                c = c1 * c2
                if e in acc:
                    acc[e] += c
                else:
                    acc[e] = c
        return Poly(self.ring, {e: c for e, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k):
        return _power(self, k, self.ring.one)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return other.ring is self.ring and other.terms == self.terms
        if is_scalar(other) or getattr(other, "ring", None) is self.ring.base:
            return self.terms == self.ring.constant(other).terms
        return NotImplemented

    def __hash__(self):
        if not self.terms:
            return 0
        if len(self.terms) == 1 and self.ring._zero_exp in self.terms:
            return hash(self.terms[self.ring._zero_exp])
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self):
        """Terms in canonical (descending graded-lex) order."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self, degree=None):
        degs = {sum(e) for e in self.terms}
        if degree is not None:
            return degs <= {degree}
        return len(degs) <= 1

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), self.ring.base.zero)

    def constant_term(self):
        return self.coefficient(self.ring._zero_exp)

    def map_coefficients(self, f, ring):
        """Apply f to every coefficient, landing in the polynomial ring ``ring``."""
        if ring.vars != self.ring.vars:
            raise StructuralError("variable lists differ")
        acc = {}
        for e, c in self.terms.items():
            v = ring.base(f(c))
            if v:
                acc[e] = v
        return Poly(ring, acc)

    def change_ring(self, base):
        return self.map_coefficients(lambda c: c, polynomial_ring(base, self.ring.vars))

    def rename(self, ring):
        """Re-express in ``ring`` whose variables are a permutation of ours."""
        if set(ring.vars) != set(self.ring.vars) or ring.base is not self.ring.base:
            raise StructuralError("incompatible rings for renaming")
        pos = [ring.vars.index(v) for v in self.ring.vars]
        acc = {}
        for e, c in self.terms.items():
            ne = [0] * ring.nvars
            for i, k in enumerate(e):
                ne[pos[i]] = k
            acc[tuple(ne)] = c
        return Poly(ring, acc)

    def _monomial(self, exp):
        parts = []
        for v, k in zip(self.ring.vars, exp):
            if k == 1:
                parts.append(v)
            elif k > 1:
                parts.append(f"{v}^{k}")
        return "*".join(parts)

    def _pairs(self):
        return [(c, self._monomial(e)) for e, c in self.sorted_terms()]

    def _factor_form(self):
        return _single_term_form(self._pairs(), str(self))

    def __str__(self):
        return format_terms(self._pairs())

    def __repr__(self):
        return f"Poly({self})"


def poly_normalize(ring, terms):
    """Build the canonical polynomial from (exponent, coefficient) pairs.

    Duplicates are merged, zeros dropped; the result does not depend on the
    input order.
    """
    acc = {}
    for exp, c in terms:
        exp = tuple(exp)
        if len(exp) != ring.nvars:
            raise StructuralError(f"exponent {exp} has wrong length for {ring}")
        if any(k < 0 for k in exp):
            raise StructuralError(f"negative exponent in {exp}")
        _add_into(acc, exp, ring.base(c))
    return Poly(ring, acc)


def ring_arith(a, b, op):
    """Apply op in {'add', 'sub', 'mul', 'neg'}; operands must share a ring."""
    if op == "neg":
        return -a
    ra, rb = ring_of(a), ring_of(b)
    if ra is not rb and not (is_scalar(a) or is_scalar(b)):
        raise StructuralError(f"ring mismatch: {ra} vs {rb}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise StructuralError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# text parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_ζ][A-Za-z0-9_ζ]*)|(\S))")


def _tokenize(text):
    text = text.replace("−", "-").replace("·", "*").replace("**", "^")
    pos = 0
    out = []
    while True:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        pos = m.end()
        if m.group(1):
            out.append(("int", int(m.group(1))))
        elif m.group(2):
            out.append(("name", m.group(2)))
        else:
            out.append(("op", m.group(3)))
    if text[pos:].strip():
        raise InputError(f"cannot tokenize {text!r}")
    return out


def parse_expression(text, ring, names):
    """Evaluate an arithmetic expression (+ - * ^, /integer, parentheses) in ``ring``."""
    toks = _tokenize(text)
    if not toks:
        raise InputError("empty expression")
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take(kind=None, value=None):
        nonlocal pos
        t = peek()
        if t[0] is None or (kind and t[0] != kind) or (value and t[1] != value):
            raise InputError(f"unexpected token {t[1]!r} in {text!r}")
        pos += 1
        return t

    def expr():
        v = term()
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            w = term()
            v = v + w if op == "+" else v - w
        return v

    def term():
        v = unary()
        while peek() in (("op", "*"), ("op", "/")):
            op = take()[1]
            if op == "*":
                v = v * unary()
            else:
                d = take("int")[1]
                if d == 0:
                    raise InputError("division by zero")
                v = v * Fraction(1, d)
        return v

    def unary():
        if peek() == ("op", "-"):
            take()
            return -unary()
        if peek() == ("op", "+"):
            take()
            return unary()
        return power()

    def power():
        v = atom()
        if peek() == ("op", "^"):
            take()
            v = v ** take("int")[1]
        return v

    def atom():
        kind, val = peek()
        if kind == "int":
            take()
            return ring(val)
        if kind == "name":
            take()
            if val not in names:
                raise InputError(f"unknown name {val!r} in {text!r}")
            return names[val]
        take("op", "(")
        v = expr()
        take("op", ")")
        return v

    v = expr()
    if pos != len(toks):
        raise InputError(f"trailing input in {text!r}")
    return ring(v) if is_scalar(v) else v
