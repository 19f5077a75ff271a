"""Finite groups, 2-cocycles and twisted group algebras R^c[G].

Every algebra tower C <= B <= A handled by the package is a twisted group
algebra restricted to the spans of nested subgroups K <= H <= G.  Quaternions
are C2 x C2 with a sign cocycle, Q(i) inside them is the span of {1, i}, and
group algebras over polynomial rings use the trivial cocycle.
"""

import json
import re
from dataclasses import dataclass, fields
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from . import matrix as mx
from .errors import InputError, NotInvertibleError, PreconditionError, StructuralError
from .rings import QQ, Ring, format_terms, is_scalar, _single_term_form

_IDENT = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")

BUNDLED_GROUPS = {
    "c1": "c1.json", "c2": "c2.json", "c3": "c3.json", "c4": "c4.json",
    "c6": "c6.json", "c2xc2": "c2xc2.json", "s3": "s3.json", "d4": "d4.json",
    "q8": "q8.json", "h": "quaternion.json", "quaternion": "quaternion.json",
}


# ---------------------------------------------------------------------------
# validation

def validate_group(table):
    """Return None for a valid Cayley table, else a description of the first violation."""
    n = len(table)
    if n == 0:
        return "empty table"
    for i, row in enumerate(table):
        if len(row) != n:
            return f"shape: row {i} has length {len(row)}, expected {n}"
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                return f"shape: table[{i}][{j}] = {v!r} is not an element index"
    ident = [e for e in range(n)
             if all(table[e][g] == g and table[g][e] == g for g in range(n))]
    if not ident:
        return "identity axiom: no two-sided identity element"
    e = ident[0]
    for g in range(n):
        if not any(table[g][h] == e and table[h][g] == e for h in range(n)):
            return f"inverse axiom: element {g} has no inverse"
    for i in range(n):
        if len(set(table[i])) != n:
            return f"latin square: row {i} repeats an entry"
        if len({table[k][i] for k in range(n)}) != n:
            return f"latin square: column {i} repeats an entry"
    for a in range(n):
        for b in range(n):
            ab = table[a][b]
            for c in range(n):
                if table[ab][c] != table[a][table[b][c]]:
                    return f"associativity: ({a}*{b})*{c} != {a}*({b}*{c})"
    return None


def validate_cocycle(table, cocycle, ring=QQ):
    """Return None if ``cocycle`` is a normalized unit-valued 2-cocycle, else the first violation."""
    n = len(table)
    if len(cocycle) != n or any(len(row) != n for row in cocycle):
        return "shape: cocycle must be N x N"
    c = [[ring(v) for v in row] for row in cocycle]
    e = next(g for g in range(n) if all(table[g][h] == h for h in range(n)))
    for g in range(n):
        if c[e][g] != ring.one or c[g][e] != ring.one:
            return f"normalization: c(1, {g}) or c({g}, 1) is not 1"
        for h in range(n):
            if not ring.is_unit(c[g][h]):
                return f"unit: c({g}, {h}) is not a unit"
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if c[i][j] * c[table[i][j]][k] != c[j][k] * c[i][table[j][k]]:
                    return f"cocycle identity fails at triple ({i}, {j}, {k})"
    return None


# ---------------------------------------------------------------------------
# groups

def _cocycle_value(v):
    if is_scalar(v):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v.replace("−", "-"))
        except ValueError:
            return v.strip()
    raise InputError(f"cocycle entry {v!r} is neither a number nor a string")


class FiniteGroup:
    """A finite group given by its Cayley table, optionally carrying a 2-cocycle.

    Elements are indices 0..N-1; ``table[i][j]`` is the index of g_i g_j.
    """

    def __init__(self, name, elements, table, subgroups=None, cocycle=None):
        self.name = name
        self.elements = tuple(str(x) for x in elements)
        self.table = tuple(tuple(row) for row in table)
        self.order = len(self.table)
        if len(self.elements) != self.order:
            raise StructuralError(f"{len(self.elements)} element names for a table of order {self.order}")
        if len(set(self.elements)) != self.order:
            raise StructuralError("element names must be distinct")
        problem = validate_group(self.table)
        if problem:
            raise StructuralError(f"invalid group table: {problem}")
        self.identity = next(g for g in range(self.order) if self.table[g] == tuple(range(self.order)))
        self.inv = tuple(next(h for h in range(self.order) if self.table[g][h] == self.identity)
                         for g in range(self.order))
        self.cocycle = None
        if cocycle is not None:
            coc = tuple(tuple(_cocycle_value(v) for v in row) for row in cocycle)
            if any(v != 1 for row in coc for v in row):
                self.cocycle = coc
            if all(isinstance(v, Fraction) for row in coc for v in row):
                problem = validate_cocycle(self.table, coc)
                if problem:
                    raise StructuralError(f"invalid cocycle: {problem}")
        self.subgroups = {}
        for key, idx in (subgroups or {}).items():
            self.subgroups[key] = self._check_subgroup(idx, key)

    def __repr__(self):
        return f"FiniteGroup({self.name}, order {self.order})"

    def index(self, g):
        if isinstance(g, int) and not isinstance(g, bool):
            if not 0 <= g < self.order:
                raise StructuralError(f"element index {g} out of range")
            return g
        try:
            return self.elements.index(str(g))
        except ValueError:
            raise StructuralError(f"unknown element {g!r} of {self.name}") from None

    def mul(self, a, b):
        return self.table[a][b]

    def _check_subgroup(self, idx, label="subgroup"):
        idx = tuple(sorted({self.index(g) for g in idx}))
        if not self.is_subgroup(idx):
            raise StructuralError(f"{label} {list(idx)} is not a subgroup of {self.name}")
        return idx

    def is_subgroup(self, idx):
        s = set(idx)
        return (self.identity in s and all(self.table[a][b] in s for a in s for b in s)
                and all(self.inv[a] in s for a in s))

    def subgroup(self, which):
        """Indices of a named subgroup ('G' and 'trivial' are always available) or of an index list."""
        if isinstance(which, str):
            if which in self.subgroups:
                return self.subgroups[which]
            if which in ("G", self.name):
                return tuple(range(self.order))
            if which in ("1", "trivial"):
                return (self.identity,)
            raise StructuralError(f"{self.name} has no subgroup named {which!r}; known: {sorted(self.subgroups)}")
        return self._check_subgroup(which)

    def is_abelian(self, idx=None):
        idx = range(self.order) if idx is None else idx
        return all(self.table[a][b] == self.table[b][a] for a in idx for b in idx)

    def element_order(self, g):
        k, x = 1, g
        while x != self.identity:
            x = self.table[x][g]
            k += 1
        return k

    def exponent(self, idx=None):
        from math import lcm
        idx = range(self.order) if idx is None else idx
        e = 1
        for g in idx:
            e = lcm(e, self.element_order(g))
        return e

    def relabel(self, perm):
        """The same group with element k moved to position perm[k]."""
        n = self.order
        if sorted(perm) != list(range(n)):
            raise StructuralError("relabeling must be a permutation of the indices")
        back = [0] * n
        for k, p in enumerate(perm):
            back[p] = k
        names = [self.elements[back[p]] for p in range(n)]
        table = [[perm[self.table[back[a]][back[b]]] for b in range(n)] for a in range(n)]
        coc = None
        if self.cocycle is not None:
            coc = [[self.cocycle[back[a]][back[b]] for b in range(n)] for a in range(n)]
        subs = {k: [perm[g] for g in v] for k, v in self.subgroups.items()}
        return FiniteGroup(self.name, names, table, subs, coc)

    def to_dict(self):
        d = {"name": self.name, "elements": list(self.elements), "table": [list(r) for r in self.table]}
        if self.cocycle is not None:
            d["cocycle"] = [[str(v) for v in row] for row in self.cocycle]
        if self.subgroups:
            d["subgroups"] = {k: list(v) for k, v in self.subgroups.items()}
        return d


def group_from_dict(data, where="<group>"):
    if not isinstance(data, dict):
        raise InputError(f"{where}: expected a JSON object")
    for key in ("elements", "table"):
        if key not in data:
            raise InputError(f"{where}: missing field {key!r}")
    elements, table = data["elements"], data["table"]
    if not isinstance(elements, list) or not all(isinstance(x, str) for x in elements):
        raise InputError(f"{where}: 'elements' must be a list of strings")
    if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
        raise InputError(f"{where}: 'table' must be an array of arrays")
    subs = data.get("subgroups", {})
    if not isinstance(subs, dict):
        raise InputError(f"{where}: 'subgroups' must map names to index lists")
    try:
        return FiniteGroup(data.get("name", "G"), elements, table, subs, data.get("cocycle"))
    except StructuralError as exc:
        raise InputError(f"{where}: {exc}") from None


def load_group(source):
    """Load a group from a JSON path, or by bundled name (C2, S3, Q8, H, ...)."""
    if isinstance(source, FiniteGroup):
        return source
    key = str(source).lower()
    if key in BUNDLED_GROUPS:
        return _bundled(BUNDLED_GROUPS[key])
    try:
        with open(source, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"{source}: cannot read group file ({exc.strerror})") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return group_from_dict(data, str(source))


@lru_cache(maxsize=None)
def _bundled(fname):
    text = resources.files("studydet").joinpath("data").joinpath("groups").joinpath(fname).read_text(encoding="utf-8")
    return group_from_dict(json.loads(text), fname)


# ---------------------------------------------------------------------------
# twisted group algebras

class TwistedGroupAlgebra(Ring):
    """span_base{u_g : g in span} with u_g u_h = c(g, h) u_{gh}.

    ``span`` must be a subgroup; coefficients are central.
    """

    def __init__(self, group, base, span):
        if not group.is_subgroup(span):
            raise StructuralError(f"span {list(span)} is not a subgroup of {group.name}")
        self.group = group
        self.base = base
        self.span = tuple(span)
        self.spanset = frozenset(span)
        self._c = None
        if group.cocycle is not None:
            self._c = [[_coerce_cocycle(base, v) for v in row] for row in group.cocycle]
        sym = self._c is None or all(self._c[a][b] == self._c[b][a] for a in span for b in span)
        self.commutative = base.commutative and group.is_abelian(span) and sym
        self.zero = TGAElement(self, {})
        self.one = TGAElement(self, {group.identity: base.one})

    def __repr__(self):
        g = self.group
        if len(self.span) == g.order:
            return f"{self.base}[{g.name}]"
        return f"{self.base}[{g.name}|{','.join(g.elements[k] for k in self.span)}]"

    def __reduce__(self):
        return (twisted_group_algebra, (self.group, self.base, self.span))

    def c(self, g, h):
        return self.base.one if self._c is None else self._c[g][h]

    def monomial(self, g, coef=None):
        g = self.group.index(g)
        if g not in self.spanset:
            raise StructuralError(f"{self.group.elements[g]} is outside {self}")
        coef = self.base.one if coef is None else self.base(coef)
        return TGAElement(self, {g: coef} if coef else {})

    def monomials(self):
        return [self.monomial(g) for g in self.span]

    def from_coords(self, coords):
        """Build from {element index or name: coefficient}."""
        out = {}
        for g, c in coords.items():
            g = self.group.index(g)
            if g not in self.spanset:
                raise StructuralError(f"{self.group.elements[g]} is outside {self}")
            c = self.base(c)
            if c:
                out[g] = c
        return TGAElement(self, out)

    def __call__(self, x):
        if isinstance(x, TGAElement):
            if x.ring is self:
                return x
            if x.ring.group is self.group and x.ring.base is self.base:
                if not set(x.coords) <= self.spanset:
                    raise StructuralError(f"{x} does not lie in {self}")
                return TGAElement(self, dict(x.coords))
            raise StructuralError(f"ring mismatch: {x.ring} vs {self}")
        if isinstance(x, str):
            return self.parse(x)
        c = self.base(x)
        return TGAElement(self, {self.group.identity: c} if c else {})

    def names(self):
        d = dict(self.base.names())
        for g in self.span:
            name = self.group.elements[g]
            m = self.monomial(g)
            d[f"u_{name}"] = m
            if _IDENT.match(name):
                d[name] = m
        return d

    def left_matrix(self, x):
        """Matrix of y -> x*y on the monomial basis of the span, over the base ring."""
        cols = []
        for g in self.span:
            prod = x * self.monomial(g)
            cols.append([prod.coords.get(h, self.base.zero) for h in self.span])
        n = len(self.span)
        return mx.RingMatrix(self.base, n, n, [cols[j][i] for i in range(n) for j in range(n)])

    def is_unit(self, x):
        x = self(x)
        if not self.base.is_field:
            if len(x.coords) == 1:
                (g, c), = x.coords.items()
                return self.base.is_unit(c)
            raise PreconditionError(f"unit check unavailable over {self}")
        return bool(mx.det(self.left_matrix(x)))

    def inverse(self, x):
        x = self(x)
        if len(x.coords) == 1:
            (g, c), = x.coords.items()
            if not self.base.is_unit(c):
                raise NotInvertibleError(f"{x} is not a unit")
            gi = self.group.inv[g]
            return TGAElement(self, {gi: self.base.inverse(c * self.c(g, gi))})
        if not self.base.is_field:
            raise PreconditionError(f"unit check unavailable over {self}")
        inv = mx.mat_inverse_field(self.left_matrix(x))
        col = self.span.index(self.group.identity)
        y = TGAElement(self, {h: inv[i, col] for i, h in enumerate(self.span) if inv[i, col]})
        if x * y != self.one or y * x != self.one:
            raise NotInvertibleError(f"{x} has no two-sided inverse")
        return y

    def random_element(self, rng, bound=3):
        return TGAElement(self, {g: c for g in self.span
                                 for c in [self.base.random_element(rng, bound)] if c})

    def central(self, x):
        """True iff x commutes with every monomial of this algebra."""
        return all(x * m == m * x for m in self.monomials())


def _coerce_cocycle(base, v):
    if isinstance(v, Fraction):
        if v.denominator == 1:
            return int(v) if v in (1, -1) else base(v)
        return base(v)
    return base(v)


@lru_cache(maxsize=None)
def _tga(group, base, span):
    return TwistedGroupAlgebra(group, base, span)


def twisted_group_algebra(group, base=QQ, span=None):
    """The (cached) algebra over ``base`` spanned by the subgroup ``span`` (default: all of G)."""
    if span is None:
        span = tuple(range(group.order))
    elif isinstance(span, str):
        span = group.subgroup(span)
    else:
        span = tuple(sorted({group.index(g) for g in span}))
    return _tga(group, base, span)


class TGAElement:
    """Finite sum of coefficient * u_g; ``coords`` maps element index to nonzero coefficient."""

    __slots__ = ("ring", "coords")
    _outer = True

    def __init__(self, ring, coords):
        self.ring = ring
        self.coords = coords

    def _same(self, other):
        if other.ring is not self.ring:
            raise StructuralError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other):
        if not isinstance(other, TGAElement):
            if isinstance(other, mx.RingMatrix):
                return NotImplemented
            other = self.ring(other)
        self._same(other)
        acc = dict(self.coords)
        for g, c in other.coords.items():
            if g in acc:
                s = acc[g] + c
                if s:
                    acc[g] = s
                else:
                    del acc[g]
            else:
                acc[g] = c
        return TGAElement(self.ring, acc)

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        return TGAElement(self.ring, {g: -c for g, c in self.coords.items()})

    def __sub__(self, other):
        if isinstance(other, mx.RingMatrix):
            return NotImplemented
        return self + (-other if isinstance(other, TGAElement) else -self.ring.base(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, mx.RingMatrix):
            return NotImplemented
        if not isinstance(other, TGAElement):
            s = other if is_scalar(other) else self.ring.base(other)
            return TGAElement(self.ring, {g: v for g, c in self.coords.items() for v in [c * s] if v})
        self._same(other)
        table = self.ring.group.table
        coc = self.ring._c
        acc = {}
        for g, a in self.coords.items():
            row = table[g]
            for h, b in other.coords.items():
                k = row[h]
                v = a * b
                if coc is not None:
                    t = coc[g][h]
                    if t != 1:
                        v = v * t
                if k in acc:
                    v = acc[k] + v
                if v:
                    acc[k] = v
                elif k in acc:
                    del acc[k]
        return TGAElement(self.ring, acc)

    def __rmul__(self, other):
        s = other if is_scalar(other) else self.ring.base(other)
        return TGAElement(self.ring, {g: v for g, c in self.coords.items() for v in [s * c] if v})

    def __pow__(self, k):
        result = self.ring.one
        for _ in range(k):
            result = result * self
        return result

    def __bool__(self):
        return bool(self.coords)

    def __eq__(self, other):
        if isinstance(other, TGAElement):
            return other.ring is self.ring and other.coords == self.coords
        if is_scalar(other):
            return self == self.ring(other)
        return NotImplemented

    def __hash__(self):
        if set(self.coords) <= {self.ring.group.identity}:
            return hash(self.coords.get(self.ring.group.identity, 0))
        return hash(frozenset(self.coords.items()))

    def coefficient(self, g):
        return self.coords.get(self.ring.group.index(g), self.ring.base.zero)

    def scalar_part(self):
        """The coefficient of the identity, if this element is a pure scalar."""
        e = self.ring.group.identity
        if set(self.coords) - {e}:
            raise StructuralError(f"{self} is not a scalar multiple of 1")
        return self.coords.get(e, self.ring.base.zero)

    def map_coefficients(self, f, ring):
        """Apply f to each coefficient, landing in the algebra ``ring`` over another base."""
        return TGAElement(ring, {g: v for g, c in self.coords.items() for v in [ring.base(f(c))] if v})

    def _pairs(self):
        g = self.ring.group
        out = []
        for k in sorted(self.coords):
            name = g.elements[k]
            mono = "" if k == g.identity else (name if _IDENT.match(name) else f"u_{name}")
            out.append((self.coords[k], mono))
        return out

    def _factor_form(self):
        return _single_term_form(self._pairs(), str(self))

    def __str__(self):
        return format_terms(self._pairs())

    def __repr__(self):
        return f"TGAElement({self})"


# ---------------------------------------------------------------------------
# tower bases

class TowerBasis:
    """A basis e = (e_1, ..., e_m) of A as a free right B-module.

    A and B are twisted group algebras on nested subgroups H = span(B) <= span(A);
    e_i = s_i u_{g_i} with the g_i a transversal of the left cosets gH and s_i units.
    """

    def __init__(self, A, B, reps):
        if A.group is not B.group or A.base is not B.base:
            raise StructuralError(f"{B} is not a subalgebra of {A}")
        if not B.spanset <= A.spanset:
            raise StructuralError(f"span of {B} is not inside {A}")
        self.A, self.B = A, B
        group, base = A.group, A.base
        self.group = group
        reps = [(group.index(g), base(s)) for g, s in reps]
        self.reps = tuple(reps)
        self.m = len(reps)
        H = B.span
        coset = {}
        for i, (g, s) in enumerate(reps):
            if g not in A.spanset:
                raise StructuralError(f"representative {group.elements[g]} lies outside {A}")
            if not base.is_unit(s):
                raise StructuralError(f"scale {s} of representative {group.elements[g]} is not a unit")
            for h in H:
                x = group.table[g][h]
                if x in coset:
                    raise StructuralError(f"representatives {group.elements[g]} and "
                                          f"{group.elements[reps[coset[x][0]][0]]} share a coset")
                coset[x] = (i, h)
        if len(coset) != len(A.span):
            raise StructuralError("representatives do not cover every coset")
        self._decomp = {}
        for x, (i, h) in coset.items():
            g, s = reps[i]
            self._decomp[x] = (i, h, base.inverse(s * A.c(g, h)))

    def __repr__(self):
        names = ", ".join(str(self.element(i)) for i in range(self.m))
        return f"TowerBasis({self.A} over {self.B}: {names})"

    def element(self, i):
        g, s = self.reps[i]
        return TGAElement(self.A, {g: s})

    def elements(self):
        return [self.element(i) for i in range(self.m)]

    def decompose(self, x):
        """u_x = unit * e_i * u_h; returns (i, h, unit)."""
        return self._decomp[x]

    def coordinates(self, a):
        """[b_1, ..., b_m] in B with a = sum e_i b_i."""
        a = self.A(a)
        out = [dict() for _ in range(self.m)]
        for x, coef in a.coords.items():
            i, h, unit = self._decomp[x]
            v = coef * unit
            d = out[i]
            if h in d:
                v = d[h] + v
            if v:
                d[h] = v
            elif h in d:
                del d[h]
        return [TGAElement(self.B, d) for d in out]

    def recompose(self, coords):
        total = self.A.zero
        for i, b in enumerate(coords):
            total = total + self.element(i) * self.A(b)
        return total


def coset_decompose(A, B, reps=None, scales=None):
    """Tower basis of A over B.

    By default the representatives are canonical: the identity first, then the
    smallest element index of every remaining left coset, all with scale 1.
    """
    group = A.group
    if reps is None:
        H = B.span
        seen = set()
        reps = []
        order = [group.identity] + [g for g in A.span if g != group.identity]
        for g in order:
            if g not in seen:
                reps.append(g)
                seen.update(group.table[g][h] for h in H)
    if scales is None:
        scales = [1] * len(reps)
    return TowerBasis(A, B, list(zip(reps, scales)))


def random_basis(A, B, rng):
    """A tower basis with randomly chosen representatives and unit scales (+-1, +-2)."""
    canon = coset_decompose(A, B)
    group = A.group
    reps = []
    for g, _ in canon.reps:
        coset = [group.table[g][h] for h in B.span]
        reps.append(rng.choice(coset))
    perm = list(range(len(reps)))
    rng.shuffle(perm)
    reps = [reps[k] for k in perm]
    scales = [rng.choice([1, -1, 2, -2]) for _ in reps]
    return TowerBasis(A, B, list(zip(reps, scales)))


def tower(group, base=QQ, upper=None, lower="trivial"):
    """(A, B, basis) for the algebras on subgroups lower <= upper of ``group``."""
    group = load_group(group)
    A = twisted_group_algebra(group, base, upper)
    B = twisted_group_algebra(group, base, lower)
    return coset_decompose(A, B)


def product_basis(upper, lower):
    """The basis e (x) f of A over C: e_i f_k placed at position k*m + i."""
    if lower.A is not upper.B:
        raise StructuralError(f"towers are not nested: {upper.B} vs {lower.A}")
    A, C = upper.A, lower.B
    group = A.group
    reps = []
    for gk, tk in lower.reps:
        for gi, si in upper.reps:
            reps.append((group.table[gi][gk], si * tk * A.c(gi, gk)))
    return TowerBasis(A, C, reps)


@dataclass(frozen=True)
class BasisConditions:
    invertible: bool          # (i)
    conjugation_closed: bool  # (ii)
    closed_product: bool      # (iii)
    has_identity: bool        # (iv)
    has_inverses: bool        # (v)
    commuting: bool           # (vi)
    group_ok: bool            # (eB, *) satisfies the group axioms

    def holds(self, *names):
        return all(getattr(self, n) for n in names)

    def as_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}


def coset_product_table(basis):
    """prod[i][j] = k with e_i B * e_j B = e_k B, or None when the product set is no e_k B."""
    group = basis.group
    H = basis.B.span
    cosets = [frozenset(group.table[g][h] for h in H) for g, _ in basis.reps]
    index = {c: k for k, c in enumerate(cosets)}
    prod = []
    for gi, _ in basis.reps:
        row = []
        for gj, _ in basis.reps:
            gij = group.table[gi][gj]
            row.append(index.get(frozenset(group.table[gij][h] for h in H)))
        prod.append(row)
    return prod, cosets


def basis_conditions(basis):
    """Evaluate conditions (i)-(vi) on a tower basis by enumeration over monomials."""
    group, A, B = basis.group, basis.A, basis.B
    H = set(B.span)
    m = basis.m
    invertible = all(A.base.is_unit(s) and A.base.is_unit(A.c(g, group.inv[g])) for g, s in basis.reps)
    conj = all(group.table[group.table[group.inv[g]][h]][g] in H for g, _ in basis.reps for h in H)
    prod, cosets = coset_product_table(basis)
    closed = all(k is not None for row in prod for k in row)
    identity = [k for k in range(m) if cosets[k] == frozenset(H)]
    has_identity = bool(identity)
    has_inverses = closed and has_identity and all(
        any(prod[i][j] == identity[0] for j in range(m)) for i in range(m))
    commuting = closed and all(prod[i][j] == prod[j][i] for i in range(m) for j in range(m))
    group_ok = False
    if closed and has_identity:
        e = identity[0]
        assoc = all(prod[prod[i][j]][k] == prod[i][prod[j][k]]
                    for i in range(m) for j in range(m) for k in range(m))
        unit = all(prod[e][i] == i == prod[i][e] for i in range(m))
        inverses = all(any(prod[i][j] == e == prod[j][i] for j in range(m)) for i in range(m))
        group_ok = assoc and unit and inverses
    return BasisConditions(invertible, conj, closed, has_identity, has_inverses, commuting, group_ok)


def subalgebra_commutative(basis):
    """True iff B is commutative: H abelian and the cocycle symmetric on H."""
    return basis.B.commutative


def require_conditions(basis, *names):
    conds = basis_conditions(basis)
    missing = [n for n in names if not getattr(conds, n)]
    if missing:
        raise PreconditionError(f"basis conditions not satisfied: {', '.join(missing)}")
    return conds


GROUP_CONDITIONS = ("closed_product", "has_identity", "has_inverses", "group_ok")
