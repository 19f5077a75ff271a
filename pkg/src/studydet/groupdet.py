"""Group determinants, abelian characters, and their factorizations.

Theta(G) = Det(x_{g h^-1}) is computed over Q[x_g] with one variable per
element, named x_<element name> in the group file's element order.
Irreducible representations of nonabelian groups are input data.
"""

import itertools
import json
from dataclasses import dataclass, field
from importlib import resources
from math import lcm

from . import matrix as mx
from .algebra import coset_decompose, load_group, random_basis, twisted_group_algebra
from .errors import BudgetError, InputError, PreconditionError, StructuralError
from .regrep import regrep_element
from .rings import QQ, cyclotomic_field, polynomial_ring

MAX_ORDER = 8

BUNDLED_IRREPS = {"s3": "s3.json", "q8": "q8.json"}


def _check_budget(group):
    if group.order > MAX_ORDER:
        raise BudgetError(f"group order {group.order} exceeds the budget of {MAX_ORDER}")


def _check_untwisted(group):
    if group.cocycle is not None:
        raise PreconditionError(f"{group.name} carries a nontrivial cocycle; group determinants need a plain group")


def variable_ring(group, base=QQ):
    """base[x_g : g in G]."""
    return polynomial_ring(base, [f"x_{name}" for name in group.elements])


def general_element(A, monomials=None, prefix="x"):
    """The general element sum_s s x_s for monomials s of A, in A[x_s].

    Returns (element, algebra over the polynomial ring).  Monomials default to
    the group elements spanning A; scaled monomials such as e_i f_k are allowed.
    """
    group = A.group
    if monomials is None:
        monomials = A.monomials()
    if not monomials:
        raise StructuralError("the general element needs a nonempty monomial set")
    names = []
    for s in monomials:
        if len(s.coords) != 1:
            raise StructuralError(f"{s} is not a monomial")
        (g, _), = s.coords.items()
        names.append(f"{prefix}_{group.elements[g]}")
    ring = polynomial_ring(A.base, names)
    AX = twisted_group_algebra(group, ring, A.span)
    total = AX.zero
    for k, s in enumerate(monomials):
        (g, c), = s.coords.items()
        total = total + AX.monomial(g, ring.gen(k) * c)
    return total, AX


def group_determinant(group, method="matrix"):
    """Theta(G), as Det(x_{g h^-1}) ("matrix") or Det(sum_g x_g L_G(g)) ("regrep")."""
    group = load_group(group)
    _check_budget(group)
    _check_untwisted(group)
    ring = variable_ring(group)
    if method == "matrix":
        xs = ring.gens()
        n = group.order
        entries = [xs[group.table[g][group.inv[h]]] for g in range(n) for h in range(n)]
        return mx.det(mx.RingMatrix(ring, n, n, entries))
    if method == "regrep":
        A = twisted_group_algebra(group, ring)
        B = twisted_group_algebra(group, ring, "trivial")
        X = A.from_coords({g: ring.gen(g) for g in range(group.order)})
        return mx.det(regrep_element(coset_decompose(A, B), X)).scalar_part()
    raise StructuralError(f"unknown method {method!r}")


def renumbering_invariance(group, perm):
    """True iff relabeling the elements by ``perm`` gives the same Theta(G) after renaming variables."""
    group = load_group(group)
    theta = group_determinant(group)
    other = group_determinant(group.relabel(perm))
    return other.rename(theta.ring) == theta


# ---------------------------------------------------------------------------
# characters

@dataclass
class CharacterTable:
    group: object
    subgroup: tuple
    conductor: int
    exponents: list  # exponents[c][g] = k with chi_c(g) = zeta^k

    @property
    def field(self):
        return cyclotomic_field(self.conductor)

    def value(self, c, g):
        return self.field.zeta(self.exponents[c][g])

    def characters(self):
        return [{g: self.value(c, g) for g in self.subgroup} for c in range(len(self.exponents))]

    def __len__(self):
        return len(self.exponents)


def _generators(group, idx):
    gens, span = [], {group.identity}
    for g in idx:
        if g not in span:
            gens.append(g)
            span = _closure(group, gens)
    return gens


def _closure(group, gens):
    span = {group.identity}
    frontier = [group.identity]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = group.table[x][g]
            if y not in span:
                span.add(y)
                frontier.append(y)
    return span


def abelian_characters(group, subgroup=None):
    """All homomorphisms from an abelian (sub)group into the roots of unity of its exponent."""
    group = load_group(group)
    idx = tuple(range(group.order)) if subgroup is None else group.subgroup(subgroup)
    if not group.is_abelian(idx):
        raise PreconditionError("subgroup must be abelian")
    n = group.exponent(idx)
    gens = _generators(group, idx)
    found = []
    for assign in itertools.product(range(n), repeat=len(gens)):
        chi = {group.identity: 0}
        frontier = [group.identity]
        ok = True
        while frontier and ok:
            x = frontier.pop()
            for g, k in zip(gens, assign):
                y = group.table[x][g]
                v = (chi[x] + k) % n
                if y in chi:
                    if chi[y] != v:
                        ok = False
                        break
                else:
                    chi[y] = v
                    frontier.append(y)
        if ok and all((chi[a] + chi[b] - chi[group.table[a][b]]) % n == 0 for a in idx for b in idx):
            found.append(chi)
    table = CharacterTable(group, idx, n, found)
    _check_orthogonality(table)
    return table


def _check_orthogonality(table):
    group, idx = table.group, table.subgroup
    if len(table) != len(idx):
        raise StructuralError(f"found {len(table)} characters for a group of order {len(idx)}")
    F = table.field
    for c1 in range(len(table)):
        for c2 in range(len(table)):
            s = F.zero
            for g in idx:
                s = s + table.value(c1, g) * table.value(c2, group.inv[g])
            if s != F(len(idx) if c1 == c2 else 0):
                raise StructuralError(f"characters {c1} and {c2} violate orthogonality")


# ---------------------------------------------------------------------------
# factorization reports

@dataclass
class FactorizationReport:
    name: str
    target: object
    factors: list               # [(polynomial, multiplicity)]
    product_ok: bool
    degrees: list = field(default_factory=list)
    checks: dict = field(default_factory=dict)

    @property
    def ok(self):
        return self.product_ok and all(self.checks.values())

    def to_dict(self):
        return {
            "name": self.name,
            "target": str(self.target),
            "factors": [{"factor": str(p), "multiplicity": k} for p, k in self.factors],
            "degrees": list(self.degrees),
            "product_check": self.product_ok,
            "checks": dict(self.checks),
        }


def _product(factors, ring):
    total = ring.one
    for p, k in factors:
        total = total * p ** k
    return total


def dedekind_factorize(group):
    """Theta(G) = prod_chi sum_g chi(g) x_g for abelian G."""
    group = load_group(group)
    _check_budget(group)
    if not group.is_abelian():
        raise PreconditionError("subgroup must be abelian: G itself is not")
    theta = group_determinant(group)
    chars = abelian_characters(group)
    ring = variable_ring(group, chars.field)
    factors = []
    for c in range(len(chars)):
        lin = ring.zero
        for g in range(group.order):
            lin = lin + ring.gen(g) * chars.value(c, g)
        factors.append((lin, 1))
    target = theta.change_ring(chars.field)
    product_ok = _product(factors, ring) == target
    return FactorizationReport("dedekind", theta, factors, product_ok, [1] * len(factors),
                               {"homogeneous": theta.is_homogeneous(group.order)})


def theta_relative(group, subgroup, basis=None):
    """Theta(G:H) = Det over B = Q[x_g]H of L(X_G), an element of B.

    Returns (theta, basis).  ``basis`` may be a TowerBasis of the same algebras
    (used to check independence of the representatives).
    """
    group = load_group(group)
    _check_budget(group)
    _check_untwisted(group)
    idx = group.subgroup(subgroup)
    if not group.is_abelian(idx):
        raise PreconditionError("subgroup must be abelian")
    ring = variable_ring(group)
    A = twisted_group_algebra(group, ring)
    B = twisted_group_algebra(group, ring, idx)
    if basis is None:
        basis = coset_decompose(A, B)
    X = A.from_coords({g: ring.gen(g) for g in range(group.order)})
    return mx.det(regrep_element(basis, X)), basis


def theta_relative_alternative(group, subgroup, rng):
    """Theta(G:H) with randomly chosen coset representatives and scales."""
    theta, basis = theta_relative(group, subgroup)
    alt = random_basis(basis.A, basis.B, rng)
    return theta_relative(group, subgroup, alt)[0]


def apply_character(theta, chars, c):
    """chi(Theta(G:H)) = sum_h chi(h) p_h in Q(zeta)[x_g]."""
    F = chars.field
    ring = polynomial_ring(F, theta.ring.base.vars)
    total = ring.zero
    for h, p in theta.coords.items():
        total = total + p.change_ring(F) * chars.value(c, h)
    return total


def extension_check(group, subgroup):
    """Theta(G) = prod_{chi in H^} chi(Theta(G:H))."""
    group = load_group(group)
    theta_rel, basis = theta_relative(group, subgroup)
    chars = abelian_characters(group, subgroup)
    index = basis.m
    factors = [(apply_character(theta_rel, chars, c), 1) for c in range(len(chars))]
    ring = polynomial_ring(chars.field, theta_rel.ring.base.vars)
    target = group_determinant(group)
    product_ok = _product(factors, ring) == target.change_ring(chars.field)
    coords_homog = all(p.is_homogeneous(index) for p in theta_rel.coords.values())
    return FactorizationReport("extension", target, factors, product_ok, [index] * len(factors),
                               {"relative_homogeneous": coords_homog})


# ---------------------------------------------------------------------------
# supplied irreducible representations

@dataclass
class SuppliedRepresentation:
    degree: int
    conductor: int
    images: dict  # element index -> d x d RingMatrix over Q(zeta_conductor)

    def image(self, g):
        return self.images[g]


def representation_from_dict(group, data, where="<irrep>"):
    if not isinstance(data, dict):
        raise InputError(f"{where}: expected an object")
    try:
        d = int(data["degree"])
        n = int(data.get("conductor", 1))
        images = data["images"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{where}: missing or malformed field ({exc})") from None
    if d < 1 or n < 1:
        raise InputError(f"{where}: degree and conductor must be positive")
    F = cyclotomic_field(n)
    out = {}
    for name, rows in images.items():
        try:
            g = group.index(name)
        except StructuralError as exc:
            raise InputError(f"{where}: {exc}") from None
        if not isinstance(rows, list) or len(rows) != d or any(not isinstance(r, list) or len(r) != d for r in rows):
            raise InputError(f"{where}: image of {name} is not a {d}x{d} array")
        try:
            out[g] = mx.matrix(F, [[F(v) if not isinstance(v, str) else F.parse(v) for v in r] for r in rows])
        except (InputError, StructuralError) as exc:
            raise InputError(f"{where}: image of {name}: {exc}") from None
    missing = [group.elements[g] for g in range(group.order) if g not in out]
    if missing:
        raise InputError(f"{where}: no image given for {', '.join(missing)}")
    return SuppliedRepresentation(d, n, out)


def validate_representation(group, rep, where="<irrep>"):
    """Raise InputError unless rep is a homomorphism with rep(1) = I."""
    F = cyclotomic_field(rep.conductor)
    if rep.images[group.identity] != mx.identity(rep.degree, F):
        raise InputError(f"{where}: the identity is not sent to the identity matrix")
    for a in range(group.order):
        for b in range(group.order):
            if rep.images[a] * rep.images[b] != rep.images[group.table[a][b]]:
                raise InputError(f"{where}: not multiplicative at the pair "
                                 f"({group.elements[a]}, {group.elements[b]})")


def load_irreps(group, source):
    """Load supplied representations from a JSON path or a bundled name ('s3', 'q8')."""
    group = load_group(group)
    key = str(source).lower()
    if key in BUNDLED_IRREPS:
        text = resources.files("studydet").joinpath("data").joinpath("irreps").joinpath(BUNDLED_IRREPS[key]).read_text(encoding="utf-8")
        data, where = json.loads(text), BUNDLED_IRREPS[key]
    else:
        try:
            with open(source, encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise InputError(f"{source}: cannot read irrep file ({exc.strerror})") from None
        except json.JSONDecodeError as exc:
            raise InputError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
        where = str(source)
    if isinstance(data, dict) and "irreps" in data:
        data = data["irreps"]
    if isinstance(data, dict):
        data = [data]
    if not isinstance(data, list):
        raise InputError(f"{where}: expected a list of representations")
    reps = []
    for k, item in enumerate(data):
        rep = representation_from_dict(group, item, f"{where}[{k}]")
        validate_representation(group, rep, f"{where}[{k}]")
        reps.append(rep)
    return reps


def _common_field(reps, extra=1):
    n = extra
    for rep in reps:
        n = lcm(n, rep.conductor)
    return cyclotomic_field(n)


def representation_determinant(group, rep, F=None):
    """Det(phi(X_G)) = Det(sum_g x_g phi(g)) over Q(zeta)[x_g]."""
    F = cyclotomic_field(rep.conductor) if F is None else F
    ring = variable_ring(group, F)
    d = rep.degree
    total = mx.zero_matrix(d, d, ring)
    for g in range(group.order):
        img = rep.images[g].map(F, F).map(ring, ring)
        total = total + img * ring.gen(g)
    return mx.det(total)


def frobenius_verify(group, reps):
    """Theta(G) = prod Det(phi(X_G))^(deg phi), with degree bookkeeping."""
    group = load_group(group)
    _check_budget(group)
    total_sq = sum(rep.degree ** 2 for rep in reps)
    if total_sq != group.order:
        raise InputError(f"sum of squared degrees is {total_sq}, but |G| = {group.order}")
    for k, rep in enumerate(reps):
        validate_representation(group, rep, f"irrep {k}")
    F = _common_field(reps)
    factors = [(representation_determinant(group, rep, F), rep.degree) for rep in reps]
    theta = group_determinant(group)
    ring = variable_ring(group, F)
    product_ok = _product(factors, ring) == theta.change_ring(F)
    degrees_ok = all(p.is_homogeneous(rep.degree) and p.degree() == rep.degree
                     for (p, _), rep in zip(factors, reps))
    return FactorizationReport("frobenius", theta, factors, product_ok, [rep.degree for rep in reps],
                               {"sum_of_squares": True, "factor_degrees": degrees_ok})


def degree_bound_check(group, subgroup, reps):
    """True iff every supplied degree is at most [G:H]."""
    group = load_group(group)
    index = group.order // len(group.subgroup(subgroup))
    return all(rep.degree <= index for rep in reps)


def irreps_match_relative_check(group, subgroup, reps):
    """prod_i Det(phi_i(X))^(d_i) equals prod_chi chi(Theta(G:H)), both expanded."""
    group = load_group(group)
    theta_rel, _ = theta_relative(group, subgroup)
    chars = abelian_characters(group, subgroup)
    F = _common_field(reps, chars.conductor)
    ring = variable_ring(group, F)
    left = ring.one
    for rep in reps:
        left = left * representation_determinant(group, rep, F) ** rep.degree
    right = ring.one
    for c in range(len(chars)):
        right = right * apply_character(theta_rel, chars, c).map_coefficients(F, ring)
    return left == right
