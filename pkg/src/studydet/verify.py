"""Seeded property suites.

Every trial draws from its own ``random.Random`` (Mersenne Twister) seeded with
the string "<seed>:<suite>:<trial>", so a failure is reproduced by the master
seed and the trial index alone.  Rational coefficients are drawn uniformly
from {-3, ..., 3}; cyclotomic elements draw every coordinate that way,
polynomials take 1-3 terms of degree at most 2 per variable, and algebra
elements draw one coefficient per monomial.
"""

import random
from dataclasses import dataclass, field
from functools import lru_cache

from . import groupdet as gd
from . import matrix as mx
from . import regrep as rr
from . import sdet as sd
from .algebra import (basis_conditions, coset_decompose, load_group, product_basis,
                      random_basis, twisted_group_algebra)
from .rings import QQ, cyclotomic_field, polynomial_ring

BOUND = 3
MAX_R = 3
MAX_TOWER = 24


@dataclass
class SuiteReport:
    name: str
    trials: int
    passed: int = 0
    properties: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return self.passed == self.trials

    def record(self, index, seed, checks, inputs):
        for key, value in checks.items():
            good, total = self.properties.get(key, (0, 0))
            self.properties[key] = (good + bool(value), total + 1)
        if all(checks.values()):
            self.passed += 1
        else:
            bad = sorted(k for k, v in checks.items() if not v)
            self.failures.append({"seed": seed, "draw": index, "failed": bad, "inputs": inputs})

    def to_dict(self):
        return {
            "passed": self.passed,
            "trials": self.trials,
            "properties": {k: f"{g}/{t}" for k, (g, t) in sorted(self.properties.items())},
            "failures": self.failures,
        }

    def summary(self):
        return f"{self.name}: {self.passed}/{self.trials} pass"


def trial_rng(seed, suite, index):
    return random.Random(f"{seed}:{suite}:{index}")


def random_matrix(rng, base, m, n=None, bound=BOUND):
    n = m if n is None else n
    return mx.RingMatrix(base, m, n, [base.random_element(rng, bound) for _ in range(m * n)])


def random_int_matrix(rng, m, n=None, bound=BOUND):
    n = m if n is None else n
    return mx.RingMatrix(QQ, m, n, [QQ(rng.randint(-bound, bound)) for _ in range(m * n)])


def random_permutation(rng, n):
    image = list(range(n))
    rng.shuffle(image)
    return mx.Permutation(image)


# ---------------------------------------------------------------------------
# fixtures

@lru_cache(maxsize=None)
def diagram_towers():
    """name -> (A over B basis, B over C basis) for the nested towers used by the suites."""
    out = {}
    t = sd.quaternion_towers()
    out["quaternion"] = (t.e, t.f)
    for name, upper in (("c4", "C2"), ("c2xc2", "A"), ("s3", "R3")):
        g = load_group(name)
        A = twisted_group_algebra(g, QQ)
        B = twisted_group_algebra(g, QQ, upper)
        C = twisted_group_algebra(g, QQ, "trivial")
        out[name] = (coset_decompose(A, B), coset_decompose(B, C))
    return out


@lru_cache(maxsize=None)
def cayley_hamilton_fixtures():
    out = {"quaternion": sd.quaternion_towers().e}
    c4 = load_group("c4")
    F4 = cyclotomic_field(4)
    out["c4-zeta4"] = coset_decompose(twisted_group_algebra(c4, F4), twisted_group_algebra(c4, F4, "trivial"))
    s3 = load_group("s3")
    F3 = cyclotomic_field(3)
    out["s3-zeta3"] = coset_decompose(twisted_group_algebra(s3, F3), twisted_group_algebra(s3, F3, "R3"))
    return out


@lru_cache(maxsize=None)
def commutant_fixtures():
    towers = diagram_towers()
    return {name: towers[name][0] for name in ("quaternion", "c4", "c2xc2", "s3")}


@lru_cache(maxsize=None)
def commutant_span(name):
    return tuple(rr.commutant_basis(commutant_fixtures()[name]))


def _r_for(rng, size):
    return rng.randint(1, max(1, min(MAX_R, MAX_TOWER // size)))


# ---------------------------------------------------------------------------
# trials; each returns (checks, serialized inputs)

def trial_kron(rng):
    m, n = rng.randint(1, 4), rng.randint(1, 4)
    x, y = random_int_matrix(rng, m), random_int_matrix(rng, n)
    ok = mx.perm_action(mx.sigma_perm(m, n), mx.kron(x, y)) == mx.kron(y, x)
    return {"kron_reversal": ok}, f"m={m} n={n} X={x} Y={y}"


def trial_perm_invariance(rng):
    n = rng.randint(1, 5)
    if rng.random() < 0.5:
        base = QQ
    else:
        base = polynomial_ring(QQ, ("x", "y"))
    x = random_matrix(rng, base, n)
    s, t = random_permutation(rng, n), random_permutation(rng, n)
    checks = {
        "det_invariant": mx.det(mx.perm_action(s, x)) == mx.det(x),
        "left_action": mx.perm_action(s * t, x) == mx.perm_action(s, mx.perm_action(t, x)),
    }
    return checks, f"X={x} sigma={s.one_based()} tau={t.one_based()}"


def trial_block_det(rng):
    m, n = rng.randint(1, 3), rng.randint(1, 3)
    t = random_int_matrix(rng, m)
    polys = [[[rng.randint(-BOUND, BOUND) for _ in range(3)] for _ in range(n)] for _ in range(n)]
    blocks = [[mx.matrix_polynomial(p, t) for p in row] for row in polys]
    x = mx.from_blocks(blocks)
    inner = mx.block_det_inner(x, m)
    outer = mx.det(x)
    checks = {"outer_equals_inner": outer == mx.det(inner)}
    if m * n <= mx.LEIBNIZ_MAX:
        checks["leibniz_agrees"] = mx.det_leibniz(x) == mx.det_leibniz(inner)
    return checks, f"m={m} n={n} T={t} polys={polys}"


def trial_oracle(rng):
    n = rng.randint(1, 5)
    base = QQ if rng.random() < 0.5 else polynomial_ring(QQ, ("x", "y"))
    x = random_matrix(rng, base, n)
    d = mx.det(x)
    cp = mx.charpoly_divfree(x)
    const = cp.coefficient((0,))
    checks = {
        "berkowitz_equals_leibniz": d == mx.det_leibniz(x),
        "charpoly_constant_term": (const if n % 2 == 0 else -const) == d,
    }
    return checks, f"base={base} X={x}"


def trial_regrep(rng):
    towers = diagram_towers()
    name = rng.choice(sorted(towers))
    e, _ = towers[name]
    A = e.A
    a, b = A.random_element(rng), A.random_element(rng)
    la, lb = rr.regrep_element(e, a), rr.regrep_element(e, b)
    r = _r_for(rng, e.m)
    am = random_matrix(rng, A, r)
    lm = rr.regrep_matrix(e, am)
    blocks = mx.from_blocks([[rr.regrep_element(e, am[p, q]) for q in range(r)] for p in range(r)])
    alt = random_basis(A, e.B, rng)
    checks = {
        "multiplicative": rr.regrep_element(e, a * b) == la * lb,
        "unital": rr.regrep_element(e, A.one) == mx.identity(e.m, e.B),
        "indicator_form": rr.regrep_via_indicator(e, a) == la,
        "group_rep_form": rr.regrep_via_group_rep(e, a) == la,
        "kron_sum_form": rr.regrep_kron_sum(e, am) == lm,
        "sigma_reorders_blocks": mx.perm_action(mx.sigma_perm(e.m, r), lm) == blocks,
        "basis_independent_det": mx.det(la) == mx.det(rr.regrep_element(alt, a)),
        "injective_on_image": rr.preimage_element(e, la) == a,
    }
    inv = rr.inverse_via_regrep(e, a)
    checks["invertibility_preserved"] = (inv is None) == (not e.B.is_unit(sd.det_over(la)))
    if inv is not None:
        checks["two_sided_inverse"] = a * inv == A.one == inv * a
    return checks, f"tower={name} a={a} b={b} r={r} matrix={am} alt_reps={alt.reps}"


def trial_diagram(rng, name=None):
    towers = diagram_towers()
    if name is None:
        name = rng.choice(sorted(towers))
    e, f = towers[name]
    r = _r_for(rng, e.m * f.m)
    b = random_matrix(rng, e.B, r)
    a = random_matrix(rng, e.A, r)
    left = sd.det_over(rr.regrep_matrix(f, b))
    right = sd.det_over(rr.regrep_matrix(f, mx.det(b)))
    via_c, via_bc, same = sd.sdet_compose(e, f, a)
    checks = {
        "core_diagram": left == right,
        "regrep_diagram": rr.diagram_check_tower(e, f, a),
        "sdet_compose": same,
    }
    return checks, f"tower={name} r={r} b={b} a={a}"


def trial_study(rng):
    t = sd.quaternion_towers()
    A = t.A
    r = rng.randint(1, MAX_R)
    a, a2 = random_matrix(rng, A, r), random_matrix(rng, A, r)
    s, s2 = sd.study_det(a), sd.study_det(a2)
    pa = sd.psi(a)
    checks = {
        "S0_psi_is_regrep": pa == sd.psi_via_regrep(a),
        "S0_psi_multiplicative": sd.psi(a * a2) == pa * sd.psi(a2),
        "S0_phi_is_regrep": sd.phi(pa) == sd.phi_via_regrep(pa),
        "S1_multiplicative": sd.study_det(a * a2) == s * s2,
        "S4_real": s.is_rational(),
        "S5_square": mx.det(sd.phi(pa)) == (s * s).rational(),
        "S6_member": sd.study_membership("phi", sd.phi(pa)) == (True, True),
        "S7_member": sd.study_membership("psi", pa) == (True, True),
        "sdet_matches_tower": sd.sdet(t.e, a) == sd.from_gaussian(s),
    }
    junk = random_matrix(rng, sd.GAUSS, 2 * r)
    crit, cons = sd.study_membership("psi", junk)
    checks["S7_criterion_equals_construction"] = crit == cons
    junkq = random_int_matrix(rng, 2 * r)
    crit, cons = sd.study_membership("phi", junkq)
    checks["S6_criterion_equals_construction"] = crit == cons
    if r >= 2:
        i, j = rng.sample(range(r), 2)
        q = A.random_element(rng)
        checks["S3_row_op"] = sd.sdet_row_op_invariance(t.e, a, i, j, q, "row")
        checks["S3_col_op"] = sd.sdet_row_op_invariance(t.e, a, i, j, q, "col")
    return checks, f"r={r} a={a} a2={a2}"


def trial_study_invertibility(rng, singular):
    t = sd.quaternion_towers()
    r = rng.randint(1, MAX_R)
    a = random_matrix(rng, t.A, r)
    if singular:
        rows = a.rows()
        if r == 1:
            rows = [[t.A.zero]]
        else:
            i, j = rng.sample(range(r), 2)
            q = t.A.random_element(rng)
            rows[i] = [q * v for v in rows[j]]
        a = mx.RingMatrix(t.A, r, r, [v for row in rows for v in row])
    s = sd.study_det(a)
    inv = sd.study_inverse(a)
    if singular:
        checks = {"S2_singular_verdict": (not s) and inv is None}
    else:
        checks = {"S2_verdict_matches": bool(s) == (inv is not None)}
        if inv is not None:
            one = mx.identity(r, t.A)
            checks["S2_two_sided_inverse"] = a * inv == one == inv * a
    return checks, f"r={r} a={a}"


def trial_sdet(rng):
    towers = diagram_towers()
    name = rng.choice(sorted(towers))
    e, f = towers[name]
    A = e.A
    r = _r_for(rng, e.m * f.m)
    a, a2 = random_matrix(rng, A, r), random_matrix(rng, A, r)
    s = sd.sdet(e, a)
    checks = {
        "S1_multiplicative": sd.sdet(e, a * a2) == s * sd.sdet(e, a2),
        "S4_central": sd.sdet_centrality(e, a),
        "unit_on_identity": sd.sdet(e, mx.identity(r, A)) == e.B.one,
    }
    inv = rr.inverse_matrix_via_regrep(e, a)
    checks["S2_invertibility"] = (inv is None) == (not e.B.is_unit(s))
    if r >= 2:
        i, j = rng.sample(range(r), 2)
        q = A.random_element(rng)
        checks["S3_row_op"] = sd.sdet_row_op_invariance(e, a, i, j, q, "row")
        checks["S3_col_op"] = sd.sdet_row_op_invariance(e, a, i, j, q, "col")
    if name == "quaternion":
        checks["S6_power"] = sd.sdet_power(e, f, a)
    return checks, f"tower={name} r={r} a={a} a2={a2}"


def trial_cayley_hamilton(rng):
    fixtures = cayley_hamilton_fixtures()
    name = rng.choice(sorted(fixtures))
    e = fixtures[name]
    a = e.A.random_element(rng)
    checks = {
        "cayley_hamilton": rr.cayley_hamilton_check(e, a),
        "coefficients_central": rr.charpoly_coefficients_central(e, a),
    }
    return checks, f"fixture={name} a={a}"


def trial_commutant(rng):
    fixtures = commutant_fixtures()
    name = rng.choice(sorted(fixtures))
    e = fixtures[name]
    a = e.A.random_element(rng)
    member, witness = rr.commutant_check(e, rr.regrep_element(e, a))
    r = _r_for(rng, e.m)
    am = random_matrix(rng, e.A, r)
    mmember, mwitness = rr.matrix_commutant_check(e, r, rr.regrep_matrix(e, am), with_witness=True)
    b = rr.random_commutant_element(e, rng, span=commutant_span(name))
    rmember, rwitness = rr.commutant_check(e, b)
    checks = {
        "forward": member and witness == a,
        "matrix_forward": mmember and mwitness == am,
        "reverse": rmember and rwitness is not None and rr.regrep_element(e, rwitness) == b,
    }
    return checks, f"tower={name} a={a} r={r} matrix={am} commutant_sample={b}"


GROUPDET_GROUPS = ("c1", "c2", "c3", "c4", "c2xc2", "c6", "s3", "d4", "q8")
RELABEL_MAX = 6


@lru_cache(maxsize=None)
def _theta(name):
    return gd.group_determinant(name)


def trial_groupdet(rng):
    name = rng.choice(GROUPDET_GROUPS)
    g = load_group(name)
    theta = _theta(name)
    checks = {"homogeneous": theta.is_homogeneous(g.order) and theta.degree() == g.order}
    inputs = f"group={name}"
    if g.order <= RELABEL_MAX:
        perm = list(range(g.order))
        rng.shuffle(perm)
        checks["renumbering_invariant"] = gd.renumbering_invariance(g, perm)
        checks["matrix_equals_regrep"] = gd.group_determinant(g, "regrep") == theta
        inputs += f" relabel={perm}"
    abelian = [k for k, v in g.subgroups.items() if g.is_abelian(v)] + ["trivial"]
    h = rng.choice(sorted(abelian))
    rel, basis = gd.theta_relative(g, h)
    alt = gd.theta_relative(g, h, random_basis(basis.A, basis.B, rng))[0]
    checks["relative_basis_independent"] = rel == alt
    checks["relative_homogeneous"] = all(p.is_homogeneous(basis.m) for p in rel.coords.values())
    return checks, inputs + f" subgroup={h}"


SUITES = {
    "kron": trial_kron,
    "perm-invariance": trial_perm_invariance,
    "block-det": trial_block_det,
    "oracle": trial_oracle,
    "regrep": trial_regrep,
    "diagram": trial_diagram,
    "study": trial_study,
    "sdet": trial_sdet,
    "cayley-hamilton": trial_cayley_hamilton,
    "commutant": trial_commutant,
    "groupdet": trial_groupdet,
}


def run_suite(name, trials, seed):
    """Run one suite; 'study-invertibility' alternates invertible and constructed-singular draws."""
    report = SuiteReport(name, trials)
    for index in range(trials):
        rng = trial_rng(seed, name, index)
        if name == "study-invertibility":
            checks, inputs = trial_study_invertibility(rng, singular=index % 2 == 1)
        else:
            checks, inputs = SUITES[name](rng)
        report.record(index, seed, checks, inputs)
    return report


def suite_names():
    return sorted(SUITES) + ["study-invertibility"]


def run(suite, trials, seed):
    """Run a suite by name, or every suite for 'all'; returns a list of reports."""
    if suite == "all":
        return [run_suite(name, trials, seed) for name in suite_names()]
    if suite not in SUITES and suite != "study-invertibility":
        raise KeyError(suite)
    return [run_suite(suite, trials, seed)]


def conditions_table():
    """Basis conditions for every bundled tower (used in reports)."""
    rows = {}
    for name, (e, f) in diagram_towers().items():
        rows[name] = basis_conditions(e).as_dict()
        rows[name + "/lower"] = basis_conditions(f).as_dict()
        rows[name + "/product"] = basis_conditions(product_basis(e, f)).as_dict()
    return rows
