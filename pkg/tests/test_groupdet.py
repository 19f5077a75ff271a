"""Group determinants, Dedekind factorization, relative determinants and supplied irreps."""

import json
import random

import pytest
import sympy

from studydet import groupdet as gd
from studydet.algebra import load_group
from studydet.errors import BudgetError, InputError, PreconditionError
from studydet.rings import QQ

from oracles import circulant3


def sympy_theta(group):
    """det(x_{g h^-1}) by sympy's own determinant, as an expanded expression."""
    xs = sympy.symbols([f"x_{g}" for g in group.elements])
    n = group.order
    m = sympy.Matrix(n, n, lambda a, b: xs[group.table[a][group.inv[b]]])
    return sympy.expand(m.det(method="berkowitz")), xs


def to_sympy(poly, xs):
    total = 0
    for exp, c in poly.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for x, k in zip(xs, exp):
            term *= x ** k
        total += term
    return sympy.expand(total)


def test_small_examples():
    assert str(gd.group_determinant("c2")) == "x_e^2 - x_g^2"
    assert str(gd.group_determinant("c1")) == "x_e"
    theta = gd.group_determinant("c3")
    R = theta.ring
    assert theta == circulant3(*R.gens())


@pytest.mark.parametrize("name", ["c4", "c2xc2", "s3", "c6"])
def test_group_determinant_matches_sympy(name):
    g = load_group(name)
    expected, xs = sympy_theta(g)
    assert to_sympy(gd.group_determinant(g), xs) == expected


@pytest.mark.parametrize("name", ["c2", "c3", "c4", "c2xc2", "s3", "c6"])
def test_matrix_and_regrep_agree(name):
    assert gd.group_determinant(name, "regrep") == gd.group_determinant(name)
    assert gd.group_determinant(name).is_homogeneous(load_group(name).order)


def test_renumbering_invariance():
    r = random.Random(8)
    for name in ("s3", "c2xc2", "c6"):
        perm = list(range(load_group(name).order))
        r.shuffle(perm)
        assert gd.renumbering_invariance(name, perm)


def test_budget():
    big = load_group("c4")
    table = [[(a // 4 + b // 4) % 3 * 4 + (a + b) % 4 for b in range(12)] for a in range(12)]
    from studydet.algebra import FiniteGroup
    g = FiniteGroup("C12", [str(k) for k in range(12)], table)
    with pytest.raises(BudgetError):
        gd.group_determinant(g)
    assert big.order == 4


def test_general_element_examples():
    H = load_group("H")
    from studydet.algebra import twisted_group_algebra
    A = twisted_group_algebra(H, QQ)
    x, AX = gd.general_element(A)
    assert str(x) == "x_1 + x_i*i + x_j*j + x_k*k"


def test_character_examples():
    c2 = gd.abelian_characters("c2")
    assert sorted(str(c2.value(c, 1)) for c in range(2)) == ["-1", "1"]
    c4 = gd.abelian_characters("c4")
    F = c4.field
    assert sorted(str(c4.value(c, 1)) for c in range(4)) == sorted(str(F.zeta(k)) for k in range(4))
    v = gd.abelian_characters("c2xc2")
    assert all(v.value(c, g) in (1, -1) for c in range(4) for g in range(4))
    with pytest.raises(PreconditionError):
        gd.abelian_characters("s3")


@pytest.mark.parametrize("name", ["c1", "c2", "c3", "c4", "c2xc2", "c6"])
def test_dedekind(name):
    report = gd.dedekind_factorize(name)
    assert report.ok and len(report.factors) == load_group(name).order


def test_dedekind_c2_factors():
    report = gd.dedekind_factorize("c2")
    assert sorted(str(p) for p, _ in report.factors) == ["x_e + x_g", "x_e - x_g"]


def test_dedekind_rejects_nonabelian():
    with pytest.raises(PreconditionError, match="subgroup must be abelian: G itself is not"):
        gd.dedekind_factorize("s3")


def test_relative_determinant_examples():
    theta, basis = gd.theta_relative("c2", "G")
    assert basis.m == 1
    assert str(theta) == "x_e + x_g*g"
    for name, sub in (("c4", "C2"), ("s3", "R3")):
        theta, basis = gd.theta_relative(name, sub)
        assert basis.m == 2
        assert all(p.is_homogeneous(2) for p in theta.coords.values())


def test_relative_determinant_basis_independent():
    r = random.Random(2)
    for name, sub in (("c4", "C2"), ("s3", "R3"), ("d4", "C4")):
        assert gd.theta_relative_alternative(name, sub, r) == gd.theta_relative(name, sub)[0]


@pytest.mark.parametrize("name,sub,field", [("c2", "G", 1), ("c4", "C2", 1), ("s3", "R3", 3),
                                            ("d4", "C4", 4), ("q8", "I", 4)])
def test_extension(name, sub, field):
    report = gd.extension_check(name, sub)
    assert report.ok
    assert len(report.factors) == len(load_group(name).subgroup(sub))
    assert all(p.is_homogeneous(load_group(name).order // len(load_group(name).subgroup(sub)))
               for p, _ in report.factors)


def test_extension_rejects_nonabelian_subgroup():
    with pytest.raises(PreconditionError):
        gd.extension_check("s3", "G")


@pytest.mark.parametrize("name", ["s3", "q8"])
def test_frobenius(name):
    reps = gd.load_irreps(name, name)
    report = gd.frobenius_verify(name, reps)
    assert report.ok
    assert sum(d * d for d in report.degrees) == load_group(name).order


def test_frobenius_s3_shape():
    report = gd.frobenius_verify("s3", gd.load_irreps("s3", "s3"))
    assert sorted(report.degrees) == [1, 1, 2]
    assert sum(p.degree() * k for p, k in report.factors) == 6


def test_frobenius_rejects_wrong_degrees():
    reps = gd.load_irreps("s3", "s3")
    with pytest.raises(InputError):
        gd.frobenius_verify("s3", reps[:2])


def test_bad_irrep_file(tmp_path):
    data = json.loads(json.dumps([{"degree": 1, "conductor": 1,
                                   "images": {g: [["1"]] for g in load_group("s3").elements}}]))
    data[0]["images"]["s"] = [["2"]]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    with pytest.raises(InputError):
        gd.load_irreps("s3", str(path))


def test_degree_bounds():
    assert gd.degree_bound_check("s3", "R3", gd.load_irreps("s3", "s3"))
    assert gd.degree_bound_check("q8", "I", gd.load_irreps("q8", "q8"))
    assert not gd.degree_bound_check("s3", "G", gd.load_irreps("s3", "s3"))


@pytest.mark.parametrize("name,sub", [("s3", "R3"), ("q8", "I")])
def test_irreps_against_relative_determinant(name, sub):
    assert gd.irreps_match_relative_check(name, sub, gd.load_irreps(name, name))
