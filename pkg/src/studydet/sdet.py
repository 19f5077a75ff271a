"""Study-type determinants Sdet^B = Det o iota o L_{e (x) I_r}, and the
classical quaternionic Study determinant through psi_r and phi_r.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import matrix as mx
from .algebra import coset_decompose, load_group, product_basis, require_conditions, twisted_group_algebra
from .errors import InputError, PreconditionError, StructuralError
from .regrep import _as_matrix, inverse_matrix_via_regrep, regrep_matrix
from .rings import QQ, cyclotomic_field

GAUSS = cyclotomic_field(4)


def sdet(basis, a):
    """Sdet^B(a) for a in M(r, A) (a bare element of A counts as 1 x 1)."""
    if not basis.B.commutative:
        raise PreconditionError(f"Sdet needs a commutative subalgebra, {basis.B} is not")
    return det_over(regrep_matrix(basis, a))


def det_over(x):
    """Det of a matrix over a twisted group algebra; the span of 1 alone is handled over its coefficients."""
    B = x.base
    ident = B.group.identity
    if getattr(B, "span", None) == (ident,):
        d = mx.det(x.map(lambda v: v.coords.get(ident, B.base.zero), B.base))
        return B(d)
    return mx.det(x)


def sdet_row_op(basis, a, i, j, q, kind="row"):
    """Apply a row operation (I + qE_ij) a or a column operation a (I + qE_ij); i != j."""
    a = _as_matrix(basis, a)
    if i == j:
        raise StructuralError("row/column operations need two distinct indices")
    op = mx.identity(a.nrows, basis.A) + mx.elementary(i, j, a.nrows, basis.A, q)
    if kind == "row":
        return op * a
    if kind == "col":
        return a * op
    raise StructuralError(f"unknown operation kind {kind!r}")


def sdet_row_op_invariance(basis, a, i, j, q, kind="row"):
    """True iff Sdet is unchanged by the operation and Sdet(I + qE_ij) = 1."""
    a = _as_matrix(basis, a)
    op = mx.identity(a.nrows, basis.A) + mx.elementary(i, j, a.nrows, basis.A, q)
    return (sdet(basis, sdet_row_op(basis, a, i, j, q, kind)) == sdet(basis, a)
            and sdet(basis, op) == basis.B.one)


def sdet_compose(upper, lower, a):
    """(Sdet^C(a), Sdet^C_{M(1,B)}(Sdet^B(a)), equal) for the towers A/B and B/C."""
    direct = sdet(product_basis(upper, lower), a)
    stepwise = sdet(lower, sdet(upper, a))
    return direct, stepwise, direct == stepwise


def sdet_centrality(basis, a):
    """True iff Sdet^B(a) lies in B and commutes with every monomial of A."""
    require_conditions(basis, "invertible", "conjugation_closed")
    s = sdet(basis, a)
    return s.ring is basis.B and basis.A.central(basis.A(s))


def sdet_power(upper, lower, a):
    """True iff Sdet^C(a) = (Sdet^B(a))^n with n the rank of B over C.

    The identity holds when Sdet^B(a) lands in C (as for H over C over R); for
    towers where Z(A) cap B is larger than C it can fail, and this reports so.
    """
    require_conditions(upper, "invertible", "conjugation_closed")
    via_c = sdet(product_basis(upper, lower), a)
    via_b = sdet(upper, a)
    return upper.B(via_c) == via_b ** lower.m


# ---------------------------------------------------------------------------
# rational quaternions

@dataclass(frozen=True)
class QuaternionTowers:
    A: object
    B: object
    C: object
    e: object  # A over B, e = (1, j)
    f: object  # B over C, f = (1, i)
    ef: object


@lru_cache(maxsize=None)
def quaternion_towers():
    group = load_group("H")
    A = twisted_group_algebra(group, QQ)
    B = twisted_group_algebra(group, QQ, "C")
    C = twisted_group_algebra(group, QQ, "trivial")
    e = coset_decompose(A, B)
    f = coset_decompose(B, C)
    return QuaternionTowers(A, B, C, e, f, product_basis(e, f))


def quaternion(w, x=0, y=0, z=0):
    """w + x i + y j + z k in H(Q)."""
    A = quaternion_towers().A
    return A.from_coords({"1": Fraction(w), "i": Fraction(x), "j": Fraction(y), "k": Fraction(z)})


def quaternion_matrix(rows):
    """Matrix over H(Q) from nested lists of quaternions or [w, x, y, z] lists."""
    A = quaternion_towers().A
    out = []
    for row in rows:
        out.append([v if not isinstance(v, (list, tuple)) else quaternion(*v) for v in row])
    return mx.matrix(A, out)


def quaternion_parts(q):
    A = quaternion_towers().A
    q = A(q)
    return tuple(q.coefficient(n) for n in ("1", "i", "j", "k"))


def to_gaussian(b):
    """span{1, i} in H(Q) -> Q(i)."""
    B = quaternion_towers().B
    b = B(b)
    return GAUSS.from_rationals([b.coefficient("1"), b.coefficient("i")])


def from_gaussian(c):
    B = quaternion_towers().B
    w, x = GAUSS(c).c
    return B.from_coords({"1": w, "i": x})


def psi(a):
    """psi_r(b_1 + j b_2) = [[b_1, -conj(b_2)], [b_2, conj(b_1)]] over Q(i)."""
    a = _as_matrix(quaternion_towers().e, a)
    r = a.nrows
    zeta = GAUSS.gen
    b1, b2 = [], []
    for q in a.entries:
        w, x, y, z = quaternion_parts(q)
        b1.append(GAUSS(w) + zeta * x)
        b2.append(GAUSS(y) - zeta * z)
    b1 = mx.RingMatrix(GAUSS, r, r, b1)
    b2 = mx.RingMatrix(GAUSS, r, r, b2)
    return mx.from_blocks([[b1, -b2.conj()], [b2, b1.conj()]])


def phi(b):
    """phi_r(c_1 + i c_2) = [[c_1, -c_2], [c_2, c_1]] over Q."""
    if b.base is not GAUSS:
        raise StructuralError(f"phi expects a matrix over {GAUSS}")
    r = b.nrows
    c1 = mx.RingMatrix(QQ, r, r, [v.c[0] for v in b.entries])
    c2 = mx.RingMatrix(QQ, r, r, [v.c[1] for v in b.entries])
    return mx.from_blocks([[c1, -c2], [c2, c1]])


def psi_via_regrep(a):
    """iota o L_{e (x) I_r}(a), transported to Q(i)."""
    return regrep_matrix(quaternion_towers().e, a).map(to_gaussian, GAUSS)


def phi_via_regrep(b):
    """iota o L_{f (x) I_r}(b), transported from Q(i)."""
    t = quaternion_towers()
    lifted = b.map(from_gaussian, t.B)
    return regrep_matrix(t.f, lifted).map(lambda c: t.C(c).scalar_part(), QQ)


def study_det(a):
    """Sdet(a) = Det(psi_r(a)), an element of Q(i) (always rational)."""
    return mx.det(psi(a))


def j_block(r, base):
    """J_r = [[0, -I_r], [I_r, 0]]."""
    z, i = mx.zero_matrix(r, r, base), mx.identity(r, base)
    return mx.from_blocks([[z, -i], [i, z]])


def study_membership_criterion(kind, m):
    """phi-image: J_r c = c J_r over Q; psi-image: J_r b = conj(b) J_r over Q(i)."""
    if m.nrows != m.ncols or m.nrows % 2:
        raise StructuralError("a square matrix of even size is required")
    jr = j_block(m.nrows // 2, m.base)
    if kind == "phi":
        if m.base is not QQ:
            raise StructuralError("phi-images are matrices over Q")
        return jr * m == m * jr
    if kind == "psi":
        if m.base is not GAUSS:
            raise StructuralError(f"psi-images are matrices over {GAUSS}")
        return jr * m == m.conj() * jr
    raise InputError(f"unknown image kind {kind!r}")


def study_membership_constructive(kind, m):
    """Rebuild the candidate preimage from the left block column and re-embed it."""
    r = m.nrows // 2
    top = m.submatrix(range(r), range(r))
    bottom = m.submatrix(range(r, 2 * r), range(r))
    if kind == "phi":
        b = mx.RingMatrix(GAUSS, r, r, [GAUSS.from_rationals([c1, c2])
                                        for c1, c2 in zip(top.entries, bottom.entries)])
        return phi(b) == m
    A = quaternion_towers().A
    entries = []
    for b1, b2 in zip(top.entries, bottom.entries):
        w, x = b1.c
        y, negz = b2.c
        entries.append(A.from_coords({"1": w, "i": x, "j": y, "k": -negz}))
    return psi(mx.RingMatrix(A, r, r, entries)) == m


def study_membership(kind, m):
    """(criterion verdict, constructive verdict)."""
    return study_membership_criterion(kind, m), study_membership_constructive(kind, m)


def study_inverse(a):
    """Inverse in M(r, H(Q)), or None when Sdet(a) = 0."""
    return inverse_matrix_via_regrep(quaternion_towers().e, a)
