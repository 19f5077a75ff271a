"""Left regular representations over a tower basis.

For a basis e of A over B, L_e(a) is the matrix (b_ij) over B with
a e_j = sum_i e_i b_ij.  Matrices over A are represented through
L_{e (x) I_r}(a) = sum_ij L_e(a_ij) (x) E_ij, whose row/column index for the
pair (basis i, matrix p) is i*r + p.
"""

from . import _linear
from . import matrix as mx
from .algebra import GROUP_CONDITIONS, TGAElement, product_basis, require_conditions
from .errors import NotInvertibleError, PreconditionError, StructuralError


def _as_matrix(basis, a):
    if isinstance(a, mx.RingMatrix):
        if a.base is not basis.A:
            raise StructuralError(f"matrix entries lie in {a.base}, expected {basis.A}")
        if not a.is_square():
            raise StructuralError("a square matrix is required")
        return a
    return mx.RingMatrix(basis.A, 1, 1, [basis.A(a)])


def regrep_element(basis, a):
    """L_e(a) in M(m, B), solving a e_j = sum_i e_i b_ij through the coset decomposition."""
    A, B = basis.A, basis.B
    a = A(a)
    m = basis.m
    table = A.group.table
    cells = [[{} for _ in range(m)] for _ in range(m)]
    for j, (gj, sj) in enumerate(basis.reps):
        for x, coef in a.coords.items():
            i, h, unit = basis.decompose(table[x][gj])
            v = coef * sj * A.c(x, gj) * unit
            cell = cells[i][j]
            if h in cell:
                v = cell[h] + v
            if v:
                cell[h] = v
            elif h in cell:
                del cell[h]
    return mx.RingMatrix(B, m, m, [TGAElement(B, cells[i][j]) for i in range(m) for j in range(m)])


def regrep_matrix(basis, a, nested=False):
    """L_{e (x) I_r}(a) for a in M(r, A).

    By default the result is flattened to an mr x mr matrix over B; with
    ``nested=True`` it is returned as an m x m matrix over M(r, B).
    """
    a = _as_matrix(basis, a)
    r, m = a.nrows, basis.m
    blocks = [[regrep_element(basis, a[p, q]) for q in range(r)] for p in range(r)]
    B = basis.B
    if nested:
        ring = mx.matrix_ring(r, B)
        entries = [mx.RingMatrix(B, r, r, [blocks[p][q][i, j] for p in range(r) for q in range(r)])
                   for i in range(m) for j in range(m)]
        return mx.RingMatrix(ring, m, m, entries)
    out = [blocks[p][q][i, j] for i in range(m) for p in range(r) for j in range(m) for q in range(r)]
    return mx.RingMatrix(B, m * r, m * r, out)


def regrep_kron_sum(basis, a):
    """sum_ij kron(L_e(a_ij), E_ij), computed literally."""
    a = _as_matrix(basis, a)
    r, B = a.nrows, basis.B
    total = mx.zero_matrix(basis.m * r, basis.m * r, B)
    for i in range(r):
        for j in range(r):
            total = total + mx.kron(regrep_element(basis, a[i, j]), mx.elementary(i, j, r, B))
    return total


def preimage_element(basis, b):
    """The a with a e_1 = sum_k e_k b_k1; equals L_e^-1(b) whenever b is an image."""
    A = basis.A
    s = A.zero
    for k in range(basis.m):
        s = s + basis.element(k) * A(b[k, 0])
    return s * A.inverse(basis.element(0))


def preimage_matrix(basis, r, y):
    """Read a candidate a in M(r, A) off the first basis column of an mr x mr matrix."""
    A, m = basis.A, basis.m
    e1inv = A.inverse(basis.element(0))
    entries = []
    for p in range(r):
        for q in range(r):
            s = A.zero
            for i in range(m):
                s = s + basis.element(i) * A(y[i * r + p, q])
            entries.append(s * e1inv)
    return mx.RingMatrix(A, r, r, entries)


# ---------------------------------------------------------------------------
# indicator-function forms (need (eB, *) to be a group, and e_j^-1 B e_j in B)

INDICATOR_CONDITIONS = ("invertible", "conjugation_closed") + GROUP_CONDITIONS

def _inverses(basis):
    return [basis.A.inverse(e) for e in basis.elements()]


def _indicator(basis, i, k, j):
    g = basis.group
    gi, gk, gj = basis.reps[i][0], basis.reps[k][0], basis.reps[j][0]
    return g.table[g.table[g.inv[gi]][gk]][gj] in basis.B.spanset


def eb_regular(basis, k):
    """L_{eB}(e_k B): the 0/1 matrix with (i, j) entry 1_B(e_i^-1 e_k e_j), over A."""
    require_conditions(basis, *GROUP_CONDITIONS)
    A, m = basis.A, basis.m
    return mx.RingMatrix(A, m, m, [A.one if _indicator(basis, i, k, j) else A.zero
                                   for i in range(m) for j in range(m)])


def regrep_via_indicator(basis, a):
    """L_e(a)_ij = sum_k 1_B(e_i^-1 e_k e_j) e_i^-1 e_k b_k e_j."""
    require_conditions(basis, *INDICATOR_CONDITIONS)
    A, B, m = basis.A, basis.B, basis.m
    coords = basis.coordinates(a)
    es = basis.elements()
    inv = _inverses(basis)
    out = []
    for i in range(m):
        for j in range(m):
            s = A.zero
            for k in range(m):
                if _indicator(basis, i, k, j):
                    s = s + inv[i] * es[k] * A(coords[k]) * es[j]
            out.append(B(s))
    return mx.RingMatrix(B, m, m, out)


def regrep_via_group_rep(basis, a):
    """P(e)^-1 (sum_k L_{eB}(e_k B) e_k b_k) P(e), evaluated in M(m, A) and read back in B."""
    require_conditions(basis, *INDICATOR_CONDITIONS)
    A, B, m = basis.A, basis.B, basis.m
    coords = basis.coordinates(a)
    es = basis.elements()
    total = mx.zero_matrix(m, m, A)
    for k in range(m):
        total = total + eb_regular(basis, k) * (es[k] * A(coords[k]))
    p = mx.diagonal(A, es)
    pinv = mx.diagonal(A, _inverses(basis))
    return (pinv * total * p).map(B, B)


def j_matrices(basis):
    """[J(e_1), ..., J(e_m)] with J(e_k) = P(e)^-1 L_{eB}(e_k B) P(e), over A."""
    require_conditions(basis, *GROUP_CONDITIONS)
    es = basis.elements()
    p = mx.diagonal(basis.A, es)
    pinv = mx.diagonal(basis.A, _inverses(basis))
    return [pinv * eb_regular(basis, k) * p for k in range(basis.m)]


def is_monomial_matrix(x):
    rows_ok = all(sum(1 for j in range(x.ncols) if x[i, j]) == 1 for i in range(x.nrows))
    cols_ok = all(sum(1 for i in range(x.nrows) if x[i, j]) == 1 for j in range(x.ncols))
    return rows_ok and cols_ok


# ---------------------------------------------------------------------------
# inverses and characteristic polynomials

def _require_commutative_b(basis):
    if not basis.B.commutative:
        raise PreconditionError(f"{basis.B} is not commutative")


def inverse_via_regrep(basis, a):
    """a^-1 read off L_e(a)^-1, or None when det L_e(a) is not a unit of B."""
    _require_commutative_b(basis)
    A = basis.A
    a = A(a)
    lmat = regrep_element(basis, a)
    d = mx.det(lmat)
    if not basis.B.is_unit(d):
        return None
    ainv = preimage_element(basis, mx.inverse_adjugate(lmat))
    if a * ainv != A.one or ainv * a != A.one:
        raise NotInvertibleError(f"recovered inverse of {a} is not two-sided")
    return ainv


def inverse_matrix_via_regrep(basis, a):
    """Inverse in M(r, A) through L_{e (x) I_r}, or None when Sdet(a) is not a unit."""
    _require_commutative_b(basis)
    a = _as_matrix(basis, a)
    x = regrep_matrix(basis, a)
    if not basis.B.is_unit(mx.det(x)):
        return None
    ainv = preimage_matrix(basis, a.nrows, mx.inverse_adjugate(x))
    ident = mx.identity(a.nrows, basis.A)
    if a * ainv != ident or ainv * a != ident:
        raise NotInvertibleError("recovered inverse is not two-sided")
    return ainv


def charpoly_regrep(basis, a, var="x"):
    """Phi_{L(a)}(x) = Det(x I - L_e(a)) as a polynomial over B."""
    _require_commutative_b(basis)
    return mx.charpoly_divfree(regrep_element(basis, a), var)


def charpoly_coefficients_central(basis, a):
    """True iff every coefficient of Phi_{L(a)} commutes with all of A."""
    _require_commutative_b(basis)
    coeffs = mx.charpoly_coefficients(regrep_element(basis, a))
    return all(basis.A.central(basis.A(c)) for c in coeffs)


def evaluate_charpoly(basis, a):
    """Phi_{L(a)}(a) = a^m + a^(m-1) b_(m-1) + ... + b_0 with coefficients on the right."""
    A = basis.A
    a = A(a)
    coeffs = mx.charpoly_coefficients(regrep_element(basis, a))
    m = len(coeffs) - 1
    total = A.zero
    power = A.one
    for k in range(m, -1, -1):
        total = total + power * A(coeffs[k])
        power = power * a
    return total


def cayley_hamilton_check(basis, a):
    """True iff Phi_{L(a)}(a) = 0 in A; needs conditions (i) and (ii)."""
    _require_commutative_b(basis)
    require_conditions(basis, "invertible", "conjugation_closed")
    return not evaluate_charpoly(basis, a)


# ---------------------------------------------------------------------------
# commutant characterization

def commutant_check(basis, b):
    """(is_member, witness): b commutes with every J(e_k) in M(m, A).

    When it does, the witness a := (sum_k e_k b_k1) e_1^-1 is reconstructed and
    L_e(a) = b is verified; the witness is None if that verification fails.
    """
    require_conditions(basis, *GROUP_CONDITIONS, "commuting")
    if b.base is not basis.B or b.shape != (basis.m, basis.m):
        raise StructuralError(f"expected an {basis.m}x{basis.m} matrix over {basis.B}")
    lifted = b.map(basis.A, basis.A)
    if not all(jk * lifted == lifted * jk for jk in j_matrices(basis)):
        return False, None
    a = preimage_element(basis, b)
    return True, (a if regrep_element(basis, a) == b else None)


def commutant_forward_probe(basis, a):
    """Does L_e(a) commute with every J(e_k)?  Only (iii)-(v) are required, so this
    reports what happens when (vi) fails instead of refusing."""
    require_conditions(basis, *GROUP_CONDITIONS)
    lifted = regrep_element(basis, a).map(basis.A, basis.A)
    return all(jk * lifted == lifted * jk for jk in j_matrices(basis))


def matrix_commutant_check(basis, r, b, with_witness=False):
    """True iff b in M(mr, B) commutes with every J(e_k) (x) I_r."""
    require_conditions(basis, *GROUP_CONDITIONS, "commuting")
    m = basis.m
    if b.base is not basis.B or b.shape != (m * r, m * r):
        raise StructuralError(f"expected an {m * r}x{m * r} matrix over {basis.B}")
    lifted = b.map(basis.A, basis.A)
    ident = mx.identity(r, basis.A)
    member = all(mx.kron(jk, ident) * lifted == lifted * mx.kron(jk, ident) for jk in j_matrices(basis))
    if not with_witness:
        return member
    if not member:
        return False, None
    a = preimage_matrix(basis, r, b)
    return True, (a if regrep_matrix(basis, a) == b else None)


def commutant_basis(basis):
    """A Q-basis of {b in M(m, B) : J(e_k) b = b J(e_k) for all k}.

    Needs a field coefficient ring with rational coordinates (Q or a cyclotomic field).
    """
    require_conditions(basis, *GROUP_CONDITIONS, "commuting")
    A, B, m = basis.A, basis.B, basis.m
    base = A.base
    if not hasattr(base, "to_rationals"):
        raise PreconditionError(f"commutant solving needs Q or a cyclotomic field, not {base}")
    d = base.dimension
    H = B.span
    units = []
    for i in range(m):
        for j in range(m):
            for h in H:
                for t in range(d):
                    v = [0] * d
                    v[t] = 1
                    units.append((i, j, h, base.from_rationals(v)))
    js = j_matrices(basis)
    columns = []
    for i, j, h, c in units:
        entries = [B.zero] * (m * m)
        entries[i * m + j] = B.monomial(h, c)
        lifted = mx.RingMatrix(A, m, m, [A(x) for x in entries])
        col = []
        for jk in js:
            diff = jk * lifted - lifted * jk
            for x in diff.entries:
                for g in A.span:
                    col.extend(base.to_rationals(x.coords.get(g, base.zero)))
        columns.append(col)
    rows = [list(r) for r in zip(*columns)]
    out = []
    for vec in _linear.nullspace(rows, len(units)):
        entries = [dict() for _ in range(m * m)]
        for idx in range(0, len(units), d):
            i, j, h, _ = units[idx]
            c = base.from_rationals(vec[idx:idx + d])
            if c:
                entries[i * m + j][h] = c
        out.append(mx.RingMatrix(B, m, m, [TGAElement(B, e) for e in entries]))
    return out


def random_commutant_element(basis, rng, bound=3, span=None):
    """A random integer combination of the commutant basis."""
    span = commutant_basis(basis) if span is None else span
    total = mx.zero_matrix(basis.m, basis.m, basis.B)
    for v in span:
        total = total + v * rng.randint(-bound, bound)
    return total


# ---------------------------------------------------------------------------
# tower diagrams

def diagram_paths(upper, lower, a):
    """Both routes from M(r, A) to M(mnr, C): L_{(e (x) f) (x) I_r} and L_{f (x) I_mr} after L_{e (x) I_r}."""
    direct = regrep_matrix(product_basis(upper, lower), a)
    stepwise = regrep_matrix(lower, regrep_matrix(upper, a))
    return direct, stepwise


def diagram_check_tower(upper, lower, a):
    direct, stepwise = diagram_paths(upper, lower, a)
    return direct == stepwise
