"""Dense matrices over any ring of this package.

Entries may come from a noncommutative ring (a twisted group algebra, or
another matrix ring); products always keep the left-to-right order.
Determinants and characteristic polynomials need a commutative entry ring
and never divide: the production method is Berkowitz's algorithm, with the
Leibniz sum kept as a small-size oracle.
"""

import itertools
from functools import lru_cache

from .errors import (BudgetError, NotInvertibleError, PreconditionError,
                     StructuralError)
from .rings import Ring, is_scalar, poly_normalize, polynomial_ring

LEIBNIZ_MAX = 6


class MatrixRing(Ring):
    """M(n, base), usable as the entry ring of another matrix."""

    def __init__(self, n, base):
        self.n = n
        self.base = base
        self.commutative = n == 1 and base.commutative
        self.zero = zero_matrix(n, n, base)
        self.one = identity(n, base)

    def __repr__(self):
        return f"M({self.n}, {self.base})"

    def __reduce__(self):
        return (matrix_ring, (self.n, self.base))

    def __call__(self, x):
        if isinstance(x, RingMatrix):
            if x.base is self.base and x.nrows == x.ncols == self.n:
                return x
            raise StructuralError(f"cannot coerce {x.nrows}x{x.ncols} matrix over {x.base} into {self}")
        return self.one * self.base(x)

    def is_unit(self, x):
        return self.base.is_unit(det(x))

    def inverse(self, x):
        return inverse_adjugate(x)


@lru_cache(maxsize=None)
def matrix_ring(n, base):
    return MatrixRing(n, base)


class RingMatrix:
    """Immutable dense matrix; ``base`` is the entry ring descriptor."""

    __slots__ = ("base", "nrows", "ncols", "entries")
    _outer = True

    def __init__(self, base, nrows, ncols, entries):
        if len(entries) != nrows * ncols:
            raise StructuralError("entry count does not match shape")
        self.base = base
        self.nrows = nrows
        self.ncols = ncols
        self.entries = tuple(entries)

    @property
    def ring(self):
        if self.nrows != self.ncols:
            raise StructuralError("non-square matrices are not ring elements")
        return matrix_ring(self.nrows, self.base)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def is_square(self):
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(ij)
        return self.entries[i * self.ncols + j]

    def rows(self):
        n = self.ncols
        return [list(self.entries[i * n:(i + 1) * n]) for i in range(self.nrows)]

    def column(self, j):
        return [self[i, j] for i in range(self.nrows)]

    def _same(self, other):
        if not isinstance(other, RingMatrix):
            raise StructuralError(f"expected a matrix, got {other!r}")
        if other.base is not self.base:
            raise StructuralError(f"ring mismatch: {self.base} vs {other.base}")

    def __add__(self, other):
        if not isinstance(other, RingMatrix):
            return self + self.base(other) * identity_like(self)
        self._same(other)
        if other.shape != self.shape:
            raise StructuralError("shape mismatch")
        return RingMatrix(self.base, self.nrows, self.ncols,
                          [a + b for a, b in zip(self.entries, other.entries)])

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        return RingMatrix(self.base, self.nrows, self.ncols, [-a for a in self.entries])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RingMatrix):
            self._same(other)
            if self.ncols != other.nrows:
                raise StructuralError(f"cannot multiply {self.shape} by {other.shape}")
            zero = self.base.zero
            a = self.rows()
            bcols = [other.column(j) for j in range(other.ncols)]
            out = []
            for row in a:
                for col in bcols:
                    out.append(_dot(row, col, zero))
            return RingMatrix(self.base, self.nrows, other.ncols, out)
        s = other if is_scalar(other) else self.base(other)
        return RingMatrix(self.base, self.nrows, self.ncols, [a * s for a in self.entries])

    def __rmul__(self, other):
        s = other if is_scalar(other) else self.base(other)
        return RingMatrix(self.base, self.nrows, self.ncols, [s * a for a in self.entries])

    def __pow__(self, k):
        result = identity_like(self)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return (other.base is self.base and other.shape == self.shape
                and other.entries == self.entries)

    def __hash__(self):
        return hash((self.nrows, self.ncols, self.entries))

    def __bool__(self):
        return any(bool(a) for a in self.entries)

    def map(self, f, base):
        return RingMatrix(base, self.nrows, self.ncols, [f(a) for a in self.entries])

    def transpose(self):
        return RingMatrix(self.base, self.ncols, self.nrows,
                          [self[i, j] for j in range(self.ncols) for i in range(self.nrows)])

    def conj(self):
        return self.map(lambda a: a.conj(), self.base)

    def submatrix(self, rows, cols):
        rows, cols = list(rows), list(cols)
        return RingMatrix(self.base, len(rows), len(cols), [self[i, j] for i in rows for j in cols])

    def block(self, k, l, size):
        """The (k, l) block of an evenly partitioned matrix (0-based)."""
        return self.submatrix(range(k * size, (k + 1) * size), range(l * size, (l + 1) * size))

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(str(a) for a in row) + "]" for row in self.rows()) + "]"

    def __repr__(self):
        return f"RingMatrix({self.base}, {self})"


def _dot(row, col, zero):
    acc = zero
    for a, b in zip(row, col):
        if a and b:
            acc = acc + a * b
    return acc


def matrix(base, rows):
    """Build a matrix from nested lists, coercing every entry into ``base``."""
    rows = [list(r) for r in rows]
    if not rows or any(len(r) != len(rows[0]) for r in rows) or not rows[0]:
        raise StructuralError("ragged or empty rows")
    return RingMatrix(base, len(rows), len(rows[0]), [base(a) for r in rows for a in r])


def zero_matrix(m, n, base):
    return RingMatrix(base, m, n, [base.zero] * (m * n))


def identity(n, base):
    z, o = base.zero, base.one
    return RingMatrix(base, n, n, [o if i == j else z for i in range(n) for j in range(n)])


def identity_like(x):
    if not x.is_square():
        raise StructuralError("identity needs a square shape")
    return identity(x.nrows, x.base)


def elementary(i, j, n, base, value=None):
    """E_ij scaled by ``value`` (default 1); indices are 0-based."""
    value = base.one if value is None else base(value)
    entries = [base.zero] * (n * n)
    entries[i * n + j] = value
    return RingMatrix(base, n, n, entries)


def diagonal(base, values):
    n = len(values)
    entries = [base.zero] * (n * n)
    for i, v in enumerate(values):
        entries[i * n + i] = base(v)
    return RingMatrix(base, n, n, entries)


def _require_square(x):
    if not isinstance(x, RingMatrix) or not x.is_square():
        raise StructuralError("a square matrix is required")


def _require_commutative(x):
    if not x.base.commutative:
        raise PreconditionError(f"determinants need a commutative entry ring, not {x.base}")


# ---------------------------------------------------------------------------
# permutations

class Permutation:
    """Bijection of {0, ..., N-1}; ``image[i]`` is the image of i.

    ``p * q`` applies p first and then q, which makes ``perm_action`` a left
    action: ``perm_action(p * q, X) == perm_action(p, perm_action(q, X))``.
    """

    __slots__ = ("image",)

    def __init__(self, image):
        image = tuple(image)
        if sorted(image) != list(range(len(image))):
            raise StructuralError(f"not a permutation: {image}")
        self.image = image

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    @classmethod
    def from_one_based(cls, image):
        return cls(k - 1 for k in image)

    def one_based(self):
        return [k + 1 for k in self.image]

    @property
    def size(self):
        return len(self.image)

    def __call__(self, i):
        return self.image[i]

    def __mul__(self, other):
        if other.size != self.size:
            raise StructuralError("permutation sizes differ")
        return Permutation(other.image[k] for k in self.image)

    def inverse(self):
        inv = [0] * self.size
        for i, k in enumerate(self.image):
            inv[k] = i
        return Permutation(inv)

    def sign(self):
        seen = [False] * self.size
        s = 1
        for i in range(self.size):
            if not seen[i]:
                j, length = i, 0
                while not seen[j]:
                    seen[j] = True
                    j = self.image[j]
                    length += 1
                if length % 2 == 0:
                    s = -s
        return s

    def __eq__(self, other):
        return isinstance(other, Permutation) and other.image == self.image

    def __hash__(self):
        return hash(self.image)

    def __repr__(self):
        return f"Permutation({self.one_based()})"


def _perm_sign(p):
    inv = 0
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                inv += 1
    return -1 if inv % 2 else 1


def sigma_perm(m, n):
    """The bijection m(k-1)+l -> n(l-1)+k of [mn] (k in [n], l in [m]).

    It reverses Kronecker products: sigma(m, n) . (X (x) Y) = Y (x) X for
    X of size m and Y of size n.
    """
    if m < 1 or n < 1:
        raise StructuralError("sizes must be positive")
    image = [0] * (m * n)
    for k in range(1, n + 1):
        for l in range(1, m + 1):
            image[m * (k - 1) + l - 1] = n * (l - 1) + k - 1
    return Permutation(image)


def perm_action(sigma, x):
    """(sigma . X)_{ij} = X_{sigma(i), sigma(j)}."""
    _require_square(x)
    if sigma.size != x.nrows:
        raise StructuralError(f"permutation of size {sigma.size} on a {x.nrows}x{x.nrows} matrix")
    img = sigma.image
    return RingMatrix(x.base, x.nrows, x.ncols, [x[img[i], img[j]] for i in range(x.nrows) for j in range(x.ncols)])


# ---------------------------------------------------------------------------
# determinants

def det_leibniz(x):
    """Leibniz sum; oracle only, limited to size 6."""
    _require_square(x)
    _require_commutative(x)
    n = x.nrows
    if n > LEIBNIZ_MAX:
        raise BudgetError(f"Leibniz oracle limited to size {LEIBNIZ_MAX}, got {n}")
    total = x.base.zero
    for p in itertools.permutations(range(n)):
        term = x.base.one
        for j in range(n):
            a = x[p[j], j]
            if not a:
                break
            term = term * a
        else:
            total = total + term if _perm_sign(p) > 0 else total - term
    return total


def charpoly_coefficients(x):
    """[1, c_1, ..., c_n] with det(tI - X) = t^n + c_1 t^(n-1) + ... + c_n.

    Berkowitz's algorithm: O(n^4) ring operations and no division, so it
    works over polynomial rings and over group algebras with zero divisors.
    """
    _require_square(x)
    _require_commutative(x)
    n = x.nrows
    base = x.base
    one, zero = base.one, base.zero
    a = x.rows()
    vect = [one, -a[n - 1][n - 1]]
    for k in range(n - 2, -1, -1):
        s = n - 1 - k
        r = a[k][k + 1:]
        sub = [a[k + 1 + i][k + 1:] for i in range(s)]
        col = [one, -a[k][k]]
        v = [a[i][k] for i in range(k + 1, n)]
        for t in range(s):
            col.append(-_dot(r, v, zero))
            if t < s - 1:
                v = [_dot(row, v, zero) for row in sub]
        new = []
        for i in range(s + 2):
            acc = zero
            for j in range(max(0, i - s - 1), min(i, s) + 1):
                c, w = col[i - j], vect[j]
                if c and w:
                    acc = acc + c * w
            new.append(acc)
        vect = new
    return vect


def charpoly_divfree(x, var="x"):
    """det(var*I - X) as a univariate polynomial over the entry ring."""
    coeffs = charpoly_coefficients(x)
    ring = polynomial_ring(x.base, (var,))
    n = len(coeffs) - 1
    return poly_normalize(ring, [((n - k,), c) for k, c in enumerate(coeffs)])


def det(x):
    """Division-free determinant (Berkowitz)."""
    coeffs = charpoly_coefficients(x)
    c = coeffs[-1]
    return c if x.nrows % 2 == 0 else -c


def inverse_adjugate(x):
    """Inverse over a commutative ring, needing only det(X) to be a unit.

    Uses X^-1 = -c_n^-1 (X^(n-1) + c_1 X^(n-2) + ... + c_(n-1) I).
    """
    coeffs = charpoly_coefficients(x)
    n = x.nrows
    base = x.base
    if not base.is_unit(coeffs[-1]):
        raise NotInvertibleError("determinant is not a unit")
    p = identity(n, base)
    for k in range(1, n):
        p = x * p + identity(n, base) * coeffs[k]
    return p * (-base.inverse(coeffs[-1]))


def mat_inverse_field(x):
    """Gauss-Jordan inverse over a field entry ring."""
    _require_square(x)
    base = x.base
    if not base.is_field:
        raise PreconditionError(f"{base} is not a field")
    n = x.nrows
    a = [row + [base.one if i == j else base.zero for j in range(n)] for i, row in enumerate(x.rows())]
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c]), None)
        if p is None:
            raise NotInvertibleError("matrix is singular")
        a[c], a[p] = a[p], a[c]
        inv = base.inverse(a[c][c])
        a[c] = [v * inv for v in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [u - f * v for u, v in zip(a[i], a[c])]
    return RingMatrix(base, n, n, [v for row in a for v in row[n:]])


# ---------------------------------------------------------------------------
# structure

def kron(x, y):
    """Kronecker product: block (i, j) is X_ij * Y."""
    if x.base is not y.base:
        raise StructuralError(f"ring mismatch: {x.base} vs {y.base}")
    m1, n1, m2, n2 = x.nrows, x.ncols, y.nrows, y.ncols
    out = []
    for i1 in range(m1):
        for i2 in range(m2):
            for j1 in range(n1):
                a = x[i1, j1]
                for j2 in range(n2):
                    out.append(a * y[i2, j2])
    return RingMatrix(x.base, m1 * m2, n1 * n2, out)


def from_blocks(blocks):
    """Assemble a matrix from a nested list of equally sized blocks."""
    blocks = [list(r) for r in blocks]
    if not blocks or any(len(r) != len(blocks[0]) for r in blocks):
        raise StructuralError("ragged block layout")
    first = blocks[0][0]
    h, w = first.nrows, first.ncols
    for r in blocks:
        for b in r:
            if b.shape != (h, w):
                raise StructuralError("ragged block sizes")
            if b.base is not first.base:
                raise StructuralError("blocks over different rings")
    out = []
    for brow in blocks:
        for i in range(h):
            for b in brow:
                out.extend(b.entries[i * w:(i + 1) * w])
    return RingMatrix(first.base, h * len(blocks), w * len(blocks[0]), out)


def flatten(x):
    """iota: M(m, M(r, B)) -> M(mr, B)."""
    if not isinstance(x.base, MatrixRing):
        raise StructuralError("flatten needs a matrix whose entries are matrices")
    return from_blocks(x.rows())


def unflatten(x, r):
    """Inverse of flatten: view X as a matrix of r x r blocks."""
    if x.nrows % r or x.ncols % r:
        raise StructuralError(f"size {x.shape} is not divisible by block size {r}")
    blocks = [x.block(k, l, r) for k in range(x.nrows // r) for l in range(x.ncols // r)]
    return RingMatrix(matrix_ring(r, x.base), x.nrows // r, x.ncols // r, blocks)


def block_det_inner(x, m):
    """sum over S_n of sgn(s) X^(1,s(1)) ... X^(n,s(n)) for the n x n grid of m x m blocks.

    Block products are taken in exactly that left-to-right order.
    """
    _require_square(x)
    if x.nrows % m:
        raise StructuralError(f"block size {m} does not divide {x.nrows}")
    n = x.nrows // m
    if n > LEIBNIZ_MAX:
        raise BudgetError(f"block grid limited to {LEIBNIZ_MAX}, got {n}")
    blocks = [[x.block(k, l, m) for l in range(n)] for k in range(n)]
    total = zero_matrix(m, m, x.base)
    for p in itertools.permutations(range(n)):
        term = blocks[0][p[0]]
        for k in range(1, n):
            term = term * blocks[k][p[k]]
        total = total + term if _perm_sign(p) > 0 else total - term
    return total


def matrix_polynomial(coeffs, t):
    """sum_k coeffs[k] * T^k."""
    result = zero_matrix(t.nrows, t.ncols, t.base)
    power = identity_like(t)
    for c in coeffs:
        result = result + power * c
        power = power * t
    return result
