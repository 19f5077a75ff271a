"""Gaussian elimination over Q on plain lists of Fractions.

Used internally for field inverses and for sampling solution spaces; the
ring-generic matrix code lives in :mod:`studydet.matrix`.
"""

from fractions import Fraction


def rref(rows, ncols):
    """Reduced row echelon form. Returns (rows, pivot_columns)."""
    a = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def nullspace(rows, ncols):
    """Basis of {v : rows . v = 0} as a list of Fraction vectors."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(matrix, rhs):
    """Solve matrix . x = rhs for square nonsingular matrix; None if singular."""
    n = len(matrix)
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    red, pivots = rref(aug, n + 1)
    if pivots != list(range(n)):
        return None
    return [row[n] for row in red]
