"""Independent reference implementations used only by the tests."""

from fractions import Fraction


def hamilton(p, q):
    """Product of quaternions given as (w, x, y, z) tuples."""
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)


def qnorm(p):
    return sum(Fraction(v) ** 2 for v in p)


def circulant3(x0, x1, x2):
    return x0 ** 3 + x1 ** 3 + x2 ** 3 - 3 * x0 * x1 * x2
