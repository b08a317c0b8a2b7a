"""Small exact-arithmetic helpers shared by the other modules."""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]


def q(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to Fraction; floats are refused."""
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted; use Fraction or 'p/q'")
    return Fraction(x)


def qvec(v: Iterable) -> tuple[Fraction, ...]:
    return tuple(q(x) for x in v)


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((q(a) * q(b) for a, b in zip(u, v)), Fraction(0))


def primitive(v: Sequence) -> tuple[int, ...]:
    """Scale ``v`` by a *positive* rational to a primitive integer vector.

    The direction is kept: rays of a cone are half-lines, so the sign is part
    of the data.
    """
    fv = qvec(v)
    if all(x == 0 for x in fv):
        raise ValueError("zero vector has no primitive representative")
    den = 1
    for x in fv:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fv]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return tuple(x // g for x in ints)


def fmt(x: Rational) -> str:
    """Exact string form ``"p/q"``; integers are written with denominator 1."""
    x = q(x)
    return f"{x.numerator}/{x.denominator}"


def det(m: Sequence[Sequence]) -> Fraction:
    n = len(m)
    if n == 1:
        return q(m[0][0])
    if n == 2:
        return q(m[0][0]) * q(m[1][1]) - q(m[0][1]) * q(m[1][0])
    if n == 3:
        a = [[q(x) for x in row] for row in m]
        return (
            a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
        )
    raise ValueError("only dimensions 1-3 are supported")


def rank(rows: Sequence[Sequence]) -> int:
    """Rank of a small rational matrix by Gaussian elimination."""
    m = [list(qvec(r)) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def solve_combination(basis: Sequence[Sequence], v: Sequence) -> tuple[Fraction, ...] | None:
    """Coefficients ``x`` with ``sum x_i basis_i == v``, or None if ``v`` is not in the span.

    ``basis`` must be linearly independent.
    """
    k = len(basis)
    dim = len(v)
    # augmented system, columns are basis vectors
    m = [[q(basis[j][i]) for j in range(k)] + [q(v[i])] for i in range(dim)]
    row = 0
    pivots = []
    for c in range(k):
        piv = next((i for i in range(row, dim) if m[i][c] != 0), None)
        if piv is None:
            raise ValueError("basis vectors are linearly dependent")
        m[row], m[piv] = m[piv], m[row]
        m[row] = [a / m[row][c] for a in m[row]]
        for i in range(dim):
            if i != row and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[row])]
        pivots.append(c)
        row += 1
    if any(m[i][k] != 0 for i in range(row, dim)):
        return None
    return tuple(m[i][k] for i in range(k))


def cross(u: Sequence, v: Sequence) -> tuple[Fraction, ...]:
    a, b = qvec(u), qvec(v)
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )
