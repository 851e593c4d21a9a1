"""Small exact linear algebra over Fraction.

Floating point is banned in the geometry layer: circuit signs are decided
by exact zero/positive/negative tests on these solutions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Vector = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def rref(matrix: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (reduced rows, pivot column indices)."""
    m = [row[:] for row in matrix]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = m[r][c]
        m[r] = [v / inv for v in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def _column_matrix(cols: Sequence[Vector]) -> list[list[Fraction]]:
    dim = len(cols[0])
    return [[cols[j][i] for j in range(len(cols))] for i in range(dim)]


def column_rank(cols: Sequence[Vector]) -> int:
    if not cols:
        return 0
    _, pivots = rref(_column_matrix(cols))
    return len(pivots)


def nullspace_vector(cols: Sequence[Vector]) -> list[Fraction] | None:
    """A nonzero kernel vector of the column matrix, or None if the columns
    are linearly independent. With several free columns the first one is
    chosen; callers that need a one-dimensional kernel must ensure it."""
    if not cols:
        return None
    m, pivots = rref(_column_matrix(cols))
    k = len(cols)
    free = [j for j in range(k) if j not in pivots]
    if not free:
        return None
    j0 = free[0]
    v = [ZERO] * k
    v[j0] = ONE
    for row, p in enumerate(pivots):
        v[p] = -m[row][j0]
    return v


def solve_affine(points: Sequence[Vector], x: Vector) -> list[Fraction] | None:
    """Coefficients l with sum(l) = 1 and sum(l_i * p_i) = x, when the points
    are affinely independent and x lies in their affine hull; None otherwise.

    Affinely dependent supports are rejected on purpose: any convex
    combination over them restricts to a proper sub-support, so skipping
    them loses no hull member.
    """
    k = len(points)
    dim = len(x)
    rows = [[points[j][i] for j in range(k)] + [x[i]] for i in range(dim)]
    rows.append([ONE] * k + [ONE])
    m, pivots = rref(rows)
    if k in pivots:
        return None  # inconsistent: x outside the affine hull
    if len(pivots) < k:
        return None  # affinely dependent support
    sol = [ZERO] * k
    for row, p in enumerate(pivots):
        sol[p] = m[row][k]
    return sol
