"""Exact linear algebra over the rational-function field.

Plain Gaussian elimination on small dense matrices of
:class:`~calabiqm.laurent.FieldElement`.  Pivots are chosen with minimal
combined numerator/denominator degree to keep intermediate rational
functions small; matrices here are at most a handful of rows.
"""

from __future__ import annotations

from .laurent import FieldElement


class SingularMatrixError(ValueError):
    """Raised when an exact inverse of a singular matrix is requested."""


def _pivot_weight(x: FieldElement) -> int:
    return x.num.degree + x.den.degree


def solve(matrix, rhs):
    """Solve ``matrix @ x = rhs`` exactly.

    ``matrix`` is a list of rows of FieldElement, ``rhs`` a list of
    FieldElement.  Returns the solution vector, or None when the system is
    singular or inconsistent.
    """
    n = len(matrix)
    m = len(matrix[0]) if n else 0
    a = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    piv_cols = []
    row = 0
    for col in range(m):
        best = None
        for r in range(row, n):
            if a[r][col]:
                if best is None or _pivot_weight(a[r][col]) < _pivot_weight(a[best][col]):
                    best = r
        if best is None:
            continue
        a[row], a[best] = a[best], a[row]
        inv = a[row][col].invert()
        a[row] = [x * inv for x in a[row]]
        for r in range(n):
            if r != row and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[row])]
        piv_cols.append(col)
        row += 1
        if row == n:
            break
    for r in range(row, n):
        if a[r][m]:
            return None  # inconsistent
    if len(piv_cols) < m:
        return None  # underdetermined: no unique solution
    x = [FieldElement.zero()] * m
    for r, col in enumerate(piv_cols):
        x[col] = a[r][m]
    return x


def inverse(matrix):
    """Exact inverse of a square matrix; raises SingularMatrixError."""
    n = len(matrix)
    a = [list(row) + _unit_row(n, i) for i, row in enumerate(matrix)]
    row = 0
    for col in range(n):
        best = None
        for r in range(row, n):
            if a[r][col]:
                if best is None or _pivot_weight(a[r][col]) < _pivot_weight(a[best][col]):
                    best = r
        if best is None:
            raise SingularMatrixError("matrix is singular over the function field")
        a[row], a[best] = a[best], a[row]
        inv = a[row][col].invert()
        a[row] = [x * inv for x in a[row]]
        for r in range(n):
            if r != row and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[row])]
        row += 1
    return [r[n:] for r in a]


def _unit_row(n, i):
    row = [FieldElement.zero()] * n
    row[i] = FieldElement.one()
    return row


def mat_vec(matrix, vec):
    out = []
    for row in matrix:
        acc = FieldElement.zero()
        for a, b in zip(row, vec):
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return out
