"""Small dense linear algebra over exact fields and big floats."""

from __future__ import annotations

from fractions import Fraction

import mpmath


def _is_float_like(x) -> bool:
    return isinstance(x, (float, mpmath.mpf))


def det(matrix):
    """Determinant of a square matrix given as a list of rows.

    Exact entries go through fraction-free (Bareiss) elimination; big-float
    entries through Gaussian elimination with partial pivoting.
    """
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    if any(_is_float_like(x) for row in matrix for x in row):
        return _det_pivoted(matrix)
    return _det_bareiss(matrix)


def _det_bareiss(matrix):
    a = [[Fraction(x) if isinstance(x, int) else x for x in row] for row in matrix]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return a[k][k] * 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) / prev
        prev = akk
    return a[n - 1][n - 1] * sign


def _det_pivoted(matrix):
    a = [[mpmath.mpf(x) for x in row] for row in matrix]
    n = len(a)
    result = mpmath.mpf(1)
    for k in range(n):
        p = max(range(k, n), key=lambda r: abs(a[r][k]))
        if a[p][k] == 0:
            return mpmath.mpf(0)
        if p != k:
            a[k], a[p] = a[p], a[k]
            result = -result
        akk = a[k][k]
        result *= akk
        for i in range(k + 1, n):
            f = a[i][k] / akk
            if f:
                row_i, row_k = a[i], a[k]
                for j in range(k + 1, n):
                    row_i[j] -= f * row_k[j]
    return result


def solve(a, b):
    """Solve ``a x = b`` for square nonsingular ``a``; raises ZeroDivisionError
    if singular. Entries may be exact or big floats."""
    n = len(a)
    m = [list(row) + [rhs] for row, rhs in zip(a, b)]
    floaty = any(_is_float_like(x) for row in m for x in row)
    for k in range(n):
        if floaty:
            p = max(range(k, n), key=lambda r: abs(m[r][k]))
        else:
            p = next((r for r in range(k, n) if m[r][k] != 0), None)
            if p is None:
                raise ZeroDivisionError("singular system")
        if m[p][k] == 0:
            raise ZeroDivisionError("singular system")
        m[k], m[p] = m[p], m[k]
        pivot = m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / pivot
            if f:
                for j in range(k, n + 1):
                    m[i][j] -= f * m[k][j]
    x = [None] * n
    for i in range(n - 1, -1, -1):
        s = m[i][n]
        for j in range(i + 1, n):
            s -= m[i][j] * x[j]
        x[i] = s / m[i][i]
    return x


def solve_exact_overdetermined(a, b):
    """Exact solution of a consistent (possibly overdetermined) system with
    full column rank, or ``None`` if inconsistent or rank-deficient."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    m = [list(map(Fraction, row)) + [Fraction(rhs)] for row, rhs in zip(a, b)]
    piv_row = 0
    for k in range(cols):
        p = next((r for r in range(piv_row, rows) if m[r][k] != 0), None)
        if p is None:
            return None
        m[piv_row], m[p] = m[p], m[piv_row]
        pivot = m[piv_row][k]
        for i in range(rows):
            if i != piv_row and m[i][k] != 0:
                f = m[i][k] / pivot
                for j in range(k, cols + 1):
                    m[i][j] -= f * m[piv_row][j]
        piv_row += 1
    if any(m[r][cols] != 0 for r in range(cols, rows)):
        return None
    return [m[k][cols] / m[k][k] for k in range(cols)]
