"""Sylvester resultants via fraction-free (Bareiss) elimination."""

from __future__ import annotations

from ..errors import ZeroPolynomial
from .ring import is_zero, ring_div
from .unipoly import UniPoly


def sylvester_matrix(a: UniPoly, b: UniPoly) -> list[list]:
    """The (m+n) x (m+n) Sylvester matrix, rows of ``a`` first."""
    m, n = a.degree, b.degree
    size = m + n
    da, db = a.descending(), b.descending()
    rows = []
    for i in range(n):
        rows.append([0] * i + da + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + db + [0] * (size - n - 1 - i))
    return rows


def bareiss_det(matrix: list[list]):
    """Determinant over an integral domain using only exact divisions.

    Every division by the previous pivot is exact (Sylvester's identity), so
    integer and polynomial entries never leave their ring.
    """
    mat = [list(row) for row in matrix]
    n = len(mat)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if is_zero(mat[k][k]):
            for i in range(k + 1, n):
                if not is_zero(mat[i][k]):
                    mat[k], mat[i] = mat[i], mat[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = mat[k][k]
        for i in range(k + 1, n):
            lead = mat[i][k]
            row_i, row_k = mat[i], mat[k]
            for j in range(k + 1, n):
                num = row_i[j] * pivot - lead * row_k[j]
                row_i[j] = ring_div(num, prev) if not is_zero(num) else 0
            row_i[k] = 0
        prev = pivot
    det = mat[n - 1][n - 1]
    return -det if sign < 0 else det


def sylvester_resultant(a: UniPoly, b: UniPoly, var: str | None = None):
    """Res(a, b; var) as an element of the coefficient ring.

    Matches ``lc(a)**deg(b) * lc(b)**deg(a) * prod(alpha_i - beta_j)``.
    A constant argument ``c`` gives ``c**deg(other)``.
    """
    var = var or a.var
    if a.var != var or b.var != var:
        raise ValueError(f"both polynomials must be in {var!r}, got {a.var!r} and {b.var!r}")
    if a.is_zero() or b.is_zero():
        raise ZeroPolynomial("resultant with the zero polynomial")
    if a.degree == 0 and b.degree == 0:
        return 1
    return bareiss_det(sylvester_matrix(a, b))
