"""Square matrices with exact rational or floating entries."""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Sequence

import numpy as np

from ..errors import NotExact, SingularMatrix
from ..exact.resultant import bareiss_det
from ..exact.ring import norm_scalar, to_rational
from ..exact.unipoly import UniPoly, as_fraction_coeffs
from .roots import aberth_roots, cluster_roots, exact_poly_roots


FLOAT_CLUSTER_RADIUS = 1e-6


def _is_float_like(v) -> bool:
    return isinstance(v, (float, np.floating, complex, np.complexfloating))


class SquareMatrix:
    """Immutable square matrix acting on R^dim.

    Entries are exact rationals unless any input entry is a float, in which
    case the whole matrix is floating.  The characteristic polynomial and
    eigenvalues are computed lazily, once, under a lock.
    """

    __slots__ = ("rows", "dim", "exact", "_lock", "_cache")

    def __init__(self, rows):
        if isinstance(rows, SquareMatrix):
            rows = rows.rows
        if isinstance(rows, np.ndarray):
            arr = np.asarray(rows)
            exact = arr.dtype == object or arr.dtype.kind in "iu"
            rows = [list(r) for r in arr]
        else:
            rows = [list(r) for r in rows]
            exact = not any(_is_float_like(v) for r in rows for v in r)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("matrix must be square and nonempty")
        if exact:
            self.rows = tuple(tuple(to_rational(v) for v in r) for r in rows)
        else:
            self.rows = tuple(tuple(float(v) for v in r) for r in rows)
        self.dim = n
        self.exact = exact
        self._lock = threading.RLock()
        self._cache: dict = {}

    # -- constructors -----------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "SquareMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, values: Sequence) -> "SquareMatrix":
        n = len(values)
        zero = 0.0 if any(_is_float_like(v) for v in values) else 0
        return cls([[values[i] if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def companion(cls, poly: UniPoly) -> "SquareMatrix":
        """Companion matrix whose characteristic polynomial is monic ``poly``."""
        c = as_fraction_coeffs(poly.monic())
        n = poly.degree
        rows = [[0] * n for _ in range(n)]
        for i in range(1, n):
            rows[i][i - 1] = 1
        for i in range(n):
            rows[i][n - 1] = -c[i]
        return cls(rows)

    # -- views ------------------------------------------------------------

    def to_numpy(self) -> np.ndarray:
        return np.array([[float(v) for v in r] for r in self.rows], dtype=float)

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"SquareMatrix({[list(map(str, r)) for r in self.rows]})"

    def _cached(self, key, fn):
        with self._lock:
            if key not in self._cache:
                self._cache[key] = fn()
            return self._cache[key]

    # -- algebra ----------------------------------------------------------

    def transpose(self) -> "SquareMatrix":
        return SquareMatrix([list(col) for col in zip(*self.rows)])

    def __matmul__(self, other: "SquareMatrix") -> "SquareMatrix":
        if self.exact and other.exact:
            cols = list(zip(*other.rows))
            return SquareMatrix([[sum((a * b for a, b in zip(r, c)), 0) for c in cols] for r in self.rows])
        return SquareMatrix(self.to_numpy() @ other.to_numpy())

    def scale(self, k) -> "SquareMatrix":
        return SquareMatrix([[k * v for v in r] for r in self.rows])

    def power(self, k: int) -> "SquareMatrix":
        """Exact (or floating) integer power; negative k uses the inverse."""
        if k < 0:
            return self.inverse().power(-k)
        result = SquareMatrix.identity(self.dim)
        if not self.exact:
            return SquareMatrix(np.linalg.matrix_power(self.to_numpy(), k))
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def det(self):
        if self.exact:
            return self._cached("det", lambda: norm_scalar(Fraction(bareiss_det([list(r) for r in self.rows]))))
        return self._cached("det", lambda: float(np.linalg.det(self.to_numpy())))

    def require_nonsingular(self) -> None:
        if self.det() == 0:
            raise SingularMatrix("matrix is singular")

    def inverse(self) -> "SquareMatrix":
        self.require_nonsingular()
        if not self.exact:
            return self._cached("inv", lambda: SquareMatrix(np.linalg.inv(self.to_numpy())))
        return self._cached("inv", self._exact_inverse)

    def _exact_inverse(self) -> "SquareMatrix":
        n = self.dim
        aug = [[Fraction(v) for v in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self.rows)]
        for k in range(n):
            piv = next(i for i in range(k, n) if aug[i][k] != 0)
            aug[k], aug[piv] = aug[piv], aug[k]
            inv_p = 1 / aug[k][k]
            aug[k] = [v * inv_p for v in aug[k]]
            for i in range(n):
                if i != k and aug[i][k] != 0:
                    f = aug[i][k]
                    aug[i] = [a - f * b for a, b in zip(aug[i], aug[k])]
        return SquareMatrix([r[n:] for r in aug])

    def trace(self):
        return sum((self.rows[i][i] for i in range(self.dim)), 0)

    def is_scalar(self, tol: float = 1e-12) -> bool:
        """True iff the matrix is k*I (exactly, or within ``tol`` relative for floats)."""
        d = self.rows[0][0]
        if self.exact:
            return all(v == (d if i == j else 0) for i, r in enumerate(self.rows) for j, v in enumerate(r))
        scale = max(1.0, max(abs(v) for r in self.rows for v in r))
        return all(abs(v - (d if i == j else 0.0)) <= tol * scale for i, r in enumerate(self.rows) for j, v in enumerate(r))

    # -- spectral data ----------------------------------------------------

    def char_coefficients(self) -> list:
        """Ascending characteristic polynomial coefficients by Faddeev-LeVerrier.

        Exact Fractions for exact matrices, floats otherwise.
        """
        return self._cached("charcoef", self._faddeev_leverrier)

    def _faddeev_leverrier(self) -> list:
        n = self.dim
        if self.exact:
            a = [[Fraction(v) for v in r] for r in self.rows]
            coeffs = [Fraction(0)] * (n + 1)
            coeffs[n] = Fraction(1)
            m = [[Fraction(0)] * n for _ in range(n)]
            for k in range(1, n + 1):
                # M_k = A M_{k-1} + c_{n-k+1} I
                am = [[sum((a[i][t] * m[t][j] for t in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]
                for i in range(n):
                    am[i][i] += coeffs[n - k + 1]
                m = am
                tr = sum((a[i][t] * m[t][i] for i in range(n) for t in range(n)), Fraction(0))
                coeffs[n - k] = -tr / k
            return [norm_scalar(c) for c in coeffs]
        a = self.to_numpy()
        coeffs = [0.0] * (n + 1)
        coeffs[n] = 1.0
        m = np.zeros((n, n))
        for k in range(1, n + 1):
            m = a @ m + coeffs[n - k + 1] * np.eye(n)
            coeffs[n - k] = -np.trace(a @ m) / k
        return coeffs

    def char_poly(self, var: str = "x") -> UniPoly:
        if not self.exact:
            raise NotExact("exact characteristic polynomial needs rational entries")
        return UniPoly(self.char_coefficients(), var)

    def eigen_clusters(self, tol: float = 1e-12) -> list[tuple[complex, int]]:
        """Eigenvalues as (value, multiplicity) pairs.

        Exact matrices get exact multiplicities from a squarefree
        decomposition; floating ones are clustered at radius
        ``max(1e2 * tol, FLOAT_CLUSTER_RADIUS)``.
        """
        return self._cached(("clusters", tol), lambda: _eigen_clusters(self, tol))

    def eigenvalues(self, tol: float = 1e-12) -> list[complex]:
        out = []
        for z, m in self.eigen_clusters(tol):
            out.extend([z] * m)
        return out


def _eigen_clusters(mat: SquareMatrix, tol: float) -> list[tuple[complex, int]]:
    if mat.exact:
        return _sorted(exact_poly_roots(mat.char_poly(), tol))
    coeffs = mat.char_coefficients()[::-1]
    # A double root of a floating polynomial splits by ~sqrt(eps); merge at
    # that scale so near-ties surface as multiplicity, not as a fake gap.
    radius = max(1e2 * tol, FLOAT_CLUSTER_RADIUS)
    return _sorted(cluster_roots(aberth_roots(coeffs, tol=tol), radius))


def _sorted(clusters):
    return sorted(clusters, key=lambda zm: (-abs(zm[0]), -zm[0].real, -zm[0].imag))
