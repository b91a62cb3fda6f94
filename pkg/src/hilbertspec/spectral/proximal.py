"""Proximality, Hilbert translation length, duality, and ratio predicates."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from ..errors import DegenerateGap, NotExact, NotProximal, SingularMatrix
from ..rootratio import has_common_root_ratio
from .matrix import SquareMatrix

DEFAULT_TOL = 1e-9


class ProximalTag(str, enum.Enum):
    PROXIMAL = "proximal"
    SEMI_PROXIMAL_ONLY = "semi-proximal-only"
    NOT_SEMI_PROXIMAL = "not-semi-proximal"
    IDENTITY = "identity"


@dataclass(frozen=True)
class ProximalityClass:
    tag: ProximalTag
    lambda_plus: float | None = None
    lambda_minus: float | None = None
    gap: float | None = None
    reason: str = ""

    @property
    def is_proximal(self) -> bool:
        return self.tag is ProximalTag.PROXIMAL


@dataclass(frozen=True)
class _End:
    """Leading eigenvalue data at one end of the spectrum."""

    semi_proximal: bool
    value: float | None
    gap: float
    reason: str


def _as_matrix(m) -> SquareMatrix:
    return m if isinstance(m, SquareMatrix) else SquareMatrix(m)


def _leading(clusters: list[tuple[complex, int]], tol: float, exact: bool) -> _End:
    """Decide semi-proximality from (eigenvalue, multiplicity) pairs sorted by modulus."""
    top, mult = clusters[0]
    mod = abs(top)
    rest = [abs(z) for z, m in clusters[1:]]
    second = rest[0] if rest else 0.0
    gap = (mod - second) / mod if mult == 1 else 0.0
    if mult > 1 and not exact:
        # floating clusters cannot tell a double root from a near tie
        raise DegenerateGap(f"leading eigenvalue cluster near {top:.6g} has {mult} members")
    real = abs(top.imag) < tol * mod
    if not real:
        # A non-real leading eigenvalue always ties with its conjugate.
        partner = any(abs(z - top.conjugate()) <= 1e2 * tol * mod for z, _ in clusters[1:])
        if partner or gap <= tol:
            return _End(False, None, 0.0, f"leading eigenvalue {top:.6g} is not real (conjugate pair)")
        raise DegenerateGap(f"leading eigenvalue {top:.6g} has no conjugate partner")
    if exact and mult > 1:
        return _End(False, top.real, 0.0, f"leading eigenvalue {top.real:.6g} has multiplicity {mult}")
    if gap <= tol:
        raise DegenerateGap(f"relative modulus gap {gap:.3g} <= tol {tol:.3g}")
    return _End(True, top.real, gap, "")


def _end_data(m: SquareMatrix, tol: float, inverse: SquareMatrix | None):
    m.require_nonsingular()
    inv = inverse if inverse is not None else m.inverse()
    top = _leading(m.eigen_clusters(), tol, m.exact)
    return top, inv


def classify_proximal(m, tol: float = DEFAULT_TOL, inverse=None) -> ProximalityClass:
    """Classify ``m`` as proximal, semi-proximal only, not semi-proximal, or scalar.

    The bottom end is read off ``m**-1`` (``inverse`` may be supplied when it
    is available more accurately than by inversion, e.g. from word products).
    Raises DegenerateGap rather than guessing when moduli are within ``tol``.
    """
    m = _as_matrix(m)
    if m.is_scalar():
        m.require_nonsingular()
        return ProximalityClass(ProximalTag.IDENTITY, reason="scalar matrix")
    top, inv = _end_data(m, tol, None if inverse is None else _as_matrix(inverse))
    if not top.semi_proximal:
        return ProximalityClass(ProximalTag.NOT_SEMI_PROXIMAL, gap=top.gap, reason=top.reason)
    bottom = _leading(inv.eigen_clusters(), tol, inv.exact)
    if not bottom.semi_proximal:
        return ProximalityClass(
            ProximalTag.SEMI_PROXIMAL_ONLY,
            lambda_plus=top.value,
            gap=top.gap,
            reason=f"inverse is not semi-proximal: {bottom.reason}",
        )
    lam_minus = 1.0 / bottom.value
    gap = min(top.gap, bottom.gap)
    if top.value * lam_minus <= 0:
        return ProximalityClass(
            ProximalTag.SEMI_PROXIMAL_ONLY,
            lambda_plus=top.value,
            lambda_minus=lam_minus,
            gap=gap,
            reason=(
                f"largest-modulus eigenvalue {top.value:.6g} and smallest-modulus "
                f"eigenvalue {lam_minus:.6g} have opposite signs"
            ),
        )
    return ProximalityClass(ProximalTag.PROXIMAL, lambda_plus=top.value, lambda_minus=lam_minus, gap=gap)


def hilbert_translation_length(m, tol: float = DEFAULT_TOL, inverse=None) -> float:
    """log(lambda_+ / lambda_-) for proximal ``m``; 0 for scalar matrices."""
    m = _as_matrix(m)
    cls = classify_proximal(m, tol, inverse)
    if cls.tag is ProximalTag.IDENTITY:
        return 0.0
    if cls.tag is not ProximalTag.PROXIMAL:
        raise NotProximal(f"{cls.tag.value}: {cls.reason}")
    # lambda_+/lambda_- = |lambda_+| * |top eigenvalue of m^-1|, same sign
    return math.log(abs(cls.lambda_plus)) - math.log(abs(cls.lambda_minus))


def eigenvalues(m, tol: float = 1e-12) -> list[complex]:
    """All eigenvalues with multiplicity, largest modulus first."""
    return _as_matrix(m).eigenvalues(tol)


def eigen_ratios(m, tol: float = 1e-12) -> list[complex]:
    """All lambda_i / lambda_j for i != j (with multiplicity)."""
    m = _as_matrix(m)
    m.require_nonsingular()
    ev = m.eigenvalues(tol)
    return [ev[i] / ev[j] for i in range(len(ev)) for j in range(len(ev)) if i != j]


def char_poly(m, var: str = "x"):
    return _as_matrix(m).char_poly(var)


def duality_map(m) -> SquareMatrix:
    """d(M) = (M^t)^{-1}; exact for rational matrices."""
    m = _as_matrix(m)
    return m.inverse().transpose()


def normalize_det(m) -> SquareMatrix:
    """Floating ``M / |det M|**(1/dim)``, so that |det| = 1."""
    m = _as_matrix(m)
    det = m.det()
    if det == 0:
        raise SingularMatrix("matrix is singular")
    scale = abs(float(det)) ** (1.0 / m.dim)
    return SquareMatrix(m.to_numpy() / scale)


def common_eigenvalue_ratio(m, n) -> bool:
    """Exact test of C_{P,Q} = 0 for the characteristic polynomials P, Q."""
    m, n = _as_matrix(m), _as_matrix(n)
    for a in (m, n):
        if not a.exact:
            raise NotExact("common_eigenvalue_ratio needs rational matrices")
        if a.dim < 2:
            raise ValueError("dimension must be at least 2")
        a.require_nonsingular()
    return has_common_root_ratio(m.char_poly(), n.char_poly())


def same_length_pair(m, n, tol: float = DEFAULT_TOL) -> bool:
    """Both scalar, or both proximal with translation lengths within ``tol``."""
    m, n = _as_matrix(m), _as_matrix(n)
    cm, cn = classify_proximal(m), classify_proximal(n)
    if cm.tag is ProximalTag.IDENTITY and cn.tag is ProximalTag.IDENTITY:
        return True
    if not (cm.is_proximal and cn.is_proximal):
        return False
    return abs(hilbert_translation_length(m) - hilbert_translation_length(n)) < tol


def matrix_power(m, k: int) -> SquareMatrix:
    return _as_matrix(m).power(k)


def numeric(m) -> np.ndarray:
    return _as_matrix(m).to_numpy()
