"""Hilbert metric on convex domains in an affine patch.

Polytopes are accepted even though they are not strictly convex: the
distance function is still valid there, but geodesics need not be unique.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union

import numpy as np
from scipy.optimize import linprog

from .errors import InvalidDomain, NotProximal, PointNotInterior, PointsCoincide
from .spectral.matrix import SquareMatrix
from .spectral.proximal import ProximalTag, classify_proximal

INTERIOR_MARGIN = 1e-12
COLLINEAR_TOL = 1e-10
_CHART_MIN = 0.05
_CHART_RETRIES = 8


@dataclass(frozen=True)
class Ellipsoid:
    """{x : (x - c)^T S (x - c) < 1} with S symmetric positive definite."""

    center: np.ndarray
    shape: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.center, dtype=float)
        s = np.asarray(self.shape, dtype=float)
        object.__setattr__(self, "center", c)
        object.__setattr__(self, "shape", s)
        n = len(c)
        if s.shape != (n, n):
            raise InvalidDomain(f"shape matrix must be {n}x{n}")
        if not np.allclose(s, s.T, rtol=0, atol=1e-12 * max(1.0, np.abs(s).max())):
            raise InvalidDomain("shape matrix is not symmetric")
        for k in range(1, n + 1):
            if np.linalg.det(s[:k, :k]) <= 0:
                raise InvalidDomain("shape matrix is not positive definite")

    @property
    def dim(self) -> int:
        return len(self.center)

    def slack(self, x: np.ndarray) -> float:
        d = x - self.center
        return 1.0 - d @ self.shape @ d

    def line_params(self, p: np.ndarray, d: np.ndarray) -> tuple[float, float]:
        """Parameters t_lo < 0 < t_hi where p + t d meets the boundary."""
        u = p - self.center
        a = d @ self.shape @ d
        b = u @ self.shape @ d
        c = u @ self.shape @ u - 1.0
        disc = math.sqrt(b * b - a * c)
        if b == 0:
            return -disc / a, disc / a
        # cancellation-free form of (-b +- disc) / a
        q = -(b + math.copysign(disc, b))
        t1, t2 = q / a, c / q
        return min(t1, t2), max(t1, t2)

    def affine_image(self, a: np.ndarray, shift: np.ndarray) -> "Ellipsoid":
        """Image under x -> A x + shift."""
        ainv = np.linalg.inv(a)
        s = ainv.T @ self.shape @ ainv
        return Ellipsoid(a @ self.center + shift, (s + s.T) / 2)


@dataclass(frozen=True)
class Halfspace:
    normal: np.ndarray
    offset: float


@dataclass(frozen=True)
class Polytope:
    """Bounded intersection of open halfspaces <a, x> < b."""

    halfspaces: tuple[Halfspace, ...]
    interior_point: np.ndarray | None = field(default=None)

    def __post_init__(self):
        hs = tuple(
            h if isinstance(h, Halfspace) else Halfspace(np.asarray(h[0], float), float(h[1]))
            for h in self.halfspaces
        )
        hs = tuple(Halfspace(np.asarray(h.normal, float), float(h.offset)) for h in hs)
        object.__setattr__(self, "halfspaces", hs)
        if not hs:
            raise InvalidDomain("polytope needs at least one halfspace")
        a, b = self.arrays()
        n = a.shape[1]
        # boundedness: support in every +-coordinate direction must be finite
        for i in range(n):
            for sign in (1.0, -1.0):
                c = np.zeros(n)
                c[i] = -sign
                res = linprog(c, A_ub=a, b_ub=b, bounds=[(None, None)] * n, method="highs")
                if res.status == 3:
                    raise InvalidDomain("polytope is unbounded")
                if res.status != 0:
                    raise InvalidDomain(f"polytope is empty or infeasible ({res.message})")
        if self.interior_point is None:
            object.__setattr__(self, "interior_point", self._chebyshev_center())
        else:
            object.__setattr__(self, "interior_point", np.asarray(self.interior_point, float))
        if self.slack(self.interior_point) <= INTERIOR_MARGIN:
            raise InvalidDomain("declared reference point is not interior")

    def arrays(self) -> tuple[np.ndarray, np.ndarray]:
        a = np.array([h.normal for h in self.halfspaces], dtype=float)
        b = np.array([h.offset for h in self.halfspaces], dtype=float)
        return a, b

    @property
    def dim(self) -> int:
        return len(self.halfspaces[0].normal)

    def _chebyshev_center(self) -> np.ndarray:
        a, b = self.arrays()
        n = a.shape[1]
        norms = np.linalg.norm(a, axis=1)
        c = np.zeros(n + 1)
        c[-1] = -1.0
        res = linprog(c, A_ub=np.hstack([a, norms[:, None]]), b_ub=b, bounds=[(None, None)] * n + [(0, None)], method="highs")
        if res.status != 0 or res.x[-1] <= 0:
            raise InvalidDomain("polytope has empty interior")
        return res.x[:n]

    def slack(self, x: np.ndarray) -> float:
        a, b = self.arrays()
        return float(np.min((b - a @ x) / np.linalg.norm(a, axis=1)))

    def line_params(self, p: np.ndarray, d: np.ndarray) -> tuple[float, float]:
        a, b = self.arrays()
        ad = a @ d
        room = b - a @ p
        pos, neg = ad > 0, ad < 0
        t_hi = np.min(room[pos] / ad[pos])
        t_lo = np.max(room[neg] / ad[neg])
        return float(t_lo), float(t_hi)

    def affine_image(self, m: np.ndarray, shift: np.ndarray) -> "Polytope":
        """Image under x -> M x + shift: <a, x> < b becomes <M^-T a, y> < b + <M^-T a, shift>."""
        minv_t = np.linalg.inv(m).T
        hs = []
        for h in self.halfspaces:
            na = minv_t @ h.normal
            hs.append(Halfspace(na, h.offset + na @ shift))
        return Polytope(tuple(hs), m @ self.interior_point + shift)


ConvexDomain = Union[Ellipsoid, Polytope]


@dataclass(frozen=True)
class Chord:
    """Boundary points p_inf, q_inf and interior p, q in the order p_inf, p, q, q_inf."""

    p_inf: np.ndarray
    p: np.ndarray
    q: np.ndarray
    q_inf: np.ndarray
    t_lo: float
    t_hi: float


def _check_interior(domain: ConvexDomain, x: np.ndarray, name: str) -> None:
    if len(x) != domain.dim:
        raise PointNotInterior(f"{name} has dimension {len(x)}, domain has {domain.dim}")
    if not domain.slack(x) > INTERIOR_MARGIN:
        raise PointNotInterior(f"{name} = {x.tolist()} is not interior (margin {INTERIOR_MARGIN})")


def chord_endpoints(domain: ConvexDomain, p, q) -> Chord:
    """Intersect the line through p, q with the boundary.

    Parametrizing x(t) = p + t (q - p), the boundary hits are t_lo < 0 and
    t_hi > 1, so p separates p_inf = x(t_lo) from q.
    """
    p, q = np.asarray(p, float), np.asarray(q, float)
    _check_interior(domain, p, "p")
    _check_interior(domain, q, "q")
    d = q - p
    if not np.any(d):
        raise PointsCoincide("p and q coincide")
    t_lo, t_hi = domain.line_params(p, d)
    return Chord(p + t_lo * d, p, q, p + t_hi * d, t_lo, t_hi)


def hilbert_distance(domain: ConvexDomain, p, q) -> float:
    """log of the cross ratio (p_inf, p, q, q_inf)."""
    p, q = np.asarray(p, float), np.asarray(q, float)
    if np.array_equal(p, q):
        _check_interior(domain, p, "p")
        return 0.0
    ch = chord_endpoints(domain, p, q)
    # |q - p_inf| / |p - p_inf| = (1 - t_lo) / (-t_lo);  |p - q_inf| / |q - q_inf| = t_hi / (t_hi - 1)
    return math.log1p(-1.0 / ch.t_lo) + math.log1p(1.0 / (ch.t_hi - 1.0))


def cross_ratio_distance(p_inf, p, q, q_inf) -> float:
    """Hilbert distance along a segment given its four collinear points explicitly."""
    p_inf, p, q, q_inf = (np.asarray(v, float) for v in (p_inf, p, q, q_inf))
    num = np.linalg.norm(q - p_inf) * np.linalg.norm(p - q_inf)
    den = np.linalg.norm(p - p_inf) * np.linalg.norm(q - q_inf)
    return math.log(num / den)


def _eigvec(a: np.ndarray, lam: float, sweeps: int = 4) -> np.ndarray:
    """Inverse iteration for the real eigenvalue ``lam``."""
    n = a.shape[0]
    shift = lam * (1 + 1e-10) if lam != 0 else 1e-10
    b = a - shift * np.eye(n)
    v = np.ones(n) / math.sqrt(n)
    for _ in range(sweeps):
        v = np.linalg.solve(b, v)
        v /= np.linalg.norm(v)
    return v


def axis_translation_length(m) -> float:
    """Translation length of a proximal matrix along its axis, via cross ratio.

    The attracting fixed points of m and m^-1 span the axis; the midpoint x
    of that segment and its image m.x give d(x, m.x) with the fixed points
    as chord endpoints.  Agrees with log(lambda_+/lambda_-).
    """
    mat = m if isinstance(m, SquareMatrix) else SquareMatrix(m)
    cls = classify_proximal(mat)
    if cls.tag is ProximalTag.IDENTITY:
        return 0.0
    if not cls.is_proximal:
        raise NotProximal(f"{cls.tag.value}: {cls.reason}")
    a = mat.to_numpy()
    v_plus = _eigvec(a, cls.lambda_plus)
    v_minus = _eigvec(a, cls.lambda_minus)
    # Affine chart: divide by the coordinate where both vectors are far from
    # zero.  Eigenvectors along coordinate axes have no such coordinate, so
    # rotate the basis (seeded, deterministic) until one exists.
    rng = np.random.default_rng(0)
    for _ in range(_CHART_RETRIES):
        k = int(np.argmax(np.minimum(np.abs(v_plus), np.abs(v_minus))))
        if min(abs(v_plus[k]), abs(v_minus[k])) > _CHART_MIN:
            break
        rot, _ = np.linalg.qr(rng.normal(size=a.shape))
        a = rot @ a @ rot.T
        v_plus, v_minus = rot @ v_plus, rot @ v_minus
    else:
        raise NotProximal("no affine chart contains the axis")
    p_plus = v_plus / v_plus[k]
    p_minus = v_minus / v_minus[k]
    x = (p_plus + p_minus) / 2
    mx = a @ x
    if mx[k] == 0:
        raise NotProximal("axis image meets the hyperplane at infinity of the chart")
    mx = mx / mx[k]
    drop = [i for i in range(len(x)) if i != k]
    pts = [v[drop] for v in (p_minus, x, mx, p_plus)]
    d = cross_ratio_distance(*pts)
    return abs(d)
