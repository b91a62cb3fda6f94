"""Aberth-Ehrlich simultaneous root finding for dense polynomials."""

from __future__ import annotations

import numpy as np

from ..errors import NonConvergence

MAX_SWEEPS = 1000
_EPS = np.finfo(float).eps


def _initial_guesses(coeffs: np.ndarray) -> np.ndarray:
    """Points on circles whose radii follow the Newton polygon of |coeffs|.

    ``coeffs`` is descending and monic.  Placing one circle per polygon edge
    keeps roots of very different magnitude from starting on one circle.
    """
    n = len(coeffs) - 1
    mags = np.abs(coeffs[::-1])  # ascending
    with np.errstate(divide="ignore"):
        logs = np.where(mags > 0, np.log(np.where(mags > 0, mags, 1.0)), -np.inf)
    # upper convex hull of (k, log|a_k|)
    hull: list[int] = []
    for k in range(n + 1):
        if not np.isfinite(logs[k]):
            continue
        while len(hull) >= 2:
            i, j = hull[-2], hull[-1]
            if (logs[j] - logs[i]) * (k - i) <= (logs[k] - logs[i]) * (j - i):
                hull.pop()
            else:
                break
        hull.append(k)
    guesses = []
    for i, j in zip(hull, hull[1:]):
        count = j - i
        radius = np.exp((logs[i] - logs[j]) / count)
        for t in range(count):
            angle = 2 * np.pi * t / count + 2 * np.pi * i / n + 0.4
            guesses.append(radius * np.exp(1j * angle))
    # zero roots (trailing zero coefficients) sit before the first hull vertex
    guesses = [0.0] * hull[0] + guesses
    return np.asarray(guesses, dtype=complex)


def _residual_scale(coeffs: np.ndarray, z: np.ndarray) -> np.ndarray:
    return np.polyval(np.abs(coeffs), np.abs(z))


def aberth_roots(coeffs, tol: float = 1e-12, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """All complex roots of the polynomial with descending ``coeffs``.

    Each root is iterated until its backward residual
    ``|p(z)| / sum(|a_i| |z|^i)`` drops below ``tol`` or the Aberth
    correction stalls at machine precision.
    """
    c = np.asarray(coeffs, dtype=complex)
    nz = np.flatnonzero(c)
    if len(nz) == 0:
        raise ValueError("zero polynomial")
    c = c[nz[0]:]
    n = len(c) - 1
    if n == 0:
        return np.zeros(0, dtype=complex)
    c = c / c[0]
    # exact zero roots
    trailing = 0
    while c[-1 - trailing] == 0:
        trailing += 1
    if trailing:
        return np.concatenate([aberth_roots(c[: n + 1 - trailing], tol, max_sweeps), np.zeros(trailing, complex)])
    if n == 1:
        return np.array([-c[1]], dtype=complex)
    dc = np.polyder(c)
    z = _initial_guesses(c)
    active = np.ones(n, dtype=bool)
    for _ in range(max_sweeps):
        for k in np.flatnonzero(active):
            pz = np.polyval(c, z[k])
            scale = _residual_scale(c, z[k:k + 1])[0]
            if abs(pz) <= 2 * n * _EPS * scale:
                active[k] = False
                continue
            dpz = np.polyval(dc, z[k])
            diff = z[k] - np.delete(z, k)
            if np.any(diff == 0):
                z[k] += _EPS * (1 + abs(z[k]))
                continue
            s = np.sum(1.0 / diff)
            if dpz == 0:
                w = pz / (-pz * s) if s != 0 else 1e-8
            else:
                ratio = pz / dpz
                w = ratio / (1 - ratio * s)
            z[k] -= w
            if abs(w) <= 4 * _EPS * abs(z[k]):
                active[k] = False
        if not active.any():
            break
    else:
        residual = np.abs(np.polyval(c, z)) / _residual_scale(c, z)
        if np.any(residual > tol):
            raise NonConvergence(f"Aberth iteration did not converge in {max_sweeps} sweeps")
    residual = np.abs(np.polyval(c, z)) / _residual_scale(c, z)
    if np.any(residual > tol):
        raise NonConvergence(f"root residual {residual.max():.3g} exceeds tol {tol:.3g}")
    return z


def cluster_roots(roots, radius: float) -> list[tuple[complex, int]]:
    """Group roots closer than ``radius * max(1, |z|)``; returns (centroid, multiplicity)."""
    remaining = list(complex(r) for r in roots)
    out = []
    while remaining:
        seed = remaining.pop(0)
        group = [seed]
        keep = []
        for r in remaining:
            if abs(r - seed) <= radius * max(1.0, abs(seed)):
                group.append(r)
            else:
                keep.append(r)
        remaining = keep
        out.append((complex(np.mean(group)), len(group)))
    return out


def exact_poly_roots(poly, tol: float = 1e-12) -> list[tuple[complex, int]]:
    """Roots of a rational UniPoly as (value, multiplicity) pairs.

    Multiplicities come from an exact squarefree decomposition, so each
    floating solve only ever sees simple roots.
    """
    from ..exact.unipoly import as_fraction_coeffs

    out = []
    for factor, mult in poly.squarefree_decomposition():
        if factor.degree < 1:
            continue
        coeffs = [float(c) for c in as_fraction_coeffs(factor.monic())][::-1]
        out.extend((complex(z), mult) for z in aberth_roots(coeffs, tol=tol))
    return out
