import math

import numpy as np
import pytest

from hilbertspec.errors import InvalidDomain, NotProximal, PointNotInterior, PointsCoincide
from hilbertspec.hilbert import (
    Ellipsoid,
    Halfspace,
    Polytope,
    axis_translation_length,
    chord_endpoints,
    cross_ratio_distance,
    hilbert_distance,
)
from hilbertspec.spectral import SquareMatrix, hilbert_translation_length

from conftest import poincare_distance, random_disk_point, random_proximal

DISK = Ellipsoid(np.zeros(2), np.eye(2))


def box(n=2, half=1.0):
    hs = []
    for i in range(n):
        e = np.zeros(n)
        e[i] = 1.0
        hs += [Halfspace(e, half), Halfspace(-e, half)]
    return Polytope(tuple(hs))


SQUARE = box()


# -- chords and distances --------------------------------------------------------


def test_chord_examples():
    ch = chord_endpoints(DISK, [0, 0], [0.5, 0])
    assert np.allclose(ch.p_inf, [-1, 0]) and np.allclose(ch.q_inf, [1, 0])
    ch = chord_endpoints(SQUARE, [0, 0], [0.5, 0])
    assert np.allclose(ch.p_inf, [-1, 0]) and np.allclose(ch.q_inf, [1, 0])
    ch = chord_endpoints(DISK, [0, 0], [0, -0.5])
    assert np.allclose(ch.p_inf, [0, 1]) and np.allclose(ch.q_inf, [0, -1])
    assert ch.t_lo < 0 < 1 < ch.t_hi


def test_distance_examples():
    assert abs(hilbert_distance(DISK, [0, 0], [0.5, 0]) - math.log(3)) < 1e-12
    assert abs(hilbert_distance(SQUARE, [0, 0], [0.5, 0]) - math.log(3)) < 1e-12
    assert hilbert_distance(DISK, [0.2, 0.1], [0.2, 0.1]) == 0.0


def test_distance_errors():
    with pytest.raises(PointsCoincide):
        chord_endpoints(DISK, [0.1, 0], [0.1, 0])
    with pytest.raises(PointNotInterior):
        hilbert_distance(DISK, [0, 0], [1.0, 0])
    with pytest.raises(PointNotInterior):
        hilbert_distance(SQUARE, [0, 0], [0.3, 1.5])
    with pytest.raises(PointNotInterior):
        hilbert_distance(DISK, [0, 0, 0], [0.1, 0, 0])


def test_invalid_domains():
    with pytest.raises(InvalidDomain):
        Ellipsoid(np.zeros(2), np.array([[1.0, 0.0], [0.0, -1.0]]))
    with pytest.raises(InvalidDomain):
        Ellipsoid(np.zeros(2), np.array([[1.0, 0.5], [0.0, 1.0]]))
    with pytest.raises(InvalidDomain):
        Polytope((Halfspace(np.array([1.0, 0.0]), 1.0), Halfspace(np.array([-1.0, 0.0]), 1.0)))
    with pytest.raises(InvalidDomain):
        Polytope(SQUARE.halfspaces, interior_point=np.array([5.0, 0.0]))


def test_chord_points_are_collinear_and_ordered(rng):
    for dom in (DISK, SQUARE):
        for _ in range(100):
            p, q = random_disk_point(rng, 0.9), random_disk_point(rng, 0.9)
            ch = chord_endpoints(dom, p, q)
            d = q - p
            for pt in (ch.p_inf, ch.q_inf):
                off = pt - p
                assert abs(d[0] * off[1] - d[1] * off[0]) < 1e-10 * max(1.0, np.linalg.norm(off))
            assert cross_ratio_distance(ch.p_inf, p, q, ch.q_inf) == pytest.approx(hilbert_distance(dom, p, q), abs=1e-10)


def test_klein_relation(rng):
    worst = 0.0
    for _ in range(1000):
        p, q = random_disk_point(rng, 0.9), random_disk_point(rng, 0.9)
        if np.array_equal(p, q):
            continue
        worst = max(worst, abs(hilbert_distance(DISK, p, q) - 2 * poincare_distance(p, q)))
    assert worst < 1e-12


def test_symmetry_and_triangle_inequality(rng):
    for dom in (DISK, SQUARE, Ellipsoid(np.array([1.0, -2.0]), np.array([[2.0, 0.5], [0.5, 1.0]]))):
        centre = dom.center if isinstance(dom, Ellipsoid) else dom.interior_point
        scale = 0.5 if isinstance(dom, Ellipsoid) and dom is not DISK else 0.9
        worst_sym, worst_tri = 0.0, 0.0
        for _ in range(1000):
            p, q, r = (centre + random_disk_point(rng, scale) for _ in range(3))
            dpq, dqp = hilbert_distance(dom, p, q), hilbert_distance(dom, q, p)
            worst_sym = max(worst_sym, abs(dpq - dqp))
            slack = dpq + hilbert_distance(dom, q, r) - hilbert_distance(dom, p, r)
            worst_tri = min(worst_tri, slack)
        assert worst_sym < 1e-10
        assert worst_tri >= -1e-10


def test_projective_invariance(rng):
    for dom in (DISK, SQUARE):
        for _ in range(50):
            a = rng.normal(size=(2, 2))
            while abs(np.linalg.det(a)) < 0.2:
                a = rng.normal(size=(2, 2))
            shift = rng.normal(size=2)
            img = dom.affine_image(a, shift)
            p, q = random_disk_point(rng, 0.9), random_disk_point(rng, 0.9)
            d0 = hilbert_distance(dom, p, q)
            d1 = hilbert_distance(img, a @ p + shift, a @ q + shift)
            assert abs(d0 - d1) < 1e-10


def test_higher_dimensional_ball():
    ball = Ellipsoid(np.zeros(3), np.eye(3))
    assert hilbert_distance(ball, [0, 0, 0], [0, 0, 0.5]) == pytest.approx(math.log(3), abs=1e-12)


# -- axis translation length --------------------------------------------------------


def test_axis_examples(rng):
    m = SquareMatrix.diag([math.exp(2), 1.0, math.exp(-2)])
    assert abs(axis_translation_length(m) - 4.0) < 1e-9
    t = rng.normal(size=(3, 3))
    conj = t @ np.diag([4.0, 1.0, 0.25]) @ np.linalg.inv(t)
    assert abs(axis_translation_length(conj) - math.log(16)) < 1e-8
    assert abs(axis_translation_length(np.linalg.inv(conj)) - axis_translation_length(conj)) < 1e-8
    with pytest.raises(NotProximal):
        axis_translation_length(np.diag([-3.0, 1.0, 1 / 3]))
    assert axis_translation_length(np.eye(3)) == 0.0


def test_axis_matches_spectral_length(rng):
    worst = 0.0
    for i in range(100):
        m, expected = random_proximal(rng, negative=bool(i % 4 == 3))
        geo = axis_translation_length(m)
        worst = max(worst, abs(geo - hilbert_translation_length(m)), abs(geo - expected))
    assert worst < 1e-8
