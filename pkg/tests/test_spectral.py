import math
import threading
from fractions import Fraction

import numpy as np
import pytest

from hilbertspec.errors import DegenerateGap, NonConvergence, NotExact, NotProximal, SingularMatrix
from hilbertspec.exact import format_poly, parse_poly
from hilbertspec.rootratio import root_ratio_poly
from hilbertspec.spectral import (
    ProximalTag,
    SquareMatrix,
    aberth_roots,
    char_poly,
    classify_proximal,
    common_eigenvalue_ratio,
    duality_map,
    eigen_ratios,
    eigenvalues,
    exact_poly_roots,
    hilbert_translation_length,
    matrix_power,
    normalize_det,
    same_length_pair,
)

from conftest import (
    multiset_distance,
    random_integer_matrix,
    random_rational_matrix,
    rational_boost,
    rational_conjugate,
)

F = Fraction


def diag(*vals):
    return SquareMatrix.diag([F(v) if isinstance(v, str) else v for v in vals])


def rot_block(theta, last):
    c, s = math.cos(theta), math.sin(theta)
    return SquareMatrix([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, last]])


def random_proximal_values(rng, n=3):
    vals = sorted({F(int(rng.integers(1, 40)), int(rng.integers(1, 8))) for _ in range(n + 3)}, reverse=True)
    while len(vals) < n:
        vals = sorted({F(int(rng.integers(1, 40)), int(rng.integers(1, 8))) for _ in range(n + 3)}, reverse=True)
    vals = vals[:n]
    return [v * (-1 if rng.random() < 0.3 else 1) if 0 < i < n - 1 else v for i, v in enumerate(vals)]


# -- characteristic polynomial --------------------------------------------------


def test_char_poly_examples():
    assert format_poly(char_poly(SquareMatrix.identity(3))) == "x^3 - 3*x^2 + 3*x - 1"
    assert format_poly(char_poly(diag(2, 3))) == "x^2 - 5*x + 6"
    assert char_poly(SquareMatrix.companion(parse_poly("x^3 - 2"))) == parse_poly("x^3 - 2")


def test_char_poly_constant_term_and_cayley_hamilton(rng):
    for _ in range(30):
        n = int(rng.integers(2, 6))
        m = random_rational_matrix(rng, n)
        p = m.char_poly()
        assert p.coeffs[0] == (-1) ** n * m.det()
        a = m.to_numpy()
        v = rng.normal(size=n)
        acc = np.zeros(n)
        for c in reversed([float(x) for x in p.coeffs]):
            acc = a @ acc + c * v
        assert np.linalg.norm(acc) <= 1e-8 * max(1.0, np.linalg.norm(a, 2) ** n) * np.linalg.norm(v)


def test_char_poly_float_matrix_is_not_exact():
    with pytest.raises(NotExact):
        char_poly(SquareMatrix([[1.5, 0.0], [0.0, 1.0]]))


# -- eigenvalues ----------------------------------------------------------------


def test_eigenvalue_examples():
    assert np.allclose(sorted(z.real for z in eigenvalues(diag(1, 2, 3))), [1, 2, 3], atol=1e-12)
    ev = eigenvalues(SquareMatrix([[0, -1], [1, 0]]))
    assert multiset_distance(ev, [1j, -1j]) < 1e-12
    phi = (1 + math.sqrt(5)) / 2
    ev = eigenvalues(SquareMatrix.companion(parse_poly("x^2 - x - 1")))
    assert multiset_distance(ev, [phi, 1 - phi]) < 1e-12


def test_exact_multiplicities():
    clusters = diag(2, 2, 5).eigen_clusters()
    assert [k for _, k in clusters] == [1, 2]
    assert multiset_distance([z for z, _ in clusters], [5, 2]) < 1e-12


def test_aberth_nonconvergence_cap():
    with pytest.raises(NonConvergence):
        aberth_roots([1.0, 0.0, 0.0, 0.0, -1e-300], tol=1e-300, max_sweeps=3)


def test_eigen_ratio_examples():
    assert multiset_distance(eigen_ratios(diag(1, 2)), [2, 0.5]) < 1e-12
    assert multiset_distance(eigen_ratios(diag(3, 6)), [2, 0.5]) < 1e-12
    assert multiset_distance(eigen_ratios(diag(1, 2, 4)), [2, 0.5, 4, 0.25, 2, 0.5]) < 1e-12
    with pytest.raises(SingularMatrix):
        eigen_ratios(diag(0, 1))


def test_eigen_ratios_scale_invariant(rng):
    for _ in range(10):
        m = random_rational_matrix(rng, 3)
        k = F(int(rng.integers(2, 9)), 3)
        assert multiset_distance(eigen_ratios(m), eigen_ratios(m.scale(k))) < 1e-9


def test_eigen_ratios_are_root_ratio_zeros(rng):
    worst = 0.0
    for _ in range(100):
        m = random_integer_matrix(rng, int(rng.integers(2, 6)))
        zeros = [z for z, k in exact_poly_roots(root_ratio_poly(m.char_poly()).poly) for _ in range(k)]
        worst = max(worst, multiset_distance(eigen_ratios(m), zeros))
    assert worst < 1e-7


# -- proximality ----------------------------------------------------------------


def test_classify_examples():
    c = classify_proximal(diag(3, 1, "1/3"))
    assert c.tag is ProximalTag.PROXIMAL
    assert c.lambda_plus == pytest.approx(3) and c.lambda_minus == pytest.approx(1 / 3)
    c = classify_proximal(diag(-3, 1, "1/3"))
    assert c.tag is ProximalTag.SEMI_PROXIMAL_ONLY
    assert "opposite signs" in c.reason
    assert classify_proximal(rot_block(math.pi / 3, 2.0)).tag is ProximalTag.SEMI_PROXIMAL_ONLY
    assert classify_proximal(rot_block(math.pi / 3, 0.5)).tag is ProximalTag.NOT_SEMI_PROXIMAL
    assert classify_proximal(SquareMatrix.identity(3).scale(5)).tag is ProximalTag.IDENTITY


def test_classify_repeated_and_degenerate():
    assert classify_proximal(diag(2, 2, 1)).tag is ProximalTag.NOT_SEMI_PROXIMAL
    with pytest.raises(DegenerateGap):
        classify_proximal(diag(2, -2, 1))
    with pytest.raises(DegenerateGap):
        classify_proximal(SquareMatrix.diag([2.0, 2.0 * (1 - 1e-12), 1.0]))


def test_length_examples(rng):
    m = SquareMatrix.diag([math.exp(2), 1.0, math.exp(-2)])
    assert abs(hilbert_translation_length(m) - 4.0) < 1e-12
    assert hilbert_translation_length(diag(-3, 1, "-1/3")) == pytest.approx(math.log(9), abs=1e-12)
    t = random_rational_matrix(rng, 3).to_numpy()
    so21 = t @ np.diag([math.e, 1.0, 1 / math.e]) @ np.linalg.inv(t)
    assert abs(hilbert_translation_length(so21) - 2.0) < 1e-9
    assert hilbert_translation_length(SquareMatrix.identity(3)) == 0.0
    with pytest.raises(NotProximal):
        hilbert_translation_length(diag(-3, 1, "1/3"))


def test_length_invariances(rng):
    for _ in range(40):
        m = rational_conjugate(rng, random_proximal_values(rng))
        ell = hilbert_translation_length(m)
        k = F(int(rng.integers(1, 9)) * (-1 if rng.random() < 0.5 else 1), int(rng.integers(1, 5)))
        assert abs(hilbert_translation_length(m.inverse()) - ell) < 1e-10
        assert abs(hilbert_translation_length(duality_map(m)) - ell) < 1e-10
        assert abs(hilbert_translation_length(m.scale(k)) - ell) < 1e-10
        assert abs(hilbert_translation_length(normalize_det(m)) - ell) < 1e-10


def test_length_of_powers(rng):
    for _ in range(20):
        m = rational_conjugate(rng, random_proximal_values(rng))
        ell = hilbert_translation_length(m)
        for k in range(1, 6):
            assert abs(hilbert_translation_length(matrix_power(m, k)) - k * ell) < 1e-9


# -- duality and normalization ----------------------------------------------------


def test_duality_examples(rng):
    perm = SquareMatrix([[0, -1, 0], [0, 0, 1], [1, 0, 0]])
    assert duality_map(perm) == perm
    assert duality_map(diag(2, 1, "1/2")) == diag("1/2", 1, 2)
    for _ in range(20):
        m = random_rational_matrix(rng, int(rng.integers(2, 5)))
        assert duality_map(duality_map(m)) == m
    with pytest.raises(SingularMatrix):
        duality_map(diag(1, 0))


def test_normalize_det_examples():
    assert np.allclose(normalize_det(diag(2, 2)).to_numpy(), np.eye(2))
    assert np.allclose(normalize_det(SquareMatrix.identity(3).scale(3)).to_numpy(), np.eye(3))
    n = normalize_det(diag(1, 8))
    assert np.allclose(n.to_numpy(), np.diag([1 / math.sqrt(8), math.sqrt(8)]))
    assert multiset_distance(eigen_ratios(n), [8, 1 / 8]) < 1e-12


# -- exact ratio predicates -------------------------------------------------------


def test_common_eigenvalue_ratio_examples(rng):
    assert not common_eigenvalue_ratio(diag(1, 2), diag(1, 3))
    assert common_eigenvalue_ratio(diag(1, 2), diag(3, 6))
    m = random_rational_matrix(rng, 3)
    assert common_eigenvalue_ratio(m, m)
    with pytest.raises(NotExact):
        common_eigenvalue_ratio(SquareMatrix([[1.0, 0.0], [0.0, 2.0]]), diag(1, 2))


def test_same_length_pair_examples():
    assert same_length_pair(diag(2, 1, "1/2"), diag(-2, 1, "-1/2"))
    assert same_length_pair(SquareMatrix.identity(3), SquareMatrix.identity(3))
    assert not same_length_pair(diag(2, 1, "1/2"), diag(3, 1, "1/3"))
    assert not same_length_pair(diag(-3, 1, "1/3"), diag(-3, 1, "1/3"))


def test_equal_length_implies_common_ratio(rng):
    for _ in range(20):
        hi, mid, lo = random_proximal_values(rng)
        k = F(int(rng.integers(1, 7)), int(rng.integers(1, 7)))
        other_mid = (hi * k + lo * k) / 2
        m = rational_conjugate(rng, [hi, mid, lo])
        n = rational_conjugate(rng, [hi * k, other_mid, lo * k])
        assert same_length_pair(m, n)
        assert common_eigenvalue_ratio(m, n)


def test_common_ratio_does_not_imply_equal_length():
    m, n = diag(2, 1, "1/2"), diag(8, 2, 1)
    assert common_eigenvalue_ratio(m, n)
    assert not same_length_pair(m, n)


def test_so21_boosts_without_common_ratio():
    m, n = rational_boost(2), rational_boost(3)
    form = np.diag([1.0, 1.0, -1.0])
    for g in (m, n):
        a = g.to_numpy()
        assert np.allclose(a.T @ form @ a, form)
    assert not common_eigenvalue_ratio(m, n)


def test_so21_translation_parameters_one_and_two_share_a_ratio():
    # eigenvalues {e^t, 1, e^-t}: the t = 1 element has ratio e^2 = lambda_+ of t = 2
    r1 = eigen_ratios(SquareMatrix.diag([math.e, 1.0, 1 / math.e]))
    r2 = eigen_ratios(SquareMatrix.diag([math.e**2, 1.0, math.e**-2]))
    assert min(abs(x - y) for x in r1 for y in r2) < 1e-12


def test_cached_spectral_data_is_thread_safe(rng):
    m = random_rational_matrix(rng, 4)
    out = []
    workers = [threading.Thread(target=lambda: out.append(tuple(m.eigenvalues()))) for _ in range(8)]
    for w in workers:
        w.start()
    for w in workers:
        w.join()
    assert len(set(out)) == 1
