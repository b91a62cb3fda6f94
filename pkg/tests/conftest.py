import math
from fractions import Fraction

import numpy as np
import pytest
from scipy.optimize import linear_sum_assignment

from hilbertspec.exact import UniPoly
from hilbertspec.spectral import SquareMatrix


def random_rational(rng, num=20, den=6):
    return Fraction(int(rng.integers(-num, num + 1)), int(rng.integers(1, den + 1)))


def random_monic(rng, degree, num=20, den=6, var="x"):
    """Monic polynomial with random rational coefficients and p(0) != 0."""
    coeffs = [random_rational(rng, num, den) for _ in range(degree)] + [1]
    while coeffs[0] == 0:
        coeffs[0] = random_rational(rng, num, den)
    return UniPoly(coeffs, var)


def multiset_distance(a, b) -> float:
    """Largest gap under the best one-to-one matching of two complex multisets."""
    a, b = np.asarray(a, complex), np.asarray(b, complex)
    assert len(a) == len(b)
    cost = np.abs(a[:, None] - b[None, :])
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].max()) if len(a) else 0.0


def pairwise_ratios(roots):
    return [roots[i] / roots[j] for i in range(len(roots)) for j in range(len(roots)) if i != j]


def random_proximal(rng, dim=3, negative=False):
    """T diag(l1, ..., ln) T^-1 with well separated positive (or all negative) eigenvalues."""
    logs = np.sort(rng.uniform(-3, 3, size=dim))[::-1]
    while np.min(-np.diff(logs)) < 0.2:
        logs = np.sort(rng.uniform(-3, 3, size=dim))[::-1]
    vals = np.exp(logs) * (-1 if negative else 1)
    t = rng.normal(size=(dim, dim))
    while abs(np.linalg.det(t)) < 0.3:
        t = rng.normal(size=(dim, dim))
    return t @ np.diag(vals) @ np.linalg.inv(t), math.log(vals[0] / vals[-1])


def random_rational_matrix(rng, dim, lo=-5, hi=5):
    while True:
        rows = [[Fraction(int(rng.integers(lo, hi + 1)), int(rng.integers(1, 4))) for _ in range(dim)] for _ in range(dim)]
        m = SquareMatrix(rows)
        if m.det() != 0:
            return m


def random_integer_matrix(rng, dim, lo=-9, hi=9):
    while True:
        m = SquareMatrix([[int(rng.integers(lo, hi + 1)) for _ in range(dim)] for _ in range(dim)])
        if m.det() != 0:
            return m


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def rational_conjugate(rng, values):
    """T diag(values) T^-1 with a random invertible rational T, computed exactly."""
    n = len(values)
    while True:
        t = SquareMatrix([[Fraction(int(rng.integers(-3, 4)), int(rng.integers(1, 3))) for _ in range(n)] for _ in range(n)])
        if t.det() != 0:
            break
    return t @ SquareMatrix.diag([Fraction(v) for v in values]) @ t.inverse()


def rational_boost(lam):
    """Exact SO(2,1) element with eigenvalues lam, 1, 1/lam (form x^2 + y^2 - z^2)."""
    lam = Fraction(lam)
    c, s = (lam + 1 / lam) / 2, (lam - 1 / lam) / 2
    return SquareMatrix([[c, 0, s], [0, 1, 0], [s, 0, c]])


def random_disk_point(rng, radius=0.95):
    r = radius * math.sqrt(rng.random())
    t = rng.uniform(0, 2 * math.pi)
    return np.array([r * math.cos(t), r * math.sin(t)])


def poincare_distance(k1, k2):
    """Curvature -1 distance between Klein-model points, via the Poincare ball."""
    def to_poincare(k):
        return k / (1 + math.sqrt(1 - k @ k))

    p1, p2 = to_poincare(k1), to_poincare(k2)
    num = np.linalg.norm(p1 - p2)
    return 2 * math.asinh(num / math.sqrt((1 - p1 @ p1) * (1 - p2 @ p2)))


# -- acceptance reporting ---------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def report():
    def add(label, ok, detail):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {label}: {detail}")

    return add


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
