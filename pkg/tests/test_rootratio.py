import itertools
from fractions import Fraction

import numpy as np
import pytest

from hilbertspec.errors import DegreeTooSmall, NotMonic, VariableCollision, ZeroConstantTerm
from hilbertspec.exact import MPoly, UniPoly, format_poly, parse_expression, parse_poly
from hilbertspec.exact.unipoly import as_fraction_coeffs
from hilbertspec.rootratio import common_root_ratio_poly, has_common_root_ratio, root_ratio_poly
from hilbertspec.spectral import exact_poly_roots

from conftest import multiset_distance, pairwise_ratios, random_monic

a, b, c, d = (MPoly.var(n) for n in "abcd")


def sym(text):
    return parse_poly(text, symbolic=True)


def numeric_zeros(poly: UniPoly):
    return np.array([z for z, m in exact_poly_roots(poly) for _ in range(m)])


def test_quadratic_golden():
    rp = root_ratio_poly(sym("x^2 + b*x + c")).poly
    assert rp == UniPoly([c, 2 * c - b * b, c], "r")


def test_cubic_golden():
    rp = root_ratio_poly(sym("x^3 + b*x^2 + c*x + d")).poly
    e = parse_expression
    expected = [
        e("d^2"),
        e("3*d^2 - b*c*d"),
        e("c^3 + b^3*d - 5*b*c*d + 6*d^2"),
        e("-b^2*c^2 + 2*c^3 + 2*b^3*d - 6*b*c*d + 7*d^2"),
        e("c^3 + b^3*d - 5*b*c*d + 6*d^2"),
        e("3*d^2 - b*c*d"),
        e("d^2"),
    ]
    assert rp == UniPoly(expected, "r")


def test_numeric_examples():
    assert format_poly(root_ratio_poly(parse_poly("x^2 + 3*x + 2")).poly) == "2*r^2 - 5*r + 2"
    assert format_poly(root_ratio_poly(parse_poly("x^2 - 2*x + 1")).poly) == "r^2 - 2*r + 1"


def test_common_quadratic_golden():
    got = common_root_ratio_poly(sym("x^2 + a*x + b"), sym("x^2 + c*x + d"))
    assert got == (b * c * c - d * a * a) ** 2


def test_common_cubic_golden():
    got = common_root_ratio_poly(sym("x^3 + x^2 + x + 1"), sym("x^3 + x^2 + c*x + d"))
    assert got == (c - d) ** 4 * parse_expression("-c^2 + 2*c^3 + 2*d - 4*c*d + d^2") ** 4


def test_common_identical_is_zero():
    p = parse_poly("x^2 + 3*x + 2")
    assert common_root_ratio_poly(p, p) == 0


def test_has_common_examples():
    p = parse_poly("x^2 - 3*x + 2")
    assert common_root_ratio_poly(p, parse_poly("x^2 - 4*x + 3")) == 25
    assert not has_common_root_ratio(p, parse_poly("x^2 - 4*x + 3"))
    assert has_common_root_ratio(p, parse_poly("x^2 - 9*x + 18"))
    assert has_common_root_ratio(p, p)


def test_repeated_root_gives_ratio_one():
    # a double root makes 1 a root ratio; two such polynomials "share" it
    p, q = parse_poly("x^2 - 2*x + 1"), parse_poly("x^2 - 4*x + 4")
    assert root_ratio_poly(p).poly(1) == 0
    assert has_common_root_ratio(p, q)


def test_errors():
    with pytest.raises(ZeroConstantTerm):
        root_ratio_poly(parse_poly("x^2 + x"))
    with pytest.raises(ZeroConstantTerm):
        has_common_root_ratio(parse_poly("x^2 + x"), parse_poly("x^2 + 1"))
    with pytest.raises(DegreeTooSmall):
        root_ratio_poly(parse_poly("x + 1"))
    with pytest.raises(DegreeTooSmall):
        common_root_ratio_poly(parse_poly("x + 1"), parse_poly("x^2 + 1"))
    with pytest.raises(NotMonic):
        root_ratio_poly(sym("a*x^2 + 1"))
    with pytest.raises(VariableCollision):
        root_ratio_poly(sym("x^2 + r"))


def test_non_monic_numeric_is_normalized():
    assert root_ratio_poly(parse_poly("2*x^2 + 6*x + 4")).poly == root_ratio_poly(parse_poly("x^2 + 3*x + 2")).poly


def test_degree_and_leading_coefficient(rng):
    for _ in range(40):
        p = random_monic(rng, int(rng.integers(2, 6)))
        rp = root_ratio_poly(p).poly
        n = p.degree
        assert rp.degree == n * (n - 1)
        assert rp.lc() == p.coeffs[0] ** (n - 1)


def test_zeros_are_root_ratios(rng):
    worst = 0.0
    for _ in range(200):
        p = random_monic(rng, int(rng.integers(2, 6)))
        roots = np.roots([float(x) for x in as_fraction_coeffs(p)][::-1])
        zeros = numeric_zeros(root_ratio_poly(p).poly)
        worst = max(worst, multiset_distance(zeros, pairwise_ratios(roots)))
        # zero set closed under r -> 1/r
        assert multiset_distance(zeros, 1 / zeros) < 1e-9 * max(1.0, np.abs(zeros).max() ** 2)
    assert worst < 1e-7


def _brute_force(p, q):
    """(shared, min_gap) from numeric roots of both polynomials."""
    rp = pairwise_ratios(np.roots([float(x) for x in as_fraction_coeffs(p)][::-1]))
    rq = pairwise_ratios(np.roots([float(x) for x in as_fraction_coeffs(q)][::-1]))
    gap = min(abs(x - y) / max(1.0, abs(x)) for x, y in itertools.product(rp, rq))
    return gap < 1e-8, gap


def test_has_common_matches_brute_force(rng):
    checked = 0
    for i in range(200):
        p = random_monic(rng, int(rng.integers(2, 4)), num=6, den=1)
        if i % 2:
            q = random_monic(rng, p.degree, num=6, den=1)
        else:
            # roots scaled by k: same ratio set
            k = Fraction(int(rng.integers(1, 4)) * (1 if rng.random() < 0.5 else -1), int(rng.integers(1, 3)))
            q = UniPoly([cf * k ** (p.degree - j) for j, cf in enumerate(p.coeffs)])
        want, gap = _brute_force(p, q)
        if not want and gap < 1e-6:
            continue  # near-degenerate zone, oracle unreliable
        assert has_common_root_ratio(p, q) == want
        checked += 1
    assert checked >= 190
