"""Root-ratio polynomials and the exact shared-root-ratio test.

For monic ``p`` of degree n with roots a_1..a_n, the root-ratio polynomial is
``R_p(r) = prod_{i != j} (a_i r - a_j)``.  It is never computed from roots:
we use the identity

    Res(p(r x), p(x); x) = p(0) * (r - 1)**n * R_p(r)

and divide exactly.  Its zeros (when p(0) != 0) are exactly the ratios
a_i / a_j with i != j.

Repeated roots: a double root gives the ratio 1, so R_p(1) = 0 and
:func:`has_common_root_ratio` treats 1 as a legitimate common ratio of two
polynomials that both have a repeated root.  This follows the algebraic
definition (i != j as indices, not as values), which differs from asking for
two *distinct* eigenvalues with equal quotient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegreeTooSmall, NotMonic, VariableCollision, ZeroConstantTerm
from .exact.mpoly import MPoly
from .exact.resultant import sylvester_resultant
from .exact.ring import is_scalar, norm_scalar
from .exact.unipoly import UniPoly

RATIO_VAR = "r"


@dataclass(frozen=True)
class RootRatioResult:
    poly: UniPoly
    source_degree: int


def _scalar_value(c):
    if is_scalar(c):
        return c
    if isinstance(c, MPoly) and c.is_constant():
        return c.constant_value()
    return None


def _prepare(p: UniPoly) -> UniPoly:
    if p.degree < 2:
        raise DegreeTooSmall(f"degree {p.degree} < 2")
    lead = _scalar_value(p.lc())
    if lead is None:
        raise NotMonic(f"symbolic leading coefficient {p.lc()}")
    if lead != 1:
        p = p.div_scalar(lead)
    if p.coeffs[0] == 0:
        raise ZeroConstantTerm(f"p(0) = 0 for {p}")
    return p


def _lift(c, var: str):
    """Embed a coefficient of p into the ring R[var]."""
    return UniPoly._make([c], var)


def root_ratio_poly(p: UniPoly, var: str = RATIO_VAR) -> RootRatioResult:
    """R_p(r) for monic p of degree >= 2 with p(0) != 0.

    Numeric non-monic input is normalized by its leading coefficient;
    symbolic non-monic input raises NotMonic.
    """
    p = _prepare(p)
    if var == p.var or var in p.coefficient_vars():
        raise VariableCollision(f"ratio variable {var!r} already used by {p}")
    n = p.degree
    # Integer coefficients keep Bareiss in Z[r]; Res(D*A, D*B) = D**(2n) Res(A, B).
    denom = 1
    if all(is_scalar(c) for c in p.coeffs):
        denom = math.lcm(*(Fraction(c).denominator for c in p.coeffs))
    work = p if denom == 1 else p.map_coeffs(lambda c: norm_scalar(c * denom))
    r = UniPoly._make([0, 1], var)
    base = work.map_coeffs(lambda c: _lift(c, var))
    scaled = base.scale_var(r)
    res = sylvester_resultant(scaled, base)
    divisor = UniPoly._make([-1, 1], var) ** n * (p.coeffs[0] * denom ** (2 * n))
    poly = res.exact_div(divisor)
    poly = poly.map_coeffs(lambda c: c.demote() if isinstance(c, MPoly) else c)
    return RootRatioResult(poly=poly, source_degree=n)


def common_root_ratio_poly(p: UniPoly, q: UniPoly, var: str = RATIO_VAR):
    """C_{p,q} = Res(R_p(r), R_q(r); r); vanishes when p and q share a root ratio."""
    rp = root_ratio_poly(p, var).poly
    rq = root_ratio_poly(q, var).poly
    c = sylvester_resultant(rp, rq, var)
    return c.demote() if isinstance(c, MPoly) else c


def has_common_root_ratio(p: UniPoly, q: UniPoly) -> bool:
    """Exact decision: do numeric monic p and q share a root ratio?

    Requires p(0) != 0 and q(0) != 0; otherwise ZeroConstantTerm is raised
    (a vanishing C_{p,q} would not imply a shared ratio there).
    """
    for f in (p, q):
        if f.coefficient_vars():
            raise TypeError(f"numeric polynomial expected, got {f}")
    return common_root_ratio_poly(p, q) == 0


__all__ = [
    "RATIO_VAR",
    "RootRatioResult",
    "common_root_ratio_poly",
    "has_common_root_ratio",
    "root_ratio_poly",
]
