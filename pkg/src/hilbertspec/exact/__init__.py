"""Exact arithmetic: rationals, polynomials, resultants."""

from .mpoly import MPoly
from .ring import Rational, free_vars, is_scalar, ring_div, to_rational
from .resultant import bareiss_det, sylvester_matrix, sylvester_resultant
from .textformat import format_polynomial, mpoly_to_unipoly, parse_expression, parse_poly
from .unipoly import UniPoly, format_poly


def exact_divide(f: UniPoly, g: UniPoly) -> UniPoly:
    """Exact quotient f / g; raises InexactDivision on a nonzero remainder."""
    return f.exact_div(g)


__all__ = [
    "MPoly",
    "Rational",
    "UniPoly",
    "bareiss_det",
    "exact_divide",
    "format_poly",
    "format_polynomial",
    "free_vars",
    "is_scalar",
    "mpoly_to_unipoly",
    "parse_expression",
    "parse_poly",
    "ring_div",
    "sylvester_matrix",
    "sylvester_resultant",
    "to_rational",
]
