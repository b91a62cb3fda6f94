"""Helpers shared by the coefficient types.

A coefficient is one of: ``int``, ``Fraction``, :class:`MPoly`, or a
:class:`UniPoly` in some other variable.  Python ints and Fractions are the
scalars; everything exact in this package is built on top of them.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC

from ..errors import InexactDivision, ParseError

Rational = Fraction


def is_scalar(a) -> bool:
    return isinstance(a, (int, Fraction)) and not isinstance(a, bool)


def norm_scalar(c):
    """Demote a Fraction with unit denominator to int."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def to_rational(value) -> Fraction | int:
    """Convert ints, Fractions, and exact decimal or ``p/q`` strings.

    Floats are rejected: every exact path in the package must start from an
    exact value.
    """
    if isinstance(value, bool):
        raise ParseError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return norm_scalar(value)
    if isinstance(value, _RationalABC):
        return norm_scalar(Fraction(value.numerator, value.denominator))
    if isinstance(value, str):
        try:
            return norm_scalar(Fraction(value.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational: {value!r}") from exc
    raise ParseError(f"not an exact rational: {value!r}")


def is_zero(a) -> bool:
    return a == 0


def free_vars(a) -> frozenset[str]:
    if is_scalar(a):
        return frozenset()
    return a.free_vars()


def ring_div(a, b):
    """Exact quotient ``a / b``; raises InexactDivision if it does not exist."""
    if is_zero(b):
        raise ZeroDivisionError("exact division by zero")
    if is_zero(a):
        return 0
    if is_scalar(b):
        if is_scalar(a):
            if type(a) is int and type(b) is int and a % b == 0:
                return a // b
            return norm_scalar(Fraction(a) / b)
        return a.div_scalar(b)
    if is_scalar(a):
        if b.is_constant():
            return ring_div(a, b.constant_value())
        raise InexactDivision(f"{a} is not divisible by {b}")
    return _nested_div(a, b)


def _nested_div(a, b):
    from .mpoly import MPoly
    from .unipoly import UniPoly

    if isinstance(a, UniPoly) and isinstance(b, UniPoly) and a.var == b.var:
        return a.exact_div(b)
    if isinstance(a, MPoly) and isinstance(b, MPoly):
        return a.exact_div(b)
    if isinstance(a, UniPoly) and not (isinstance(b, UniPoly) and b.var == a.var):
        # b lives in the coefficient ring of a
        return a.map_coeffs(lambda c: ring_div(c, b))
    if isinstance(b, UniPoly) and b.is_constant():
        return ring_div(a, b.constant_value())
    if isinstance(b, MPoly) and b.is_constant():
        return ring_div(a, b.constant_value())
    raise InexactDivision(f"cannot divide {a!r} by {b!r}")


def format_scalar(c) -> str:
    c = norm_scalar(c)
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)
