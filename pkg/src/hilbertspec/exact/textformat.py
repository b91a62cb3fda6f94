"""Polynomial text format: ``x^2 + 3*x + 2``.

Integer literals, ``p/q`` via division by constants, ``^`` powers, explicit
``*``, parentheses.  Floating literals are rejected.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import ParseError
from .mpoly import MPoly
from .ring import is_scalar, norm_scalar
from .unipoly import UniPoly, format_poly

_TOKEN = re.compile(r"\s*(?:(\d+\.\d*|\.\d+|\d+[eE][-+]?\d+)|(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].strip()[:1]!r} at {pos}")
        flt, num, ident, op = m.groups()
        if flt is not None:
            raise ParseError(f"floating literal {flt!r} not allowed; use p/q")
        if num is not None:
            out.append(("num", num))
        elif ident is not None:
            out.append(("ident", ident))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}, got {val!r}")

    def expr(self):
        node = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            rhs = self.term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def term(self):
        node = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            _, op = self.take()
            rhs = self.unary()
            if op == "*":
                node = node * rhs
            else:
                value = rhs.demote() if isinstance(rhs, MPoly) else rhs
                if not is_scalar(value):
                    raise ParseError("division only by constants")
                if value == 0:
                    raise ParseError("division by zero")
                node = node * Fraction(1) / value if is_scalar(node) else node.div_scalar(value)
        return node

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise ParseError("exponent must be a nonnegative integer literal")
            base = base ** int(val)
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return int(val)
        if kind == "ident":
            return MPoly.var(val)
        if (kind, val) == ("op", "("):
            node = self.expr()
            self.expect(")")
            return node
        raise ParseError(f"unexpected token {val!r}")


def parse_expression(text: str) -> MPoly:
    """Parse into a multivariate polynomial over the rationals."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial")
    parser = _Parser(tokens)
    node = parser.expr()
    if parser.i != len(tokens):
        raise ParseError(f"trailing input at token {parser.peek()[1]!r}")
    if is_scalar(node):
        node = MPoly.const(norm_scalar(node))
    return node


def parse_poly(text: str, var: str = "x", symbolic: bool = False) -> UniPoly:
    """Parse ``text`` as a polynomial in ``var``.

    With ``symbolic`` every other identifier becomes a coefficient variable;
    otherwise other identifiers are an error.
    """
    mp = parse_expression(text)
    others = set(mp.vars) - {var}
    if others and not symbolic:
        raise ParseError(f"unknown identifiers {sorted(others)}; pass symbolic=True for named coefficients")
    return mpoly_to_unipoly(mp, var)


def mpoly_to_unipoly(mp: MPoly, var: str) -> UniPoly:
    if var not in mp.vars:
        coeffs = [mp.demote()]
    else:
        i = mp.vars.index(var)
        rest = mp.vars[:i] + mp.vars[i + 1:]
        buckets: dict[int, dict] = {}
        for e, c in mp.terms.items():
            buckets.setdefault(e[i], {})[e[:i] + e[i + 1:]] = c
        coeffs = [MPoly(buckets.get(k, {}), rest).demote() for k in range(max(buckets) + 1)]
    if any(isinstance(c, MPoly) for c in coeffs):
        coeffs = [c if isinstance(c, MPoly) else MPoly.const(c) for c in coeffs]
    return UniPoly(coeffs, var)


def format_polynomial(p: UniPoly) -> str:
    return format_poly(p)
