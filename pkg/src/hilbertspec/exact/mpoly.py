"""Sparse multivariate polynomials with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from ..errors import InexactDivision
from .ring import format_scalar, is_scalar, norm_scalar

Exponents = tuple[int, ...]


class MPoly:
    """Immutable sparse polynomial in named variables.

    ``terms`` maps an exponent vector (aligned with ``vars``, which is kept
    sorted) to a nonzero coefficient.  Variables that do not occur in any
    term are dropped, so two equal polynomials always have equal fields.
    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, terms: Mapping[Exponents, object] | None = None, vars: tuple[str, ...] = ()):
        vars = tuple(vars)
        if list(vars) != sorted(set(vars)):
            order = sorted(range(len(vars)), key=lambda i: vars[i])
            if len(set(vars)) != len(vars):
                raise ValueError(f"duplicate variable names: {vars}")
            terms = {tuple(e[i] for i in order): c for e, c in (terms or {}).items()}
            vars = tuple(vars[i] for i in order)
        clean: dict[Exponents, object] = {}
        for e, c in (terms or {}).items():
            if len(e) != len(vars):
                raise ValueError("exponent vector does not match variables")
            if c != 0:
                clean[tuple(e)] = norm_scalar(c)
        # drop unused variables
        used = [i for i in range(len(vars)) if any(e[i] for e in clean)]
        if len(used) != len(vars):
            vars = tuple(vars[i] for i in used)
            clean = {tuple(e[i] for i in used): c for e, c in clean.items()}
        self.vars = vars
        self.terms = clean
        self._hash = None

    @classmethod
    def var(cls, name: str) -> "MPoly":
        return cls({(1,): 1}, (name,))

    @classmethod
    def const(cls, c) -> "MPoly":
        return cls({(): c}, ())

    # -- inspection -------------------------------------------------------

    def free_vars(self) -> frozenset[str]:
        return frozenset(self.vars)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.vars

    def constant_value(self):
        if self.vars:
            raise ValueError(f"{self} is not constant")
        return self.terms.get((), 0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        if name not in self.vars:
            return 0 if self.terms else -1
        i = self.vars.index(name)
        return max(e[i] for e in self.terms)

    def leading_term(self) -> tuple[Exponents, object]:
        e = max(self.terms)
        return e, self.terms[e]

    # -- alignment --------------------------------------------------------

    def _expand(self, vars: tuple[str, ...]) -> dict[Exponents, object]:
        if vars == self.vars:
            return self.terms
        idx = [vars.index(v) for v in self.vars]
        out = {}
        n = len(vars)
        for e, c in self.terms.items():
            full = [0] * n
            for k, i in enumerate(idx):
                full[i] = e[k]
            out[tuple(full)] = c
        return out

    @staticmethod
    def _coerce(other):
        if isinstance(other, MPoly):
            return other
        if is_scalar(other):
            return MPoly.const(other)
        return None

    def _common(self, other: "MPoly"):
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        vars = tuple(sorted(set(self.vars) | set(other.vars)))
        return vars, self._expand(vars), other._expand(vars)

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        vars, a, b = self._common(o)
        out = dict(a)
        for e, c in b.items():
            out[e] = out.get(e, 0) + c
        return MPoly(out, vars)

    __radd__ = __add__

    def __neg__(self):
        return MPoly({e: -c for e, c in self.terms.items()}, self.vars)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if is_scalar(other):
            return MPoly({e: c * other for e, c in self.terms.items()}, self.vars)
        if not isinstance(other, MPoly):
            return NotImplemented
        vars, a, b = self._common(other)
        out: dict[Exponents, object] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        return MPoly(out, vars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def div_scalar(self, c) -> "MPoly":
        c = Fraction(c)
        return MPoly({e: v / c for e, v in self.terms.items()}, self.vars)

    def exact_div(self, other) -> "MPoly":
        """Quotient by ``other``; raises InexactDivision on a nonzero remainder.

        Lexicographic division: the leading term of the remainder must be
        divisible by the leading term of ``other`` at every step.
        """
        if is_scalar(other):
            return self.div_scalar(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if other.is_constant():
            return self.div_scalar(other.constant_value())
        vars, rem, div = self._common(other)
        rem = dict(rem)
        glm = max(div)
        glc = Fraction(div[glm])
        quot: dict[Exponents, object] = {}
        while rem:
            m = max(rem)
            shift = tuple(x - y for x, y in zip(m, glm))
            if min(shift) < 0:
                raise InexactDivision(f"{self} is not divisible by {other}")
            c = norm_scalar(rem[m] / glc)
            quot[shift] = c
            for e, d in div.items():
                t = tuple(x + y for x, y in zip(e, shift))
                v = rem.get(t, 0) - c * d
                if v == 0:
                    rem.pop(t, None)
                else:
                    rem[t] = v
        return MPoly(quot, vars)

    # -- evaluation -------------------------------------------------------

    def subs(self, values: Mapping[str, object]):
        """Substitute values (scalars or MPolys) for some variables."""
        result = MPoly.const(0)
        keep = [v for v in self.vars if v not in values]
        for e, c in self.terms.items():
            term = MPoly({tuple(e[self.vars.index(v)] for v in keep): c}, tuple(keep))
            for name, k in zip(self.vars, e):
                if k and name in values:
                    term = term * (MPoly._coerce(values[name]) ** k)
            result = result + term
        return result.demote()

    def evaluate(self, point: Mapping[str, object]):
        missing = set(self.vars) - set(point)
        if missing:
            raise ValueError(f"no value for {sorted(missing)}")
        total = 0
        for e, c in self.terms.items():
            t = c
            for name, k in zip(self.vars, e):
                if k:
                    t = t * point[name] ** k
            total = total + t
        return norm_scalar(total) if is_scalar(total) else total

    def demote(self):
        """Return the scalar value if constant, else self."""
        return self.constant_value() if self.is_constant() else self

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if is_scalar(other):
            if other == 0:
                return not self.terms
            return self.is_constant() and self.terms.get((), 0) == other
        if isinstance(other, MPoly):
            return self.vars == other.vars and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.terms.get((), 0))
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    # -- display ----------------------------------------------------------

    def _monomial_str(self, e: Exponents) -> str:
        parts = []
        for name, k in zip(self.vars, e):
            if k == 1:
                parts.append(name)
            elif k > 1:
                parts.append(f"{name}^{k}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        order = sorted(self.terms, key=lambda e: (sum(e), e), reverse=True)
        out = []
        for i, e in enumerate(order):
            c = self.terms[e]
            mono = self._monomial_str(e)
            neg = c < 0
            mag = -c if neg else c
            if mono:
                body = mono if mag == 1 else f"{format_scalar(mag)}*{mono}"
            else:
                body = format_scalar(mag)
            if i == 0:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f" - {body}" if neg else f" + {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"MPoly({self})"
