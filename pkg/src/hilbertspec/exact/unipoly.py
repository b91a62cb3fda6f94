"""Dense univariate polynomials over an exact coefficient ring."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from ..errors import InexactDivision, VariableCollision, ZeroPolynomial
from .mpoly import MPoly
from .ring import format_scalar, free_vars, is_scalar, norm_scalar, ring_div


def _trim(coeffs: Sequence) -> tuple:
    out = [c.numerator if type(c) is Fraction and c.denominator == 1 else c for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class UniPoly:
    """Polynomial ``sum(coeffs[i] * var**i)``.

    Coefficients are stored ascending by degree and may be ints, Fractions,
    MPolys, or UniPolys in a different variable.  The zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "x"):
        self.coeffs = _trim(coeffs)
        self.var = var
        for c in self.coeffs:
            if var in free_vars(c):
                raise VariableCollision(f"variable {var!r} also appears in coefficient {c}")

    @classmethod
    def _make(cls, coeffs, var: str) -> "UniPoly":
        # Trusted constructor: skips the collision scan.
        obj = object.__new__(cls)
        obj.coeffs = _trim(coeffs)
        obj.var = var
        return obj

    @classmethod
    def from_descending(cls, coeffs: Sequence, var: str = "x") -> "UniPoly":
        return cls(list(coeffs)[::-1], var)

    @classmethod
    def monomial(cls, c, k: int, var: str = "x") -> "UniPoly":
        return cls([0] * k + [c], var)

    @classmethod
    def from_roots(cls, roots: Iterable, var: str = "x") -> "UniPoly":
        p = cls([1], var)
        for r in roots:
            p = p * cls([-r, 1], var)
        return p

    # -- inspection -------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def lc(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self):
        if len(self.coeffs) > 1:
            raise ValueError(f"{self} is not constant")
        return self.coeffs[0] if self.coeffs else 0

    def free_vars(self) -> frozenset[str]:
        out = {self.var} if self.degree > 0 else set()
        for c in self.coeffs:
            out |= free_vars(c)
        return frozenset(out)

    def coefficient_vars(self) -> frozenset[str]:
        out: set[str] = set()
        for c in self.coeffs:
            out |= free_vars(c)
        return frozenset(out)

    def is_numeric(self) -> bool:
        return all(is_scalar(c) or (isinstance(c, MPoly) and c.is_constant()) for c in self.coeffs)

    def descending(self) -> list:
        return list(self.coeffs[::-1])

    # -- ring operations --------------------------------------------------

    def _same(self, other) -> bool:
        return isinstance(other, UniPoly) and other.var == self.var

    def __add__(self, other):
        if self._same(other):
            a, b = self.coeffs, other.coeffs
            if len(a) < len(b):
                a, b = b, a
            return UniPoly._make([x + y for x, y in zip(a, b)] + list(a[len(b):]), self.var)
        if not self.coeffs:
            return UniPoly._make([other], self.var)
        return UniPoly._make([self.coeffs[0] + other, *self.coeffs[1:]], self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._make([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if self._same(other):
            if not self.coeffs or not other.coeffs:
                return UniPoly._make((), self.var)
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return UniPoly._make(out, self.var)
        return UniPoly._make([c * other for c in self.coeffs], self.var)

    def __rmul__(self, other):
        return UniPoly._make([other * c for c in self.coeffs], self.var)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = UniPoly._make([1], self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def map_coeffs(self, fn: Callable) -> "UniPoly":
        return UniPoly._make([fn(c) for c in self.coeffs], self.var)

    def div_scalar(self, c) -> "UniPoly":
        return self.map_coeffs(lambda a: ring_div(a, c))

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        """Long division; each step divides by ``other.lc()`` exactly in the coefficient ring."""
        if not self._same(other):
            raise TypeError("divmod needs polynomials in the same variable")
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        dg = other.degree
        lc = other.lc()
        quot = [0] * max(len(rem) - dg, 0)
        for k in range(len(rem) - 1 - dg, -1, -1):
            top = rem[k + dg]
            if top == 0:
                continue
            c = ring_div(top, lc)
            quot[k] = c
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - c * b
        return UniPoly._make(quot, self.var), UniPoly._make(rem[:dg], self.var)

    def exact_div(self, other) -> "UniPoly":
        """Quotient with zero remainder, else InexactDivision."""
        if not self._same(other):
            return self.map_coeffs(lambda c: ring_div(c, other))
        q, r = self.divmod(other)
        if not r.is_zero():
            raise InexactDivision(f"({self}) / ({other}) leaves remainder {r}")
        return q

    # -- calculus and composition -----------------------------------------

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    evaluate = __call__

    def derivative(self) -> "UniPoly":
        return UniPoly._make([i * c for i, c in enumerate(self.coeffs)][1:], self.var)

    def scale_var(self, r) -> "UniPoly":
        """Return p(r*x); ``r`` may be a scalar or a polynomial in another variable."""
        if free_vars(r) & {self.var}:
            raise VariableCollision(f"scale factor uses the polynomial variable {self.var!r}")
        out = []
        power = 1
        for c in self.coeffs:
            out.append(c * power)
            power = power * r
        return UniPoly._make(out, self.var)

    def monic(self) -> "UniPoly":
        return self.div_scalar(self.lc())

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic gcd; needs a field of coefficients (rationals)."""
        a, b = self, other
        while not b.is_zero():
            _, r = a.divmod(b)
            a, b = b, r
        return a.monic() if not a.is_zero() else a

    def squarefree_decomposition(self) -> list[tuple["UniPoly", int]]:
        """Yun's algorithm over the rationals: list of (monic factor, multiplicity)."""
        if self.degree < 1:
            return []
        f = self.monic()
        if _squarefree_mod_prime(f):
            return [(f, 1)]
        fp = f.derivative()
        a = f.gcd(fp)
        b = f.exact_div(a)
        c = fp.exact_div(a)
        d = c - b.derivative()
        out = []
        i = 1
        while b.degree > 0:
            a = b.gcd(d)
            if a.degree > 0:
                out.append((a, i))
            b = b.exact_div(a)
            c = d.exact_div(a)
            d = c - b.derivative()
            i += 1
        return out

    def with_var(self, var: str) -> "UniPoly":
        return UniPoly(self.coeffs, var)

    # -- comparison and display -------------------------------------------

    def __eq__(self, other):
        if self._same(other):
            return self.coeffs == other.coeffs
        if isinstance(other, UniPoly):
            return self.is_constant() and other.is_constant() and self.constant_value() == other.constant_value()
        if self.is_constant():
            return self.constant_value() == other
        return False

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        return hash((self.var, self.coeffs))

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"UniPoly({self})"


def _coeff_str(c) -> tuple[bool, str, bool]:
    """(is_negative, magnitude text, is_compound) for a coefficient."""
    if is_scalar(c):
        c = norm_scalar(c)
        return c < 0, format_scalar(-c if c < 0 else c), False
    if isinstance(c, MPoly) and c.is_constant():
        return _coeff_str(c.constant_value())
    if isinstance(c, UniPoly) and c.is_constant():
        return _coeff_str(c.constant_value())
    text = str(c)
    if isinstance(c, MPoly) and len(c.terms) == 1:
        (_, v), = c.terms.items()
        if v < 0:
            return True, str(-c), False
        return False, text, False
    return False, text, True


def format_poly(p: UniPoly) -> str:
    """Descending text form, e.g. ``2*r^2 - 5*r + 2``."""
    if p.is_zero():
        return "0"
    pieces = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        neg, mag, compound = _coeff_str(c)
        mono = "" if k == 0 else (p.var if k == 1 else f"{p.var}^{k}")
        if compound:
            mag = f"({mag})"
        if not mono:
            body = mag
        elif mag == "1":
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not pieces:
            pieces.append(f"-{body}" if neg else body)
        else:
            pieces.append(f" - {body}" if neg else f" + {body}")
    return "".join(pieces)


_PRIME = (1 << 61) - 1


def _squarefree_mod_prime(f: UniPoly) -> bool:
    """Cheap sufficient test: gcd(f, f') = 1 modulo a large prime.

    For monic f with rational coefficients and a prime not dividing any
    denominator, a trivial gcd mod p implies a trivial gcd over Q.  False
    means "unknown", not "not squarefree".
    """
    try:
        coeffs = [Fraction(c) for c in f.coeffs]
    except TypeError:
        return False
    if any(c.denominator % _PRIME == 0 for c in coeffs):
        return False
    a = [c.numerator * pow(c.denominator, -1, _PRIME) % _PRIME for c in coeffs]
    b = [(k * c) % _PRIME for k, c in enumerate(a)][1:]

    def trim(v):
        while v and v[-1] == 0:
            v.pop()
        return v

    a, b = trim(a), trim(b)
    if len(b) != len(a) - 1:
        return False  # derivative degree drops mod p
    while b:
        inv = pow(b[-1], -1, _PRIME)
        while len(a) >= len(b):
            k = a[-1] * inv % _PRIME
            shift = len(a) - len(b)
            for i, bc in enumerate(b):
                a[shift + i] = (a[shift + i] - k * bc) % _PRIME
            trim(a)
            if not a:
                break
        a, b = b, a
    return len(a) == 1


def as_fraction_coeffs(p: UniPoly) -> list[Fraction]:
    """Ascending rational coefficients of a numeric polynomial."""
    out = []
    for c in p.coeffs:
        if isinstance(c, (MPoly, UniPoly)):
            c = c.constant_value()
        out.append(Fraction(c))
    return out
