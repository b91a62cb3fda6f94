"""Matrix representations of finitely presented groups, and the Vinberg triangle family."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

import numpy as np

from ..errors import InvalidOrders, RelatorFailure, SingularMatrix
from .words import invert

RELATOR_TOL = 1e-9


@dataclass(frozen=True)
class Representation:
    """Generator matrices labelled by lowercase letters.

    Words use uppercase letters for inverses.  Every relator must evaluate
    to +I or -I within ``RELATOR_TOL`` in operator norm; this is checked on
    construction.
    """

    generators: Mapping[str, np.ndarray]
    relators: tuple[str, ...] = ()
    torsion_lcm: int | None = None
    inverses: Mapping[str, np.ndarray] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        gens = {}
        for label, mat in self.generators.items():
            if len(label) != 1 or not label.islower():
                raise ValueError(f"generator label must be one lowercase letter, got {label!r}")
            gens[label] = np.array(mat, dtype=float)
        dims = {g.shape for g in gens.values()}
        if len(dims) != 1 or any(len(s) != 2 or s[0] != s[1] for s in dims):
            raise ValueError("generators must be square matrices of one common size")
        invs = {}
        for label, g in gens.items():
            if abs(np.linalg.det(g)) < 1e-300:
                raise SingularMatrix(f"generator {label!r} is singular")
            invs[label] = np.linalg.inv(g)
        object.__setattr__(self, "generators", dict(sorted(gens.items())))
        object.__setattr__(self, "inverses", invs)
        object.__setattr__(self, "relators", tuple(self.relators))
        for rel in self.relators:
            unknown = set(rel.lower()) - set(gens)
            if unknown:
                raise ValueError(f"relator {rel!r} uses unknown generators {sorted(unknown)}")
        bad = {w: r for w, r in self.relator_residuals().items() if r > RELATOR_TOL}
        if bad:
            raise RelatorFailure(f"relators not satisfied: {bad}")

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.generators)

    @property
    def dim(self) -> int:
        return next(iter(self.generators.values())).shape[0]

    def letter(self, ch: str) -> np.ndarray:
        return self.inverses[ch.lower()] if ch.isupper() else self.generators[ch]

    def evaluate(self, word: str) -> np.ndarray:
        m = np.eye(self.dim)
        for ch in word:
            m = m @ self.letter(ch)
        return m

    def relator_residuals(self) -> dict[str, float]:
        """Operator-norm distance of each relator from the nearer of +I, -I."""
        eye = np.eye(self.dim)
        out = {}
        for rel in self.relators:
            m = self.evaluate(rel)
            out[rel] = float(min(np.linalg.norm(m - eye, 2), np.linalg.norm(m + eye, 2)))
        return out

    def map_generators(self, fn) -> "Representation":
        return Representation({k: fn(v) for k, v in self.generators.items()}, self.relators, self.torsion_lcm)

    def conjugated(self, t: np.ndarray) -> "Representation":
        t = np.asarray(t, dtype=float)
        tinv = np.linalg.inv(t)
        return self.map_generators(lambda g: t @ g @ tinv)

    def inverse_word(self, word: str) -> np.ndarray:
        return self.evaluate(invert(word))


@dataclass(frozen=True)
class TriangleGroupParams:
    """Orders (p, q, r) of the triangle group and the Vinberg modulus s > 0."""

    p: int
    q: int
    r: int
    s: float = 1.0

    def __post_init__(self):
        orders = (self.p, self.q, self.r)
        if any(int(m) != m or m < 2 for m in orders):
            raise InvalidOrders(f"orders must be integers >= 2, got {orders}")
        if sum(Fraction(1, int(m)) for m in orders) >= 1:
            raise InvalidOrders(f"1/p + 1/q + 1/r >= 1 for {orders}; need a hyperbolic triangle group")
        if not self.s > 0:
            raise InvalidOrders(f"deformation parameter must be positive, got {self.s}")


def _two_cos(m: int) -> float:
    # exact values where they exist in floating point
    return {2: 0.0, 3: 1.0}.get(m, 2.0 * math.cos(math.pi / m))


def cartan_matrix(params: TriangleGroupParams) -> np.ndarray:
    """Vinberg Cartan matrix with the modulus s on the (1,2)/(2,1) pair."""
    c12, c23, c13 = _two_cos(params.p), _two_cos(params.q), _two_cos(params.r)
    s = float(params.s)
    return np.array(
        [
            [2.0, -c12 * s, -c13],
            [-c12 / s, 2.0, -c23],
            [-c13, -c23, 2.0],
        ]
    )


def triangle_reflection_rep(params: TriangleGroupParams) -> Representation:
    """Reflections sigma_k = I - b_k alpha_k, alpha_j = j-th coordinate, b_k = column k of the Cartan matrix.

    Labels a, b, c stand for sigma_1, sigma_2, sigma_3.
    """
    cm = cartan_matrix(params)
    gens = {}
    for k, label in enumerate("abc"):
        sigma = np.eye(3)
        sigma[:, k] -= cm[:, k]
        gens[label] = sigma
    relators = ("aa", "bb", "cc", "ab" * params.p, "bc" * params.q, "ac" * params.r)
    return Representation(gens, relators, math.lcm(2, params.p, params.q, params.r))


def rotation_subgroup_rep(ref_rep: Representation) -> Representation:
    """Orientation-preserving index-2 subgroup: a = sigma_1 sigma_2, b = sigma_2 sigma_3."""
    s1, s2, s3 = (ref_rep.generators[k] for k in "abc")
    orders = _orders_from_relators(ref_rep.relators)
    p, q, r = orders["ab"], orders["bc"], orders["ac"]
    return Representation(
        {"a": s1 @ s2, "b": s2 @ s3},
        ("a" * p, "b" * q, "ab" * r),
        math.lcm(p, q, r),
    )


def _orders_from_relators(relators) -> dict[str, int]:
    out = {}
    for rel in relators:
        for pair in ("ab", "bc", "ac"):
            if len(rel) > 2 and rel == pair * (len(rel) // 2):
                out[pair] = len(rel) // 2
    missing = {"ab", "bc", "ac"} - set(out)
    if missing:
        raise ValueError(f"not a triangle reflection presentation; missing {sorted(missing)}")
    return out


def triangle_rep(params: TriangleGroupParams, rotation: bool = True) -> Representation:
    rep = triangle_reflection_rep(params)
    return rotation_subgroup_rep(rep) if rotation else rep


def dual_rep(rep: Representation) -> Representation:
    """Apply d(A) = (A^t)^{-1} to every generator; relators are re-verified."""
    return rep.map_generators(lambda g: np.linalg.inv(g).T)
