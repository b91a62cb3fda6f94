"""Marked length spectra of representations, up to a word-length depth."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from ..errors import TableMismatch, UnexpectedNonProximal
from ..spectral.matrix import SquareMatrix
from ..spectral.proximal import DEFAULT_TOL, ProximalTag, classify_proximal
from .representation import Representation
from .words import canonical, cyclic_reduce, invert, reduced_words, rotations

DEDUP_TOL = 1e-8
TORSION_TOL = 1e-6
COMPARE_TOL = 1e-8
_BUCKET = 1e-3


class _MatrixIndex:
    """Tolerance lookup for matrices.

    Keys are a fixed linear functional of the entries, bucketed at width
    ``_BUCKET``; a lookup probes neighbouring buckets and confirms with an
    entrywise relative check, so near-boundary values are never split.
    """

    def __init__(self, dim: int, tol: float):
        rng = np.random.default_rng(12345)
        self.weights = rng.uniform(0.5, 1.5, size=(dim, dim))
        self.tol = tol
        self.buckets: dict[int, list[tuple[np.ndarray, int]]] = {}

    def _key(self, m: np.ndarray) -> int:
        return math.floor(float(np.sum(self.weights * m)) / _BUCKET)

    def find(self, m: np.ndarray) -> int | None:
        k = self._key(m)
        scale = max(1.0, float(np.abs(m).max()))
        for kk in (k - 1, k, k + 1):
            for other, ident in self.buckets.get(kk, ()):
                if np.abs(other - m).max() <= self.tol * scale:
                    return ident
        return None

    def add(self, m: np.ndarray, ident: int) -> None:
        self.buckets.setdefault(self._key(m), []).append((m, ident))


def enumerate_conjugacy_words(rep: Representation, max_len: int, tol: float = DEDUP_TOL) -> list[str]:
    """Canonical words for distinct conjugacy-and-inversion classes up to ``max_len``.

    Candidates are cyclically reduced words in canonical form, in shortlex
    order.  A candidate whose matrix matches (to ``tol``) any rotation of an
    earlier class representative, or of its inverse, is dropped; this also
    removes words that are trivial in the group.
    """
    index = _MatrixIndex(rep.dim, tol)
    index.add(np.eye(rep.dim), -1)
    words: list[str] = []
    for w in reduced_words(rep.labels, max_len):
        if cyclic_reduce(w) != w or canonical(w) != w:
            continue
        m = rep.evaluate(w)
        if index.find(m) is not None:
            continue
        ident = len(words)
        words.append(w)
        for v in rotations(w) + rotations(invert(w)):
            index.add(rep.evaluate(v), ident)
    return words


@dataclass(frozen=True)
class SpectrumEntry:
    word: str
    length: float
    trace: float
    trace_inv: float


@dataclass(frozen=True)
class SpectrumTable:
    entries: tuple[SpectrumEntry, ...]
    max_len: int

    def as_dict(self) -> dict[str, SpectrumEntry]:
        return {e.word: e for e in self.entries}

    def lengths(self) -> dict[str, float]:
        return {e.word: e.length for e in self.entries}

    def __len__(self):
        return len(self.entries)


def is_torsion(m: np.ndarray, order: int | None) -> bool:
    """m^order is +-I up to ``TORSION_TOL`` relative to the size of m."""
    if order is None:
        return False
    mk = np.linalg.matrix_power(m, order)
    eye = np.eye(m.shape[0])
    res = min(np.abs(mk - eye).max(), np.abs(mk + eye).max())
    return res <= TORSION_TOL * max(1.0, float(np.abs(m).max()))


def word_length(rep: Representation, word: str, tol: float = DEFAULT_TOL) -> float:
    """Hilbert translation length of the element named by ``word``."""
    m = rep.evaluate(word)
    if not word or is_torsion(m, rep.torsion_lcm):
        return 0.0
    cls = classify_proximal(SquareMatrix(m), tol, inverse=SquareMatrix(rep.inverse_word(word)))
    if cls.tag is ProximalTag.IDENTITY:
        return 0.0
    if not cls.is_proximal:
        raise UnexpectedNonProximal(f"word {word!r} of infinite order is {cls.tag.value}: {cls.reason}")
    return math.log(abs(cls.lambda_plus)) - math.log(abs(cls.lambda_minus))


def marked_spectrum(rep: Representation, max_len: int = 8, tol: float = DEFAULT_TOL) -> SpectrumTable:
    """Lengths and traces for every conjugacy class up to word length ``max_len``.

    The identity, under the empty word "", is the first entry.
    """
    entries = []
    for w in ["", *enumerate_conjugacy_words(rep, max_len)]:
        m = rep.evaluate(w)
        minv = rep.inverse_word(w)
        entries.append(SpectrumEntry(w, word_length(rep, w, tol), float(np.trace(m)), float(np.trace(minv))))
    return SpectrumTable(tuple(entries), max_len)


class Verdict(str, enum.Enum):
    ISOSPECTRAL = "isospectral-to-depth"
    MISMATCH = "mismatch"


@dataclass(frozen=True)
class SpectrumComparison:
    verdict: Verdict
    depth: int
    max_delta: float
    word: str | None = None
    delta: float | None = None

    @property
    def isospectral(self) -> bool:
        return self.verdict is Verdict.ISOSPECTRAL


def compare_spectra(a: SpectrumTable, b: SpectrumTable, tol: float = COMPARE_TOL) -> SpectrumComparison:
    """Compare lengths word by word.

    Agreement within ``tol`` everywhere only says the spectra match up to
    the enumerated depth.  On mismatch the shortlex-first offending word is
    reported.
    """
    la, lb = a.lengths(), b.lengths()
    if set(la) != set(lb):
        only_a = sorted(set(la) - set(lb))[:5]
        only_b = sorted(set(lb) - set(la))[:5]
        raise TableMismatch(f"word sets differ; only in first: {only_a}, only in second: {only_b}")
    depth = min(a.max_len, b.max_len)
    worst, first = 0.0, None
    for e in a.entries:
        d = abs(la[e.word] - lb[e.word])
        worst = max(worst, d)
        if first is None and d > tol:
            first = (e.word, d)
    if first is None:
        return SpectrumComparison(Verdict.ISOSPECTRAL, depth, worst)
    return SpectrumComparison(Verdict.MISMATCH, depth, worst, first[0], first[1])


def self_duality_witness(rep: Representation, max_len: int = 6) -> tuple[str, float]:
    """Word maximizing |tr(w) - tr(w^-1)| over enumerated classes, with that value."""
    best_w, best = "", 0.0
    for w in enumerate_conjugacy_words(rep, max_len):
        d = abs(float(np.trace(rep.evaluate(w))) - float(np.trace(rep.inverse_word(w))))
        if d > best:
            best_w, best = w, d
    return best_w, best


def self_duality_defect(rep: Representation, max_len: int = 6) -> float:
    return self_duality_witness(rep, max_len)[1]
