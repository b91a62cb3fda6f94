"""Words in a free group on lowercase letters; uppercase letters are inverses."""

from __future__ import annotations

from typing import Iterator, Sequence


def letter_key(ch: str) -> tuple[str, bool]:
    # a < A < b < B < ...
    return ch.lower(), ch.isupper()


def invert(word: str) -> str:
    return word[::-1].swapcase()


def free_reduce(word: str) -> str:
    out: list[str] = []
    for ch in word:
        if out and out[-1] == ch.swapcase():
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def cyclic_reduce(word: str) -> str:
    w = free_reduce(word)
    while len(w) >= 2 and w[0] == w[-1].swapcase():
        w = w[1:-1]
    return w


def rotations(word: str) -> list[str]:
    return [word[i:] + word[:i] for i in range(len(word))] or [""]


def _key(word: str):
    return tuple(letter_key(c) for c in word)


def canonical(word: str) -> str:
    """Conjugacy-and-inversion canonical form.

    Cyclically reduce, then take the least rotation of the word or of its
    inverse under the letter order a < A < b < B < ...
    """
    w = cyclic_reduce(word)
    if not w:
        return ""
    candidates = rotations(w) + rotations(invert(w))
    return min(candidates, key=_key)


def reduced_words(labels: Sequence[str], max_len: int) -> Iterator[str]:
    """All freely reduced words of length 1..max_len, shortlex order."""
    alphabet = sorted([*labels, *(c.upper() for c in labels)], key=letter_key)
    frontier = [""]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for ch in alphabet:
                if w and w[-1] == ch.swapcase():
                    continue
                nxt.append(w + ch)
        yield from nxt
        frontier = nxt
