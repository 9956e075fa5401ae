"""Combinatorics on words over the positive integers.

A word is a tuple of ints ``>= 1``; the empty tuple is the empty word.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from functools import lru_cache
from itertools import combinations, product

from .lincomb import LinComb

Word = tuple[int, ...]

EMPTY: Word = ()


class RepeatedLetters(ValueError):
    """Standardization was asked of a word with a repeated letter."""


def word(letters: Iterable[int]) -> Word:
    """Validate and freeze a sequence of letters."""
    w = tuple(int(a) for a in letters)
    if any(a < 1 for a in w):
        raise ValueError(f"letters must be positive integers: {w}")
    return w


def concat(v: Word, w: Word) -> Word:
    return v + w


def interleavings(m: int, n: int) -> Iterator[tuple[int, ...]]:
    """Slot sets (positions taken by the first factor) of all shuffles of lengths m, n."""
    return combinations(range(m + n), m)


@lru_cache(maxsize=None)
def shuffle(a: Word, b: Word) -> LinComb:
    """Shuffle product: every interleaving of ``a`` and ``b``, with multiplicity."""
    if not a:
        return LinComb.basis(b)
    if not b:
        return LinComb.basis(a)
    m, n = len(a), len(b)
    acc: dict = {}
    for slots in interleavings(m, n):
        out = [0] * (m + n)
        taken = set(slots)
        for pos, x in zip(slots, a):
            out[pos] = x
        rest = iter(b)
        for pos in range(m + n):
            if pos not in taken:
                out[pos] = next(rest)
        w = tuple(out)
        acc[w] = acc.get(w, 0) + 1
    return LinComb(acc)


def cuts(w: Word) -> list[tuple[Word, Word]]:
    """All ``len(w) + 1`` prefix/suffix splits, left to right."""
    return [(w[:i], w[i:]) for i in range(len(w) + 1)]


def good_cuts(w: Word) -> list[tuple[Word, Word]]:
    """Cuts whose two halves share no letter."""
    out = []
    for i in range(len(w) + 1):
        if not set(w[:i]) & set(w[i:]):
            out.append((w[:i], w[i:]))
    return out


def support(w: Word) -> frozenset[int]:
    return frozenset(w)


def height(w: Word) -> int:
    """Largest letter; 0 for the empty word."""
    return max(w, default=0)


def is_permutation(w: Word) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def standardize(w: Word) -> Word:
    """Relabel a repeat-free word order-preservingly onto ``1..len(w)``."""
    if len(set(w)) != len(w):
        raise RepeatedLetters(f"cannot standardize {list(w)}: repeated letters")
    rank = {a: i + 1 for i, a in enumerate(sorted(w))}
    return tuple(rank[a] for a in w)


def matches(w: Word, pattern: Word) -> bool:
    """True if ``w`` has the length of ``pattern`` and respects all of its equalities.

    Extra coincidences in ``w`` are allowed: only ``pattern[i] == pattern[j]``
    forces ``w[i] == w[j]``.
    """
    if len(w) != len(pattern):
        return False
    seen: dict[int, int] = {}
    for x, a in zip(pattern, w):
        if seen.setdefault(x, a) != a:
            return False
    return True


def restrict(w: Word, letters: Iterable[int]) -> Word:
    """Subword of ``w`` made of the positions whose letter lies in ``letters``."""
    s = set(letters)
    return tuple(a for a in w if a in s)


def shift(w: Word, k: int) -> Word:
    return tuple(a + k for a in w)


def reverse(w: Word) -> Word:
    return w[::-1]


def words_of_length(n: int, alphabet: int) -> Iterator[Word]:
    """All words of length ``n`` over ``1..alphabet`` in lexicographic order."""
    return product(range(1, alphabet + 1), repeat=n)


def words_up_to(max_len: int, alphabet: int) -> list[Word]:
    """All words of length ``<= max_len`` over ``1..alphabet``, shortest first."""
    return [w for n in range(max_len + 1) for w in words_of_length(n, alphabet)]


def compositions(n: int) -> Iterator[Word]:
    """Ordered sequences of positive integers summing to ``n``."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first, *rest)


def compositions_up_to(n: int) -> list[Word]:
    return [c for k in range(n + 1) for c in compositions(k)]
