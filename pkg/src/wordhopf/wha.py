"""The word Hopf algebra: all integer words, realised inside dWHA.

A word ``a`` with sorted support ``a_1 < ... < a_n`` corresponds to the
substitution whose top is the run word ``1^{r_1} 2^{r_2} ... n^{r_n}`` with
``r_i = a_i - a_{i-1}`` and whose bottom is ``a`` with ``a_i`` renamed ``i``.
The product has a direct word formula; the coproduct is carried over from
dWHA through this encoding.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import groupby

from .base_algebras import word_counit
from .dwha import Substitution, dwha_coproduct
from .hopf import HopfStructure
from .lincomb import LinComb, Tensor
from .text import format_word
from .words import EMPTY, Word, height, shift, shuffle, words_up_to


class NotWHAForm(ValueError):
    """Substitution whose top word is not a sequence of runs."""


def is_wha_form(p: Substitution) -> bool:
    """Equal top letters are contiguous."""
    runs = [k for k, _ in groupby(p.top)]
    return len(runs) == len(set(runs))


def encode(a: Word) -> Substitution:
    values = sorted(set(a))
    top: list[int] = []
    prev = 0
    for i, v in enumerate(values, start=1):
        top.extend([i] * (v - prev))
        prev = v
    rank = {v: i for i, v in enumerate(values, start=1)}
    return Substitution(tuple(top), tuple(rank[v] for v in a))


def decode(p: Substitution) -> Word:
    if not is_wha_form(p):
        raise NotWHAForm(f"top word {list(p.top)} is not a run word")
    # cumulative run lengths, keyed by top letter
    level: dict[int, int] = {}
    total = 0
    for letter, run in groupby(p.top):
        total += len(list(run))
        level[letter] = total
    return tuple(level[x] for x in p.bottom)


def wha_product(a: Word, b: Word) -> LinComb:
    """Shuffle ``a`` with ``b`` shifted by the height of ``a``."""
    return shuffle(a, shift(b, height(a)))


@lru_cache(maxsize=None)
def wha_coproduct(a: Word) -> LinComb:
    acc: dict = {}
    for t, c in dwha_coproduct(encode(a)).items():
        k = Tensor(decode(t.left), decode(t.right))
        acc[k] = acc.get(k, 0) + c
    return LinComb(acc)


def wha_degree(a: Word) -> int:
    return len(set(a))


def wha_basis(max_len: int = 3, max_height: int = 3) -> list[Word]:
    return words_up_to(max_len, max_height)


WHA = HopfStructure(
    name="wha",
    product=wha_product,
    coproduct=wha_coproduct,
    unit=EMPTY,
    counit=word_counit,
    degree=wha_degree,
    basis=wha_basis,
    fmt=format_word,
)
