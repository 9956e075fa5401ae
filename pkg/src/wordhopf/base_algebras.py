"""Shuffle and NSymm as Hopf structures.

Shuffle: words, shuffle product, cut coproduct, degree = sum of letters.
NSymm: noncommutative monomials ``Z_{i1}...Z_{im}`` stored as the tuple of
indices, concatenation product, coproduct the algebra morphism extending
``mu(Z_n) = sum_{i+j=n} Z_i (x) Z_j`` with ``Z_0 = 1``.
"""

from __future__ import annotations

from functools import lru_cache

from .hopf import HopfStructure
from .lincomb import LinComb, Tensor
from .text import format_word
from .words import EMPTY, Word, compositions_up_to, cuts, shuffle


def shuffle_product(a: Word, b: Word) -> LinComb:
    return shuffle(a, b)


@lru_cache(maxsize=None)
def shuffle_coproduct(a: Word) -> LinComb:
    return LinComb((Tensor(u, v), 1) for u, v in cuts(a))


def shuffle_antipode(a: Word) -> LinComb:
    """Closed form ``(-1)^len(a)`` times the reversed word."""
    return LinComb.basis(a[::-1], -1 if len(a) % 2 else 1)


def word_counit(a) -> int:
    return 1 if not a else 0


def weight(a: Word) -> int:
    return sum(a)


def shuffle_basis(max_weight: int = 5) -> list[Word]:
    """Words of weight ``<= max_weight`` (one per composition)."""
    return compositions_up_to(max_weight)


SHUFFLE = HopfStructure(
    name="shuffle",
    product=shuffle_product,
    coproduct=shuffle_coproduct,
    unit=EMPTY,
    counit=word_counit,
    degree=weight,
    basis=shuffle_basis,
    fmt=format_word,
)


def nsymm_product(a: Word, b: Word) -> LinComb:
    return LinComb.basis(a + b)


def _generator_coproduct(n: int) -> list[tuple[Word, Word]]:
    return [((i,) if i else (), (n - i,) if n - i else ()) for i in range(n + 1)]


@lru_cache(maxsize=None)
def nsymm_coproduct(a: Word) -> LinComb:
    """Product over the letters of ``a`` of the generator coproducts."""
    acc = {Tensor((), ()): 1}
    for n in a:
        nxt: dict = {}
        for t, c in acc.items():
            for u, v in _generator_coproduct(n):
                k = Tensor(t.left + u, t.right + v)
                nxt[k] = nxt.get(k, 0) + c
        acc = nxt
    return LinComb(acc)


def format_monomial(a: Word) -> str:
    return "Z" + format_word(a)


def nsymm_basis(max_weight: int = 4) -> list[Word]:
    return compositions_up_to(max_weight)


NSYMM = HopfStructure(
    name="nsymm",
    product=nsymm_product,
    coproduct=nsymm_coproduct,
    unit=EMPTY,
    counit=word_counit,
    degree=weight,
    basis=nsymm_basis,
    fmt=format_monomial,
)
