"""The Hopf algebra of permutations, permutations written as words ``i -> a_i``."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from .base_algebras import word_counit
from .hopf import HopfStructure, PairingStructure
from .lincomb import LinComb, Tensor
from .text import format_word
from .words import EMPTY, Word, cuts, is_permutation, shift, shuffle, standardize


class NotAPermutation(ValueError):
    pass


def perm(letters) -> Word:
    w = tuple(letters)
    if not is_permutation(w):
        raise NotAPermutation(f"{list(w)} is not a permutation word")
    return w


def mpr_product(a: Word, b: Word) -> LinComb:
    """Shuffle ``a`` with ``b`` shifted past the letters of ``a``."""
    return shuffle(a, shift(b, len(a)))


@lru_cache(maxsize=None)
def mpr_coproduct(a: Word) -> LinComb:
    """Sum over all cuts of ``st(prefix) (x) st(suffix)``."""
    return LinComb((Tensor(standardize(u), standardize(v)), 1) for u, v in cuts(a))


def mpr_inverse(a: Word) -> Word:
    inv = [0] * len(a)
    for i, s in enumerate(a, start=1):
        inv[s - 1] = i
    return tuple(inv)


def mpr_pair(a: Word, b: Word) -> int:
    """1 iff ``b`` is the inverse permutation of ``a``."""
    return 1 if len(a) == len(b) and mpr_inverse(a) == b else 0


def mpr_compose(a: Word, b: Word) -> LinComb:
    """Composition ``i -> a[b[i]]`` for equal lengths, zero otherwise."""
    if len(a) != len(b):
        return LinComb()
    return LinComb.basis(tuple(a[j - 1] for j in b))


def perms_up_to(max_len: int) -> list[Word]:
    return [p for n in range(max_len + 1) for p in permutations(range(1, n + 1))]


MPR = HopfStructure(
    name="mpr",
    product=mpr_product,
    coproduct=mpr_coproduct,
    unit=EMPTY,
    counit=word_counit,
    degree=len,
    basis=lambda max_len=4: perms_up_to(max_len),
    fmt=format_word,
)

MPR_PAIRING = PairingStructure(mpr_pair)
