"""The double word Hopf algebra: substitutions ``top/bottom`` with equal support.

A substitution is stored canonically: letters are ``1..k`` numbered by first
occurrence in the top word, so two pairs related by a bijection of letters
are stored identically.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product as cartesian
from typing import NamedTuple

from .hopf import HopfStructure, PairingStructure
from .lincomb import LinComb, Tensor
from .text import format_word
from .words import Word, good_cuts, is_permutation, restrict, shift, shuffle, standardize


class SupportMismatch(ValueError):
    pass


class Substitution(NamedTuple):
    top: Word
    bottom: Word

    @property
    def degree(self) -> int:
        return len(set(self.top))

    def __str__(self):
        return format_substitution(self)


EMPTY_SUBSTITUTION = Substitution((), ())


def format_substitution(p: Substitution) -> str:
    return "{" + format_word(p.top) + "/" + format_word(p.bottom) + "}"


def canonicalize(top: Word, bottom: Word) -> Substitution:
    """Relabel letters to ``1..k`` in order of first occurrence in ``top``."""
    if set(top) != set(bottom):
        raise SupportMismatch(f"supports differ: {list(top)} / {list(bottom)}")
    label: dict[int, int] = {}
    for a in top:
        if a not in label:
            label[a] = len(label) + 1
    return Substitution(tuple(label[a] for a in top), tuple(label[a] for a in bottom))


def substitution_degree(p: Substitution) -> int:
    return len(set(p.top))


def substitution_counit(p: Substitution) -> int:
    return 0 if p.top else 1


@lru_cache(maxsize=None)
def dwha_product(p: Substitution, q: Substitution) -> LinComb:
    """Concatenate tops and shuffle bottoms, after moving ``q`` off ``p``'s letters."""
    k = substitution_degree(p)
    top = p.top + shift(q.top, k)
    qb = shift(q.bottom, k)
    acc: dict = {}
    for b, c in shuffle(p.bottom, qb).items():
        s = canonicalize(top, b)
        acc[s] = acc.get(s, 0) + c
    return LinComb(acc)


def dwha_product_relabel_first(p: Substitution, q: Substitution) -> LinComb:
    """Same product, moving ``p`` off ``q``'s letters instead."""
    k = substitution_degree(q)
    top = shift(p.top, k) + q.top
    acc: dict = {}
    for b, c in shuffle(shift(p.bottom, k), q.bottom).items():
        s = canonicalize(top, b)
        acc[s] = acc.get(s, 0) + c
    return LinComb(acc)


@lru_cache(maxsize=None)
def dwha_coproduct(p: Substitution) -> LinComb:
    """Sum over good cuts ``b1 b2`` of the bottom word of ``(top|b1)/b1 (x) (top|b2)/b2``."""
    acc: dict = {}
    for b1, b2 in good_cuts(p.bottom):
        t = Tensor(
            canonicalize(restrict(p.top, b1), b1),
            canonicalize(restrict(p.top, b2), b2),
        )
        acc[t] = acc.get(t, 0) + 1
    return LinComb(acc)


def flip(p: Substitution) -> Substitution:
    """Exchange top and bottom."""
    return canonicalize(p.bottom, p.top)


def dwha_pair(p: Substitution, q: Substitution) -> int:
    """1 iff a relabeling sends top(p) to bottom(q) and bottom(p) to top(q)."""
    return 1 if flip(p) == q else 0


def _canonical_tops(k: int, max_len: int) -> list[Word]:
    # restricted growth words using exactly the letters 1..k
    out = []
    for n in range(k, max_len + 1):
        for w in cartesian(range(1, k + 1), repeat=n):
            nxt = 1
            ok = True
            for a in w:
                if a > nxt:
                    ok = False
                    break
                if a == nxt:
                    nxt += 1
            if ok and nxt == k + 1:
                out.append(w)
    return out


def _surjective_words(k: int, max_len: int) -> list[Word]:
    return [
        w
        for n in range(k, max_len + 1)
        for w in cartesian(range(1, k + 1), repeat=n)
        if len(set(w)) == k
    ]


def enumerate_substitutions(max_support: int, max_top: int, max_bottom: int) -> list[Substitution]:
    """All canonical substitutions inside the bounds, by degree, then top, then bottom."""
    out = []
    for k in range(max_support + 1):
        bottoms = _surjective_words(k, max_bottom)
        for top in _canonical_tops(k, max_top):
            out.extend(Substitution(top, b) for b in bottoms)
    return out


def embed(t: Word) -> Substitution:
    """Permutation ``t`` as the substitution ``[1..n]/t``; repeat-free words are standardized."""
    if not is_permutation(t):
        t = standardize(t)
    return Substitution(tuple(range(1, len(t) + 1)), tuple(t))


def subst_compose(p: Substitution, q: Substitution) -> LinComb:
    """The recipe ``alpha -> p(q(alpha))`` as a substitution (or zero).

    ``q`` must output words of the length ``p`` reads. Letters of ``q`` that
    ``p`` forces equal (same top letter of ``p`` at their bottom positions)
    are merged; the merged top of ``q`` becomes the new top.
    """
    if len(q.bottom) != len(p.top):
        return LinComb()
    parent = {x: x for x in set(q.top)}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    first_pos: dict[int, int] = {}
    for i, y in enumerate(p.top):
        if y in first_pos:
            ra, rb = find(q.bottom[first_pos[y]]), find(q.bottom[i])
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        else:
            first_pos[y] = i
    top = tuple(find(x) for x in q.top)
    bottom = tuple(find(q.bottom[first_pos[y]]) for y in p.bottom)
    return LinComb.basis(canonicalize(top, bottom))


DWHA = HopfStructure(
    name="dwha",
    product=dwha_product,
    coproduct=dwha_coproduct,
    unit=EMPTY_SUBSTITUTION,
    counit=substitution_counit,
    degree=substitution_degree,
    basis=lambda max_support=2, max_top=3, max_bottom=3: enumerate_substitutions(
        max_support, max_top, max_bottom
    ),
    fmt=format_substitution,
)

DWHA_PAIRING = PairingStructure(dwha_pair)
