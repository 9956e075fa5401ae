"""Free Z-modules: finite integer linear combinations over hashable basis elements."""

from __future__ import annotations

from collections.abc import Callable, Hashable, Iterable, Iterator, Mapping
from typing import Any, NamedTuple


class Tensor(NamedTuple):
    """Basis element ``left (x) right`` of a tensor product of free modules."""

    left: Any
    right: Any


class LinComb(Mapping):
    """Immutable finite map ``basis -> nonzero int``.

    Zero is the empty combination. Coefficients are Python ints, so there is
    no overflow however large shuffle multiplicities grow.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable[tuple[Hashable, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for b, c in items:
            acc[b] = acc.get(b, 0) + c
        self._terms = {b: c for b, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _wrap(cls, d: dict) -> LinComb:
        # d must already be zero-free and owned by the new object
        obj = cls.__new__(cls)
        obj._terms = d
        obj._hash = None
        return obj

    @classmethod
    def basis(cls, b: Hashable, c: int = 1) -> LinComb:
        return cls._wrap({b: c} if c else {})

    def __getitem__(self, b):
        return self._terms.get(b, 0)

    def __contains__(self, b):
        return b in self._terms

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: LinComb) -> LinComb:
        if not isinstance(other, LinComb):
            return NotImplemented
        return combine(self, 1, other)

    def __sub__(self, other: LinComb) -> LinComb:
        if not isinstance(other, LinComb):
            return NotImplemented
        return combine(self, -1, other)

    def __neg__(self) -> LinComb:
        return LinComb._wrap({b: -c for b, c in self._terms.items()})

    def __mul__(self, c: int) -> LinComb:
        if not isinstance(c, int):
            return NotImplemented
        if c == 0:
            return LinComb()
        return LinComb._wrap({b: c * v for b, v in self._terms.items()})

    __rmul__ = __mul__

    def __repr__(self):
        if not self._terms:
            return "LinComb(0)"
        body = " + ".join(f"{c}*{b!r}" for b, c in self.sorted_items(repr))
        return f"LinComb({body})"

    def sorted_items(self, key: Callable[[Any], str] = str) -> list[tuple[Any, int]]:
        """Terms ordered lexicographically by ``key(basis)`` (the display order)."""
        return sorted(self._terms.items(), key=lambda t: key(t[0]))

    def mass(self) -> int:
        """Sum of all coefficients."""
        return sum(self._terms.values())


ZERO = LinComb()


def combine(a: LinComb, c: int, b: LinComb) -> LinComb:
    """Return ``a + c*b`` with cancelled terms dropped."""
    if not c or not b:
        return a
    d = dict(a._terms)
    for k, v in b._terms.items():
        n = d.get(k, 0) + c * v
        if n:
            d[k] = n
        else:
            d.pop(k, None)
    return LinComb._wrap(d)


def tensor(a: LinComb, b: LinComb) -> LinComb:
    """Bilinear tensor product; the basis of the result is ``Tensor(x, y)``."""
    return LinComb._wrap(
        {Tensor(x, y): cx * cy for x, cx in a._terms.items() for y, cy in b._terms.items()}
    )


def lift(f: Callable[[Any], LinComb], x: LinComb) -> LinComb:
    """Linear extension of a basis-level map ``f`` to the combination ``x``."""
    acc: dict = {}
    for b, c in x._terms.items():
        for k, v in f(b)._terms.items():
            acc[k] = acc.get(k, 0) + c * v
    return LinComb(acc)


def lift2(f: Callable[[Any, Any], LinComb], x: LinComb, y: LinComb) -> LinComb:
    """Bilinear extension of a basis-level binary map."""
    acc: dict = {}
    for a, ca in x._terms.items():
        for b, cb in y._terms.items():
            for k, v in f(a, b)._terms.items():
                acc[k] = acc.get(k, 0) + ca * cb * v
    return LinComb(acc)


def lift_tensor(f: Callable[[Any], LinComb], g: Callable[[Any], LinComb], x: LinComb) -> LinComb:
    """Apply ``f (x) g`` to a combination of ``Tensor`` basis elements."""
    acc: dict = {}
    for t, c in x._terms.items():
        fl = f(t.left)._terms
        if not fl:
            continue
        gr = g(t.right)._terms
        for a, ca in fl.items():
            for b, cb in gr.items():
                k = Tensor(a, b)
                acc[k] = acc.get(k, 0) + c * ca * cb
    return LinComb(acc)


def from_terms(terms: Iterable[tuple[Hashable, int]]) -> LinComb:
    """Collect like terms from ``(basis, coeff)`` pairs."""
    return LinComb(terms)


def from_basis(elements: Iterable[Hashable]) -> LinComb:
    """Sum of basis elements, each with coefficient one (repeats accumulate)."""
    return LinComb((b, 1) for b in elements)
