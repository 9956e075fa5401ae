"""Generic Hopf algebra machinery over Z.

A :class:`HopfStructure` bundles basis-level structure maps. Everything here
works through those maps: convolution, the connected-graded antipode
recursion, and exhaustive axiom checkers that report every violation found
inside an explicit finite set of basis elements.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Any, NamedTuple

from .lincomb import LinComb, Tensor, lift, lift2, lift_tensor
from .text import format_lincomb


@dataclass(eq=False)
class HopfStructure:
    """Structure maps of one Hopf algebra on a chosen basis.

    ``degree`` may be None for algebras that are not connected graded; such
    algebras must supply ``antipode_map``. ``basis`` enumerates a finite set
    of basis elements from keyword bounds.
    """

    name: str
    product: Callable[[Any, Any], LinComb]
    coproduct: Callable[[Any], LinComb]
    unit: Any
    counit: Callable[[Any], int]
    degree: Callable[[Any], int] | None = None
    basis: Callable[..., Sequence[Any]] | None = None
    fmt: Callable[[Any], str] = str
    antipode_map: Callable[[Any], LinComb] | None = None
    one: LinComb | None = None
    _antipode_memo: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.one is None:
            self.one = LinComb.basis(self.unit)

    def mul(self, x: LinComb, y: LinComb) -> LinComb:
        return lift2(self.product, x, y)

    def comul(self, x: LinComb) -> LinComb:
        return lift(self.coproduct, x)

    def eps(self, x: LinComb) -> int:
        return sum(c * self.counit(b) for b, c in x.items())

    def tensor_mul(self, x: LinComb, y: LinComb) -> LinComb:
        """Product in the tensor square: ``(a (x) b)(c (x) d) = ac (x) bd``."""
        acc: dict = {}
        for s, cs in x.items():
            for t, ct in y.items():
                left = self.product(s.left, t.left)
                if not left:
                    continue
                right = self.product(s.right, t.right)
                for a, ca in left.items():
                    for b, cb in right.items():
                        k = Tensor(a, b)
                        acc[k] = acc.get(k, 0) + cs * ct * ca * cb
        return LinComb(acc)

    def antipode(self, x) -> LinComb:
        return antipode(self, x)

    def show(self, b) -> str:
        """Text form of a basis element; the unit prints as ``1``."""
        if self.unit is not None and b == self.unit:
            return "1"
        return self.fmt(b)

    def format(self, x: LinComb) -> str:
        return format_lincomb(x, self.show)


def identity(b) -> LinComb:
    return LinComb.basis(b)


def convolution(h: HopfStructure, f: Callable, g: Callable, x) -> LinComb:
    """``m . (f (x) g) . mu`` applied to the basis element ``x``."""
    acc = LinComb()
    for t, c in h.coproduct(x).items():
        fl = f(t.left)
        if not fl:
            continue
        acc = acc + h.mul(fl, g(t.right)) * c
    return acc


def unit_counit(h: HopfStructure) -> Callable:
    """The composite ``H -> Z -> H``, the identity for convolution."""
    return lambda b: h.one * h.counit(b)


def antipode(h: HopfStructure, x) -> LinComb:
    """Antipode of a basis element.

    Uses ``h.antipode_map`` when given; otherwise solves
    ``conv(S, id) = unit . counit`` degree by degree. The degree-zero part of
    ``mu(x)`` is ``x (x) 1`` by the counit law, so
    ``S(x) = -sum S(x') x''`` over the terms with ``deg x'' > 0``.
    """
    if h.antipode_map is not None:
        return h.antipode_map(x)
    memo = h._antipode_memo
    if x in memo:
        return memo[x]
    if h.degree(x) == 0:
        res = LinComb.basis(x) * h.counit(x)
    else:
        res = LinComb()
        for t, c in h.coproduct(x).items():
            if h.degree(t.right) == 0:
                continue
            res = res - h.mul(antipode(h, t.left), LinComb.basis(t.right)) * c
    memo[x] = res
    return res


# --- reports ---------------------------------------------------------------


@dataclass
class Violation:
    law: str
    elements: tuple[str, ...]
    lhs: str
    rhs: str

    def line(self) -> str:
        return f"VIOLATION {self.law} {' '.join(self.elements)} lhs={self.lhs} rhs={self.rhs}"


@dataclass
class Report:
    name: str
    algebra: str
    bounds: str
    checked: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"CHECK {self.name} {self.algebra} {self.bounds} {status} {len(self.violations)}"

    def lines(self) -> list[str]:
        return [v.line() for v in self.violations] + [self.summary()]

    def __str__(self):
        return "\n".join(self.lines())


def bounds_label(bounds: dict | None) -> str:
    if not bounds:
        return "-"
    return ",".join(f"{k}={v}" for k, v in bounds.items())


def _elements(h: HopfStructure, bounds, elements):
    if elements is not None:
        return list(elements)
    if h.basis is None:
        raise ValueError(f"{h.name} has no basis enumerator; pass elements explicitly")
    return list(h.basis(**(bounds or {})))


class Triple(NamedTuple):
    """Basis element of a threefold tensor power, bracketing forgotten."""

    a: Any
    b: Any
    c: Any


def _fmt_tuple(t, fmt) -> str:
    if isinstance(t, Triple):
        return " (x) ".join(fmt(s) for s in t)
    return fmt(t)


def _labels(elems, fmt) -> tuple[str, ...]:
    return tuple(e if isinstance(e, str) else fmt(e) for e in elems)


def _check(report: Report, law: str, elems, lhs: LinComb, rhs: LinComb, fmt):
    report.checked += 1
    if lhs != rhs:
        report.violations.append(
            Violation(
                law,
                _labels(elems, fmt),
                format_lincomb(lhs, lambda b: _fmt_tuple(b, fmt)),
                format_lincomb(rhs, lambda b: _fmt_tuple(b, fmt)),
            )
        )


def _check_scalar(report: Report, law: str, elems, lhs: int, rhs: int, fmt):
    report.checked += 1
    if lhs != rhs:
        report.violations.append(Violation(law, _labels(elems, fmt), str(lhs), str(rhs)))


def _flatten_left(x: LinComb) -> LinComb:
    # Tensor(Tensor(a, b), c) -> (a, b, c)
    return LinComb((Triple(t.left.left, t.left.right, t.right), c) for t, c in x.items())


def _flatten_right(x: LinComb) -> LinComb:
    # Tensor(a, Tensor(b, c)) -> (a, b, c)
    return LinComb((Triple(t.left, t.right.left, t.right.right), c) for t, c in x.items())


def check_assoc(h: HopfStructure, bounds: dict | None = None, elements=None) -> Report:
    """Associativity and two-sided unit laws of the product."""
    elems = _elements(h, bounds, elements)
    rep = Report("assoc", h.name, bounds_label(bounds))
    for a in elems:
        x = LinComb.basis(a)
        _check(rep, "left-unit", (a,), h.mul(h.one, x), x, h.show)
        _check(rep, "right-unit", (a,), h.mul(x, h.one), x, h.show)
    for a, b in cartesian(elems, repeat=2):
        ab = h.product(a, b)
        for c in elems:
            lhs = h.mul(ab, LinComb.basis(c))
            rhs = h.mul(LinComb.basis(a), h.product(b, c))
            _check(rep, "assoc", (a, b, c), lhs, rhs, h.show)
    return rep


def check_coassoc(h: HopfStructure, bounds: dict | None = None, elements=None) -> Report:
    """Coassociativity and both counit laws on every listed basis element."""
    elems = _elements(h, bounds, elements)
    rep = Report("coassoc", h.name, bounds_label(bounds))
    for a in elems:
        mu = h.coproduct(a)
        lhs = _flatten_right(lift_tensor(identity, h.coproduct, mu))
        rhs = _flatten_left(lift_tensor(h.coproduct, identity, mu))
        _check(rep, "coassoc", (a,), lhs, rhs, h.show)
        x = LinComb.basis(a)
        left = LinComb()
        right = LinComb()
        for t, c in mu.items():
            left = left + LinComb.basis(t.right, c * h.counit(t.left))
            right = right + LinComb.basis(t.left, c * h.counit(t.right))
        _check(rep, "counit-left", (a,), left, x, h.show)
        _check(rep, "counit-right", (a,), right, x, h.show)
    return rep


def check_bialgebra(h: HopfStructure, bounds: dict | None = None, elements=None) -> Report:
    """Coproduct and counit are algebra morphisms (unit and all listed pairs)."""
    elems = _elements(h, bounds, elements)
    rep = Report("bialgebra", h.name, bounds_label(bounds))
    one_one = LinComb(
        (Tensor(a, b), ca * cb) for a, ca in h.one.items() for b, cb in h.one.items()
    )
    _check(rep, "coproduct-unit", ("1",), h.comul(h.one), one_one, h.show)
    _check_scalar(rep, "counit-unit", ("1",), h.eps(h.one), 1, str)
    mus = {a: h.coproduct(a) for a in elems}
    for a, b in cartesian(elems, repeat=2):
        ab = h.product(a, b)
        lhs = h.comul(ab)
        rhs = h.tensor_mul(mus[a], mus[b])
        _check(rep, "hopf", (a, b), lhs, rhs, h.show)
        _check_scalar(rep, "counit-mult", (a, b), h.eps(ab), h.counit(a) * h.counit(b), h.show)
    return rep


def check_antipode(h: HopfStructure, bounds: dict | None = None, elements=None) -> Report:
    """``conv(id, S) = conv(S, id) = unit . counit`` on every listed element."""
    elems = _elements(h, bounds, elements)
    rep = Report("antipode", h.name, bounds_label(bounds))
    s = h.antipode
    for a in elems:
        target = h.one * h.counit(a)
        _check(rep, "conv(id,S)", (a,), convolution(h, identity, s, a), target, h.show)
        _check(rep, "conv(S,id)", (a,), convolution(h, s, identity, a), target, h.show)
    return rep


def check_grading(h: HopfStructure, bounds: dict | None = None, elements=None) -> Report:
    """Degree homogeneity of product, coproduct and antipode; connectedness."""
    elems = _elements(h, bounds, elements)
    rep = Report("grading", h.name, bounds_label(bounds))
    deg = h.degree

    def bad(law, els, msg):
        rep.violations.append(Violation(law, _labels(els, h.show), msg, "homogeneous"))

    for a in elems:
        rep.checked += 1
        if deg(a) == 0 and a != h.unit:
            bad("connected", (a,), "degree-0 element besides the unit")
        for t in h.coproduct(a):
            if deg(t.left) + deg(t.right) != deg(a):
                bad("coproduct-degree", (a,), h.format(LinComb.basis(t)))
        for b in antipode(h, a):
            if deg(b) != deg(a):
                bad("antipode-degree", (a,), h.show(b))
    for a, b in cartesian(elems, repeat=2):
        rep.checked += 1
        for c in h.product(a, b):
            if deg(c) != deg(a) + deg(b):
                bad("product-degree", (a, b), h.show(c))
    return rep


@dataclass(eq=False)
class PairingStructure:
    """A bilinear form given on basis pairs; tensors pair factor by factor."""

    pair: Callable[[Any, Any], int]

    def pair_lin(self, x: LinComb, y: LinComb) -> int:
        return sum(cx * cy * self.pair(a, b) for a, cx in x.items() for b, cy in y.items())

    def pair_tensor(self, x: LinComb, y: LinComb) -> int:
        total = 0
        for s, cs in x.items():
            for t, ct in y.items():
                p = self.pair(s.left, t.left)
                if p:
                    total += cs * ct * p * self.pair(s.right, t.right)
        return total


def check_selfdual(
    h: HopfStructure, p: PairingStructure, bounds: dict | None = None, elements=None
) -> Report:
    """``<m(a (x) b), c> = <a (x) b, mu(c)>`` for all listed triples."""
    elems = _elements(h, bounds, elements)
    rep = Report("selfdual", h.name, bounds_label(bounds))
    mus = {c: h.coproduct(c) for c in elems}
    for a, b in cartesian(elems, repeat=2):
        ab = h.product(a, b)
        ab_t = LinComb.basis(Tensor(a, b))
        for c in elems:
            lhs = p.pair_lin(ab, LinComb.basis(c))
            rhs = p.pair_tensor(ab_t, mus[c])
            _check_scalar(rep, "selfdual", (a, b, c), lhs, rhs, h.show)
    return rep


def run_suite(h: HopfStructure, bounds: dict | None = None, assoc: bool = True) -> list[Report]:
    """The standard battery: (assoc), coassoc, bialgebra, antipode, grading."""
    elems = _elements(h, bounds, None)
    reports = []
    if assoc:
        reports.append(check_assoc(h, bounds, elems))
    reports.append(check_coassoc(h, bounds, elems))
    reports.append(check_bialgebra(h, bounds, elems))
    reports.append(check_antipode(h, bounds, elems))
    if h.degree is not None:
        reports.append(check_grading(h, bounds, elems))
    return reports
