"""Hopf algebras of endomorphisms.

Two halves:

* Words, permutations and substitutions acting on Shuffle, the convolution
  of such actions, and the projection procedure that reads a coproduct off
  the coconvolution ``mu . f . m``.
* The finite-rank construction: for a Hopf algebra H of finite rank, End(H)
  with convolution, coconvolution, unit ``e . eps``, counit ``eps(f(1))`` and
  antipode ``f -> S f S``, built on matrix units ``E_ij`` (``u_j -> u_i``).

Matrices are numpy arrays of dtype object holding Python ints, so every
computation is exact.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import permutations, product as cartesian
from pathlib import Path
from typing import Union

import numpy as np

from .base_algebras import word_counit
from .dwha import Substitution, dwha_coproduct
from .hopf import (
    HopfStructure,
    PairingStructure,
    Report,
    check_antipode,
    check_assoc,
    check_bialgebra,
    check_coassoc,
    check_selfdual,
)
from .lincomb import LinComb, Tensor, lift
from .text import format_word
from .mpr import mpr_coproduct
from .wha import wha_product
from .words import Word, cuts, height, matches, shift, shuffle, support, words_up_to

# --- actions on Shuffle ------------------------------------------------------


@dataclass(frozen=True)
class PermAction:
    """Permutation word ``s``: ``[a_1..a_m] -> [a_{s_1}..a_{s_m}]`` on words of length m."""

    perm: Word

    def __call__(self, a: Word) -> LinComb:
        if len(a) != len(self.perm):
            return LinComb()
        return LinComb.basis(tuple(a[s - 1] for s in self.perm))


@dataclass(frozen=True)
class SubstAction:
    """Substitution ``top/bottom``: words respecting the equalities of ``top``
    are sent to ``bottom`` with each letter replaced by its value."""

    subst: Substitution

    def __call__(self, a: Word) -> LinComb:
        top, bottom = self.subst
        if not matches(a, top):
            return LinComb()
        value = dict(zip(top, a))
        return LinComb.basis(tuple(value[x] for x in bottom))


@dataclass(frozen=True)
class NaiveWordAction:
    """Arbitrary word ``s`` of height m: on words of length m, pick ``a_{s_1}..a_{s_n}``."""

    word: Word

    def __call__(self, a: Word) -> LinComb:
        if len(a) != height(self.word):
            return LinComb()
        return LinComb.basis(tuple(a[s - 1] for s in self.word))


ActionKind = Union[PermAction, SubstAction, NaiveWordAction]


class DisjointnessViolation(ValueError):
    pass


def act(k: ActionKind, a: Word) -> LinComb:
    return k(a)


def act_lin(k: ActionKind, x: LinComb) -> LinComb:
    return lift(k, x)


def act_tensor(terms: LinComb, a: Word, b: Word, kind=PermAction) -> LinComb:
    """Evaluate ``sum c * k1 (x) k2`` on ``a (x) b``; basis of ``terms`` is ``Tensor(x1, x2)``."""
    acc = LinComb()
    for t, c in terms.items():
        left = kind(t.left)(a)
        if left:
            acc = acc + LinComb(
                (Tensor(u, v), c * cu * cv) for u, cu in left.items() for v, cv in kind(t.right)(b).items()
            )
    return acc


def convolution_action(x: ActionKind, y: ActionKind, a: Word) -> LinComb:
    """``m_Sh . (x (x) y) . mu_Sh`` on the word ``a``."""
    acc: dict = {}
    for u, v in cuts(a):
        xu = x(u)
        if not xu:
            continue
        for s, cs in xu.items():
            for t, ct in y(v).items():
                for w, cw in shuffle(s, t).items():
                    acc[w] = acc.get(w, 0) + cs * ct * cw
    return LinComb(acc)


def projected_coconvolution(x: ActionKind, a: Word, b: Word) -> LinComb:
    """``mu_Sh . x . m_Sh`` on ``a (x) b``, keeping only cut terms with
    letters of ``a`` on the left and letters of ``b`` on the right."""
    sa, sb = support(a), support(b)
    if sa & sb:
        raise DisjointnessViolation(f"supports of {list(a)} and {list(b)} overlap")
    acc: dict = {}
    for w, c in act_lin(x, shuffle(a, b)).items():
        for u, v in cuts(w):
            if set(u) <= sa and set(v) <= sb:
                k = Tensor(u, v)
                acc[k] = acc.get(k, 0) + c
    return LinComb(acc)


def naive_coproduct(s: Word) -> LinComb:
    """Coproduct candidate for naive word actions, read off the projection.

    For each split ``i + j = ht(s)`` the projection is evaluated on generic
    inputs ``[1..i] (x) [i+1..i+j]``. A surviving term ``u (x) v`` stands for
    naive words ``u`` and ``v - i`` only when their heights are ``i`` and
    ``j``; other terms are not naive-word endomorphisms and are discarded.
    """
    m = height(s)
    acc: dict = {}
    for i in range(m + 1):
        a = tuple(range(1, i + 1))
        b = tuple(range(i + 1, m + 1))
        for t, c in projected_coconvolution(NaiveWordAction(s), a, b).items():
            left, right = t.left, shift(t.right, -i)
            if height(left) == i and height(right) == m - i:
                k = Tensor(left, right)
                acc[k] = acc.get(k, 0) + c
    return LinComb(acc)


NAIVE = HopfStructure(
    name="naive",
    product=wha_product,
    coproduct=naive_coproduct,
    unit=(),
    counit=word_counit,
    degree=None,
    basis=lambda max_len=3, max_height=3: words_up_to(max_len, max_height),
    fmt=format_word,
    antipode_map=lambda a: LinComb(),
)

# first failing pair of check_bialgebra(NAIVE) over words of length, height <= 3
NAIVE_FAILURE_WITNESS: tuple[Word, Word] = ((2,), (1,))


def find_naive_failure(max_len: int = 3, max_height: int = 3) -> Report:
    """Exhaustive bialgebra check of the naive construction; violations are the witnesses."""
    return check_bialgebra(NAIVE, dict(max_len=max_len, max_height=max_height))


def naive_witness_sides(witness: tuple[Word, Word] = NAIVE_FAILURE_WITNESS) -> tuple[LinComb, LinComb]:
    """``mu(a b)`` and ``mu(a) mu(b)`` for the recorded naive pair; they differ."""
    a, b = witness
    return NAIVE.comul(NAIVE.product(a, b)), NAIVE.tensor_mul(NAIVE.coproduct(a), NAIVE.coproduct(b))


def perm_projection_matches(s: Word, a: Word, b: Word) -> bool:
    """Projection of permutation ``s`` on ``a (x) b`` equals ``mu_MPR(s)`` acting there."""
    return projected_coconvolution(PermAction(s), a, b) == act_tensor(mpr_coproduct(s), a, b, PermAction)


def subst_projection_matches(p: Substitution, a: Word, b: Word) -> bool:
    """Projection of substitution ``p`` on ``a (x) b`` equals ``mu_dWHA(p)`` acting there."""
    return projected_coconvolution(SubstAction(p), a, b) == act_tensor(
        dwha_coproduct(p), a, b, SubstAction
    )


# --- finite rank End(H) ------------------------------------------------------


class NotAGroup(ValueError):
    pass


class RankMismatch(ValueError):
    pass


class HopfAxiomError(ValueError):
    pass


def _zeros(*shape):
    return np.zeros(shape, dtype=object)


@dataclass(eq=False)
class FiniteHopfData:
    """Structure constants of a Hopf algebra of finite rank ``n`` over Z.

    ``mult[a, b, c]``: coefficient of ``u_c`` in ``u_a u_b``.
    ``comult[c, a, b]``: coefficient of ``u_a (x) u_b`` in ``mu(u_c)``.
    ``antipode[:, j]``: coordinates of ``S(u_j)``.
    All Hopf axioms are verified on construction.
    """

    mult: np.ndarray
    comult: np.ndarray
    unit: np.ndarray
    counit: np.ndarray
    antipode: np.ndarray
    labels: Sequence[str] = ()

    def __post_init__(self):
        self.rank = self.unit.shape[0]
        if not self.labels:
            self.labels = [f"u{i}" for i in range(self.rank)]
        bad = self.axiom_failures()
        if bad:
            raise HopfAxiomError("; ".join(bad))

    def axiom_failures(self) -> list[str]:
        M, D, e, eps, S = self.mult, self.comult, self.unit, self.counit, self.antipode
        n = self.rank
        eye = np.identity(n, dtype=object)
        out = []
        if not np.array_equal(np.einsum("abx,xcd->abcd", M, M), np.einsum("bcx,axd->abcd", M, M)):
            out.append("associativity")
        if not (np.array_equal(np.einsum("a,abc->bc", e, M), eye) and np.array_equal(np.einsum("b,abc->ac", e, M), eye)):
            out.append("unit")
        if not np.array_equal(np.einsum("cax,xbd->cabd", D, D), np.einsum("cxd,xab->cabd", D, D)):
            out.append("coassociativity")
        if not (np.array_equal(np.einsum("cab,a->cb", D, eps), eye) and np.array_equal(np.einsum("cab,b->ca", D, eps), eye)):
            out.append("counit")
        # mu(u_a u_b) = mu(u_a) mu(u_b)
        lhs = np.einsum("abx,xcd->abcd", M, D)
        rhs = np.einsum("apq,brs,prc,qsd->abcd", D, D, M, M)
        if not np.array_equal(lhs, rhs):
            out.append("bialgebra")
        if not np.array_equal(np.einsum("abc,c->ab", M, eps), np.outer(eps, eps)):
            out.append("counit-multiplicative")
        if not np.array_equal(np.einsum("a,abc->bc", e, D), np.outer(e, e)):
            out.append("coproduct-unit")
        target = np.outer(e, eps)
        left = np.einsum("kab,xa,yb,xyc->ck", D, eye, S, M)
        right = np.einsum("kab,xa,yb,xyc->ck", D, S, eye, M)
        if not (np.array_equal(left, target) and np.array_equal(right, target)):
            out.append("antipode")
        return out


def finite_hopf_group_algebra(elements: Sequence, mult_table, inverse_table=None) -> FiniteHopfData:
    """Group algebra: ``mu(g) = g (x) g``, ``eps(g) = 1``, ``S(g) = g^-1``.

    ``mult_table[i][j]`` is the index of ``elements[i] * elements[j]``.
    """
    n = len(elements)
    table = [list(map(int, row)) for row in mult_table]
    if len(table) != n or any(len(r) != n or any(not 0 <= x < n for x in r) for r in table):
        raise NotAGroup("multiplication table has the wrong shape or entries")
    for a, b, c in cartesian(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise NotAGroup(f"not associative at ({a}, {b}, {c})")
    idents = [i for i in range(n) if all(table[i][j] == j == table[j][i] for j in range(n))]
    if not idents:
        raise NotAGroup("no identity element")
    one = idents[0]
    inv = [next((j for j in range(n) if table[i][j] == one == table[j][i]), None) for i in range(n)]
    if None in inv:
        raise NotAGroup("some element has no inverse")
    if inverse_table is not None and list(map(int, inverse_table)) != inv:
        raise NotAGroup("inverse table disagrees with the multiplication table")
    M = _zeros(n, n, n)
    D = _zeros(n, n, n)
    S = _zeros(n, n)
    for a in range(n):
        D[a, a, a] = 1
        S[inv[a], a] = 1
        for b in range(n):
            M[a, b, table[a][b]] = 1
    e = _zeros(n)
    e[one] = 1
    eps = np.array([1] * n, dtype=object)
    return FiniteHopfData(M, D, e, eps, S, labels=[str(g) for g in elements])


def cyclic_group(n: int) -> FiniteHopfData:
    return finite_hopf_group_algebra(range(n), [[(i + j) % n for j in range(n)] for i in range(n)])


def symmetric_group(k: int) -> FiniteHopfData:
    elems = list(permutations(range(k)))
    index = {g: i for i, g in enumerate(elems)}
    table = [[index[tuple(g[h[x]] for x in range(k))] for h in elems] for g in elems]
    return finite_hopf_group_algebra(["".join(str(x + 1) for x in g) for g in elems], table)


BUILTIN_GROUPS = {
    "trivial": lambda: cyclic_group(1),
    "c2": lambda: cyclic_group(2),
    "c3": lambda: cyclic_group(3),
    "c4": lambda: cyclic_group(4),
    "s3": lambda: symmetric_group(3),
}


def parse_group_table(text: str) -> FiniteHopfData:
    """First line ``n``, then ``n`` rows of ``n`` zero-based indices."""
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 1:
        raise NotAGroup("first line must hold the group order")
    try:
        n = int(rows[0][0])
        table = [[int(x) for x in r] for r in rows[1:]]
    except ValueError as exc:
        raise NotAGroup(f"non-integer entry: {exc}") from None
    if len(table) != n:
        raise NotAGroup(f"expected {n} table rows, found {len(table)}")
    return finite_hopf_group_algebra(range(n), table)


def load_group(source: str) -> FiniteHopfData:
    """A built-in name (``c2``, ``c3``, ``c4``, ``s3``, ``trivial``) or a table file path."""
    if source in BUILTIN_GROUPS:
        return BUILTIN_GROUPS[source]()
    return parse_group_table(Path(source).read_text())


def _check_rank(H: FiniteHopfData, *mats):
    for f in mats:
        if f.shape != (H.rank, H.rank):
            raise RankMismatch(f"expected {H.rank}x{H.rank} matrix, got {f.shape}")


def identity_endo(H: FiniteHopfData) -> np.ndarray:
    return np.identity(H.rank, dtype=object)


def unit_counit_endo(H: FiniteHopfData) -> np.ndarray:
    """``e . eps``, the unit of End(H)."""
    return np.outer(H.unit, H.counit)


def matrix_unit(H: FiniteHopfData, i: int, j: int) -> np.ndarray:
    f = _zeros(H.rank, H.rank)
    f[i, j] = 1
    return f


def end_conv(H: FiniteHopfData, f: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Matrix of ``m . (f (x) g) . mu``."""
    _check_rank(H, f, g)
    return np.einsum("kab,xa,yb,xyc->ck", H.comult, f, g, H.mult)


def coconv_matrix(H: FiniteHopfData, f: np.ndarray) -> np.ndarray:
    """``mu . f . m`` as an array ``T[i, k, j, l]``: coefficient of
    ``u_i (x) u_k`` in the image of ``u_j (x) u_l``."""
    _check_rank(H, f)
    return np.einsum("jlc,dc,dik->ikjl", H.mult, f, H.comult)


def end_coconv(H: FiniteHopfData, f: np.ndarray) -> LinComb:
    """Coconvolution expanded in matrix units: ``sum T[i,k,j,l] E_ij (x) E_kl``."""
    T = coconv_matrix(H, f)
    n = H.rank
    return LinComb(
        (Tensor((i, j), (k, l)), int(T[i, k, j, l]))
        for i, k, j, l in cartesian(range(n), repeat=4)
        if T[i, k, j, l]
    )


def contract(H: FiniteHopfData, x: LinComb) -> np.ndarray:
    """Inverse direction: ``sum c E_ij (x) E_kl`` as ``T[i, k, j, l]``."""
    n = H.rank
    T = _zeros(n, n, n, n)
    for t, c in x.items():
        (i, j), (k, l) = t.left, t.right
        T[i, k, j, l] += c
    return T


def end_pair(H: FiniteHopfData, f: np.ndarray, g: np.ndarray) -> int:
    """Canonical pairing ``(f (x) g)(gamma)``, which is ``trace(g f)``."""
    _check_rank(H, f, g)
    return int(np.trace(g @ f))


def end_antipode(H: FiniteHopfData, f: np.ndarray) -> np.ndarray:
    return H.antipode @ f @ H.antipode


def end_counit(H: FiniteHopfData, f: np.ndarray) -> int:
    return int(H.counit @ f @ H.unit)


def _as_lincomb(f: np.ndarray) -> LinComb:
    n = f.shape[0]
    return LinComb(((i, j), int(f[i, j])) for i, j in cartesian(range(n), repeat=2) if f[i, j])


def end_structure(H: FiniteHopfData, name: str = "End(H)") -> HopfStructure:
    """End(H) on the matrix-unit basis ``(i, j) = E_ij``."""
    n = H.rank
    units = {(i, j): matrix_unit(H, i, j) for i, j in cartesian(range(n), repeat=2)}
    prod_cache: dict = {}
    coprod_cache: dict = {}

    def product(a, b):
        key = (a, b)
        if key not in prod_cache:
            prod_cache[key] = _as_lincomb(end_conv(H, units[a], units[b]))
        return prod_cache[key]

    def coproduct(a):
        if a not in coprod_cache:
            coprod_cache[a] = end_coconv(H, units[a])
        return coprod_cache[a]

    def fmt(a):
        return f"E{a[0]}_{a[1]}"

    return HopfStructure(
        name=name,
        product=product,
        coproduct=coproduct,
        unit=None,
        one=_as_lincomb(unit_counit_endo(H)),
        counit=lambda a: end_counit(H, units[a]),
        degree=None,
        basis=lambda: list(units),
        fmt=fmt,
        antipode_map=lambda a: _as_lincomb(end_antipode(H, units[a])),
    )


def _trace_pair(a, b) -> int:
    # trace(E_b E_a) = [a_col == b_row][b_col == a_row]
    return 1 if a[1] == b[0] and b[1] == a[0] else 0


def _transposed_pair(a, b) -> int:
    # trace(E_b^T E_a) = [a == b]
    return 1 if a == b else 0


@dataclass
class EndCheck:
    """Structural reports of End(H) plus the evaluated self-duality forms."""

    structural: list[Report]
    selfdual: dict[str, Report]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.structural)

    def selfdual_note(self) -> str:
        held = [k for k, r in self.selfdual.items() if r.passed]
        return "self-duality holds for pairing: " + (", ".join(held) if held else "none tried")

    def lines(self) -> list[str]:
        out = []
        for r in self.structural:
            out.extend(r.lines())
        for k, r in self.selfdual.items():
            out.append(f"FORM {k} {'holds' if r.passed else 'fails'} {len(r.violations)}")
        out.append("NOTE " + self.selfdual_note())
        return out


def end_hopf_check(H: FiniteHopfData, name: str = "End(H)", assoc: bool = True) -> EndCheck:
    """Every Hopf law of End(H) over the full matrix-unit basis, plus self-duality.

    Self-duality ``<conv(f, g), h> = <f (x) g, coconv(h)>`` is evaluated for
    the trace pairing ``trace(g f)`` and for its transposed variant
    ``trace(g^T f)``; these are reported, not required.
    """
    E = end_structure(H, name)
    elems = E.basis()
    structural = []
    if assoc:
        structural.append(check_assoc(E, elements=elems))
    structural += [
        check_coassoc(E, elements=elems),
        check_bialgebra(E, elements=elems),
        check_antipode(E, elements=elems),
    ]
    selfdual = {
        "trace": check_selfdual(E, PairingStructure(_trace_pair), elements=elems),
        "transposed-trace": check_selfdual(E, PairingStructure(_transposed_pair), elements=elems),
    }
    for k, r in selfdual.items():
        r.name = f"selfdual[{k}]"
    return EndCheck(structural, selfdual)


def find_nondistributive(H: FiniteHopfData):
    """First ``(f, g, h)`` of matrix units with ``f . conv(g, h) != conv(f . g, f . h)``."""
    n = H.rank
    units = [((i, j), matrix_unit(H, i, j)) for i, j in cartesian(range(n), repeat=2)]
    for (fa, f), (ga, g), (ha, h) in cartesian(units, repeat=3):
        lhs = f @ end_conv(H, g, h)
        rhs = end_conv(H, f @ g, f @ h)
        if not np.array_equal(lhs, rhs):
            return fa, ga, ha, lhs, rhs
    return None
