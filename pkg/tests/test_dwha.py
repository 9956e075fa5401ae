import random

import pytest
from hypothesis import given, strategies as st

from wordhopf.dwha import (
    DWHA,
    DWHA_PAIRING,
    EMPTY_SUBSTITUTION,
    Substitution,
    SupportMismatch,
    canonicalize,
    dwha_coproduct,
    dwha_pair,
    dwha_product,
    dwha_product_relabel_first,
    embed,
    enumerate_substitutions,
    flip,
    subst_compose,
)
from wordhopf.endo import SubstAction
from wordhopf.hopf import check_antipode, check_assoc, check_bialgebra, check_coassoc, check_grading, check_selfdual
from wordhopf.lincomb import LinComb, Tensor, lift
from wordhopf.mpr import mpr_compose, mpr_coproduct, mpr_pair, mpr_product, perms_up_to
from wordhopf.words import words_up_to

BOUNDS = {"max_support": 2, "max_top": 3, "max_bottom": 3}
SUBS = enumerate_substitutions(2, 3, 3)


def S(top, bottom):
    return canonicalize(tuple(top), tuple(bottom))


@st.composite
def substitutions(draw):
    k = draw(st.integers(0, 4))
    letters = list(range(1, k + 1))
    if k == 0:
        return (), ()
    top = draw(st.lists(st.sampled_from(letters), min_size=k, max_size=6))
    bottom = draw(st.lists(st.sampled_from(letters), min_size=k, max_size=6))
    top, bottom = letters + top, letters + bottom  # every letter present on both sides
    rng = random.Random(draw(st.integers()))
    rng.shuffle(top), rng.shuffle(bottom)
    return tuple(top), tuple(bottom)


def test_canonicalize_examples():
    assert S([7, 6, 7, 2, 2, 7, 5], [6, 2, 6, 5, 7]) == Substitution((1, 2, 1, 3, 3, 1, 4), (2, 3, 2, 4, 1))
    assert S([2, 1], [1, 2]) == Substitution((1, 2), (2, 1))
    assert S([], []) == EMPTY_SUBSTITUTION
    with pytest.raises(SupportMismatch):
        S([1, 2], [1])


@given(substitutions(), st.randoms(use_true_random=False))
def test_canonicalize_is_a_class_invariant(tb, rng):
    top, bottom = tb
    p = canonicalize(top, bottom)
    assert canonicalize(*p) == p
    letters = sorted(set(top))
    for _ in range(10):
        image = rng.sample(range(1, 100), len(letters))
        phi = dict(zip(letters, image))
        assert canonicalize(tuple(phi[a] for a in top), tuple(phi[a] for a in bottom)) == p


def test_product_examples():
    one = S([1], [1])
    assert dwha_product(one, one) == LinComb({S([1, 2], [1, 2]): 1, S([1, 2], [2, 1]): 1})
    assert dwha_product(EMPTY_SUBSTITUTION, S([1, 1], [1])) == LinComb.basis(S([1, 1], [1]))
    assert dwha_product(S([1, 1], [1]), one) == LinComb({S([1, 1, 2], [1, 2]): 1, S([1, 1, 2], [2, 1]): 1})


def test_relabeling_either_factor_gives_same_product():
    for p in SUBS:
        for q in SUBS:
            assert dwha_product(p, q) == dwha_product_relabel_first(p, q)


def test_coproduct_nine_letter_example():
    p = S([1, 2, 1, 3, 3, 1, 4, 1, 4], [2, 3, 2, 4, 1])
    e = EMPTY_SUBSTITUTION
    expected = LinComb(
        {
            Tensor(e, p): 1,
            Tensor(S([2, 3, 3], [2, 3, 2]), S([1, 1, 1, 4, 1, 4], [4, 1])): 1,
            Tensor(S([2, 3, 3, 4, 4], [2, 3, 2, 4]), S([1, 1, 1, 1], [1])): 1,
            Tensor(p, e): 1,
        }
    )
    assert dwha_coproduct(p) == expected


def test_coproduct_small_examples():
    e = EMPTY_SUBSTITUTION
    assert dwha_coproduct(e) == LinComb.basis(Tensor(e, e))
    p = S([1, 1], [1, 1])
    assert dwha_coproduct(p) == LinComb({Tensor(e, p): 1, Tensor(p, e): 1})


def test_pairing_examples():
    assert dwha_pair(S([1, 2], [2, 1]), S([1, 2], [2, 1])) == 1
    assert dwha_pair(S([1], [1]), S([1, 1], [1, 1])) == 0
    assert dwha_pair(embed((2, 3, 1)), embed((3, 1, 2))) == 1
    assert all(flip(flip(p)) == p for p in SUBS)


def test_enumeration():
    assert enumerate_substitutions(0, 5, 5) == [EMPTY_SUBSTITUTION]
    one = enumerate_substitutions(1, 2, 2)
    assert set(one) == {EMPTY_SUBSTITUTION} | {S(t, b) for t in ([1], [1, 1]) for b in ([1], [1, 1])}
    two = enumerate_substitutions(2, 2, 2)
    assert [p for p in two if p.degree == 2] == [S([1, 2], [1, 2]), S([1, 2], [2, 1])]
    assert len(SUBS) == len(set(SUBS)) == 42
    assert all(canonicalize(*p) == p for p in SUBS)


def test_degree_additivity():
    for p in SUBS:
        for q in SUBS:
            assert all(r.degree == p.degree + q.degree for r in dwha_product(p, q))
        assert all(t.left.degree + t.right.degree == p.degree for t in dwha_coproduct(p))


def test_embed_examples():
    assert embed((3, 1, 2)) == Substitution((1, 2, 3), (3, 1, 2))
    assert embed(()) == EMPTY_SUBSTITUTION
    assert embed((5, 2, 1, 8)) == embed((3, 2, 1, 4))


def _embed_lin(x):
    return lift(lambda s: LinComb.basis(embed(s)), x)


def _embed_tensor(x):
    return LinComb((Tensor(embed(t.left), embed(t.right)), c) for t, c in x.items())


def test_embed_is_a_hopf_monomorphism():
    assert embed(()) == DWHA.unit
    small, big = perms_up_to(3), perms_up_to(4)
    assert len({embed(s) for s in big}) == len(big)
    for s in big:
        assert embed(s).degree == len(s)
        assert DWHA.counit(embed(s)) == (1 if not s else 0)
        assert dwha_coproduct(embed(s)) == _embed_tensor(mpr_coproduct(s))
    for s in small:
        for t in small:
            assert dwha_product(embed(s), embed(t)) == _embed_lin(mpr_product(s, t))
            assert dwha_pair(embed(s), embed(t)) == mpr_pair(s, t)


def test_compose_examples():
    assert subst_compose(S([1], [1, 1]), S([1, 1], [1])) == LinComb.basis(S([1, 1], [1, 1]))
    assert subst_compose(S([1, 1], [1]), S([1], [1, 1])) == LinComb.basis(S([1], [1]))
    for s in perms_up_to(3):
        for t in perms_up_to(3):
            if len(s) == len(t):
                # substitutions compose as actions (p after q); permutation words
                # compose as index lists, so the order flips
                assert subst_compose(embed(s), embed(t)) == _embed_lin(mpr_compose(t, s))


def test_compose_action_law():
    tests = words_up_to(4, 4)
    for p in SUBS:
        for q in SUBS:
            r = subst_compose(p, q)
            for a in tests:
                lhs = lift(lambda c: SubstAction(c)(a), r)
                rhs = lift(SubstAction(p), SubstAction(q)(a))
                assert lhs == rhs, (p, q, a)


def test_axioms_within_bounds():
    for check in (check_coassoc, check_bialgebra, check_antipode, check_grading):
        r = check(DWHA, BOUNDS)
        assert r.passed, r.lines()[:3]


def test_associativity_small():
    assert check_assoc(DWHA, {"max_support": 2, "max_top": 2, "max_bottom": 2}).passed


def test_selfdual_within_bounds():
    r = check_selfdual(DWHA, DWHA_PAIRING, BOUNDS)
    assert r.passed and r.checked == len(SUBS) ** 3
