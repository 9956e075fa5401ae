import pytest
from hypothesis import given, strategies as st

from wordhopf.dwha import EMPTY_SUBSTITUTION, Substitution, canonicalize, dwha_coproduct, dwha_product
from wordhopf.hopf import check_antipode, check_bialgebra, check_coassoc, check_grading
from wordhopf.lincomb import LinComb, Tensor
from wordhopf.mpr import mpr_coproduct, mpr_product, perms_up_to
from wordhopf.wha import WHA, NotWHAForm, decode, encode, is_wha_form, wha_coproduct, wha_product
from wordhopf.words import shuffle, words_up_to

words = st.lists(st.integers(1, 9), max_size=6).map(tuple)


def test_encode_examples():
    assert encode((3, 2, 7, 2, 4)) == Substitution((1, 1, 2, 3, 4, 4, 4), (2, 1, 4, 1, 3))
    assert encode(()) == EMPTY_SUBSTITUTION
    assert encode((1,)) == Substitution((1,), (1,))


def test_decode_examples():
    assert decode(Substitution((1, 1, 2, 3, 4, 4, 4), (2, 1, 4, 1, 3))) == (3, 2, 7, 2, 4)
    assert decode(EMPTY_SUBSTITUTION) == ()
    # runs (2, 1, 3) on letters 1, 3, 4 after restriction
    assert decode(canonicalize((1, 1, 3, 4, 4, 4), (1, 4, 1, 3))) == (2, 6, 2, 3)


def test_decode_rejects_non_run_tops():
    assert not is_wha_form(Substitution((1, 2, 1), (1, 2)))
    with pytest.raises(NotWHAForm):
        decode(Substitution((1, 2, 1), (1, 2)))


@given(words)
def test_roundtrip(a):
    p = encode(a)
    assert is_wha_form(p)
    assert canonicalize(*p) == p
    assert decode(p) == a
    assert p.degree == len(set(a))


def test_product_examples():
    assert wha_product((1,), (3, 2, 1)) == shuffle((1,), (4, 3, 2)) == mpr_product((1,), (3, 2, 1))
    assert wha_product((2,), (1, 1)) == LinComb({(2, 3, 3): 1, (3, 2, 3): 1, (3, 3, 2): 1})
    assert wha_product((), (5, 1)) == LinComb.basis((5, 1))


def test_coproduct_examples():
    a = (3, 2, 7, 2, 4)
    assert wha_coproduct(a) == LinComb(
        {Tensor((), a): 1, Tensor((1,), (2, 6, 2, 3)): 1, Tensor((3, 2, 6, 2), (1,)): 1, Tensor(a, ()): 1}
    )
    b = (7, 3, 2, 2, 4)
    assert wha_coproduct(b) == LinComb(
        {
            Tensor((), b): 1,
            Tensor((3,), (3, 2, 2, 4)): 1,
            Tensor((4, 1), (2, 2, 3)): 1,
            Tensor((6, 3, 2, 2), (1,)): 1,
            Tensor(b, ()): 1,
        }
    )
    assert wha_coproduct(()) == LinComb.basis(Tensor((), ()))


def test_agrees_with_mpr_on_permutations():
    for s in perms_up_to(4):
        assert wha_coproduct(s) == mpr_coproduct(s)
        for t in perms_up_to(2):
            assert wha_product(s, t) == mpr_product(s, t)


def test_encoding_is_a_subalgebra_map():
    ws = words_up_to(3, 3)
    for a in ws:
        assert dwha_coproduct(encode(a)) == LinComb(
            (Tensor(encode(t.left), encode(t.right)), c) for t, c in wha_coproduct(a).items()
        )
        for b in ws[:13]:
            image = LinComb((encode(w), c) for w, c in wha_product(a, b).items())
            assert dwha_product(encode(a), encode(b)) == image


def test_axioms():
    bounds = {"max_len": 3, "max_height": 3}
    for check in (check_coassoc, check_bialgebra, check_antipode, check_grading):
        assert check(WHA, bounds).passed
