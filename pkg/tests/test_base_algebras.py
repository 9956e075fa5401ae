import pytest

from wordhopf.base_algebras import (
    NSYMM,
    SHUFFLE,
    nsymm_coproduct,
    nsymm_product,
    shuffle_antipode,
    shuffle_coproduct,
    shuffle_product,
    weight,
)
from wordhopf.hopf import antipode, check_antipode, check_bialgebra, check_coassoc, check_grading
from wordhopf.lincomb import LinComb, Tensor
from wordhopf.words import compositions_up_to


def T(a, b, c=1):
    return LinComb.basis(Tensor(a, b), c)


def test_shuffle_product_examples():
    assert shuffle_product((1,), (1, 1, 1)) == LinComb.basis((1, 1, 1, 1), 4)
    assert shuffle_product((), (3, 1)) == LinComb.basis((3, 1))


def test_shuffle_coproduct_examples():
    w = (4, 3, 5, 1)
    expected = T((), w) + T((4,), (3, 5, 1)) + T((4, 3), (5, 1)) + T((4, 3, 5), (1,)) + T(w, ())
    assert shuffle_coproduct(w) == expected
    assert shuffle_coproduct(()) == T((), ())
    assert shuffle_coproduct((7,)) == T((), (7,)) + T((7,), ())


def test_shuffle_antipode_closed_form():
    assert shuffle_antipode((4, 3, 5, 1)) == LinComb.basis((1, 5, 3, 4))
    assert shuffle_antipode(()) == LinComb.basis(())
    assert shuffle_antipode((2,)) == LinComb.basis((2,), -1)


@pytest.mark.parametrize("w", compositions_up_to(6))
def test_recursive_antipode_matches_closed_form(w):
    assert antipode(SHUFFLE, w) == shuffle_antipode(w)


def test_weight():
    assert weight((7, 4, 2, 6, 1)) == 20


def test_nsymm_product():
    assert nsymm_product((2, 1), (3,)) == LinComb.basis((2, 1, 3))
    assert nsymm_product((), (5,)) == LinComb.basis((5,))


def test_nsymm_coproduct_examples():
    assert nsymm_coproduct((1,)) == T((1,), ()) + T((), (1,))
    assert nsymm_coproduct((2,)) == T((2,), ()) + T((1,), (1,)) + T((), (2,))
    assert nsymm_coproduct((1, 1)) == T((1, 1), ()) + T((1,), (1,), 2) + T((), (1, 1))
    assert nsymm_coproduct(()) == T((), ())


def test_nsymm_coproduct_of_generator_sums_over_splits():
    for n in range(1, 7):
        expected = LinComb(
            (Tensor(tuple([i]) if i else (), tuple([n - i]) if n - i else ()), 1) for i in range(n + 1)
        )
        assert nsymm_coproduct((n,)) == expected


def test_nsymm_stack_monomial_degree():
    assert NSYMM.degree((7, 4, 2, 6, 1)) == 20
    assert NSYMM.show((7, 4, 2, 6, 1)) == "Z[7,4,2,6,1]"


@pytest.mark.parametrize("h,bounds", [(SHUFFLE, {"max_weight": 5}), (NSYMM, {"max_weight": 4})])
def test_axioms(h, bounds):
    for check in (check_coassoc, check_bialgebra, check_antipode, check_grading):
        r = check(h, bounds)
        assert r.passed, r.lines()[:3]
        assert r.checked > 0
