import json

import pytest
from hypothesis import given, strategies as st

from wordhopf.cli import ALGEBRAS, parse_element
from wordhopf.dwha import canonicalize, enumerate_substitutions
from wordhopf.lincomb import LinComb, Tensor
from wordhopf.mpr import perms_up_to
from wordhopf.text import ParseError, format_lincomb, lincomb_to_json, parse_raw, parse_word
from wordhopf.words import words_up_to


def test_format_conventions():
    x = LinComb({(1, 2): 1, (2,): -3, (1,): 2})
    assert format_lincomb(x) == "[1,2] + 2*[1] - 3*[2]"
    assert format_lincomb(LinComb({(1,): -1})) == "-[1]"
    assert format_lincomb(LinComb()) == "0"


def test_json_keeps_big_coefficients_exact():
    big = 10**40 + 7
    data = json.loads(lincomb_to_json(LinComb({(1,): big})))
    assert data == {"terms": [{"coeff": str(big), "basis": "[1]"}]}


def test_parse_raw_shapes():
    assert parse_raw("0") == []
    assert parse_raw("1") == [(1, [("unit", None)])]
    assert parse_raw("-2*[1,2] (x) 1 + Z[3]") == [
        (-2, [("word", (1, 2)), ("unit", None)]),
        (1, [("nsymm", (3,))]),
    ]
    assert parse_raw("{[2,1]/[1]}") == [(1, [("subst", ((2, 1), (1,)))])]
    assert parse_word("[]") == ()


@pytest.mark.parametrize("bad", ["[1", "[1,]", "1 +", "{[1]/}", "[0]", "[1] [2]", "3*", "x", ""])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_raw(bad)


def _roundtrip(algebra, x, tensors=False):
    h = ALGEBRAS[algebra]
    assert parse_element(algebra, format_lincomb(x, h.show), tensors=tensors) == x


@pytest.mark.parametrize("algebra", ["shuffle", "wha"])
def test_roundtrip_word_algebras(algebra):
    h = ALGEBRAS[algebra]
    ws = words_up_to(2, 3)
    for a in ws:
        for b in ws:
            _roundtrip(algebra, h.product(a, b))
        _roundtrip(algebra, h.coproduct(a), tensors=True)
        _roundtrip(algebra, h.antipode(a))


def test_roundtrip_mpr_nsymm_dwha():
    for s in perms_up_to(3):
        _roundtrip("mpr", ALGEBRAS["mpr"].coproduct(s), tensors=True)
        _roundtrip("mpr", ALGEBRAS["mpr"].antipode(s))
    for z in ALGEBRAS["nsymm"].basis(3):
        _roundtrip("nsymm", ALGEBRAS["nsymm"].coproduct(z), tensors=True)
        _roundtrip("nsymm", ALGEBRAS["nsymm"].antipode(z))
    dw = ALGEBRAS["dwha"]
    for p in enumerate_substitutions(2, 2, 2):
        _roundtrip("dwha", dw.coproduct(p), tensors=True)
        _roundtrip("dwha", dw.product(p, p))


@given(st.dictionaries(st.lists(st.integers(1, 9), max_size=3).map(tuple), st.integers(-10**6, 10**6), max_size=5))
def test_roundtrip_arbitrary_combinations(d):
    _roundtrip("shuffle", LinComb(d))


def test_substitutions_parse_canonically():
    assert parse_element("dwha", "{[7,6,7,2,2,7,5]/[6,2,6,5,7]}") == LinComb.basis(
        canonicalize((7, 6, 7, 2, 2, 7, 5), (6, 2, 6, 5, 7))
    )


def test_tensor_parse():
    x = parse_element("mpr", "1 (x) [1] + 2*[1] (x) 1", tensors=True)
    assert x == LinComb({Tensor((), (1,)): 1, Tensor((1,), ()): 2})
