import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from combhopf.element import Element, Tensor2
from combhopf.errors import ParseError, UnknownAlgebraError
from combhopf.render import (
    element_json,
    parse_expression,
    parse_scalar,
    render_element,
    render_tensor,
    tensor_json,
)
from combhopf.scalar import Q, QPoly

from conftest import el, tens


def test_scalars():
    assert parse_scalar("3") == 3
    assert parse_scalar("-2/4") == parse_scalar("-1/2")
    assert parse_scalar("q^3") == QPoly([0, 0, 0, 1])
    assert parse_scalar("q") == Q
    assert parse_scalar("(1+q)^2") == QPoly([1, 2, 1])


@pytest.mark.parametrize("bad", ["", "x", "q/2", "sqrt(2)", "1/"])
def test_bad_scalars(bad):
    with pytest.raises(ParseError):
        parse_scalar(bad)


def test_term_format():
    x = el("2*M[EQSym]:1,1 - M[EQSym]:2,1 + 3", "EQSym")
    assert render_element(x) == "3 + 2*M:1,1 - M:2,1"
    t = tens("FQSym_q", ("q", "1", "1"), (1, "", "21"))
    assert render_tensor(t) == "1 (x) F:2,1 + q*F:1 (x) F:1"
    assert render_element(Element("EQSym")) == "0"


def test_default_algebra_and_errors():
    x = parse_expression("M:1,2", default_algebra="EQSym")
    assert x.algebra == "EQSym"
    with pytest.raises(ParseError):
        parse_expression("M:1")  # ambiguous basis name
    with pytest.raises(UnknownAlgebraError):
        parse_expression("M[Nope]:1")
    with pytest.raises(ParseError):
        parse_expression("")
    with pytest.raises(ParseError):
        parse_expression("phi[PhiSym]:(12")


def test_json_is_stable():
    x = el("M[EQSym]:1,1 + q*M[EQSym]:2,1", "EQSym")
    a = json.dumps(element_json(x), sort_keys=True)
    b = json.dumps(element_json(el("q*M[EQSym]:2,1 + M[EQSym]:1,1", "EQSym")), sort_keys=True)
    assert a == b
    t = tens("EQSym", (1, "1", "1"), (2, "", "11"))
    payload = tensor_json(t)
    assert payload["algebra"] == ["EQSym", "EQSym"]
    assert {tuple(term["key"]) for term in payload["terms"]} == {("1", "1"), ("", "1,1")}


endofunctions = st.integers(1, 4).flatmap(lambda n: st.lists(st.integers(1, n), min_size=n, max_size=n).map(tuple))
coeffs = st.one_of(
    st.integers(-5, 5).filter(bool),
    st.fractions(min_value=-3, max_value=3, max_denominator=5).filter(bool),
    st.lists(st.integers(-3, 3), min_size=1, max_size=4).map(QPoly).filter(bool),
)


@settings(max_examples=80, deadline=None)
@given(st.dictionaries(endofunctions, coeffs, max_size=5), st.integers(-3, 3))
def test_roundtrip(terms, unit):
    x = Element("EQSym", terms) + Element("EQSym", {(): unit})
    text = render_element(x)
    assert parse_expression(text, default_algebra="EQSym") == x
