import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from osculant.catalog import catalog_get
from osculant.errors import (
    DivisionByZeroLiteral,
    ExpressionSyntaxError,
    IndexOutOfRange,
    UnknownVariable,
)
from osculant.exactalg import Poly
from osculant.parser import (
    dump_parametrization,
    format_poly,
    parse_expression,
    parse_parametrization,
    parametrization_to_dict,
)

from conftest import CATALOG


def test_rational_coefficients():
    assert parse_expression("u1^2 + 3/2*u2", 2).terms == {(2, 0): 1, (0, 1): Fraction(3, 2)}


def test_expansion():
    assert parse_expression("u1*(u1+u2)^2", 2).terms == {(3, 0): 1, (2, 1): 2, (1, 2): 1}


def test_whitespace_and_leading_minus():
    assert parse_expression("  - u1 ^ 2 -  2 ", 1).terms == {(2,): -1, (0,): -2}


def test_index_out_of_range():
    with pytest.raises(IndexOutOfRange) as exc:
        parse_expression("u3", 2)
    assert exc.value.position == 0


@pytest.mark.parametrize("text, position", [("u1 +", 4), ("u1 u2", 3), ("(u1", 3), ("u1 $ 2", 3), ("2u1", 1)])
def test_syntax_errors_carry_position(text, position):
    with pytest.raises(ExpressionSyntaxError) as exc:
        parse_expression(text, 2)
    assert exc.value.position == position


def test_unknown_variable():
    with pytest.raises(UnknownVariable):
        parse_expression("x + 1", 1)


def test_zero_denominator_literal():
    with pytest.raises(DivisionByZeroLiteral):
        parse_expression("1/0*u1", 1)


def test_no_implicit_multiplication():
    with pytest.raises(ExpressionSyntaxError):
        parse_expression("(u1)(u2)", 2)


terms = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)),
    st.fractions(min_value=-20, max_value=20, max_denominator=9).filter(bool),
    max_size=6,
)


@given(terms)
def test_print_parse_roundtrip(t):
    p = Poly(2, t)
    assert parse_expression(format_poly(p), 2) == p


@pytest.mark.parametrize("name", CATALOG)
def test_document_roundtrip_is_bit_exact(name):
    p = catalog_get(name).parametrization
    text = dump_parametrization(p)
    q = parse_parametrization(text)
    assert [c.num for c in q.coords] == [c.num for c in p.coords]
    assert dump_parametrization(q) == text


def test_document_validation():
    with pytest.raises(ExpressionSyntaxError):
        parse_parametrization("{not json")
    with pytest.raises(ExpressionSyntaxError):
        parse_parametrization(json.dumps({"k": 1, "N": 2, "coordinates": ["u1"]}))
    with pytest.raises(ExpressionSyntaxError):
        parse_parametrization(json.dumps({"k": 0, "N": 1, "coordinates": ["1"]}))
    with pytest.raises(IndexOutOfRange, match="coordinate 2"):
        parse_parametrization(json.dumps({"k": 1, "N": 2, "coordinates": ["u1", "u2"]}))


def test_document_fields():
    doc = parametrization_to_dict(catalog_get("cone_rnc4").parametrization)
    assert doc == {"name": "cone_rnc4", "k": 2, "N": 4,
                   "coordinates": ["u1", "u1^2", "u1^3", "u1^4 + u2"]}
