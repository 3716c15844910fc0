from fractions import Fraction
import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from got.algebra import Generator, OperatorExpr, OrderedBlock, SymbolPoly, expr_canonical_eq
from got.parser import MAX_EXPONENT, ParseError, parse, tokenize
from got.printing import expr_from_json, expr_to_json, format_expr

from oracles import ORDERS, random_poly, random_product

A, AD = Generator.A, Generator.AD


def test_spec_examples():
    assert parse("a * ad") == OperatorExpr.of(A, AD)
    expected = OperatorExpr.of(OrderedBlock(SymbolPoly.monomial(2, 1), 1)) + Fraction(3, 2)
    assert parse("{ad^2 a}_N + 3/2") == expected
    block = OrderedBlock(SymbolPoly.monomial(1, 1), Fraction(-1, 2))
    assert parse("{ad a}_{-1/2} * a^3") == OperatorExpr.of(block, A, A, A)


def test_named_and_braced_orders():
    for text, order in [("N", 1), ("A", -1), ("W", 0), ("{1/3}", Fraction(1, 3)), ("-1/2", Fraction(-1, 2))]:
        got = parse(f"{{ad a}}_{text}")
        assert got == OperatorExpr.of(OrderedBlock(SymbolPoly.monomial(1, 1), order))


def test_juxtaposition_parens_and_signs():
    assert parse("a ad") == parse("a*ad")
    assert parse("(a + ad)^2") == parse("a a + a ad + ad a + ad ad")
    assert parse("-a + 2") == OperatorExpr.of(A, coeff=-1) + 2
    assert parse("  a\t*\nad ") == parse("a*ad")
    assert parse("{(ad + a)^2}_0") == parse("{ad^2 + 2 ad a + a^2}_0")


def test_block_bodies_commute():
    assert parse("{a ad}_1") == parse("{ad a}_1")


@pytest.mark.parametrize("text,pos", [
    ("a +", 3),
    ("a * * ad", 4),
    ("{ad a}", 6),
    ("b", 0),
    ("(a", 2),
    ("{ad a}_Q", 7),
])
def test_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.position == pos


def test_unknown_order_name_and_overflow():
    with pytest.raises(ParseError, match="order"):
        parse("{ad a}_Q")
    with pytest.raises(ParseError, match="exponent overflow"):
        parse(f"a^{MAX_EXPONENT + 1}")
    with pytest.raises(ParseError):
        parse("{ {a}_1 }_0")


def test_tokenize_positions():
    kinds = [(kind, pos) for kind, _, pos in tokenize("ad^2 + 3/4")]
    assert kinds[0] == ("name", 0)
    assert [k for k, _ in kinds][-1] == "end"


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_print_parse_round_trip(seed):
    rng = random.Random(seed)
    e = OperatorExpr.zero()
    for _ in range(rng.randint(1, 3)):
        e = e + random_product(rng, max_blocks=3, max_degree=3)
    if rng.random() < 0.5:
        e = e * OperatorExpr.of(rng.choice([A, AD]))
    text = format_expr(e)
    again = parse(text)
    for t in (Fraction(1), Fraction(-1, 2)):
        assert expr_canonical_eq(again, e, t), text


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_json_round_trip(seed):
    rng = random.Random(seed)
    order = rng.choice(ORDERS)
    e = OperatorExpr.zero()
    for _ in range(rng.randint(1, 3)):
        e = e + OperatorExpr.of(OrderedBlock(random_poly(rng), order), coeff=Fraction(rng.randint(1, 7), 3))
    payload = expr_to_json(e)
    restored = expr_from_json(json.loads(json.dumps(payload)))
    assert expr_to_json(restored) == payload
    assert expr_canonical_eq(restored, e, order)


def test_json_schema_shape():
    payload = expr_to_json(parse("{ad a}_N + 3/2"))
    assert payload["order"] == "1"
    assert all(set(t) == {"coeff", "monomials"} for t in payload["terms"])
    mono = payload["terms"][0]["monomials"][0]
    assert set(mono) == {"ad", "a", "coeff"} and isinstance(mono["coeff"], str)
    with pytest.raises(ValueError):
        expr_to_json(parse("{ad}_0 + {a}_1"))
