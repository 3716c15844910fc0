from fractions import Fraction
import random

import pytest
from hypothesis import given, settings, strategies as st

from got.algebra import (
    ANTINORMAL,
    NORMAL,
    WEYL,
    Generator,
    OperatorExpr,
    OrderedBlock,
    SymbolPoly,
    expr_canonical_eq,
    order_param,
    poly_mul,
)
from got.parser import parse

AD = SymbolPoly.monomial(1, 0)
A = SymbolPoly.monomial(0, 1)

rationals = st.fractions(max_denominator=7).filter(lambda q: abs(q) < 50)
keys = st.tuples(st.integers(0, 4), st.integers(0, 4))
polys = st.dictionaries(keys, rationals, max_size=5).map(SymbolPoly)


def test_poly_mul_examples():
    assert poly_mul(AD * A, SymbolPoly.constant(1)) == AD * A
    assert poly_mul(AD + A, AD - A) == SymbolPoly({(2, 0): 1, (0, 2): -1})
    assert poly_mul(AD * 2, A * 3) == SymbolPoly.monomial(1, 1, 6)


def test_no_zero_coefficients_stored():
    p = SymbolPoly({(1, 0): 1, (0, 1): 0}) + SymbolPoly({(1, 0): -1})
    assert not p
    assert dict(p.terms) == {}


def test_derivatives():
    p = SymbolPoly({(3, 2): 2, (0, 1): 5})
    assert p.d_ad() == SymbolPoly({(2, 2): 6})
    assert p.d_a() == SymbolPoly({(3, 1): 4, (0, 0): 5})
    assert p.d_ad(4) == SymbolPoly()


@given(polys, polys, polys)
def test_symbol_polys_form_a_commutative_ring(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p - p == SymbolPoly()


@given(st.integers(-10**30, 10**30), st.integers(1, 10**30),
       st.integers(-10**30, 10**30), st.integers(1, 10**30))
def test_rational_sum_matches_cross_multiplication(p, q, r, s):
    total = Fraction(p, q) + Fraction(r, s)
    # independent route: unreduced big-integer cross multiplication
    num, den = p * s + r * q, q * s
    assert total.numerator * den == num * total.denominator
    assert total.denominator > 0


def test_order_param_names_and_strings():
    assert order_param("N") == NORMAL == 1
    assert order_param("A") == ANTINORMAL == -1
    assert order_param("W") == WEYL == 0
    assert order_param("-1/2") == Fraction(-1, 2)
    assert order_param("{3/4}") == Fraction(3, 4)
    assert order_param(7) == 7  # outside [-1, 1] is allowed
    with pytest.raises(ValueError):
        order_param("Q")
    with pytest.raises(TypeError):
        order_param(0.5)


def test_block_rejects_zero_poly():
    with pytest.raises(ValueError):
        OrderedBlock(SymbolPoly(), 1)


def test_block_is_immutable_and_hashable():
    b = OrderedBlock(AD * A, "W")
    assert b.order == 0
    assert hash(b) == hash(OrderedBlock(A * AD, 0))
    with pytest.raises(AttributeError):
        b.order = 1


def test_operator_expr_collects_like_terms():
    e = OperatorExpr.of(Generator.A) + OperatorExpr.of(Generator.A) * 2 - 3 * OperatorExpr.of(Generator.A)
    assert e.is_zero()
    word = OperatorExpr.of(Generator.A) * OperatorExpr.of(Generator.AD)
    assert word.terms == ((Fraction(1), (Generator.A, Generator.AD)),)
    assert OperatorExpr.scalar(1) ** 0 == OperatorExpr.scalar(1)


@pytest.mark.parametrize(
    "left,right,t,expected",
    [
        ("a ad", "ad a + 1", 1, True),
        ("a", "a", 1, True),
        ("a", "a", Fraction(-1, 2), True),
        ("{ad a}_0", "ad a", 1, False),
        ("{ad a}_0", "ad a + 1/2", 1, True),
    ],
)
def test_expr_canonical_eq_examples(left, right, t, expected):
    assert expr_canonical_eq(parse(left), parse(right), t) is expected


def test_canonical_eq_is_an_equivalence_relation():
    rng = random.Random(7)
    pool = [parse(s) for s in ("a ad", "ad a + 1", "{ad a}_0 + 1/2", "{ad a}_1 + 1", "a", "{a}_1/2", "ad")]
    pool += [parse("{ad^2 a}_{1/2}"), parse("{ad^2 a}_N + 1/2 ad")]
    for t in (Fraction(-1), Fraction(0), Fraction(1, 2)):
        for x in pool:
            assert expr_canonical_eq(x, x, t)
        for _ in range(40):
            x, y, z = (rng.choice(pool) for _ in range(3))
            assert expr_canonical_eq(x, y, t) == expr_canonical_eq(y, x, t)
            if expr_canonical_eq(x, y, t) and expr_canonical_eq(y, z, t):
                assert expr_canonical_eq(x, z, t)
