import ast
from fractions import Fraction
from math import factorial
from pathlib import Path
import random

import pytest

import got.bargmann as bargmann
from got.algebra import Generator, OperatorExpr, OrderedBlock, SymbolPoly
from got.bargmann import (
    DegreeOverflowError,
    OracleConfig,
    ZPoly,
    apply_expression,
    apply_generator,
    apply_number_function,
    normal_expansion,
)
from got.parser import parse

from oracles import antinormal_monomial, weyl_monomial, ORDERS


def z(k, c=1):
    return ZPoly.monomial(k, c)


def test_generator_actions():
    assert apply_generator(Generator.A, z(3)) == z(2, 3)
    assert apply_generator(Generator.AD, z(3)) == z(4)
    rng = random.Random(0)
    p = ZPoly([Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(6)])
    comm = apply_generator(Generator.AD, apply_generator(Generator.A, p))
    assert apply_generator(Generator.A, apply_generator(Generator.AD, p)) - comm == p


def test_overflow_is_reported():
    with pytest.raises(DegreeOverflowError):
        apply_generator(Generator.AD, z(4), OracleConfig(4))
    with pytest.raises(ValueError):
        OracleConfig(0)


def test_expression_examples():
    assert apply_expression(parse("{ad a}_1"), z(2)) == z(2, 2)
    for n in range(5):
        anti = OperatorExpr.of(OrderedBlock(SymbolPoly.monomial(n, n), -1))
        for k in range(6):
            assert apply_expression(anti, z(k)) == z(k, factorial(k + n) // factorial(k))
    assert apply_expression(parse("{ad^2 a^2}_N"), z(3)) == z(3, 6)


def test_words_act_right_to_left():
    # a a† z^k = (k+1) z^k,   a† a z^k = k z^k
    assert apply_expression(parse("a ad"), z(3)) == z(3, 4)
    assert apply_expression(parse("ad a"), z(3)) == z(3, 3)


def test_number_function():
    p = ZPoly([1, 2, 3])
    assert apply_number_function(1, p) == p
    assert apply_number_function(3, z(2)) == z(2, 9)
    assert apply_number_function(Fraction(1, 2), z(0)) == z(0)


def test_linearity():
    rng = random.Random(1)
    e = parse("{ad^2 a - 3 a^2}_{1/2} * a + {ad a}_0 * ad")
    for _ in range(10):
        p = ZPoly([rng.randint(-3, 3) for _ in range(5)])
        q = ZPoly([rng.randint(-3, 3) for _ in range(5)])
        alpha, beta = Fraction(rng.randint(-3, 3), 2), Fraction(rng.randint(1, 3))
        lhs = apply_expression(e, p * alpha + q * beta)
        assert lhs == apply_expression(e, p) * alpha + apply_expression(e, q) * beta


@pytest.mark.parametrize("n,m", [(n, m) for n in range(4) for m in range(4)])
def test_block_grounding_at_named_orders(n, m):
    poly = SymbolPoly.monomial(n, m)
    assert normal_expansion(poly, 0) == weyl_monomial(n, m)
    assert normal_expansion(poly, -1) == antinormal_monomial(n, m)
    assert normal_expansion(poly, 1) == {(n, m): 1}


def test_oracle_does_not_use_the_engine():
    tree = ast.parse(Path(bargmann.__file__).read_text())
    imported = {node.module for node in ast.walk(tree) if isinstance(node, ast.ImportFrom)}
    assert "engine" not in imported and "got.engine" not in imported
    assert "series" not in imported and "identities" not in imported


def test_probe_set_is_faithful():
    # two different operators of degree ≤ d are told apart by z^0..z^d
    e1 = parse("{ad a^2}_N")
    e2 = parse("{ad a^2}_N + {a^2}_N")
    assert not bargmann.same_action(e1, e2)
    assert bargmann.same_action(parse("a ad"), parse("ad a + 1"))
