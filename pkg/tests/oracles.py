"""Independent reference implementations used to derive expected values.

Nothing here imports the ordering engine.  Words are tuples of "a"/"ad";
results are normal-ordered coefficient dicts {(adExp, aExp): Fraction}.
"""
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial
import random

from got.algebra import Generator, OperatorExpr, OrderedBlock, SymbolPoly

ORDERS = [Fraction(-1), Fraction(-1, 2), Fraction(0), Fraction(1, 2), Fraction(1)]


@lru_cache(maxsize=None)
def _normal_word(word):
    for i in range(len(word) - 1):
        if word[i] == "a" and word[i + 1] == "ad":
            swapped = word[:i] + ("ad", "a") + word[i + 2:]
            contracted = word[:i] + word[i + 2:]
            out = dict(_normal_word(swapped))
            for key, c in dict(_normal_word(contracted)).items():
                out[key] = out.get(key, 0) + c
            return tuple(sorted((k, c) for k, c in out.items() if c))
    return (((word.count("ad"), word.count("a")), 1),)


def naive_normal(word) -> dict:
    """Normal-order a word by repeatedly rewriting a·a† -> a†·a + 1."""
    return {k: Fraction(c) for k, c in _normal_word(tuple(word))}


def naive_normal_sum(words_with_coeffs) -> dict:
    out = {}
    for coeff, word in words_with_coeffs:
        for key, c in naive_normal(word).items():
            out[key] = out.get(key, 0) + coeff * c
    return {k: c for k, c in out.items() if c}


def weyl_monomial(n_ad: int, n_a: int) -> dict:
    """Symmetrized a†ⁿaᵐ: average over every arrangement of the letters, normal-ordered."""
    letters = ("ad",) * n_ad + ("a",) * n_a
    words = set(permutations(letters))
    weight = Fraction(1, len(words))
    return naive_normal_sum((weight, w) for w in words)


def antinormal_monomial(n_ad: int, n_a: int) -> dict:
    return naive_normal(("a",) * n_a + ("ad",) * n_ad)


def as_dict(poly: SymbolPoly) -> dict:
    return dict(poly.terms)


def word_expr(word) -> OperatorExpr:
    return OperatorExpr.of(*[Generator.AD if w == "ad" else Generator.A for w in word])


def random_poly(rng: random.Random, max_degree: int = 5, max_terms: int = 3) -> SymbolPoly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        total = rng.randint(0, max_degree)
        k = rng.randint(0, total)
        terms[(k, total - k)] = Fraction(rng.randint(-4, 4) or 1, rng.randint(1, 3))
    poly = SymbolPoly(terms)
    return poly if poly else SymbolPoly.constant(1)


def random_block(rng, max_degree=5, orders=ORDERS) -> OrderedBlock:
    return OrderedBlock(random_poly(rng, max_degree), rng.choice(orders))


def random_product(rng, max_blocks=4, max_degree=5) -> OperatorExpr:
    blocks = [random_block(rng, max_degree) for _ in range(rng.randint(1, max_blocks))]
    return OperatorExpr.of(*blocks, coeff=Fraction(rng.randint(1, 5), rng.randint(1, 3)))


def random_word(rng, max_len=10):
    return tuple(rng.choice(("a", "ad")) for _ in range(rng.randint(0, max_len)))


def falling(k, n):
    return factorial(k) // factorial(k - n) if n <= k else 0
