"""Ordering engine: reorder, merge and multiply ordered blocks.

Two operators in *different* blocks contract with a weight fixed by their
relative position: a† left of a is relatively normal (u = 1), a left of a† is
relatively anti-normal (u = -1).  A pair inside one ``{...}_s`` is relatively
s-ordered.  Re-expressing a relatively u-ordered pair in t-order costs the
scalar ``(t - u)/2`` per contraction; an i-pair contraction between exponents
p and q occurs ``C(p,i) C(q,i) i!`` times.  The sums below are those counts in
closed form rather than an enumeration of pairings.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .algebra import (
    ANTINORMAL,
    NORMAL,
    Generator,
    OperatorExpr,
    OrderedBlock,
    SymbolPoly,
    order_param,
)


@dataclass(frozen=True)
class ContractionKind:
    relative_order: Fraction

    def value(self, t) -> Fraction:
        return contraction_value(self.relative_order, t)


def contraction_value(relative_order, t) -> Fraction:
    """Scalar left behind by one contraction of a relatively u-ordered pair in t-order."""
    return (order_param(t) - order_param(relative_order)) / 2


def relative_order(left: Generator, right: Generator, block_order=None) -> ContractionKind:
    """Relative order of an (a†, a) pair.

    ``block_order`` is the enclosing ordering parameter when both operators sit
    in the same block; otherwise the answer depends only on which one is left.
    """
    if left is right:
        raise ValueError("only an a/a† pair can be contracted")
    if block_order is not None:
        return ContractionKind(order_param(block_order))
    return ContractionKind(NORMAL if left is Generator.AD else ANTINORMAL)


def pair_count(p: int, q: int, i: int) -> int:
    """Number of ways to pick i disjoint pairs between p and q operators."""
    return comb(p, i) * comb(q, i) * factorial(i)


def _contract_weights(p: int, q: int, tau: Fraction) -> list[tuple[int, Fraction]]:
    if not tau:
        return [(0, Fraction(1))]
    return [(i, pair_count(p, q, i) * tau**i) for i in range(min(p, q) + 1)]


def reorder_poly(poly: SymbolPoly, s, t) -> SymbolPoly:
    """Re-express the s-ordered symbol ``poly`` as a t-ordered symbol."""
    tau = ContractionKind(order_param(s)).value(t)
    if not tau:
        return poly
    out: dict[tuple[int, int], Fraction] = {}
    for (n, m), c in poly.terms.items():
        for i, w in _contract_weights(n, m, tau):
            key = (n - i, m - i)
            out[key] = out.get(key, Fraction(0)) + c * w
    return SymbolPoly(out)


def reorder_block(b: OrderedBlock, t) -> OrderedBlock:
    t = order_param(t)
    if b.order == t:
        return b
    return OrderedBlock(reorder_poly(b.poly, b.order, t), t)


def merge_polys(left: SymbolPoly, right: SymbolPoly, t) -> SymbolPoly:
    """t-ordered symbol of the operator product ``{left}_t {right}_t``.

    Left a's meet right a†'s (relatively anti-normal), and left a†'s meet
    right a's (relatively normal); both kinds contract independently.
    """
    t = order_param(t)
    tau_anti = relative_order(Generator.A, Generator.AD).value(t)
    tau_norm = relative_order(Generator.AD, Generator.A).value(t)
    out: dict[tuple[int, int], Fraction] = {}
    for (p, q), c1 in left.terms.items():
        for (r, u), c2 in right.terms.items():
            c = c1 * c2
            for i, wi in _contract_weights(q, r, tau_anti):
                for j, wj in _contract_weights(p, u, tau_norm):
                    key = (p + r - i - j, q + u - i - j)
                    out[key] = out.get(key, Fraction(0)) + c * wi * wj
    return SymbolPoly(out)


def merge_blocks(left: OrderedBlock, right: OrderedBlock, t) -> OrderedBlock:
    t = order_param(t)
    if left.order != t or right.order != t:
        raise ValueError(
            f"merge_blocks needs both blocks in order {t}, got {left.order} and {right.order}"
        )
    return OrderedBlock(merge_polys(left.poly, right.poly, t), t)


def _factor_poly(factor, t: Fraction) -> SymbolPoly:
    if isinstance(factor, Generator):
        return factor.symbol()
    return reorder_poly(factor.poly, factor.order, t)


def canonical_poly(e: OperatorExpr, t) -> SymbolPoly:
    """The t-ordered symbol of ``e`` as a bare SymbolPoly."""
    t = order_param(t)
    total = SymbolPoly()
    for coeff, factors in e.terms:
        acc = SymbolPoly.constant(coeff)
        for factor in factors:
            acc = merge_polys(acc, _factor_poly(factor, t), t)
        total = total + acc
    return total


def from_poly(poly: SymbolPoly, t) -> OperatorExpr:
    """Wrap a t-ordered symbol as a canonical expression (zero stays empty)."""
    if not poly:
        return OperatorExpr.zero()
    return OperatorExpr.of(OrderedBlock(poly, order_param(t)))


def order_expression(e: OperatorExpr, t) -> OperatorExpr:
    """Rewrite ``e`` as a single t-ordered block.

    Every block is reordered to t, raw generators become one-symbol blocks,
    and each product is folded left to right with :func:`merge_polys`.
    """
    return from_poly(canonical_poly(e, t), t)


def _shift_step(poly: SymbolPoly, g: Generator, tau: Fraction) -> SymbolPoly:
    # g times poly, plus tau times the derivative w.r.t. the conjugate symbol
    if g is Generator.A:
        return poly * g.symbol() + poly.d_ad() * tau
    return poly * g.symbol() + poly.d_a() * tau


def left_multiply_power(g: Generator, n: int, b: OrderedBlock) -> OrderedBlock:
    """s-ordered block equal to ``g**n · b``, via n steps of (g + tau ∂)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    s = b.order
    partner = Generator.AD if g is Generator.A else Generator.A
    tau = relative_order(g, partner).value(s)
    poly = b.poly
    for _ in range(n):
        poly = _shift_step(poly, g, tau)
    return OrderedBlock(poly, s)


def right_multiply_power(b: OrderedBlock, g: Generator, n: int) -> OrderedBlock:
    """s-ordered block equal to ``b · g**n``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    s = b.order
    partner = Generator.AD if g is Generator.A else Generator.A
    tau = relative_order(partner, g).value(s)
    poly = b.poly
    for _ in range(n):
        poly = _shift_step(poly, g, tau)
    return OrderedBlock(poly, s)
