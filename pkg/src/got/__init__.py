"""Exact ordering of bosonic operator products across s-parameterized orderings."""
from .algebra import (
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
from .engine import (
    canonical_poly,
    left_multiply_power,
    merge_blocks,
    order_expression,
    reorder_block,
    right_multiply_power,
)
from .parser import parse

__all__ = [
    "ANTINORMAL",
    "NORMAL",
    "WEYL",
    "Generator",
    "OperatorExpr",
    "OrderedBlock",
    "SymbolPoly",
    "canonical_poly",
    "expr_canonical_eq",
    "left_multiply_power",
    "merge_blocks",
    "order_expression",
    "order_param",
    "parse",
    "poly_mul",
    "reorder_block",
    "right_multiply_power",
]
