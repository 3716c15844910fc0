"""Parser for the ASCII operator language.

Grammar (whitespace-insensitive, juxtaposition means ``*``)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*'? factor)*
    factor := atom ('^' nat)?
    atom   := rational | 'a' | 'ad' | '{' expr '}' '_' order | '(' expr ')'
    order  := ['-'] rational | 'N' | 'A' | 'W' | '{' (['-'] rational | 'N' | 'A' | 'W') '}'

``ad`` is a†.  Inside ``{...}`` the symbols commute and blocks may not nest.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .algebra import (
    NAMED_ORDERS,
    Generator,
    OperatorExpr,
    OrderedBlock,
    SymbolPoly,
)

MAX_EXPONENT = 10_000


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Sym:
    gen: Generator


@dataclass(frozen=True)
class Block:
    body: "Node"
    order: Fraction
    position: int


@dataclass(frozen=True)
class Add:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class Mul:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


Node = Union[Num, Sym, Block, Add, Neg, Mul, Pow]

_TOKEN = re.compile(r"(\d+)|([A-Za-z]+)|(.)", re.S)


def tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m.group(1) is not None:
            tokens.append(("num", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^(){}_":
                raise ParseError(f"unexpected character {ch!r}", m.start(3))
            tokens.append(("op", ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept(self, value: str) -> bool:
        if self.tok[0] == "op" and self.tok[1] == value:
            self.i += 1
            return True
        return False

    def expect(self, value: str):
        if not self.accept(value):
            kind, text, pos = self.tok
            found = "end of input" if kind == "end" else repr(text)
            raise ParseError(f"expected {value!r}, found {found}", pos)

    def parse(self) -> Node:
        node = self.expr()
        if self.tok[0] != "end":
            raise ParseError(f"unexpected {self.tok[1]!r}", self.tok[2])
        return node

    def expr(self) -> Node:
        if self.accept("-"):
            node: Node = Neg(self.term())
        else:
            self.accept("+")
            node = self.term()
        while True:
            if self.accept("+"):
                node = Add(node, self.term())
            elif self.accept("-"):
                node = Add(node, Neg(self.term()))
            else:
                return node

    def _starts_factor(self) -> bool:
        kind, text, _ = self.tok
        return kind in ("num", "name") or (kind == "op" and text in "({")

    def term(self) -> Node:
        node = self.factor()
        while True:
            if self.accept("*"):
                node = Mul(node, self.factor())
            elif self._starts_factor():
                node = Mul(node, self.factor())
            else:
                return node

    def factor(self) -> Node:
        node = self.atom()
        if self.accept("^"):
            kind, text, pos = self.advance()
            if kind != "num":
                raise ParseError("expected a non-negative integer exponent", pos)
            n = int(text)
            if n > MAX_EXPONENT:
                raise ParseError(f"exponent overflow ({n} > {MAX_EXPONENT})", pos)
            node = Pow(node, n)
        return node

    def rational(self) -> Fraction:
        kind, text, pos = self.advance()
        if kind != "num":
            raise ParseError("expected a number", pos)
        num = int(text)
        if self.accept("/"):
            kind, text, pos = self.advance()
            if kind != "num":
                raise ParseError("expected a denominator", pos)
            if int(text) == 0:
                raise ParseError("zero denominator", pos)
            return Fraction(num, int(text))
        return Fraction(num)

    def atom(self) -> Node:
        kind, text, pos = self.tok
        if kind == "num":
            return Num(self.rational())
        if kind == "name":
            self.advance()
            if text == "a":
                return Sym(Generator.A)
            if text == "ad":
                return Sym(Generator.AD)
            raise ParseError(f"unknown symbol {text!r}", pos)
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        if self.accept("{"):
            body = self.expr()
            self.expect("}")
            self.expect("_")
            return Block(body, self.order(), pos)
        found = "end of input" if kind == "end" else repr(text)
        raise ParseError(f"unexpected {found}", pos)

    def order(self) -> Fraction:
        if self.accept("{"):
            value = self._order_value()
            self.expect("}")
            return value
        return self._order_value()

    def _order_value(self) -> Fraction:
        kind, text, pos = self.tok
        if kind == "name":
            self.advance()
            if text not in NAMED_ORDERS:
                raise ParseError(f"unknown order name {text!r}", pos)
            return NAMED_ORDERS[text]
        sign = -1 if self.accept("-") else 1
        return sign * self.rational()


def parse_ast(text: str) -> Node:
    return _Parser(text).parse()


def lower_symbols(node: Node) -> SymbolPoly:
    """Evaluate a block body as a commutative polynomial."""
    if isinstance(node, Num):
        return SymbolPoly.constant(node.value)
    if isinstance(node, Sym):
        return node.gen.symbol()
    if isinstance(node, Add):
        return lower_symbols(node.left) + lower_symbols(node.right)
    if isinstance(node, Neg):
        return -lower_symbols(node.operand)
    if isinstance(node, Mul):
        return lower_symbols(node.left) * lower_symbols(node.right)
    if isinstance(node, Pow):
        return lower_symbols(node.base) ** node.exponent
    raise ParseError("ordering symbols cannot be nested", node.position)


def lower(node: Node) -> OperatorExpr:
    if isinstance(node, Num):
        return OperatorExpr.scalar(node.value)
    if isinstance(node, Sym):
        return OperatorExpr.of(node.gen)
    if isinstance(node, Block):
        poly = lower_symbols(node.body)
        return OperatorExpr.of(OrderedBlock(poly, node.order)) if poly else OperatorExpr.zero()
    if isinstance(node, Add):
        return lower(node.left) + lower(node.right)
    if isinstance(node, Neg):
        return -lower(node.operand)
    if isinstance(node, Mul):
        return lower(node.left) * lower(node.right)
    if isinstance(node, Pow):
        return lower(node.base) ** node.exponent
    raise TypeError(f"unknown node {node!r}")


def parse(text: str) -> OperatorExpr:
    return lower(parse_ast(text))
