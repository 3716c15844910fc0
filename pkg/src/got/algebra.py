"""Exact scalars, commuting symbol polynomials and noncommutative operator expressions.

Everything here is immutable.  Scalars are :class:`fractions.Fraction`; an
ordering parameter is just a Fraction (``NORMAL``, ``ANTINORMAL`` and ``WEYL``
are the named values).  A :class:`SymbolPoly` is a polynomial in the
*commuting* symbols a† and a, which is what lives inside an ordering symbol
``{...}_s``.  An :class:`OperatorExpr` is a Rational-weighted sum of
noncommutative products of ordered blocks and raw generators.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from types import MappingProxyType
from typing import Iterator, Mapping, Tuple, Union

Rational = Fraction

NORMAL = Fraction(1)
ANTINORMAL = Fraction(-1)
WEYL = Fraction(0)

NAMED_ORDERS = MappingProxyType({"N": NORMAL, "A": ANTINORMAL, "W": WEYL})


def order_param(value) -> Fraction:
    """Coerce ``N``/``A``/``W``, ints, Fractions or ``"p/q"`` strings to an ordering parameter.

    Floats are refused; they are not exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("ordering parameter cannot be a bool")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if text.startswith("{") and text.endswith("}"):
            text = text[1:-1].strip()
        if text in NAMED_ORDERS:
            return NAMED_ORDERS[text]
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"unknown ordering parameter {value!r}") from None
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction or a 'p/q' string")
    raise TypeError(f"cannot interpret {value!r} as an ordering parameter")


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


Key = Tuple[int, int]


class _Poly2:
    """Sparse polynomial in two commuting variables with exact coefficients."""

    __slots__ = ("_terms", "_hash")
    allow_negative = False

    def __init__(self, terms: Mapping[Key, object] | None = None):
        clean: dict[Key, Fraction] = {}
        for key, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if not coeff:
                continue
            k, l = int(key[0]), int(key[1])
            if not self.allow_negative and (k < 0 or l < 0):
                raise ValueError(f"negative exponent in {type(self).__name__}: {key}")
            clean[(k, l)] = clean.get((k, l), Fraction(0)) + coeff
        self._terms = {k: c for k, c in clean.items() if c}
        self._hash = None

    @classmethod
    def monomial(cls, k: int, l: int, coeff=1):
        return cls({(k, l): coeff})

    @classmethod
    def constant(cls, coeff):
        return cls({(0, 0): coeff})

    @property
    def terms(self) -> Mapping[Key, Fraction]:
        return MappingProxyType(self._terms)

    def items(self):
        """Terms sorted lexicographically by exponent pair."""
        return sorted(self._terms.items())

    def coeff(self, k: int, l: int) -> Fraction:
        return self._terms.get((k, l), Fraction(0))

    def __iter__(self) -> Iterator[Key]:
        return iter(sorted(self._terms))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_scalar(self) -> bool:
        return all(key == (0, 0) for key in self._terms)

    def __eq__(self, other):
        if isinstance(other, _Poly2):
            return type(self) is type(other) and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({(0, 0): Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, (int, Fraction)):
            return type(self).constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return type(self)(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return type(self)({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, type(self)):
            return NotImplemented
        out: dict[Key, Fraction] = {}
        for (k1, l1), c1 in self._terms.items():
            for (k2, l2), c2 in other._terms.items():
                key = (k1 + k2, l1 + l2)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return type(self)(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        scalar = Fraction(scalar)
        return type(self)({k: c / scalar for k, c in self._terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = type(self).constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def diff(self, var: int, times: int = 1):
        """Formal partial derivative in variable 0 or 1."""
        out: dict[Key, Fraction] = {}
        for key, c in self._terms.items():
            e = key[var]
            if e < times and not self.allow_negative:
                continue
            fall = 1
            for j in range(times):
                fall *= e - j
            if not fall:
                continue
            new = list(key)
            new[var] -= times
            out[tuple(new)] = c * fall
        return type(self)(out)

    def __repr__(self):
        return f"{type(self).__name__}({dict(self.items())!r})"


class SymbolPoly(_Poly2):
    """Commutative polynomial in (a†, a); keys are ``(adExponent, aExponent)``."""

    __slots__ = ()

    def d_ad(self, times: int = 1) -> "SymbolPoly":
        return self.diff(0, times)

    def d_a(self, times: int = 1) -> "SymbolPoly":
        return self.diff(1, times)

    def excess(self) -> set[int]:
        """Set of a†-excess values (adExp - aExp) over all monomials."""
        return {k - l for k, l in self._terms}

    def degree(self) -> int:
        return max((k + l for k, l in self._terms), default=0)

    def __str__(self):
        from .printing import format_poly

        return format_poly(self)


AD_SYMBOL = SymbolPoly.monomial(1, 0)
A_SYMBOL = SymbolPoly.monomial(0, 1)


def poly_mul(p: SymbolPoly, q: SymbolPoly) -> SymbolPoly:
    return p * q


class Generator(Enum):
    A = "a"
    AD = "ad"

    def symbol(self) -> SymbolPoly:
        return A_SYMBOL if self is Generator.A else AD_SYMBOL

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class OrderedBlock:
    """A commutative polynomial wrapped in an ordering symbol ``{poly}_order``."""

    poly: SymbolPoly
    order: Fraction

    def __post_init__(self):
        object.__setattr__(self, "order", order_param(self.order))
        if not isinstance(self.poly, SymbolPoly):
            raise TypeError("OrderedBlock.poly must be a SymbolPoly")
        if not self.poly:
            raise ValueError("an ordered block cannot hold the zero polynomial")

    def __str__(self):
        from .printing import format_block

        return format_block(self)


Factor = Union[OrderedBlock, Generator]
Term = Tuple[Fraction, Tuple[Factor, ...]]


@dataclass(frozen=True)
class OperatorExpr:
    """Sum of Rational-weighted noncommutative products.

    Like factor sequences are collected and zero terms dropped on construction,
    otherwise the structure is kept as given.  ``OperatorExpr(())`` is zero and
    a term with an empty factor tuple is a scalar.
    """

    terms: Tuple[Term, ...] = ()

    def __post_init__(self):
        collected: dict[tuple, Fraction] = {}
        for coeff, factors in self.terms:
            factors = tuple(factors)
            for f in factors:
                if not isinstance(f, (OrderedBlock, Generator)):
                    raise TypeError(f"bad factor {f!r}")
            collected[factors] = collected.get(factors, Fraction(0)) + Fraction(coeff)
        object.__setattr__(
            self, "terms", tuple((c, f) for f, c in collected.items() if c)
        )

    @classmethod
    def of(cls, *factors: Factor, coeff=1) -> "OperatorExpr":
        return cls(((Fraction(coeff), factors),))

    @classmethod
    def scalar(cls, value) -> "OperatorExpr":
        return cls(((Fraction(value), ()),))

    @classmethod
    def zero(cls) -> "OperatorExpr":
        return cls(())

    def is_zero(self) -> bool:
        return not self.terms

    def _coerce(self, other):
        if isinstance(other, OperatorExpr):
            return other
        if isinstance(other, (int, Fraction)):
            return OperatorExpr.scalar(other)
        if isinstance(other, (OrderedBlock, Generator)):
            return OperatorExpr.of(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return OperatorExpr(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return OperatorExpr(tuple((-c, f) for c, f in self.terms))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return OperatorExpr(tuple((c * other, f) for c, f in self.terms))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return OperatorExpr(
            tuple((c1 * c2, f1 + f2) for c1, f1 in self.terms for c2, f2 in other.terms)
        )

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of an operator expression")
        result = OperatorExpr.scalar(1)
        for _ in range(n):
            result = result * self
        return result

    def __str__(self):
        from .printing import format_expr

        return format_expr(self)


def expr_canonical_eq(e1: OperatorExpr, e2: OperatorExpr, t) -> bool:
    """True iff both expressions have the same t-ordered canonical form."""
    from .engine import canonical_poly

    t = order_param(t)
    return canonical_poly(e1, t) == canonical_poly(e2, t)
