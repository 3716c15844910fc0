"""Truncated power series in one formal parameter with operator coefficients.

Coefficients are kept as canonical t-ordered expressions for a fixed working
order, so comparing two series is plain data comparison.  Products respect
operator order: in ``f * g`` every coefficient of f stands left of g's.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .algebra import OperatorExpr, SymbolPoly, order_param
from .engine import canonical_poly, from_poly, merge_polys

DEFAULT_ORDER = 8


class SeriesError(ValueError):
    pass


class TruncatedSeries:
    __slots__ = ("order", "polys")

    def __init__(self, coeffs: Sequence, truncation: int, order=1):
        """``coeffs`` may hold OperatorExprs, SymbolPolys (read as t-ordered symbols) or scalars."""
        if truncation < 0:
            raise SeriesError("truncation order must be non-negative")
        self.order = order_param(order)
        polys = []
        for c in list(coeffs)[: truncation + 1]:
            if isinstance(c, OperatorExpr):
                polys.append(canonical_poly(c, self.order))
            elif isinstance(c, SymbolPoly):
                polys.append(c)
            else:
                polys.append(SymbolPoly.constant(c))
        polys += [SymbolPoly()] * (truncation + 1 - len(polys))
        self.polys = tuple(polys)

    @classmethod
    def scalar(cls, values: Sequence, truncation: int, order=1) -> "TruncatedSeries":
        return cls([Fraction(v) for v in values], truncation, order)

    @classmethod
    def constant(cls, value, truncation: int, order=1) -> "TruncatedSeries":
        return cls([value], truncation, order)

    @classmethod
    def variable(cls, truncation: int, order=1, scale=1) -> "TruncatedSeries":
        """The series ``scale·λ``."""
        return cls([0, Fraction(scale)], truncation, order)

    @property
    def truncation(self) -> int:
        return len(self.polys) - 1

    @property
    def coeffs(self) -> tuple[OperatorExpr, ...]:
        return tuple(from_poly(p, self.order) for p in self.polys)

    def __getitem__(self, k: int) -> OperatorExpr:
        return from_poly(self.polys[k], self.order)

    def is_scalar(self) -> bool:
        return all(p.is_scalar() for p in self.polys)

    def scalar_coeffs(self) -> list[Fraction]:
        if not self.is_scalar():
            raise SeriesError("series has operator-valued coefficients")
        return [p.coeff(0, 0) for p in self.polys]

    def _compatible(self, other: "TruncatedSeries"):
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected a TruncatedSeries")
        if other.truncation != self.truncation:
            raise SeriesError(
                f"truncation mismatch: {self.truncation} vs {other.truncation}"
            )
        if other.order != self.order:
            raise SeriesError(f"working order mismatch: {self.order} vs {other.order}")

    def _new(self, polys) -> "TruncatedSeries":
        return TruncatedSeries(polys, self.truncation, self.order)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.order == other.order
            and self.truncation == other.truncation
            and self.polys == other.polys
        )

    def __hash__(self):
        return hash((self.order, self.polys))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncatedSeries.constant(other, self.truncation, self.order)
        self._compatible(other)
        return self._new([p + q for p, q in zip(self.polys, other.polys)])

    __radd__ = __add__

    def __neg__(self):
        return self._new([-p for p in self.polys])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._new([p * other for p in self.polys])
        return series_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            return series_geom_inverse(self) ** (-n)
        result = TruncatedSeries.constant(1, self.truncation, self.order)
        for _ in range(n):
            result = series_mul(result, self)
        return result

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by λᵏ (k ≥ 0), keeping the truncation order."""
        return self._new([SymbolPoly()] * k + list(self.polys))

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self.coeffs]}, K={self.truncation})"


def series_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    f._compatible(g)
    t, K = f.order, f.truncation
    out = [SymbolPoly()] * (K + 1)
    for i, p in enumerate(f.polys):
        if not p:
            continue
        for j in range(K + 1 - i):
            q = g.polys[j]
            if q:
                out[i + j] = out[i + j] + merge_polys(p, q, t)
    return f._new(out)


def series_exp(f: TruncatedSeries) -> TruncatedSeries:
    """Σ_{k≤K} fᵏ/k!; needs a zero constant coefficient."""
    if f.polys[0]:
        raise SeriesError("series_exp needs a zero constant term")
    result = TruncatedSeries.constant(1, f.truncation, f.order)
    term = result
    for k in range(1, f.truncation + 1):
        term = series_mul(term, f) * Fraction(1, k)
        result = result + term
    return result


def series_geom_inverse(f: TruncatedSeries) -> TruncatedSeries:
    """g with f·g = 1 up to order K, for f with constant term exactly 1."""
    if f.polys[0] != SymbolPoly.constant(1):
        raise SeriesError("series_geom_inverse needs constant term 1")
    t, K = f.order, f.truncation
    g = [SymbolPoly.constant(1)]
    for k in range(1, K + 1):
        acc = SymbolPoly()
        for i in range(1, k + 1):
            if f.polys[i] and g[k - i]:
                acc = acc + merge_polys(f.polys[i], g[k - i], t)
        g.append(-acc)
    return f._new(g)


def series_substitute(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """f∘g for scalar g with zero constant term (Horner scheme)."""
    f._compatible(g)
    if g.polys[0]:
        raise SeriesError("series_substitute needs g with zero constant term")
    if not g.is_scalar():
        raise SeriesError("series_substitute needs scalar coefficients in g")
    K = f.truncation
    result = TruncatedSeries([f.polys[K]], K, f.order)
    for k in range(K - 1, -1, -1):
        result = series_mul(result, g) + TruncatedSeries([f.polys[k]], K, f.order)
    return result
