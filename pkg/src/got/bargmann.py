"""Bargmann representation used as an independent exact oracle.

a acts as d/dz and a† as multiplication by z on polynomials in z, so every
matrix element stays rational.  The oracle never touches the ordering engine:
an s-ordered block is grounded by its own expansion into normal order and then
applied as ``z^k (d/dz)^l``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .algebra import Generator, OperatorExpr, OrderedBlock, SymbolPoly, format_rational


class DegreeOverflowError(ArithmeticError):
    pass


@dataclass(frozen=True)
class OracleConfig:
    cutoff: int = 32

    def __post_init__(self):
        if self.cutoff < 1:
            raise ValueError("cutoff must be a positive integer")


class ZPoly:
    """Dense polynomial in z with exact coefficients, trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        coeffs = [Fraction(c) for c in coeffs]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, k: int, coeff=1) -> "ZPoly":
        return cls([0] * k + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if not isinstance(other, ZPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "ZPoly") -> "ZPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return ZPoly([self.coeff(k) + other.coeff(k) for k in range(n)])

    def __sub__(self, other: "ZPoly") -> "ZPoly":
        return self + other * -1

    def __mul__(self, scalar) -> "ZPoly":
        scalar = Fraction(scalar)
        return ZPoly([c * scalar for c in self.coeffs])

    __rmul__ = __mul__

    def __repr__(self):
        return f"ZPoly({[format_rational(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if not mono:
                parts.append(format_rational(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{format_rational(c)} {mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _check(p: ZPoly, config: OracleConfig) -> ZPoly:
    if p.degree > config.cutoff:
        raise DegreeOverflowError(f"degree {p.degree} exceeds cutoff {config.cutoff}")
    return p


def _raise(p: ZPoly, k: int) -> ZPoly:
    return ZPoly((0,) * k + p.coeffs) if p.coeffs else p


def _lower(p: ZPoly, l: int) -> ZPoly:
    out = []
    for j in range(l, len(p.coeffs)):
        fall = 1
        for r in range(l):
            fall *= j - r
        out.append(p.coeffs[j] * fall)
    return ZPoly(out)


def apply_generator(g: Generator, p: ZPoly, config: OracleConfig = OracleConfig()) -> ZPoly:
    if g is Generator.AD:
        return _check(_raise(p, 1), config)
    return _lower(p, 1)


def normal_expansion(poly: SymbolPoly, s) -> dict[tuple[int, int], Fraction]:
    """Normal-ordered coefficients of the s-ordered symbol ``poly``.

    Uses the defining expansion {a†ⁿaᵐ}_s = Σ C(n,i)C(m,i) i! ((1-s)/2)^i :a†ⁿ⁻ⁱaᵐ⁻ⁱ:.
    """
    weight = (1 - Fraction(s)) / 2
    out: dict[tuple[int, int], Fraction] = {}
    for (n, m), c in poly.terms.items():
        for i in range(min(n, m) + 1):
            w = comb(n, i) * comb(m, i) * factorial(i) * weight**i
            if w:
                key = (n - i, m - i)
                out[key] = out.get(key, Fraction(0)) + c * w
    return out


def _apply_block(b: OrderedBlock, p: ZPoly, config: OracleConfig) -> ZPoly:
    total = ZPoly()
    for (k, l), c in normal_expansion(b.poly, b.order).items():
        if c:
            total = total + _check(_raise(_lower(p, l), k), config) * c
    return total


def apply_expression(e: OperatorExpr, p: ZPoly, config: OracleConfig = OracleConfig()) -> ZPoly:
    """Exact action of ``e`` on ``p``; each product acts right to left."""
    total = ZPoly()
    for coeff, factors in e.terms:
        q = p
        for f in reversed(factors):
            if isinstance(f, Generator):
                q = apply_generator(f, q, config)
            else:
                q = _apply_block(f, q, config)
            if not q.coeffs:
                break
        total = total + q * coeff
    return total


def apply_number_function(lam, p: ZPoly) -> ZPoly:
    """λ^{a†a}: zᵏ ↦ λᵏ zᵏ."""
    lam = Fraction(lam)
    return ZPoly([c * lam**k for k, c in enumerate(p.coeffs)])


def probe_range(e: OperatorExpr) -> tuple[int, int]:
    """(max probe index, cutoff) sufficient to pin down ``e`` exactly.

    An operator whose words hold at most d annihilators is fixed by its action
    on z⁰..zᵈ; the cutoff leaves room for every creator on top.
    """
    n_a = n_ad = 0
    for _, factors in e.terms:
        ta = tad = 0
        for f in factors:
            if isinstance(f, Generator):
                ta += f is Generator.A
                tad += f is Generator.AD
            else:
                ta += max(l for _, l in f.poly.terms)
                tad += max(k for k, _ in f.poly.terms)
        n_a, n_ad = max(n_a, ta), max(n_ad, tad)
    return n_a, max(1, n_a + n_ad)


def same_action(e1: OperatorExpr, e2: OperatorExpr) -> bool:
    """Compare two expressions on a probe set large enough for both."""
    k1, c1 = probe_range(e1)
    k2, c2 = probe_range(e2)
    kmax, config = max(k1, k2), OracleConfig(max(c1, c2))
    return all(
        apply_expression(e1, ZPoly.monomial(k), config)
        == apply_expression(e2, ZPoly.monomial(k), config)
        for k in range(kmax + 1)
    )
