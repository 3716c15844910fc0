"""Two-variable Hermite, incomplete Hermite and Laguerre polynomials, exactly."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .algebra import SymbolPoly, _Poly2
from .printing import format_poly


class BivariatePoly(_Poly2):
    """Polynomial in (x, y); negative exponents are allowed so Laurent identities stay exact."""

    __slots__ = ()
    allow_negative = True

    def __str__(self):
        return format_poly(self, names=("x", "y"))

    def to_symbols(self, x="ad") -> SymbolPoly:
        """Read x as a† (``x="ad"``) or as a (``x="a"``)."""
        swap = x == "a"
        return SymbolPoly({((l, k) if swap else (k, l)): c for (k, l), c in self.terms.items()})

    def substitute_scaled(self, cx, cy) -> "BivariatePoly":
        """P(cx·x, cy·y)."""
        cx, cy = Fraction(cx), Fraction(cy)
        return BivariatePoly({(k, l): c * cx**k * cy**l for (k, l), c in self.terms.items()})


class UnivariatePoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [Fraction(c) for c in coeffs]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    def __eq__(self, other):
        if not isinstance(other, UnivariatePoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UnivariatePoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        return format_poly(BivariatePoly({(k, 0): c for k, c in enumerate(self.coeffs)}), ("x", "y"))

    def in_product(self, scale=1) -> BivariatePoly:
        """P(scale·x·y) as a bivariate polynomial."""
        scale = Fraction(scale)
        return BivariatePoly({(i, i): c * scale**i for i, c in enumerate(self.coeffs)})


def hermite2_incomplete(m: int, n: int, tau) -> BivariatePoly:
    """h_{m,n}(x,y|τ) = Σᵢ C(m,i) C(n,i) i! τⁱ x^{m-i} y^{n-i}."""
    if m < 0 or n < 0:
        raise ValueError("indices must be non-negative")
    tau = Fraction(tau)
    return BivariatePoly(
        {(m - i, n - i): comb(m, i) * comb(n, i) * factorial(i) * tau**i for i in range(min(m, n) + 1)}
    )


def hermite2(m: int, n: int) -> BivariatePoly:
    """H_{m,n}(x, y), the two-variable Hermite polynomial (contraction weight -1)."""
    return hermite2_incomplete(m, n, -1)


def rescale(poly: BivariatePoly, sigma_sq, degree: int) -> BivariatePoly:
    """σ^degree · P(x/σ, y/σ), written with σ² only.

    Valid when every monomial has ``degree - (i + j)`` even, which holds for
    the Hermite families.  σ² = 0 is the polynomial limit.
    """
    sigma_sq = Fraction(sigma_sq)
    out = {}
    for (i, j), c in poly.terms.items():
        gap = degree - i - j
        if gap % 2 or gap < 0:
            raise ValueError("rescale needs an even, non-negative degree gap")
        out[(i, j)] = c * sigma_sq ** (gap // 2)
    return BivariatePoly(out)


def _gbinom(top: int, k: int) -> Fraction:
    """Binomial with integer top of any sign (falling-factorial convention)."""
    if k < 0:
        return Fraction(0)
    num = 1
    for j in range(k):
        num *= top - j
    return Fraction(num, factorial(k))


def laguerre(n: int, alpha: int = 0) -> UnivariatePoly:
    """L_n^α(x) = Σᵢ (-1)ⁱ C(n+α, n-i) xⁱ / i!, for integer α with n + α ≥ 0."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n + alpha < 0:
        raise ValueError(f"L_{n}^{alpha} needs n + alpha >= 0")
    return UnivariatePoly(
        [(-1) ** i * _gbinom(n + alpha, n - i) / factorial(i) for i in range(n + 1)]
    )


@dataclass(frozen=True)
class CoefficientVerdict:
    index: tuple[int, int]
    expected: BivariatePoly
    actual: BivariatePoly

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


def exp_bivariate_series(tau, max_m: int, max_n: int) -> dict[tuple[int, int], BivariatePoly]:
    """Coefficients of λᵐμⁿ in exp(λx + μy + τλμ), truncated at (max_m, max_n).

    Computed as Σ_k P^k / k! on a (λ, μ) grid of BivariatePoly coefficients.
    """
    tau = Fraction(tau)
    exponent = {
        (1, 0): BivariatePoly.monomial(1, 0),
        (0, 1): BivariatePoly.monomial(0, 1),
        (1, 1): BivariatePoly.constant(tau),
    }

    def mul(f, g):
        out: dict[tuple[int, int], BivariatePoly] = {}
        for (i1, j1), c1 in f.items():
            for (i2, j2), c2 in g.items():
                i, j = i1 + i2, j1 + j2
                if i <= max_m and j <= max_n:
                    out[(i, j)] = out.get((i, j), BivariatePoly()) + c1 * c2
        return {k: v for k, v in out.items() if v}

    result = {(0, 0): BivariatePoly.constant(1)}
    power = {(0, 0): BivariatePoly.constant(1)}
    for k in range(1, max_m + max_n + 1):
        power = {key: c / k for key, c in mul(power, exponent).items()}
        for key, c in power.items():
            result[key] = result.get(key, BivariatePoly()) + c
    return result


def generating_check_incomplete(max_m: int, max_n: int, tau) -> list[CoefficientVerdict]:
    """Compare m!n!·[λᵐμⁿ] exp(λx + μy + τλμ) against h_{m,n}(x,y|τ)."""
    series = exp_bivariate_series(tau, max_m, max_n)
    verdicts = []
    for m in range(max_m + 1):
        for n in range(max_n + 1):
            got = series.get((m, n), BivariatePoly()) * (factorial(m) * factorial(n))
            verdicts.append(CoefficientVerdict((m, n), hermite2_incomplete(m, n, tau), got))
    return verdicts
