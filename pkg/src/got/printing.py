"""Text and JSON rendering of polynomials and operator expressions."""
from __future__ import annotations

from fractions import Fraction

from .algebra import (
    Generator,
    OperatorExpr,
    OrderedBlock,
    SymbolPoly,
    format_rational,
    order_param,
)


def format_order(order: Fraction) -> str:
    if order.denominator == 1:
        return str(order.numerator)
    return "{" + format_rational(order) + "}"


def _power(name: str, e: int) -> str:
    return name if e == 1 else f"{name}^{e}"


def format_monomial(key, names=("ad", "a")) -> str:
    parts = [_power(name, e) for name, e in zip(names, key) if e]
    return " ".join(parts)


def _join_signed(chunks: list[tuple[Fraction, str]]) -> str:
    """Join (coefficient, body) pairs; an empty body means a bare scalar."""
    if not chunks:
        return "0"
    out = []
    for idx, (c, body) in enumerate(chunks):
        mag = abs(c)
        if not body:
            text = format_rational(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{format_rational(mag)} {body}"
        if idx == 0:
            out.append(("-" if c < 0 else "") + text)
        else:
            out.append((" - " if c < 0 else " + ") + text)
    return "".join(out)


def _sorted_desc(poly):
    return sorted(poly.terms.items(), reverse=True)


def format_poly(poly, names=("ad", "a")) -> str:
    """Commutative polynomial, highest exponent pair first."""
    return _join_signed([(c, format_monomial(k, names)) for k, c in _sorted_desc(poly)])


def format_block(b: OrderedBlock) -> str:
    return "{" + format_poly(b.poly) + "}_" + format_order(b.order)


def format_canonical(poly: SymbolPoly, t: Fraction) -> str:
    """One ordered symbol per monomial, e.g. ``{ad a}_1 + 1``."""
    t_text = format_order(order_param(t))
    chunks = []
    for key, c in _sorted_desc(poly):
        body = format_monomial(key)
        chunks.append((c, "{" + body + "}_" + t_text if body else ""))
    return _join_signed(chunks)


def canonical_parts(e: OperatorExpr):
    """(poly, order) if every term is a scalar or a single block of one common order."""
    order = None
    poly = SymbolPoly()
    for coeff, factors in e.terms:
        if not factors:
            poly = poly + SymbolPoly.constant(coeff)
            continue
        if len(factors) != 1 or not isinstance(factors[0], OrderedBlock):
            return None
        block = factors[0]
        if order is not None and block.order != order:
            return None
        order = block.order
        poly = poly + block.poly * coeff
    return poly, order


def _format_factors(factors) -> str:
    out = []
    idx = 0
    while idx < len(factors):
        f = factors[idx]
        if isinstance(f, Generator):
            run = 1
            while idx + run < len(factors) and factors[idx + run] is f:
                run += 1
            out.append(_power(f.value, run))
            idx += run
        else:
            out.append(format_block(f))
            idx += 1
    return " * ".join(out)


def format_expr(e: OperatorExpr) -> str:
    parts = canonical_parts(e)
    if parts is not None and parts[1] is not None:
        return format_canonical(*parts)
    return _join_signed([(c, _format_factors(f)) for c, f in e.terms])


# -- JSON ------------------------------------------------------------------


def poly_to_json(poly: SymbolPoly) -> list[dict]:
    return [
        {"ad": k, "a": l, "coeff": format_rational(c)}
        for (k, l), c in sorted(poly.terms.items())
    ]


def expr_to_json(e: OperatorExpr, order=None) -> dict:
    """Serialize a sum of scalars and single blocks sharing one order.

    Schema: ``{"order": "p/q", "terms": [{"coeff": "p/q", "monomials":
    [{"ad": k, "a": l, "coeff": "p/q"}]}]}``.  A scalar term is stored as a
    block holding a constant.
    """
    terms = []
    found = None
    for coeff, factors in e.terms:
        if not factors:
            poly = SymbolPoly.constant(1)
        elif len(factors) == 1 and isinstance(factors[0], OrderedBlock):
            block = factors[0]
            if found is not None and block.order != found:
                raise ValueError("JSON schema holds a single ordering parameter")
            found = block.order
            poly = block.poly
        else:
            raise ValueError("only sums of single ordered blocks are serializable")
        terms.append({"coeff": format_rational(coeff), "monomials": poly_to_json(poly)})
    if order is None:
        order = found if found is not None else Fraction(0)
    elif found is not None and order_param(order) != found:
        raise ValueError("declared order does not match block order")
    return {"order": format_rational(order_param(order)), "terms": terms}


def expr_from_json(data: dict) -> OperatorExpr:
    order = order_param(data["order"])
    terms = []
    for term in data["terms"]:
        poly = SymbolPoly(
            {(int(m["ad"]), int(m["a"])): Fraction(m["coeff"]) for m in term["monomials"]}
        )
        if poly:
            terms.append((Fraction(term["coeff"]), (OrderedBlock(poly, order),)))
    return OperatorExpr(tuple(terms))
