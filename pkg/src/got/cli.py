"""``got`` command line: order, compare and verify operator expressions.

Exit codes: 0 success, 1 a failed ASSERT identity (or unequal expressions
for ``got equal``), 2 parse or parameter errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import order_param
from .bargmann import DegreeOverflowError
from .engine import canonical_poly, from_poly
from .identities import (
    InvalidParameterError,
    Mode,
    UnknownIdentityError,
    check,
    list_identities,
)
from .parser import ParseError, parse
from .printing import expr_to_json, format_canonical, format_monomial, format_order
from .special import hermite2, hermite2_incomplete, laguerre

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# options whose value may start with '-', e.g. ``--s -1/2``
_VALUE_OPTIONS = {
    "--target", "--s", "--t", "--lambda", "--tau", "--kappa", "--alpha",
    "--n", "--m", "--max-k", "--max-order", "--cutoff", "--degree",
}


def _glue_negative_values(argv: list[str]) -> list[str]:
    out, i = [], 0
    while i < len(argv):
        arg = argv[i]
        if arg in _VALUE_OPTIONS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{arg}={argv[i + 1]}")
            i += 2
        else:
            out.append(arg)
            i += 1
    return out


def _emit(args, text: str, payload: dict):
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_order(args) -> int:
    t = order_param(args.target)
    poly = canonical_poly(parse(args.expr), t)
    _emit(args, format_canonical(poly, t), expr_to_json(from_poly(poly, t), t))
    return EXIT_OK


def cmd_equal(args) -> int:
    t = order_param(args.target)
    p1 = canonical_poly(parse(args.left), t)
    p2 = canonical_poly(parse(args.right), t)
    diff = p1 - p2
    payload = {"equal": not diff, "order": str(t)}
    if not diff:
        _emit(args, "equal", payload)
        return EXIT_OK
    key = max(diff.terms)
    mono = format_monomial(key) or "1"
    payload["first_difference"] = {
        "ad": key[0], "a": key[1], "left": str(p1.coeff(*key)), "right": str(p2.coeff(*key)),
    }
    text = (
        f"unequal in order {format_order(t)}: first difference at {mono}: "
        f"left {p1.coeff(*key)} vs right {p2.coeff(*key)}\n"
        f"  left:  {format_canonical(p1, t)}\n  right: {format_canonical(p2, t)}"
    )
    _emit(args, text, payload)
    return EXIT_FAIL


_PARAM_FLAGS = {
    "s": "s", "t": "t", "n": "n", "m": "m", "lam": "lambda", "tau": "tau",
    "kappa": "kappa", "max_k": "max_k", "max_order": "max_order", "degree": "degree",
}


def cmd_verify(args) -> int:
    entry = {e.name: e for e in list_identities()}.get(args.identity)
    if entry is None:
        raise UnknownIdentityError(args.identity)
    accepted = entry.defaults
    params = {}
    for name, attr in _PARAM_FLAGS.items():
        value = getattr(args, attr)
        if value is None:
            continue
        if name not in accepted:
            raise InvalidParameterError(f"{args.identity} does not take --{attr.replace('_', '-')}")
        params[name] = value
    report = check(args.identity, **params)
    _emit(args, report.format_text(), report.to_json())
    if report.mode is Mode.ASSERT and not report.passed:
        return EXIT_FAIL
    return EXIT_OK


def cmd_hermite(args) -> int:
    poly = hermite2(args.m, args.n) if args.tau is None else hermite2_incomplete(args.m, args.n, args.tau)
    label = f"H_{{{args.m},{args.n}}}(x,y)" if args.tau is None else f"h_{{{args.m},{args.n}}}(x,y|{args.tau})"
    payload = {"m": args.m, "n": args.n, "tau": None if args.tau is None else str(args.tau),
               "terms": [{"x": k, "y": l, "coeff": str(c)} for (k, l), c in poly.items()]}
    _emit(args, f"{label} = {poly}", payload)
    return EXIT_OK


def cmd_laguerre(args) -> int:
    poly = laguerre(args.n, args.alpha)
    payload = {"n": args.n, "alpha": args.alpha, "coeffs": [str(c) for c in poly.coeffs]}
    _emit(args, f"L_{args.n}^{args.alpha}(x) = {poly}", payload)
    return EXIT_OK


def cmd_list(args) -> int:
    entries = list_identities()
    if args.format == "json":
        print(json.dumps([
            {"name": e.name, "mode": e.mode.value, "description": e.description,
             "defaults": {k: (None if v is None else str(v)) for k, v in e.defaults.items()}}
            for e in entries
        ], indent=2))
    else:
        width = max(len(e.name) for e in entries)
        for e in entries:
            print(f"{e.name:<{width}}  {e.mode.value:<6}  {e.description}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="got", description="s-ordered bosonic operator algebra")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("order", help="rewrite an expression in t-ordered canonical form")
    p.add_argument("expr")
    p.add_argument("--target", default="N", help="ordering parameter: N, A, W or p/q")
    add_format(p)
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("equal", help="compare two expressions in canonical form")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--target", default="N")
    add_format(p)
    p.set_defaults(func=cmd_equal)

    p = sub.add_parser("verify", help="run an identity check")
    p.add_argument("--identity", required=True)
    p.add_argument("--s")
    p.add_argument("--t")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--lambda", dest="lambda")
    p.add_argument("--tau")
    p.add_argument("--kappa")
    p.add_argument("--max-k", dest="max_k", type=int)
    p.add_argument("--max-order", dest="max_order", type=int)
    p.add_argument("--degree", type=int)
    p.add_argument("--cutoff", type=int, help="accepted for compatibility; probe ranges are sized automatically")
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hermite", help="print H_{m,n}(x,y) or h_{m,n}(x,y|tau)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tau", type=Fraction)
    add_format(p)
    p.set_defaults(func=cmd_hermite)

    p = sub.add_parser("laguerre", help="print L_n^alpha(x)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=int, default=0)
    add_format(p)
    p.set_defaults(func=cmd_laguerre)

    p = sub.add_parser("list-identities", help="list registered identities")
    add_format(p)
    p.set_defaults(func=cmd_list)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_negative_values(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except UnknownIdentityError as exc:
        print(f"error: unknown identity {exc.args[0]!r}; see `got list-identities`", file=sys.stderr)
    except (ParseError, InvalidParameterError, ValueError, TypeError, DegreeOverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
