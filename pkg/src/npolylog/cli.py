"""Command-line front end.

Subcommands map one-to-one onto library operations: eval (rational
value of one index), magnus (Magnus polynomial, its image under the
word-splitting map, and the product identity it encodes), expand
(single value as products of depth-one values), product (n-fold
product expansion), kernel (functional equations from slot
permutations, emitted as JSON lines), verify (recheck a relation
file), and duality-check (basis-change sweeps).  All output is
byte-deterministic.  Exit codes: 0 success, 1 verification failure,
2 parse or usage error.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from importlib import resources

from .freealg import NcPoly, poly_to_json_obj, poly_x_to_y
from .magnus import grade_report, magnus_poly
from .polylog import (
    LinComb,
    expand_to_products,
    kernel_element,
    magnus_product_identity,
    nfold_product,
    polylog_rational,
    relation_from_record,
    relation_record,
    verify_relation,
)
from .ratpoly import taylor_coeffs
from .words import MultiIndex, parse_index

_BUNDLED = "data/known_relations.jsonl"


def _parse_plain(text: str) -> MultiIndex:
    idx = parse_index(text)
    if idx.magnus:
        raise ValueError(f"expected a plain index like (1,2), got {text!r}")
    return idx


def _parse_magnus(text: str) -> MultiIndex:
    idx = parse_index(text)
    if not idx.magnus:
        raise ValueError(f"expected a magnus index like (1;2), got {text!r}")
    return idx


def _lincomb_terms(c: LinComb) -> list[dict[str, object]]:
    return [{"coef": str(coef), "index": list(idx.entries)} for idx, coef in c.items()]


def cmd_eval(args: argparse.Namespace) -> int:
    idx = _parse_plain(args.index)
    f = polylog_rational(idx)
    series = taylor_coeffs(f, args.series) if args.series is not None else None
    if args.json:
        obj: dict[str, object] = {"index": list(idx.entries), "value": f.to_json_obj()}
        if series is not None:
            obj["series"] = [str(c) for c in series]
        print(json.dumps(obj))
    else:
        print(str(f))
        if series is not None:
            print("series: " + ", ".join(str(c) for c in series))
    return 0


def cmd_magnus(args: argparse.Namespace) -> int:
    k = _parse_magnus(args.index)
    mp = magnus_poly(k)
    image = poly_x_to_y(mp * NcPoly.monomial("X", (1,)))
    _, expansion = magnus_product_identity(k)
    factors = k.prefix + (k.tail,)
    label = "*".join(f"Li({f})" for f in factors)
    if args.json:
        obj = {
            "index": str(k),
            "magnus": poly_to_json_obj(mp),
            "image": poly_to_json_obj(image),
            "product": {"factors": list(factors), "terms": _lincomb_terms(expansion)},
        }
        print(json.dumps(obj))
    else:
        print(f"magnus: {mp}")
        print(f"image: {image}")
        print(f"product: {label} = {expansion}")
    return 0


def cmd_expand(args: argparse.Namespace) -> int:
    s = _parse_plain(args.index)
    fam = sorted(expand_to_products(s).items(), key=lambda kv: kv[0].entries)
    if args.json:
        print(json.dumps({"index": list(s.entries), "products": {str(k): c for k, c in fam}}))
    else:
        chunks = []
        for k, c in fam:
            prod = "*".join(f"Li({e})" for e in k.entries)
            chunks.append(prod if c == 1 else f"{c}*{prod}")
        print(f"Li{s} = " + " + ".join(chunks))
    return 0


def cmd_product(args: argparse.Namespace) -> int:
    c = nfold_product(args.factors)
    label = "*".join(f"Li({f})" for f in args.factors)
    if args.json:
        print(json.dumps({"factors": list(args.factors), "terms": _lincomb_terms(c)}))
    else:
        print(f"{label} = {c}")
    return 0


def cmd_kernel(args: argparse.Namespace) -> int:
    k = _parse_magnus(args.index)
    r = k.depth + 1
    if args.all_sigma:
        sigmas = list(itertools.permutations(range(1, r + 1)))
    else:
        try:
            sigmas = [tuple(int(t) for t in args.sigma.split())]
        except ValueError as exc:
            raise ValueError(f"bad permutation {args.sigma!r}") from exc
    rc = 0
    for sig in sigmas:
        c = kernel_element(k, sig)
        ok, _ = verify_relation(c)
        print(json.dumps(relation_record(c, ok)))
        if not ok:
            rc = 1
    return rc


def _read_relation_lines(args: argparse.Namespace) -> str:
    if args.bundled:
        return resources.files("npolylog").joinpath(_BUNDLED).read_text(encoding="utf-8")
    if args.file == "-":
        return sys.stdin.read()
    with open(args.file, "r", encoding="utf-8") as fh:
        return fh.read()


def cmd_verify(args: argparse.Namespace) -> int:
    if not args.bundled and args.file is None:
        raise ValueError("give a relation file, '-' for stdin, or --bundled")
    text = _read_relation_lines(args)
    checked = 0
    failed = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
            c = relation_from_record(record)
        except (json.JSONDecodeError, ValueError) as exc:
            print(f"line {lineno}: parse error: {exc}", file=sys.stderr)
            return 2
        ok, witness = verify_relation(c)
        checked += 1
        if not ok:
            failed += 1
        if args.json:
            print(json.dumps({"line": lineno, "ok": ok, "witness": None if ok else str(witness)}))
        else:
            print(f"line {lineno}: ok" if ok else f"line {lineno}: FAIL witness={witness}")
    if not args.json:
        print(f"checked {checked} relations: {checked - failed} ok, {failed} failed")
    return 1 if failed else 0


def cmd_duality_check(args: argparse.Namespace) -> int:
    cells = grade_report(args.max_depth, args.max_weight)
    ok = all(cell["ok"] for cell in cells)
    if args.json:
        print(
            json.dumps(
                {
                    "max_depth": args.max_depth,
                    "max_weight": args.max_weight,
                    "cells": cells,
                    "ok": ok,
                }
            )
        )
    else:
        for cell in cells:
            state = "ok" if cell["ok"] else "FAIL"
            print(
                "depth={d} weight={w} size={n} {s}".format(
                    d=cell["depth"], w=cell["weight"], n=cell["size"], s=state
                )
            )
        print("all graded pieces ok" if ok else "FAIL")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="npolylog",
        description=(
            "Exact polylogarithm values at non-positive indices, Magnus-basis "
            "expansions, and functional-equation generation and checking."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("eval", help="rational value of Li at one plain index")
    p.add_argument("index", help='plain index, e.g. "(1,2)" or "()"')
    p.add_argument("--series", type=int, metavar="N", help="also print coefficients of z^0..z^N")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("magnus", help="Magnus polynomial, its Y-image, and its product identity")
    p.add_argument("index", help='magnus index, e.g. "(1;2)" or "(;0)"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_magnus)

    p = sub.add_parser("expand", help="one Li value as products of depth-one values")
    p.add_argument("index", help='plain index of depth >= 1, e.g. "(1,1)"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("product", help="expand a product of depth-one values")
    p.add_argument("factors", nargs="+", type=int, help="single indices, e.g. 5 4")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("kernel", help="functional equations from slot permutations (JSON lines)")
    p.add_argument("index", help='magnus index, e.g. "(1;2)"')
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--sigma", metavar="PERM", help='one-line permutation, e.g. "2 1"')
    g.add_argument("--all-sigma", action="store_true", help="every permutation of the slots")
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("verify", help="recheck a relation file (JSON lines)")
    p.add_argument("file", nargs="?", help="path to a .jsonl file, or '-' for stdin")
    p.add_argument("--bundled", action="store_true", help="check the relations shipped with the package")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("duality-check", help="basis-change sweeps over graded pieces")
    p.add_argument("--max-depth", type=int, default=3)
    p.add_argument("--max-weight", type=int, default=6)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_duality_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
