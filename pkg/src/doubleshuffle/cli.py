"""Command line surface.

Exit status: 0 on success, 1 when ``verify`` finds a failing relation,
2 on malformed input (word syntax, JSON, or argument domain errors).
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import DomainError, LinComb
from .explicit import explicit_product_b, explicit_product_e, perm_product_b
from .maps import rho
from .recursive import quasi_shuffle, shuffle
from .textio import (WordSyntaxError, format_lincomb, lincomb_to_json,
                     lincomb_to_latex, parse_indexed_word, parse_shuffle_word,
                     relation_from_json, relation_to_json, relation_to_latex)
from .values import (Relation, admissible_words, double_shuffle_relations,
                     euler_relation, hoffman_difference,
                     verify_relation_numeric)


def _group_order(name: str) -> int:
    if name == "trivial":
        return 1
    if name == "sign":
        return 2
    if name.startswith("root:"):
        n = int(name.split(":", 1)[1])
        if n < 1:
            raise ValueError("group order must be >= 1")
        return n
    raise ValueError(f"unknown group {name!r} (use trivial, sign or root:N)")


def _print_lincomb(lc: LinComb, args) -> None:
    if args.format == "json":
        print(json.dumps(lincomb_to_json(lc)))
    elif args.format == "latex":
        print(lincomb_to_latex(lc, args.group))
    else:
        print(format_lincomb(lc))


def _print_relation(rel: Relation, args) -> None:
    if args.format == "json":
        print(json.dumps(relation_to_json(rel)))
    elif args.format == "latex":
        print(relation_to_latex(rel, args.group))
    else:
        print(f"{rel.label}: {format_lincomb(rel.combination)}")


def _cmd_shuffle(args) -> int:
    u = parse_shuffle_word(args.left)
    v = parse_shuffle_word(args.right)
    lc = shuffle(u, v)
    if args.as_indexed:
        lc = lc.map_words(rho)
        _print_lincomb(lc, args)
        return 0
    if args.format == "json":
        terms = [{"coeff": str(c), "word": str(w)} for w, c in lc.items()]
        print(json.dumps({"terms": terms}))
    else:
        print(format_lincomb(lc))
    return 0


def _cmd_stuffle(args) -> int:
    mu = parse_indexed_word(args.left)
    nu = parse_indexed_word(args.right)
    _print_lincomb(quasi_shuffle(mu, nu), args)
    return 0


def _cmd_explicit(args) -> int:
    mu = parse_indexed_word(args.left)
    nu = parse_indexed_word(args.right)
    product = explicit_product_b if args.form == "b" else explicit_product_e
    _print_lincomb(product(mu, nu), args)
    return 0


def _cmd_perm_form(args) -> int:
    mu = parse_indexed_word(args.left)
    nu = parse_indexed_word(args.right)
    _print_lincomb(perm_product_b(mu, nu), args)
    return 0


def _cmd_euler(args) -> int:
    _print_relation(euler_relation(args.r, args.s), args)
    return 0


def _cmd_relations(args) -> int:
    order = _group_order(args.group)
    rels = double_shuffle_relations(args.weight, args.depth, order)
    if args.hoffman:
        for nu in admissible_words(args.weight - 1, max(args.depth - 1, 1), order):
            rel = hoffman_difference(nu)
            if rel.combination:
                rels.append(rel)
    for rel in rels:
        _print_relation(rel, args)
    return 0


def _cmd_verify(args) -> int:
    stream = args.input if args.input is not None else sys.stdin
    failed = 0
    count = 0
    for line in stream:
        line = line.strip()
        if not line:
            continue
        rel = relation_from_json(json.loads(line))
        report = verify_relation_numeric(rel, args.terms, args.tol,
                                         allow_conditional=args.allow_conditional)
        count += 1
        if not report.passed:
            failed += 1
        if args.format == "json":
            print(json.dumps({"label": rel.label, "passed": report.passed,
                              "residual": report.residual,
                              "bound": report.bound}))
        else:
            status = "ok" if report.passed else "FAIL"
            print(f"{status} {rel.label} residual={report.residual:.3e} "
                  f"bound={report.bound:.3e}")
    if args.format != "json":
        print(f"{count - failed}/{count} relations verified")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "latex"),
                        default="text", help="output format")
    common.add_argument("--group", default="trivial",
                        help="mark group: trivial, sign or root:N")

    parser = argparse.ArgumentParser(
        prog="doubleshuffle",
        description="Exact double-shuffle products and relations among "
                    "nested-series values.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("shuffle", parents=[common],
                       help="interleaving product of two letter words")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--as-indexed", action="store_true",
                   help="re-encode the result as index words")
    p.set_defaults(func=_cmd_shuffle)

    p = sub.add_parser("stuffle", parents=[common],
                       help="merge product of two index words")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=_cmd_stuffle)

    p = sub.add_parser("explicit", parents=[common],
                       help="closed-form product of two index words")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--form", choices=("b", "e"), default="e",
                   help="plain (b) or quotient (e) mark coordinates")
    p.set_defaults(func=_cmd_explicit)

    p = sub.add_parser("perm-form", parents=[common],
                       help="b-form product via shuffle permutations")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=_cmd_perm_form)

    p = sub.add_parser("euler", parents=[common],
                       help="two-term decomposition of a depth-1 product")
    p.add_argument("r", type=int)
    p.add_argument("s", type=int)
    p.set_defaults(func=_cmd_euler)

    p = sub.add_parser("relations", parents=[common],
                       help="stream double-shuffle relations")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--depth", type=int, default=2)
    p.add_argument("--hoffman", action="store_true",
                   help="also emit the divergent-word differences")
    p.set_defaults(func=_cmd_relations)

    p = sub.add_parser("verify", parents=[common],
                       help="numerically verify relations read as JSON lines")
    p.add_argument("--terms", type=int, default=100000,
                   help="truncation of every nested sum")
    p.add_argument("--tol", type=float, default=1e-3)
    p.add_argument("--allow-conditional", action="store_true",
                   help="sum conditionally convergent words too")
    p.add_argument("--input", type=argparse.FileType("r"), default=None,
                   help="file with one JSON relation per line (default stdin)")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (WordSyntaxError, DomainError, ValueError,
            json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
