"""Command line front end.

Exit codes: 0 success, 1 domain error (reported on stderr), 2 usage,
3 verification ran but found failures. All output is deterministic for a
fixed invocation so runs can be diffed.
"""

import argparse
import sys
from typing import Optional, TextIO

from .cache import cached_table
from .chartable import (
    CharacterTable,
    decompose,
    pointwise_product,
    square_root_char,
)
from .errors import BadParameters, CharkitError
from .groups import from_spec
from .harness import DEFAULT_CORPUS, SUITES, run_corpus
from .version import VERSION


def _load_table(args) -> CharacterTable:
    G = from_spec(args.spec)
    return cached_table(G, cache_dir=args.cache, use_cache=not args.no_cache)


def _check_index(table: CharacterTable, index: int) -> None:
    if not 0 <= index < len(table):
        raise BadParameters(
            f"index {index} out of range; the table has {len(table)} irreducibles"
        )


def _terms(table: CharacterTable, multiplicities) -> str:
    parts = []
    for k, m in enumerate(multiplicities):
        if m == 0:
            continue
        parts.append(f"chi_{k}" if m == 1 else f"{m}*chi_{k}")
    return " + ".join(parts) if parts else "0"


def cmd_table(args, out: TextIO) -> int:
    table = _load_table(args)
    G = table.group
    cls = G.classes
    out.write(f"group: {G.spec} (order {G.order}, exponent {G.exponent})\n")
    out.write(f"irreducibles: {len(table)}, conductor {table.conductor}\n")
    out.write("class sizes:    " +
              " ".join(str(s) for s in cls.sizes) + "\n")
    orders = [int(G.element_orders[r]) for r in cls.representatives]
    out.write("element orders: " +
              " ".join(str(o) for o in orders) + "\n")
    for i, chi in enumerate(table.irreducibles):
        vals = ", ".join(v.to_string() for v in chi.values)
        out.write(f"chi_{i} (degree {table.degrees[i]}): {vals}\n")
    return 0


def cmd_square(args, out: TextIO) -> int:
    table = _load_table(args)
    _check_index(table, args.index)
    dec = table.decompose_square(args.index)
    out.write(f"group: {table.group.spec} (order {table.group.order})\n")
    out.write(f"chi_{args.index} has degree {table.degrees[args.index]}\n")
    out.write(f"chi_{args.index}^2 = {_terms(table, dec.multiplicities)}\n")
    out.write(f"eta: {dec.eta}\n")
    odd = [k for k, m in enumerate(dec.multiplicities) if m % 2]
    if len(odd) == 1:
        out.write(f"unique odd multiplicity constituent: chi_{odd[0]}\n")
    else:
        out.write(f"no unique odd constituent (group order is even): {len(odd)} odd\n")
    return 0


def cmd_sqrt(args, out: TextIO) -> int:
    table = _load_table(args)
    _check_index(table, args.index)
    j = square_root_char(table, args.index)
    m = table.decompose_square(j).multiplicities[args.index]
    out.write(f"group: {table.group.spec} (order {table.group.order})\n")
    out.write(f"square root of chi_{args.index}: chi_{j}\n")
    out.write(f"chi_{j}(g^2) = chi_{args.index}(g) for every g\n")
    out.write(f"[chi_{j}^2, chi_{args.index}] = {m} (odd)\n")
    return 0


def cmd_decompose(args, out: TextIO) -> int:
    table = _load_table(args)
    _check_index(table, args.index)
    j = args.index if args.with_index is None else args.with_index
    _check_index(table, j)
    if j == args.index:
        dec = table.decompose_square(args.index)
    else:
        prod = pointwise_product(table.irreducibles[args.index],
                                 table.irreducibles[j])
        dec = decompose(prod, table)
    out.write(f"group: {table.group.spec} (order {table.group.order})\n")
    out.write(
        f"chi_{args.index} * chi_{j} = {_terms(table, dec.multiplicities)}\n"
    )
    out.write(f"eta: {dec.eta}\n")
    total = sum(m * d for m, d in zip(dec.multiplicities, table.degrees))
    out.write(
        f"degree check: {total} = "
        f"{table.degrees[args.index]} * {table.degrees[j]}\n"
    )
    return 0


def cmd_verify(args, out: TextIO) -> int:
    rep = run_corpus(
        corpus=args.corpus,
        suite=args.suite,
        cache_dir=args.cache,
        use_cache=not args.no_cache,
    )
    out.write(rep.to_machine() if args.format == "machine" else rep.to_text())
    return 0 if rep.ok() else 3


def cmd_corpus_list(args, out: TextIO) -> int:
    for spec in DEFAULT_CORPUS:
        out.write(spec + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charkit",
        description="Exact character tables and squaring structure for small groups.",
    )
    parser.add_argument("--version", action="version", version=VERSION)
    sub = parser.add_subparsers(dest="command", required=True)

    cache = argparse.ArgumentParser(add_help=False)
    cache.add_argument("--cache", metavar="DIR", default=None,
                       help="cache directory for computed tables")
    cache.add_argument("--no-cache", action="store_true",
                       help="always recompute, never touch a cache")

    p = sub.add_parser("table", parents=[cache],
                       help="print an exact character table")
    p.add_argument("spec", help="group spec, e.g. metacyclic:7:3:2")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("square", parents=[cache],
                       help="decompose the square of one irreducible")
    p.add_argument("spec")
    p.add_argument("--index", type=int, required=True,
                   help="row index of the irreducible")
    p.set_defaults(func=cmd_square)

    p = sub.add_parser("sqrt", parents=[cache],
                       help="square root of an irreducible (odd order only)")
    p.add_argument("spec")
    p.add_argument("--index", type=int, required=True)
    p.set_defaults(func=cmd_sqrt)

    p = sub.add_parser("decompose", parents=[cache],
                       help="decompose a product of two irreducibles")
    p.add_argument("spec")
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--with", dest="with_index", type=int, default=None,
                   metavar="J", help="second factor (defaults to --index)")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", parents=[cache],
                       help="run structure checks over a corpus")
    p.add_argument("--corpus", default="default",
                   help="'default' or a file with one spec per line")
    p.add_argument("--suite", default="all", choices=sorted(SUITES),
                   help="which checks to run")
    p.add_argument("--format", default="text", choices=("text", "machine"),
                   help="report rendering")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("corpus-list", help="print the built in corpus")
    p.set_defaults(func=cmd_corpus_list)

    return parser


def main(argv: Optional[list] = None, stream: Optional[TextIO] = None) -> int:
    out = stream if stream is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except CharkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())
