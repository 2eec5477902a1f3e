"""Command-line front end.

Exit codes: 0 success (accept / colorable / generated), 1 negative
verdict (reject, not colorable, construction failure), 2 malformed
input or unsupported request, 3 inconclusive search.  Verdicts go to
stdout, diagnostics to stderr, so scripts can branch on both.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .coloring import (
    PackingFailure,
    color_from_packing,
    coloring_to_text,
    parse_coloring,
    parse_realization,
    verify_coloring,
)
from .errors import InputError, UnsupportedError
from .graphs import parse_graph
from .search import COLORABLE, INCONCLUSIVE, SearchConfig, enumerate_colorable, solve
from .steiner import generate_sts, sts_to_text


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _cmd_gen_sts(args: argparse.Namespace) -> int:
    ts = generate_sts(args.n)
    text = sts_to_text(ts)
    summary = f"{len(ts.blocks)} blocks"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(summary)
    else:
        sys.stdout.write(text)
        print(summary, file=sys.stderr)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.graph))
    c = parse_coloring(_read(args.coloring))
    verdict = verify_coloring(g, c)
    if verdict.ok:
        print("accept")
        return 0
    print("reject")
    print(verdict.reason, file=sys.stderr)
    return 1


def _cmd_color(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.graph))
    pr = parse_realization(_read(args.realization), g)
    try:
        coloring = color_from_packing(g, pr)
    except PackingFailure as exc:
        print(f"fail {exc.code}")
        print(str(exc), file=sys.stderr)
        return 1
    text = coloring_to_text(coloring)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print("ok")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_solve(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.graph))
    cfg = SearchConfig(
        find_all=args.all, use_symmetry=args.symmetry, node_limit=args.node_limit
    )
    result = solve(g, cfg, threads=args.threads)
    print(result.status)
    if args.all and result.count is not None:
        print(f"colorings {result.count}")
    if result.coloring is not None:
        text = coloring_to_text(result.coloring)
        if args.out:
            Path(args.out).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
    if result.status == COLORABLE:
        return 0
    if result.status == INCONCLUSIVE:
        return 3
    return 1


def _cmd_enumerate(args: argparse.Namespace) -> int:
    found = enumerate_colorable(args.n, args.connected)
    for g in found:
        parts = [f"graph {g.num_vertices} {g.num_edges}"]
        parts.extend(f"e {u} {v}" for u, v in g.edges)
        print(" ".join(parts))
    print(f"total {len(found)}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sscolor",
        description="Decide, construct, and verify strong set-colorings of graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-sts", help="generate the triple system on 2^n - 1 points")
    p.add_argument("--n", type=int, required=True, help="dimension of the point space")
    p.add_argument("--out", help="write the system here instead of stdout")
    p.set_defaults(run=_cmd_gen_sts)

    p = sub.add_parser("verify", help="check a coloring certificate against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring", required=True)
    p.set_defaults(run=_cmd_verify)

    p = sub.add_parser("color", help="build a certificate from a packing realization")
    p.add_argument("--graph", required=True)
    p.add_argument("--realization", required=True)
    p.add_argument("--out", help="write the certificate here instead of stdout")
    p.set_defaults(run=_cmd_color)

    p = sub.add_parser("solve", help="decide colorability by exhaustive search")
    p.add_argument("--graph", required=True)
    p.add_argument("--all", action="store_true", help="count all colorings")
    p.add_argument(
        "--symmetry", action="store_true", help="pin the first vertex label to 1"
    )
    p.add_argument("--node-limit", type=int, dest="node_limit")
    p.add_argument("--threads", type=int, default=1, help="root-split the search")
    p.add_argument("--out", help="write any certificate here instead of stdout")
    p.set_defaults(run=_cmd_solve)

    p = sub.add_parser("enumerate", help="list colorable graphs with 2^n - 1 elements")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.set_defaults(run=_cmd_enumerate)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (InputError, UnsupportedError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
