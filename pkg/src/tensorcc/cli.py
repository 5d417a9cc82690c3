"""Command-line interface.

Usage examples::

    tensorcc cc --gen paley:13 --exact
    tensorcc product-cc --gen complete:3 --gen complete:3 --mode both
    tensorcc verify graphs/g.txt --gen petersen --json
    tensorcc bench --sizes 50,100 --repetitions 5
    tensorcc generate er:10,0.5,42 > g.txt

Wherever a graph is expected, an edge-list file path and ``--gen SPEC`` are
interchangeable; sources are taken in the order given.
"""

from __future__ import annotations

import argparse
import json
import sys

from tensorcc import bench, generators
from tensorcc.closed_forms import MODES, product_cc_report, srg_detect
from tensorcc.errors import TensorCCError
from tensorcc.graphio import GraphSource, dumps, read_edge_list_file, srg_dict, write_edge_list, write_report
from tensorcc.product import DEFAULT_EDGE_BUDGET
from tensorcc.triangles import cc_report
from tensorcc.verify import verify_pair


class _AppendSource(argparse.Action):
    """Collect file paths and ``--gen`` specs into one ordered list."""

    def __call__(self, parser, namespace, values, option_string=None):
        sources = list(getattr(namespace, "sources", None) or [])
        kind = "gen" if option_string else "file"
        values = values if isinstance(values, list) else [values]
        sources.extend((kind, v) for v in values)
        namespace.sources = sources


def _add_sources(p: argparse.ArgumentParser, count: int) -> None:
    p.set_defaults(sources=[], source_count=count)
    p.add_argument("paths", nargs="*", action=_AppendSource, help="edge-list file(s)")
    p.add_argument("--gen", action=_AppendSource, metavar="SPEC", help="generated graph, e.g. paley:13")
    p.add_argument("--compact", action="store_true", help="renumber sparse file labels to 0..k-1")
    p.add_argument("--seed", type=int, default=None, help="seed for er specs that omit one")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--workers", type=int, default=1, help="threads for the triangle kernel")


def _load_sources(args) -> list[GraphSource]:
    if len(args.sources) != args.source_count:
        raise TensorCCError(f"expected {args.source_count} graph source(s), got {len(args.sources)}")
    out = []
    for kind, value in args.sources:
        if kind == "gen":
            out.append(GraphSource(generators.from_spec(value, args.seed), f"gen:{value}"))
        else:
            out.append(read_edge_list_file(value, compact=args.compact))
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tensorcc", description="Clustering coefficients of tensor products of graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cc", help="clustering coefficients of one graph")
    _add_sources(p, 1)
    _add_common(p)
    p.add_argument("--exact", action="store_true", help="add rational values as 'num/den' strings")
    p.add_argument("--per-vertex", action="store_true", help="include per-vertex arrays")

    p = sub.add_parser("product-cc", help="global coefficient of G x H")
    _add_sources(p, 2)
    _add_common(p)
    p.add_argument("--mode", choices=MODES, default="implicit")
    p.add_argument("--exact", action="store_true")
    p.add_argument("--budget", type=int, default=DEFAULT_EDGE_BUDGET, help="max product edges")

    p = sub.add_parser("verify", help="check every closed form against the materialized product")
    _add_sources(p, 2)
    _add_common(p)
    p.add_argument("--budget", type=int, default=DEFAULT_EDGE_BUDGET, help="max product edges")
    p.add_argument("--json", action="store_true", help="JSON instead of a text table")

    p = sub.add_parser("srg", help="detect strongly regular parameters")
    _add_sources(p, 1)
    p.add_argument("--exact", action="store_true")

    p = sub.add_parser("bench", help="time implicit vs explicit evaluation")
    p.add_argument(
        "--sizes",
        type=lambda s: tuple(int(x) for x in s.split(",")),
        default=bench.DEFAULT_SIZES,
        help="comma-separated factor orders",
    )
    p.add_argument("--repetitions", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    _add_common(p)

    p = sub.add_parser("generate", help="print a generated graph as an edge list")
    p.add_argument("spec", help=", ".join(generators.FAMILIES))
    p.add_argument("--seed", type=int, default=None)
    return parser


def cmd_cc(args) -> int:
    (src,) = _load_sources(args)
    report = cc_report(src.graph, exact=args.exact, workers=args.workers)
    print(write_report(report, per_vertex=args.per_vertex, source=src.origin))
    return 0


def cmd_product_cc(args) -> int:
    g, h = _load_sources(args)
    report = product_cc_report(
        g.graph, h.graph, mode=args.mode, exact=args.exact, budget=args.budget, workers=args.workers
    )
    print(write_report(report))
    return 0


def cmd_verify(args) -> int:
    g, h = _load_sources(args)
    outcome = verify_pair(g.graph, h.graph, budget=args.budget, workers=args.workers)
    print(write_report(outcome) if args.json else outcome.to_text())
    return 0 if outcome.passed else 1


def cmd_srg(args) -> int:
    (src,) = _load_sources(args)
    print(dumps(srg_dict(srg_detect(src.graph), src.graph.n, args.exact)))
    return 0


def cmd_bench(args) -> int:
    rows = bench.run_bench(args.sizes, args.repetitions, args.seed, workers=args.workers)
    print(json.dumps({"kind": "bench", "rows": rows}, indent=2) if args.json else bench.format_table(rows))
    return 0


def cmd_generate(args) -> int:
    print(write_edge_list(generators.from_spec(args.spec, args.seed)))
    return 0


COMMANDS = {
    "cc": cmd_cc,
    "product-cc": cmd_product_cc,
    "verify": cmd_verify,
    "srg": cmd_srg,
    "bench": cmd_bench,
    "generate": cmd_generate,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (TensorCCError, OSError) as exc:
        print(f"tensorcc: error: {exc}", file=sys.stderr)
        return 2
