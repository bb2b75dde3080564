"""Command-line front end.

Exit codes: 0 success, 1 verdict failure (a proven identity came out false),
2 usage or input errors, 3 enumeration cap exceeded. Output is deterministic
for a fixed (argv, input, seed); reports carry wall-clock timings, which are
the one field that varies between runs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .degseq import enumerate_degree_sequences
from .errors import (
    ChainBroken,
    EnumerationCapExceeded,
    ForestryError,
    SelfCheckFailed,
)
from .generators import from_spec
from .limits import DEFAULT_ENUMERATION_CAP
from .multigraph import Multigraph, parse_edge_list
from .orientations import (
    count_distinct_indeg,
    count_distinct_outdeg,
    count_distinct_score,
)
from .tutte import count_forests_brute, t21, tutte_deletion_contraction
from .verify import (
    FAILURE_VERDICTS,
    VerifyReport,
    compare_counts,
    sweep,
    verify_equivalence_chain,
)

_GRAPH_COMMANDS = (
    "tutte",
    "t21",
    "forests",
    "degseqs",
    "orient-counts",
    "verify",
    "chain",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="forestry",
        description="Multigraph invariants: Tutte polynomial, forests, "
        "orientation vectors, degree sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, graph_source: bool = True):
        if graph_source:
            p.add_argument(
                "input",
                nargs="?",
                default=None,
                help="edge-list file, or '-' for stdin (mutually exclusive with --gen)",
            )
            p.add_argument(
                "--gen",
                metavar="FAMILY:PARAMS",
                default=None,
                help="generate the input graph, e.g. cycle:4 or random_bipartite:3,3,0.5",
            )
        p.add_argument("--seed", type=int, default=0, help="PRNG seed (default 0)")
        p.add_argument(
            "--cap",
            type=int,
            default=DEFAULT_ENUMERATION_CAP,
            help=f"enumeration cap in edges (default {DEFAULT_ENUMERATION_CAP})",
        )
        p.add_argument(
            "--format",
            choices=("json", "table"),
            default="json",
            help="output format (default json)",
        )
        p.add_argument(
            "--parallel",
            type=int,
            default=os.cpu_count() or 1,
            metavar="N",
            help="worker threads for subset ranges and sweep instances",
        )

    descriptions = {
        "tutte": "full Tutte polynomial (deletion-contraction)",
        "t21": "T(2,1): the number of forests (memoized recursion)",
        "forests": "brute-force forest count over all edge subsets",
        "degseqs": "distinct degree sequences of spanning subgraphs",
        "orient-counts": "distinct indegree/outdegree/score vector counts",
        "verify": "forest count vs degree-sequence count verdict",
        "chain": "equivalence chain: t21 and all orientation-vector counts",
    }
    for name in _GRAPH_COMMANDS:
        p = sub.add_parser(name, help=descriptions[name])
        add_common(p)
        if name == "tutte":
            p.add_argument(
                "--point",
                metavar="X,Y",
                default=None,
                help="evaluate at integer point X,Y instead of printing coefficients",
            )

    p = sub.add_parser("sweep", help="run verify over seeded instances of a family")
    p.add_argument("--gen", metavar="FAMILY:PARAMS", required=True)
    p.add_argument("--count", type=int, required=True, help="number of instances")
    add_common(p, graph_source=False)

    p = sub.add_parser("gen", help="emit a generated graph in edge-list format")
    p.add_argument("family", metavar="FAMILY:PARAMS")
    p.add_argument("--seed", type=int, default=0, help="PRNG seed (default 0)")
    return parser


def _load_graph(args: argparse.Namespace) -> Multigraph:
    if (args.input is None) == (args.gen is None):
        raise ForestryError("exactly one graph source required: an input file or --gen")
    if args.gen is not None:
        return from_spec(args.gen, args.seed)
    if args.input == "-":
        return parse_edge_list(sys.stdin.read())
    with open(args.input, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def _report_table(reports: list[VerifyReport]) -> str:
    header = f"{'n':>3} {'m':>3}  {'forests':>12} {'degseqs':>12}  {'bip':>3}  verdict"
    rows = [header, "-" * len(header)]
    for r in reports:
        rows.append(
            f"{r.num_vertices:>3} {r.num_edges:>3}  {r.forest_count:>12} "
            f"{r.degseq_count:>12}  {'yes' if r.bipartite else 'no':>3}  {r.verdict}"
        )
    return "\n".join(rows)


def _cmd_tutte(args) -> int:
    g = _load_graph(args)
    poly = tutte_deletion_contraction(g)
    if args.point is not None:
        try:
            x_str, y_str = args.point.split(",")
            x, y = int(x_str), int(y_str)
        except ValueError:
            raise ForestryError(f"--point expects two integers 'X,Y', got {args.point!r}") from None
        print(poly.evaluate(x, y))
    elif args.format == "json":
        print(json.dumps(poly.to_json_obj()))
    else:
        print(f"T(x,y) = {poly}")
    return 0


def _cmd_t21(args) -> int:
    print(t21(_load_graph(args)))
    return 0


def _cmd_forests(args) -> int:
    print(count_forests_brute(_load_graph(args), args.cap, args.parallel))
    return 0


def _cmd_degseqs(args) -> int:
    ds = enumerate_degree_sequences(_load_graph(args), args.cap)
    if args.format == "json":
        print(json.dumps({"count": str(len(ds)), "vectors": ds.to_json_obj()}))
    else:
        print(f"count: {len(ds)}")
        for vec in sorted(ds.vectors):
            print(" ".join(str(x) for x in vec))
    return 0


def _cmd_orient_counts(args) -> int:
    g = _load_graph(args)
    counts = {
        "indegree": count_distinct_indeg(g, args.cap),
        "outdegree": count_distinct_outdeg(g, args.cap),
        "score": count_distinct_score(g, args.cap),
    }
    if args.format == "json":
        print(json.dumps({k: str(v) for k, v in counts.items()}))
    else:
        for k, v in counts.items():
            print(f"{k:>9}: {v}")
    return 0


def _cmd_verify(args) -> int:
    report = compare_counts(
        _load_graph(args), args.cap, args.parallel, family=args.gen, seed=args.seed
    )
    if args.format == "json":
        print(json.dumps(report.to_json_obj()))
    else:
        print(_report_table([report]))
    return 1 if report.verdict in FAILURE_VERDICTS else 0


def _cmd_chain(args) -> int:
    report = verify_equivalence_chain(_load_graph(args), args.cap)
    if args.format == "json":
        print(json.dumps(report.to_json_obj()))
    else:
        scope = "all" if report.exhaustive else "sampled"
        print(
            f"common value {report.common_value} across t21, indegree, outdegree, "
            f"score and {report.orientations_checked} {scope} orientations"
        )
    return 0


def _cmd_sweep(args) -> int:
    reports = sweep(args.gen, args.count, args.seed, args.cap, args.parallel)
    if args.format == "json":
        for r in reports:
            print(json.dumps(r.to_json_obj()))
    else:
        print(_report_table(reports))
    return 1 if any(r.verdict in FAILURE_VERDICTS for r in reports) else 0


def _cmd_gen(args) -> int:
    sys.stdout.write(from_spec(args.family, args.seed).to_edge_list())
    return 0


_HANDLERS = {
    "tutte": _cmd_tutte,
    "t21": _cmd_t21,
    "forests": _cmd_forests,
    "degseqs": _cmd_degseqs,
    "orient-counts": _cmd_orient_counts,
    "verify": _cmd_verify,
    "chain": _cmd_chain,
    "sweep": _cmd_sweep,
    "gen": _cmd_gen,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except EnumerationCapExceeded as exc:
        print(f"forestry: {exc}", file=sys.stderr)
        return 3
    except (ChainBroken, SelfCheckFailed) as exc:
        print(f"forestry: {exc}", file=sys.stderr)
        return 1
    except (ForestryError, OSError) as exc:
        print(f"forestry: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
