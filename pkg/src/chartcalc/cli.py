"""Command-line front end.

Every subcommand reads and writes charts in the CHART/1 text format.
Exit codes: 0 for a clean run, 1 when violations, imbalances or
unresolved findings are present (or a requested reduction was not
found), 2 for usage errors.
"""

from __future__ import annotations

import argparse
import sys

from chartcalc.core import parse_chart, serialize_chart
from chartcalc.errors import BudgetTooLarge, ChartError
from chartcalc.harness import (
    EnumerationBudget,
    SUITE_IDS,
    enumerate_charts,
    export,
    run_lemma_suite,
)
from chartcalc.moves import apply_move, move_from_line, move_to_line, search_reduction
from chartcalc.patterns import match, pattern_library
from chartcalc.regions import (
    Region,
    complexity,
    detect_lenses,
    io_balance,
    region_from_faces,
)
from chartcalc.subgraphs import detect_shapes, extract_subgraph
from chartcalc.validator import check_minimal_form

__all__ = ["main"]

EXIT_CLEAN = 0
EXIT_FINDINGS = 1
EXIT_USAGE = 2


def _load(path: str):
    with open(path, "rb") as fh:
        return parse_chart(fh.read())


def _faces_arg(text: str) -> list[int]:
    return [int(f) for f in text.split(",") if f != ""]


def _emit(data: bytes, output: str | None) -> None:
    if output:
        with open(output, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)


def _cmd_validate(args) -> int:
    report = check_minimal_form(_load(args.chart))
    sys.stdout.write(report.render_jsonl() if args.jsonl else report.render_text())
    return EXIT_CLEAN if report.clean else EXIT_FINDINGS


def _cmd_features(args) -> int:
    chart = _load(args.chart)
    kinds = sorted(chart.nodes.values())
    lines = [
        f"n: {chart.braid_index}",
        f"nodes: {len(chart.nodes)} "
        f"(white {kinds.count('white')}, black {kinds.count('black')}, "
        f"crossing {kinds.count('crossing')}, marker {kinds.count('marker')})",
        f"edges: {len(chart.darts) // 2}",
        f"complexity: {complexity(chart)}",
    ]
    for m in range(1, chart.braid_index):
        sub = extract_subgraph(chart, m)
        if sub.edges:
            counts = {}
            for e in sub.edges:
                counts[e.kind] = counts.get(e.kind, 0) + 1
            body = ", ".join(f"{k} {v}" for k, v in sorted(counts.items()))
            lines.append(f"label {m}: {body}")
        for hit in detect_shapes(chart, m):
            lines.append(f"shape: {hit['shape']} labels={hit['labels']}")
    for lens in detect_lenses(chart):
        lines.append(f"lens: type={lens['type']} whites={lens['whites']}")
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_CLEAN


def _cmd_subgraph(args) -> int:
    chart = _load(args.chart)
    sub = extract_subgraph(chart, args.label)
    for e in sub.edges:
        sys.stdout.write(e.describe() + "\n")
    sys.stdout.write(f"components: {len(sub.components)}\n")
    return EXIT_CLEAN


def _cmd_io_check(args) -> int:
    chart = _load(args.chart)
    region = region_from_faces(chart, _faces_arg(args.faces), closure=False)
    inward, outward = io_balance(chart, region, args.label)
    sys.stdout.write(f"inward: {inward}\noutward: {outward}\n")
    return EXIT_CLEAN if inward == outward else EXIT_FINDINGS


def _cmd_apply_move(args) -> int:
    chart = _load(args.chart)
    result = apply_move(chart, move_from_line(args.move))
    _emit(serialize_chart(result).encode(), args.output)
    return EXIT_CLEAN


def _cmd_match_pattern(args) -> int:
    chart = _load(args.chart)
    library = pattern_library()
    if args.pattern not in library:
        raise SystemExit(EXIT_USAGE)
    region = None
    if args.faces is not None:
        region = region_from_faces(chart, _faces_arg(args.faces), closure=True)
    hits = match(chart, region, library[args.pattern])
    for hit in hits:
        nodes = " ".join(f"{k}={v}" for k, v in sorted(hit["nodes"].items()))
        sys.stdout.write(
            f"{hit['variant']} k={hit['k']} mu={hit['mu']} {nodes}\n"
        )
    sys.stdout.write(f"matches: {len(hits)}\n")
    return EXIT_CLEAN


def _cmd_reduce(args) -> int:
    chart = _load(args.chart)
    trace = search_reduction(chart, depth=args.depth, beam=args.beam)
    if trace is None:
        sys.stdout.write("no reduction found\n")
        return EXIT_FINDINGS
    for mv in trace.moves:
        sys.stdout.write(move_to_line(mv) + "\n")
    return EXIT_CLEAN


def _cmd_enumerate(args) -> int:
    budget = EnumerationBudget(
        n_max=args.n,
        white_max=args.white,
        black_max=args.black,
        crossing_max=args.crossing,
    )
    count = 0
    for chart in enumerate_charts(budget):
        sys.stdout.write(f"--- chart {count}\n")
        sys.stdout.write(serialize_chart(chart))
        count += 1
    sys.stdout.write(f"--- total {count}\n")
    return EXIT_CLEAN


def _cmd_check(args) -> int:
    corpus = []
    if args.n is not None:
        budget = EnumerationBudget(
            n_max=args.n,
            white_max=args.white,
            black_max=args.black,
            crossing_max=args.crossing,
        )
        corpus.extend(enumerate_charts(budget))
    for path in args.charts:
        corpus.append(_load(path))
    suite = args.suite if args.suite else None
    report = run_lemma_suite(corpus, suite=suite,
                             move_depth=args.depth, beam=args.beam)
    sys.stdout.write(report.render_text())
    return EXIT_CLEAN if report.ok else EXIT_FINDINGS


def _cmd_export(args) -> int:
    chart = _load(args.chart)
    thick = tuple(_faces_arg(args.thick)) if args.thick else ()
    _emit(export(chart, args.format, thick_labels=thick), args.output)
    return EXIT_CLEAN


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chartcalc",
        description="Chart calculus toolkit: validate, analyze, rewrite, "
                    "enumerate and render charts (CHART/1 files).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="axiom and normal-form check")
    p.add_argument("chart")
    p.add_argument("--jsonl", action="store_true")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("features", help="summary of counts, shapes, lenses")
    p.add_argument("chart")
    p.set_defaults(func=_cmd_features)

    p = sub.add_parser("subgraph", help="edges of one label subgraph")
    p.add_argument("chart")
    p.add_argument("--label", type=int, required=True)
    p.set_defaults(func=_cmd_subgraph)

    p = sub.add_parser("io-check", help="in/out arc balance over faces")
    p.add_argument("chart")
    p.add_argument("--label", type=int, required=True)
    p.add_argument("--faces", required=True,
                   help="comma-separated face indices")
    p.set_defaults(func=_cmd_io_check)

    p = sub.add_parser("apply-move", help="apply one elementary move")
    p.add_argument("chart")
    p.add_argument("--move", required=True,
                   help="move line: KIND DIRECTION key=value ...")
    p.add_argument("--output", "-o")
    p.set_defaults(func=_cmd_apply_move)

    p = sub.add_parser("match-pattern", help="match a library pattern")
    p.add_argument("chart")
    p.add_argument("--pattern", required=True,
                   choices=sorted(pattern_library()))
    p.add_argument("--faces")
    p.set_defaults(func=_cmd_match_pattern)

    p = sub.add_parser("reduce", help="search for a complexity-lowering trace")
    p.add_argument("chart")
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--beam", type=int, default=16)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("enumerate", help="exhaustive corpus within a budget")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--white", type=int, required=True)
    p.add_argument("--black", type=int, required=True)
    p.add_argument("--crossing", type=int, required=True)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("check", help="run lemma suites over a corpus")
    p.add_argument("charts", nargs="*",
                   help="extra CHART/1 files joined to the corpus")
    p.add_argument("--suite", nargs="*", choices=SUITE_IDS)
    p.add_argument("--n", type=int)
    p.add_argument("--white", type=int, default=2)
    p.add_argument("--black", type=int, default=4)
    p.add_argument("--crossing", type=int, default=2)
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--beam", type=int, default=16)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("export", help="render to dot or svg")
    p.add_argument("chart")
    p.add_argument("--format", required=True, choices=("dot", "svg"))
    p.add_argument("--thick", help="comma-separated labels drawn thick")
    p.add_argument("--output", "-o")
    p.set_defaults(func=_cmd_export)

    return parser


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetTooLarge as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except FileNotFoundError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except ChartError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_FINDINGS


if __name__ == "__main__":
    raise SystemExit(main())
