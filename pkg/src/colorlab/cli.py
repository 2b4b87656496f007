"""Command-line entry point: ``colorlab {params,verify-gn,verify-bounds,search-gap}``.

Graphs come in as graph6 lines on stdin (or as arguments to ``params``);
results go out as JSON lines on stdout, diagnostics on stderr.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Callable, Iterable, Iterator, TextIO

from .correspondence import DEFAULT_BUDGET
from .errors import Graph6Error
from .graph import Graph, parse_graph6, read_graph6_lines
from .harness import gap_record, inequality_checks, parameter_report, summarize_gaps, verify_gn

WORKERS_ENV = "COLORLAB_WORKERS"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _workers(arg: int | None) -> int:
    if arg is not None:
        return max(1, arg)
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def ordered_map(func: Callable, items: Iterable, workers: int) -> Iterator:
    """``map`` that may fan out to processes but always yields in input order."""
    if workers <= 1:
        yield from map(func, items)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(func, items, chunksize=1)


class Output:
    def __init__(self, stream: TextIO, table: bool):
        self.stream = stream
        self.table = table

    def emit(self, record: dict) -> None:
        if self.table:
            self.stream.write(_table_row(record) + "\n")
        else:
            self.stream.write(json.dumps(record, sort_keys=True, separators=(",", ":")) + "\n")
        self.stream.flush()


def _fmt_param(entry) -> str:
    if not isinstance(entry, dict):
        return str(entry)
    if "value" in entry:
        return str(entry["value"])
    if "lower" in entry:
        return f"[{entry['lower']},{entry['upper']}]"
    return entry.get("status", "?")


def _table_row(rec: dict) -> str:
    if "summary" in rec:
        return "summary " + " ".join(f"{k}={v}" for k, v in rec["summary"].items())
    if "checks" in rec and "n" in rec and "graph6" not in rec:
        marks = " ".join(f"{name.split('_')[0]}:{c['status']}" for name, c in rec["checks"].items())
        return f"G_{rec['n']:<3} {'ok' if rec['ok'] else 'FAIL'}  {marks}"
    if "status" in rec and "graph6" in rec and "at" not in rec:
        return f"{rec['graph6']:<12} {rec['status']}  {rec.get('message', '')}"
    cols = [f"{rec.get('graph6', ''):<12}", f"n={rec.get('n')}", f"m={rec.get('edges')}"]
    for key in ("degeneracy", "mad", "chromatic", "list_chromatic", "at", "dp", "gap"):
        if key in rec:
            cols.append(f"{key}={_fmt_param(rec[key])}")
    if rec.get("violations"):
        cols.append("VIOLATIONS=" + ",".join(rec["violations"]))
    if rec.get("hit"):
        cols.append("HIT")
    return "  ".join(cols)


def _stream_graphs(lines: Iterable[str], out: Output, stats: dict) -> Iterator[tuple[str, Graph]]:
    for lineno, text, parsed in read_graph6_lines(lines):
        if isinstance(parsed, Graph6Error):
            stats["skipped"] += 1
            print(f"line {lineno}: {parsed}", file=sys.stderr)
            out.emit({"graph6": text, "line": lineno, "status": "parse-error", "message": str(parsed)})
            continue
        yield text, parsed


# -- subcommands -------------------------------------------------------------


def _params_one(item: tuple[str, Graph], choosability: bool, budget: int) -> dict:
    text, g = item
    return parameter_report(g, graph6=text, choosability=choosability, budget=budget)


def cmd_params(args, out: Output) -> int:
    texts = args.graph6 or [line.strip() for line in sys.stdin if line.strip()]
    graphs = []
    for text in texts:
        try:
            graphs.append((text, parse_graph6(text)))
        except Graph6Error as exc:
            print(f"{text!r}: {exc}", file=sys.stderr)
            return EXIT_USAGE
    func = partial(_params_one, choosability=args.choosability, budget=args.budget)
    for rec in ordered_map(func, graphs, _workers(args.workers)):
        out.emit(rec)
    return EXIT_OK


def cmd_verify_gn(args, out: Output) -> int:
    start, stop = args.from_n, args.to_n
    if start < 4 or stop < start:
        print("need 4 <= --from <= --to", file=sys.stderr)
        return EXIT_USAGE
    ns = [n for n in range(start, stop + 1) if n % 2 == 0]
    failed = []
    for rec in ordered_map(partial(verify_gn, budget=args.budget), ns, _workers(args.workers)):
        out.emit(rec)
        if not rec["ok"]:
            failed.append(rec["n"])
            print(f"G_{rec['n']}: failed {', '.join(rec['failed'])}", file=sys.stderr)
    out.emit({"summary": {"checked": ns, "failed": failed}})
    return EXIT_FAIL if failed else EXIT_OK


def _bounds_one(item: tuple[str, Graph], budget: int) -> dict:
    text, g = item
    rec = inequality_checks(g, budget)
    rec["graph6"] = text
    return rec


def cmd_verify_bounds(args, out: Output) -> int:
    stats = {"skipped": 0}
    selected = []
    for text, g in _stream_graphs(sys.stdin, out, stats):
        if g.n > args.max_n or not g.is_connected() or g.n == 0:
            stats["skipped"] += 1
            out.emit({"graph6": text, "status": "skipped", "message": "disconnected or larger than --max-n"})
            continue
        selected.append((text, g))
    counts = {"graphs": 0, "violations": 0, "undetermined": 0}
    offenders = []
    for rec in ordered_map(partial(_bounds_one, budget=args.budget), selected, _workers(args.workers)):
        out.emit(rec)
        counts["graphs"] += 1
        counts["undetermined"] += sum(1 for c in rec["checks"] if c["status"] == "undetermined")
        if rec["violations"]:
            counts["violations"] += len(rec["violations"])
            offenders.append(rec["graph6"])
            print(f"violation on {rec['graph6']}: {', '.join(rec['violations'])}", file=sys.stderr)
    out.emit({"summary": {**counts, "skipped": stats["skipped"], "offenders": offenders}})
    return EXIT_FAIL if offenders else EXIT_OK


def _gap_one(item: tuple[str, Graph], budget: int) -> dict:
    text, g = item
    return gap_record(g, text, budget)


def cmd_search_gap(args, out: Output) -> int:
    stats = {"skipped": 0}
    graphs = list(_stream_graphs(sys.stdin, out, stats))
    records = []
    for rec in ordered_map(partial(_gap_one, budget=args.budget), graphs, _workers(args.workers)):
        out.emit(rec)
        records.append(rec)
    out.emit(summarize_gaps(records, stats["skipped"]))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="colorlab", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--workers", type=int, default=None,
                        help=f"worker processes (default: ${WORKERS_ENV} or 1)")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="maximum enumeration count for a cover search")
    common.add_argument("--table", action="store_true", help="human-readable rows instead of JSON lines")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", parents=[common], help="parameter report for graph6 inputs")
    p.add_argument("graph6", nargs="*", help="graph6 strings (default: read stdin)")
    p.add_argument("--choosability", action="store_true", help="also compute the list chromatic number")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("verify-gn", parents=[common], help="check AT and DP on the G_n family")
    p.add_argument("--from", dest="from_n", type=int, default=4)
    p.add_argument("--to", dest="to_n", type=int, default=10)
    p.set_defaults(func=cmd_verify_gn)

    p = sub.add_parser("verify-bounds", parents=[common], help="inequality suite on a graph6 stream")
    p.add_argument("--max-n", type=int, default=5)
    p.set_defaults(func=cmd_verify_bounds)

    p = sub.add_parser("search-gap", parents=[common], help="look for graphs with DP >= AT + 2")
    p.set_defaults(func=cmd_search_gap)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    return args.func(args, Output(sys.stdout, args.table))


if __name__ == "__main__":
    sys.exit(main())
