"""Command-line interface: analyze, filter, verify, search and gen.

Exit status: 0 success, 1 violations or disagreement, 2 usage errors,
3 input/output and decode errors.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import logging
import os
import sys
from typing import Iterator, Optional, TextIO

from .connectivity import connectivity_report, is_super_edge_connected
from .enumeration import EnumerationError, connected_classes
from .families import FamilyError, make, parse_token, registry_instances
from .graph import Graph, GraphError, components, is_connected
from .graph6 import (
    EdgeListError,
    Graph6Error,
    decode_graph6,
    encode_graph6,
    stream_decode,
    stream_edgelist,
)
from .harness import (
    THEOREM_TOKENS,
    SpecError,
    class_source,
    cross_validate,
    theorem_specs,
    verify_labeled,
    verify_sufficiency,
)
from .patterns import PairSpec, Pattern, PatternError, atlas_flags, custom_pattern, is_free, resolve

log = logging.getLogger("superedge")

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_IO = 3

JOBS_ENV = "SUPEREDGE_JOBS"


class UsageError(Exception):
    pass


def _default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _bool(text: str) -> bool:
    low = text.lower()
    if low in ("true", "yes", "1"):
        return True
    if low in ("false", "no", "0"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superedge",
        description="Super-edge-connectivity and forbidden-subgraph toolkit.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def io_opts(p: argparse.ArgumentParser, with_input: bool = True) -> None:
        if with_input:
            p.add_argument("input", nargs="?", default="-", help="input file, '-' for stdin")
            p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
            p.add_argument("--skip-bad", action="store_true", help="log and skip malformed records")
        p.add_argument("-o", "--output", default="-", help="output file, '-' for stdout")
        p.add_argument(
            "--pattern",
            action="append",
            default=[],
            metavar="NAME=GRAPH6",
            help="register a custom pattern (NAME=@file reads an edge list)",
        )

    def fmt_opts(p: argparse.ArgumentParser) -> None:
        group = p.add_mutually_exclusive_group()
        group.add_argument("--json", action="store_true", help="machine-readable JSON")
        group.add_argument("--text", action="store_true", help="human-readable text (default)")

    p = sub.add_parser("analyze", help="connectivity report and pattern flags per graph")
    io_opts(p)
    fmt_opts(p)

    p = sub.add_parser("filter", help="pass graph6 records satisfying every predicate")
    io_opts(p)
    p.add_argument("--free", metavar="LIST", help="comma-separated patterns the graph must avoid")
    p.add_argument("--contains", metavar="LIST", help="comma-separated patterns the graph must contain")
    p.add_argument("--super", type=_bool, metavar="BOOL", help="require super (true) or non-super (false)")
    p.add_argument("--connected", type=_bool, metavar="BOOL", help="require connectivity")
    p.add_argument("--nmax", type=int, help="drop graphs with more vertices")

    p = sub.add_parser("verify", help="scan graphs for violations of a theorem")
    io_opts(p, with_input=False)
    fmt_opts(p)
    p.add_argument("--theorem", required=True, choices=THEOREM_TOKENS)
    p.add_argument("--nmax", type=int, default=7, help="largest order for built-in enumeration")
    p.add_argument("--nmin", type=int, default=1, help="smallest order for built-in enumeration")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--input", dest="source", help="scan a graph6 (or --format edgelist) file instead")
    src.add_argument("--labeled", type=int, metavar="N", help="scan all labelled graphs on N vertices")
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p.add_argument("--skip-bad", action="store_true")
    p.add_argument("--jobs", type=int, default=None, help=f"worker processes (default ${JOBS_ENV} or 1)")
    p.add_argument("--sidecar", help="write violating graphs as graph6 to this file")

    p = sub.add_parser("search", help="look for a counterexample for a forbidden pair")
    io_opts(p, with_input=False)
    fmt_opts(p)
    p.add_argument("--pair", required=True, metavar="A,B", help="one or two pattern names")
    p.add_argument("--nmax", type=int, default=8)
    p.add_argument("--jobs", type=int, default=None)

    p = sub.add_parser("gen", help="emit graph6 for family instances or class representatives")
    io_opts(p, with_input=False)
    p.add_argument("tokens", nargs="*", metavar="FAMILY:SIZE", help="e.g. cycle:7 prism:3 grid_2x3")
    p.add_argument("--classes", type=int, metavar="N", help="all connected classes of order N")
    p.add_argument("--classes-upto", type=int, metavar="N", help="all connected classes of order <= N")
    p.add_argument("--registry", action="store_true", help="every registered non-super instance")
    return parser


# -- helpers ------------------------------------------------------------------


@contextlib.contextmanager
def _open_in(path: str) -> Iterator[TextIO]:
    if path == "-":
        yield sys.stdin
    else:
        with open(path, encoding="ascii") as fh:
            yield fh


@contextlib.contextmanager
def _open_out(path: str) -> Iterator[TextIO]:
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _read(fh: TextIO, fmt: str, skip_bad: bool) -> Iterator[tuple[int, Graph]]:
    if fmt == "edgelist":
        return stream_edgelist(fh)
    return stream_decode(fh, skip_bad=skip_bad)


def _custom_patterns(specs: list[str]) -> dict[str, Pattern]:
    out = {}
    for spec in specs:
        if "=" not in spec:
            raise UsageError(f"--pattern expects NAME=GRAPH6, got {spec!r}")
        name, value = spec.split("=", 1)
        if value.startswith("@"):
            with open(value[1:], encoding="ascii") as fh:
                graphs = list(stream_edgelist(fh))
            if len(graphs) != 1:
                raise UsageError(f"{value[1:]} must hold exactly one edge list")
            g = graphs[0][1]
        else:
            g = decode_graph6(value)
        out[name] = custom_pattern(name, g)
    return out


def _names(text: Optional[str]) -> list[str]:
    return [t for t in (text or "").split(",") if t.strip()]


# -- subcommands ----------------------------------------------------------------


def cmd_analyze(args: argparse.Namespace) -> int:
    extra = _custom_patterns(args.pattern)
    with _open_in(args.input) as fin, _open_out(args.output) as out:
        for index, g in _read(fin, args.format, args.skip_bad):
            record = {"index": index, "graph6": encode_graph6(g), "connected": is_connected(g)}
            if record["connected"]:
                record["report"] = connectivity_report(g).to_dict()
            else:
                record["components"] = components(g)
            record["contains"] = atlas_flags(g, extra)
            if args.json:
                out.write(json.dumps(record, sort_keys=True) + "\n")
            else:
                out.write(_analyze_text(record))
    return EXIT_OK


def _analyze_text(rec: dict) -> str:
    lines = [f"#{rec['index']} {rec['graph6']}"]
    if not rec["connected"]:
        lines.append(f"  disconnected: components {rec['components']}")
    else:
        r = rec["report"]
        lines.append(
            f"  n={r['n']} m={r['m']} delta={r['delta']} Delta={r['Delta']} "
            f"kappa={r['kappa']} lambda={r['lambda']} lambda'={r['lambda_restricted']}"
        )
        lines.append(f"  maximally edge-connected: {r['maximally_edge_connected']}  super: {r['super']}")
        if r["witness"]:
            w = r["witness"]
            lines.append(f"  witness: side {w['side']} boundary {w['boundary']}")
        for note in r["notes"]:
            lines.append(f"  note: {note}")
    found = [name for name, hit in rec["contains"].items() if hit]
    lines.append(f"  induced: {', '.join(found) if found else '-'}")
    return "\n".join(lines) + "\n"


def cmd_filter(args: argparse.Namespace) -> int:
    extra = _custom_patterns(args.pattern)
    free = resolve(_names(args.free), extra)
    need = resolve(_names(args.contains), extra)
    seen = passed = 0
    with _open_in(args.input) as fin, _open_out(args.output) as out:
        for _, g in _read(fin, args.format, args.skip_bad):
            seen += 1
            if args.nmax is not None and g.n > args.nmax:
                continue
            conn = is_connected(g)
            if args.connected is not None and conn != args.connected:
                continue
            if free and not is_free(g, free):
                continue
            if need and any(is_free(g, [p]) for p in need):
                continue
            if args.super is not None:
                if not conn or is_super_edge_connected(g)[0] != args.super:
                    continue
            passed += 1
            out.write(encode_graph6(g) + "\n")
    print(f"passed: {passed} of {seen}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    extra = _custom_patterns(args.pattern)
    if args.theorem == "1.4" and "H1" not in extra:
        log.warning("theorem 1.4: pass --pattern H1=<graph6> to include the {H1,P5} branch")
    specs = theorem_specs(args.theorem, extra)
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    reports = []
    for spec in specs:
        if args.labeled is not None:
            report = verify_labeled(spec, args.labeled, jobs=jobs, progress=args.verbose)
        elif args.source is not None:
            with _open_in(args.source) as fin:
                source = list(_read(fin, args.format, args.skip_bad))
            report = verify_sufficiency(spec, source, args.source, jobs)
        else:
            if args.nmax > 8:
                raise UsageError("built-in enumeration stops at n = 8; use --input with a graph6 file")
            report = verify_sufficiency(
                spec, class_source(args.nmax, args.nmin), f"classes n={args.nmin}..{args.nmax}", jobs
            )
        reports.append(report)
    with _open_out(args.output) as out:
        if args.json:
            payload = [r.to_dict() for r in reports]
            out.write(json.dumps(payload if len(payload) > 1 else payload[0], indent=2, sort_keys=True) + "\n")
        else:
            out.write("\n".join(r.to_text() for r in reports))
    if args.sidecar:
        with open(args.sidecar, "w", encoding="ascii") as fh:
            for r in reports:
                for v in r.violations:
                    fh.write(v["graph6"] + "\n")
    return EXIT_OK if all(r.success for r in reports) else EXIT_FAIL


def cmd_search(args: argparse.Namespace) -> int:
    extra = _custom_patterns(args.pattern)
    pair = PairSpec(tuple(resolve(_names(args.pair), extra)))
    if args.nmax > 8:
        raise UsageError("built-in enumeration stops at n = 8")
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    result = cross_validate(pair, n_max=args.nmax, jobs=jobs)
    with _open_out(args.output) as out:
        if args.json:
            out.write(json.dumps(result.to_dict(), indent=2, sort_keys=True) + "\n")
        else:
            if result.counterexample is not None:
                out.write(result.counterexample + "\n")
            elif not result.predicted:
                out.write("none within budget\n")
            out.write(result.to_text())
    return EXIT_OK if result.agrees else EXIT_FAIL


def cmd_gen(args: argparse.Namespace) -> int:
    graphs: list[Graph] = [make(parse_token(t)) for t in args.tokens]
    if args.classes is not None:
        graphs.extend(connected_classes(args.classes))
    if args.classes_upto is not None:
        for n in range(1, args.classes_upto + 1):
            graphs.extend(connected_classes(n))
    if args.registry:
        graphs.extend(make(spec) for spec in registry_instances())
    if not graphs:
        raise UsageError("gen needs at least one FAMILY:SIZE token, --classes, --classes-upto or --registry")
    with _open_out(args.output) as out:
        for g in graphs:
            out.write(encode_graph6(g) + "\n")
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "filter": cmd_filter,
    "verify": cmd_verify,
    "search": cmd_search,
    "gen": cmd_gen,
}


def parse_args(argv: Optional[list[str]] = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)


def main(argv: Optional[list[str]] = None) -> int:
    try:
        args = parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return COMMANDS[args.command](args)
    except (UsageError, PatternError, SpecError, FamilyError, EnumerationError, GraphError) as exc:
        print(f"superedge: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (Graph6Error, EdgeListError, OSError) as exc:
        print(f"superedge: error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
