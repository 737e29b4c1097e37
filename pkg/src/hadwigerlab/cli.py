"""Command-line front end.

Exit codes: 0 success, 2 usage, 3 parse error, 4 resource limit.  Verdicts
always go to stdout; a negative answer is not an error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Callable, Iterable

from . import __version__
from .colorcrit import chromatic_number, is_k_colorable, is_k_critical
from .families import (
    CandidateUnavailable,
    SPLIT_INTERPRETATIONS,
    higher_wheel_candidate,
    hypercube,
    read_store,
    split_spoke_wheel,
    truncate_corners,
    verify_higher_wheel,
    wheel,
    write_store,
)
from .graphcore import Graph, GraphFormatError, parse_graph6, to_dot, to_graph6
from .hunt import (
    CSV_FIELDS,
    MAX_ENUM,
    classify_row,
    corner_cut_scan,
    find_k_critical,
    identify_scan,
    question1_scan,
)
from .minorlab import CHAINS, ChainError, UnsupportedPattern, hadwiger_number, has_minor, minor_bracket, pattern

EXIT_USAGE, EXIT_PARSE, EXIT_RESOURCE = 2, 3, 4


class ResourceLimit(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _inputs(arg: str) -> Iterable[str]:
    if arg == "-":
        for line in sys.stdin:
            yield line.strip()
    else:
        yield arg


def _graph(text: str) -> Graph:
    return parse_graph6(text)


def _batch(arg: str, fn: Callable[[Graph], str], out) -> None:
    """One output line per input line; blank and comment lines echo as blank."""
    for line in _inputs(arg):
        if not line or line.startswith("#"):
            if arg == "-":
                print("", file=out)
            continue
        print(fn(_graph(line)), file=out)


def cmd_color(a, out):
    def one(g):
        if a.k is None:
            k, c = chromatic_number(g)
            return f"chi={k} coloring={','.join(map(str, c.assignment))}"
        c = is_k_colorable(g, a.k)
        if c is None:
            return f"{a.k}-colorable=false"
        return f"{a.k}-colorable=true coloring={','.join(map(str, c.assignment))}"
    _batch(a.graph, one, out)


def cmd_critical(a, out):
    def one(g):
        r = is_k_critical(g, a.k)
        extra = f" edge={r.offending_edge[0]}-{r.offending_edge[1]}" if r.offending_edge else ""
        return f"verdict={r.verdict} chi={r.chi} k={r.k}{extra}"
    _batch(a.graph, one, out)


def cmd_minor(a, out):
    h = pattern(a.pattern)

    def one(g):
        model = has_minor(g, h.graph)
        if model is None:
            return f"{h.name} minor=false"
        sets = " ".join("{" + ",".join(map(str, s)) + "}" for s in model.branch_sets)
        return f"{h.name} minor=true branch_sets={sets}"
    _batch(a.host, one, out)
    if a.dot and a.host != "-":
        print(to_dot(_graph(a.host), "host"), file=out, end="")


def cmd_classify(a, out):
    fields = CSV_FIELDS + ["hadwiger_number"]
    if not a.no_header:
        print(",".join(fields), file=out)

    def one(g):
        row = classify_row(g)
        row["hadwiger_number"] = hadwiger_number(g)
        buf = io.StringIO()
        csv.writer(buf, lineterminator="").writerow(row[f] for f in fields)
        return buf.getvalue()
    _batch(a.graph, one, out)


def cmd_bracket(a, out):
    chain = CHAINS[a.chain]

    def one(g):
        try:
            return f"<{minor_bracket(g, chain)}>"
        except ChainError as e:
            return f"out-of-range: {e}"
    _batch(a.graph, one, out)


def cmd_family(a, out):
    kind = a.kind
    p = a.params
    try:
        if kind == "wheel":
            g = wheel(int(p[0]))
        elif kind == "hypercube":
            g = hypercube(int(p[0]))
        elif kind == "truncate":
            g = truncate_corners(hypercube(int(p[0])), [int(x) for x in p[1].split(",")])
        elif kind == "split-wheel":
            g = split_spoke_wheel(int(p[0]), p[1] if len(p) > 1 else "hajos_spoke")
        elif kind == "higher-wheel":
            g = higher_wheel_candidate(int(p[0]), override=a.override, store=a.store)
            if a.verify:
                r = verify_higher_wheel(g, int(p[0]))
                for name, value in r.checks.items():
                    print(f"# {name}: {value}", file=out)
        else:
            raise _Usage(f"unknown family {kind}")
    except (IndexError, ValueError) as e:
        if isinstance(e, GraphFormatError):
            raise
        raise _Usage(f"bad parameters for {kind}: {' '.join(p)} ({e})") from e
    print(to_graph6(g), file=out)
    if a.dot:
        print(to_dot(g, kind.replace("-", "_")), file=out, end="")


def cmd_scan(a, out):
    if a.jobs < 1:
        raise _Usage("--jobs must be positive")
    if a.kind == "critical":
        if a.n_max > MAX_ENUM:
            raise ResourceLimit(f"n_max above {MAX_ENUM} is out of range")
        report = find_k_critical(a.n_max, a.k, jobs=a.jobs)
    elif a.kind == "question1":
        if a.n_max > MAX_ENUM:
            raise ResourceLimit(f"n_max above {MAX_ENUM} is out of range")
        report = question1_scan(a.n_max, jobs=a.jobs)
    elif a.kind == "corners":
        if a.d > 4 or a.max_cut > 3:
            raise ResourceLimit("corner scans are limited to d <= 4 and max_cut <= 3")
        report = corner_cut_scan(a.d, a.max_cut)
    else:
        report = identify_scan(a.i)
        if a.store_out and report.classes[f"G{a.i}"]:
            store = read_store(a.store)
            store[a.i] = [parse_graph6(s) for s in report.classes[f"G{a.i}"]]
            write_store(store, a.store_out)
    text = report.to_csv() if a.csv else report.to_json() + "\n"
    if a.out:
        Path(a.out).write_text(text)
        print(f"wrote {a.out}: {json.dumps(report.counts)}", file=out)
    else:
        print(text, file=out, end="")


def cmd_verify(a, out):
    from .acceptance import run_all

    results = run_all(lambda line: print(line, file=out, flush=True))
    passed = sum(r.ok for r in results)
    print(f"{passed}/{len(results)} criteria pass", file=out)


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="hadwigerlab", description="Graph-minor laboratory for 4-critical wheel-like graphs.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("color", help="chromatic number or k-colourability")
    s.add_argument("graph", help="graph6 string or - for stdin")
    s.add_argument("--k", type=int)
    s.set_defaults(run=cmd_color)

    s = sub.add_parser("critical", help="k-criticality report")
    s.add_argument("graph")
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(run=cmd_critical)

    s = sub.add_parser("minor", help="minor containment with witness")
    s.add_argument("host")
    s.add_argument("--pattern", required=True, help="K5, K5-, K5^(1,3), K33, K33-, W4, C6+ or graph6")
    s.add_argument("--dot", action="store_true")
    s.set_defaults(run=cmd_minor)

    s = sub.add_parser("classify", help="CSV row: chi, criticality, free classes, brackets")
    s.add_argument("graph")
    s.add_argument("--no-header", action="store_true")
    s.set_defaults(run=cmd_classify)

    s = sub.add_parser("bracket", help="minor bracket in a built-in chain")
    s.add_argument("graph")
    s.add_argument("--chain", choices=sorted(CHAINS), default="clique")
    s.set_defaults(run=cmd_bracket)

    s = sub.add_parser("family", help="print a family member as graph6",
                       description="wheel I | hypercube D | truncate D C1,C2,.. | "
                                   f"split-wheel I [{'|'.join(SPLIT_INTERPRETATIONS)}] | higher-wheel I")
    s.add_argument("kind", choices=["wheel", "hypercube", "truncate", "split-wheel", "higher-wheel"])
    s.add_argument("params", nargs="*")
    s.add_argument("--dot", action="store_true")
    s.add_argument("--override", help="graph6 to use instead of the stored candidate")
    s.add_argument("--store", help="candidate store file (default: bundled)")
    s.add_argument("--verify", action="store_true", help="print the higher-wheel checklist as comments")
    s.set_defaults(run=cmd_family)

    s = sub.add_parser("scan", help="exhaustive scans producing a report")
    s.add_argument("kind", choices=["critical", "question1", "corners", "identify"])
    s.add_argument("--n-max", type=int, default=7)
    s.add_argument("--k", type=int, default=4, choices=[3, 4, 5])
    s.add_argument("--d", type=int, default=4)
    s.add_argument("--max-cut", type=int, default=3)
    s.add_argument("--i", type=int, default=5, choices=[5, 7, 9])
    s.add_argument("--store", help="candidate store to read")
    s.add_argument("--store-out", help="write identified candidates into this store")
    s.add_argument("--out")
    s.add_argument("--csv", action="store_true", help="CSV rows instead of JSON")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(run=cmd_scan)

    s = sub.add_parser("verify-paper", help="run the ten-item reproduction suite")
    s.set_defaults(run=cmd_verify)
    return ap


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        a = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        a.run(a, out)
    except GraphFormatError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (_Usage, UnsupportedPattern, ChainError) as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ResourceLimit, CandidateUnavailable, MemoryError) as e:
        print(f"resource limit: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"io error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return 0


if __name__ == "__main__":
    sys.exit(main())
