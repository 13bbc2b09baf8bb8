"""Command-line front end.

Exit statuses: 0 success, 1 a verification or cross-check failed, 2 an
enumeration cap was hit, 64 bad usage, 65 unparseable input data.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from .bijections import MAPS, BijectionId
from .enumeration import CountReport, count_paths_closed_form, cross_check
from .errors import DEFAULT_CAP, ContractViolation, ResourceLimitError, ShapeMismatchError
from .harness import format_aggregate, reproduce_figure1, verify_all
from .lattice_paths import LatticePath, enumerate_paths, read_path_lines, render_path_text
from .tableaux import (
    StandardTableau,
    enumerate_tableaux,
    read_tableau_lines,
    render_tableau_text,
    write_tableau_lines,
)

EX_OK = 0
EX_FAIL = 1
EX_RESOURCE = 2
EX_USAGE = 64
EX_DATAERR = 65


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {value}")
    return value


def _map_name(text: str) -> BijectionId:
    try:
        return BijectionId.parse(text)
    except KeyError:
        names = ", ".join(m.cli_name for m in BijectionId)
        raise argparse.ArgumentTypeError(f"unknown map {text!r} (choose from {names})") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="thetapaths",
        description="Quadrant lattice paths and (n+2,2,1^n) tableaux: generate, map, count, verify.",
    )
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def cap(p):
        p.add_argument("--cap", type=_non_negative, default=DEFAULT_CAP,
                       help="refuse to enumerate families larger than this")

    def fmt(p):
        p.add_argument("--format", choices=("text", "machine"), default="text")

    p = sub.add_parser("count", help="print the number of paths (= tableaux) for n")
    p.add_argument("--n", type=_non_negative, required=True)
    p.add_argument("--all-routes", action="store_true",
                   help="also compute hook-length and enumerated counts")
    cap(p)
    fmt(p)

    p = sub.add_parser("gen-paths", help="print every path for n, one word per line")
    p.add_argument("--n", type=_non_negative, required=True)
    cap(p)

    p = sub.add_parser("gen-syt", help="print every tableau for n, one per line")
    p.add_argument("--n", type=_non_negative, required=True)
    cap(p)

    p = sub.add_parser("map", help="apply a map to each object read from input")
    p.add_argument("--via", type=_map_name, required=True,
                   help=", ".join(m.cli_name for m in BijectionId))
    p.add_argument("--input", type=argparse.FileType("r", encoding="ascii"),
                   help="read objects from FILE instead of stdin")

    p = sub.add_parser("verify", help="exhaustively verify every map for n = 0..K")
    p.add_argument("--n-max", type=_non_negative, required=True)
    cap(p)
    fmt(p)

    p = sub.add_parser("cross-check", help="compare all counting routes for n")
    p.add_argument("--n", type=_non_negative, required=True)
    p.add_argument("--exhaustive", action="store_true")
    cap(p)
    fmt(p)

    p = sub.add_parser("render", help="draw a path or a tableau as text")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--path", metavar="WORD")
    group.add_argument("--tableau", metavar="SPEC")

    p = sub.add_parser("figure1", help="recompute the 16 psi pairs for n=1 and compare with the fixture")
    fmt(p)
    return parser


def _read_objects(via: BijectionId, stream: TextIO):
    if via.domain == "path":
        for lineno, word in read_path_lines(stream):
            try:
                yield LatticePath.from_word(word)
            except ContractViolation as exc:
                raise DataError(f"line {lineno}: {exc}") from None
    else:
        for lineno, header, text in read_tableau_lines(stream):
            try:
                t = StandardTableau.parse(text)
            except (ValueError, ShapeMismatchError) as exc:
                raise DataError(f"line {lineno}: {exc}") from None
            if header is not None and header != t.n:
                raise DataError(f"line {lineno}: tableau has n={t.n} under header n={header}")
            yield t


def _run_map(args, stdin: TextIO, out: TextIO) -> int:
    fn = MAPS[args.via]
    stream = args.input or stdin
    try:
        images = (fn(obj) for obj in _read_objects(args.via, stream))
        if args.via.codomain == "tableau":
            for line in write_tableau_lines(images):
                out.write(line + "\n")
        else:
            for image in images:
                out.write(f"{image}\n")
    except ValueError as exc:  # header lines that fail to parse
        raise DataError(str(exc)) from None
    finally:
        if args.input:
            args.input.close()
    return EX_OK


def _dispatch(args, stdin: TextIO, out: TextIO) -> int:
    verb = args.verb
    if verb == "count":
        if not args.all_routes:
            out.write(f"{count_paths_closed_form(args.n)}\n")
            return EX_OK
        report = cross_check(args.n, exhaustive=True, cap=args.cap)
        _write_counts([report], args.format, out)
        return EX_OK if report.consistent else EX_FAIL
    if verb == "cross-check":
        report = cross_check(args.n, exhaustive=args.exhaustive, cap=args.cap)
        _write_counts([report], args.format, out)
        return EX_OK if report.consistent else EX_FAIL
    if verb == "gen-paths":
        for p in enumerate_paths(args.n, cap=args.cap):
            out.write(p.word + "\n")
        return EX_OK
    if verb == "gen-syt":
        for line in write_tableau_lines(enumerate_tableaux(args.n, cap=args.cap)):
            out.write(line + "\n")
        return EX_OK
    if verb == "map":
        return _run_map(args, stdin, out)
    if verb == "verify":
        agg = verify_all(args.n_max, cap=args.cap)
        out.write(format_aggregate(agg, machine=args.format == "machine"))
        return EX_OK if agg.passed else EX_FAIL
    if verb == "render":
        if args.path is not None:
            try:
                path = LatticePath.from_word(args.path)
            except ContractViolation as exc:
                raise DataError(str(exc)) from None
            out.write(render_path_text(path))
        else:
            try:
                t = StandardTableau.parse(args.tableau)
            except (ValueError, ShapeMismatchError) as exc:
                raise DataError(str(exc)) from None
            out.write(render_tableau_text(t))
        return EX_OK
    if verb == "figure1":
        result = reproduce_figure1()
        if args.format == "machine":
            for tableau, path in result.pairs:
                out.write(f"{tableau}\t{path}\n")
        else:
            for tableau, path in result.pairs:
                out.write(f"{tableau:<10} {path}\n")
        for line in result.diff:
            out.write(line + "\n")
        out.write(f"# {result.verdict} {result.matches}/{result.expected}\n")
        return EX_OK if result.verdict == "match" else EX_FAIL
    raise UsageError(f"unknown verb {verb!r}")


def _write_counts(reports: list[CountReport], fmt: str, out: TextIO) -> None:
    if fmt == "machine":
        out.write(CountReport.machine_header() + "\n")
        for r in reports:
            out.write(r.to_machine() + "\n")
    else:
        out.write("".join(r.to_text() for r in reports))


def parse_and_dispatch(
    argv: Sequence[str] | None = None,
    stdin: TextIO | None = None,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return _dispatch(args, stdin, stdout)
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        return EX_USAGE
    except DataError as exc:
        stderr.write(f"data error: {exc}\n")
        return EX_DATAERR
    except ResourceLimitError as exc:
        stderr.write(f"resource limit: {exc}\n")
        return EX_RESOURCE


def main(argv: Sequence[str] | None = None) -> int:
    try:
        return parse_and_dispatch(argv)
    except BrokenPipeError:
        # Downstream closed early (e.g. `| head`); not an error for us.
        sys.stderr.close()
        return EX_OK


if __name__ == "__main__":
    sys.exit(main())
