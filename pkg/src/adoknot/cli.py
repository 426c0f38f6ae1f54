"""Command line interface: ``compute``, ``verify`` and ``table``.

Exit codes: 0 success, 1 usage error, 2 input closes to a link rather than a
knot, 3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import verify
from .ado import DEFAULT_DENSE_BOUND, DenseBoundError, ado_invariant
from .braid import NotAKnotError, parse_braid, read_knot_table
from .verma import DEFAULT_CONVENTION, ConventionError
from .weightrep import CACHE_ENV_VAR, MatrixCache

EXIT_USAGE = 1
EXIT_NOT_KNOT = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_colors(spec: str) -> list[int]:
    """``"3"`` or ``"2..4"`` (inclusive)."""
    try:
        if ".." in spec:
            lo, hi = (int(x) for x in spec.split("..", 1))
            colors = list(range(lo, hi + 1))
        else:
            colors = [int(spec)]
    except ValueError:
        raise UsageError(f"bad color range {spec!r}") from None
    if not colors or min(colors) < 2:
        raise UsageError("colors must be integers >= 2")
    return colors


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="adoknot", description="ADO invariants of knots from braid words.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--format", choices=("json", "csv", "text"), default="text")
        p.add_argument("--output", help="write to this file instead of stdout")
        p.add_argument("--cache-dir", help=f"generator matrix cache (default: ${CACHE_ENV_VAR})")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--dense-bound", type=int, default=DEFAULT_DENSE_BOUND)

    p = sub.add_parser("compute", help="invariant of a single braid")
    p.add_argument("--braid", required=True, help='signed generators, e.g. "1 -2 1 -2"')
    p.add_argument("--strands", type=int, required=True)
    color = p.add_mutually_exclusive_group()
    color.add_argument("--color", type=int)
    color.add_argument("--colors", help="inclusive range A..B")
    p.add_argument("--name", default="", help="knot label for the record")
    common(p)

    p = sub.add_parser("verify", help="run the oracle and invariance suites")
    p.add_argument("--quick", action="store_true", help="acceptance-sized samples")
    common(p)

    p = sub.add_parser("table", help="tabulate a CSV knot table (name,strands,braid_word)")
    p.add_argument("--input", required=True)
    color = p.add_mutually_exclusive_group()
    color.add_argument("--color", type=int)
    color.add_argument("--colors", help="inclusive range A..B")
    common(p)
    return parser


def _colors(args) -> list[int]:
    if args.colors:
        return parse_colors(args.colors)
    if args.color is None:
        return [2]
    if args.color < 2:
        raise UsageError("color must be >= 2")
    return [args.color]


def _cache(args) -> MatrixCache | None:
    path = args.cache_dir or os.environ.get(CACHE_ENV_VAR)
    return MatrixCache(path) if path else None


def format_records(records: list[dict], fmt: str, text_lines: list[str]) -> str:
    if fmt == "json":
        return "".join(json.dumps(r, sort_keys=True) + "\n" for r in records)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["knot", "N", "strands", "writhe", "terms"])
        for r in records:
            writer.writerow([r["knot"], r["N"], r["strands"], r["writhe"], json.dumps(r["terms"])])
        return buf.getvalue()
    return "".join(line + "\n" for line in text_lines)


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_compute(args) -> int:
    b = parse_braid(args.braid, args.strands)
    cache = _cache(args)
    records, lines = [], []
    for N in _colors(args):
        result = ado_invariant(b, N, knot=args.name, cache=cache)
        records.append(result.to_record())
        lines.append(result.polynomial.render())
    _emit(args, format_records(records, args.format, lines))
    return 0


def verify_report(quick: bool, seed: int, bound: int) -> tuple[list[verify.CheckResult], str]:
    results = verify.run_checks(quick=quick, seed=seed, bound=bound)
    pinned = [c.tag() for c, ok, _ in verify.pin_conventions(seed) if ok]
    lines = [r.line() for r in results]
    lines.append(f"[INFO] conventions passing all pinning stages: {', '.join(pinned)}; using {DEFAULT_CONVENTION.tag()}")
    return results, "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    results, report = verify_report(args.quick, args.seed, args.dense_bound)

    def compute_once():
        return ado_invariant(parse_braid("1 -2 1 -2", 3), 3).polynomial.render()

    det = verify.determinism(lambda: verify_report(args.quick, args.seed, args.dense_bound)[1], compute_once)
    results.append(det)
    report += det.line() + "\n"
    failed = [r for r in results if not r.passed]
    report += f"{len(results) - len(failed)}/{len(results)} criteria passed\n"
    if args.format == "json":
        report = json.dumps(
            [{"criterion": r.number, "name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
            indent=1,
        ) + "\n"
    _emit(args, report)
    return EXIT_INTERNAL if failed else 0


def cmd_table(args) -> int:
    colors = _colors(args)
    cache = _cache(args)
    records, lines = [], []
    status = 0
    with open(args.input, newline="", encoding="utf-8") as fh:
        rows = list(read_knot_table(fh))
    for name, b in rows:
        for N in colors:
            try:
                result = ado_invariant(b, N, knot=name, cache=cache)
            except NotAKnotError as exc:
                print(f"{name}: {exc}", file=sys.stderr)
                status = EXIT_NOT_KNOT
                break
            records.append(result.to_record())
            lines.append(f"{name}\tN={N}\t{result.polynomial.render()}")
    _emit(args, format_records(records, args.format, lines))
    return status


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"compute": cmd_compute, "verify": cmd_verify, "table": cmd_table}
    try:
        return handlers[args.command](args)
    except NotAKnotError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_KNOT
    except ConventionError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (UsageError, DenseBoundError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
