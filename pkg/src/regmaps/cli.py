"""Command-line front end: ``regmaps <command> ...``."""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from regmaps import oracle
from regmaps.exactnum import IntegralityError
from regmaps.multiface import counter_for, rooted_regular
from regmaps.multiface_unrooted import unrooted_regular
from regmaps.oneface import rooted_one_face
from regmaps.oneface_unrooted import unrooted_one_face
from regmaps.orbifolds import epi0, generate_orbifolds, harvey_violations, raw_signatures
from regmaps.tables import FORMATS, KINDS, TableSpec, compute_table, render
from regmaps.verify import SUITES


def _degrees(text: str) -> tuple[int, ...]:
    """Parse ``3``, ``3,4,5`` or ``3-5``."""
    try:
        if "-" in text:
            lo, hi = (int(x) for x in text.split("-", 1))
            values = tuple(range(lo, hi + 1))
        else:
            values = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad degree list {text!r}") from None
    if not values or min(values) < 1:
        raise argparse.ArgumentTypeError(f"bad degree list {text!r}")
    return values


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="regmaps", description="Count regular maps on orientable surfaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("oneface", help="one-face d-regular maps")
    p.add_argument("mode", choices=("rooted", "unrooted"))
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--genus", type=_nonneg, required=True)

    p = sub.add_parser("multi", help="d-regular maps with any number of faces")
    p.add_argument("mode", choices=("rooted", "unrooted"))
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--genus", type=_nonneg, required=True)
    p.add_argument("--vertices", type=_positive, required=True)
    p.add_argument("--cache", help="JSON memo cache to load and update")

    p = sub.add_parser("table", help="emit a table of counts")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--d", type=_degrees, required=True, help="degree, list (3,4,5) or range (3-5)")
    p.add_argument("--genus-min", type=_nonneg, default=None)
    p.add_argument("--genus-max", type=_nonneg, required=True)
    p.add_argument("--vertices-max", type=_positive, default=None)
    p.add_argument("--format", choices=FORMATS, default="csv")
    p.add_argument("--cache", help="JSON memo cache to load and update (single degree only)")

    p = sub.add_parser("orbifolds", help="list cyclic orbifold signatures with Epi0")
    p.add_argument("--genus", type=_nonneg, required=True)
    p.add_argument("--period", type=_positive, required=True)
    p.add_argument("--raw", action="store_true", help="show all Riemann-Hurwitz solutions with filter verdicts")
    p.add_argument(
        "--quotient-reading",
        action="store_true",
        help="key the r-conditions on the quotient genus instead of the covering genus",
    )

    p = sub.add_parser("oracle", help="brute-force counts from rotation systems")
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--vertices", type=_positive, required=True)
    p.add_argument("--genus", type=_nonneg, default=None)
    p.add_argument("--unrooted", action="store_true")
    p.add_argument("--one-face", action="store_true")
    p.add_argument("--census", action="store_true", help="print every rooted map instead of counts")
    p.add_argument("--max-darts", type=_positive, default=oracle.DEFAULT_DART_LIMIT)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=tuple(SUITES), required=True)
    return parser


def _with_cache(path: Optional[str], degrees: Sequence[int], action):
    counters = [counter_for(d) for d in degrees]
    if path:
        from pathlib import Path

        if Path(path).exists():
            for c in counters:
                c.load(path)
    result = action()
    if path:
        if len(counters) != 1:
            raise ValueError("--cache supports a single degree")
        counters[0].save(path)
    return result


def _cmd_oneface(args: argparse.Namespace) -> int:
    fn = rooted_one_face if args.mode == "rooted" else unrooted_one_face
    print(fn(args.d, args.genus))
    return 0


def _cmd_multi(args: argparse.Namespace) -> int:
    fn = rooted_regular if args.mode == "rooted" else unrooted_regular
    print(_with_cache(args.cache, [args.d], lambda: fn(args.d, args.genus, args.vertices)))
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    multi = args.kind.startswith("multi")
    if multi and args.vertices_max is None:
        raise ValueError("--vertices-max is required for multi-* kinds")
    if not multi and args.vertices_max is not None:
        raise ValueError("--vertices-max only applies to multi-* kinds")
    genus_min = args.genus_min if args.genus_min is not None else (0 if multi else 1)
    spec = TableSpec(args.kind, args.d, genus_min, args.genus_max, args.vertices_max)
    workers = 1 if args.cache else None
    rows = _with_cache(args.cache, args.d, lambda: compute_table(spec, workers))
    sys.stdout.write(render(spec, rows, args.format))
    return 0


def _cmd_orbifolds(args: argparse.Namespace) -> int:
    if args.raw:
        for sig in raw_signatures(args.genus, args.period):
            reasons = harvey_violations(sig, args.quotient_reading)
            print(f"{sig} {'admissible' if not reasons else 'rejected: ' + '; '.join(reasons)}")
        return 0
    for sig in generate_orbifolds(args.genus, args.period, args.quotient_reading):
        print(f"{sig} epi0={epi0(sig)}")
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    if args.census:
        for line in oracle.census_lines(args.d, args.vertices, args.max_darts):
            print(line)
        return 0
    census = oracle.map_census(args.d, args.vertices, args.max_darts)
    faces = 1 if args.one_face else None
    count = census.unrooted_count if args.unrooted else census.rooted_count
    if args.genus is not None:
        print(count(genus=args.genus, faces=faces))
        return 0
    genera = sorted({g for g, f in census.rooted if faces is None or f == faces})
    for g in genera:
        print(f"{g},{count(genus=g, faces=faces)}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    failures = 0
    for check in SUITES[args.suite]():
        print(check.line())
        failures += not check.ok
    print(f"{args.suite}: {'all checks passed' if not failures else f'{failures} failed'}")
    return 0 if not failures else 1


COMMANDS = {
    "oneface": _cmd_oneface,
    "multi": _cmd_multi,
    "table": _cmd_table,
    "orbifolds": _cmd_orbifolds,
    "oracle": _cmd_oracle,
    "verify": _cmd_verify,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except oracle.OracleSizeError as exc:
        print(f"regmaps: size limit: {exc}", file=sys.stderr)
    except IntegralityError as exc:
        print(f"regmaps: integrality violation: {exc}", file=sys.stderr)
    except ValueError as exc:
        print(f"regmaps: {exc}", file=sys.stderr)
    return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
