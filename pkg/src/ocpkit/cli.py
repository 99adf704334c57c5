"""Command-line interface: ``ocpkit gen|analyze|verify|sweep|formula``.

Exit codes: 0 success, 1 a mathematical check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import faces
from .checks import oracle_agreement
from .io import (
    PosetFileError,
    poset_to_json,
    read_poset,
    report_row,
    report_to_json,
    rows_to_csv,
)
from .oracle import DEFAULT_MAX_PAIRS, DEFAULT_MAX_TRIPLES, OracleCapExceeded
from .poset import (
    EnumerationTooLarge,
    PosetError,
    contains_x_subposet,
    enum_cap,
    is_graded,
    is_maximal_ranked,
    ordinal_sum_of_antichains,
    random_poset,
)
from .sweep import level_family, random_family, run_sweep

log = logging.getLogger("ocpkit")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
MAX_SWEEP_SIZE = 12


class UsageError(Exception):
    pass


def parse_levels(text: str) -> list[int]:
    try:
        sizes = [int(s) for s in text.split(",")]
    except ValueError:
        raise UsageError(f"bad level list {text!r}; expected e.g. 2,1,2") from None
    if not sizes or any(s < 1 for s in sizes):
        raise UsageError(f"level sizes must be positive integers, got {text!r}")
    return sizes


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    if args.levels:
        P = ordinal_sum_of_antichains(parse_levels(args.levels), labels=True)
    else:
        d, p, seed = args.random
        try:
            P = random_poset(int(d), float(p), int(seed))
        except ValueError as exc:
            raise UsageError(f"bad --random arguments: {exc}") from None
    _emit(poset_to_json(P), args.out)
    print(
        f"d={P.d} graded={is_graded(P)} maximal_ranked={is_maximal_ranked(P)} "
        f"has_x={contains_x_subposet(P) is not None}",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_analyze(args) -> int:
    P = read_poset(args.poset)
    report = faces.compare(P)
    if args.format == "csv":
        _emit(rows_to_csv([report_row(report, Path(args.poset).stem)]), args.out)
    else:
        _emit(report_to_json(report, Path(args.poset).stem), args.out)
    if report.failures:
        print("invariant check failed: " + ", ".join(report.failures), file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_verify(args) -> int:
    P = read_poset(args.poset)
    results = oracle_agreement(P, args.max_pairs, args.max_triples)
    for a in results:
        status = "agree" if a.ok else "DISAGREE"
        print(f"{a.name}: lemma={a.lemma_count} oracle={a.oracle_count} {status}")
    bad = [a for a in results if not a.ok]
    if bad:
        print("witness: " + bad[0].witness(), file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.max_size < 1 or args.max_size > MAX_SWEEP_SIZE or 2 ** args.max_size > enum_cap():
        raise UsageError(f"--max-size must lie in 1..{MAX_SWEEP_SIZE} and fit the enumeration cap")
    if args.family == "levels":
        family = level_family(args.max_size)
    else:
        family = random_family(args.max_size, args.count, args.seed)
    result = run_sweep(family, args.workers)
    _emit(rows_to_csv(result.rows), args.out)
    log.info("swept %d posets, %d failures", len(result.rows), len(result.failures))
    for poset_id, failed in result.failures:
        print(f"check failed for {poset_id}: {', '.join(failed)}", file=sys.stderr)
    return EXIT_FAIL if result.failures else EXIT_OK


def cmd_formula(args) -> int:
    sizes = parse_levels(args.levels)
    print(faces.excess_formula(sizes))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ocpkit", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a poset file")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--levels", help="level sizes of a maximal ranked poset, e.g. 2,1,2")
    src.add_argument("--random", nargs=3, metavar=("D", "P", "SEED"))
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", help="count faces of O(P) and C(P)")
    p.add_argument("poset")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="check the enumerators against the geometric oracle")
    p.add_argument("poset")
    p.add_argument("--max-pairs", type=int, default=DEFAULT_MAX_PAIRS)
    p.add_argument("--max-triples", type=int, default=DEFAULT_MAX_TRIPLES)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="run all checks over a family of posets")
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--family", choices=("levels", "random"), default="levels")
    p.add_argument("--count", type=int, default=100, help="random family size")
    p.add_argument("--seed", type=int, default=0, help="first seed of the random family")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("formula", help="predicted triangle surplus for a maximal ranked poset")
    p.add_argument("--levels", required=True)
    p.set_defaults(func=cmd_formula)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(message)s",
    )
    try:
        return args.func(args)
    except (UsageError, PosetFileError, PosetError, EnumerationTooLarge, OracleCapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
