"""Command-line interface.

Subcommands: chartable, number, spectrum, verify, asym, oracle.
Exit codes: 0 success, 1 usage error, 2 verification failure.
All values print as exact rationals ("4", "9/2"); --decimal adds an exact
decimal rendering where it helps a human.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .characters import cache_file_name, load_or_build, register_table
from .counting import (
    DEFAULT_BRUTEFORCE_DEGREE,
    HurwitzQuery,
    connected,
    disconnected,
    oracle_connected,
)
from .partitions import format_profiles, parse_profiles
from .serialize import canonical_json, decimal_string, fraction_to_str
from .spectrum import (
    asymptotic_error,
    connected_spectrum,
    disconnected_spectrum,
    verify_theorem,
)

CACHE_DIR_ENV = "HURWITZ_CACHE_DIR"
MAX_TABLE_DEGREE_ENV = "HURWITZ_MAX_TABLE_DEGREE"
DEFAULT_MAX_TABLE_DEGREE = 12

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY_FAILED = 2


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits with code 2 on usage errors; this tool reserves 2 for
    # verification failures, so remap usage errors to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="hurwitz",
        description="Exact Hurwitz numbers of the sphere, their spectral "
        "coefficients, structure verification, and asymptotics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chartable", help="write the character table for a degree")
    _add_degree(p)
    p.add_argument("--out", default=None, help="output path (default: cache file name)")
    _add_cache(p)
    p.set_defaults(func=cmd_chartable)

    p = sub.add_parser("number", help="one Hurwitz number, exact")
    _add_degree(p)
    _add_profiles(p)
    flavor = p.add_mutually_exclusive_group(required=True)
    flavor.add_argument("--connected", action="store_true")
    flavor.add_argument("--disconnected", action="store_true")
    count = p.add_mutually_exclusive_group(required=True)
    count.add_argument("--g", type=int, default=None, help="genus (connected)")
    count.add_argument("--k", type=int, default=None, help="transposition count (disconnected)")
    _add_output(p)
    _add_cache(p)
    p.set_defaults(func=cmd_number)

    p = sub.add_parser("spectrum", help="coefficients of the power-sum structure")
    _add_degree(p)
    _add_profiles(p)
    flavor = p.add_mutually_exclusive_group()
    flavor.add_argument("--connected", action="store_true")
    flavor.add_argument("--disconnected", action="store_true")
    _add_output(p)
    _add_cache(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify", help="check the pinned structure statements")
    _add_degree(p)
    _add_profiles(p)
    _add_output(p)
    _add_cache(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("asym", help="exact relative remainder of the three-term asymptotics")
    _add_degree(p)
    _add_profiles(p)
    p.add_argument("--g", type=int, required=True, help="genus")
    _add_output(p)
    _add_cache(p)
    p.set_defaults(func=cmd_asym)

    p = sub.add_parser("oracle", help="brute-force connected count (small degrees)")
    _add_degree(p)
    _add_profiles(p)
    p.add_argument("--k", type=int, required=True, help="transposition count")
    p.add_argument(
        "--max-bruteforce",
        type=int,
        default=DEFAULT_BRUTEFORCE_DEGREE,
        help=f"largest degree to enumerate (default {DEFAULT_BRUTEFORCE_DEGREE}; "
        "degree 5 is allowed up to 6 transpositions regardless)",
    )
    _add_output(p)
    p.set_defaults(func=cmd_oracle)

    return parser


def _add_degree(p):
    p.add_argument("--d", type=int, required=True, metavar="DEGREE", help="covering degree")


def _add_profiles(p):
    p.add_argument(
        "--profiles",
        default="",
        help="semicolon-separated ramification profiles, e.g. '3,1,1;2,2,1' (default none)",
    )


def _add_cache(p):
    p.add_argument(
        "--cache-dir",
        default=None,
        help=f"character-table cache directory (default: ${CACHE_DIR_ENV} if set)",
    )


def _add_output(p):
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--out", default=None, help="write to this file instead of stdout")
    p.add_argument("--decimal", action="store_true", help="add decimal renderings (text format)")


def _resolve_cache_dir(args) -> Path | None:
    value = getattr(args, "cache_dir", None) or os.environ.get(CACHE_DIR_ENV)
    return Path(value) if value else None


def _prepare_tables(args, degree: int) -> None:
    # with a cache directory configured, serve top-degree character values
    # from the (possibly loaded) table; otherwise recompute from scratch
    cache_dir = _resolve_cache_dir(args)
    if cache_dir is not None:
        register_table(load_or_build(degree, cache_dir))


def _emit(args, text: str) -> None:
    out = getattr(args, "out", None)
    if out:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _max_table_degree() -> int:
    value = os.environ.get(MAX_TABLE_DEGREE_ENV)
    return int(value) if value else DEFAULT_MAX_TABLE_DEGREE


def cmd_chartable(args) -> int:
    if args.d < 1:
        raise ValueError(f"degree must be positive, got {args.d}")
    limit = _max_table_degree()
    if args.d > limit:
        raise ValueError(
            f"degree {args.d} exceeds the configured table limit {limit} "
            f"(override with {MAX_TABLE_DEGREE_ENV})"
        )
    cache_dir = _resolve_cache_dir(args)
    table = load_or_build(args.d, cache_dir)
    if args.out:
        target = Path(args.out)
    elif cache_dir is not None:
        target = cache_dir / cache_file_name(args.d)
    else:
        target = Path(cache_file_name(args.d))
    try:
        table.save(target)
    except OSError as exc:
        raise ValueError(f"cannot write character table to {target}: {exc}") from exc
    print(target)
    return EXIT_OK


def cmd_number(args) -> int:
    profiles = parse_profiles(args.profiles)
    _prepare_tables(args, args.d)
    if args.connected:
        if args.g is None:
            raise ValueError("--connected takes --g")
        value = connected(HurwitzQuery(args.d, profiles, genus=args.g))
    else:
        if args.k is None:
            raise ValueError("--disconnected takes --k")
        value = disconnected(HurwitzQuery(args.d, profiles, transpositions=args.k))
    if args.format == "json":
        _emit(args, canonical_json({"value": fraction_to_str(value)}))
    else:
        text = fraction_to_str(value)
        if args.decimal and args.format == "text":
            text += f"  (~{decimal_string(value)})"
        _emit(args, text + "\n")
    return EXIT_OK


def cmd_spectrum(args) -> int:
    profiles = parse_profiles(args.profiles)
    _prepare_tables(args, args.d)
    if args.disconnected:
        decomposition = disconnected_spectrum(args.d, profiles)
    else:
        decomposition = connected_spectrum(args.d, profiles)
    mapping = decomposition.as_mapping()
    if args.format == "json":
        _emit(args, canonical_json(mapping))
    elif args.format == "csv":
        lines = ["m,coefficient"]
        lines += [f"{m},{mapping[str(m)]}" for m in range(decomposition.top, 0, -1)]
        _emit(args, "\n".join(lines) + "\n")
    else:
        lines = [f"{decomposition.flavor} spectrum, degree {args.d}, "
                 f"profiles [{format_profiles(profiles)}]"]
        for m in range(decomposition.top, 0, -1):
            row = f"  m={m:>3}  {mapping[str(m)]}"
            if args.decimal:
                row += f"  (~{decimal_string(decomposition.coefficient(m))})"
            lines.append(row)
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    profiles = parse_profiles(args.profiles)
    _prepare_tables(args, args.d)
    report = verify_theorem(args.d, profiles)
    if args.format == "json":
        _emit(args, report.to_json())
    elif args.format == "csv":
        lines = ["flavor,statement,m,expected,computed,passed"]
        for check in report.checks:
            lines.append(
                f"{check.flavor},{check.statement},{check.index},"
                f"{fraction_to_str(check.expected)},{fraction_to_str(check.computed)},"
                f"{str(check.passed).lower()}"
            )
        _emit(args, "\n".join(lines) + "\n")
    else:
        lines = [f"degree {args.d}, profiles [{format_profiles(profiles)}]"]
        for check in report.checks:
            status = "pass" if check.passed else "FAIL"
            lines.append(
                f"  [{status}] {check.flavor} {check.statement} at m={check.index}: "
                f"expected {fraction_to_str(check.expected)}, "
                f"computed {fraction_to_str(check.computed)}"
            )
        lines.append("all statements hold" if report.all_passed else "VERIFICATION FAILED")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if report.all_passed else EXIT_VERIFY_FAILED


def cmd_asym(args) -> int:
    profiles = parse_profiles(args.profiles)
    _prepare_tables(args, args.d)
    error = asymptotic_error(args.d, profiles, args.g)
    if args.format == "json":
        _emit(
            args,
            canonical_json(
                {"error": fraction_to_str(error), "decimal": decimal_string(error)}
            ),
        )
    elif args.format == "csv":
        _emit(args, "error,decimal\n" + f"{fraction_to_str(error)},{decimal_string(error)}\n")
    else:
        _emit(args, decimal_string(error) + "\n")
    return EXIT_OK


def cmd_oracle(args) -> int:
    profiles = parse_profiles(args.profiles)
    value = oracle_connected(args.d, profiles, args.k, max_degree=args.max_bruteforce)
    if args.format == "json":
        _emit(args, canonical_json({"value": fraction_to_str(value)}))
    else:
        _emit(args, fraction_to_str(value) + "\n")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # --help exits 0; usage errors were remapped to EXIT_USAGE already
        return exc.code if isinstance(exc.code, int) else EXIT_OK
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
