"""
Command-line interface for catalan-cohorts.
Provides commands for enumeration, containment, avoider series, cohort
censuses, bijections, verification harnesses and asymptotic estimates.

Results go to stdout as JSON (integers as decimal strings) or CSV; logs go to
stderr.  Exit code 0 means success or a passing report, 1 a failing report,
2 bad input.
"""
import argparse
import csv
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional

from dotenv import load_dotenv

# Load .env from project root before anything else
load_dotenv(Path(__file__).parent.parent / ".env")

from .config.loader import load_config
from .utils.logging import setup_logging

logger = setup_logging()

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

FORMATS = ("arches", "dyck", "forest", "perm")


class UsageError(ValueError):
    """Raised for a request the command line refuses to run."""


def _emit(payload: Any) -> None:
    print(json.dumps(payload, indent=2))


def _emit_csv(header: List[str], rows: Iterable[Iterable[Any]]) -> None:
    writer = csv.writer(sys.stdout)
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)


def _emit_report(report, as_csv: bool = False) -> int:
    from .analysis.reports import summary_rows

    if as_csv:
        rows = summary_rows(report)
        _emit_csv(list(rows[0].keys()), (r.values() for r in rows))
    else:
        _emit(report.to_json())
    if not report.passed:
        logger.warning(f"Check '{report.check}' failed with {len(report.witnesses)} witness(es)")
    return EXIT_OK if report.passed else EXIT_FAILED


def _census_cache(args, config):
    from .state.census_cache import CensusCache

    if getattr(args, "no_cache", False):
        return None
    return CensusCache(config.get_cache_dir(getattr(args, "cache", None)))


def cmd_enumerate(args, config) -> int:
    """List systems of one size in enumeration order."""
    from .structures import iter_words

    words = iter_words(args.n, args.start, args.stop)
    if args.csv:
        _emit_csv(["rank", "word"], ((args.start + i, w) for i, w in enumerate(words)))
    else:
        _emit(list(words))
    return EXIT_OK


def _read_structure(value: str, fmt: str):
    from .structures import forest_from_json, from_dyck, from_forest, from_perm, parse, parse_perm

    if fmt == "arches":
        return parse(value)
    if fmt == "dyck":
        return from_dyck(value)
    if fmt == "forest":
        try:
            data = json.loads(value)
        except json.JSONDecodeError as e:
            raise UsageError(f"forest is not valid JSON: {e}") from None
        return from_forest(forest_from_json(data))
    return from_perm(parse_perm(value))


def _write_structure(system, fmt: str) -> Any:
    from .structures import forest_to_json, to_dyck, to_forest, to_perm

    if fmt == "arches":
        return system.word
    if fmt == "dyck":
        return to_dyck(system).steps
    if fmt == "forest":
        return forest_to_json(to_forest(system))
    return str(to_perm(system))


def cmd_convert(args, config) -> int:
    """Convert between arch systems, Dyck paths, plane forests and 231-avoiding permutations."""
    system = _read_structure(args.value, getattr(args, "from"))
    _emit({"from": getattr(args, "from"), "to": args.to, "value": _write_structure(system, args.to)})
    return EXIT_OK


def cmd_contains(args, config) -> int:
    """Test substructure containment and report the leftmost occurrence."""
    from .containment import contains, leftmost_occurrence
    from .structures import parse

    host, pattern = parse(args.host), parse(args.pattern)
    occurrence = leftmost_occurrence(host, pattern)
    _emit({
        "host": host.word,
        "pattern": pattern.word,
        "contains": contains(host, pattern),
        "leftmost": None if occurrence is None else occurrence.sorted_indices(),
    })
    return EXIT_OK


def cmd_gf(args, config) -> int:
    """Print the avoider series of a pattern."""
    from .gf_engine import gf_avoid, gf_brute
    from .structures import parse

    pattern = parse(args.pattern)
    series = gf_brute(pattern, args.degree) if args.brute else gf_avoid(pattern, args.degree)
    if args.csv:
        _emit_csv(["degree", "count"], enumerate(series.to_json()))
    else:
        _emit(series.to_json())
    return EXIT_OK


def cmd_key(args, config) -> int:
    """Print the cohort key of a system."""
    from .cohorts import cohort_key, is_main_cohort, is_singleton_cohort, representative
    from .structures import parse

    system = parse(args.system)
    key = cohort_key(system)
    _emit({
        "system": system.word,
        "key": str(key),
        "main": is_main_cohort(system),
        "singleton": is_singleton_cohort(system),
        "representative": representative(key).word,
    })
    return EXIT_OK


def cmd_census(args, config) -> int:
    """Group all systems of one size by cohort."""
    from .cohorts import attach_series, cohort_census

    if args.n >= config.census.long_running_from and not args.long_running:
        raise UsageError(f"census of size {args.n} is a long run; pass --long-running")
    workers = args.workers or config.census.workers
    cache = None if args.members else _census_cache(args, config)
    logger.info(f"Running census of size {args.n} with {workers} worker(s)")
    census = cohort_census(
        args.n,
        keep_members=args.members,
        workers=workers,
        cache=cache,
        chunk_size=config.census.chunk_size,
    )
    if args.gf is not None:
        attach_series(census, args.gf, cache=cache)
    keys = census.sorted_keys()
    if args.csv:
        header = ["key", "count", "rep"] + (["gf"] if args.gf is not None else [])
        _emit_csv(header, (
            [str(k), census[k].count, census[k].representative.word]
            + ([" ".join(census[k].gf.to_json())] if census[k].gf is not None else [])
            for k in keys
        ))
        return EXIT_OK
    rows: List[Dict[str, Any]] = []
    for key in keys:
        entry = census[key]
        row: Dict[str, Any] = {"key": str(key), "count": str(entry.count), "rep": entry.representative.word}
        if entry.members is not None:
            row["members"] = [m.word for m in entry.members]
        if entry.gf is not None:
            row["gf"] = entry.gf.to_json()
        rows.append(row)
    _emit({"n": args.n, "cohorts": str(len(census)), "total": str(census.total), "classes": rows})
    return EXIT_OK


def cmd_cohort_series(args, config) -> int:
    """Print cohort counts from the counting series, without enumeration."""
    from .cohorts import cohort_count_series

    series = cohort_count_series(args.degree + 1)
    counts = [str(series[n + 1]) for n in range(args.degree + 1)]
    if args.csv:
        _emit_csv(["n", "cohorts"], enumerate(counts))
    else:
        _emit(counts)
    return EXIT_OK


def cmd_motzkin_check(args, config) -> int:
    """Check main cohort sizes (and member series) against Motzkin numbers."""
    from .analysis.verify import verify_main_cohort

    return _emit_report(verify_main_cohort(args.n), args.csv)


def cmd_singletons(args, config) -> int:
    """Print singleton cohort counts; with --verify, compare them with the census."""
    from .cohorts import singleton_counts

    if args.verify:
        from .analysis.verify import verify_singletons

        return _emit_report(verify_singletons(args.n, _census_cache(args, config)), args.csv)
    rows = [(m, singleton_counts(m)) for m in range(1, args.n + 1)]
    if args.csv:
        _emit_csv(["n", "one_atom", "two_atoms", "many_atoms", "total"],
                  ((m, c.one_atom, c.two_atoms, c.many_atoms, c.total) for m, c in rows))
    else:
        _emit({str(m): str(c.total) for m, c in rows})
    return EXIT_OK


def cmd_verify(args, config) -> int:
    """Run one of the verification harnesses."""
    from .analysis import verify

    cache = _census_cache(args, config)
    check = args.check
    if check == "refinement":
        report = verify.verify_refinement(args.n, args.degree)
    elif check == "strong":
        report = verify.verify_strong_conjecture(args.n, cache)
    elif check == "dominance":
        report = verify.verify_dominance(
            args.n,
            args.degree or config.verification.dominance_degree,
            samples=config.verification.rule_samples,
            seed=config.verification.seed,
            cache=cache,
        )
    elif check == "main-largest":
        report = verify.verify_main_largest(args.n, cache)
    elif check == "bounds":
        report = verify.verify_count_bounds(args.n)
    else:
        report = verify.check_comparison_rules(
            args.n,
            args.degree or config.verification.dominance_degree,
            samples=config.verification.rule_samples,
            seed=config.verification.seed,
        )
    return _emit_report(report, args.csv)


def cmd_family(args, config) -> int:
    """Check the family of distinct cohorts whose series agree up to degree 2n-3."""
    from .analysis.verify import verify_family

    return _emit_report(verify_family(args.n), args.csv)


def cmd_bijection(args, config) -> int:
    """Find a rewrite path between two systems and optionally verify or apply its bijection."""
    from .bijections import apply_path, find_path, verify_path
    from .structures import parse

    start, end = parse(args.start), parse(args.end)
    path = find_path(start, end, bijective_only=not args.any)
    if path is None:
        _emit({"start": start.word, "end": end.word, "path": None})
        logger.warning(f"No rewrite path from {start.word} to {end.word}")
        return EXIT_FAILED
    payload: Dict[str, Any] = {"path": path.to_json(), "bijective": path.is_bijective}
    if args.json_path:
        Path(args.json_path).write_text(json.dumps(path.to_json(), indent=2), encoding="utf-8")
        logger.info(f"Wrote path to {args.json_path}")
    if not path.is_bijective:
        _emit(payload)
        if args.apply or args.verify is not None:
            logger.warning("Path uses a full rotation; no bijection to apply or verify")
            return EXIT_FAILED
        return EXIT_OK
    if args.apply:
        payload["image"] = apply_path(path, parse(args.apply)).word
    exit_code = EXIT_OK
    if args.verify is not None:
        bound = args.verify if args.verify >= 0 else start.size + config.verification.host_margin
        report = verify_path(path, bound)
        payload["report"] = report.to_json()
        exit_code = EXIT_OK if report.passed else EXIT_FAILED
    _emit(payload)
    return exit_code


def cmd_growth(args, config) -> int:
    """Estimate the growth constant of the cohort counts."""
    from .analysis.asymptotics import growth_rate_estimate

    _emit(growth_rate_estimate(args.degree, args.window or config.analysis.growth_window).to_json())
    return EXIT_OK


def cmd_radius(args, config) -> int:
    """Estimate the radius of convergence of the cohort series at one or more truncations."""
    from .analysis.asymptotics import estimate_table

    bracket = tuple(config.analysis.radius_bracket)
    estimates = estimate_table(args.degrees, bracket)
    if args.csv:
        _emit_csv(["degree", "rho", "inverse"], ((e.degree, e.rho, e.inverse) for e in estimates))
    else:
        _emit([e.to_json() for e in estimates])
    return EXIT_OK


COMMANDS = {
    "enumerate": cmd_enumerate,
    "convert": cmd_convert,
    "contains": cmd_contains,
    "gf": cmd_gf,
    "key": cmd_key,
    "census": cmd_census,
    "cohort-series": cmd_cohort_series,
    "motzkin-check": cmd_motzkin_check,
    "singletons": cmd_singletons,
    "verify": cmd_verify,
    "family": cmd_family,
    "bijection": cmd_bijection,
    "growth": cmd_growth,
    "radius": cmd_radius,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catalan-cohorts",
        description="catalan-cohorts CLI - Catalan structures, pattern avoidance and cohorts",
    )
    parser.add_argument(
        "--config",
        default=None,
        help="Path to config file (default: ./config.yaml when present)"
    )
    parser.add_argument(
        "--verbose",
        action="store_true",
        help="Log at DEBUG level"
    )

    subparsers = parser.add_subparsers(dest="command")

    enumerate_parser = subparsers.add_parser("enumerate", help="List systems of size n")
    enumerate_parser.add_argument("n", type=int)
    enumerate_parser.add_argument("--start", type=int, default=0, help="First rank (default: 0)")
    enumerate_parser.add_argument("--stop", type=int, default=None, help="Rank to stop before")
    enumerate_parser.add_argument("--csv", action="store_true")

    convert_parser = subparsers.add_parser("convert", help="Convert between representations")
    convert_parser.add_argument("value", help="Word, path, JSON forest or permutation")
    convert_parser.add_argument("--from", choices=FORMATS, default="arches")
    convert_parser.add_argument("--to", choices=FORMATS, required=True)

    contains_parser = subparsers.add_parser("contains", help="Test whether X contains P")
    contains_parser.add_argument("host")
    contains_parser.add_argument("pattern")

    gf_parser = subparsers.add_parser("gf", help="Avoider series of a pattern")
    gf_parser.add_argument("pattern")
    gf_parser.add_argument("--degree", type=int, required=True)
    gf_parser.add_argument("--brute", action="store_true", help="Count enumerated avoiders instead")
    gf_parser.add_argument("--csv", action="store_true")

    key_parser = subparsers.add_parser("key", help="Cohort key of a system")
    key_parser.add_argument("system")

    census_parser = subparsers.add_parser("census", help="Cohorts of all systems of size n")
    census_parser.add_argument("n", type=int)
    census_parser.add_argument("--cache", default=None, help="Cache directory")
    census_parser.add_argument("--no-cache", action="store_true", help="Neither read nor write the cache")
    census_parser.add_argument("--workers", type=int, default=None, help="Worker processes")
    census_parser.add_argument("--members", action="store_true", help="List every member (bypasses the cache)")
    census_parser.add_argument("--long-running", action="store_true", help="Allow sizes of 14 and more")
    census_parser.add_argument("--gf", type=int, default=None, metavar="DEGREE", help="Add each cohort's avoider series")
    census_parser.add_argument("--csv", action="store_true")

    series_parser = subparsers.add_parser("cohort-series", help="Cohort counts from the counting series")
    series_parser.add_argument("degree", type=int)
    series_parser.add_argument("--csv", action="store_true")

    motzkin_parser = subparsers.add_parser("motzkin-check", help="Main cohort sizes versus Motzkin numbers")
    motzkin_parser.add_argument("n", type=int)
    motzkin_parser.add_argument("--csv", action="store_true")

    singletons_parser = subparsers.add_parser("singletons", help="Singleton cohort counts")
    singletons_parser.add_argument("n", type=int)
    singletons_parser.add_argument("--verify", action="store_true", help="Compare with the census")
    singletons_parser.add_argument("--cache", default=None)
    singletons_parser.add_argument("--no-cache", action="store_true")
    singletons_parser.add_argument("--csv", action="store_true")

    verify_parser = subparsers.add_parser("verify", help="Run a verification harness")
    verify_parser.add_argument(
        "check", choices=["refinement", "strong", "dominance", "main-largest", "bounds", "rules"]
    )
    verify_parser.add_argument("n", type=int)
    verify_parser.add_argument("--degree", type=int, default=None)
    verify_parser.add_argument("--cache", default=None)
    verify_parser.add_argument("--no-cache", action="store_true")
    verify_parser.add_argument("--csv", action="store_true")

    family_parser = subparsers.add_parser("family", help="Distinct cohorts agreeing to degree 2n-3")
    family_parser.add_argument("n", type=int)
    family_parser.add_argument("--csv", action="store_true")

    bijection_parser = subparsers.add_parser("bijection", help="Explicit bijection between two cohort members")
    bijection_parser.add_argument("start")
    bijection_parser.add_argument("end")
    bijection_parser.add_argument(
        "--verify",
        type=int,
        nargs="?",
        const=-1,
        default=None,
        help="Verify on hosts up to this size (default: pattern size + host margin)",
    )
    bijection_parser.add_argument("--apply", default=None, help="System to map")
    bijection_parser.add_argument("--json-path", default=None, help="Write the path to this file")
    bijection_parser.add_argument(
        "--any", action="store_true", help="Also search full rotations (the path may have no bijection)"
    )

    growth_parser = subparsers.add_parser("growth", help="Estimate the growth constant")
    growth_parser.add_argument("degree", type=int)
    growth_parser.add_argument("--window", type=int, default=None)

    radius_parser = subparsers.add_parser("radius", help="Estimate the radius of convergence")
    radius_parser.add_argument("degrees", type=int, nargs="+")
    radius_parser.add_argument("--csv", action="store_true")

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the CLI."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    handler = COMMANDS.get(args.command)
    if handler is None:
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    try:
        config = load_config(args.config)
        level = logging.DEBUG if args.verbose else getattr(logging, config.logging.level.upper(), logging.INFO)
        setup_logging(level, config.logging.log_dir)
        return handler(args, config)
    except (ValueError, FileNotFoundError) as e:
        logger.error(f"{args.command}: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
