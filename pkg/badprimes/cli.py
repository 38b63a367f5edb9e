#!/usr/bin/env python3
"""
badprimes command line
======================
Subcommands:
  badprimes  certify every tuple of a degree and report its bad primes
  tuple      certify a single tuple (optionally export its matrix)
  bounds     evaluate both explicit upper bounds
  search     brute-force counterexample search over F_q
  cache      list or clear stored certificates

Exit codes: 0 complete, 1 usage error, 2 incomplete or interrupted, 3 degenerate tuple found,
4 internal consistency failure.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from . import __version__
from .algebra.macaulay import build_matrix, validate_tuple
from .bounds import improved_bound
from .certify.certifier import bad_primes, certify_tuple
from .config import Config, get_config
from .errors import ArgumentError, BadPrimesError, SearchBudgetExceeded
from .oracle.hasse import search_counterexamples
from .registry import get_renderer
from .schemas import RunConfig
from .state import CertificateStore, cert_key
from .validate import run_validators

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INCOMPLETE = 2
EXIT_DEGENERATE = 3
EXIT_INTERNAL = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with status 1"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    try:
        value = int(text.replace("_", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError(f"{value} must be positive")
    return value


def _degree(text: str) -> int:
    value = _positive(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"degree must be at least 2, got {value}")
    return value


def _tuple(text: str) -> List[int]:
    try:
        return [int(part) for part in text.replace(" ", "").split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated list of integers")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for progress, -vv for debug logs")
    common.add_argument("--cache-dir", type=Path, default=None, help="Certificate cache (env BADPRIMES_CACHE_DIR)")
    common.add_argument("--no-cache", action="store_true", help="Neither read nor write cached certificates")
    common.add_argument("--format", dest="output_format", choices=["json", "table"], default="json")
    common.add_argument("--output", type=Path, default=None, help="Write the result here instead of stdout")
    common.add_argument("--timings", action="store_true", help="Include wall-clock and cache statistics")
    common.add_argument("--jobs", type=_positive, default=None, help="Worker processes (env BADPRIMES_JOBS)")
    common.add_argument("--seed", type=int, default=None, help="Seed for randomized pivots and factoring")

    budgets = argparse.ArgumentParser(add_help=False)
    budgets.add_argument("--exhaustive-limit", type=_positive, default=None, help="Max binom(D, C) for exact J_T")
    budgets.add_argument("--trial-bound", type=_positive, default=None, help="Trial division bound")
    budgets.add_argument("--pollard-budget", type=_positive, default=None, help="Pollard rho iterations")
    budgets.add_argument("--minors", dest="minor_count", type=_positive, default=None, help="Sampled minors")

    ap = _Parser(prog="badprimes", description="Bad primes of the Casas-Alvero conjecture")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("badprimes", parents=[common, budgets], help="Bad primes of one degree")
    p.add_argument("--degree", type=_degree, required=True)
    p.add_argument("--no-symmetry", action="store_true", help="Certify every tuple, not one per orbit")
    p.add_argument("--validate", action="store_true", help="Run the audit rules on the finished report")
    p.add_argument("--oracle", action="store_true", help="With --validate, search F_p for counterexamples")
    p.add_argument("--expanded", action="store_true", help="Print the bounds as full integers")

    p = sub.add_parser("tuple", parents=[common, budgets], help="Certificate for one tuple")
    p.add_argument("--degree", type=_degree, required=True)
    p.add_argument("--t", dest="tuple", type=_tuple, required=True, help="Comma-separated entries, e.g. 1,3")
    p.add_argument("--export-matrix", type=Path, default=None, help="Write the triplet file of M_T here")

    p = sub.add_parser("bounds", parents=[common], help="Upper bounds on bad primes")
    p.add_argument("--degree", type=_degree, required=True)
    p.add_argument("--expanded", action="store_true", help="Print the full integers")

    p = sub.add_parser("search", parents=[common], help="Counterexample search over F_q")
    p.add_argument("--degree", type=_degree, required=True)
    p.add_argument("--p", dest="prime", type=_degree, required=True)
    p.add_argument("--k", type=_positive, default=1, help="Extension degree, q = p^k")
    p.add_argument("--budget", type=_positive, default=None, help="Max q^n (env BADPRIMES_SEARCH_BUDGET)")

    p = sub.add_parser("cache", parents=[common], help="Inspect or clear the certificate cache")
    p.add_argument("action", choices=["list", "clear"])
    p.add_argument("--degree", type=_degree, default=None)

    return ap


def _setup_logging(verbose: int, config: Config) -> None:
    level = {0: config.LOG_LEVEL, 1: "INFO"}.get(verbose, "DEBUG")
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )


def _run_config(args: argparse.Namespace, config: Config) -> RunConfig:
    return config.run_config(
        degree=getattr(args, "degree", None),
        jobs=args.jobs,
        seed=args.seed,
        symmetry=not getattr(args, "no_symmetry", False),
        exhaustive_limit=getattr(args, "exhaustive_limit", None),
        trial_bound=getattr(args, "trial_bound", None),
        pollard_budget=getattr(args, "pollard_budget", None),
        minor_count=getattr(args, "minor_count", None),
        search_budget=getattr(args, "budget", None),
        cache_dir=args.cache_dir,
        use_cache=not args.no_cache,
        output_format=args.output_format,
        timings=args.timings,
    )


def _store(run: RunConfig, config: Config) -> CertificateStore:
    return CertificateStore.from_url(run.cache_dir, config.REDIS_URL, enabled=run.use_cache)


def _emit(text: str, output: Optional[Path]) -> None:
    if output is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(text, encoding="utf-8")
    logger.info(f"Wrote {output}")


def cmd_badprimes(args: argparse.Namespace, run: RunConfig, config: Config) -> int:
    store = _store(run, config)
    report = bad_primes(args.degree, run, store)
    if args.validate:
        run_validators(report, run, oracle=args.oracle)
    render = get_renderer("report", run.output_format)
    text = render(report, timings=run.timings, expanded=args.expanded)
    _emit(text, args.output)
    if run.output_format == "json":
        store.save_report(report, text)
    else:
        store.save_report(report, get_renderer("report", "json")(report, timings=run.timings))

    if report.degenerate_tuples:
        return EXIT_DEGENERATE
    return EXIT_OK if report.complete else EXIT_INCOMPLETE


def cmd_tuple(args: argparse.Namespace, run: RunConfig, config: Config) -> int:
    try:
        T = validate_tuple(args.degree, args.tuple)
    except ArgumentError as e:
        raise UsageError(str(e))
    M = build_matrix(args.degree, T)
    if args.export_matrix is not None:
        M.export(args.export_matrix)

    store = _store(run, config)
    key = cert_key(args.degree, T, M.content_hash(), run.fingerprint())
    cert = store.get(key)
    if cert is None:
        cert = certify_tuple(args.degree, T, run, matrix=M)
        store.put(key, cert)
    _emit(get_renderer("certificate", run.output_format)(cert), args.output)

    if cert.status == "degenerate":
        return EXIT_DEGENERATE
    return EXIT_INCOMPLETE if cert.status == "incomplete" else EXIT_OK


def cmd_bounds(args: argparse.Namespace, run: RunConfig, config: Config) -> int:
    _emit(get_renderer("bounds", run.output_format)(improved_bound(args.degree), expanded=args.expanded), args.output)
    return EXIT_OK


def cmd_search(args: argparse.Namespace, run: RunConfig, config: Config) -> int:
    try:
        found = search_counterexamples(args.degree, args.prime, args.k, budget=run.search_budget, jobs=run.jobs)
    except SearchBudgetExceeded as e:
        raise UsageError(f"{e}; raise --budget to at least {e.required}")
    _emit(get_renderer("witnesses", run.output_format)(found), args.output)
    return EXIT_OK


def cmd_cache(args: argparse.Namespace, run: RunConfig, config: Config) -> int:
    store = CertificateStore.from_url(run.cache_dir, config.REDIS_URL)
    if args.action == "list":
        keys = store.list_entries(args.degree)
        _emit("".join(f"{k}\n" for k in keys), args.output)
        logger.info(f"{len(keys)} cached certificates")
    else:
        removed = store.clear(args.degree)
        sys.stderr.write(f"removed {removed} cached certificates\n")
    return EXIT_OK


COMMANDS = {
    "badprimes": cmd_badprimes,
    "tuple": cmd_tuple,
    "bounds": cmd_bounds,
    "search": cmd_search,
    "cache": cmd_cache,
}


def main(argv: Optional[List[str]] = None) -> int:
    # minor gcds and bounds routinely exceed the default int-to-str digit limit
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)

    ap = build_parser()
    args = ap.parse_args(argv)

    try:
        config = get_config()
    except ValueError as e:
        sys.stderr.write(f"badprimes: {e}\n")
        return EXIT_USAGE
    _setup_logging(args.verbose, config)

    try:
        run = _run_config(args, config)
        return COMMANDS[args.command](args, run, config)
    except (UsageError, ArgumentError) as e:
        ap.print_usage(sys.stderr)
        sys.stderr.write(f"badprimes: error: {e}\n")
        return EXIT_USAGE
    except ValueError as e:
        # pydantic rejects out-of-range settings
        sys.stderr.write(f"badprimes: invalid settings: {e}\n")
        return EXIT_USAGE
    except BadPrimesError as e:
        logger.error(f"Internal consistency failure: {e}")
        sys.stderr.write(f"badprimes: internal error: {e}\n")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
