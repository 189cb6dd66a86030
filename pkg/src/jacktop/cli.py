"""Command-line front end.

Subcommands: ``kl-top`` prints the g/R expansion of the top-degree part,
``eval`` evaluates one of the diagram functionals, ``census`` dumps the
orbit census, and ``verify`` runs a named identity suite.

Exit codes: 0 success, 1 usage or parse error, 2 budget violation,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import jackref, topdegree
from .cache import Cache
from .exact import KLPoly, Laurent
from .functionals import free_cumulant, s_functional, t_functional
from .jackref import BoundExceeded, jack_character
from .maps import format_perm, orbit_census, perm_from_cycle_type, set_jobs
from .topdegree import BudgetExceeded, ch_top_eval, cumulant_K, kl_top, moment_M
from .verify import SUITES, run_suite
from .young import NotDecreasing, parse_partition

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BUDGET = 2
EXIT_VERIFY = 3


def _add_common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # Attached to the main parser with real defaults and to every subparser
    # with SUPPRESS, so the flags are accepted on either side of the command.
    d = (lambda _: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--cache-dir", metavar="PATH", default=d(None),
                        help="directory for JSON artifact caching")
    parser.add_argument("--budget", type=int, metavar="N",
                        default=d(topdegree.DEFAULT_BUDGET),
                        help="size budget for map enumeration")
    parser.add_argument("--jobs", type=int, metavar="K", default=d(1),
                        help="worker processes for enumeration scans")
    parser.add_argument("--format", choices=("json", "text"),
                        default=d("json"), help="output format")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jacktop",
        description="Exact top-degree Jack character computations")
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        _add_common(p, suppress=True)
        return p

    p = command("kl-top", "g/R expansion of the top-degree part")
    p.add_argument("n", type=int)

    p = command("eval", "evaluate a functional on a diagram")
    p.add_argument("kind", choices=("ch", "chtop", "R", "T", "S", "M", "K"))
    p.add_argument("index", help="partition for ch/M/K, integer otherwise")
    p.add_argument("lam", help="partition, e.g. 4,2,1 (0 or '' for empty)")

    p = command("census", "orbit census of transitive pairs")
    p.add_argument("n", type=int)

    p = command("verify", "run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("param", type=int, nargs="?", default=None)

    return parser


def _print_laurent(value: Laurent, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(value.to_json()))
    else:
        print(value.text())


def _print_kl(value: KLPoly, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(value.to_json()))
    else:
        print(value.text())


def _cmd_eval(args) -> int:
    lam = parse_partition(args.lam)
    jack_bound = max(jackref.DEFAULT_SIZE_BOUND, args.budget + 3)
    kind = args.kind
    if kind in ("ch", "M", "K"):
        index = parse_partition(args.index)
    else:
        index = int(args.index)
    if kind == "ch":
        value = jack_character(index, lam, bound=jack_bound)
    elif kind == "chtop":
        value = ch_top_eval(index, lam, budget=args.budget)
    elif kind == "R":
        if index > args.budget + 2:
            raise BudgetExceeded(f"R index {index} exceeds budget")
        value = free_cumulant(index, lam)
    elif kind == "T":
        value = t_functional(index, lam)
    elif kind == "S":
        value = s_functional(index, lam)
    else:
        perm = perm_from_cycle_type(index)
        if len(perm) > args.budget:
            raise BudgetExceeded(f"|pi| = {len(perm)} exceeds budget")
        value = moment_M(perm, lam) if kind == "M" else cumulant_K(perm, lam)
    _print_laurent(value, args.format)
    return EXIT_OK


def _cmd_census(args) -> int:
    if args.n > args.budget:
        raise BudgetExceeded(f"n = {args.n} exceeds budget {args.budget}")
    census = orbit_census(args.n)
    if args.format == "json":
        print(json.dumps([{"sigma1": format_perm(a), "sigma2": format_perm(b),
                           "orbitSize": size_} for (a, b), size_ in census]))
    else:
        for (a, b), size_ in census:
            print(f"{format_perm(a)}  {format_perm(b)}  {size_}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    if args.jobs > 1:
        set_jobs(args.jobs)
    if args.cache_dir:
        cache = Cache(args.cache_dir)
        jackref.set_disk_cache(cache)
        topdegree.set_disk_cache(cache)

    try:
        if args.command == "kl-top":
            _print_kl(kl_top(args.n, budget=args.budget), args.format)
            return EXIT_OK
        if args.command == "eval":
            return _cmd_eval(args)
        if args.command == "census":
            return _cmd_census(args)
        if args.command == "verify":
            report = run_suite(args.suite, args.param)
            print(json.dumps(report, default=_json_default))
            return EXIT_OK if report["pass"] else EXIT_VERIFY
    except (BudgetExceeded, BoundExceeded) as exc:
        print(f"budget: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (NotDecreasing, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


def _json_default(obj):
    if isinstance(obj, Laurent):
        return obj.to_json()
    if isinstance(obj, KLPoly):
        return obj.to_json()
    if isinstance(obj, tuple):
        return list(obj)
    return str(obj)


if __name__ == "__main__":
    sys.exit(main())
