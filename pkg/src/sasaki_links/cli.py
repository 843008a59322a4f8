"""
Command-line entry point: compute link invariants, join reports and searches,
and run the reference checks.
"""

import argparse
import itertools
import json
import logging
import sys
from pathlib import Path
from typing import Any, Sequence

from .brieskorn_ci import build_link, link_report, link_summary
from .config import APP_NAME, DEFAULT_BOUND, DEFAULT_BUDGET, DEFAULT_KL_BOUND, DEFAULT_N, DEFAULT_WORKERS, LOG_FORMAT
from .data_store import get_builtin_summary
from .errors import InvalidInputError, NoSolutionError, SasakiLinkError
from .report import render_report
from .sasaki_join import JoinSpec, eta_einstein_plan, join_report, sasaki_einstein_plan
from .search import (
    SearchConfig,
    Series,
    enum_pairwise_coprime,
    gomez_expectations,
    gomez_series,
    scan_eta_einstein,
    scan_joins,
    sporadic_fixtures,
)
from .summary import LinkSummary, load_summary, sphere_summary
from .verification import all_passed, run_checks
from .wh_link import analyze, hypersurface_summary, parse_poly, poly_from_json

logger = logging.getLogger(__name__)


# ---------- Arguments ----------

def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", type=Path, help="write the report here instead of stdout")
    common.add_argument("-v", "--verbose", action="count", default=0)
    common.add_argument("--log-file", type=Path)
    return common


def _join_sources(p: argparse.ArgumentParser) -> None:
    first = p.add_mutually_exclusive_group(required=True)
    first.add_argument("--a", type=int, nargs="+", help="exponents of the first factor L(a)")
    first.add_argument("--m1-summary", help="summary JSON file or built-in name for the first factor")
    second = p.add_mutually_exclusive_group(required=True)
    second.add_argument("--b", type=int, nargs="+", help="exponents of the second factor L(b)")
    second.add_argument("--n-summary", help="summary JSON file or built-in name (S3, S5, poincare)")
    second.add_argument("--n-poly", help="polynomial whose link is the second factor")
    second.add_argument("--sphere", type=int, metavar="R", help="round sphere S^(2R+1)")


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(prog=APP_NAME, description="Invariants of Brieskorn links and Sasakian joins.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("brieskorn", parents=[common], help="invariants of L(a_0, ..., a_n)")
    p.add_argument("a", type=int, nargs="+")

    p = sub.add_parser("link", parents=[common], help="invariants of a weighted homogeneous link")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--poly", help='polynomial text, e.g. "z0^12+z1^6+z2^4+z3^2*z0"')
    src.add_argument("--json", type=Path, help="exponent-matrix JSON file")

    p = sub.add_parser("join", parents=[common], help="report on a join M1 *_(k,l) M2")
    _join_sources(p)
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)

    p = sub.add_parser("search", parents=[common], help="enumerations and families")
    p.add_argument("kind", choices=("coprime", "eta-einstein", "joins", "gomez", "sporadic"))
    p.add_argument("--n", type=int, default=DEFAULT_N)
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p.add_argument("--kl-bound", type=int, default=DEFAULT_KL_BOUND)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--workers", type=int, default=DEFAULT_WORKERS)
    p.add_argument("--series", type=int, choices=(1, 2), default=2)
    p.add_argument("--k", type=int)
    p.add_argument("--a", type=int, nargs="+")
    p.add_argument("--m1-summary")
    p.add_argument("--b", type=int, nargs="+")
    p.add_argument("--n-summary")
    p.add_argument("--n-poly")
    p.add_argument("--sphere", type=int, metavar="R")

    sub.add_parser("verify-paper", parents=[common], help="run the reference checks")
    return parser


def _configure_logging(verbosity: int, log_file: Path | None) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(level=level, format=LOG_FORMAT, handlers=handlers, force=True)


# ---------- Summaries ----------

def _summary(source: str) -> LinkSummary:
    builtin = get_builtin_summary(source)
    if builtin is not None:
        return builtin
    return load_summary(source)


def _first_factor(args: argparse.Namespace) -> LinkSummary:
    if args.a:
        return link_summary(build_link(args.a))
    if args.m1_summary:
        return _summary(args.m1_summary)
    raise InvalidInputError("the first factor needs --a or --m1-summary")


def _second_factor(args: argparse.Namespace) -> LinkSummary:
    if args.b:
        return link_summary(build_link(args.b))
    if args.n_summary:
        return _summary(args.n_summary)
    if args.n_poly:
        return hypersurface_summary(parse_poly(args.n_poly))
    if args.sphere is not None:
        return sphere_summary(args.sphere)
    raise InvalidInputError("the second factor needs --b, --n-summary, --n-poly or --sphere")


def _plan(m1: LinkSummary, m2: LinkSummary) -> JoinSpec:
    plan = None
    if m1.is_poincare and m2.is_positive:
        plan = sasaki_einstein_plan(m2)
    elif m1.is_negative and m2.is_negative:
        plan = eta_einstein_plan(m1, m2)
    if plan is None:
        raise NoSolutionError(f"no (k, l) plan applies to {m1.name} and {m2.name}; pass --k and --l")
    return plan


# ---------- Commands ----------

def _cmd_brieskorn(args: argparse.Namespace) -> tuple[Any, int]:
    return link_report(build_link(args.a)), 0


def _cmd_link(args: argparse.Namespace) -> tuple[Any, int]:
    if args.poly:
        p = parse_poly(args.poly)
    else:
        with open(args.json, "r", encoding="utf-8") as fh:
            p = poly_from_json(json.load(fh))
    return analyze(p), 0


def _cmd_join(args: argparse.Namespace) -> tuple[Any, int]:
    m1, m2 = _first_factor(args), _second_factor(args)
    if args.k is None and args.l is None:
        spec = _plan(m1, m2)
    elif args.k is None or args.l is None:
        raise InvalidInputError("pass both --k and --l, or neither")
    else:
        spec = JoinSpec(m1=m1, m2=m2, k=args.k, l=args.l)
    return join_report(spec), 0


def _fixture_row(row: Any) -> dict[str, Any]:
    out: dict[str, Any] = {
        "b2": row.b2_expected,
        "poly": row.poly_text,
        "w": list(row.w_inferred),
        "d": row.d_inferred,
    }
    if not row.consistent:
        inferred = "(" + ",".join(str(x) for x in row.w_inferred) + ")"
        out["warning"] = f"listed weights inconsistent; using inferred {inferred}"
    return out


def _cmd_search(args: argparse.Namespace) -> tuple[Any, int]:
    if args.kind == "gomez":
        which = Series(args.series)
        k = args.k if args.k is not None else (1 if which is Series.FIRST else 9)
        report = analyze(gomez_series(which, k))
        report["expected"] = gomez_expectations(which, k)
        return report, 0
    if args.kind == "sporadic":
        return [_fixture_row(r) for r in sporadic_fixtures()], 0
    cfg = SearchConfig(
        n=args.n, bound=args.bound, kl_bound=args.kl_bound, budget=args.budget, workers=args.workers
    )
    if args.kind == "joins":
        pairs = scan_joins(_first_factor(args), _second_factor(args), cfg.kl_bound)
        return [{"k": k, "l": l} for k, l in pairs[: cfg.budget]], 0  # noqa: E741
    if args.kind == "coprime":
        return [list(a) for a in itertools.islice(enum_pairwise_coprime(cfg), cfg.budget)], 0
    return scan_eta_einstein(cfg), 0


def _cmd_verify(args: argparse.Namespace) -> tuple[Any, int]:
    results = run_checks()
    return results, 0 if all_passed(results) else 1


_COMMANDS = {
    "brieskorn": _cmd_brieskorn,
    "link": _cmd_link,
    "join": _cmd_join,
    "search": _cmd_search,
    "verify-paper": _cmd_verify,
}


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text + "\n")
        return
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(text + "\n")
    logger.info("Report written to %s", out)


def run(argv: Sequence[str] | None = None) -> int:
    """
    Run one command and return its exit code.

    0 on success, 1 on a computation or I/O error (or a failed check in
    verify-paper), 2 on a usage error.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else 2

    _configure_logging(args.verbose, args.log_file)
    try:
        report, code = _COMMANDS[args.command](args)
        _emit(render_report(report, args.format, title=args.command), args.out)
        return code
    except (SasakiLinkError, OSError, json.JSONDecodeError) as e:
        logger.error("%s failed: %s", args.command, e)
        sys.stderr.write(f"Error: {e}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
