"""Command-line front end: ``fracq verify|sweep|identities|sharpness``.

Exit codes: 0 success / bound holds, 1 violation or failed check,
2 usage, configuration or domain error.
"""
from __future__ import annotations

import argparse
import os
import sys
import tempfile

from . import reports
from .bounds import TheoremId, verify
from .errors import BoundViolation, DomainError, NonConvergence
from .functions import UNIT, Interval, catalog_densities, catalog_functions, get_density, get_function
from .montgomery import IDENTITY_TOLERANCES, identity_suite
from .quadrature import HolderPair, default_tol
from .sharpness import get_family, maximize_ratio
from .sweep import DEFAULT_ALPHAS, SweepConfig, default_jobs, run_sweep, summarize


class UsageError(Exception):
    pass


def _float_list(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _interval(text: str) -> Interval:
    try:
        return Interval.parse(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not v > 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fracq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="evaluate one bound and print its report")
    v.add_argument("--theorem", required=True, choices=[t.value for t in TheoremId])
    v.add_argument("--function", required=True)
    v.add_argument("--density")
    v.add_argument("--alpha", type=float, default=0.0)
    v.add_argument("--p", type=float)
    v.add_argument("--x", type=float, help="evaluation point for OstrowskiClassical (default b)")
    v.add_argument("--M", type=float, help="override the estimated sup |f'|")
    v.add_argument("--interval", type=_interval, default=UNIT)
    v.add_argument("--tol", type=_positive)

    s = sub.add_parser("sweep", help="run a parameter-grid sweep from a JSON config")
    s.add_argument("--config", help="SweepConfig JSON; omitted means the default sweep")
    s.add_argument("--output", help="overrides output_path from the config")
    s.add_argument("--format", choices=["json", "csv"])
    s.add_argument("--jobs", type=int, default=None)

    i = sub.add_parser("identities", help="run the identity residual suites")
    i.add_argument("--alpha-grid", type=_float_list, default=None)
    i.add_argument("--tol", type=_positive, help="one residual threshold for every identity")
    i.add_argument("--interval", type=_interval, default=UNIT)

    h = sub.add_parser("sharpness", help="search a function family for the largest lhs/rhs")
    h.add_argument("--theorem", required=True, choices=[t.value for t in TheoremId])
    h.add_argument("--family", required=True)
    h.add_argument("--alpha", type=float, default=0.0)
    h.add_argument("--p", type=float)
    h.add_argument("--density")
    h.add_argument("--x", type=float)
    h.add_argument("--budget", type=int, default=1000)
    h.add_argument("--tol", type=_positive)
    return parser


def cmd_verify(args) -> int:
    iv = args.interval
    f = get_function(args.function, iv)
    d = get_density(args.density, iv) if args.density else None
    report = verify(args.theorem, f, alpha=args.alpha, p=args.p, d=d, M=args.M, x=args.x,
                    tol=args.tol)
    print(reports.dumps(reports.report_to_dict(report)))
    return 0 if report.holds else 1


def _write_atomic(path: str, text: str):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".fracq-")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def cmd_sweep(args) -> int:
    cfg = SweepConfig.from_json(args.config) if args.config else SweepConfig()
    if args.output:
        cfg.output_path = args.output
    if args.format:
        cfg.format = args.format
    if not cfg.output_path:
        raise UsageError("no output path: set output_path in the config or pass --output")
    jobs = args.jobs if args.jobs is not None else default_jobs()
    results = run_sweep(cfg, jobs=jobs)
    _write_atomic(cfg.output_path, reports.render(results, cfg.format))
    n, violations, deficit = summarize(results)
    print(f"{n} checks, {violations} violations, max |slack deficit| = {deficit:.3e}")
    return 0 if violations == 0 else 1


def cmd_identities(args) -> int:
    iv = args.interval
    alphas = args.alpha_grid if args.alpha_grid is not None else [0.0, 0.25, 0.5, 0.75] + list(DEFAULT_ALPHAS[3:])
    if not alphas or any(a < 0 for a in alphas):
        raise UsageError("--alpha-grid needs at least one value, all >= 0")
    worst = identity_suite(catalog_functions(iv), catalog_densities(iv), alphas)
    ok = True
    for name, value in worst.items():
        limit = args.tol if args.tol is not None else IDENTITY_TOLERANCES[name]
        passed = value <= limit
        ok &= passed
        print(f"{name:<26} max scaled residual {value:.3e}  limit {limit:.1e}  {'ok' if passed else 'FAIL'}")
    return 0 if ok else 1


def cmd_sharpness(args) -> int:
    family = get_family(args.family)
    theorem = TheoremId(args.theorem)
    hp = HolderPair.from_p(args.p) if args.p is not None else None
    if theorem.needs_p and hp is None:
        raise UsageError(f"{theorem} needs --p")
    d = get_density(args.density) if args.density else None
    if theorem.needs_density and d is None:
        raise UsageError(f"{theorem} needs --density")
    try:
        result = maximize_ratio(theorem, family, args.alpha, hp, d, args.budget, x=args.x, tol=args.tol)
    except BoundViolation as exc:
        print(f"bound violated: {exc}", file=sys.stderr)
        return 1
    print(reports.dumps(reports.sharpness_to_dict(result)))
    return 0


COMMANDS = {"verify": cmd_verify, "sweep": cmd_sweep, "identities": cmd_identities,
            "sharpness": cmd_sharpness}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        default_tol()
        return COMMANDS[args.command](args)
    except (DomainError, UsageError) as exc:
        print(f"fracq: error: {exc}", file=sys.stderr)
        return 2
    except NonConvergence as exc:
        print(f"fracq: quadrature failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
