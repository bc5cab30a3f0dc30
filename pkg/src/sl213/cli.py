"""sl213 command line: verify suites, expand series, manage the power-sum cache.

Exit codes: 0 all selected checks pass, 1 a check failed, 2 usage error,
3 resource or cache error.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from pathlib import Path

from . import __version__
from .cache import CACHE_ENV, CacheError, PolyCache, warm
from .grouprep import ResourceLimitError
from .invariants import DEFAULT_DEGREE_BUDGET, INF, NORMALIZATION_TABLES, BudgetError

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3
ORDER_ENV = "SL213_ORDER"


class UsageError(ValueError):
    pass


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=None,
                        help=f"truncation in integer q-orders (default 12, or ${ORDER_ENV})")
    common.add_argument("--degree-budget", type=int, default=DEFAULT_DEGREE_BUDGET,
                        help="largest degree expanded symbolically (default %(default)s)")
    common.add_argument("--seed", type=int, default=20130013)
    common.add_argument("--draws", type=int, default=5, help="random parameter tuples per family")
    common.add_argument("--cache-dir", type=Path, default=None, help=f"cache directory (default ${CACHE_ENV})")
    common.add_argument("--normalization", choices=sorted(NORMALIZATION_TABLES), default="stated",
                        help="normalization constants: as stated, or recomputed from the q-expansions")

    p = argparse.ArgumentParser(prog="sl213", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"sl213 {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run check suites")
    v.add_argument("suites", nargs="*", default=["all"],
                   help="group forms invariance modular singularities icosahedral prop32 all")
    v.add_argument("--format", choices=("json", "markdown"), default="json")
    v.add_argument("--out", type=Path, default=None, help="report path (default stdout)")
    v.add_argument("--no-timings", action="store_true", help="omit wall-clock timings from the report")

    e = sub.add_parser("expand", parents=[common], help="print a q-expansion or polynomial")
    e.add_argument("target", help="A0..A6, D0..D12, Dinf, G0..G12, a1..a6, Phi:m,n, eta, Delta, E4, E6, j")
    e.add_argument("--poly", action="store_true", help="print the polynomial in z1..z6 instead of the series")

    c = sub.add_parser("cache", parents=[common], help="inspect or fill the power-sum cache")
    c.add_argument("action", choices=("status", "clear", "warm"))
    return p


def _order(args) -> int:
    order = args.order if args.order is not None else _env_int(ORDER_ENV, 12)
    if order < 1:
        raise UsageError("--order must be positive")
    return order


def _cache(args) -> PolyCache:
    return PolyCache(args.cache_dir)


def command_verify(args) -> int:
    from .modverify import VerifyConfig, expand_selection, run_suites

    try:
        expand_selection(args.suites)
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.draws < 1:
        raise UsageError("--draws must be at least 1")
    cache = _cache(args)
    cfg = VerifyConfig(order=_order(args), seed=args.seed, draws=args.draws,
                       degree_budget=args.degree_budget, normalization=args.normalization, cache=cache)
    report = run_suites(args.suites, cfg)
    for problem in cache.problems:
        print(f"sl213: skipped corrupt cache entry {problem}", file=sys.stderr)
    text = report.to_json(not args.no_timings) if args.format == "json" else report.to_markdown()
    if args.out is None:
        sys.stdout.write(text)
    else:
        try:
            args.out.parent.mkdir(parents=True, exist_ok=True)
            args.out.write_text(text, encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot write report to {args.out}: {exc}")
    counts = {s: sum(c.status == s for c in report.checks) for s in ("pass", "fail", "skipped")}
    print(f"sl213: {counts['pass']} passed, {counts['fail']} failed, {counts['skipped']} skipped", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


_FORM = re.compile(r"^(A|D|G)(\d+|inf)$")
_PHI = re.compile(r"^Phi:(\d+),(\d+)$")
_THETA = re.compile(r"^a([1-6])$")


def resolve_target(target: str, order: int, normalization: str = "stated", poly: bool = False):
    """The QExp (or MPoly when poly=True) named by an `expand` target."""
    from .invariants import InvariantSpec, build_forms, build_invariant
    from .qseries import SeriesContext, delta_series, eisenstein, eta_series, j_series, theta_power_sums

    ctx = SeriesContext.order13(order)
    m = _FORM.match(target)
    if m:
        family, idx = m.group(1), m.group(2)
        key = INF if idx == "inf" else int(idx)
        forms = build_forms()
        if family == "A" and key in range(7):
            return forms.A[key] if poly else theta_power_sums(ctx).A[key]
        if family == "D" and (key == INF or key in range(13)):
            return forms.D[key] if poly else theta_power_sums(ctx).D[key]
        if family == "G" and key in range(13):
            return forms.G[key] if poly else theta_power_sums(ctx).G[key]
        raise UsageError(f"index out of range in {target!r}")
    m = _PHI.match(target)
    if m:
        mm, nn = int(m.group(1)), int(m.group(2))
        if (mm, nn) == (0, 0):
            raise UsageError("Phi:0,0 is not an invariant")
        if poly:
            return build_invariant(InvariantSpec.of(mm, nn, normalization))
        c = NORMALIZATION_TABLES[normalization].get((mm, nn), 1)
        return theta_power_sums(ctx).on_x(mm, nn, c)
    m = _THETA.match(target)
    if m and not poly:
        return theta_power_sums(ctx).a[int(m.group(1)) - 1]
    named = {"eta": eta_series, "Delta": delta_series, "delta": delta_series, "j": j_series,
             "E4": lambda c: eisenstein(4, c), "E6": lambda c: eisenstein(6, c)}
    if target in named and not poly:
        return named[target](ctx)
    raise UsageError(f"unknown target {target!r}")


def command_expand(args) -> int:
    order = _order(args)
    obj = resolve_target(args.target, order, args.normalization, args.poly)
    if args.poly:
        print(obj.to_string() if not obj.is_zero() else "0")
        return EXIT_OK
    for line in obj.to_lines(max_numerator=obj.ctx.truncation):
        print(line)
    return EXIT_OK


def command_cache(args) -> int:
    cache = _cache(args)
    if args.action == "clear":
        n = cache.clear()
        print(f"removed {n} entries from {cache.root}")
        return EXIT_OK
    if args.action == "warm":
        pairs = warm(cache, args.degree_budget)
        print(f"stored {len(pairs)} power sums with 4m+6n <= {args.degree_budget} in {cache.root}")
        for problem in cache.problems:
            print(f"replaced corrupt entry {problem}", file=sys.stderr)
        return EXIT_OK
    entries = cache.entries()
    problems = cache.validate()
    print(f"cache {cache.root}: {len(entries)} entries")
    for e in entries:
        print(f"  {e.family} m={e.m} n={e.n} version={e.version} degree={4 * e.m + 6 * e.n} bytes={e.size}")
    for problem in problems:
        print(f"corrupt: {problem}", file=sys.stderr)
    return EXIT_RESOURCE if problems else EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    handlers = {"verify": command_verify, "expand": command_expand, "cache": command_cache}
    try:
        return handlers[args.command](args)
    except UsageError as exc:
        print(f"sl213: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CacheError, ResourceLimitError, BudgetError, MemoryError) as exc:
        print(f"sl213: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
