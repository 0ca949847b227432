"""Command-line front end.

  hilbstrata table {bm,hm,chi,y0,hnnr} [--max-n N] [--max-m M] [--max-r R]
                   [--format {latex,csv,json}] [--cache-dir DIR]
  hilbstrata verify [--level {fast,full}] [--max-n N] [--max-r R]
                   [--cache-dir DIR]

Exit codes: 0 success, 1 verification mismatch, 2 usage error.  The
cache directory defaults to $HILBSTRATA_CACHE_DIR when set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import qseries, strata
from .cache import SeriesCache
from .diagrams import mu_max
from .tables import FORMATS, TABLE_KINDS, RunConfig, build_table, render


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hilbstrata",
        description="E-polynomial tables of generator-count strata of "
        "punctual Hilbert schemes of the plane, with full cross-verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="compute and print one of the tables")
    t.add_argument("kind", choices=TABLE_KINDS)
    t.add_argument("--max-n", type=int, default=14, help="largest point count n")
    t.add_argument("--max-m", type=int, default=None,
                   help="largest generator count column (default mu_max(max_n))")
    t.add_argument("--max-r", type=int, default=4, help="largest nesting r (hnnr)")
    t.add_argument("--format", dest="fmt", choices=FORMATS, default="latex")
    t.add_argument("--cache-dir", default=os.environ.get("HILBSTRATA_CACHE_DIR"))

    v = sub.add_parser("verify", help="run the identity/cross-check suite")
    v.add_argument("--level", choices=("fast", "full"), default="fast")
    v.add_argument("--max-n", type=int, default=None,
                   help="override the level's table order")
    v.add_argument("--max-r", type=int, default=None,
                   help="override the level's fixed-point nesting bound")
    v.add_argument("--cache-dir", default=os.environ.get("HILBSTRATA_CACHE_DIR"))
    return parser


def cmd_table(args, parser) -> int:
    config = RunConfig(
        max_n=args.max_n, max_m=args.max_m, max_r=args.max_r,
        fmt=args.fmt, cache_dir=args.cache_dir,
    )
    try:
        config.validate()
    except ValueError as exc:
        parser.error(str(exc))
    cache = SeriesCache(config.cache_dir) if config.cache_dir else None
    table = build_table(args.kind, config, cache)
    sys.stdout.write(render(table, config.fmt))
    return 0


def cmd_verify(args, parser) -> int:
    if args.level == "full":
        order, fp_r, fp_n, id_order = 14, 4, 10, 12
    else:
        order, fp_r, fp_n, id_order = 8, 3, 8, 8
    if args.max_n is not None:
        order = args.max_n
        fp_n = min(fp_n, order)
    if args.max_r is not None:
        fp_r = args.max_r
    if order < 0:
        parser.error("--max-n must be >= 0")
    if args.cache_dir:
        _revalidate_cache(SeriesCache(args.cache_dir), order, fp_r)
    report = strata.verify_all(
        order, fp_max_r=fp_r, fp_max_n=fp_n, identity_order=id_order,
    )
    if report.passed:
        print(report)
        return 0
    print(json.dumps(report.to_json(), indent=1))
    return 1


def _revalidate_cache(cache: SeriesCache, order: int, max_r: int) -> None:
    """Screen the cached series the table command relies on; repairs are
    logged by the cache itself."""
    cache.get("epoly_Y0", {}, order, qseries.series_Y0)
    for r in range(1, max_r + 1):
        cache.get("epoly_nested", {"r": r}, order,
                  lambda k, r=r: qseries.series_Hnnr(r, k))
    for m in range(1, mu_max(order) + 1):
        cache.get("epoly_B_stratum", {"m": m}, order,
                  lambda k, m=m: strata.closed_form_B(m, k))


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "table":
        return cmd_table(args, parser)
    return cmd_verify(args, parser)


if __name__ == "__main__":
    sys.exit(main())
