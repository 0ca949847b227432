"""Assembly and rendering of the package's tables.

A Table is a rectangular block of LaurentPoly cells with an n-row per
line and labelled columns.  Five kinds are built:

  bm    E(B^[n]_m), columns m = 1..max_m
  hm    E(H^[n]_m), columns m = 1..max_m
  chi   Euler characteristics chi(B^[n]_m)
  y0    E(Y0^[n]), one column
  hnnr  E(H^[n, n+r]), columns r = 1..max_r

Renderers emit LaTeX (publication-style cells such as "t^4+2 t^3-t"), CSV
(canonical cells such as "t^4+2*t^3-t") and JSON (exact term lists);
CSV and JSON re-parse to the same polynomials.
"""

from __future__ import annotations

import io
import json
import sys
from csv import reader as csv_reader, writer as csv_writer
from dataclasses import dataclass
from typing import Callable

from . import qseries, strata
from .cache import SeriesCache
from .diagrams import mu_max
from .laurent import LaurentPoly
from .qseries import QSeries

TABLE_KINDS = ("bm", "hm", "chi", "y0", "hnnr")
FORMATS = ("json", "csv", "latex")


@dataclass
class RunConfig:
    """Knobs shared by the CLI commands."""

    max_n: int = 14
    max_m: int | None = None  # defaults to mu_max(max_n)
    max_r: int = 4
    fmt: str = "latex"
    cache_dir: str | None = None
    verify_level: str = "fast"

    def resolved_max_m(self) -> int:
        bound = mu_max(self.max_n)
        if self.max_m is None:
            return bound
        if self.max_m > bound:
            print(
                f"warning: max_m={self.max_m} exceeds mu_max({self.max_n})={bound}; "
                f"rows above the bound are identically zero, clamping",
                file=sys.stderr,
            )
            return bound
        return self.max_m

    def validate(self) -> None:
        if self.max_n < 0:
            raise ValueError("max_n must be >= 0")
        if self.max_m is not None and self.max_m < 1:
            raise ValueError("max_m must be >= 1")
        if self.max_r < 1:
            raise ValueError("max_r must be >= 1")
        if self.fmt not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")
        if self.verify_level not in ("fast", "full"):
            raise ValueError("verify level must be fast or full")


@dataclass
class Table:
    kind: str
    rows: list[int]
    col_labels: list[str]
    cells: list[list[LaurentPoly]]  # cells[row][col]


def _cached_series(
    cache: SeriesCache | None,
    name: str,
    params: dict,
    order: int,
    builder: Callable[[int], QSeries],
) -> QSeries:
    if cache is None:
        return builder(order)
    return cache.get(name, params, order, builder)


def build_table(kind: str, config: RunConfig, cache: SeriesCache | None = None) -> Table:
    """Compute the requested table at config.max_n."""
    config.validate()
    n_max = config.max_n
    rows = list(range(n_max + 1))
    if kind in ("bm", "hm", "chi"):
        m_max = config.resolved_max_m()
        builders = {
            "bm": ("epoly_B_stratum", strata.closed_form_B),
            "hm": ("epoly_H_stratum", strata.closed_form_X),
            "chi": ("chi_B_stratum", strata.chi_series),
        }
        name, fn = builders[kind]
        columns = [
            _cached_series(cache, name, {"m": m}, n_max, lambda k, m=m: fn(m, k))
            for m in range(1, m_max + 1)
        ]
        labels = [f"m={m}" for m in range(1, m_max + 1)]
    elif kind == "y0":
        columns = [_cached_series(cache, "epoly_Y0", {}, n_max, qseries.series_Y0)]
        labels = ["y0"]
    elif kind == "hnnr":
        columns = [
            _cached_series(
                cache, "epoly_nested", {"r": r}, n_max,
                lambda k, r=r: qseries.series_Hnnr(r, k),
            )
            for r in range(1, config.max_r + 1)
        ]
        labels = [f"r={r}" for r in range(1, config.max_r + 1)]
    else:
        raise ValueError(f"unknown table kind {kind!r}")
    cells = [[col.coeff(n) for col in columns] for n in rows]
    return Table(kind, rows, labels, cells)


# -- renderers -----------------------------------------------------------


def render_latex(table: Table) -> str:
    cols = "|c|" + "c|" * len(table.col_labels)
    lines = [r"\begin{tabular}{%s}\hline" % cols]
    header = " & ".join(["$n$"] + [f"${lbl}$" for lbl in table.col_labels])
    lines.append(header + r" \\\hline")
    for n, row in zip(table.rows, table.cells):
        body = " & ".join([str(n)] + [f"${p.latex()}$" for p in row])
        lines.append(body + r" \\\hline")
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


def render_csv(table: Table) -> str:
    buf = io.StringIO()
    w = csv_writer(buf, lineterminator="\n")
    w.writerow(["n"] + table.col_labels)
    for n, row in zip(table.rows, table.cells):
        w.writerow([n] + [str(p) for p in row])
    return buf.getvalue()


def render_json(table: Table) -> str:
    payload = {
        "kind": table.kind,
        "rows": table.rows,
        "cols": table.col_labels,
        "cells": [[p.to_json() for p in row] for row in table.cells],
    }
    return json.dumps(payload, indent=1) + "\n"


def render(table: Table, fmt: str) -> str:
    return {"latex": render_latex, "csv": render_csv, "json": render_json}[fmt](table)


# -- re-parsers (round-trip support) ---------------------------------------


def table_from_csv(text: str, kind: str = "") -> Table:
    rows_iter = csv_reader(io.StringIO(text))
    header = next(rows_iter)
    labels = header[1:]
    rows, cells = [], []
    for rec in rows_iter:
        if not rec:
            continue
        rows.append(int(rec[0]))
        cells.append([LaurentPoly.from_string(cell) for cell in rec[1:]])
    return Table(kind, rows, labels, cells)


def table_from_json(text: str) -> Table:
    obj = json.loads(text)
    cells = [[LaurentPoly.from_json(p) for p in row] for row in obj["cells"]]
    return Table(obj["kind"], obj["rows"], obj["cols"], cells)
