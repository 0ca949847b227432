"""Optional on-disk cache for computed q-series.

Entries are JSON files keyed by (series name, parameters, order).  A
loaded entry is screened by recomputing one randomly chosen coefficient
from scratch; anything unreadable, mismatched or stale is recomputed and
rewritten with a warning on stderr.  Exact integer data makes the
comparison bit-exact.
"""

from __future__ import annotations

import json
import random
import sys
from pathlib import Path
from typing import Callable

from .qseries import QSeries


class SeriesCache:
    def __init__(self, directory: str | Path, rng: random.Random | None = None):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)
        self.rng = rng or random.Random()

    def _path(self, name: str, params: dict, order: int) -> Path:
        tag = "_".join(f"{k}{params[k]}" for k in sorted(params))
        stem = f"{name}_{tag}_N{order}" if tag else f"{name}_N{order}"
        return self.directory / f"{stem}.json"

    def get(
        self,
        name: str,
        params: dict,
        order: int,
        builder: Callable[[int], QSeries],
    ) -> QSeries:
        """Load a cached series or build and store it.

        builder(k) must return the same series truncated at order k; the
        cached entry is validated against builder at one random index.
        """
        path = self._path(name, params, order)
        if path.exists():
            series = self._load(path, name, params, order, builder)
            if series is not None:
                return series
        series = builder(order)
        payload = {"name": name, "params": params, "order": order,
                   "series": series.to_json()}
        path.write_text(json.dumps(payload))
        return series

    def _load(self, path, name, params, order, builder) -> QSeries | None:
        try:
            payload = json.loads(path.read_text())
            if (payload["name"], payload["params"], payload["order"]) != (
                name, params, order,
            ):
                raise ValueError("cache key mismatch")
            series = QSeries.from_json(payload["series"])
            probe = self.rng.randint(0, order)
            if series.coeff(probe) != builder(probe).coeff(probe):
                raise ValueError(f"stale coefficient at q^{probe}")
        except Exception as exc:  # any unreadable entry is just recomputed
            print(
                f"warning: cache entry {path.name} invalid ({exc}); recomputing",
                file=sys.stderr,
            )
            return None
        return series
