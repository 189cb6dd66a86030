"""File cache: one JSON document per artifact, with a schema version.

Artifacts are the per-diagram power-sum expansions of the oracle and the
per-index g/R expansions of the top-degree part.  Stale schema versions are
ignored, which forces a recompute.
"""

from __future__ import annotations

import json
import os

from .exact import KLPoly, RatFunc
from .young import Partition, format_partition, parse_partition

SCHEMA_VERSION = 1


class Cache:
    """Directory-backed JSON cache."""

    def __init__(self, directory: str):
        self.directory = directory
        os.makedirs(directory, exist_ok=True)

    def _path(self, name: str) -> str:
        return os.path.join(self.directory, name)

    def _read(self, name: str) -> dict | None:
        path = self._path(name)
        if not os.path.exists(path):
            return None
        try:
            with open(path, "r", encoding="utf-8") as fh:
                doc = json.load(fh)
        except (OSError, json.JSONDecodeError):
            return None
        if doc.get("schema") != SCHEMA_VERSION:
            return None
        return doc

    def _write(self, name: str, doc: dict) -> None:
        doc = {"schema": SCHEMA_VERSION, **doc}
        tmp = self._path(name + ".tmp")
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=1, sort_keys=True)
        os.replace(tmp, self._path(name))

    @staticmethod
    def _jack_name(lam: Partition) -> str:
        return "jack_" + format_partition(lam).replace(",", "-") + ".json"

    def load_jack(self, lam: Partition) -> dict[Partition, RatFunc] | None:
        doc = self._read(self._jack_name(lam))
        if doc is None:
            return None
        return {parse_partition(k): RatFunc.parse(v)
                for k, v in doc["coeffs"].items()}

    def store_jack(self, lam: Partition, coeffs: dict[Partition, RatFunc]) -> None:
        doc = {"lambda": format_partition(lam),
               "coeffs": {format_partition(pi): c.text()
                          for pi, c in sorted(coeffs.items())}}
        self._write(self._jack_name(lam), doc)

    def load_kl_top(self, n: int) -> KLPoly | None:
        doc = self._read(f"kltop_{n}.json")
        if doc is None:
            return None
        return KLPoly.from_json(doc["terms"])

    def store_kl_top(self, n: int, poly: KLPoly) -> None:
        self._write(f"kltop_{n}.json", {"n": n, "terms": poly.to_json()})
