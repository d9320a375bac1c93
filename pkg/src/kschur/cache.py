"""Persisted cache of computed k-Schur expansions.

One JSON document keyed by "k:comma-separated-partition", each value a
list of {"window": [...], "coeff": int}.  The location comes from the
KSCHUR_CACHE_DIR environment variable, defaulting to ~/.cache/kschur.
The cache is advisory: anything unreadable is ignored with a warning on
stderr and recomputed.  Writes go through a temp file and an atomic
rename.
"""

from __future__ import annotations

import json
import os
import sys
import tempfile
from pathlib import Path
from typing import Optional, Sequence

from .affine import AffinePermutation
from .nilcoxeter import AlgebraElement, kschur

ENV_VAR = "KSCHUR_CACHE_DIR"


def default_cache_file() -> Path:
    root = os.environ.get(ENV_VAR)
    base = Path(root) if root else Path.home() / ".cache" / "kschur"
    return base / "expansions.json"


def _key(k: int, lam: Sequence[int]) -> str:
    return f"{k}:{','.join(map(str, lam))}"


class ExpansionCache:
    def __init__(self, path: Optional[Path] = None):
        self.path = Path(path) if path is not None else default_cache_file()

    def _load(self) -> dict:
        try:
            raw = self.path.read_text()
        except OSError:
            return {}
        try:
            data = json.loads(raw)
            if not isinstance(data, dict):
                raise ValueError("cache root is not an object")
            return data
        except (ValueError, TypeError) as exc:
            print(f"warning: ignoring corrupt cache {self.path}: {exc}", file=sys.stderr)
            return {}

    def get(self, k: int, lam: Sequence[int]) -> Optional[AlgebraElement]:
        entry = self._load().get(_key(k, lam))
        if entry is None:
            return None
        try:
            return AlgebraElement(
                k,
                [
                    (AffinePermutation(k, tuple(t["window"])), int(t["coeff"]))
                    for t in entry
                ],
            )
        except (KeyError, TypeError, ValueError) as exc:
            print(
                f"warning: ignoring corrupt cache entry {_key(k, lam)}: {exc}",
                file=sys.stderr,
            )
            return None

    def put(self, k: int, lam: Sequence[int], element: AlgebraElement) -> None:
        data = self._load()
        data[_key(k, lam)] = [
            {"window": list(w.window), "coeff": c} for w, c in element.items()
        ]
        self.path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.path.parent, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as handle:
                json.dump(data, handle, sort_keys=True)
            os.replace(tmp, self.path)
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise


def cached_kschur(
    k: int, lam: Sequence[int], cache: Optional[ExpansionCache] = None
) -> AlgebraElement:
    cache = cache if cache is not None else ExpansionCache()
    hit = cache.get(k, lam)
    if hit is not None:
        return hit
    element = kschur(k, lam)
    cache.put(k, lam, element)
    return element
