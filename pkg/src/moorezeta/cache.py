"""On-disk JSON cache of generalized Bernoulli numbers.

Keys are ``"p:logvalue:n"`` for characters of modulus p^2, values hold the
power-basis coordinates of B_n^chi as ``"num/den"`` strings.  The cache is
only an optimization: a missing or deleted file changes nothing but speed.
"""

from __future__ import annotations

import json
import math
import os
import tempfile
from fractions import Fraction
from pathlib import Path

from .arith import Cyclotomic
from .bernoulli import cache_load, cache_snapshot

__all__ = ["load_cache", "save_cache"]

FORMAT = "moorezeta.bernoulli-cache.v1"


def _encode(value: Cyclotomic) -> dict:
    return {"order": value.order, "coeffs": [f"{c.numerator}/{c.denominator}" for c in value.coeffs]}


def _decode(obj: dict) -> Cyclotomic:
    return Cyclotomic(obj["order"], [Fraction(c) for c in obj["coeffs"]])


def load_cache(path: str | os.PathLike) -> int:
    """Merge a cache file into the in-process memo; returns entries read."""
    path = Path(path)
    if not path.exists():
        return 0
    doc = json.loads(path.read_text())
    if doc.get("format") != FORMAT:
        raise ValueError(f"{path} is not a {FORMAT} file")
    entries = {}
    for key, obj in doc["entries"].items():
        p, logv, n = (int(x) for x in key.split(":"))
        entries[(p * p, logv, n)] = _decode(obj)
    cache_load(entries)
    return len(entries)


def save_cache(path: str | os.PathLike) -> int:
    """Write every prime-square-modulus entry of the memo, atomically."""
    path = Path(path)
    entries = {}
    for (modulus, logv, n), value in sorted(cache_snapshot().items()):
        p = math.isqrt(modulus)
        if p > 1 and p * p == modulus:
            entries[f"{p}:{logv}:{n}"] = _encode(value)
    doc = {"format": FORMAT, "entries": entries}
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(doc, fh, sort_keys=True)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise
    return len(entries)
