"""On-disk cache for Macdonald tables and basis transition matrices.

The cache is off until a directory is configured, either explicitly with
``configure`` or through the ``DELTACALC_CACHE`` environment variable.
Entries carry a format version and a SHA-256 checksum of the payload;
corrupt or stale entries are ignored and recomputed.  Writes go to a
temporary file that is renamed into place.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional

FORMAT_VERSION = 1
ENV_VAR = "DELTACALC_CACHE"

_explicit_dir: Optional[Path] = None
_disabled = False


def configure(directory: Optional[str]) -> None:
    """Set the cache directory; ``None`` falls back to the environment."""
    global _explicit_dir
    _explicit_dir = Path(directory) if directory else None


def disable(flag: bool = True) -> None:
    global _disabled
    _disabled = flag


def cache_dir() -> Optional[Path]:
    if _disabled:
        return None
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return _explicit_dir


def _checksum(payload: Any) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def entry_path(kind: str, key: str) -> Optional[Path]:
    d = cache_dir()
    if d is None:
        return None
    return d / f"{kind}-{key}-v{FORMAT_VERSION}.json"


def read(kind: str, key: str) -> Optional[Any]:
    path = entry_path(kind, key)
    if path is None or not path.exists():
        return None
    try:
        data = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if data.get("format") != FORMAT_VERSION or data.get("kind") != kind:
        return None
    payload = data.get("payload")
    if _checksum(payload) != data.get("checksum"):
        return None
    return payload


def write(kind: str, key: str, payload: Any) -> None:
    path = entry_path(kind, key)
    if path is None:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    doc = {
        "format": FORMAT_VERSION,
        "kind": kind,
        "key": key,
        "checksum": _checksum(payload),
        "payload": payload,
    }
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(doc, fh, sort_keys=True)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# transition matrices ---------------------------------------------------------


def _matrix_to_json(mat) -> list:
    return [
        [list(lam), list(mu), str(c)]
        for lam in sorted(mat, reverse=True)
        for mu, c in sorted(mat[lam].items(), reverse=True)
    ]


def _matrix_from_json(rows, parts) -> dict:
    from .symfunc import Partition

    out = {lam: {} for lam in parts}
    for lam, mu, c in rows:
        out[Partition(lam)][Partition(mu)] = Fraction(c)
    return out


def load_transitions(n: int):
    payload = read("transitions", f"n{n}")
    if payload is None:
        return None
    from .symfunc import partitions

    parts = partitions(n)
    return {
        b: (_matrix_from_json(v[0], parts), _matrix_from_json(v[1], parts))
        for b, v in payload.items()
    }


def store_transitions(n: int, table) -> None:
    if cache_dir() is None:
        return
    write(
        "transitions",
        f"n{n}",
        {b: [_matrix_to_json(a), _matrix_to_json(c)] for b, (a, c) in table.items()},
    )


# Macdonald tables -------------------------------------------------------------


def load_macdonald(n: int):
    payload = read("macdonald", f"n{n}")
    if payload is None:
        return None
    from .symfunc import Partition, SymFunc

    return {Partition(item["partition"]): SymFunc.from_json(item["symfunc"]) for item in payload}


def store_macdonald(n: int, table) -> None:
    if cache_dir() is None:
        return
    payload = [
        {"partition": list(mu), "symfunc": table[mu].to_json()}
        for mu in sorted(table, reverse=True)
    ]
    write("macdonald", f"n{n}", payload)
