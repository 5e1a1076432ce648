"""On-disk result cache: newline-delimited JSON records.

One record per (kind, dimension, index) triple, with the count kept as a
decimal string so no integer-width limit applies.  Writes go through a
temporary file and an atomic rename.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

CacheKey = tuple[str, int, int]
DEFAULT_CACHE_PATH = "magicount-cache.ndjson"

_KINDS = ("v", "u", "w", "w01")


class CacheFormatError(ValueError):
    """A cache file line could not be parsed or validated."""


def parse_record(line: str) -> tuple[CacheKey, str]:
    try:
        raw = json.loads(line)
    except json.JSONDecodeError as exc:
        raise CacheFormatError(f"bad cache line: {line!r}") from exc
    try:
        kind, d, n, value = raw["kind"], raw["d"], raw["n"], raw["value"]
    except (TypeError, KeyError) as exc:
        raise CacheFormatError(f"cache record missing fields: {line!r}") from exc
    if kind not in _KINDS or not isinstance(d, int) or not isinstance(n, int):
        raise CacheFormatError(f"cache record malformed: {line!r}")
    if not isinstance(value, str) or not value.isdigit():
        raise CacheFormatError(f"cache value must be a decimal string: {line!r}")
    return (kind, d, n), value


def format_record(key: CacheKey, value: str) -> str:
    kind, d, n = key
    return json.dumps(
        {"d": d, "kind": kind, "n": n, "value": value}, sort_keys=True
    )


def load_cache(path: str | Path) -> dict[CacheKey, str]:
    path = Path(path)
    if not path.exists():
        return {}
    records: dict[CacheKey, str] = {}
    for line in path.read_text().splitlines():
        if not line.strip():
            continue
        key, value = parse_record(line)
        if key in records and records[key] != value:
            raise CacheFormatError(f"conflicting duplicate record for {key}")
        records[key] = value
    return records


def save_cache(path: str | Path, records: dict[CacheKey, str]) -> None:
    path = Path(path)
    lines = [format_record(key, records[key]) for key in sorted(records)]
    payload = "\n".join(lines) + ("\n" if lines else "")
    fd, tmp_name = tempfile.mkstemp(
        dir=path.parent if str(path.parent) else ".", prefix=path.name, suffix=".tmp"
    )
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(payload)
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise
