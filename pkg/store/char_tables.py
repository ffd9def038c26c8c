"""
CRUD operations for cached character tables (one JSONL file per degree).

File layout:
    {"format": 1, "d": 3}
    {"lambda": "3", "mu": "3", "chi": "1"}
    ...
Integers are strings so no JSON reader loses precision.
"""
import json
import logging
import os
import tempfile

import numpy as np

from shared.defaults import CACHE_DEFAULTS
from shared.errors import CacheError, ContractViolation
from shared.partitions import format_partition, parse_partition, partitions_of

logger = logging.getLogger(__name__)


def serialize_table(table):
    """Canonical text of a table (header + one record per entry)."""
    lines = [json.dumps({"format": CACHE_DEFAULTS["format"], "d": table.d})]
    for i, lam in enumerate(table.partitions):
        for j, mu in enumerate(table.partitions):
            lines.append(json.dumps({
                "lambda": format_partition(lam),
                "mu": format_partition(mu),
                "chi": str(int(table.values[i, j])),
            }))
    return "\n".join(lines) + "\n"


def parse_table(text, d):
    """Inverse of serialize_table; raises ValueError on any inconsistency."""
    from shared.characters import CharTable

    lines = text.splitlines()
    if not lines:
        raise ValueError("arquivo vazio")
    header = json.loads(lines[0])
    if header.get("format") != CACHE_DEFAULTS["format"]:
        raise ValueError(f"versao de formato {header.get('format')!r}")
    if header.get("d") != d:
        raise ValueError(f"grau {header.get('d')!r} != {d}")
    parts = partitions_of(d)
    index = {p: i for i, p in enumerate(parts)}
    values = np.empty((len(parts), len(parts)), dtype=object)
    seen = 0
    for line in lines[1:]:
        if not line.strip():
            continue
        rec = json.loads(line)
        i = index[parse_partition(rec["lambda"])]
        j = index[parse_partition(rec["mu"])]
        values[i, j] = int(rec["chi"])
        seen += 1
    if seen != len(parts) ** 2:
        raise ValueError(f"{seen} entradas, esperado {len(parts) ** 2}")
    return CharTable(d, parts, values)


def get_table(cache, d):
    """Load the table for degree d. Returns CharTable or None (missing/corrupt/stale)."""
    path = cache.table_path(d)
    if not os.path.exists(path):
        return None
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_table(fh.read(), d)
    except (ValueError, KeyError, TypeError, ContractViolation) as exc:
        logger.warning(f"Cache corrompido em {path} ({exc}); recalculando")
        return None


def upsert_table(cache, table):
    """Write (or overwrite) the table file atomically. Returns the path.

    Every writer has its own temp file in the cache directory; concurrent
    writers of one degree all hold the same canonical text.
    """
    path = cache.table_path(table.d)
    text = serialize_table(table)
    with cache.lock:
        tmp = None
        try:
            fd, tmp = tempfile.mkstemp(dir=cache.path, prefix=f".d{table.d}-", suffix=".tmp")
            with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
            os.replace(tmp, path)
        except OSError as exc:
            if tmp is not None and os.path.exists(tmp):
                os.remove(tmp)
            raise CacheError(f"falha ao gravar {path}: {exc}") from exc
    logger.info(f"Tabela d={table.d} gravada em {path}")
    return path


def list_tables(cache):
    """List cached degrees with file size. Returns list of dicts sorted by d."""
    prefix, suffix = CACHE_DEFAULTS["file_pattern"].split("{d}")
    results = []
    for name in os.listdir(cache.path):
        if not (name.startswith(prefix) and name.endswith(suffix)):
            continue
        middle = name[len(prefix):len(name) - len(suffix)]
        if not middle.isdigit():
            continue
        full = os.path.join(cache.path, name)
        results.append({"d": int(middle), "file": full, "bytes": os.path.getsize(full)})
    return sorted(results, key=lambda r: r["d"])


def delete_table(cache, d):
    """Delete the table for degree d. Returns True if a file was removed."""
    path = cache.table_path(d)
    with cache.lock:
        if os.path.exists(path):
            os.remove(path)
            return True
    return False
