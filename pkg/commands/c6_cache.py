"""
`cache chars|list|clear`: build, inspect and drop cached character tables.
"""
import logging
import os

from shared.characters import char_table, clear_memo
from shared.errors import InputError
from shared.partitions import format_partition
from store.char_tables import delete_table, list_tables
from store.db import get_cache

logger = logging.getLogger(__name__)


def run_cache(cfg):
    cache = get_cache(cfg.cache_dir)

    if cfg.action == "chars":
        if cfg.d is None:
            raise InputError("cache chars exige --d")
        existed = os.path.exists(cache.table_path(cfg.d))
        table = char_table(cfg.d, cache, cfg.jobs)
        payload = {
            "action": "chars",
            "d": cfg.d,
            "file": cache.table_path(cfg.d),
            "was_cached": existed,
            "partitions": len(table.partitions),
            "orthogonality": table.check_orthogonality(),
        }
        if cfg.show:
            payload["table"] = {
                format_partition(lam): [int(x) for x in table.row(lam)]
                for lam in table.partitions
            }
            payload["columns"] = [format_partition(mu) for mu in table.partitions]
        return payload

    if cfg.action == "list":
        return {"action": "list", "path": cache.path, "tables": list_tables(cache)}

    degrees = [cfg.d] if cfg.d is not None else [t["d"] for t in list_tables(cache)]
    removed = [d for d in degrees if delete_table(cache, d)]
    clear_memo()
    logger.info(f"cache clear: {len(removed)} tabelas removidas")
    return {"action": "clear", "path": cache.path, "removed": removed}
