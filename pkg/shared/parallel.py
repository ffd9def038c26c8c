"""
Worker pool helper. Results always come back in input order, so output
does not depend on scheduling; jobs=1 runs in-process.
"""
import logging
import os
from concurrent.futures import ProcessPoolExecutor

from shared.defaults import ENV_JOBS

logger = logging.getLogger(__name__)


def resolve_jobs(jobs=None):
    """Explicit value, else DESSIN_JOBS, else the core count."""
    if jobs is None:
        env = os.getenv(ENV_JOBS, "").strip()
        if env:
            try:
                jobs = int(env)
            except ValueError:
                logger.warning(f"Ignorando {ENV_JOBS}={env!r}: nao e inteiro")
                jobs = None
    if jobs is None:
        jobs = os.cpu_count() or 1
    return max(1, int(jobs))


def parallel_map(func, items, jobs=1, chunksize=1):
    """Ordered map; `func` must be a top-level (picklable) function when jobs > 1."""
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return [func(x) for x in items]
    workers = min(jobs, len(items))
    logger.debug(f"parallel_map: {len(items)} tarefas em {workers} processos")
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items, chunksize=chunksize))
