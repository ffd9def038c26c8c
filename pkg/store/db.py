"""
Character-table cache directory: location and handle management.
"""
import logging
import os
import threading
from dataclasses import dataclass, field

from shared.defaults import CACHE_DEFAULTS, ENV_CACHE_DIR
from shared.errors import CacheError

logger = logging.getLogger(__name__)

CACHE_PATH = os.path.join(os.path.dirname(__file__), "char_tables")


@dataclass(frozen=True)
class CacheHandle:
    path: str
    lock: threading.Lock = field(default_factory=threading.Lock, compare=False, repr=False)

    def __reduce__(self):
        # locks do not pickle; worker processes get a fresh one
        return (CacheHandle, (self.path,))

    def table_path(self, d):
        return os.path.join(self.path, CACHE_DEFAULTS["file_pattern"].format(d=d))


def default_cache_dir():
    """DESSIN_CACHE_DIR if set, else store/char_tables next to this module."""
    return os.getenv(ENV_CACHE_DIR) or CACHE_PATH


def get_cache(path=None):
    """Open (and create if needed) a cache directory."""
    path = os.path.abspath(path or default_cache_dir())
    try:
        os.makedirs(path, exist_ok=True)
    except OSError as exc:
        raise CacheError(f"nao foi possivel criar o cache em {path}: {exc}") from exc
    if not os.access(path, os.R_OK | os.W_OK):
        raise CacheError(f"cache sem permissao de leitura/escrita: {path}")
    return CacheHandle(path)
