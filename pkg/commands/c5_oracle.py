"""
`oracle`: brute-force Hurwitz numbers of an explicit profile list.
"""
import logging
from math import factorial

from shared.errors import InputError
from shared.formatting import format_genus
from shared.hurwitz import (
    burnside_disconnected,
    oracle_connected,
    oracle_disconnected,
    riemann_hurwitz_genus,
)
from store.db import get_cache

logger = logging.getLogger(__name__)


def run_oracle(cfg):
    rp = cfg.profiles
    if rp is None:
        raise InputError("--profiles e obrigatorio (ex.: \"2|2\")")
    d = rp.degree
    value = oracle_connected(rp, cfg.jobs) if cfg.connected else oracle_disconnected(rp, cfg.jobs)
    payload = {
        "profiles": str(rp),
        "degree": d,
        "connected": cfg.connected,
        "genus": format_genus(riemann_hurwitz_genus(rp)),
        "value": value,
        "tuples": int(value * factorial(d)),
    }
    if not cfg.connected:
        burnside = burnside_disconnected(rp, get_cache(cfg.cache_dir))
        payload["burnside"] = burnside
        payload["agree"] = burnside == value
    logger.info(f"oracle {rp}: {value}")
    return payload
