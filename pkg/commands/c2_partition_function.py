"""
`partition-function`: Z (or log Z) up to a truncation degree.
"""
import logging

import pandas as pd

from shared.cutjoin import z_flow
from shared.errors import InputError
from shared.hurwitz import connected_series, disconnected_series
from store.db import get_cache

logger = logging.getLogger(__name__)


def run_partition_function(cfg):
    r, D = cfg.arity, cfg.truncation
    if cfg.basis == "schur":
        if cfg.connected:
            raise InputError("log Z so existe na base de somas de potencias (--basis powersum)")
        series = z_flow(r, D, cfg.jobs)
    else:
        cache = get_cache(cfg.cache_dir)
        build = connected_series if cfg.connected else disconnected_series
        series = build(r, D, cache, cfg.jobs)
    logger.info(f"partition-function: r={r} D={D} base={cfg.basis}")
    return {
        "r": r,
        "truncation": D,
        "basis": cfg.basis,
        "connected": cfg.connected,
        "degrees": series.to_json_terms(),
    }


def terms_frame(payload):
    rows = [
        {"degree": block["degree"], "index": term["index"], "coeff": term["coeff"]}
        for block in payload["degrees"]
        for term in block["terms"]
    ]
    return pd.DataFrame(rows, columns=["degree", "index", "coeff"])
