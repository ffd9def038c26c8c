"""
`fit stanley` / `fit conjecture`: exact polynomial fits of sampled correlators.
"""
import logging

import pandas as pd

from shared.errors import InputError
from shared.partitions import EMPTY
from shared.polyfit import ROUTE_CLOSED, conjecture_fit, stanley_fit
from store.db import get_cache

logger = logging.getLogger(__name__)


def run_fit(cfg):
    cache = get_cache(cfg.cache_dir)
    if cfg.action == "stanley":
        report = stanley_fit(
            cfg.arity, cfg.lam, cfg.mu or EMPTY,
            n_samples=cfg.n_samples, holdout=cfg.holdout, cache=cache, jobs=cfg.jobs,
        )
    else:
        if cfg.k is None:
            raise InputError("fit conjecture exige --k")
        report = conjecture_fit(
            cfg.arity, cfg.k, length=cfg.length, nmax=cfg.nmax, holdout=cfg.holdout,
            route=cfg.route or ROUTE_CLOSED, cache=cache, jobs=cfg.jobs,
        )

    passed = report.ok
    payload = {"fit": cfg.action, "passed": passed, "report": report.to_json()}
    if cfg.compare:
        if report.known is None:
            payload["comparison"] = {"known": False}
        else:
            payload["comparison"] = {
                "known": True,
                "closed_form": str(report.known),
                "match": report.known_match,
            }
            payload["passed"] = passed and bool(report.known_match)
    logger.info(f"fit {cfg.action}: status={report.status}")
    return payload


def samples_frame(payload):
    rows = [
        {
            "point": ",".join(str(x) for x in s["point"]),
            "role": s["role"],
            "value": s["value"],
        }
        for s in payload["report"]["samples"]
    ]
    return pd.DataFrame(rows, columns=["point", "role", "value"])
