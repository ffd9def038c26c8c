"""
`correlator`: one correlator N_k(mu) or the generating polynomial of mu,
by any of the independent routes.
"""
import logging
from fractions import Fraction
from itertools import product

from shared.defaults import ENGINE_DEFAULTS
from shared.errors import InputError
from shared.formatting import format_counts, format_genus
from shared.hurwitz import (
    generating_polynomial,
    n_bullet,
    n_circ,
    oracle_correlator,
    riemann_hurwitz_genus,
)
from shared.kp import affine_coords, zhou_npoint
from shared.partitions import format_partition, z_factor
from shared.vpoly import VPoly
from store.db import get_cache

logger = logging.getLogger(__name__)

CONNECTED_ROUTES = ("log", "zhou", "oracle")
DISCONNECTED_ROUTES = ("burnside", "oracle")


# ─────────────────────────────────────────────────────────
# ROUTES
# ─────────────────────────────────────────────────────────

def _burnside(cfg, cache):
    if cfg.generating:
        return generating_polynomial(cfg.arity, cfg.mu, connected=False, cache=cache)
    return n_bullet(cfg.arity, cfg.k, cfg.mu, cache)


def _log(cfg, cache):
    if cfg.generating:
        return generating_polynomial(cfg.arity, cfg.mu, connected=True, cache=cache)
    return n_circ(cfg.arity, cfg.k, cfg.mu, cache)


def _zhou(cfg, cache):
    poly = zhou_npoint(cfg.mu, affine_coords(cfg.arity, cfg.mu.size), cfg.closure, cfg.jobs)
    return poly if cfg.generating else poly.coefficient(cfg.k)


def _oracle(cfg, cache):
    if not cfg.generating:
        return oracle_correlator(cfg.arity, cfg.k, cfg.mu, cfg.connected, cfg.jobs)
    d = cfg.mu.size
    terms = {}
    for k in product(range(1, d + 1), repeat=cfg.arity):
        value = oracle_correlator(cfg.arity, k, cfg.mu, cfg.connected, cfg.jobs)
        if value:
            terms[k] = value
    return VPoly(cfg.arity, terms)


_ROUTES = {
    "burnside": _burnside,
    "log": _log,
    "zhou": _zhou,
    "oracle": _oracle,
}


def _selected_routes(cfg):
    allowed = CONNECTED_ROUTES if cfg.connected else DISCONNECTED_ROUTES
    route = cfg.route or ("log" if cfg.connected else "burnside")
    if route == "all":
        routes = list(allowed)
        if cfg.mu.size > ENGINE_DEFAULTS["oracle_max_degree"]:
            routes.remove("oracle")
        return routes
    if route not in allowed:
        kind = "conexos" if cfg.connected else "desconexos"
        raise InputError(f"rota {route!r} nao calcula correlatores {kind}; use uma de {', '.join(allowed)}")
    return [route]


# ─────────────────────────────────────────────────────────
# COMMAND
# ─────────────────────────────────────────────────────────

def run_correlator(cfg):
    if cfg.mu is None:
        raise InputError("--mu e obrigatorio")
    if not cfg.generating and cfg.k is None:
        raise InputError("informe --k ou --generating")
    cache = get_cache(cfg.cache_dir)

    values = {}
    for name in _selected_routes(cfg):
        logger.info(f"correlator: rota {name} para mu={format_partition(cfg.mu)}")
        values[name] = _ROUTES[name](cfg, cache)

    first = next(iter(values.values()))
    payload = {
        "r": cfg.arity,
        "mu": format_partition(cfg.mu),
        "k": None if cfg.k is None else format_counts(cfg.k),
        "connected": cfg.connected,
        "generating": cfg.generating,
        "value": first,
        "routes": values,
        "agree": all(v == first for v in values.values()),
    }
    if cfg.k is not None:
        payload["genus"] = format_genus(riemann_hurwitz_genus(r=cfg.arity, k=cfg.k, mu=cfg.mu))
    if isinstance(first, Fraction):
        payload["z_mu_times_value"] = z_factor(cfg.mu) * first
    return payload
