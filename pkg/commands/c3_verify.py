"""
`verify`: exact cross-route checks.

Each suite returns a list of check records
    {"suite", "check", "cases", "passed", "first_failure"}
and the command passes only if every record passes.
"""
import logging
from itertools import combinations_with_replacement, product

from shared.characters import (
    char_table,
    character_route_eval,
    hook_content_poly,
)
from shared.cutjoin import (
    a_coeffs_closed,
    a_coeffs_from_relation,
    apply_combined,
    apply_combined_by_orders,
    cut_and_join_residual,
    euler_identity_residual,
    schur_series_to_powersum,
    virasoro_flow,
    z_direct,
    z_flow,
)
from shared.defaults import VERIFY_DEFAULTS
from shared.hurwitz import (
    SCHUR,
    GradedSeries,
    RamificationProfile,
    burnside_disconnected,
    connected_series,
    disconnected_series,
    n_bullet,
    n_circ,
    oracle_correlator,
    oracle_disconnected,
)
from shared.kp import (
    LITERAL,
    affine_coords,
    affine_from_schur,
    one_point_closed,
    schur_coefficient_from_affine,
    two_point_closed,
    zhou_npoint,
)
from shared.partitions import (
    Partition,
    dim_irrep,
    format_partition,
    partitions_of,
    partitions_up_to,
    standard_tableaux_count,
)
from shared.vpoly import VPoly
from store.char_tables import parse_table, serialize_table
from store.db import get_cache

logger = logging.getLogger(__name__)


def _record(suite, check, cases, first_failure):
    passed = first_failure is None
    log = logger.info if passed else logger.warning
    log(f"verify {suite}/{check}: {cases} casos, {'ok' if passed else 'FALHOU'}")
    return {
        "suite": suite,
        "check": check,
        "cases": cases,
        "passed": passed,
        "first_failure": first_failure,
    }


class _Tally:
    """Counts cases and keeps the first failure."""

    def __init__(self):
        self.cases = 0
        self.first = None

    def see(self, ok, detail):
        self.cases += 1
        if not ok and self.first is None:
            self.first = detail


# ─────────────────────────────────────────────────────────
# SUITES
# ─────────────────────────────────────────────────────────

def verify_burnside(d, cache=None, jobs=1):
    """Burnside sums against permutation enumeration."""
    profiles = _Tally()
    for size in range(1, d + 1):
        parts = partitions_of(size)
        for m in (2, 3):
            for combo in combinations_with_replacement(parts, m):
                rp = RamificationProfile(combo)
                b = burnside_disconnected(rp, cache)
                o = oracle_disconnected(rp, jobs)
                profiles.see(b == o, {"profiles": str(rp), "burnside": b, "oracle": o})

    small = min(d, 4)
    disconnected = _Tally()
    connected = _Tally()
    for r in (1, 2):
        for mu in partitions_up_to(small):
            if not mu:
                continue
            for k in product(range(1, mu.size + 1), repeat=r):
                detail = {"r": r, "k": list(k), "mu": format_partition(mu)}
                nb = n_bullet(r, k, mu, cache)
                ob = oracle_correlator(r, k, mu, False, jobs)
                disconnected.see(nb == ob, {**detail, "burnside": nb, "oracle": ob})
                nc = n_circ(r, k, mu, cache)
                oc = oracle_correlator(r, k, mu, True, jobs)
                connected.see(nc == oc, {**detail, "log": nc, "oracle": oc})
    return [
        _record("burnside", "profiles_burnside_vs_oracle", profiles.cases, profiles.first),
        _record("burnside", "n_bullet_vs_oracle", disconnected.cases, disconnected.first),
        _record("burnside", "n_circ_vs_connected_oracle", connected.cases, connected.first),
    ]


def verify_cutjoin(r, D, cache=None, jobs=1):
    """The cut-and-join flow against the direct Schur expansion."""
    flow = z_flow(r, D, jobs)
    direct = z_direct(r, D)
    diff = flow.first_difference(direct)
    checks = [_record(
        "cutjoin", "flow_vs_direct", sum(1 for _ in direct.items()),
        None if diff is None else {
            "index": format_partition(diff),
            "flow": flow.coefficient(diff),
            "direct": direct.coefficient(diff),
        },
    )]

    bad_degree = cut_and_join_residual(a_coeffs_closed(r), direct)
    checks.append(_record(
        "cutjoin", "cut_and_join_equation", D,
        None if bad_degree is None else {"degree": bad_degree},
    ))

    orders = _Tally()
    ops = a_coeffs_closed(r)
    for mu in partitions_up_to(min(D, 4)):
        g = GradedSeries(SCHUR, r, mu.size, {mu.size: {mu: VPoly.one(r)}})
        combined = apply_combined(ops, g)
        by_orders = apply_combined_by_orders(ops, g)
        diff = combined.first_difference(by_orders)
        orders.see(diff is None, {"mu": format_partition(mu), "index": None if diff is None else format_partition(diff)})
    checks.append(_record("cutjoin", "combined_vs_sum_of_orders", orders.cases, orders.first))

    converted = schur_series_to_powersum(direct, cache)
    burnside = disconnected_series(r, D, cache, jobs)
    diff = converted.first_difference(burnside)
    checks.append(_record(
        "cutjoin", "schur_route_vs_burnside", sum(1 for _ in burnside.items()),
        None if diff is None else {
            "index": format_partition(diff),
            "schur_route": converted.coefficient(diff),
            "burnside": burnside.coefficient(diff),
        },
    ))
    return checks


def verify_zhou(r, W, cache=None, jobs=1):
    """Zhou's cycle formula against log Z, the closed forms and the Schur determinants."""
    am = affine_coords(r, W)
    log = connected_series(r, W, cache, jobs)

    routes = _Tally()
    literal_mismatches = []
    for mu in partitions_up_to(W):
        if not mu:
            continue
        z = zhou_npoint(mu, am, jobs=jobs)
        expected = log.coefficient(mu)
        routes.see(z == expected, {"mu": format_partition(mu), "zhou": z, "log": expected})
        if mu.length >= 2 and zhou_npoint(mu, am, LITERAL) != expected:
            literal_mismatches.append(format_partition(mu))

    closed = _Tally()
    for n in range(1, W + 1):
        mu = Partition((n,))
        c = one_point_closed(n, r)
        closed.see(c == log.coefficient(mu), {"mu": format_partition(mu), "closed": c, "log": log.coefficient(mu)})
    for n1 in range(1, W):
        for n2 in range(1, n1 + 1):
            if n1 + n2 > W:
                continue
            mu = Partition((n1, n2))
            c = two_point_closed(n1, n2, r)
            closed.see(c == log.coefficient(mu), {"mu": format_partition(mu), "closed": c, "log": log.coefficient(mu)})

    direct = z_direct(r, W)
    dets = _Tally()
    for mu in partitions_up_to(W):
        value = schur_coefficient_from_affine(mu, am)
        dets.see(value == direct.coefficient(mu), {
            "mu": format_partition(mu), "determinant": value, "direct": direct.coefficient(mu),
        })
    read_back = affine_from_schur(direct)

    checks = [
        _record("zhou", "zhou_vs_log", routes.cases, routes.first),
        _record("zhou", "closed_forms_vs_log", closed.cases, closed.first),
        _record("zhou", "affine_determinants_vs_direct", dets.cases, dets.first),
        _record("zhou", "affine_read_back", len(am.entries),
                None if read_back == am else {"truncation": W}),
    ]
    checks[0]["literal_closure_mismatches"] = literal_mismatches
    return checks


def verify_appendix(M, cache=None, jobs=1):
    """Hook-content evaluation, the character route, the Virasoro flow and the Euler identity."""
    flow = virasoro_flow(M)
    evals = _Tally()
    virasoro = _Tally()
    euler = _Tally()
    for mu in partitions_up_to(M):
        hc = hook_content_poly(mu)
        ch = character_route_eval(mu, cache=cache)
        evals.see(hc == ch, {"mu": format_partition(mu), "hook_content": hc, "characters": ch})
        vf = flow.coefficient(mu)
        virasoro.see(hc == vf, {"mu": format_partition(mu), "hook_content": hc, "virasoro": vf})
        if mu:
            residual = euler_identity_residual(mu)
            euler.see(residual.is_zero(), {"mu": format_partition(mu), "residual": residual})
    return [
        _record("appendix", "hook_content_vs_characters", evals.cases, evals.first),
        _record("appendix", "hook_content_vs_virasoro_flow", virasoro.cases, virasoro.first),
        _record("appendix", "euler_identity", euler.cases, euler.first),
    ]


def verify_characters(d, cache=None, jobs=1):
    """Orthogonality, cache round trip and dimensions for every degree up to d."""
    ortho = _Tally()
    roundtrip = _Tally()
    dims = _Tally()
    for size in range(1, d + 1):
        table = char_table(size, cache, jobs)
        status = table.check_orthogonality()
        ortho.see(status["column_orthogonality"] and status["identity_column_is_dimension"], status)
        text = serialize_table(table)
        roundtrip.see(serialize_table(parse_table(text, size)) == text, {"d": size})
        for lam in partitions_of(size):
            dims.see(standard_tableaux_count(lam) == dim_irrep(lam), {
                "lambda": format_partition(lam),
                "tableaux": standard_tableaux_count(lam),
                "hook_formula": dim_irrep(lam),
            })
    return [
        _record("characters", "orthogonality", ortho.cases, ortho.first),
        _record("characters", "cache_round_trip", roundtrip.cases, roundtrip.first),
        _record("characters", "tableaux_vs_hook_formula", dims.cases, dims.first),
    ]


def verify_acoeffs(r, cache=None, jobs=1):
    """Closed a_k(v) against the triangular solve and the defining relation."""
    routes = _Tally()
    relation = _Tally()
    for arity in range(1, r + 1):
        closed = a_coeffs_closed(arity)
        solved = a_coeffs_from_relation(arity)
        routes.see(closed == solved, {"r": arity, "closed": closed.to_json(), "relation": solved.to_json()})
        residual = closed.relation_residual()
        relation.see(residual.is_zero(), {"r": arity, "residual": residual})
    return [
        _record("acoeffs", "closed_vs_relation_solve", routes.cases, routes.first),
        _record("acoeffs", "defining_relation", relation.cases, relation.first),
    ]


# ─────────────────────────────────────────────────────────
# COMMAND
# ─────────────────────────────────────────────────────────

def _suite_args(cfg, suite):
    defaults = VERIFY_DEFAULTS[suite]
    if suite == "burnside":
        return (cfg.d or defaults["d"],)
    if suite == "cutjoin":
        return (cfg.r or defaults["r"], cfg.degree or defaults["degree"])
    if suite == "zhou":
        return (cfg.r or defaults["r"], cfg.degree or defaults["max_weight"])
    if suite == "appendix":
        return (cfg.degree or defaults["max_size"],)
    if suite == "characters":
        return (cfg.d or defaults["d"],)
    return (cfg.r or defaults["r"],)


SUITES = {
    "burnside": verify_burnside,
    "cutjoin": verify_cutjoin,
    "zhou": verify_zhou,
    "appendix": verify_appendix,
    "characters": verify_characters,
    "acoeffs": verify_acoeffs,
}


def run_verify(cfg):
    cache = get_cache(cfg.cache_dir)
    names = list(SUITES) if cfg.action == "all" else [cfg.action]
    checks = []
    for name in names:
        args = _suite_args(cfg, name)
        logger.info(f"verify {name} {args}")
        checks.extend(SUITES[name](*args, cache=cache, jobs=cfg.jobs))
    return {
        "suite": cfg.action,
        "passed": all(c["passed"] for c in checks),
        "checks": checks,
    }
