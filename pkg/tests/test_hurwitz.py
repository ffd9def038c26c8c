import os
from fractions import Fraction
from itertools import combinations_with_replacement, product

import pytest

from shared.errors import ContractViolation, SizeLimitError
from shared.hurwitz import (
    NON_INTEGRAL,
    POWERSUM,
    SCHUR,
    GradedSeries,
    RamificationProfile,
    burnside_disconnected,
    connected_series,
    disconnected_series,
    generating_polynomial,
    genus_admissible,
    hurwitz_number,
    n_bullet,
    n_circ,
    oracle_connected,
    oracle_correlator,
    oracle_disconnected,
    riemann_hurwitz_genus,
    series_exp,
    series_log,
)
from shared.partitions import EMPTY, Partition, partitions_of, partitions_up_to
from shared.vpoly import VPoly, elementary_symmetric

P = Partition.of


def profiles(*parts):
    return RamificationProfile(tuple(P(*p) for p in parts))


# ─────────────────────────────────────────────────────────
# CORRELATORS
# ─────────────────────────────────────────────────────────

def test_simple_correlators():
    # (tau, e, tau): one tuple out of 2!
    assert n_bullet(2, (1, 2), P(2)) == Fraction(1, 2)
    # tau * tau * tau is not the identity
    assert n_bullet(2, (1, 1), P(2)) == 0
    assert n_circ(2, (1, 1), P(1)) == 1
    assert n_circ(2, (1, 2), P(2)) == Fraction(1, 2)


def test_arity_one_counts_one_class():
    assert n_bullet(1, (2,), P(1, 1)) == Fraction(1, 2)
    assert n_bullet(1, (1,), P(1, 1)) == 0
    assert n_bullet(1, (1,), P(3)) == Fraction(1, 3)


def test_counts_outside_range_vanish():
    assert n_bullet(2, (0, 1), P(2)) == 0
    assert n_bullet(2, (3, 1), P(2)) == 0
    assert n_circ(3, (1, 1, 5), P(2, 1)) == 0
    assert n_bullet(2, (1, 1), EMPTY) == 0


def test_count_vector_must_have_length_r():
    with pytest.raises(ContractViolation):
        n_bullet(2, (1,), P(2))
    with pytest.raises(ContractViolation):
        n_circ(3, (1, 1), P(2))


def test_one_point_of_size_one_is_product_of_variables():
    for r in (1, 2, 3, 4):
        assert generating_polynomial(r, P(1)) == elementary_symmetric(r, r)


def test_connected_and_disconnected_agree_on_one_part():
    # a single cycle forces a transitive tuple
    for r in (1, 2):
        for n in range(1, 5):
            assert generating_polynomial(r, P(n), connected=True) == generating_polynomial(r, P(n), connected=False)


def test_generating_polynomial_collects_correlators():
    mu = P(2, 1)
    poly = generating_polynomial(2, mu, connected=True)
    for k in product(range(1, 4), repeat=2):
        assert poly.coefficient(k) == n_circ(2, k, mu)


# ─────────────────────────────────────────────────────────
# BURNSIDE VS ENUMERATION
# ─────────────────────────────────────────────────────────

def test_burnside_matches_oracle_small():
    for d in range(1, 4):
        for combo in combinations_with_replacement(partitions_of(d), 3):
            rp = RamificationProfile(combo)
            assert burnside_disconnected(rp) == oracle_disconnected(rp)


@pytest.mark.slow
def test_burnside_matches_oracle_up_to_degree_5(cache):
    for d in range(4, 6):
        for combo in combinations_with_replacement(partitions_of(d), 3):
            rp = RamificationProfile(combo)
            assert burnside_disconnected(rp, cache) == oracle_disconnected(rp)


@pytest.mark.parametrize("r", [1, 2])
def test_correlators_match_oracle(r):
    for mu in partitions_up_to(3):
        if not mu:
            continue
        for k in product(range(1, mu.size + 1), repeat=r):
            assert n_bullet(r, k, mu) == oracle_correlator(r, k, mu)
            assert n_circ(r, k, mu) == oracle_correlator(r, k, mu, connected=True)


def test_oracle_values():
    assert oracle_disconnected(profiles((2,), (2,))) == Fraction(1, 2)
    assert oracle_disconnected(profiles((1, 1), (1, 1))) == Fraction(1, 2)
    assert oracle_connected(profiles((1, 1), (1, 1))) == 0
    assert oracle_connected(profiles((3,), (3,), (3,))) == Fraction(1, 3)


def test_oracle_degree_bound():
    with pytest.raises(SizeLimitError):
        oracle_disconnected(profiles((7,), (7,)))


# ─────────────────────────────────────────────────────────
# GENUS
# ─────────────────────────────────────────────────────────

def test_riemann_hurwitz_genus():
    assert riemann_hurwitz_genus(profiles((2,), (2,))) == 0
    assert riemann_hurwitz_genus(profiles((3,), (3,), (3,))) == 1
    assert riemann_hurwitz_genus(profiles((2,), (1, 1))) == NON_INTEGRAL
    assert riemann_hurwitz_genus(r=2, k=(1, 2), mu=P(2)) == 0
    assert riemann_hurwitz_genus(r=2, k=(1, 1), mu=P(2)) == NON_INTEGRAL
    with pytest.raises(ContractViolation):
        riemann_hurwitz_genus(r=2, k=(1, 1))


def test_genus_admissible():
    assert genus_admissible(0)
    assert not genus_admissible(-1)
    assert not genus_admissible(NON_INTEGRAL)


def test_hurwitz_number_record():
    record = hurwitz_number(profiles((2,), (2,)))
    assert record == {"profiles": "2|2", "connected": False, "genus": 0, "value": Fraction(1, 2)}


def test_profiles_must_share_degree():
    with pytest.raises(ContractViolation):
        profiles((2,), (1,))
    with pytest.raises(ContractViolation):
        RamificationProfile(())


# ─────────────────────────────────────────────────────────
# SERIES
# ─────────────────────────────────────────────────────────

@pytest.mark.parametrize("r", [1, 2, 3])
def test_exp_of_log_is_identity(r):
    z = disconnected_series(r, 4)
    assert series_exp(series_log(z)) == z
    assert connected_series(r, 4).coefficient(EMPTY).is_zero()


def test_series_product_is_powersum_only():
    g = GradedSeries.one(SCHUR, 1, 2)
    with pytest.raises(ContractViolation):
        g.mul(g)
    with pytest.raises(ContractViolation):
        series_log(g)


def test_series_log_needs_unit_constant():
    g = GradedSeries(POWERSUM, 1, 2, {1: {P(1): VPoly.one(1)}})
    with pytest.raises(ContractViolation):
        series_log(g)
    assert series_log(series_exp(g)) == g


def test_series_terms_serialization():
    terms = disconnected_series(2, 1).to_json_terms()
    assert terms[0] == {"degree": 0, "basis": POWERSUM, "terms": [{"index": "[]", "coeff": "1"}]}
    assert terms[1]["terms"] == [{"index": "1", "coeff": "v1*v2"}]


def test_parallel_series_matches_serial():
    assert disconnected_series(2, 4, jobs=2) == disconnected_series(2, 4, jobs=1)


def test_parallel_series_on_empty_cache(cache):
    assert disconnected_series(2, 6, cache, jobs=4) == disconnected_series(2, 6)
    assert not [name for name in os.listdir(cache.path) if name.endswith(".tmp")]


def test_cancelled_terms_leave_no_empty_degree():
    g = GradedSeries(POWERSUM, 1, 2, {1: {P(1): VPoly.one(1)}, 2: {P(2): VPoly.one(1)}})
    h = GradedSeries(POWERSUM, 1, 2, {2: {P(2): VPoly.one(1)}})
    diff = g.add(h.scale(-1))
    assert diff.degrees() == [1]
    assert diff == GradedSeries(POWERSUM, 1, 2, {1: {P(1): VPoly.one(1)}})
    one = GradedSeries.one(POWERSUM, 1, 2)
    zero = one.add(one.scale(-1))
    assert zero.degrees() == []
    assert zero == GradedSeries(POWERSUM, 1, 2)
