from fractions import Fraction

import pytest

from shared.characters import hook_content_poly
from shared.cutjoin import (
    a_coeffs_closed,
    a_coeffs_from_relation,
    apply_combined,
    apply_combined_by_orders,
    apply_lowering,
    apply_p_minus1,
    cut_and_join_residual,
    euler_identity_residual,
    powersum_series_to_schur,
    schur_series_to_powersum,
    virasoro_flow,
    z_direct,
    z_flow,
)
from shared.errors import ContractViolation
from shared.hurwitz import SCHUR, GradedSeries, disconnected_series
from shared.partitions import Partition, partitions_up_to
from shared.vpoly import VPoly, elementary_symmetric

P = Partition.of


def schur_monomial(mu, arity=1):
    return GradedSeries(SCHUR, arity, mu.size, {mu.size: {mu: VPoly.one(arity)}})


# ─────────────────────────────────────────────────────────
# a_k(v)
# ─────────────────────────────────────────────────────────

def test_a_coeffs_for_two_variables():
    v1, v2 = VPoly.variable(0, 2), VPoly.variable(1, 2)
    ops = a_coeffs_closed(2)
    assert ops.a(1) == v1 * v2
    assert ops.a(2) == (v1 + v2 + 1).scale(Fraction(1, 2))
    assert ops.a(3) == Fraction(1, 3)


def test_a_coeffs_for_one_variable():
    v = VPoly.variable(0, 1)
    ops = a_coeffs_closed(1)
    assert ops.coefficients == (v, VPoly.constant(Fraction(1, 2), 1))


# a_k = (sum_j w_j e_j) / denominator, one entry per k
A_COEFF_TABLES = {
    3: [(1, {3: 1}), (2, {0: 1, 1: 1, 2: 1}), (3, {0: 3, 1: 1}), (4, {0: 1})],
    4: [(1, {4: 1}), (2, {0: 1, 1: 1, 2: 1, 3: 1}), (3, {0: 7, 1: 3, 2: 1}), (4, {0: 6, 1: 1}), (5, {0: 1})],
    5: [
        (1, {5: 1}), (2, {0: 1, 1: 1, 2: 1, 3: 1, 4: 1}), (3, {0: 15, 1: 7, 2: 3, 3: 1}),
        (4, {0: 25, 1: 6, 2: 1}), (5, {0: 10, 1: 1}), (6, {0: 1}),
    ],
}


@pytest.mark.parametrize("r", sorted(A_COEFF_TABLES))
def test_a_coeff_tables_in_elementary_symmetric(r):
    ops = a_coeffs_closed(r)
    for k, (denominator, weights) in enumerate(A_COEFF_TABLES[r], start=1):
        expected = VPoly.zero(r)
        for j, w in weights.items():
            expected = expected + elementary_symmetric(r, j).scale(w)
        assert ops.a(k) == expected.scale(Fraction(1, denominator)), f"r={r} k={k}"


@pytest.mark.parametrize("r", range(1, 6))
def test_closed_a_coeffs_solve_the_relation(r):
    ops = a_coeffs_closed(r)
    assert ops == a_coeffs_from_relation(r)
    assert ops.relation_residual().is_zero()
    assert len(ops.coefficients) == r + 1


def test_a_coeffs_need_positive_arity():
    with pytest.raises(ContractViolation):
        a_coeffs_closed(0)


# ─────────────────────────────────────────────────────────
# OPERATORS
# ─────────────────────────────────────────────────────────

def test_raising_operators_on_small_shapes():
    one = GradedSeries.one(SCHUR, 1, 0)
    assert apply_p_minus1(1, one).coefficient(P(1)) == 1
    raised = apply_p_minus1(2, schur_monomial(P(1)))
    assert raised.coefficient(P(2)) == 2
    assert raised.coefficient(P(1, 1)) == -2


@pytest.mark.parametrize("r", [1, 2, 3])
def test_combined_operator_equals_sum_over_orders(r):
    ops = a_coeffs_closed(r)
    for mu in partitions_up_to(4):
        g = schur_monomial(mu, r)
        assert apply_combined(ops, g) == apply_combined_by_orders(ops, g)


def test_combined_operator_checks_arity():
    with pytest.raises(ContractViolation):
        apply_combined(a_coeffs_closed(2), schur_monomial(P(1), 3))


def test_lowering_operators():
    lowered = apply_lowering(2, schur_monomial(P(2, 1)))
    # removable boxes (1,2) and (2,1) have contents 1 and -1
    assert lowered.coefficient(P(1, 1)) == 1
    assert lowered.coefficient(P(2)) == -1
    with pytest.raises(ContractViolation):
        apply_lowering(3, schur_monomial(P(1)))


def test_operators_need_schur_series():
    g = disconnected_series(1, 2)
    with pytest.raises(ContractViolation):
        apply_p_minus1(1, g)


# ─────────────────────────────────────────────────────────
# BUILDING Z
# ─────────────────────────────────────────────────────────

@pytest.mark.parametrize("r", [1, 2, 3])
def test_flow_matches_direct_expansion(r):
    assert z_flow(r, 5) == z_direct(r, 5)


@pytest.mark.slow
@pytest.mark.parametrize("r", [1, 2, 3])
def test_flow_matches_direct_expansion_degree_6(r):
    assert z_flow(r, 6, jobs=2) == z_direct(r, 6)


@pytest.mark.parametrize("r", [1, 2])
def test_direct_expansion_satisfies_cut_and_join(r):
    assert cut_and_join_residual(a_coeffs_closed(r), z_direct(r, 5)) is None


def test_cut_and_join_detects_a_wrong_series():
    bad = z_direct(2, 3).add(GradedSeries(SCHUR, 2, 3, {2: {P(2): VPoly.one(2)}}))
    assert cut_and_join_residual(a_coeffs_closed(2), bad) == 1


@pytest.mark.parametrize("r", [1, 2])
def test_schur_route_matches_burnside(r, cache):
    converted = schur_series_to_powersum(z_direct(r, 4), cache)
    assert converted == disconnected_series(r, 4, cache)
    assert powersum_series_to_schur(converted, cache) == z_direct(r, 4)


# ─────────────────────────────────────────────────────────
# ONE-VARIABLE IDENTITIES
# ─────────────────────────────────────────────────────────

def test_virasoro_flow_gives_hook_content_evaluations():
    flow = virasoro_flow(6)
    for mu in partitions_up_to(6):
        assert flow.coefficient(mu) == hook_content_poly(mu)


@pytest.mark.parametrize("mu", [m for m in partitions_up_to(6) if m])
def test_euler_identity(mu):
    assert euler_identity_residual(mu).is_zero()
