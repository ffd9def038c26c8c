from fractions import Fraction
from math import comb

import pytest

from shared.cutjoin import z_direct
from shared.errors import ContractViolation, SizeLimitError
from shared.hurwitz import connected_series
from shared.kp import (
    LITERAL,
    affine_coords,
    affine_entry,
    affine_from_schur,
    one_point_closed,
    schur_coefficient_from_affine,
    two_point_closed,
    zhou_npoint,
)
from shared.partitions import Partition, partitions_up_to, z_factor
from shared.vpoly import VPoly, elementary_symmetric

P = Partition.of


def nonempty_up_to(W):
    return [mu for mu in partitions_up_to(W) if mu]


# ─────────────────────────────────────────────────────────
# AFFINE COORDINATES
# ─────────────────────────────────────────────────────────

def test_first_affine_entries():
    v1, v2 = VPoly.variable(0, 2), VPoly.variable(1, 2)
    assert affine_entry(2, 0, 0) == v1 * v2
    # a_{1,0} = -1/2 prod (v_i - 1) v_i
    assert affine_entry(2, 1, 0) == ((v1 - 1) * v1 * (v2 - 1) * v2).scale(Fraction(-1, 2))


def test_affine_truncation():
    am = affine_coords(2, 3)
    assert len(am.entries) == 1 + 2 + 3
    with pytest.raises(SizeLimitError):
        am.entry(2, 1)
    with pytest.raises(ContractViolation):
        affine_coords(2, 0)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_schur_determinants_match_direct_expansion(r):
    am = affine_coords(r, 5)
    direct = z_direct(r, 5)
    for mu in partitions_up_to(5):
        assert schur_coefficient_from_affine(mu, am) == direct.coefficient(mu)


@pytest.mark.parametrize("r", [1, 2])
def test_affine_coordinates_read_back(r):
    assert affine_from_schur(z_direct(r, 5)) == affine_coords(r, 5)


# ─────────────────────────────────────────────────────────
# CYCLE FORMULA VS LOG Z
# ─────────────────────────────────────────────────────────

@pytest.mark.parametrize("r", [1, 2, 3])
def test_zhou_matches_log(r):
    am = affine_coords(r, 5)
    log = connected_series(r, 5)
    for mu in nonempty_up_to(5):
        assert zhou_npoint(mu, am) == log.coefficient(mu)


@pytest.mark.slow
@pytest.mark.parametrize("r", [1, 2, 3])
def test_zhou_matches_log_weight_6(r, cache):
    am = affine_coords(r, 6)
    log = connected_series(r, 6, cache)
    for mu in nonempty_up_to(6):
        if mu.size == 6:
            assert zhou_npoint(mu, am, jobs=2) == log.coefficient(mu)


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_one_part_of_size_one(r):
    assert zhou_npoint(P(1), affine_coords(r, 1)) == elementary_symmetric(r, r)


def test_two_ones():
    v1, v2 = VPoly.variable(0, 2), VPoly.variable(1, 2)
    assert zhou_npoint(P(1, 1), affine_coords(2, 2)) == (v1 * v2).scale(Fraction(1, 2))


def test_literal_closure_disagrees():
    for r in (1, 2):
        am = affine_coords(r, 2)
        assert zhou_npoint(P(1, 1), am, LITERAL) != zhou_npoint(P(1, 1), am)


def test_zhou_argument_checks():
    am = affine_coords(2, 3)
    with pytest.raises(ContractViolation):
        zhou_npoint(Partition(), am)
    with pytest.raises(SizeLimitError):
        zhou_npoint(P(2, 2), am)
    with pytest.raises(ContractViolation):
        zhou_npoint(P(2), am, closure="other")


# ─────────────────────────────────────────────────────────
# CLOSED FORMS
# ─────────────────────────────────────────────────────────

@pytest.mark.parametrize("r", [1, 2, 3])
def test_closed_forms_match_log(r):
    log = connected_series(r, 6)
    for n in range(1, 7):
        assert one_point_closed(n, r) == log.coefficient(P(n))
    for n1 in range(1, 6):
        for n2 in range(1, n1 + 1):
            if n1 + n2 <= 6:
                assert two_point_closed(n1, n2, r) == log.coefficient(P(n1, n2))


def test_one_point_genus_zero_count():
    for n in range(2, 13):
        assert n * one_point_closed(n, 2).coefficient((n - 1, 2)) == comb(n, 2)
        assert one_point_closed(n, 2).coefficient((n - 1, 1)) == 0


def test_one_point_three_variables():
    for n in range(2, 11):
        value = n * one_point_closed(n, 3).coefficient((n - 1, n - 1, 1))
        assert value == Fraction(n * n * (n - 1) * (n + 1), 12)


def test_two_point_genus_zero_count():
    for n1 in range(1, 8):
        for n2 in range(1, n1 + 1):
            if n1 + n2 > 8:
                continue
            mu = P(n1, n2)
            value = z_factor(mu) * two_point_closed(n1, n2, 2).coefficient((n1 + n2 - 1, 1))
            assert value == n1 * n2


def test_two_point_needs_ordered_parts():
    with pytest.raises(ContractViolation):
        two_point_closed(1, 2, 2)
    with pytest.raises(ContractViolation):
        one_point_closed(0, 2)
