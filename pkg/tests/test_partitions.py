from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings

from conftest import partitions
from shared.errors import ContractViolation
from shared.partitions import (
    EMPTY,
    Box,
    Partition,
    add_box,
    addable_boxes,
    content,
    contents,
    dim_irrep,
    falling_factorial,
    format_partition,
    frobenius,
    from_frobenius,
    hook_length,
    hook_product,
    multiplicities,
    parse_partition,
    partitions_of,
    partitions_up_to,
    remove_box,
    removable_boxes,
    standard_tableaux_count,
    transpose,
    z_factor,
)


@settings(max_examples=80, deadline=None)
@given(partitions(max_n=9))
def test_transpose_is_an_involution(lam):
    assert transpose(transpose(lam)) == lam
    assert transpose(lam).size == lam.size


@settings(max_examples=80, deadline=None)
@given(partitions(max_n=9))
def test_frobenius_reads_back(lam):
    m, n = frobenius(lam)
    assert from_frobenius(m, n) == lam
    assert sum(m) + sum(n) + len(m) == lam.size


@settings(max_examples=60, deadline=None)
@given(partitions(max_n=8))
def test_hook_formula_matches_tableaux(lam):
    assert dim_irrep(lam) == standard_tableaux_count(lam)
    assert dim_irrep(lam) * hook_product(lam) == factorial(lam.size)


@settings(max_examples=60, deadline=None)
@given(partitions(max_n=8))
def test_add_then_remove_box(lam):
    for b in addable_boxes(lam):
        bigger = add_box(lam, b)
        assert bigger.size == lam.size + 1
        assert b in removable_boxes(bigger)
        assert remove_box(bigger, b) == lam


def test_hooks_and_contents_of_2_1():
    lam = Partition.of(2, 1)
    assert hook_length(lam, Box(1, 1)) == 3
    assert hook_product(lam) == 3
    assert sorted(contents(lam)) == [-1, 0, 1]


def test_z_factor():
    assert z_factor(Partition.of(1, 1)) == 2
    assert z_factor(Partition.of(2, 2, 1)) == 8
    assert z_factor(EMPTY) == 1


def test_enumeration_counts_and_order():
    assert [len(partitions_of(d)) for d in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert partitions_of(4) == [Partition.of(4), Partition.of(3, 1), Partition.of(2, 2),
                                Partition.of(2, 1, 1), Partition.of(1, 1, 1, 1)]
    assert partitions_of(5, 2) == [Partition.of(4, 1), Partition.of(3, 2)]
    assert len(partitions_up_to(4)) == 1 + 1 + 2 + 3 + 5
    assert partitions_up_to(3) == sorted(partitions_up_to(3))


def test_text_form():
    assert parse_partition("[2,1]") == Partition.of(2, 1)
    assert parse_partition("3 1 1") == Partition.of(3, 1, 1)
    assert parse_partition("[]") == EMPTY
    assert format_partition(EMPTY) == "[]"
    assert format_partition(Partition.of(3, 1)) == "3,1"


def test_invalid_partitions():
    with pytest.raises(ContractViolation):
        Partition((1, 2))
    with pytest.raises(ContractViolation):
        Partition((2, 0))
    with pytest.raises(ContractViolation):
        parse_partition("2,x")
    assert Partition.from_unsorted([1, 3, 0, 2]) == Partition.of(3, 2, 1)


@pytest.mark.parametrize("d", range(1, 9))
def test_class_sizes_and_dimensions_sum_to_group_order(d):
    parts = partitions_of(d)
    assert sum(dim_irrep(lam) ** 2 for lam in parts) == factorial(d)
    assert sum(Fraction(factorial(d), z_factor(lam)) for lam in parts) == factorial(d)


def test_addable_box_contents_split_by_row():
    for lam in partitions_up_to(10):
        added = addable_boxes(lam)
        assert len(added) == len(removable_boxes(lam)) + 1
        for b in added:
            expected = lam[b.row - 1] + 1 - b.row if b.row <= lam.length else -lam.length
            assert content(add_box(lam, b), b) == expected


def test_addable_contents_of_small_shapes():
    assert [(b, content(add_box(EMPTY, b), b)) for b in addable_boxes(EMPTY)] == [(Box(1, 1), 0)]
    lam = Partition.of(2, 1)
    assert [content(add_box(lam, b), b) for b in addable_boxes(lam)] == [2, 0, -2]


def test_content_of_a_box():
    lam = Partition.of(2, 1)
    assert content(lam, Box(1, 2)) == 1
    assert content(lam, Box(2, 1)) == -1
    with pytest.raises(ContractViolation):
        content(lam, Box(2, 2))


def test_falling_factorial():
    assert falling_factorial(5, 2) == 20
    assert falling_factorial(7, 0) == 1
    assert falling_factorial(2, 4) == 0
    assert falling_factorial(-1, 2) == 2
    with pytest.raises(ContractViolation):
        falling_factorial(3, -1)


def test_multiplicities():
    assert multiplicities(Partition.of(3, 1, 1)) == {3: 1, 1: 2}
    assert multiplicities(EMPTY) == {}
