import pytest

from core.exceptions import ConfigurationError, GroupOverflowError
from services.groups.fin_group import (
    compose,
    cycle_label,
    cyclic_group,
    dihedral_group,
    group_from_generators,
    parse_permutation,
    symmetric_group,
)


def test_symmetric_group_basics(S3):
    assert S3.order == 6
    assert S3.identity == 0
    assert S3.label(S3.identity) == "()"
    assert S3.axioms_hold()
    assert len(S3.conjugacy_classes()) == 3
    assert sorted(c.size for c in S3.conjugacy_classes()) == [1, 2, 3]


def test_labels_round_trip(S3):
    for g in range(S3.order):
        assert S3.element(S3.label(g)) == g


def test_multiplication_composes_right_to_left(S3):
    a, b = S3.element("(1 2)"), S3.element("(2 3)")
    # (1 2)(2 3) applies (2 3) first
    assert S3.label(S3.mul(a, b)) == "(1 2 3)"
    assert S3.mul(a, S3.inv(a)) == S3.identity
    assert S3.conjugate(a, b) == S3.element("(1 3)")


def test_class_sums_are_central(S3):
    assert all(S3.class_sum_is_central(k) for k in range(len(S3.conjugacy_classes())))
    assert S3.class_index(S3.element("(1 2)")) == S3.class_index(S3.element("(1 3)"))


def test_cyclic_group_is_abelian(C4):
    assert C4.order == 4
    assert all(C4.is_central(g) for g in range(C4.order))
    assert len(C4.conjugacy_classes()) == 4


def test_dihedral_group_order():
    assert dihedral_group(4).order == 8
    assert dihedral_group(4).axioms_hold()


def test_trivial_group(trivial):
    assert trivial.order == 1
    assert trivial.generator_ids == []


def test_parse_permutation_formats():
    assert parse_permutation("(1 2 3)", 3) == (1, 2, 0)
    assert parse_permutation([[1, 2, 3]], 3) == (1, 2, 0)
    assert parse_permutation([2, 3, 1], 3) == (1, 2, 0)
    assert parse_permutation("()", 2) == (0, 1)
    assert cycle_label((1, 2, 0)) == "(1 2 3)"
    assert compose((1, 0, 2), (0, 2, 1)) == (1, 2, 0)


def test_parse_permutation_rejects_bad_input():
    with pytest.raises(ConfigurationError):
        parse_permutation([2, 3, 1], 4)


def test_unknown_element_label():
    with pytest.raises(ConfigurationError):
        cyclic_group(3).element("(1 2)")


def test_group_closure_cap():
    with pytest.raises(GroupOverflowError):
        symmetric_group(4, cap=10)
    assert group_from_generators([(1, 0, 2)], 3).order == 2
