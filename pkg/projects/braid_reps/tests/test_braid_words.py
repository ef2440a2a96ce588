"""Tests for braid words and the VB_n relation list."""

import pytest

from braid_reps import (
    BraidError,
    BraidParseError,
    RelationError,
    braid,
    parse_braid,
    rho,
    sigma,
    vbn_relations,
)


def test_parse_braid_letters() -> None:
    assert parse_braid("s1 s1^-1", 2).letters == (sigma(1), sigma(1, -1))
    assert parse_braid("r1 r2 r1", 3).letters == (rho(1), rho(2), rho(1))
    assert parse_braid("", 4).letters == ()


def test_rho_inverse_folds_to_rho() -> None:
    assert parse_braid("r1^-1", 2).letters == (rho(1),)


@pytest.mark.parametrize("text", ["s3", "s0", "t1", "s1^2", "r"])
def test_parse_braid_rejects(text: str) -> None:
    with pytest.raises(BraidParseError):
        parse_braid(text, 3)


def test_parse_braid_rejects_zero_strands() -> None:
    with pytest.raises(BraidParseError):
        parse_braid("", 0)


def test_braid_format_and_inverse() -> None:
    word = parse_braid("s1 r2 s2^-1", 3)
    assert str(word) == "s1 r2 s2^-1"
    assert str(word.inverse()) == "s2 r2 s1^-1"
    assert len(word**2) == 6
    assert (word * word.inverse()).strand_count == 3


def test_concatenation_needs_equal_strands() -> None:
    with pytest.raises(BraidError):
        _ = braid(2, sigma(1)) * braid(3, sigma(2))


def test_two_strands_have_one_relation() -> None:
    relations = vbn_relations(2)
    assert len(relations) == 1
    assert relations[0].lhs == braid(2, rho(1), rho(1))
    assert relations[0].rhs == braid(2)


def test_three_strand_relations() -> None:
    pairs = {(rel.lhs, rel.rhs) for rel in vbn_relations(3)}
    s, r = sigma, rho
    assert (braid(3, s(1), s(2), s(1)), braid(3, s(2), s(1), s(2))) in pairs
    assert (braid(3, r(1), r(2), s(1)), braid(3, s(2), r(1), r(2))) in pairs


def test_far_commutation_appears_from_four_strands() -> None:
    names = {rel.name for rel in vbn_relations(4)}
    assert {"far-sigma(1,3)", "far-rho(1,3)", "far-mixed(1,3)"} <= names
    assert "far-mixed(3,1)" in names
    assert not any(rel.name.startswith("far") for rel in vbn_relations(3))


def test_relations_need_two_strands() -> None:
    with pytest.raises(RelationError):
        vbn_relations(1)
