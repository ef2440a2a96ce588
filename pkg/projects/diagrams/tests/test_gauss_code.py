"""Tests for the marked Gauss code format, reversal and connected sums."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diagrams import (
    Arrow,
    ConnectedSumError,
    GaussCodeError,
    Head,
    MarkedGaussDiagram,
    Node,
    Tail,
    connected_sum,
    equivalent_up_to_rotation,
    format_gauss_code,
    node_invariants,
    parse_gauss_code,
    reverse,
    rotate,
)
from strategies import marked_diagrams


def test_single_node_circle() -> None:
    d = parse_gauss_code("circle 1: N-")
    assert d.circles == ((Node(-1),),)
    assert d.arrows == {}


def test_empty_circle_is_trivial() -> None:
    assert parse_gauss_code("circle 1:") == MarkedGaussDiagram.trivial()


def test_parse_chord_and_comments() -> None:
    d = parse_gauss_code("# a chord\n\ncircle 1: T1+ N- H1+\ncircle 2:\n")
    assert d.circles == ((Tail(1), Node(-1), Head(1)), ())
    assert d.arrows == {1: Arrow(1, 0, 0)}
    assert d.locate(1) == ((0, 0), (0, 2))


@pytest.mark.parametrize(
    "text",
    [
        "circle 1: T1+ H2+",
        "circle 1: T1+ T1+ H1+",
        "circle 1: T1+ H1-",
        "circle 1: X1+",
        "circle 1: N*",
        "circle 2: N+",
        "circle 1: T0+ H0+",
        "",
        "circle one: N+",
    ],
)
def test_parse_rejects(text: str) -> None:
    with pytest.raises(GaussCodeError):
        parse_gauss_code(text)


def test_table_must_match_events() -> None:
    with pytest.raises(GaussCodeError):
        MarkedGaussDiagram(((Tail(1), Head(1)),), {1: Arrow(1, 0, 1)})
    with pytest.raises(GaussCodeError):
        MarkedGaussDiagram(((Tail(1), Head(1)),))


@pytest.mark.parametrize(
    "text",
    ["circle 1:", "circle 1: T1+ N- H1+", "circle 1: T2- H1+\ncircle 2: N+ H2- T1+"],
)
def test_canonical_text_round_trips(text: str) -> None:
    assert format_gauss_code(parse_gauss_code(text)) == text


@given(marked_diagrams())
@settings(max_examples=100, deadline=None)
def test_format_parse_round_trip(d: MarkedGaussDiagram) -> None:
    assert parse_gauss_code(format_gauss_code(d)) == d


def test_reverse_examples() -> None:
    assert reverse(parse_gauss_code("circle 1: N-")) == parse_gauss_code("circle 1: N+")
    assert reverse(MarkedGaussDiagram.trivial()) == MarkedGaussDiagram.trivial()
    assert format_gauss_code(reverse(parse_gauss_code("circle 1: T1+ N- H1+"))) == (
        "circle 1: H1- N+ T1-"
    )


@given(marked_diagrams())
@settings(max_examples=100, deadline=None)
def test_reverse_is_an_involution(d: MarkedGaussDiagram) -> None:
    assert reverse(reverse(d)) == d


def test_node_invariants() -> None:
    assert node_invariants(parse_gauss_code("circle 1: N-")) == (1, -1, -1)
    assert node_invariants(MarkedGaussDiagram.trivial()) == (0, 0, 1)
    assert node_invariants(parse_gauss_code("circle 1: N+ N-")) == (2, 0, -1)


def test_connected_sum_of_opposite_nodes() -> None:
    plus, minus = parse_gauss_code("circle 1: N+"), parse_gauss_code("circle 1: N-")
    assert connected_sum(plus, 0, 0, minus, 0, 0) == parse_gauss_code("circle 1: N+ N-")


def test_connected_sum_of_trivial_diagrams() -> None:
    t = MarkedGaussDiagram.trivial()
    assert connected_sum(t, 0, 0, t, 0, 0) == t


def test_connected_sum_shifts_ids_and_appends_circles() -> None:
    d1 = parse_gauss_code("circle 1: T1+ H1+")
    d2 = parse_gauss_code("circle 1: T1- N+ H1-\ncircle 2: T2+\ncircle 3: H2+")
    result = connected_sum(d1, 0, 1, d2, 0, 0)
    assert format_gauss_code(result) == (
        "circle 1: H1+ T1+ T2- N+ H2-\ncircle 2: T3+\ncircle 3: H3+"
    )


@given(marked_diagrams(), marked_diagrams(), st.data())
@settings(max_examples=50, deadline=None)
def test_node_count_is_additive(
    d1: MarkedGaussDiagram, d2: MarkedGaussDiagram, data: st.DataObject
) -> None:
    gap1 = data.draw(st.integers(0, len(d1.circles[0])))
    gap2 = data.draw(st.integers(0, len(d2.circles[0])))
    total = connected_sum(d1, 0, gap1, d2, 0, gap2)
    assert node_invariants(total)[0] == node_invariants(d1)[0] + node_invariants(d2)[0]
    assert len(total.circles) == len(d1.circles) + len(d2.circles) - 1


def test_connected_sum_rejects_bad_gaps() -> None:
    d = parse_gauss_code("circle 1: N+")
    with pytest.raises(ConnectedSumError):
        connected_sum(d, 0, 2, d, 0, 0)
    with pytest.raises(ConnectedSumError):
        connected_sum(d, 1, 0, d, 0, 0)


def test_rotation_equivalence() -> None:
    d = parse_gauss_code("circle 1: T1+ N- H1+")
    assert equivalent_up_to_rotation(d, rotate(d, 0, 2))
    assert rotate(d, 0, 3) == d
    assert not equivalent_up_to_rotation(d, reverse(d))
