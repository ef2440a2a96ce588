"""Tests for diagram and braid presentations, abelianization, Tietze and C_m checks."""

import pytest
from hypothesis import given, settings

from braid_reps import braid, get_representation, sigma
from core_words import Word, WordContext, substitute
from diagrams import MarkedGaussDiagram, parse_gauss_code
from presentations import (
    Presentation,
    PresentationError,
    abelianization,
    as_conjugation,
    classify_cm,
    format_presentation,
    group_of_braid,
    parse_presentation,
    presentation_of_diagram,
    simplify,
    simplify_with_map,
)
from strategies import marked_diagrams

D1 = "circle 1: N-"
CHORD = "circle 1: T1+ H1+"


def of(text: str) -> Presentation:
    return presentation_of_diagram(parse_gauss_code(text))


def test_single_negative_node() -> None:
    assert format_presentation(of(D1)) == "gens: x1 v1\nrel: x1^-1 v1 x1 v1^-1"


def test_event_free_circle_is_free() -> None:
    trivial = MarkedGaussDiagram.trivial()
    assert presentation_of_diagram(trivial) == Presentation.free(1, 1)


def test_positive_chord_relators() -> None:
    assert [str(relator) for relator in of(CHORD).relators] == [
        "x2^-1 v1^-1 x1 v1",
        "x1^-2 v1 x2 v1^-1 x1",
    ]


def test_negative_head_uses_inverse_arc() -> None:
    p = of("circle 1: T1- H1-")
    assert [str(relator) for relator in p.relators] == [
        "x2^-1 v1 x1 v1^-1",
        "v1^-1 x2 v1 x1^-1",
    ]
    relation = as_conjugation(p.relators[1])
    assert relation is not None
    assert str(relation) == "x1 = x2^(v1)"


def test_trivial_v_gives_wirtinger_relations() -> None:
    p = of(CHORD)
    ctx = p.context
    kill_v = {ctx.v(1): Word.identity(ctx)}
    assert [str(substitute(relator, kill_v, ctx)) for relator in p.relators] == [
        "x2^-1 x1",
        "x1^-2 x2 x1",
    ]


def test_two_circle_head_conjugator() -> None:
    p = of("circle 1: H1+\ncircle 2: T1+")
    # head on circle 1, tail on circle 2: x1 = x1^(v1^-1 x2 v1 v2^-1)
    assert str(p.relators[0]) == "x1^-1 v1^-1 v2 x2^-1 v1 x1 v1^-1 x2 v1 v2^-1"
    assert str(p.relators[1]) == "x2^-1 v1^-1 x2 v1"


def test_text_round_trip() -> None:
    p = of(CHORD)
    assert parse_presentation(format_presentation(p)) == p
    text = "# comment\ngens: v1 x1\n\nrel: x1^-1 v1 x1 v1^-1"
    assert parse_presentation(text) == of(D1)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "rel: x1",
        "gens: x1 x3 v1",
        "gens: x1 x1",
        "gens: x1 y1",
        "gens: x1 v1\nrel: x2",
        "gens: x1 v1\nrelator: x1",
    ],
)
def test_parse_rejects(text: str) -> None:
    with pytest.raises(PresentationError):
        parse_presentation(text)


def test_relators_must_share_context() -> None:
    with pytest.raises(PresentationError):
        Presentation(WordContext(1, 1), (Word.parse("x2", WordContext(2, 1)),))


def test_deficiency_counts_v_commutators() -> None:
    ctx = WordContext(2, 1)
    assert Presentation(ctx, (Word.parse("x2^-1 v1^-1 x1 v1", ctx),)).deficiency == 2
    assert Presentation.free(1, 3).deficiency == 1


def test_abelianization_examples() -> None:
    assert abelianization(of(D1)) == (2, [])
    assert str(abelianization(of(D1))) == "free_rank=2 torsion=[]"
    one = WordContext(1, 0)
    assert abelianization(Presentation(one, (Word.parse("x1^2", one),))) == (0, [2])
    two = WordContext(2, 0)
    p = Presentation(two, (Word.parse("x1^2 x2^4", two), Word.parse("x1^4 x2^2", two)))
    assert abelianization(p) == (0, [2, 6])


@given(marked_diagrams())
@settings(max_examples=100, deadline=None)
def test_diagram_groups_have_free_abelianization(d: MarkedGaussDiagram) -> None:
    assert abelianization(presentation_of_diagram(d)) == (2 * len(d.circles), [])


def test_simplify_eliminates_conjugate() -> None:
    ctx = WordContext(2, 1)
    p = Presentation(ctx, (Word.parse("x2^-1 v1^-1 x1 v1", ctx),))
    result = simplify_with_map(p)
    assert result.presentation == Presentation.free(1, 1)
    assert str(result.images[ctx.x(2)]) == "v1^-1 x1 v1"
    assert str(result.images[ctx.x(1)]) == "x1"


def test_simplify_drops_trivial_relators() -> None:
    ctx = WordContext(1, 0)
    p = Presentation(ctx, (Word.parse("x1 x1^-1", ctx),))
    assert simplify(p) == Presentation.free(1, 0)


def test_simplify_keeps_single_node() -> None:
    assert simplify(of(D1)) == of(D1)


def test_simplify_removes_curl() -> None:
    assert simplify(of(CHORD)) == Presentation.free(1, 1)


@given(marked_diagrams())
@settings(max_examples=60, deadline=None)
def test_simplify_is_idempotent_and_keeps_abelianization(d: MarkedGaussDiagram) -> None:
    p = presentation_of_diagram(d)
    once = simplify(p)
    assert simplify(once) == once
    assert abelianization(once) == abelianization(p)


def test_classify_single_node() -> None:
    report = classify_cm(of(D1))
    assert report.is_cm
    assert report.m == 1
    assert report.components == 1
    assert report.is_m_irreducible
    assert report.deficiency == 1
    relation = report.relations[0]
    assert relation is not None
    assert (str(relation.source), str(relation.target), str(relation.conjugator)) == (
        "x1",
        "x1",
        "v1^-1",
    )


def test_classify_examples() -> None:
    ctx = WordContext(2, 1)
    report = classify_cm(Presentation(ctx, (Word.parse("x2^-1 v1^-1 x1 v1", ctx),)))
    assert report.is_cm
    assert report.deficiency == 2
    assert report.graph.number_of_edges() == 1
    square = WordContext(1, 1)
    assert not classify_cm(Presentation(square, (Word.parse("x1^2", square),))).is_cm


def test_conjugation_read_from_rotation() -> None:
    ctx = WordContext(2, 1)
    relation = as_conjugation(Word.parse("v1^-1 x1 v1 x2^-1", ctx))
    assert relation is not None
    assert str(relation) == "x2 = x1^(v1)"


@given(marked_diagrams(max_circles=1))
@settings(max_examples=100, deadline=None)
def test_one_circle_groups_are_irreducible_c1(d: MarkedGaussDiagram) -> None:
    p = presentation_of_diagram(d)
    report = classify_cm(p)
    assert report.is_cm
    assert report.m == 1
    assert report.components == 1
    assert report.is_m_irreducible
    assert classify_cm(simplify(p)).deficiency in {1, 2}


def test_group_of_trivial_braid_on_one_strand() -> None:
    spec = get_representation("phiS", n=1)
    p = group_of_braid(spec, braid(1))
    assert simplify(p) == Presentation.free(1, 1)


def test_group_of_single_crossing() -> None:
    spec = get_representation("phiS", n=2)
    p = group_of_braid(spec, braid(2, sigma(1)))
    assert len(p.relators) == len(p.generators())
    assert abelianization(p) == (2, [])
