"""Realizing random C_1-presentations keeps their group."""

from dataclasses import replace

from hypothesis import given, settings
from hypothesis import strategies as st

from core_words import Word, WordContext
from presentations import (
    ConjugationRelation,
    Presentation,
    abelianization,
    evaluate_word,
    hom_count,
    iter_homomorphisms,
    presentation_of_diagram,
    simplify,
    symmetric_group,
)
from realization import (
    check_peripheral,
    meridian_longitude,
    realize_presentation,
    relator_failures,
)
from strategies import signs

S3 = symmetric_group(3)


@st.composite
def conjugators(draw: st.DrawFn, ctx: WordContext) -> Word:
    """Words of up to three letters over every generator of the context."""
    names = [str(gen) for gen in ctx.generators()]
    letters = draw(st.lists(st.tuples(st.sampled_from(names), signs), max_size=3))
    text = " ".join(name if sign == 1 else f"{name}^-1" for name, sign in letters)
    return Word.parse(text or "1", ctx)


@st.composite
def c1_presentations(draw: st.DrawFn, max_x: int = 4) -> Presentation:
    """A random spanning tree of conjugation relations, maybe with one extra edge."""
    n = draw(st.integers(1, max_x))
    ctx = WordContext(n, 1)
    order = draw(st.permutations(range(1, n + 1)))
    edges = [(order[draw(st.integers(0, k - 1))], order[k]) for k in range(1, n)]
    relations = [
        ConjugationRelation(ctx.x(a), ctx.x(b), draw(conjugators(ctx)))
        if draw(st.booleans())
        else ConjugationRelation(ctx.x(b), ctx.x(a), draw(conjugators(ctx)))
        for a, b in edges
    ]
    if draw(st.booleans()):
        a, b = draw(st.integers(1, n)), draw(st.integers(1, n))
        extra = ConjugationRelation(ctx.x(a), ctx.x(b), draw(conjugators(ctx)))
        if not extra.relator().syllables:
            # x_a = x_a^w with w a power of x_a
            v = Word.of(ctx, ctx.v(1))
            extra = replace(extra, conjugator=extra.conjugator * v)
        relations.append(extra)
    relators = draw(st.permutations([relation.relator() for relation in relations]))
    return Presentation(ctx, tuple(relators))


@given(c1_presentations())
@settings(max_examples=100, deadline=None)
def test_pipeline_keeps_the_group(p: Presentation) -> None:
    result = realize_presentation(p)
    d = result.diagram
    realized = presentation_of_diagram(d)
    assert len(d.circles) == 1
    assert realized == result.realizable.presentation()
    assert abelianization(realized) == abelianization(p)
    assert hom_count(simplify(realized), S3) == hom_count(p, S3)
    for hom in iter_homomorphisms(p, S3, up_to_conjugacy=True):
        images = {
            gen: evaluate_word(word, hom, S3) for gen, word in result.origin.items()
        }
        assert relator_failures(d, images, S3) == []
    assert check_peripheral(realized, meridian_longitude(d), ("s3",)).passed
