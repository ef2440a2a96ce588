"""Presentations attached to marked Gauss diagrams and to virtual braids."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

from braid_reps import braid_image
from core_words import Word, WordContext, apply, conjugate
from diagrams import Head, Node, Tail

from presentations.presentation import Presentation, conjugation_relator

if TYPE_CHECKING:
    from braid_reps import BraidWord, RepresentationSpec
    from diagrams import Event, MarkedGaussDiagram

logger = logging.getLogger(__name__)

type ArcLabels = tuple[tuple[int, ...], ...]


def arc_labels(d: MarkedGaussDiagram) -> ArcLabels:
    """Number the arcs of every circle consecutively from x1.

    Arc i of a circle is the segment ending at event i; an event-free circle
    has a single arc.
    """
    labels: list[tuple[int, ...]] = []
    start = 1
    for circle in d.circles:
        count = max(len(circle), 1)
        labels.append(tuple(range(start, start + count)))
        start += count
    return tuple(labels)


def diagram_context(d: MarkedGaussDiagram) -> WordContext:
    """Return the context with one x per arc and one v per circle."""
    return WordContext(sum(max(len(circle), 1) for circle in d.circles), len(d.circles))


def event_conjugator(
    d: MarkedGaussDiagram,
    labels: ArcLabels,
    circle: int,
    event: Event,
) -> Word:
    """Return the word w with next arc = arc^w when passing an event on a circle."""
    ctx = diagram_context(d)
    v_here = Word.of(ctx, ctx.v(circle + 1))
    match event:
        case Node(sign):
            return v_here ** sign
        case Tail(arrow):
            entry = d.arrows[arrow]
            return Word.of(ctx, ctx.v(entry.head_circle + 1)) ** entry.sign
        case Head(arrow):
            entry = d.arrows[arrow]
            (tail_circle, tail_position), _ = d.locate(arrow)
            v_tail = Word.of(ctx, ctx.v(tail_circle + 1))
            before_tail = Word.of(ctx, ctx.x(labels[tail_circle][tail_position]))
            if entry.sign == 1:
                inner = conjugate(before_tail, v_here * v_tail.inverse())
                return v_tail.inverse() * inner
            return v_tail * before_tail.inverse()


def presentation_of_diagram(d: MarkedGaussDiagram) -> Presentation:
    """Return the group presentation of a marked Gauss diagram.

    One relator next = arc^w per event, with w given by event_conjugator.
    """
    ctx = diagram_context(d)
    labels = arc_labels(d)
    relators: list[Word] = []
    for c, circle in enumerate(d.circles):
        arcs = labels[c]
        for i, event in enumerate(circle):
            here = Word.of(ctx, ctx.x(arcs[i]))
            after = Word.of(ctx, ctx.x(arcs[(i + 1) % len(arcs)]))
            relators.append(
                conjugation_relator(after, here, event_conjugator(d, labels, c, event))
            )
    logger.debug(
        "Presentation of diagram: %d arcs, %d circles", ctx.x_count, ctx.v_count
    )
    return Presentation(ctx, tuple(relators))


def group_of_braid(spec: RepresentationSpec, braid: BraidWord) -> Presentation:
    """Return <generators | g^-1 * phi(braid)(g)> for every generator g."""
    image = braid_image(spec, braid)
    relators = tuple(
        Word.of(spec.context, gen).inverse() * apply(image, Word.of(spec.context, gen))
        for gen in spec.context.generators()
    )
    return Presentation(spec.context, relators)
