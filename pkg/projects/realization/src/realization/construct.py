"""Marked Gauss diagrams realizing a realizable chain."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

from diagrams import Arrow, Head, MarkedGaussDiagram, Node, Tail

from realization.chains import RealizablePresentation, link_shape
from realization.cyclic import to_cyclic
from realization.realizable import to_realizable

if TYPE_CHECKING:
    from collections.abc import Mapping

    from core_words import Generator, Word
    from diagrams import Event
    from presentations import Presentation

logger = logging.getLogger(__name__)


def realize(p: RealizablePresentation) -> MarkedGaussDiagram:
    """Return the 1-circle diagram whose presentation is p.

    Arc x_j ends at event j. A conjugator v^-e x_k^e becomes the head of an
    arrow of sign e whose tail is event k; a conjugator v^e that no head
    refers to becomes a node of sign e.
    """
    shapes = [link_shape(w) for w in p.conjugators]
    events: list[Event | None] = [None] * len(shapes)
    arrows: dict[int, Arrow] = {}
    for j, shape in enumerate(shapes):
        if shape is None:
            continue
        sign, k = shape
        if k is not None:
            arrow = len(arrows) + 1
            arrows[arrow] = Arrow(sign, 0, 0)
            events[j] = Head(arrow)
            events[k - 1] = Tail(arrow)
    for j, shape in enumerate(shapes):
        if events[j] is None and shape is not None:
            events[j] = Node(shape[0])
    circle = tuple(event for event in events if event is not None)
    logger.debug(
        "Realized %d arrows and %d nodes", len(arrows), len(circle) - 2 * len(arrows)
    )
    return MarkedGaussDiagram((circle,), arrows)


@dataclass(frozen=True)
class RealizationResult:
    """A realized diagram, the chain it realizes and where its generators came from.

    origin maps every generator of the diagram's presentation to a word of
    the presentation the pipeline started from.
    """

    diagram: MarkedGaussDiagram
    realizable: RealizablePresentation
    origin: Mapping[Generator, Word]


def realize_presentation(p: Presentation) -> RealizationResult:
    """Run to_cyclic, to_realizable and realize on a 1-irreducible C_1-presentation."""
    realizable = to_realizable(to_cyclic(p))
    return RealizationResult(realize(realizable), realizable, realizable.origin_map())
