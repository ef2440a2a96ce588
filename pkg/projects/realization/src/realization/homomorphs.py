"""Diagrams with a prescribed homomorphism onto a finite group.

Given images mu_1..mu_n and nu with mu_{j+1} = mu_j^{w_j}, the chain of the
w_j is realized and the homomorphism sends every realized generator through
its origin word. Longitude images of such homomorphisms multiply under
connected sum and invert under reversal.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

from core_words import Word, WordContext
from diagrams import connected_sum, reverse
from presentations import (
    arc_labels,
    diagram_context,
    evaluate_word,
    presentation_of_diagram,
)

from realization.chains import CyclicPresentation, RealizationError
from realization.construct import RealizationResult, realize
from realization.peripheral import meridian_longitude
from realization.realizable import to_realizable

if TYPE_CHECKING:
    from collections.abc import Mapping, Sequence

    from core_words import Generator
    from diagrams import MarkedGaussDiagram
    from presentations import FiniteGroup

logger = logging.getLogger(__name__)

type Images = dict[Generator, int]


class HomomorphError(RealizationError):
    """Generator images do not define a homomorphism."""


@dataclass(frozen=True)
class Homomorph:
    """A realized diagram with the homomorphism of its group, if a target was given."""

    result: RealizationResult
    images: Images | None = None
    longitude: int | None = None

    @property
    def diagram(self) -> MarkedGaussDiagram:
        """Return the realized diagram."""
        return self.result.diagram


def relator_failures(
    d: MarkedGaussDiagram,
    images: Mapping[Generator, int],
    group: FiniteGroup,
) -> list[Word]:
    """Return the relators of the diagram group not sent to the identity."""
    p = presentation_of_diagram(d)
    return [
        relator
        for relator in p.relators
        if evaluate_word(relator, dict(images), group) != group.identity
    ]


def _check(
    d: MarkedGaussDiagram, images: Mapping[Generator, int], group: FiniteGroup
) -> None:
    failures = relator_failures(d, images, group)
    if failures:
        msg = f"Relators {', '.join(map(str, failures))} do not map to the identity"
        raise HomomorphError(msg)


def longitude_image(
    d: MarkedGaussDiagram,
    images: Mapping[Generator, int],
    group: FiniteGroup,
    arc_index: int = 0,
) -> int:
    """Return the image of the longitude based on an arc of the first circle."""
    longitude = meridian_longitude(d, arc_index).longitude
    return evaluate_word(longitude, dict(images), group)


def realize_homomorph(
    conjugators: Sequence[Word],
    group: FiniteGroup | None = None,
    images: Mapping[Generator, int] | None = None,
) -> Homomorph:
    """Realize the chain mu_{j+1} = mu_j^{w_j} and carry images to the diagram.

    The conjugators are words over x1..xn (standing for mu_1..mu_n) and v1
    (for nu). With a group and images of x1..xn, v1, the images of all
    realized generators are computed from their origins and every relator is
    checked to map to the identity.
    """
    if not conjugators:
        msg = "At least one conjugator is needed"
        raise HomomorphError(msg)
    ctx = WordContext(len(conjugators), 1)
    if any(w.context != ctx for w in conjugators):
        msg = f"Conjugators must be words over {' '.join(map(str, ctx.generators()))}"
        raise HomomorphError(msg)
    realizable = to_realizable(CyclicPresentation(ctx, tuple(conjugators)))
    diagram = realize(realizable)
    result = RealizationResult(diagram, realizable, realizable.origin_map())
    if group is None or images is None:
        return Homomorph(result)
    missing = set(ctx.generators()) - set(images)
    if missing:
        msg = f"No image for {', '.join(sorted(map(str, missing)))}"
        raise HomomorphError(msg)
    realized = {
        gen: evaluate_word(word, dict(images), group)
        for gen, word in result.origin.items()
    }
    _check(diagram, realized, group)
    logger.debug(
        "Homomorphism onto %s verified on %d relators", group.name, len(realized) - 1
    )
    return Homomorph(result, realized, longitude_image(diagram, realized, group))


def reversed_images(d: MarkedGaussDiagram, images: Mapping[Generator, int]) -> Images:
    """Carry an assignment for the group of d to the group of reverse(d).

    Reversal keeps every arc as a segment: arc i of a reversed circle with n
    events is arc (n - i) mod n of the original. Circle generators keep their
    images.
    """
    ctx = diagram_context(d)
    result: Images = {ctx.v(c + 1): images[ctx.v(c + 1)] for c in range(len(d.circles))}
    for arcs in arc_labels(d):
        n = len(arcs)
        for i, label in enumerate(arcs):
            result[ctx.x(label)] = images[ctx.x(arcs[(n - i) % n])]
    return result


def connected_sum_images(
    d1: MarkedGaussDiagram,
    images1: Mapping[Generator, int],
    d2: MarkedGaussDiagram,
    images2: Mapping[Generator, int],
) -> Images:
    """Combine assignments of two 1-circle diagrams for their sum at both base points.

    The sum is connected_sum(d1, 0, 0, d2, 0, 0); the arcs ending at events
    of d1 keep their images under images1, the others take those of images2.
    Both assignments must agree on x1 and v1.
    """
    if len(d1.circles) != 1 or len(d2.circles) != 1:
        msg = "Connected sums of assignments need 1-circle diagrams"
        raise HomomorphError(msg)
    ctx1, ctx2 = diagram_context(d1), diagram_context(d2)
    for gen in (ctx1.x(1), ctx1.v(1)):
        if images1[gen] != images2[gen]:
            msg = f"The assignments send {gen} to different elements"
            raise HomomorphError(msg)
    total = connected_sum(d1, 0, 0, d2, 0, 0)
    ctx = diagram_context(total)
    first = len(d1.circles[0])
    result: Images = {ctx.v(1): images1[ctx1.v(1)]}
    for i in range(ctx.x_count):
        if i < first:
            result[ctx.x(i + 1)] = images1[ctx1.x(i + 1)]
        else:
            result[ctx.x(i + 1)] = images2[ctx2.x(i - first + 1)]
    return result


def reverse_homomorph(
    d: MarkedGaussDiagram,
    images: Mapping[Generator, int],
    group: FiniteGroup,
) -> tuple[MarkedGaussDiagram, Images]:
    """Return reverse(d) with its carried assignment, checked to be a homomorphism."""
    reversed_d = reverse(d)
    carried = reversed_images(d, images)
    _check(reversed_d, carried, group)
    return reversed_d, carried


def sum_homomorph(
    d1: MarkedGaussDiagram,
    images1: Mapping[Generator, int],
    d2: MarkedGaussDiagram,
    images2: Mapping[Generator, int],
    group: FiniteGroup,
) -> tuple[MarkedGaussDiagram, Images]:
    """Return the connected sum with both assignments combined and checked."""
    total = connected_sum(d1, 0, 0, d2, 0, 0)
    combined = connected_sum_images(d1, images1, d2, images2)
    _check(total, combined, group)
    return total, combined
