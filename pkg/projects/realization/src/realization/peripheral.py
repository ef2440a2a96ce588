"""Meridians, longitudes and peripheral pairs of marked Gauss diagrams.

Walking a circle from a base point, every event contributes the conjugator
of its relator; the longitude is their product times m^-alpha, where alpha
is the sign sum of the arrows with their head on that circle. The meridian
commutes with its longitude, which is checked syntactically from the
relators and in finite quotients.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Final

import networkx as nx

from core_words import Kind, Word, WordContext, conjugate, substitute
from presentations import (
    SEARCH_LIMIT,
    ConjugationRelation,
    arc_labels,
    conjugation_relator,
    diagram_context,
    evaluate_word,
    event_conjugator,
    iter_homomorphisms,
    named_group,
    simplify_with_map,
)

from realization.chains import CyclicPresentation, RealizationError
from realization.construct import RealizationResult, realize
from realization.cyclic import Chain, check_c1
from realization.realizable import to_realizable

if TYPE_CHECKING:
    from collections.abc import Sequence

    from core_words import Generator
    from diagrams import MarkedGaussDiagram
    from presentations import CmReport, Presentation

logger = logging.getLogger(__name__)

PERIPHERAL_QUOTIENTS: Final = ("s3", "s4", "s5")


class PeripheralHypothesisError(RealizationError):
    """A longitude fails the hypotheses needed to realize it."""


@dataclass(frozen=True)
class PeripheralPair:
    """A meridian generator and its longitude.

    Pairs read off a diagram also carry the arcs passed on the way round
    (ending back at the meridian), the conjugator of every event and alpha.
    """

    meridian: Word
    longitude: Word
    alpha: int = 0
    path: tuple[Generator, ...] = field(default=(), compare=False)
    conjugators: tuple[Word, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        """Check the meridian is a single x-generator in the longitude's context."""
        match self.meridian.syllables:
            case ((gen, 1),) if gen.kind is Kind.X:
                pass
            case _:
                msg = f"Meridian must be a single x-generator, got {self.meridian}"
                raise RealizationError(msg)
        if self.meridian.context != self.longitude.context:
            msg = "Meridian and longitude live in different contexts"
            raise RealizationError(msg)

    @property
    def generator(self) -> Generator:
        """Return the meridian generator."""
        return self.meridian.syllables[0][0]

    def __str__(self) -> str:
        """Render as meridian=..., longitude=..., alpha=..."""
        return f"meridian={self.meridian} longitude={self.longitude} alpha={self.alpha}"


def meridian_longitude(
    d: MarkedGaussDiagram,
    arc_index: int = 0,
    circle: int = 0,
) -> PeripheralPair:
    """Return the peripheral pair based on an arc of a circle (both 0-based)."""
    if not 0 <= circle < len(d.circles):
        msg = f"Diagram has no circle {circle + 1}"
        raise RealizationError(msg)
    events = d.circles[circle]
    arcs = arc_labels(d)[circle]
    if not 0 <= arc_index < len(arcs):
        msg = f"Circle {circle + 1} has no arc {arc_index}"
        raise RealizationError(msg)
    ctx = diagram_context(d)
    labels = arc_labels(d)
    order = [(arc_index + t) % len(events) for t in range(len(events))]
    conjugators = tuple(event_conjugator(d, labels, circle, events[i]) for i in order)
    path = tuple(
        ctx.x(arcs[(arc_index + t) % len(arcs)]) for t in range(len(events) + 1)
    )
    alpha = sum(
        arrow.sign for arrow in d.arrows.values() if arrow.head_circle == circle
    )
    meridian = Word.of(ctx, path[0])
    longitude = Word.identity(ctx)
    for conjugator in conjugators:
        longitude *= conjugator
    return PeripheralPair(
        meridian, longitude * meridian**-alpha, alpha, path, conjugators
    )


def peripheral_pairs(d: MarkedGaussDiagram) -> tuple[PeripheralPair, ...]:
    """Return the pair based on the first arc of every circle."""
    return tuple(meridian_longitude(d, 0, c) for c in range(len(d.circles)))


@dataclass(frozen=True)
class PeripheralReport:
    """Outcome of check_peripheral.

    derivation is None when the pair carries no path to derive from.
    """

    derivation: bool | None
    commutes: dict[str, bool]

    @property
    def passed(self) -> bool:
        """Return whether no check failed."""
        return self.derivation is not False and all(self.commutes.values())


def _derivation(p: Presentation, pair: PeripheralPair) -> bool | None:
    """Check m^(w_1 ... w_n) -> m step by step with relators of p."""
    if not pair.path:
        return None
    ctx = p.context
    relators = set(p.relators)
    for before, after, conjugator in zip(
        pair.path[:-1], pair.path[1:], pair.conjugators, strict=True
    ):
        step = conjugation_relator(
            Word.of(ctx, after), Word.of(ctx, before), conjugator
        )
        if step not in relators:
            logger.debug("No relator for %s = %s^(%s)", after, before, conjugator)
            return False
    product = Word.identity(ctx)
    for conjugator in pair.conjugators:
        product *= conjugator
    return pair.path[-1] == pair.generator and (
        pair.longitude == product * pair.meridian**-pair.alpha
    )


def commutes_in_quotients(
    p: Presentation,
    a: Word,
    b: Word,
    quotients: Sequence[str] = PERIPHERAL_QUOTIENTS,
    *,
    limit: int = SEARCH_LIMIT,
) -> dict[str, bool]:
    """Return, per named group, whether a and b commute under every homomorphism."""
    for word in (a, b):
        if word.context != p.context:
            msg = f"Word {word} does not live in the presentation context"
            raise RealizationError(msg)
    simplification = simplify_with_map(p)
    result: dict[str, bool] = {}
    for name in quotients:
        group = named_group(name)
        result[name] = True
        for hom in iter_homomorphisms(
            simplification.presentation, group, limit=limit, up_to_conjugacy=True
        ):
            images = {
                gen: evaluate_word(word, hom, group)
                for gen, word in simplification.images.items()
            }
            if not group.commute(
                evaluate_word(a, images, group), evaluate_word(b, images, group)
            ):
                result[name] = False
                break
    return result


def check_peripheral(
    p: Presentation,
    pair: PeripheralPair,
    quotients: Sequence[str] = PERIPHERAL_QUOTIENTS,
    *,
    limit: int = SEARCH_LIMIT,
) -> PeripheralReport:
    """Check that the pair commutes, from the relators and in finite quotients."""
    if pair.meridian.context != p.context:
        msg = "Peripheral pair does not live in the presentation context"
        raise RealizationError(msg)
    return PeripheralReport(
        _derivation(p, pair),
        commutes_in_quotients(p, pair.meridian, pair.longitude, quotients, limit=limit),
    )


def _check_exponents(report: CmReport, longitude: Word) -> None:
    """The longitude must vanish in the abelianization of G / <<v>>."""
    sums = longitude.exponent_sums()
    for component in nx.connected_components(report.graph):
        total = sum(sums.get(gen, 0) for gen in component)
        if total:
            names = " ".join(sorted(map(str, component)))
            msg = f"Longitude {longitude} has x-exponent sum {total} on {names}"
            raise PeripheralHypothesisError(msg)


def realize_with_peripheral(
    p: Presentation,
    x0_conjugator: Word,
    longitude: Word,
    quotients: Sequence[str] = PERIPHERAL_QUOTIENTS,
    *,
    limit: int = SEARCH_LIMIT,
) -> tuple[RealizationResult, PeripheralPair]:
    """Realize a deficiency-2 C_1-presentation with peripheral pair (x1^c, longitude).

    c is x0_conjugator. The chain starts at a new generator x0 = x1^c, runs
    through all others, and closes back to x0 with the conjugator
    (w_0 ... w_{n-1})^-1 * longitude, which is redundant when the longitude
    commutes with x0. That commutation is only checked in finite quotients.
    The returned pair lives in the realized diagram; its origin images are
    x1^c and the longitude.
    """
    report = check_c1(p, frozenset({2}))
    ctx = p.context
    for word in (x0_conjugator, longitude):
        if word.context != ctx:
            msg = f"Word {word} does not live in the presentation context"
            raise RealizationError(msg)
    _check_exponents(report, longitude)
    x0 = conjugate(Word.of(ctx, ctx.x(1)), x0_conjugator)
    failed = [
        name
        for name, ok in commutes_in_quotients(
            p, x0, longitude, quotients, limit=limit
        ).items()
        if not ok
    ]
    if failed:
        msg = f"Longitude {longitude} does not commute with {x0} in {', '.join(failed)}"
        raise PeripheralHypothesisError(msg)
    logger.warning(
        "Commutation of %s with %s is only verified in %s",
        longitude,
        x0,
        ", ".join(quotients),
    )
    wide = WordContext(ctx.x_count + 1, 1)
    start = wide.x(ctx.x_count + 1)

    def lift(word: Word) -> Word:
        return substitute(word, {}, wide)

    relations = [ConjugationRelation(start, wide.x(1), lift(x0_conjugator).inverse())]
    relations.extend(
        ConjugationRelation(r.source, r.target, lift(r.conjugator))
        for r in report.relations
        if r is not None
    )
    chain = Chain([start], [], closed=False)
    chain.grow(relations)
    product = Word.identity(wide)
    for link in chain.links:
        product *= link
    chain.links.append(product.inverse() * lift(longitude))
    chain.closed = True
    cyclic = chain.renumbered(wide)
    back = {start: x0}
    origin = {
        gen: substitute(word, back, ctx) for gen, word in cyclic.origin_map().items()
    }
    realizable = to_realizable(
        CyclicPresentation(cyclic.context, cyclic.conjugators, origin)
    )
    diagram = realize(realizable)
    result = RealizationResult(diagram, realizable, realizable.origin_map())
    return result, meridian_longitude(diagram)
