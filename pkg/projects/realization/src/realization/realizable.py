"""Bringing a cyclic chain into realizable shape.

Every conjugator is first split into single letters through fresh
generators; an empty conjugator becomes the letters v, v^-1. Each letter
x_p^e is then replaced by a node v^e followed by a head v^-e x_p^e, and a
tail v^e with a cancelling node v^-e is inserted right after x_p. The
generator after that pair equals x_p and takes over all later references
to it, so every tail is used by one head only.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import count
from typing import TYPE_CHECKING

from core_words import Kind, Word, WordContext, conjugate, normalize

from realization.chains import (
    CyclicPresentation,
    RealizablePresentation,
    compose_origin,
    is_realizable,
)

if TYPE_CHECKING:
    from collections.abc import Iterator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Link:
    """The conjugator v^power * x_ref^sign leaving a chain vertex."""

    power: int
    ref: int | None = None
    sign: int = 0


class _Builder:
    """Chain vertices are integers; 0..n-1 are the generators of the input."""

    def __init__(self, chain: CyclicPresentation) -> None:
        self.source = chain.context
        n = len(chain.conjugators)
        self.order = list(range(n))
        self.links: dict[int, Link] = {}
        self.origin = {i: Word.of(self.source, self.source.x(i + 1)) for i in range(n)}
        self.fresh: Iterator[int] = count(n)
        self.v = Word.of(self.source, self.source.v(1))

    def letter_word(self, link: Link) -> Word:
        word = self.v ** link.power
        if link.ref is not None:
            word *= self.origin[link.ref] ** link.sign
        return word

    def insert_after(self, vertex: int, link: Link) -> int:
        """Insert fresh = vertex^link after vertex; fresh inherits vertex's old link."""
        new = next(self.fresh)
        self.order.insert(self.order.index(vertex) + 1, new)
        self.links[new] = self.links[vertex]
        self.links[vertex] = link
        self.origin[new] = conjugate(self.origin[vertex], self.letter_word(link))
        return new

    def split(self, vertex: int, conjugator: Word) -> None:
        """Step 1: one link per letter of the conjugator."""
        v1 = self.source.v(1)
        letters = conjugator.letters() or ((v1, 1), (v1, -1))
        links = [
            Link(exp) if gen.kind is Kind.V else Link(0, gen.index - 1, exp)
            for gen, exp in letters
        ]
        self.links[vertex] = links[-1]
        current = vertex
        for link in links[:-1]:
            current = self.insert_after(current, link)
        if len(links) > 1:
            logger.debug(
                "Split the link at vertex %d into %d letters", vertex, len(links)
            )

    def next_letter(self) -> int | None:
        """Return the first vertex whose link is a bare letter x_p^e."""
        return next(
            (
                vertex
                for vertex in self.order
                if self.links[vertex].ref is not None and self.links[vertex].power == 0
            ),
            None,
        )

    def separate(self) -> None:
        """Step 2: give every letter x_p^e its own tail after an alias of x_p."""
        alias = {vertex: vertex for vertex in self.order}
        while (source := self.next_letter()) is not None:
            link = self.links[source]
            if link.ref is None:
                break
            tail, sign = alias[link.ref], link.sign
            copy = self.insert_after(self.insert_after(tail, Link(sign)), Link(-sign))
            alias[link.ref] = copy
            start = copy if tail == source else source
            head = self.insert_after(start, Link(sign))
            self.links[head] = Link(-sign, tail, sign)
            logger.debug("Tail after vertex %d, head after vertex %d", tail, start)

    def build(self, chain: CyclicPresentation) -> RealizablePresentation:
        ctx = WordContext(len(self.order), 1)
        position = {vertex: i for i, vertex in enumerate(self.order, 1)}
        conjugators: list[Word] = []
        for vertex in self.order:
            link = self.links[vertex]
            raw = [(ctx.v(1), link.power)]
            if link.ref is not None:
                raw.append((ctx.x(position[link.ref]), link.sign))
            conjugators.append(normalize(raw, ctx))
        origin = {ctx.x(position[vertex]): self.origin[vertex] for vertex in self.order}
        origin[ctx.v(1)] = self.v
        return RealizablePresentation(
            ctx, tuple(conjugators), compose_origin(origin, chain)
        )


def to_realizable(chain: CyclicPresentation) -> RealizablePresentation:
    """Transform a cyclic chain into a realizable one presenting the same group.

    A chain that is already realizable is returned unchanged. The origin map
    of the result sends every new generator to a word of the chain's source.
    """
    if is_realizable(chain):
        return RealizablePresentation(chain.context, chain.conjugators, chain.origin)
    builder = _Builder(chain)
    for vertex, conjugator in enumerate(chain.conjugators):
        builder.split(vertex, conjugator)
    builder.separate()
    result = builder.build(chain)
    logger.debug(
        "Realizable chain of length %d from length %d",
        len(result.conjugators),
        len(chain.conjugators),
    )
    return result
