"""Tietze simplification: drop trivial relators, eliminate solvable x-generators."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Final

from core_words import Generator, Kind, Word, WordContext, normalize, substitute

from presentations.presentation import Presentation

if TYPE_CHECKING:
    from collections.abc import Mapping

logger = logging.getLogger(__name__)

MAX_LENGTH: Final = 5_000


@dataclass(frozen=True)
class Simplification:
    """A simplified presentation and the image of every original generator in it."""

    presentation: Presentation
    images: Mapping[Generator, Word]


@dataclass(frozen=True)
class _Elimination:
    relator: int
    generator: Generator
    solution: Word
    cost: int


def _letter_count(word: Word, gen: Generator) -> int:
    return sum(abs(exp) for other, exp in word.syllables if other == gen)


def _solve(relator: Word, gen: Generator) -> Word:
    """Rotate gen to the front of the relator and solve gen^e * rest = 1."""
    letters = relator.letters()
    index = next(i for i, (other, _) in enumerate(letters) if other == gen)
    exp = letters[index][1]
    rest = normalize(letters[index + 1 :] + letters[:index], relator.context)
    return rest.inverse() if exp == 1 else rest


def _tidy(relators: tuple[Word, ...]) -> tuple[Word, ...]:
    """Cyclically reduce, then drop empty and repeated relators."""
    kept: list[Word] = []
    for relator in relators:
        reduced = relator.cyclically_reduced()
        if reduced.syllables and reduced not in kept:
            kept.append(reduced)
    return tuple(kept)


def _candidates(p: Presentation) -> list[_Elimination]:
    total = sum(len(relator) for relator in p.relators)
    found: list[_Elimination] = []
    for r, relator in enumerate(p.relators):
        for gen in sorted(relator.generators(), key=p.context.position, reverse=True):
            if gen.kind is not Kind.X or _letter_count(relator, gen) != 1:
                continue
            solution = _solve(relator, gen)
            uses = sum(_letter_count(other, gen) for other in p.relators)
            cost = total - len(relator) + (uses - 1) * (len(solution) - 1)
            found.append(_Elimination(r, gen, solution, cost))
    return found


def _renumbering(
    ctx: WordContext, dropped: Generator
) -> tuple[WordContext, dict[Generator, Word]]:
    smaller = WordContext(ctx.x_count - 1, ctx.v_count)
    images: dict[Generator, Word] = {}
    for gen in ctx.generators():
        if gen.kind is Kind.X and gen != dropped:
            index = gen.index - 1 if gen.index > dropped.index else gen.index
            images[gen] = Word.of(smaller, smaller.x(index))
        elif gen.kind is Kind.V:
            images[gen] = Word.of(smaller, smaller.v(gen.index))
    return smaller, images


def simplify_with_map(
    p: Presentation, *, max_length: int = MAX_LENGTH
) -> Simplification:
    """Simplify and report where every original generator went.

    Each step removes one relator together with one x-generator occurring in
    it exactly once, substituting its solution everywhere else. The cheapest
    elimination is taken first; simplification stops at a fixpoint or when the
    total relator length would exceed max_length.
    """
    current = p.with_relators(_tidy(p.relators))
    images = {gen: Word.of(p.context, gen) for gen in p.generators()}
    while True:
        candidates = _candidates(current)
        if not candidates:
            break
        step = min(candidates, key=lambda candidate: candidate.cost)
        if step.cost > max(max_length, sum(map(len, current.relators))):
            logger.debug(
                "Stopping: eliminating %s would reach length %d",
                step.generator,
                step.cost,
            )
            break
        smaller, renumber = _renumbering(current.context, step.generator)
        renumber[step.generator] = substitute(step.solution, renumber, smaller)
        relators = tuple(
            substitute(relator, renumber, smaller)
            for r, relator in enumerate(current.relators)
            if r != step.relator
        )
        images = {
            gen: substitute(word, renumber, smaller) for gen, word in images.items()
        }
        current = Presentation(smaller, _tidy(relators))
        logger.debug(
            "Eliminated %s, %d relators left", step.generator, len(current.relators)
        )
    return Simplification(current, images)


def simplify(p: Presentation, *, max_length: int = MAX_LENGTH) -> Presentation:
    """Return a Tietze-equivalent presentation with fewer generators and relators."""
    return simplify_with_map(p, max_length=max_length).presentation
