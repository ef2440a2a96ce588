"""Finite presentations over a word context and their text format.

The v-generators of a context commute by construction of the word normal
form, so their pairwise commutators are implicit relators: they count
towards the deficiency and are enforced by the homomorphism search, but are
never stored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import TYPE_CHECKING, Final

from core_words import Generator, Kind, Word, WordContext, WordError, conjugate

if TYPE_CHECKING:
    from collections.abc import Iterable

GENS_LINE: Final = re.compile(r"^gens:(.*)$")
REL_LINE: Final = re.compile(r"^rel:(.*)$")
GEN_TOKEN: Final = re.compile(r"^([xv])(\d+)$")


class PresentationError(ValueError):
    """Malformed presentation or presentation text."""


@dataclass(frozen=True)
class Presentation:
    """Generators of a context together with relators in normal form."""

    context: WordContext
    relators: tuple[Word, ...] = ()

    def __post_init__(self) -> None:
        """Check every relator lives in the presentation context."""
        for relator in self.relators:
            if relator.context != self.context:
                msg = (
                    f"Relator {relator} lives in {relator.context}, "
                    f"expected {self.context}"
                )
                raise PresentationError(msg)

    @classmethod
    def free(cls, x_count: int, v_count: int = 1) -> Presentation:
        """Return the presentation with no relators."""
        return cls(WordContext(x_count, v_count))

    def generators(self) -> tuple[Generator, ...]:
        """Return x1..xn followed by v1..vm."""
        return self.context.generators()

    def x_generators(self) -> tuple[Generator, ...]:
        """Return the x-generators."""
        return tuple(gen for gen in self.generators() if gen.kind is Kind.X)

    def v_generators(self) -> tuple[Generator, ...]:
        """Return the v-generators."""
        return tuple(gen for gen in self.generators() if gen.kind is Kind.V)

    def v_commutators(self) -> tuple[tuple[Generator, Generator], ...]:
        """Return the pairs of v-generators whose commutators are implicit relators."""
        return tuple(combinations(self.v_generators(), 2))

    @property
    def deficiency(self) -> int:
        """Number of generators minus number of relators, implicit ones included."""
        return len(self.generators()) - len(self.relators) - len(self.v_commutators())

    def with_relators(self, relators: Iterable[Word]) -> Presentation:
        """Return a presentation on the same generators with other relators."""
        return Presentation(self.context, tuple(relators))

    def __str__(self) -> str:
        """Render in the presentation text format."""
        return format_presentation(self)


def conjugation_relator(target: Word, source: Word, conjugator: Word) -> Word:
    """Return target^-1 * source^conjugator, the relator of that conjugation."""
    return target.inverse() * conjugate(source, conjugator)


def format_presentation(p: Presentation) -> str:
    """Render as a `gens:` line followed by one `rel:` line per relator."""
    lines = ["gens: " + " ".join(map(str, p.generators()))]
    lines.extend(f"rel: {relator}" for relator in p.relators)
    return "\n".join(lines)


def parse_presentation(text: str) -> Presentation:
    """Parse the presentation text format.

    Blank lines and lines starting with `#` are skipped. The `gens:` line must
    name x1..xn and v1..vm without gaps, in any order.
    """
    lines = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.strip().startswith("#")
    ]
    if not lines:
        msg = "Empty presentation"
        raise PresentationError(msg)
    header = GENS_LINE.match(lines[0])
    if header is None:
        msg = f"Expected a 'gens:' line, got {lines[0]!r}"
        raise PresentationError(msg)
    ctx = _context_of(header.group(1).split())
    relators: list[Word] = []
    for line in lines[1:]:
        match = REL_LINE.match(line)
        if match is None:
            msg = f"Expected a 'rel:' line, got {line!r}"
            raise PresentationError(msg)
        try:
            relators.append(Word.parse(match.group(1), ctx))
        except WordError as error:
            msg = f"Invalid relator {match.group(1).strip()!r}: {error}"
            raise PresentationError(msg) from error
    return Presentation(ctx, tuple(relators))


def _context_of(tokens: list[str]) -> WordContext:
    indices: dict[str, set[int]] = {"x": set(), "v": set()}
    for token in tokens:
        match = GEN_TOKEN.match(token)
        if match is None:
            msg = f"Invalid generator {token!r}"
            raise PresentationError(msg)
        kind, index = match.group(1), int(match.group(2))
        if index in indices[kind]:
            msg = f"Generator {token} listed twice"
            raise PresentationError(msg)
        indices[kind].add(index)
    for kind, seen in indices.items():
        if seen != set(range(1, len(seen) + 1)):
            msg = (
                f"{kind}-generators must be numbered 1..{len(seen)}, "
                f"got {sorted(seen)}"
            )
            raise PresentationError(msg)
    return WordContext(len(indices["x"]), len(indices["v"]))
