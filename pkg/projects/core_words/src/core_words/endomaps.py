"""Endomaps of a word context given by generator images."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from core_words.words import (
    ContextMismatchError,
    Generator,
    Syllable,
    Word,
    WordContext,
    normalize,
    substitute,
)

if TYPE_CHECKING:
    from collections.abc import Iterable, Mapping


@dataclass(frozen=True)
class Endomap:
    """Assignment of a normal-form word to every generator of a context."""

    context: WordContext
    images: tuple[Word, ...]

    def __post_init__(self) -> None:
        """Check that there is one image per generator, all in context."""
        expected = len(self.context.generators())
        if len(self.images) != expected:
            msg = f"Expected {expected} images, got {len(self.images)}"
            raise ContextMismatchError(msg)
        if any(image.context != self.context for image in self.images):
            msg = "Endomap images live in a different context"
            raise ContextMismatchError(msg)

    @classmethod
    def from_mapping(
        cls,
        ctx: WordContext,
        mapping: Mapping[Generator, Word],
    ) -> Endomap:
        """Build an endomap; generators absent from the mapping are fixed."""
        for gen in mapping:
            ctx.validate(gen)
        return cls(
            ctx,
            tuple(mapping.get(gen, Word.of(ctx, gen)) for gen in ctx.generators()),
        )

    def image(self, gen: Generator) -> Word:
        """Return the image of a generator."""
        return self.images[self.context.position(gen)]

    def as_mapping(self) -> dict[Generator, Word]:
        """Return the images keyed by generator."""
        return dict(zip(self.context.generators(), self.images, strict=True))

    def __str__(self) -> str:
        """Render one `gen -> image` pair per line."""
        return "\n".join(
            f"{gen} -> {image}"
            for gen, image in zip(self.context.generators(), self.images, strict=True)
        )


def identity(ctx: WordContext) -> Endomap:
    """Return the identity endomap of a context."""
    return Endomap.from_mapping(ctx, {})


def apply(f: Endomap, w: Word) -> Word:
    """Substitute every generator of w by its image under f."""
    if w.context != f.context:
        msg = "Word and endomap contexts differ"
        raise ContextMismatchError(msg)
    return substitute(w, f.as_mapping(), f.context)


def apply_raw(f: Endomap, raw: Iterable[Syllable]) -> Word:
    """Apply f to an unnormalized syllable sequence."""
    expanded: list[Syllable] = []
    for gen, exp in raw:
        image = f.image(gen)
        piece = image.syllables if exp > 0 else image.inverse().syllables
        expanded.extend(piece * abs(exp))
    return normalize(expanded, f.context)


def compose(f: Endomap, g: Endomap) -> Endomap:
    """Return the endomap "f then g": gen -> apply(g, f(gen))."""
    if f.context != g.context:
        msg = "Cannot compose endomaps of different contexts"
        raise ContextMismatchError(msg)
    return Endomap(f.context, tuple(apply(g, image) for image in f.images))


def is_generator_permutation(f: Endomap) -> bool:
    """Check whether f permutes the generators."""
    targets: set[Generator] = set()
    for image in f.images:
        if len(image.syllables) != 1 or image.syllables[0][1] != 1:
            return False
        targets.add(image.syllables[0][0])
    return len(targets) == len(f.images)


def is_identity(f: Endomap) -> bool:
    """Check whether f fixes every generator."""
    return all(
        image == Word.of(f.context, gen)
        for gen, image in zip(f.context.generators(), f.images, strict=True)
    )


def verify_inverse_pair(f: Endomap, g: Endomap) -> bool:
    """Check that f and g compose to the identity in both orders."""
    return is_identity(compose(f, g)) and is_identity(compose(g, f))
