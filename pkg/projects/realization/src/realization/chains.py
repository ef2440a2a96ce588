"""Cyclic conjugation chains x_{j+1} = x_j^{w_j} and their realizable shape."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from core_words import Generator, Kind, Word, WordContext, substitute
from presentations import Presentation, as_conjugation, conjugation_relator

if TYPE_CHECKING:
    from collections.abc import Mapping

type LinkShape = tuple[int, int | None]


class RealizationError(ValueError):
    """Presentation outside the shape a realization step accepts."""


@dataclass(frozen=True)
class CyclicPresentation:
    """Generators x1..xn, v1 and the relations x_{j+1} = x_j^{w_j}, indices mod n.

    origin maps every generator to a word of the presentation the chain was
    derived from; None means the chain is its own source.
    """

    context: WordContext
    conjugators: tuple[Word, ...]
    origin: Mapping[Generator, Word] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        """Check one v-generator and one conjugator per x-generator."""
        ctx = self.context
        sized = ctx.x_count == len(self.conjugators)
        if ctx.v_count != 1 or not self.conjugators or not sized:
            msg = (
                f"A cyclic chain needs x1..xn, a single v1 and n conjugators, got "
                f"F_{ctx.x_count} * Z^{ctx.v_count} with {len(self.conjugators)}"
            )
            raise RealizationError(msg)
        for conjugator in self.conjugators:
            if conjugator.context != ctx:
                msg = (
                    f"Conjugator {conjugator} lives in {conjugator.context}, "
                    f"expected {ctx}"
                )
                raise RealizationError(msg)

    def presentation(self) -> Presentation:
        """Return the relators x_{j+1}^-1 * x_j^{w_j}."""
        ctx = self.context
        n = len(self.conjugators)
        return Presentation(
            ctx,
            tuple(
                conjugation_relator(
                    Word.of(ctx, ctx.x((j + 1) % n + 1)), Word.of(ctx, ctx.x(j + 1)), w
                )
                for j, w in enumerate(self.conjugators)
            ),
        )

    def product(self) -> Word:
        """Return w_1 ... w_n."""
        result = Word.identity(self.context)
        for conjugator in self.conjugators:
            result *= conjugator
        return result

    def origin_map(self) -> dict[Generator, Word]:
        """Return the image of every generator in the source presentation."""
        if self.origin is None:
            ctx = self.context
            return {gen: Word.of(ctx, gen) for gen in ctx.generators()}
        return dict(self.origin)

    def source_context(self) -> WordContext:
        """Return the context of the source presentation."""
        if self.origin is None:
            return self.context
        return next(iter(self.origin.values())).context


def compose_origin(
    images: Mapping[Generator, Word],
    chain: CyclicPresentation,
) -> dict[Generator, Word]:
    """Carry words over chain.context back to the source of chain."""
    origin = chain.origin_map()
    target = chain.source_context()
    return {gen: substitute(word, origin, target) for gen, word in images.items()}


def link_shape(conjugator: Word) -> LinkShape | None:
    """Classify v^e as (e, None) and v^-e x_p^e as (e, p); anything else is None."""
    match conjugator.syllables:
        case ((gen, exp),) if gen.kind is Kind.V and abs(exp) == 1:
            return exp, None
        case ((v, v_exp), (x, x_exp)) if (
            v.kind is Kind.V
            and x.kind is Kind.X
            and abs(x_exp) == 1
            and v_exp == -x_exp
        ):
            return x_exp, x.index
        case _:
            return None


def realizability_problems(chain: CyclicPresentation) -> list[str]:
    """List every way the chain fails to be read as arrow ends and nodes."""
    shapes = [link_shape(w) for w in chain.conjugators]
    problems: list[str] = []
    referenced: dict[int, int] = {}
    for j, shape in enumerate(shapes, 1):
        if shape is None:
            conjugator = chain.conjugators[j - 1]
            problems.append(f"w{j} = {conjugator} is not v^e or v^-e x_p^e")
            continue
        sign, p = shape
        if p is None:
            continue
        if p in referenced:
            problems.append(f"x{p} is referenced by both w{referenced[p]} and w{j}")
        referenced[p] = j
        if shapes[p - 1] != (sign, None):
            problems.append(f"w{j} references x{p} but w{p} is not v^{sign}")
    return problems


def is_realizable(chain: CyclicPresentation) -> bool:
    """Return whether every link is an arrow end or a node of one circle."""
    return not realizability_problems(chain)


@dataclass(frozen=True)
class RealizablePresentation(CyclicPresentation):
    """A cyclic chain whose conjugators are v^e (tails, nodes) or v^-e x_p^e (heads).

    A head at link k referencing x_p needs w_p = v^e for its tail, and no other
    head may reference x_p.
    """

    def __post_init__(self) -> None:
        """Check the chain shape and the head/tail pairing."""
        super().__post_init__()
        problems = realizability_problems(self)
        if problems:
            msg = "Presentation is not realizable: " + "; ".join(problems)
            raise RealizationError(msg)


def as_cyclic(p: Presentation) -> CyclicPresentation | None:
    """Read p as a cyclic chain in its own generator order, if it is one."""
    ctx = p.context
    n = ctx.x_count
    if ctx.v_count != 1 or n == 0 or len(p.relators) != n:
        return None
    conjugators: list[Word] = []
    for j, relator in enumerate(p.relators):
        relation = as_conjugation(relator)
        if relation is None:
            return None
        source, target = ctx.x(j + 1), ctx.x((j + 1) % n + 1)
        if (relation.source, relation.target) == (source, target):
            conjugators.append(relation.conjugator)
        elif (relation.source, relation.target) == (target, source):
            conjugators.append(relation.conjugator.inverse())
        else:
            return None
    return CyclicPresentation(ctx, tuple(conjugators))
