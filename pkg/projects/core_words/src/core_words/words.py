"""Words in the free product of a free group and a free abelian group."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from enum import StrEnum
from typing import TYPE_CHECKING, Final

if TYPE_CHECKING:
    from collections.abc import Iterable, Mapping


class WordError(ValueError):
    """Invalid generator or word for a context."""


class ContextMismatchError(WordError):
    """Words or endomaps from different contexts were combined."""


class WordParseError(WordError):
    """Text does not follow the word grammar."""


class Kind(StrEnum):
    """Generator kinds: free (x) or commuting (v)."""

    X = "x"
    V = "v"


@dataclass(frozen=True)
class Generator:
    """A single generator such as x3 or v1."""

    kind: Kind
    index: int

    def __str__(self) -> str:
        """Render as x<k> or v<k>."""
        return f"{self.kind}{self.index}"


type Syllable = tuple[Generator, int]
type Block = tuple[Syllable, ...]

TOKEN: Final = re.compile(r"^([xv])(\d+)(?:\^(-?\d+))?$")


@dataclass(frozen=True)
class WordContext:
    """The ambient group F_{x_count} * Z^{v_count}."""

    x_count: int
    v_count: int

    def __post_init__(self) -> None:
        """Reject negative ranks."""
        if self.x_count < 0 or self.v_count < 0:
            msg = (
                "Context ranks must be non-negative, "
                f"got {self.x_count}, {self.v_count}"
            )
            raise WordError(msg)

    def x(self, index: int) -> Generator:
        """Return the x-generator with the given index."""
        gen = Generator(Kind.X, index)
        self.validate(gen)
        return gen

    def v(self, index: int) -> Generator:
        """Return the v-generator with the given index."""
        gen = Generator(Kind.V, index)
        self.validate(gen)
        return gen

    def generators(self) -> tuple[Generator, ...]:
        """List x1..xn followed by v1..vm."""
        return tuple(Generator(Kind.X, i) for i in range(1, self.x_count + 1)) + tuple(
            Generator(Kind.V, i) for i in range(1, self.v_count + 1)
        )

    def position(self, gen: Generator) -> int:
        """Return the 0-based position of a generator in generators()."""
        self.validate(gen)
        if gen.kind is Kind.X:
            return gen.index - 1
        return self.x_count + gen.index - 1

    def validate(self, gen: Generator) -> None:
        """Raise if the generator does not belong to this context."""
        count = self.x_count if gen.kind is Kind.X else self.v_count
        if not 1 <= gen.index <= count:
            msg = (
                f"Generator {gen} out of range for context "
                f"F_{self.x_count} * Z^{self.v_count}"
            )
            raise WordError(msg)


def normalize(raw: Iterable[Syllable], ctx: WordContext) -> Word:
    """Reduce a raw syllable sequence to its unique normal form.

    X-syllables are freely reduced; maximal runs of V-syllables are collected
    into exponent vectors and written in ascending index order.
    """
    stack: list[Syllable | dict[int, int]] = []
    for gen, exp in raw:
        ctx.validate(gen)
        if exp == 0:
            continue
        top = stack[-1] if stack else None
        if gen.kind is Kind.V:
            if isinstance(top, dict):
                total = top.get(gen.index, 0) + exp
                if total:
                    top[gen.index] = total
                else:
                    del top[gen.index]
                    if not top:
                        stack.pop()
            else:
                stack.append({gen.index: exp})
        elif isinstance(top, tuple) and top[0] == gen:
            total = top[1] + exp
            if total:
                stack[-1] = (gen, total)
            else:
                stack.pop()
        else:
            stack.append((gen, exp))

    syllables: list[Syllable] = []
    for entry in stack:
        if isinstance(entry, dict):
            syllables.extend(
                (Generator(Kind.V, index), entry[index]) for index in sorted(entry)
            )
        else:
            syllables.append(entry)
    return Word(ctx, tuple(syllables))


@dataclass(frozen=True)
class Word:
    """A word in normal form; build instances with normalize() or Word.parse()."""

    context: WordContext
    syllables: tuple[Syllable, ...] = ()

    @classmethod
    def identity(cls, ctx: WordContext) -> Word:
        """Return the empty word."""
        return cls(ctx)

    @classmethod
    def of(cls, ctx: WordContext, gen: Generator, exp: int = 1) -> Word:
        """Return the word gen^exp."""
        return normalize([(gen, exp)], ctx)

    @classmethod
    def parse(cls, text: str, ctx: WordContext) -> Word:
        """Parse whitespace separated tokens x<k>, v<k> with optional ^<exp>."""
        tokens = text.split()
        if tokens == ["1"]:
            return cls(ctx)
        raw: list[Syllable] = []
        for token in tokens:
            match = TOKEN.match(token)
            if match is None:
                msg = f"Invalid word token {token!r}"
                raise WordParseError(msg)
            kind, index, exp = match.groups()
            gen = Generator(Kind(kind), int(index))
            try:
                ctx.validate(gen)
            except WordError as error:
                raise WordParseError(str(error)) from error
            raw.append((gen, int(exp) if exp is not None else 1))
        return normalize(raw, ctx)

    def __str__(self) -> str:
        """Render in the shared word grammar."""
        if not self.syllables:
            return "1"
        return " ".join(
            str(gen) if exp == 1 else f"{gen}^{exp}" for gen, exp in self.syllables
        )

    def __len__(self) -> int:
        """Return the letter length (sum of absolute exponents)."""
        return sum(abs(exp) for _, exp in self.syllables)

    def __mul__(self, other: Word) -> Word:
        """Multiply two words of the same context."""
        check_context(self, other)
        return normalize(self.syllables + other.syllables, self.context)

    def __pow__(self, exp: int) -> Word:
        """Raise to an integer power."""
        base = self if exp >= 0 else self.inverse()
        return normalize(base.syllables * abs(exp), self.context)

    def inverse(self) -> Word:
        """Return the inverse word."""
        # Reversal keeps normal form except inside V-runs, so renormalize.
        return normalize(
            [(gen, -exp) for gen, exp in reversed(self.syllables)], self.context
        )

    def letters(self) -> tuple[Syllable, ...]:
        """Expand into letters with exponent +1 or -1."""
        return tuple(
            (gen, 1 if exp > 0 else -1)
            for gen, exp in self.syllables
            for _ in range(abs(exp))
        )

    def generators(self) -> frozenset[Generator]:
        """Return the generators occurring in the word."""
        return frozenset(gen for gen, _ in self.syllables)

    def exponent_sums(self) -> dict[Generator, int]:
        """Return the nonzero exponent sum of every generator."""
        sums: Counter[Generator] = Counter()
        for gen, exp in self.syllables:
            sums[gen] += exp
        return {gen: total for gen, total in sums.items() if total}

    def occurrences(self, gen: Generator) -> list[int]:
        """Return the syllable positions where gen occurs."""
        return [i for i, (other, _) in enumerate(self.syllables) if other == gen]

    def blocks(self) -> tuple[Block, ...]:
        """Group syllables into single X-syllables and maximal V-runs."""
        blocks: list[Block] = []
        run: list[Syllable] = []
        for syllable in self.syllables:
            if syllable[0].kind is Kind.V:
                run.append(syllable)
                continue
            if run:
                blocks.append(tuple(run))
                run = []
            blocks.append((syllable,))
        if run:
            blocks.append(tuple(run))
        return tuple(blocks)

    def cyclically_reduced(self) -> Word:
        """Return a cyclic conjugate that cannot be shortened by further rotation."""
        word = self
        while True:
            blocks = word.blocks()
            if len(blocks) < 2:  # noqa: PLR2004
                return word
            first, last = blocks[0], blocks[-1]
            mergeable = (first[0][0].kind is Kind.V and last[0][0].kind is Kind.V) or (
                first[0][0].kind is Kind.X and first[0][0] == last[0][0]
            )
            if not mergeable:
                return word
            tail = Word(self.context, last)
            word = tail * word * tail.inverse()

    def rotations(self) -> list[tuple[Block, ...]]:
        """Return every block-level rotation of the word."""
        blocks = self.blocks()
        return [blocks[i:] + blocks[:i] for i in range(len(blocks))]


def check_context(*items: Word) -> None:
    """Raise if the words do not share a context."""
    contexts = {item.context for item in items}
    if len(contexts) > 1:
        msg = f"Context mismatch: {sorted(map(str, contexts))}"
        raise ContextMismatchError(msg)


def conjugate(a: Word, b: Word) -> Word:
    """Return b^-1 a b in normal form."""
    check_context(a, b)
    return b.inverse() * a * b


def substitute(
    word: Word,
    images: Mapping[Generator, Word],
    target: WordContext,
) -> Word:
    """Replace generators by words of the target context.

    Generators without an image are kept and must be valid in the target.
    """
    raw: list[Syllable] = []
    for gen, exp in word.syllables:
        image = images.get(gen)
        if image is None:
            raw.append((gen, exp))
            continue
        if image.context != target:
            msg = f"Image of {gen} lives in {image.context}, expected {target}"
            raise ContextMismatchError(msg)
        piece = image.syllables if exp > 0 else image.inverse().syllables
        raw.extend(piece * abs(exp))
    return normalize(raw, target)


def block_inverse(block: Block) -> Block:
    """Invert a single X-syllable or V-run."""
    return tuple((gen, -exp) for gen, exp in block)


def join_blocks(ctx: WordContext, blocks: Iterable[Block]) -> Word:
    """Concatenate blocks and normalize."""
    return normalize([syllable for block in blocks for syllable in block], ctx)
