"""Virtual braid words and the defining relations of VB_n."""

import re
from dataclasses import dataclass
from enum import StrEnum
from typing import Final, NamedTuple


class BraidError(ValueError):
    """Invalid braid letter or word."""


class BraidParseError(BraidError):
    """Text does not follow the braid-word grammar."""


class RelationError(BraidError):
    """Relations requested for too few strands."""


class LetterKind(StrEnum):
    """Classical (sigma) or virtual (rho) crossing."""

    SIGMA = "s"
    RHO = "r"


TOKEN: Final = re.compile(r"^([sr])(\d+)(?:\^(-?1))?$")


@dataclass(frozen=True)
class BraidLetter:
    """A generator sigma_i^{+-1} or rho_i of VB_n."""

    kind: LetterKind
    index: int
    power: int = 1

    def __post_init__(self) -> None:
        """Keep rho letters at power +1 and powers in {+1, -1}."""
        if self.power not in {1, -1}:
            msg = f"Braid letter power must be +1 or -1, got {self.power}"
            raise BraidError(msg)
        if self.kind is LetterKind.RHO and self.power != 1:
            object.__setattr__(self, "power", 1)
        if self.index < 1:
            msg = f"Braid letter index must be positive, got {self.index}"
            raise BraidError(msg)

    def __str__(self) -> str:
        """Render as s<i>, s<i>^-1 or r<i>."""
        return f"{self.kind}{self.index}" + ("^-1" if self.power == -1 else "")

    def inverse(self) -> BraidLetter:
        """Return the inverse letter."""
        if self.kind is LetterKind.RHO:
            return self
        return BraidLetter(self.kind, self.index, -self.power)


def sigma(index: int, power: int = 1) -> BraidLetter:
    """Return sigma_index^power."""
    return BraidLetter(LetterKind.SIGMA, index, power)


def rho(index: int) -> BraidLetter:
    """Return rho_index."""
    return BraidLetter(LetterKind.RHO, index)


@dataclass(frozen=True)
class BraidWord:
    """A word in the generators of VB_n."""

    strand_count: int
    letters: tuple[BraidLetter, ...] = ()

    def __post_init__(self) -> None:
        """Validate strand count and letter indices."""
        if self.strand_count < 1:
            msg = f"Strand count must be at least 1, got {self.strand_count}"
            raise BraidError(msg)
        for letter in self.letters:
            if letter.index >= self.strand_count:
                msg = f"Letter {letter} out of range for {self.strand_count} strands"
                raise BraidError(msg)

    def __str__(self) -> str:
        """Render in the braid-word grammar."""
        return " ".join(map(str, self.letters))

    def __len__(self) -> int:
        """Return the number of letters."""
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        """Concatenate two words on the same number of strands."""
        if other.strand_count != self.strand_count:
            msg = (
                f"Cannot concatenate braids on {self.strand_count} "
                f"and {other.strand_count} strands"
            )
            raise BraidError(msg)
        return BraidWord(self.strand_count, self.letters + other.letters)

    def __pow__(self, exp: int) -> BraidWord:
        """Raise to an integer power."""
        base = self if exp >= 0 else self.inverse()
        return BraidWord(self.strand_count, base.letters * abs(exp))

    def inverse(self) -> BraidWord:
        """Return the inverse word."""
        return BraidWord(
            self.strand_count,
            tuple(letter.inverse() for letter in reversed(self.letters)),
        )


def braid(n: int, *letters: BraidLetter) -> BraidWord:
    """Build a braid word from letters."""
    return BraidWord(n, letters)


def parse_braid(text: str, n: int) -> BraidWord:
    """Parse tokens s<i>, s<i>^-1 and r<i> into a braid on n strands."""
    if n < 1:
        msg = f"Strand count must be at least 1, got {n}"
        raise BraidParseError(msg)
    letters: list[BraidLetter] = []
    for token in text.split():
        match = TOKEN.match(token)
        if match is None:
            msg = f"Invalid braid token {token!r}"
            raise BraidParseError(msg)
        kind, index, power = match.groups()
        if not 1 <= int(index) < n:
            msg = f"Index out of range in {token!r} for {n} strands"
            raise BraidParseError(msg)
        letters.append(BraidLetter(LetterKind(kind), int(index), int(power or 1)))
    return BraidWord(n, tuple(letters))


class Relation(NamedTuple):
    """A defining relation lhs = rhs of VB_n."""

    name: str
    lhs: BraidWord
    rhs: BraidWord


def vbn_relations(n: int) -> list[Relation]:
    """Return every defining relation of VB_n."""
    if n < 2:  # noqa: PLR2004
        msg = f"VB_n relations need at least 2 strands, got {n}"
        raise RelationError(msg)
    s, r = sigma, rho
    indices = range(1, n)
    far = [(i, j) for i in indices for j in indices if abs(i - j) >= 2]  # noqa: PLR2004
    empty = braid(n)
    relations: list[Relation] = []
    relations.extend(
        Relation(
            f"braid({i})",
            braid(n, s(i), s(i + 1), s(i)),
            braid(n, s(i + 1), s(i), s(i + 1)),
        )
        for i in indices
        if i + 1 < n
    )
    relations.extend(
        Relation(f"far-sigma({i},{j})", braid(n, s(i), s(j)), braid(n, s(j), s(i)))
        for i, j in far
        if i < j
    )
    relations.extend(
        Relation(f"involution({i})", braid(n, r(i), r(i)), empty) for i in indices
    )
    relations.extend(
        Relation(f"far-rho({i},{j})", braid(n, r(i), r(j)), braid(n, r(j), r(i)))
        for i, j in far
        if i < j
    )
    relations.extend(
        Relation(
            f"rho-braid({i})",
            braid(n, r(i), r(i + 1), r(i)),
            braid(n, r(i + 1), r(i), r(i + 1)),
        )
        for i in indices
        if i + 1 < n
    )
    relations.extend(
        Relation(f"far-mixed({i},{j})", braid(n, s(i), r(j)), braid(n, r(j), s(i)))
        for i, j in far
    )
    relations.extend(
        Relation(
            f"mixed({i})",
            braid(n, r(i), r(i + 1), s(i)),
            braid(n, s(i + 1), r(i), r(i + 1)),
        )
        for i in indices
        if i + 1 < n
    )
    return relations
