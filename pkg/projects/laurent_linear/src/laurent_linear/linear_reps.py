"""Burau-type representations, theta-conjugation and the Bigelow kernel check."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import StrEnum
from functools import reduce

from braid_reps import BraidLetter, BraidWord, LetterKind, braid, sigma

from laurent_linear.matrices import Block, LaurentMatrix, block_inverse, block_product
from laurent_linear.polynomials import LaurentPoly

logger = logging.getLogger(__name__)


class LetterError(ValueError):
    """Letter not supported by the chosen linear representation."""


class LinearRep(StrEnum):
    """The available matrix representations."""

    BURAU_LOCAL = "burau_local"
    BURAU = "burau"
    PSI = "psi"
    BF = "bf"

    @property
    def classical_only(self) -> bool:
        """Burau variants are defined on B_n only."""
        return self in {LinearRep.BURAU_LOCAL, LinearRep.BURAU}


def variables(rep: LinearRep, n: int) -> tuple[str, ...]:
    """Return the fixed variable list of a representation on n strands."""
    indexed = tuple(f"t{i}" for i in range(1, n))
    match rep:
        case LinearRep.BURAU_LOCAL:
            return ("t", *indexed)
        case LinearRep.BURAU:
            return ("t",)
        case LinearRep.PSI:
            return ("t", "l", *indexed)
        case LinearRep.BF:
            return ("t", "l")


def _block(rep: LinearRep, kind: LetterKind, i: int, names: tuple[str, ...]) -> Block:
    def mono(coefficient: int = 1, **powers: int) -> LaurentPoly:
        return LaurentPoly.monomial(names, powers, coefficient)

    ti = f"t{i}"
    zero = LaurentPoly.zero(names)
    one_minus_t = LaurentPoly.one(names) - mono(t=1)
    if kind is LetterKind.RHO:
        match rep:
            case LinearRep.PSI:
                return ((zero, mono(**{ti: 1})), (mono(**{ti: -1}), zero))
            case _:
                return ((zero, mono()), (mono(), zero))
    match rep:
        case LinearRep.BURAU_LOCAL:
            return ((one_minus_t, mono(t=1, **{ti: 1})), (mono(**{ti: -1}), zero))
        case LinearRep.BURAU:
            return ((one_minus_t, mono(t=1)), (mono(), zero))
        case LinearRep.PSI:
            return (
                (one_minus_t, mono(t=1, l=-1, **{ti: 1})),
                (mono(l=1, **{ti: -1}), zero),
            )
        case LinearRep.BF:
            return ((one_minus_t, mono(t=1, l=-1)), (mono(l=1), zero))


def letter_block(rep: LinearRep, letter: BraidLetter, n: int) -> Block:
    """Return the 2x2 block of a letter, inverted for sigma^-1."""
    if rep.classical_only and letter.kind is LetterKind.RHO:
        msg = f"{rep} is a representation of B_n and has no image for {letter}"
        raise LetterError(msg)
    if not 1 <= letter.index < n:
        msg = f"Letter {letter} out of range for {n} strands"
        raise LetterError(msg)
    names = variables(rep, n)
    block = _block(rep, letter.kind, letter.index, names)
    if letter.power == -1:
        inverse = block_inverse(block)
        one, zero = LaurentPoly.one(names), LaurentPoly.zero(names)
        if block_product(block, inverse) != ((one, zero), (zero, one)):
            msg = f"Closed-form inverse of {letter} under {rep} failed certification"
            raise LetterError(msg)
        return inverse
    return block


def matrix_of_letter(rep: LinearRep, letter: BraidLetter, n: int) -> LaurentMatrix:
    """Return I^{i-1} + M_i + I^{n-i-1} for a letter at position i."""
    if n < 2:  # noqa: PLR2004
        msg = f"Linear representations need at least 2 strands, got {n}"
        raise LetterError(msg)
    return LaurentMatrix.with_block(
        n, variables(rep, n), letter.index, letter_block(rep, letter, n)
    )


def braid_matrix(rep: LinearRep, word: BraidWord) -> LaurentMatrix:
    """Multiply letter matrices left to right."""
    n = word.strand_count
    return reduce(
        LaurentMatrix.__mul__,
        (matrix_of_letter(rep, letter, n) for letter in word.letters),
        LaurentMatrix.identity(n, variables(rep, n)),
    )


def theta(n: int, names: tuple[str, ...]) -> tuple[LaurentMatrix, LaurentMatrix]:
    """Return theta = diag(1, t1, t1 t2, ...) and its inverse."""
    missing = {f"t{i}" for i in range(1, n)} - set(names)
    if missing:
        msg = f"Variables {sorted(missing)} needed for theta on {n} strands"
        raise LetterError(msg)
    diagonal = [
        LaurentPoly.monomial(names, {f"t{j}": 1 for j in range(1, k)})
        for k in range(1, n + 1)
    ]
    return (
        LaurentMatrix.diagonal(diagonal),
        LaurentMatrix.diagonal([entry.unit_inverse() for entry in diagonal]),
    )


def theta_conjugate(m: LaurentMatrix, n: int) -> LaurentMatrix:
    """Return theta . m . theta^-1."""
    if m.size != n:
        msg = f"Matrix of size {m.size} given for {n} strands"
        raise ValueError(msg)
    forward, backward = theta(n, m.variables)
    return forward * m * backward


def local_block(m: LaurentMatrix, position: int) -> Block:
    """Read the 2x2 block at a 1-based position."""
    i = position - 1
    return (
        (m.entry(i, i), m.entry(i, i + 1)),
        (m.entry(i + 1, i), m.entry(i + 1, i + 1)),
    )


def commutator(a: BraidWord, b: BraidWord) -> BraidWord:
    """Return [a, b] = a^-1 b^-1 a b."""
    return a.inverse() * b.inverse() * a * b


def _word(n: int, *powers: tuple[int, int]) -> BraidWord:
    letters: list[BraidLetter] = []
    for index, exp in powers:
        letters.extend([sigma(index, 1 if exp > 0 else -1)] * abs(exp))
    return braid(n, *letters)


def bigelow_words() -> tuple[BraidWord, BraidWord]:
    """Return Bigelow's Burau-kernel elements b1 in B_5 and b2 in B_6."""
    c1 = _word(5, (3, -1), (2, 1), (1, 2), (2, 1), (4, 3), (3, 1), (2, 1))
    c2 = _word(
        5, (4, -1), (3, 1), (2, 1), (1, -2), (2, 1), (1, 2), (2, 2), (1, 1), (4, 5)
    )
    middle = _word(5, (4, 1), (3, 1), (2, 1), (1, 2), (2, 1), (3, 1), (4, 1))
    s4 = _word(5, (4, 1))
    b1 = commutator(c1.inverse() * s4 * c1, c2.inverse() * middle * c2)

    d1 = _word(6, (4, 1), (5, -1), (2, -1), (1, 1))
    d2 = _word(6, (4, -1), (5, 2), (2, 1), (1, -2))
    s3 = _word(6, (3, 1))
    b2 = commutator(d1.inverse() * s3 * d1, d2.inverse() * s3 * d2)
    return b1, b2


@dataclass(frozen=True)
class KernelReport:
    """Burau images of the Bigelow elements."""

    b1_length: int
    b2_length: int
    b1_identity: bool
    b2_identity: bool

    @property
    def ok(self) -> bool:
        """Both elements lie in the kernel."""
        return self.b1_identity and self.b2_identity


def kernel_check() -> KernelReport:
    """Evaluate the Burau images of b1 (n=5) and b2 (n=6)."""
    b1, b2 = bigelow_words()
    b1_identity = braid_matrix(LinearRep.BURAU, b1).is_identity()
    b2_identity = braid_matrix(LinearRep.BURAU, b2).is_identity()
    logger.debug("Bigelow kernel check: b1=%s b2=%s", b1_identity, b2_identity)
    return KernelReport(len(b1), len(b2), b1_identity, b2_identity)
