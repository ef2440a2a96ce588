"""Representations of VB_n as automorphisms of F_n * Z^m."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cache, reduce
from typing import TYPE_CHECKING

from core_words import (
    Endomap,
    Generator,
    Word,
    WordContext,
    apply,
    compose,
    identity,
    is_generator_permutation,
    verify_inverse_pair,
)

from braid_reps.braids import (
    BraidError,
    BraidLetter,
    BraidWord,
    LetterKind,
    Relation,
    rho,
    sigma,
    vbn_relations,
)
from braid_reps.catalogue import (
    CONJUGATORS,
    CATALOGUE,
    TILDE_OF,
    CatalogueError,
    Family,
    parse_representation_name,
)

if TYPE_CHECKING:
    from collections.abc import Mapping

logger = logging.getLogger(__name__)


class ConjugatorError(ValueError):
    """Proposed conjugator and inverse do not compose to the identity."""


@dataclass(frozen=True)
class RepresentationSpec:
    """Images of every VB_n letter as endomaps of a common context."""

    name: str
    parameters: tuple[int, ...]
    strands: int
    context: WordContext
    images: Mapping[BraidLetter, Endomap]

    def letter_image(self, letter: BraidLetter) -> Endomap:
        """Return the endomap assigned to a letter."""
        try:
            return self.images[letter]
        except KeyError as error:
            msg = f"No image for {letter} in {self.label}"
            raise BraidError(msg) from error

    @property
    def label(self) -> str:
        """Return the name with its parameter, e.g. w1[2]."""
        if not self.parameters:
            return self.name
        return f"{self.name}[{','.join(map(str, self.parameters))}]"


@dataclass(frozen=True)
class RelationFailure:
    """A relation whose two sides disagree on one generator."""

    relation: Relation
    generator: Generator
    lhs: Word
    rhs: Word


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking every VB_n relation."""

    representation: str
    strands: int
    checked: int
    failures: list[RelationFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        """Return True when no relation failed."""
        return not self.failures


def _endomap(ctx: WordContext, local: Mapping[Generator, Word]) -> Endomap:
    return Endomap.from_mapping(ctx, local)


def _conjugator_pair(
    ctx: WordContext, words: list[Word]
) -> tuple[Endomap, Endomap]:
    phi: dict[Generator, Word] = {}
    phi_inv: dict[Generator, Word] = {}
    for k, c in enumerate(words, 1):
        x = Word.of(ctx, ctx.x(k))
        phi[ctx.x(k)] = c.inverse() * x * c
        phi_inv[ctx.x(k)] = c * x * c.inverse()
    return _endomap(ctx, phi), _endomap(ctx, phi_inv)


def _resolve_parameter(family: Family, parameters: tuple[int, ...]) -> int:
    if not family.parametrised:
        if parameters:
            msg = f"{family.name} takes no parameter, got {parameters}"
            raise CatalogueError(msg)
        return 1
    if len(parameters) > 1:
        msg = f"{family.name} takes one parameter, got {parameters}"
        raise CatalogueError(msg)
    return parameters[0] if parameters else 1


@cache
def _build(name: str, parameters: tuple[int, ...], n: int) -> RepresentationSpec:
    family = CATALOGUE[name]
    r = _resolve_parameter(family, parameters)
    ctx = WordContext(n, family.v_count(n))
    images: dict[BraidLetter, Endomap] = {}
    base_inverses: dict[int, Endomap] = {}
    if family.sigma_inverse is None and family.base is not None:
        base = _build(family.base, parameters, n)
        phi, phi_inv = standard_conjugator(family.base, n, base.context)
        base_inverses = {
            i: compose(compose(phi, base.images[sigma(i, -1)]), phi_inv)
            for i in range(1, n)
        }
    for i in range(1, n):
        forward = _endomap(ctx, family.sigma(ctx, i, r))
        if family.sigma_inverse is not None:
            backward = _endomap(ctx, family.sigma_inverse(ctx, i, r))
        else:
            backward = base_inverses[i]
        if not verify_inverse_pair(forward, backward):
            msg = f"Catalogue inverse of sigma_{i} is not certified for {name}"
            raise CatalogueError(msg)
        images[sigma(i)] = forward
        images[sigma(i, -1)] = backward
        images[rho(i)] = _endomap(ctx, family.rho(ctx, i, r))
    logger.debug("Built %s on %d strands in %s", name, n, ctx)
    return RepresentationSpec(
        name, (r,) if family.parametrised else (), n, ctx, images
    )


def get_representation(
    name: str,
    parameters: tuple[int, ...] = (),
    n: int = 2,
) -> RepresentationSpec:
    """Instantiate a named family on n strands.

    The name may carry its parameter inline, as in ``w1[2]``.
    """
    if n < 1:
        msg = f"Strand count must be at least 1, got {n}"
        raise CatalogueError(msg)
    family_name, inline = parse_representation_name(name)
    if inline and parameters:
        msg = f"Parameter given twice for {name}"
        raise CatalogueError(msg)
    return _build(family_name, inline or tuple(parameters), n)


def catalogue_names() -> list[str]:
    """Return the stable family names."""
    return list(CATALOGUE)


def standard_conjugator(
    name: str,
    n: int,
    ctx: WordContext | None = None,
) -> tuple[Endomap, Endomap]:
    """Return the pair (phi, phi^-1) relating a family to its tilde version."""
    family_name, _ = parse_representation_name(name)
    if family_name not in CONJUGATORS:
        msg = f"{family_name} has no standard conjugator"
        raise CatalogueError(msg)
    ctx = ctx or WordContext(n, CATALOGUE[family_name].v_count(n))
    return _conjugator_pair(ctx, CONJUGATORS[family_name](ctx, n))


def tilde_name(name: str) -> str:
    """Return the virtually symmetric partner of a base family."""
    family_name, _ = parse_representation_name(name)
    try:
        return TILDE_OF[family_name]
    except KeyError as error:
        msg = f"{family_name} has no tilde partner"
        raise CatalogueError(msg) from error


def braid_image(spec: RepresentationSpec, braid: BraidWord) -> Endomap:
    """Compose the letter images of a braid left to right."""
    if braid.strand_count != spec.strands:
        msg = f"Braid on {braid.strand_count} strands, representation on {spec.strands}"
        raise BraidError(msg)
    return reduce(
        compose,
        (spec.letter_image(letter) for letter in braid.letters),
        identity(spec.context),
    )


def verify_representation(spec: RepresentationSpec) -> VerificationReport:
    """Check every defining relation of VB_n on every generator."""
    if spec.strands < 2:  # noqa: PLR2004
        return VerificationReport(spec.label, spec.strands, 0)
    relations = vbn_relations(spec.strands)
    failures: list[RelationFailure] = []
    for relation in relations:
        lhs = braid_image(spec, relation.lhs)
        rhs = braid_image(spec, relation.rhs)
        failures.extend(
            RelationFailure(relation, gen, left, right)
            for gen, left, right in zip(
                spec.context.generators(), lhs.images, rhs.images, strict=True
            )
            if left != right
        )
    if failures:
        logger.warning(
            "%s fails %d generator checks on %d strands",
            spec.label,
            len(failures),
            spec.strands,
        )
    return VerificationReport(spec.label, spec.strands, len(relations), failures)


def conjugate_representation(
    spec: RepresentationSpec,
    phi: Endomap,
    phi_inv: Endomap,
    name: str | None = None,
) -> RepresentationSpec:
    """Return the representation beta -> phi^-1 . spec(beta) . phi."""
    if phi.context != spec.context or phi_inv.context != spec.context:
        msg = "Conjugator context differs from the representation context"
        raise ConjugatorError(msg)
    if not verify_inverse_pair(phi, phi_inv):
        msg = "Conjugator and its proposed inverse do not compose to the identity"
        raise ConjugatorError(msg)
    images = {
        letter: compose(compose(phi, image), phi_inv)
        for letter, image in spec.images.items()
    }
    return RepresentationSpec(
        name or f"{spec.name}^phi", spec.parameters, spec.strands, spec.context, images
    )


def is_virtually_symmetric(spec: RepresentationSpec) -> bool:
    """Check whether every rho_i acts by permuting generators."""
    return all(
        is_generator_permutation(image)
        for letter, image in spec.images.items()
        if letter.kind is LetterKind.RHO
    )


def equivalent_by_standard_conjugator(name: str, n: int) -> bool:
    """Check that conjugating a base family gives exactly its tilde partner."""
    base = get_representation(name, n=n)
    tilde = get_representation(tilde_name(name), base.parameters, n)
    phi, phi_inv = standard_conjugator(name, n)
    conjugated = conjugate_representation(base, phi, phi_inv, tilde.name)
    return dict(conjugated.images) == dict(tilde.images)


def apply_braid(spec: RepresentationSpec, braid: BraidWord, word: Word) -> Word:
    """Apply the image of a braid to a word."""
    return apply(braid_image(spec, braid), word)
