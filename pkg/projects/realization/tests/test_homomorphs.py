"""Tests for realized homomorphisms and their behaviour under sum and reversal."""

import pytest

from core_words import Generator, Word, WordContext
from diagrams import format_gauss_code, parse_gauss_code
from presentations import symmetric_group
from realization import (
    HomomorphError,
    connected_sum_images,
    longitude_image,
    realize_homomorph,
    relator_failures,
    reverse_homomorph,
    reversed_images,
    sum_homomorph,
)

S3 = symmetric_group(3)
CTX = WordContext(2, 1)
MU = S3.element("(1 2 3)")
NU = S3.element("(1 3 2)")


def words(ctx: WordContext, *texts: str) -> list[Word]:
    return [Word.parse(text, ctx) for text in texts]


def commuting_images() -> dict[Generator, int]:
    return {CTX.x(1): MU, CTX.x(2): MU, CTX.v(1): NU}


def test_realize_without_group() -> None:
    h = realize_homomorph(words(CTX, "x2", "v1"))
    assert format_gauss_code(h.diagram) == "circle 1: N+ H1+ T1+ N- N+"
    assert (h.images, h.longitude) == (None, None)


def test_realize_with_images() -> None:
    h = realize_homomorph(words(CTX, "x2", "v1"), S3, commuting_images())
    assert h.images is not None
    assert set(h.images.values()) == {MU, NU}
    assert h.longitude == NU


def test_node_chain_in_s3() -> None:
    ctx = WordContext(3, 1)
    swap = S3.element("(1 2)")
    images = {ctx.x(1): swap, ctx.v(1): MU}
    images[ctx.x(2)] = S3.conjugate(swap, MU)
    images[ctx.x(3)] = S3.conjugate(images[ctx.x(2)], MU)
    h = realize_homomorph(words(ctx, "v1", "v1", "v1"), S3, images)
    assert format_gauss_code(h.diagram) == "circle 1: N+ N+ N+"
    assert h.longitude == S3.identity


def test_self_reference_in_s3() -> None:
    ctx = WordContext(1, 1)
    h = realize_homomorph(
        words(ctx, "x1"), S3, {ctx.x(1): S3.element("(1 2)"), ctx.v(1): MU}
    )
    assert format_gauss_code(h.diagram) == "circle 1: T1+ N- N+ H1+"
    assert h.longitude == S3.identity


def test_images_must_follow_the_chain() -> None:
    ctx = WordContext(3, 1)
    swap = S3.element("(1 2)")
    images = {ctx.x(1): swap, ctx.x(2): swap, ctx.x(3): swap, ctx.v(1): MU}
    with pytest.raises(HomomorphError):
        realize_homomorph(words(ctx, "v1", "v1", "v1"), S3, images)


def test_realize_homomorph_rejects_inputs() -> None:
    with pytest.raises(HomomorphError):
        realize_homomorph([])
    with pytest.raises(HomomorphError):
        realize_homomorph(words(WordContext(3, 1), "v1", "v1"))
    with pytest.raises(HomomorphError):
        realize_homomorph(words(CTX, "x2", "v1"), S3, {CTX.x(1): MU})


def test_relator_failures() -> None:
    d = parse_gauss_code("circle 1: N-")
    ctx = WordContext(1, 1)
    assert relator_failures(d, {ctx.x(1): MU, ctx.v(1): MU}, S3) == []
    failures = relator_failures(d, {ctx.x(1): S3.element("(1 2)"), ctx.v(1): MU}, S3)
    assert [str(w) for w in failures] == ["x1^-1 v1 x1 v1^-1"]


def test_reverse_inverts_longitude() -> None:
    h = realize_homomorph(words(CTX, "x2", "v1"), S3, commuting_images())
    assert h.images is not None
    reversed_d, carried = reverse_homomorph(h.diagram, h.images, S3)
    assert format_gauss_code(reversed_d) == "circle 1: N- N+ T1- H1- N-"
    assert longitude_image(reversed_d, carried, S3) == S3.inv(NU)


def test_reversed_images_follow_arcs() -> None:
    d = parse_gauss_code("circle 1: N+ N-")
    ctx = WordContext(2, 1)
    images = {ctx.x(1): 1, ctx.x(2): 2, ctx.v(1): 3}
    assert reversed_images(d, images) == images
    d = parse_gauss_code("circle 1: N+ N- N+")
    ctx = WordContext(3, 1)
    images = {ctx.x(1): 1, ctx.x(2): 2, ctx.x(3): 3, ctx.v(1): 0}
    swapped = {ctx.x(1): 1, ctx.x(2): 3, ctx.x(3): 2, ctx.v(1): 0}
    assert reversed_images(d, images) == swapped


def test_connected_sum_multiplies_longitudes() -> None:
    h = realize_homomorph(words(CTX, "x2", "v1"), S3, commuting_images())
    assert h.images is not None
    assert h.longitude is not None
    total, combined = sum_homomorph(h.diagram, h.images, h.diagram, h.images, S3)
    assert len(total.circles[0]) == 10
    assert longitude_image(total, combined, S3) == S3.mul(h.longitude, h.longitude)


def test_connected_sum_needs_matching_base_images() -> None:
    d = parse_gauss_code("circle 1: N+")
    ctx = WordContext(1, 1)
    with pytest.raises(HomomorphError):
        connected_sum_images(
            d, {ctx.x(1): MU, ctx.v(1): 0}, d, {ctx.x(1): NU, ctx.v(1): 0}
        )
    left = {ctx.x(1): MU, ctx.v(1): MU}
    with pytest.raises(HomomorphError):
        connected_sum_images(d, left, d, {ctx.x(1): MU, ctx.v(1): S3.identity})
    two = parse_gauss_code("circle 1: N+\ncircle 2: N-")
    with pytest.raises(HomomorphError):
        connected_sum_images(two, {}, d, {})
