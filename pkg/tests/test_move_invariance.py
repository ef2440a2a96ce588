"""Every shipped move keeps the node invariants and the group of a diagram."""

from hypothesis import given, settings
from hypothesis import strategies as st

from diagrams import (
    MarkedGaussDiagram,
    MoveKind,
    MoveSpec,
    apply_move,
    find_moves,
    node_invariants,
)
from presentations import (
    Abelianization,
    SearchLimitError,
    abelianization,
    hom_count,
    presentation_of_diagram,
    simplify,
    symmetric_group,
)
from strategies import marked_diagrams, signs

S3 = symmetric_group(3)
S4 = symmetric_group(4)
S4_LIMIT = 200_000

type Fingerprint = tuple[tuple[int, int, int], Abelianization, int, int | None]


def fingerprint(d: MarkedGaussDiagram) -> Fingerprint:
    """Node invariants, abelianization and counts into S3 and, when small enough, S4."""
    p = simplify(presentation_of_diagram(d))
    try:
        into_s4: int | None = hom_count(p, S4, limit=S4_LIMIT)
    except SearchLimitError:
        into_s4 = None
    return node_invariants(d), abelianization(p), hom_count(p, S3), into_s4


def same_group(before: Fingerprint, after: Fingerprint) -> bool:
    if before[:3] != after[:3]:
        return False
    return None in (before[3], after[3]) or before[3] == after[3]


@st.composite
def insertions(draw: st.DrawFn, d: MarkedGaussDiagram) -> MoveSpec:
    """An R1 or R2 insertion at random gaps of d."""
    circle = draw(st.integers(0, len(d.circles) - 1))
    size = len(d.circles[circle])
    gap = draw(st.integers(0, size))
    tail_circle = draw(st.integers(0, len(d.circles) - 1))
    # Gaps 0 and size are the same spot on a circle; tails go elsewhere.
    gaps = [
        g
        for g in range(len(d.circles[tail_circle]) + 1)
        if tail_circle != circle or (size and g % size != gap % size)
    ]
    if not gaps or draw(st.booleans()):
        return MoveSpec(
            MoveKind.R1_ADD,
            circle=circle,
            position=gap,
            sign=draw(signs),
            tail_first=draw(st.booleans()),
        )
    return MoveSpec(
        MoveKind.R2_ADD,
        circle=circle,
        position=gap,
        sign=draw(signs),
        tail_circle=tail_circle,
        tail_position=draw(st.sampled_from(gaps)),
        reversed_tails=draw(st.booleans()),
    )


@st.composite
def grown_diagrams(draw: st.DrawFn) -> tuple[MarkedGaussDiagram, MarkedGaussDiagram]:
    """A random diagram and the same diagram after one insertion."""
    d = draw(marked_diagrams(max_circles=2, max_arrows=3, max_nodes=2))
    move = draw(insertions(d))
    return d, apply_move(d, move)


@given(grown_diagrams())
@settings(max_examples=200, deadline=None)
def test_found_moves_keep_invariants(
    pair: tuple[MarkedGaussDiagram, MarkedGaussDiagram],
) -> None:
    d, grown = pair
    expected = fingerprint(grown)
    assert same_group(fingerprint(d), expected)
    moves = find_moves(grown)
    assert moves
    for move in moves:
        assert same_group(fingerprint(apply_move(grown, move)), expected), move
