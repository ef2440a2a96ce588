"""Hypothesis strategies shared by the workspace test suites."""

from hypothesis import strategies as st

from braid_reps import BraidLetter, BraidWord, rho, sigma
from diagrams import Arrow, Head, MarkedGaussDiagram, Node, Tail

signs = st.sampled_from([1, -1])


@st.composite
def marked_diagrams(
    draw: st.DrawFn,
    max_circles: int = 2,
    max_arrows: int = 4,
    max_nodes: int = 3,
) -> MarkedGaussDiagram:
    """Random diagrams with arrows and nodes inserted at random positions."""
    count = draw(st.integers(1, max_circles))
    circles: list[list[Tail | Head | Node]] = [[] for _ in range(count)]
    arrows: dict[int, Arrow] = {}
    for arrow in range(1, draw(st.integers(0, max_arrows)) + 1):
        tail = draw(st.integers(0, count - 1))
        head = draw(st.integers(0, count - 1))
        circles[tail].insert(draw(st.integers(0, len(circles[tail]))), Tail(arrow))
        circles[head].insert(draw(st.integers(0, len(circles[head]))), Head(arrow))
        arrows[arrow] = Arrow(draw(signs), tail, head)
    for _ in range(draw(st.integers(0, max_nodes))):
        c = draw(st.integers(0, count - 1))
        circles[c].insert(draw(st.integers(0, len(circles[c]))), Node(draw(signs)))
    return MarkedGaussDiagram(tuple(map(tuple, circles)), arrows)


@st.composite
def braid_words(
    draw: st.DrawFn, max_strands: int = 3, max_length: int = 4
) -> BraidWord:
    """Random virtual braid words on 2..max_strands strands."""
    n = draw(st.integers(2, max_strands))
    letters: list[BraidLetter] = []
    for _ in range(draw(st.integers(0, max_length))):
        index = draw(st.integers(1, n - 1))
        if draw(st.booleans()):
            letters.append(sigma(index, draw(signs)))
        else:
            letters.append(rho(index))
    return BraidWord(n, tuple(letters))
