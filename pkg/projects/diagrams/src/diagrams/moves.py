"""Marked Reidemeister moves on marked Gauss diagrams.

Moves are looked up in a registry keyed by kind, so further moves can be
plugged in with ``register_move`` without touching the engine.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, fields
from enum import StrEnum
from itertools import permutations
from typing import TYPE_CHECKING

from diagrams.model import Arrow, Event, Head, MarkedGaussDiagram, Node, Tail

if TYPE_CHECKING:
    from collections.abc import Callable, Iterator

logger = logging.getLogger(__name__)


class MoveError(ValueError):
    """Move does not match the diagram at the given location."""


class MoveKind(StrEnum):
    """The shipped move families."""

    R1_ADD = "r1-add"
    R1_REMOVE = "r1-remove"
    R2_ADD = "r2-add"
    R2_REMOVE = "r2-remove"
    R3 = "r3"
    NODE_CHORD_SLIDE = "node-chord-slide"
    NODE_NODE_SLIDE = "node-node-slide"


@dataclass(frozen=True)
class MoveSpec:
    """A move kind plus the location parameters it reads.

    Circles are 0-based; ``position`` and ``tail_position`` are event
    positions or, for insertions, gaps (gap g lies before event g).
    """

    kind: str
    arrows: tuple[int, ...] = ()
    circle: int = 0
    position: int = 0
    sign: int = 1
    tail_circle: int | None = None
    tail_position: int = 0
    tail_first: bool = True
    reversed_tails: bool = False
    forward: bool = True


type MoveRule = Callable[[MarkedGaussDiagram, MoveSpec], MarkedGaussDiagram]
type MoveFinder = Callable[[MarkedGaussDiagram], Iterator[MoveSpec]]


@dataclass(frozen=True)
class RegisteredMove:
    """Rewrite rule and optional enumerator of its applicable instances."""

    rule: MoveRule
    finder: MoveFinder | None = None


MOVES: dict[str, RegisteredMove] = {}


def register_move(
    kind: str, finder: MoveFinder | None = None
) -> Callable[[MoveRule], MoveRule]:
    """Register a rewrite rule for a move kind."""

    def decorator(rule: MoveRule) -> MoveRule:
        MOVES[kind] = RegisteredMove(rule, finder)
        return rule

    return decorator


def apply_move(d: MarkedGaussDiagram, move: MoveSpec) -> MarkedGaussDiagram:
    """Apply a registered move; raise MoveError if its pattern does not match."""
    try:
        registered = MOVES[move.kind]
    except KeyError as error:
        msg = f"Unknown move kind {move.kind!r}; known: {', '.join(MOVES)}"
        raise MoveError(msg) from error
    result = registered.rule(d, move)
    logger.debug("Applied %s", move)
    return result


def find_moves(d: MarkedGaussDiagram) -> list[MoveSpec]:
    """List every removal, R3 and slide instance applicable to d."""
    return [
        move
        for registered in MOVES.values()
        if registered.finder is not None
        for move in registered.finder(d)
    ]


def _arrow(d: MarkedGaussDiagram, move: MoveSpec, count: int) -> list[int]:
    if len(move.arrows) != count:
        msg = f"{move.kind} needs {count} arrow ids, got {len(move.arrows)}"
        raise MoveError(msg)
    missing = [a for a in move.arrows if a not in d.arrows]
    if missing:
        msg = f"Arrows {missing} are not in the diagram"
        raise MoveError(msg)
    if len(set(move.arrows)) != count:
        msg = f"{move.kind} needs distinct arrows"
        raise MoveError(msg)
    return list(move.arrows)


def _follows(
    d: MarkedGaussDiagram, first: tuple[int, int], second: tuple[int, int]
) -> bool:
    """Check that the second event comes right after the first on one circle."""
    if first[0] != second[0]:
        return False
    size = len(d.circles[first[0]])
    return (first[1] + 1) % size == second[1]


def _check_circle(d: MarkedGaussDiagram, circle: int) -> None:
    if not 0 <= circle < len(d.circles):
        msg = f"Diagram has no circle {circle + 1}"
        raise MoveError(msg)


def _check_gap(d: MarkedGaussDiagram, circle: int, gap: int) -> None:
    _check_circle(d, circle)
    if not 0 <= gap <= len(d.circles[circle]):
        msg = f"Gap {gap} out of range on circle {circle + 1}"
        raise MoveError(msg)


def _delete(
    d: MarkedGaussDiagram, doomed: set[tuple[int, int]], arrows: list[int]
) -> MarkedGaussDiagram:
    circles = tuple(
        tuple(event for p, event in enumerate(circle) if (c, p) not in doomed)
        for c, circle in enumerate(d.circles)
    )
    table = {a: entry for a, entry in d.arrows.items() if a not in arrows}
    return MarkedGaussDiagram(circles, table)


def _swap(
    d: MarkedGaussDiagram, pairs: list[tuple[tuple[int, int], tuple[int, int]]]
) -> MarkedGaussDiagram:
    circles = [list(circle) for circle in d.circles]
    for (c1, p1), (c2, p2) in pairs:
        circles[c1][p1], circles[c2][p2] = circles[c2][p2], circles[c1][p1]
    return MarkedGaussDiagram(tuple(map(tuple, circles)), d.arrows)


def _insert(
    d: MarkedGaussDiagram,
    insertions: list[tuple[int, int, tuple[Event, ...]]],
    arrows: dict[int, Arrow],
) -> MarkedGaussDiagram:
    """Insert event runs at gaps of the original sequences, larger gaps first."""
    circles = [list(circle) for circle in d.circles]
    for circle, gap, events in sorted(insertions, key=lambda it: it[1], reverse=True):
        circles[circle][gap:gap] = events
    return MarkedGaussDiagram(tuple(map(tuple, circles)), dict(d.arrows) | arrows)


def _r1_candidates(d: MarkedGaussDiagram) -> Iterator[MoveSpec]:
    for arrow in d.arrows:
        if _r1_match(d, arrow):
            yield MoveSpec(MoveKind.R1_REMOVE, (arrow,))


def _r1_match(d: MarkedGaussDiagram, arrow: int) -> bool:
    tail, head = d.locate(arrow)
    return _follows(d, tail, head) or _follows(d, head, tail)


@register_move(MoveKind.R1_REMOVE, _r1_candidates)
def r1_remove(d: MarkedGaussDiagram, move: MoveSpec) -> MarkedGaussDiagram:
    """Delete a chord whose endpoints are adjacent."""
    (arrow,) = _arrow(d, move, 1)
    if not _r1_match(d, arrow):
        msg = f"Endpoints of arrow {arrow} are not adjacent"
        raise MoveError(msg)
    tail, head = d.locate(arrow)
    return _delete(d, {tail, head}, [arrow])


@register_move(MoveKind.R1_ADD)
def r1_add(d: MarkedGaussDiagram, move: MoveSpec) -> MarkedGaussDiagram:
    """Insert a chord with adjacent endpoints at a gap."""
    _check_gap(d, move.circle, move.position)
    arrow = d.next_arrow_id()
    pair: tuple[Event, ...] = (Tail(arrow), Head(arrow))
    return _insert(
        d,
        [(move.circle, move.position, pair if move.tail_first else pair[::-1])],
        {arrow: Arrow(move.sign, move.circle, move.circle)},
    )


def _r2_match(d: MarkedGaussDiagram, alpha: int, beta: int) -> bool:
    a, b = d.arrows[alpha], d.arrows[beta]
    if a.sign != -b.sign:
        return False
    if (a.tail_circle, a.head_circle) != (b.tail_circle, b.head_circle):
        return False
    (ta, ha), (tb, hb) = d.locate(alpha), d.locate(beta)
    return _follows(d, ha, hb) and (_follows(d, ta, tb) or _follows(d, tb, ta))


def _r2_candidates(d: MarkedGaussDiagram) -> Iterator[MoveSpec]:
    for alpha, beta in permutations(d.arrows, 2):
        if _r2_match(d, alpha, beta):
            yield MoveSpec(MoveKind.R2_REMOVE, (alpha, beta))


@register_move(MoveKind.R2_REMOVE, _r2_candidates)
def r2_remove(d: MarkedGaussDiagram, move: MoveSpec) -> MarkedGaussDiagram:
    """Delete two opposite arrows with heads in order and adjacent tails."""
    alpha, beta = _arrow(d, move, 2)
    if not _r2_match(d, alpha, beta):
        msg = f"Arrows {alpha} and {beta} do not form an R2 pair"
        raise MoveError(msg)
    return _delete(d, {*d.locate(alpha), *d.locate(beta)}, [alpha, beta])


@register_move(MoveKind.R2_ADD)
def r2_add(d: MarkedGaussDiagram, move: MoveSpec) -> MarkedGaussDiagram:
    """Insert an R2 pair with heads at the position and tails at the tail position."""
    tail_circle = move.circle if move.tail_circle is None else move.tail_circle
    _check_gap(d, move.circle, move.position)
    _check_gap(d, tail_circle, move.tail_position)
    alpha = d.next_arrow_id()
    beta = alpha + 1
    tails: tuple[Event, ...] = (Tail(alpha), Tail(beta))
    return _insert(
        d,
        [
            (move.circle, move.position, (Head(alpha), Head(beta))),
            (
                tail_circle,
                move.tail_position,
                tails[::-1] if move.reversed_tails else tails,
            ),
        ],
        {
            alpha: Arrow(move.sign, tail_circle, move.circle),
            beta: Arrow(-move.sign, tail_circle, move.circle),
        },
    )


def _r3_pairs(
    d: MarkedGaussDiagram, alpha: int, beta: int, gamma: int
) -> list[tuple[tuple[int, int], tuple[int, int]]] | None:
    signs = {d.arrows[a].sign for a in (alpha, beta, gamma)}
    if len(signs) != 1:
        return None
    (ta, ha), (tb, hb), (tc, hc) = d.locate(alpha), d.locate(beta), d.locate(gamma)
    for pairs in ([(ta, tb), (ha, tc), (hb, hc)], [(tb, ta), (tc, ha), (hc, hb)]):
        if all(_follows(d, first, second) for first, second in pairs):
            return pairs
    return None


def _r3_candidates(d: MarkedGaussDiagram) -> Iterator[MoveSpec]:
    for triple in permutations(d.arrows, 3):
        if _r3_pairs(d, *triple) is not None:
            yield MoveSpec(MoveKind.R3, triple)


@register_move(MoveKind.R3, _r3_candidates)
def r3(d: MarkedGaussDiagram, move: MoveSpec) -> MarkedGaussDiagram:
    """Swap the three adjacent endpoint pairs of an equal-sign triangle."""
    alpha, beta, gamma = _arrow(d, move, 3)
    pairs = _r3_pairs(d, alpha, beta, gamma)
    if pairs is None:
        msg = f"Arrows {alpha}, {beta}, {gamma} do not form an R3 triangle"
        raise MoveError(msg)
    return _swap(d, pairs)


def _slide_pairs(
    d: MarkedGaussDiagram, arrow: int, *, forward: bool
) -> list[tuple[tuple[int, int], tuple[int, int]]] | None:
    if not d.arrows[arrow].is_chord:
        return None
    (c, t), (_, h) = d.locate(arrow)
    circle = d.circles[c]
    step = -1 if forward else 1
    near_tail, near_head = (t + step) % len(circle), (h + step) % len(circle)
    first, second = circle[near_tail], circle[near_head]
    if not (isinstance(first, Node) and isinstance(second, Node) and first == second):
        return None
    return [((c, near_tail), (c, t)), ((c, near_head), (c, h))]


def _node_chord_candidates(d: MarkedGaussDiagram) -> Iterator[MoveSpec]:
    for arrow in d.arrows:
        for forward in (True, False):
            if _slide_pairs(d, arrow, forward=forward) is not None:
                yield MoveSpec(MoveKind.NODE_CHORD_SLIDE, (arrow,), forward=forward)


@register_move(MoveKind.NODE_CHORD_SLIDE, _node_chord_candidates)
def node_chord_slide(d: MarkedGaussDiagram, move: MoveSpec) -> MarkedGaussDiagram:
    """Slide two equal nodes across both ends of a chord.

    Forward moves nodes sitting just before the tail and just before the head
    to just after them; backward undoes it. This stands in for a node-tail
    swap, which on its own changes the group.
    """
    (arrow,) = _arrow(d, move, 1)
    pairs = _slide_pairs(d, arrow, forward=move.forward)
    if pairs is None:
        msg = f"No equal nodes to slide across arrow {arrow}"
        raise MoveError(msg)
    return _swap(d, pairs)


def _node_pair(d: MarkedGaussDiagram, circle: int, position: int) -> bool:
    events = d.circles[circle]
    if len(events) < 2 or not 0 <= position < len(events):  # noqa: PLR2004
        return False
    nxt = (position + 1) % len(events)
    return isinstance(events[position], Node) and isinstance(events[nxt], Node)


def _node_node_candidates(d: MarkedGaussDiagram) -> Iterator[MoveSpec]:
    for c, events in enumerate(d.circles):
        last = 1 if len(events) == 2 else len(events)  # noqa: PLR2004
        for p in range(last):
            if _node_pair(d, c, p):
                yield MoveSpec(MoveKind.NODE_NODE_SLIDE, circle=c, position=p)


@register_move(MoveKind.NODE_NODE_SLIDE, _node_node_candidates)
def node_node_slide(d: MarkedGaussDiagram, move: MoveSpec) -> MarkedGaussDiagram:
    """Swap two adjacent nodes."""
    _check_circle(d, move.circle)
    if not _node_pair(d, move.circle, move.position):
        msg = (
            f"No adjacent nodes at position {move.position} "
            f"of circle {move.circle + 1}"
        )
        raise MoveError(msg)
    nxt = (move.position + 1) % len(d.circles[move.circle])
    return _swap(d, [((move.circle, move.position), (move.circle, nxt))])


_BOOLEAN = {
    "true": True,
    "yes": True,
    "1": True,
    "false": False,
    "no": False,
    "0": False,
}


def parse_move_spec(text: str) -> MoveSpec:
    """Parse ``<kind> key=value ...`` with 1-based circles.

    Keys: arrows=1,2,3 circle position sign=+|- tail-circle tail-position
    tail-first reversed-tails forward.
    """
    kind, *pairs = text.split()
    if kind not in MOVES:
        msg = f"Unknown move kind {kind!r}; known: {', '.join(MOVES)}"
        raise MoveError(msg)
    values: dict[str, object] = {"kind": kind}
    names = {f.name for f in fields(MoveSpec)}
    for pair in pairs:
        key, sep, raw = pair.partition("=")
        name = key.replace("-", "_")
        if not sep or name not in names or name == "kind":
            msg = f"Invalid move parameter {pair!r}"
            raise MoveError(msg)
        try:
            values[name] = _move_value(name, raw)
        except (KeyError, ValueError) as error:
            msg = f"Invalid value in {pair!r}"
            raise MoveError(msg) from error
    return MoveSpec(**values)  # type: ignore[arg-type]


def _move_value(name: str, raw: str) -> object:
    match name:
        case "arrows":
            return tuple(int(a) for a in raw.split(","))
        case "circle" | "tail_circle":
            return int(raw) - 1
        case "sign":
            return {"+": 1, "-": -1, "1": 1, "-1": -1}[raw]
        case "tail_first" | "reversed_tails" | "forward":
            return _BOOLEAN[raw.lower()]
        case _:
            return int(raw)


def format_move_spec(move: MoveSpec) -> str:
    """Render the non-default parameters of a move as parse_move_spec reads them."""
    default = MoveSpec(move.kind)
    parts = [str(move.kind)]
    for f in fields(MoveSpec):
        value = getattr(move, f.name)
        if f.name == "kind" or value == getattr(default, f.name):
            continue
        key = f.name.replace("_", "-")
        match f.name:
            case "arrows":
                parts.append(f"{key}=" + ",".join(map(str, value)))
            case "circle" | "tail_circle":
                parts.append(f"{key}={value + 1}")
            case "sign":
                parts.append(f"{key}={'+' if value > 0 else '-'}")
            case "tail_first" | "reversed_tails" | "forward":
                parts.append(f"{key}={str(value).lower()}")
            case _:
                parts.append(f"{key}={value}")
    return " ".join(parts)
