"""Marked Gauss diagrams and their line-oriented text format.

Circles and event positions are 0-based in the data model; the text format
numbers circles from 1.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Final

if TYPE_CHECKING:
    from collections.abc import Iterator, Mapping


class GaussCodeError(ValueError):
    """Malformed marked Gauss code or inconsistent diagram."""


class ConnectedSumError(ValueError):
    """Connected sum requested at an invalid circle or gap."""


@dataclass(frozen=True)
class Tail:
    """Tail of an arrow."""

    arrow: int


@dataclass(frozen=True)
class Head:
    """Head of an arrow."""

    arrow: int


@dataclass(frozen=True)
class Node:
    """A signed node."""

    sign: int


type Event = Tail | Head | Node
type Circle = tuple[Event, ...]


@dataclass(frozen=True)
class Arrow:
    """Sign and endpoint circles of an arrow."""

    sign: int
    tail_circle: int
    head_circle: int

    @property
    def is_chord(self) -> bool:
        """Head and tail on the same circle."""
        return self.tail_circle == self.head_circle


@dataclass(frozen=True)
class MarkedGaussDiagram:
    """Circles of events plus the arrow table; each circle starts at its base point."""

    circles: tuple[Circle, ...]
    arrows: Mapping[int, Arrow] = field(default_factory=dict)

    def __post_init__(self) -> None:
        """Check every arrow has one tail and one head where its table entry says."""
        if not self.circles:
            msg = "A diagram needs at least one circle"
            raise GaussCodeError(msg)
        tails: dict[int, int] = {}
        heads: dict[int, int] = {}
        for index, circle in enumerate(self.circles):
            for event in circle:
                match event:
                    case Tail(arrow):
                        seen = tails
                    case Head(arrow):
                        seen = heads
                    case Node(sign):
                        _check_sign(sign)
                        continue
                if arrow in seen:
                    msg = f"Arrow {arrow} has two {type(event).__name__.lower()}s"
                    raise GaussCodeError(msg)
                seen[arrow] = index
        for arrow_id, arrow in self.arrows.items():
            _check_sign(arrow.sign)
            if (tails.get(arrow_id), heads.get(arrow_id)) != (
                arrow.tail_circle,
                arrow.head_circle,
            ):
                msg = f"Arrow {arrow_id} endpoints do not match its table entry"
                raise GaussCodeError(msg)
        dangling = (set(tails) | set(heads)) - set(self.arrows)
        if dangling:
            msg = f"Arrows {sorted(dangling)} have no table entry"
            raise GaussCodeError(msg)

    @classmethod
    def trivial(cls, circles: int = 1) -> MarkedGaussDiagram:
        """Return the diagram with empty circles and no arrows or nodes."""
        return cls(((),) * circles)

    def locate(self, arrow: int) -> tuple[tuple[int, int], tuple[int, int]]:
        """Return ((circle, position) of the tail, (circle, position) of the head)."""
        entry = self.arrows[arrow]
        tail = self.circles[entry.tail_circle].index(Tail(arrow))
        head = self.circles[entry.head_circle].index(Head(arrow))
        return (entry.tail_circle, tail), (entry.head_circle, head)

    def next_arrow_id(self) -> int:
        """Return an unused arrow id."""
        return max(self.arrows, default=0) + 1

    def nodes(self) -> Iterator[tuple[int, int, int]]:
        """Yield (circle, position, sign) for every node."""
        for c, circle in enumerate(self.circles):
            for p, event in enumerate(circle):
                if isinstance(event, Node):
                    yield c, p, event.sign

    def event_sign(self, event: Event) -> int:
        """Return the sign of a node or of the arrow an endpoint belongs to."""
        if isinstance(event, Node):
            return event.sign
        return self.arrows[event.arrow].sign


def _check_sign(sign: int) -> None:
    if sign not in {1, -1}:
        msg = f"Sign must be +1 or -1, got {sign}"
        raise GaussCodeError(msg)


LINE: Final = re.compile(r"^circle\s+(\d+)\s*:(.*)$")
EVENT: Final = re.compile(r"^(?:([TH])(\d+)|N)([+-])$")


def parse_gauss_code(text: str) -> MarkedGaussDiagram:
    """Parse ``circle k: T1+ N- H1+`` lines; blank and ``#`` lines are skipped."""
    circles: list[Circle] = []
    signs: dict[int, int] = {}
    tail_circle: dict[int, int] = {}
    head_circle: dict[int, int] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        match = LINE.match(line)
        if match is None:
            msg = f"Expected 'circle <k>: ...', got {line!r}"
            raise GaussCodeError(msg)
        number, body = int(match.group(1)), match.group(2)
        if number != len(circles) + 1:
            msg = f"Circle {number} out of order, expected {len(circles) + 1}"
            raise GaussCodeError(msg)
        events: list[Event] = []
        for token in body.split():
            event_match = EVENT.match(token)
            if event_match is None:
                msg = f"Invalid event token {token!r}"
                raise GaussCodeError(msg)
            kind, ident, mark = event_match.groups()
            sign = 1 if mark == "+" else -1
            if kind is None:
                events.append(Node(sign))
                continue
            arrow = int(ident)
            if arrow < 1:
                msg = f"Arrow ids must be positive, got {token!r}"
                raise GaussCodeError(msg)
            if signs.setdefault(arrow, sign) != sign:
                msg = f"Arrow {arrow} has different signs at its endpoints"
                raise GaussCodeError(msg)
            seen = tail_circle if kind == "T" else head_circle
            if arrow in seen:
                end = "tail" if kind == "T" else "head"
                msg = f"Arrow {arrow} has a duplicate {end}"
                raise GaussCodeError(msg)
            seen[arrow] = len(circles)
            events.append(Tail(arrow) if kind == "T" else Head(arrow))
        circles.append(tuple(events))
    if not circles:
        msg = "Gauss code contains no circle"
        raise GaussCodeError(msg)
    dangling = set(tail_circle) ^ set(head_circle)
    if dangling:
        msg = f"Dangling arrows without both endpoints: {sorted(dangling)}"
        raise GaussCodeError(msg)
    arrows = {
        arrow: Arrow(signs[arrow], tail_circle[arrow], head_circle[arrow])
        for arrow in sorted(signs)
    }
    return MarkedGaussDiagram(tuple(circles), arrows)


def format_event(d: MarkedGaussDiagram, event: Event) -> str:
    """Render one event token."""
    mark = "+" if d.event_sign(event) > 0 else "-"
    match event:
        case Tail(arrow):
            return f"T{arrow}{mark}"
        case Head(arrow):
            return f"H{arrow}{mark}"
        case Node():
            return f"N{mark}"


def format_gauss_code(d: MarkedGaussDiagram) -> str:
    """Render the canonical text form, one line per circle."""
    lines = []
    for number, circle in enumerate(d.circles, 1):
        body = " ".join(format_event(d, event) for event in circle)
        lines.append(f"circle {number}: {body}".rstrip())
    return "\n".join(lines)


def reverse(d: MarkedGaussDiagram) -> MarkedGaussDiagram:
    """Reverse every circle and negate all arrow and node signs."""
    circles = tuple(
        tuple(
            Node(-event.sign) if isinstance(event, Node) else event
            for event in reversed(circle)
        )
        for circle in d.circles
    )
    arrows = {
        arrow_id: Arrow(-arrow.sign, arrow.tail_circle, arrow.head_circle)
        for arrow_id, arrow in d.arrows.items()
    }
    return MarkedGaussDiagram(circles, arrows)


def connected_sum(
    d1: MarkedGaussDiagram,
    circle1: int,
    gap1: int,
    d2: MarkedGaussDiagram,
    circle2: int,
    gap2: int,
) -> MarkedGaussDiagram:
    """Splice circle2 of d2 into circle1 of d1 at the given gaps.

    Gap g of a circle lies before its event g; the merged circle starts at the
    splice point and keeps the index of circle1. Arrow ids of d2 are shifted
    past those of d1 and the other circles of d2 are appended.
    """
    for d, c, gap, label in ((d1, circle1, gap1, "left"), (d2, circle2, gap2, "right")):
        if not 0 <= c < len(d.circles):
            msg = f"The {label} diagram has no circle {c + 1}"
            raise ConnectedSumError(msg)
        if not 0 <= gap <= len(d.circles[c]):
            msg = f"Gap {gap} is not between events of {label} circle {c + 1}"
            raise ConnectedSumError(msg)
    shift = max(d1.arrows, default=0)
    first, second = d1.circles[circle1], d2.circles[circle2]
    others = [c for c in range(len(d2.circles)) if c != circle2]
    placement = {circle2: circle1} | {
        c: len(d1.circles) + rank for rank, c in enumerate(others)
    }

    def moved(event: Event) -> Event:
        match event:
            case Tail(arrow):
                return Tail(arrow + shift)
            case Head(arrow):
                return Head(arrow + shift)
            case Node():
                return event

    rotated = second[gap2:] + second[:gap2]
    merged = first[gap1:] + first[:gap1] + tuple(map(moved, rotated))
    circles = list(d1.circles)
    circles[circle1] = merged
    circles.extend(tuple(map(moved, d2.circles[c])) for c in others)
    arrows = dict(d1.arrows) | {
        arrow_id + shift: Arrow(
            arrow.sign, placement[arrow.tail_circle], placement[arrow.head_circle]
        )
        for arrow_id, arrow in d2.arrows.items()
    }
    return MarkedGaussDiagram(tuple(circles), arrows)


def node_invariants(d: MarkedGaussDiagram) -> tuple[int, int, int]:
    """Return (number of nodes, sum of node signs, product of node signs)."""
    signs = [sign for _, _, sign in d.nodes()]
    return len(signs), sum(signs), math.prod(signs)


def rotate(d: MarkedGaussDiagram, circle: int, shift: int) -> MarkedGaussDiagram:
    """Move the base point of a circle forward by shift events."""
    circles = list(d.circles)
    events = circles[circle]
    if events:
        k = shift % len(events)
        circles[circle] = events[k:] + events[:k]
    return MarkedGaussDiagram(tuple(circles), d.arrows)


def equivalent_up_to_rotation(d1: MarkedGaussDiagram, d2: MarkedGaussDiagram) -> bool:
    """Compare diagrams ignoring base points."""
    if dict(d1.arrows) != dict(d2.arrows) or len(d1.circles) != len(d2.circles):
        return False
    for a, b in zip(d1.circles, d2.circles, strict=True):
        if len(a) != len(b):
            return False
        if a and not any(a[k:] + a[:k] == b for k in range(len(a))):
            return False
    return True
