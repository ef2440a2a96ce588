"""Finite groups as multiplication tables."""

from __future__ import annotations

import re
import tomllib
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from math import factorial
from pathlib import Path
from typing import TYPE_CHECKING, Final

from sympy.combinatorics import Permutation
from sympy.combinatorics.named_groups import SymmetricGroup

if TYPE_CHECKING:
    from collections.abc import Sequence

CYCLE: Final = re.compile(r"\(([^()]*)\)")
NAMED: Final = re.compile(r"^s(\d+)$")

# Largest group built as a full multiplication table.
MAX_ORDER: Final = 720

type Table = tuple[tuple[int, ...], ...]


class GroupTableError(ValueError):
    """Multiplication table is not a group, or a group name is unknown."""


@dataclass(frozen=True)
class FiniteGroup:
    """A group on elements 0..order-1 with table[a][b] = a * b."""

    name: str
    table: Table
    labels: tuple[str, ...]
    identity: int
    inverses: tuple[int, ...]
    degree: int | None = field(default=None, compare=False)

    @property
    def order(self) -> int:
        """Return the number of elements."""
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        """Return a * b."""
        return self.table[a][b]

    def inv(self, a: int) -> int:
        """Return a^-1."""
        return self.inverses[a]

    def power(self, a: int, exp: int) -> int:
        """Return a^exp."""
        base = a if exp >= 0 else self.inverses[a]
        result = self.identity
        for _ in range(abs(exp)):
            result = self.table[result][base]
        return result

    def conjugate(self, a: int, b: int) -> int:
        """Return b^-1 a b."""
        return self.table[self.table[self.inverses[b]][a]][b]

    def commute(self, a: int, b: int) -> bool:
        """Return whether a * b = b * a."""
        return self.table[a][b] == self.table[b][a]

    @cached_property
    def conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
        """Return the conjugacy classes, each sorted, ordered by smallest element."""
        seen: set[int] = set()
        classes: list[tuple[int, ...]] = []
        for a in range(self.order):
            if a in seen:
                continue
            members = tuple(sorted({self.conjugate(a, b) for b in range(self.order)}))
            seen.update(members)
            classes.append(members)
        return tuple(classes)

    def element(self, label: str) -> int:
        """Return the element with the given label.

        Permutation groups also accept any 1-based cycle notation such as
        `(1 2)(3 4)` or `(2 3 1)`.
        """
        text = label.strip()
        if text in self.labels:
            return self.labels.index(text)
        if self.degree is not None:
            label = _permutation_label(_parse_cycles(text, self.degree))
            return self.labels.index(label)
        msg = f"No element {label!r} in {self.name}"
        raise GroupTableError(msg)

    def label(self, a: int) -> str:
        """Return the label of an element."""
        return self.labels[a]


def _permutation_label(perm: Permutation) -> str:
    cycles = perm.cyclic_form
    if not cycles:
        return "()"
    return "".join(
        "(" + " ".join(str(point + 1) for point in cycle) + ")" for cycle in cycles
    )


def _parse_cycles(text: str, degree: int) -> Permutation:
    cycles: list[list[int]] = []
    for body in CYCLE.findall(text):
        try:
            points = [int(token) - 1 for token in body.split()]
        except ValueError as error:
            msg = f"Invalid cycle {body!r}"
            raise GroupTableError(msg) from error
        in_range = all(0 <= point < degree for point in points)
        if not in_range or len(set(points)) != len(points):
            msg = f"Invalid cycle {body!r} for degree {degree}"
            raise GroupTableError(msg)
        if len(points) > 1:
            cycles.append(points)
    if not cycles and CYCLE.sub("", text).strip():
        msg = f"Invalid permutation {text!r}"
        raise GroupTableError(msg)
    perm = Permutation(list(range(degree)))
    for cycle in cycles:
        perm *= Permutation([cycle], size=degree)
    return perm


def symmetric_group(degree: int) -> FiniteGroup:
    """Return S_degree with elements labeled in 1-based cycle notation."""
    if factorial(degree) > MAX_ORDER:
        msg = (
            f"S{degree} has {factorial(degree)} elements, "
            f"more than the {MAX_ORDER} a multiplication table is built for"
        )
        raise GroupTableError(msg)
    elements = sorted(SymmetricGroup(degree).elements, key=lambda perm: perm.array_form)
    index = {tuple(perm.array_form): i for i, perm in enumerate(elements)}
    table = tuple(
        tuple(index[tuple((a * b).array_form)] for b in elements) for a in elements
    )
    identity = index[tuple(range(degree))]
    inverses = tuple(index[tuple((~perm).array_form)] for perm in elements)
    return FiniteGroup(
        name=f"S{degree}",
        table=table,
        labels=tuple(_permutation_label(perm) for perm in elements),
        identity=identity,
        inverses=inverses,
        degree=degree,
    )


def _is_identity(rows: Table, e: int) -> bool:
    return rows[e] == tuple(range(len(rows))) and all(
        row[e] == a for a, row in enumerate(rows)
    )


def from_table(
    table: Sequence[Sequence[int]],
    labels: Sequence[str] | None = None,
    name: str = "table",
) -> FiniteGroup:
    """Build a group from a 0-based multiplication table, checking the group axioms."""
    order = len(table)
    rows = tuple(tuple(row) for row in table)
    if order == 0 or any(len(row) != order for row in rows):
        msg = "Multiplication table must be a non-empty square"
        raise GroupTableError(msg)
    if order > MAX_ORDER:
        msg = f"Table of order {order} is larger than {MAX_ORDER}"
        raise GroupTableError(msg)
    if any(not 0 <= entry < order for row in rows for entry in row):
        msg = f"Table entries must lie in 0..{order - 1}"
        raise GroupTableError(msg)
    identity = next((e for e in range(order) if _is_identity(rows, e)), None)
    if identity is None:
        msg = "Table has no identity element"
        raise GroupTableError(msg)
    inverses: list[int] = []
    for a in range(order):
        inverse = next((b for b in range(order) if rows[a][b] == identity), None)
        if inverse is None or rows[inverse][a] != identity:
            msg = f"Element {a} has no inverse"
            raise GroupTableError(msg)
        inverses.append(inverse)
    for a, b, c in product(range(order), repeat=3):
        if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
            msg = f"Table is not associative at ({a}, {b}, {c})"
            raise GroupTableError(msg)
    names = tuple(labels) if labels is not None else tuple(map(str, range(order)))
    if len(names) != order or len(set(names)) != order:
        msg = "Labels must be distinct, one per element"
        raise GroupTableError(msg)
    return FiniteGroup(name, rows, names, identity, tuple(inverses))


def load_table(path: Path) -> FiniteGroup:
    """Read a TOML file with `table = [[...], ...]` and optional `labels = [...]`."""
    with path.open("rb") as file:
        data = tomllib.load(file)
    if "table" not in data:
        msg = f"{path} has no 'table' entry"
        raise GroupTableError(msg)
    return from_table(data["table"], data.get("labels"), name=path.stem)


def named_group(text: str) -> FiniteGroup:
    """Resolve `s3` to `s6` or `table:<file>`."""
    if text.startswith("table:"):
        return load_table(Path(text.removeprefix("table:")))
    match = NAMED.match(text.strip().lower())
    if match is None or int(match.group(1)) < 1:
        msg = f"Unknown group {text!r}; expected s<k> or table:<file>"
        raise GroupTableError(msg)
    return symmetric_group(int(match.group(1)))
