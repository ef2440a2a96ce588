"""Reading diagrams, presentations and braids from files or stdin."""

from __future__ import annotations

import logging
import re
from enum import StrEnum
from pathlib import Path
from sys import stdin
from typing import TYPE_CHECKING, Final

from braid_reps import BraidWord, parse_braid
from diagrams import MarkedGaussDiagram, parse_gauss_code
from presentations import Presentation, parse_presentation

if TYPE_CHECKING:
    from collections.abc import Iterator

logger = logging.getLogger(__name__)

HEADER: Final = re.compile(r"^n\s*=\s*(\d+)$")

type Loaded = MarkedGaussDiagram | Presentation | BraidWord


class InputError(ValueError):
    """Input that is none of the known kinds."""


class InputKind(StrEnum):
    """The accepted input kinds, named by file suffix."""

    GAUSS = "gauss"
    PRESENTATION = "pres"
    BRAID = "braid"


def _content_lines(text: str) -> Iterator[str]:
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            yield line


def read_text(path: Path | None) -> str:
    """Read a file, or stdin when path is None or `-`."""
    if path is None or str(path) == "-":
        return stdin.read()
    return path.read_text()


def sniff(text: str) -> InputKind:
    """Tell the input kind from the first content line."""
    first = next(_content_lines(text), "")
    if first.startswith("circle"):
        return InputKind.GAUSS
    if first.startswith("gens:"):
        return InputKind.PRESENTATION
    if HEADER.match(first):
        return InputKind.BRAID
    msg = "Input is not a Gauss code, a presentation or a braid file"
    raise InputError(msg)


def parse_braid_file(text: str) -> BraidWord:
    """Parse an `n=<strands>` header followed by braid tokens."""
    lines = list(_content_lines(text))
    header = HEADER.match(lines[0]) if lines else None
    if header is None:
        msg = "Braid file must start with an 'n=<strands>' line"
        raise InputError(msg)
    return parse_braid(" ".join(lines[1:]), int(header.group(1)))


def format_braid_file(word: BraidWord) -> str:
    """Render a braid in the file format of parse_braid_file."""
    return f"n={word.strand_count}\n{word}".rstrip()


def load_input(path: Path | None) -> Loaded:
    """Read and parse an input, by suffix when there is one."""
    text = read_text(path)
    suffix = path.suffix.lstrip(".") if path is not None else ""
    kind = InputKind(suffix) if suffix in InputKind else sniff(text)
    logger.debug("Reading %s input from %s", kind, path or "stdin")
    match kind:
        case InputKind.GAUSS:
            return parse_gauss_code(text)
        case InputKind.PRESENTATION:
            return parse_presentation(text)
        case InputKind.BRAID:
            return parse_braid_file(text)


def load_diagram(path: Path | None) -> MarkedGaussDiagram:
    """Load an input that must be a marked Gauss diagram."""
    loaded = load_input(path)
    if not isinstance(loaded, MarkedGaussDiagram):
        msg = "Expected a marked Gauss diagram"
        raise InputError(msg)
    return loaded


def load_presentation(path: Path | None) -> Presentation:
    """Load an input that must be a presentation."""
    loaded = load_input(path)
    if not isinstance(loaded, Presentation):
        msg = "Expected a presentation"
        raise InputError(msg)
    return loaded


def load_braid(path: Path | None) -> BraidWord:
    """Load an input that must be a braid."""
    loaded = load_input(path)
    if not isinstance(loaded, BraidWord):
        msg = "Expected a braid file"
        raise InputError(msg)
    return loaded
