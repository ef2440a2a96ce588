"""Fixtures for the command line and cross-package tests."""

from collections.abc import Callable
from pathlib import Path

import pytest

type WriteInput = Callable[[str, str], Path]


@pytest.fixture
def write_input(tmp_path: Path) -> WriteInput:
    """Return a helper writing text to a file with the given name under tmp_path."""

    def write(name: str, text: str) -> Path:
        path = tmp_path / name
        path.write_text(text)
        return path

    return write
