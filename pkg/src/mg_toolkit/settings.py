"""Loading the command line settings file."""

from pathlib import Path
from tomllib import load
from typing import TypedDict


class SettingsError(ValueError):
    """Settings file lacks a section."""


class SearchSettings(TypedDict):
    """Homomorphism search bounds."""

    limit: int
    simplify: bool
    jobs: int


class SimplifySettings(TypedDict):
    """Tietze simplification bounds."""

    max_length: int


class PeripheralSettings(TypedDict):
    """Finite quotients used for commutation checks."""

    quotients: list[str]


class Settings(TypedDict):
    """The whole settings file."""

    search: SearchSettings
    simplify: SimplifySettings
    peripheral: PeripheralSettings


SETTINGS_FILE = Path(__file__).parent / "settings.toml"


def load_settings(path: Path | None = None) -> Settings:
    """Load settings from a TOML file, the packaged one by default."""
    source = path or SETTINGS_FILE
    with source.open("rb") as f:
        data = load(f)
    try:
        return Settings(
            search=data["search"],
            simplify=data["simplify"],
            peripheral=data["peripheral"],
        )
    except KeyError as error:
        msg = f"Settings file {source} has no [{error.args[0]}] section"
        raise SettingsError(msg) from error
