"""Paths to the data files bundled with the package."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .intensity import AdjectiveLexicon, load_adjective_lexicon
from .lexicon import AffectLexicon, load_lexicon


def data_path(*parts: str) -> Path:
    return Path(str(resources.files("affectix").joinpath("data", *parts)))


def default_lexicon_path() -> Path:
    return data_path("lexicon_50.tsv")


def default_adjectives_path() -> Path:
    return data_path("adjectives.txt")


def default_suffix_rules_path() -> Path:
    return data_path("suffix_rules.tsv")


def fixture_manifest_path(name: str) -> Path:
    """The bundled corpus manifests: "high", "neutral" or "all"."""
    if name not in ("high", "neutral", "all"):
        raise ValueError(f"no fixture manifest named {name!r}")
    return data_path("corpora", f"manifest_{name}.csv")


def default_lexicon() -> AffectLexicon:
    return load_lexicon(default_lexicon_path())


def default_adjective_lexicon() -> AdjectiveLexicon:
    return load_adjective_lexicon(
        default_adjectives_path(), default_suffix_rules_path()
    )
