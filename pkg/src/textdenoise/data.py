"""Accessors for the bundled mini-corpus and default lexicons.

The corpus is a small synthetic set of ischemia/glutamate abstracts used by
the test suite and the demo scripts; the lexicons are the defaults the CLI
falls back to when no explicit path or ``TEXTDENOISE_LEXICONS`` directory
provides one.
"""

from __future__ import annotations

from pathlib import Path

_DATA_DIR = Path(__file__).parent / "data"


def data_path(name: str) -> Path:
    path = _DATA_DIR / name
    if not path.exists():
        raise FileNotFoundError(f"bundled data file missing: {path}")
    return path


def corpus_dir() -> Path:
    return data_path("corpus")


def concepts_path() -> Path:
    return data_path("concepts.txt")


def gold_relations_path() -> Path:
    return data_path("gold_relations.txt")


def stopwords_path() -> Path:
    return data_path("stopwords.txt")
