"""Paths to the bundled demo lexica."""

from __future__ import annotations

from importlib import resources
from pathlib import Path


def _data_path(name: str) -> Path:
    return Path(str(resources.files("tecvis").joinpath("data", name)))


def default_sentiment_lexicon_path() -> Path:
    return _data_path("sentiment_lexicon.tsv")


def default_emotion_lexicon_path() -> Path:
    return _data_path("emotion_lexicon.tsv")
