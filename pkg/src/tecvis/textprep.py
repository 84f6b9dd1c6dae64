"""Tweet tokenization shared by both scorers.

Case is preserved here: the emotion scorer lowercases on lookup while the
valence scorer inspects capitalization for emphasis. Tokens that contain no
letters or digits (emoticon candidates such as ``:)``) are kept verbatim so
lexicon entries like ``:(`` stay matchable.
"""

from __future__ import annotations

import string
import unicodedata
from dataclasses import dataclass

_STRIP_CHARS = string.punctuation + "‘’“”…"
_URL_OR_MENTION = ("http://", "https://", "@")


@dataclass(frozen=True)
class TokenizedText:
    tokens: tuple[str, ...]
    exclamation_count: int


def tokenize(text: str) -> TokenizedText:
    """Split on whitespace, drop URLs/mentions, trim punctuation, count '!'.

    The exclamation count covers the whole input, taken before any stripping,
    so trailing runs like ``great!!!`` still register.
    """
    text = unicodedata.normalize("NFC", text)
    exclamations = text.count("!")
    tokens: list[str] = []
    for raw in text.split():
        if raw.lower().startswith(_URL_OR_MENTION):
            continue
        if not any(ch.isalnum() for ch in raw):
            tokens.append(raw)  # emoticon candidate, kept verbatim
            continue
        token = raw.strip(_STRIP_CHARS)
        if token:
            tokens.append(token)
    return TokenizedText(tokens=tuple(tokens), exclamation_count=exclamations)


def is_allcaps(token: str) -> bool:
    """True iff the token has at least two letters and all of them uppercase."""
    letters = [ch for ch in token if ch.isalpha()]
    return len(letters) >= 2 and all(ch.isupper() for ch in letters)
