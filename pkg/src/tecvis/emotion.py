"""Eight-emotion scoring from a word-emotion association lexicon.

A tweet's emotion vector is the per-emotion hit count normalized by the
total hit count, so nonzero vectors always sum to 1. Each tweet is then
assigned to the positive or negative feelings category (whichever side
aggregates higher), and only in-category scores strictly above the 0.1
threshold count toward group means.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .errors import MalformedLexicon
from .sentiment import Polarity
from .textprep import TokenizedText

EMOTIONS = ("anger", "fear", "anticipation", "trust", "surprise", "sadness", "joy", "disgust")

POSITIVE_FEELINGS = frozenset({"anticipation", "trust", "surprise", "joy"})
NEGATIVE_FEELINGS = frozenset({"anger", "fear", "sadness", "disgust"})

# NRC-style lexica also carry plain sentiment rows; they are skipped on load.
_SENTIMENT_ROWS = frozenset({"positive", "negative"})

CONTRIBUTION_THRESHOLD = 0.1

EmotionVector = dict[str, float]


class Category(str, Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    NONE = "none"


_CATEGORY_FEELINGS = {
    Category.POSITIVE: POSITIVE_FEELINGS,
    Category.NEGATIVE: NEGATIVE_FEELINGS,
    Category.NONE: frozenset(),
}


@dataclass
class EmotionLexicon:
    associations: dict[str, frozenset[str]]
    sentiment_rows_skipped: int = 0


def zero_vector() -> EmotionVector:
    return {emotion: 0.0 for emotion in EMOTIONS}


def load_emotion_lexicon(path: str | Path) -> EmotionLexicon:
    """Load ``token<TAB>emotion<TAB>flag`` rows; only flag=1 rows associate.

    Rows naming the two plain sentiments (positive/negative) are ignored but
    counted in ``sentiment_rows_skipped``. Unknown emotion names or flags
    other than 0/1 are a hard error.
    """
    staged: dict[str, set[str]] = {}
    skipped = 0
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise MalformedLexicon(f"{path}:{lineno}: expected token<TAB>emotion<TAB>flag")
            token, emotion, flag = (p.strip() for p in parts)
            emotion = emotion.lower()
            if emotion in _SENTIMENT_ROWS:
                skipped += 1
                continue
            if emotion not in EMOTIONS:
                raise MalformedLexicon(f"{path}:{lineno}: unknown emotion {emotion!r}")
            if flag not in ("0", "1"):
                raise MalformedLexicon(f"{path}:{lineno}: bad flag {flag!r}")
            if flag == "1":
                staged.setdefault(token.lower(), set()).add(emotion)
    associations = {token: frozenset(emotions) for token, emotions in staged.items()}
    return EmotionLexicon(associations=associations, sentiment_rows_skipped=skipped)


def score_emotions(tt: TokenizedText, lex: EmotionLexicon) -> EmotionVector:
    """Hit counts per emotion over lowercased tokens, normalized to sum 1."""
    counts = {emotion: 0 for emotion in EMOTIONS}
    total = 0
    for token in tt.tokens:
        for emotion in lex.associations.get(token.lower(), ()):
            counts[emotion] += 1
            total += 1
    if total == 0:
        return zero_vector()
    return {emotion: counts[emotion] / total for emotion in EMOTIONS}


def assign_category(ev: EmotionVector, polarity: Polarity) -> Category:
    """Pick the feelings category with the higher aggregated value.

    Ties with equal nonzero sums fall back to the sentiment polarity; an
    all-zero vector belongs to no category.
    """
    positive_sum = sum(ev[e] for e in POSITIVE_FEELINGS)
    negative_sum = sum(ev[e] for e in NEGATIVE_FEELINGS)
    if positive_sum > negative_sum:
        return Category.POSITIVE
    if negative_sum > positive_sum:
        return Category.NEGATIVE
    if positive_sum == 0.0:
        return Category.NONE
    if polarity is Polarity.POSITIVE:
        return Category.POSITIVE
    if polarity is Polarity.NEGATIVE:
        return Category.NEGATIVE
    return Category.NONE


def category_feelings(cat: Category) -> frozenset[str]:
    return _CATEGORY_FEELINGS[cat]


def effective_emotions(
    ev: EmotionVector,
    cat: Category,
    threshold: float = CONTRIBUTION_THRESHOLD,
) -> dict[str, float]:
    """In-category scores strictly above the threshold; these feed group means."""
    allowed = _CATEGORY_FEELINGS[cat]
    return {e: ev[e] for e in EMOTIONS if e in allowed and ev[e] > threshold}
