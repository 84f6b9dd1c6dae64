"""Rule-based valence scoring: compound score, polarity label, confidence.

The rule set covers lexicon valence, ALL-CAPS emphasis, booster words
(window of two preceding tokens), negation (window of three preceding
tokens), and exclamation amplification, followed by the usual
``x / sqrt(x^2 + alpha)`` squashing. Idiom handling, "but"-clause
reweighting, and question marks are intentionally out of scope.

All rule constants live in :class:`ScoringConfig` and may be overridden
through the CLI config file.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .errors import MalformedLexicon
from .textprep import TokenizedText, is_allcaps

logger = logging.getLogger(__name__)

MAX_VALENCE = 4.0


@dataclass(frozen=True)
class ScoringConfig:
    caps_boost: float = 0.733
    negation_factor: float = -0.74
    exclamation_boost: float = 0.292
    exclamation_cap: int = 4
    booster_window: int = 2
    negation_window: int = 3
    normalization_alpha: float = 15.0
    positive_threshold: float = 0.05
    negative_threshold: float = -0.05


DEFAULT_CONFIG = ScoringConfig()

# Default magnitude for booster entries in the bundled lexicon.
BOOSTER_INCREMENT = 0.293


class Polarity(str, Enum):
    NEGATIVE = "negative"
    NEUTRAL = "neutral"
    POSITIVE = "positive"


@dataclass(frozen=True)
class PolarityResult:
    compound: float
    polarity: Polarity
    confidence: float


@dataclass(frozen=True)
class SentimentLexicon:
    valence: dict[str, float]
    boosters: dict[str, float]
    negators: frozenset[str]


def load_sentiment_lexicon(path: str | Path) -> SentimentLexicon:
    """Load a valence lexicon TSV.

    Plain lines are ``token<TAB>valence``. A ``#boosters`` marker switches to
    ``token<TAB>increment`` lines, ``#negators`` to one bare token per line.
    Duplicate tokens keep the last entry, with a warning.
    """
    valence: dict[str, float] = {}
    boosters: dict[str, float] = {}
    negators: set[str] = set()
    section = "valence"
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip():
                continue
            if line.strip() == "#boosters":
                section = "boosters"
                continue
            if line.strip() == "#negators":
                section = "negators"
                continue
            if line.startswith("#"):
                continue
            if section == "negators":
                negators.add(line.strip().lower())
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise MalformedLexicon(f"{path}:{lineno}: expected token<TAB>value")
            token = parts[0].strip().lower()
            try:
                value = float(parts[1])
            except ValueError:
                raise MalformedLexicon(
                    f"{path}:{lineno}: non-numeric value {parts[1]!r}"
                ) from None
            target = valence if section == "valence" else boosters
            if section == "valence" and abs(value) > MAX_VALENCE:
                raise MalformedLexicon(
                    f"{path}:{lineno}: valence magnitude {value} exceeds {MAX_VALENCE}"
                )
            if token in target:
                logger.warning("duplicate lexicon entry %r (line %d), keeping last", token, lineno)
            target[token] = value
    return SentimentLexicon(valence=valence, boosters=boosters, negators=frozenset(negators))


def _text_is_allcaps(tokens: tuple[str, ...]) -> bool:
    lettered = [t for t in tokens if any(ch.isalpha() for ch in t)]
    return bool(lettered) and all(t.isupper() for t in lettered)


def raw_valence(
    tt: TokenizedText,
    lex: SentimentLexicon,
    config: ScoringConfig = DEFAULT_CONFIG,
) -> float:
    """Unnormalized valence sum over lexicon-hit tokens.

    Per hit, in order: ALL-CAPS emphasis (suppressed when the whole text is
    caps), booster increments from up to ``booster_window`` preceding tokens,
    then sign flip + damping when a negator sits within ``negation_window``
    preceding tokens. Exclamations amplify the final sum toward its own sign.
    """
    tokens = tt.tokens
    all_caps_text = _text_is_allcaps(tokens)
    total = 0.0
    for i, token in enumerate(tokens):
        lowered = token.lower()
        if lowered not in lex.valence:
            continue
        value = lex.valence[lowered]
        if value != 0.0 and is_allcaps(token) and not all_caps_text:
            value += math.copysign(config.caps_boost, value)
        for back in range(1, config.booster_window + 1):
            j = i - back
            if j < 0:
                break
            increment = lex.boosters.get(tokens[j].lower())
            if increment is None:
                continue
            if value > 0.0:
                value += increment
            elif value < 0.0:
                value -= increment
        window = tokens[max(0, i - config.negation_window) : i]
        if any(t.lower() in lex.negators for t in window):
            value *= config.negation_factor
        total += value
    if total > 0.0:
        total += config.exclamation_boost * min(tt.exclamation_count, config.exclamation_cap)
    elif total < 0.0:
        total -= config.exclamation_boost * min(tt.exclamation_count, config.exclamation_cap)
    return total


def normalize_valence(x: float, alpha: float = DEFAULT_CONFIG.normalization_alpha) -> float:
    """Squash a raw sum into (-1, 1) via x / sqrt(x^2 + alpha)."""
    if x == 0.0:
        return 0.0
    return x / math.sqrt(x * x + alpha)


def classify_polarity(
    compound: float, config: ScoringConfig = DEFAULT_CONFIG
) -> PolarityResult:
    """Three-way polarity with inclusive thresholds; confidence is |compound|."""
    if compound >= config.positive_threshold:
        polarity = Polarity.POSITIVE
    elif compound <= config.negative_threshold:
        polarity = Polarity.NEGATIVE
    else:
        polarity = Polarity.NEUTRAL
    return PolarityResult(compound=compound, polarity=polarity, confidence=abs(compound))


def score_text(
    tt: TokenizedText,
    lex: SentimentLexicon,
    config: ScoringConfig = DEFAULT_CONFIG,
) -> PolarityResult:
    raw = raw_valence(tt, lex, config)
    return classify_polarity(normalize_valence(raw, config.normalization_alpha), config)
