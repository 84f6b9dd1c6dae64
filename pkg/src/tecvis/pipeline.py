"""Analysis pipeline: tokenize, score valence, score emotions, categorize."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .corpus import AnalyzedTweet, RawTweet, parse_raw_tweet, validate_tweet
from .emotion import EmotionLexicon, assign_category, score_emotions
from .errors import MalformedRecord
from .sentiment import DEFAULT_CONFIG, ScoringConfig, SentimentLexicon, score_text
from .textprep import tokenize


@dataclass
class IngestResult:
    records: list[AnalyzedTweet]
    rejected_count: int
    reject_reasons: Counter = field(default_factory=Counter)


def analyze_tweet(
    raw: RawTweet,
    sentiment_lexicon: SentimentLexicon,
    emotion_lexicon: EmotionLexicon,
    config: ScoringConfig = DEFAULT_CONFIG,
) -> AnalyzedTweet:
    """Enrich one accepted tweet with polarity, emotion vector, and category."""
    if raw.state is None:
        raise ValueError("analyze_tweet requires a validated tweet with a state")
    tt = tokenize(raw.text)
    sentiment = score_text(tt, sentiment_lexicon, config)
    emotions = score_emotions(tt, emotion_lexicon)
    category = assign_category(emotions, sentiment.polarity)
    return AnalyzedTweet(
        id=raw.id,
        text=raw.text,
        created_at=raw.created_at,
        state=raw.state,
        lang=raw.lang,
        compound=sentiment.compound,
        polarity=sentiment.polarity,
        confidence=sentiment.confidence,
        emotions=emotions,
        category=category,
    )


def ingest_lines(
    lines: Iterable[str],
    sentiment_lexicon: SentimentLexicon,
    emotion_lexicon: EmotionLexicon,
    config: ScoringConfig = DEFAULT_CONFIG,
) -> IngestResult:
    """Parse, validate, and analyze JSONL lines.

    Per-record parse failures and validation rejects are counted, never
    fatal; blank lines are skipped without counting.
    """
    records: list[AnalyzedTweet] = []
    reasons: Counter = Counter()
    for line in lines:
        if not line.strip():
            continue
        try:
            raw = parse_raw_tweet(line)
        except MalformedRecord as exc:
            reasons[exc.code] += 1
            continue
        reason = validate_tweet(raw)
        if reason is not None:
            reasons[reason.value] += 1
            continue
        records.append(analyze_tweet(raw, sentiment_lexicon, emotion_lexicon, config))
    return IngestResult(
        records=records,
        rejected_count=sum(reasons.values()),
        reject_reasons=reasons,
    )
