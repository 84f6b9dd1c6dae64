from __future__ import annotations

from datetime import datetime, timezone

import pytest

from tecvis.corpus import AnalyzedTweet, synthesize_corpus, write_store
from tecvis.emotion import Category, load_emotion_lexicon, zero_vector
from tecvis.lexdata import default_emotion_lexicon_path, default_sentiment_lexicon_path
from tecvis.pipeline import analyze_tweet
from tecvis.sentiment import Polarity, load_sentiment_lexicon


@pytest.fixture(scope="session")
def slex():
    return load_sentiment_lexicon(default_sentiment_lexicon_path())


@pytest.fixture(scope="session")
def elex():
    return load_emotion_lexicon(default_emotion_lexicon_path())


@pytest.fixture(scope="session")
def small_corpus(slex, elex):
    """500 analyzed synthetic tweets, enough for aggregation plumbing tests."""
    return [analyze_tweet(t, slex, elex) for t in synthesize_corpus(500, seed=11)]


@pytest.fixture(scope="session")
def small_store(small_corpus, tmp_path_factory):
    path = tmp_path_factory.mktemp("store") / "small.jsonl"
    write_store(small_corpus, path)
    return path


def ts(value: str) -> datetime:
    return datetime.fromisoformat(value).replace(tzinfo=timezone.utc)


_POLARITY_COMPOUND = {
    Polarity.NEGATIVE: -0.4,
    Polarity.NEUTRAL: 0.0,
    Polarity.POSITIVE: 0.4,
}


def make_tweet(
    tweet_id: str,
    state: str = "CA",
    created_at: str = "2021-01-15T12:00:00",
    polarity: Polarity = Polarity.NEUTRAL,
    category: Category = Category.NONE,
    **emotions: float,
) -> AnalyzedTweet:
    """Handcrafted analyzed tweet; unset emotions stay 0."""
    vector = zero_vector()
    vector.update(emotions)
    compound = _POLARITY_COMPOUND[polarity]
    return AnalyzedTweet(
        id=tweet_id,
        text="fixture",
        created_at=ts(created_at),
        state=state,
        lang="en",
        compound=compound,
        polarity=polarity,
        confidence=abs(compound),
        emotions=vector,
        category=category,
    )
