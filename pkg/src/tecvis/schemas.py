"""Pydantic payload models and the canonical JSON encoder.

The CLI and the HTTP API both serialize through this module, which is what
makes their outputs byte-identical for equivalent queries: sorted keys,
compact separators, shortest-roundtrip floats.
"""

from __future__ import annotations

import json
from typing import Optional

from pydantic import BaseModel

from .aggregate import GroupAggregate
from .compare import ComparisonResult
from .corpus import AnalyzedTweet, StoreMeta, analyzed_to_dict, format_timestamp
from .emotion import EMOTIONS, NEGATIVE_FEELINGS, POSITIVE_FEELINGS

POLARITY_COLORS = {
    "negative": "#d62728",
    "neutral": "#1f77b4",
    "positive": "#2ca02c",
}


def canonical_json(payload: object) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


class PolarityCountsModel(BaseModel):
    negative: int
    neutral: int
    positive: int


class EmotionMeanModel(BaseModel):
    mean: float
    contributing_count: int


class AggregateRowModel(BaseModel):
    axis: str
    key: str
    tweet_count: int
    polarity_counts: PolarityCountsModel
    emotion_means: dict[str, EmotionMeanModel]


class GroupKeyModel(BaseModel):
    axis: str
    value: str


class TornadoRowModel(BaseModel):
    emotion: str
    score_a: float
    score_b: float
    delta: float
    higher_side: str


class ComparisonModel(BaseModel):
    key_a: GroupKeyModel
    key_b: GroupKeyModel
    rows: list[TornadoRowModel]


class MetaModel(BaseModel):
    tweet_count: int
    rejected_count: int
    date_min: Optional[str]
    date_max: Optional[str]
    states_present: list[str]
    emotions: list[str]
    positive_feelings: list[str]
    negative_feelings: list[str]
    polarity_colors: dict[str, str]
    version: str


class TweetModel(BaseModel):
    id: str
    text: str
    created_at: str
    state: str
    lang: str
    compound: float
    polarity: str
    confidence: float
    emotions: dict[str, float]
    category: str


class TweetPageModel(BaseModel):
    axis: str
    value: str
    total: int
    limit: int
    offset: int
    tweets: list[TweetModel]


def aggregate_row_model(row: GroupAggregate) -> AggregateRowModel:
    neg, neu, pos = row.polarity_counts
    return AggregateRowModel(
        axis=row.key.axis.value,
        key=row.key.value,
        tweet_count=row.tweet_count,
        polarity_counts=PolarityCountsModel(negative=neg, neutral=neu, positive=pos),
        emotion_means={
            e: EmotionMeanModel(
                mean=row.emotion_means[e].mean,
                contributing_count=row.emotion_means[e].contributing_count,
            )
            for e in EMOTIONS
        },
    )


def aggregate_payload(rows: list[GroupAggregate]) -> list[dict]:
    return [aggregate_row_model(r).model_dump() for r in rows]


def comparison_model(result: ComparisonResult) -> ComparisonModel:
    return ComparisonModel(
        key_a=GroupKeyModel(axis=result.key_a.axis.value, value=result.key_a.value),
        key_b=GroupKeyModel(axis=result.key_b.axis.value, value=result.key_b.value),
        rows=[
            TornadoRowModel(
                emotion=r.emotion,
                score_a=r.score_a,
                score_b=r.score_b,
                delta=r.delta,
                higher_side=r.higher_side.value,
            )
            for r in result.rows
        ],
    )


def meta_model(meta: StoreMeta, version: str) -> MetaModel:
    return MetaModel(
        tweet_count=meta.tweet_count,
        rejected_count=meta.rejected_count,
        date_min=format_timestamp(meta.date_min) if meta.date_min else None,
        date_max=format_timestamp(meta.date_max) if meta.date_max else None,
        states_present=list(meta.states_present),
        emotions=list(EMOTIONS),
        positive_feelings=[e for e in EMOTIONS if e in POSITIVE_FEELINGS],
        negative_feelings=[e for e in EMOTIONS if e in NEGATIVE_FEELINGS],
        polarity_colors=dict(POLARITY_COLORS),
        version=version,
    )


def tweet_model(t: AnalyzedTweet) -> TweetModel:
    return TweetModel(**analyzed_to_dict(t))


def meta_payload(meta: StoreMeta, version: str) -> dict:
    return meta_model(meta, version).model_dump()


def comparison_payload(result: ComparisonResult) -> dict:
    return comparison_model(result).model_dump()
