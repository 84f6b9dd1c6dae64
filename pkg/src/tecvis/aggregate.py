"""Group-by aggregation: dot-plot rows and polarity bars under filters.

Tweets group by state or by UTC time bucket (calendar day, ISO week, or
month). Emotion means run over effective contributions only: the tweet's
category must include the emotion and the score must clear the 0.1
threshold, so excluded tweets never drag a mean toward zero.
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass, replace
from datetime import datetime
from enum import Enum
from typing import Iterable, Sequence

from .corpus import AnalyzedTweet, _STATE_SET
from .emotion import EMOTIONS, effective_emotions
from .errors import BadQuery, UnknownGroup
from .sentiment import Polarity


class Axis(str, Enum):
    STATE = "state"
    DAY = "day"
    WEEK = "week"
    MONTH = "month"


TIME_AXES = (Axis.DAY, Axis.WEEK, Axis.MONTH)

_VALUE_PATTERNS = {
    Axis.STATE: re.compile(r"^[A-Z]{2}$"),
    Axis.DAY: re.compile(r"^\d{4}-\d{2}-\d{2}$"),
    Axis.WEEK: re.compile(r"^\d{4}-W\d{2}$"),
    Axis.MONTH: re.compile(r"^\d{4}-\d{2}$"),
}


@dataclass(frozen=True)
class GroupKey:
    axis: Axis
    value: str


@dataclass(frozen=True)
class EmotionMean:
    mean: float
    contributing_count: int


@dataclass(frozen=True)
class GroupAggregate:
    key: GroupKey
    tweet_count: int
    polarity_counts: tuple[int, int, int]  # negative, neutral, positive
    emotion_means: dict[str, EmotionMean]


@dataclass(frozen=True)
class FilterSpec:
    states: frozenset[str] | None = None
    time_from: datetime | None = None
    time_to: datetime | None = None
    emotion: str | None = None
    score_range: tuple[float, float] | None = None
    restrict_to: GroupKey | None = None

    def __post_init__(self) -> None:
        if self.states is not None:
            unknown = set(self.states) - _STATE_SET
            if unknown:
                raise BadQuery(f"unknown state code(s): {', '.join(sorted(unknown))}")
        if self.emotion is not None and self.emotion not in EMOTIONS:
            raise BadQuery(f"unknown emotion {self.emotion!r}")
        if self.score_range is not None:
            if self.emotion is None:
                raise BadQuery("score_range requires an emotion")
            lo, hi = self.score_range
            if not (0.0 <= lo <= hi <= 1.0):
                raise BadQuery(f"bad score range [{lo}, {hi}]")


def resolve_axis(axis: str, granularity: str | None) -> Axis:
    """Map the external axis=state|time (+ granularity) onto a bucket axis."""
    if axis == "state":
        return Axis.STATE
    if axis == "time":
        if granularity is None:
            raise BadQuery("time axis requires a granularity (day, week, or month)")
        try:
            resolved = Axis(granularity)
        except ValueError:
            raise BadQuery(f"unknown granularity {granularity!r}") from None
        if resolved is Axis.STATE:
            raise BadQuery("granularity must be day, week, or month")
        return resolved
    raise BadQuery(f"unknown axis {axis!r} (expected state or time)")


def validate_group_value(axis: Axis, value: str) -> None:
    """Format check for a group key value; existence is checked separately."""
    if not _VALUE_PATTERNS[axis].match(value):
        raise BadQuery(f"malformed {axis.value} key {value!r}")
    if axis is Axis.STATE and value not in _STATE_SET:
        raise BadQuery(f"unknown state code {value!r}")


def bucket_timestamp(ts: datetime, granularity: Axis) -> GroupKey:
    """UTC bucket key: calendar day, ISO-8601 week (Monday start), or month."""
    if granularity is Axis.DAY:
        return GroupKey(Axis.DAY, ts.strftime("%Y-%m-%d"))
    if granularity is Axis.WEEK:
        iso = ts.isocalendar()
        return GroupKey(Axis.WEEK, f"{iso[0]}-W{iso[1]:02d}")
    if granularity is Axis.MONTH:
        return GroupKey(Axis.MONTH, ts.strftime("%Y-%m"))
    raise BadQuery(f"not a time granularity: {granularity.value}")


def group_key_for(tweet: AnalyzedTweet, axis: Axis) -> GroupKey:
    if axis is Axis.STATE:
        return GroupKey(Axis.STATE, tweet.state)
    return bucket_timestamp(tweet.created_at, axis)


def tweet_matches_key(tweet: AnalyzedTweet, key: GroupKey) -> bool:
    return group_key_for(tweet, key.axis) == key


def apply_filters(tweets: Iterable[AnalyzedTweet], f: FilterSpec) -> list[AnalyzedTweet]:
    """Keep tweets satisfying every present clause.

    Time bounds are from-inclusive / to-exclusive; the score range is
    inclusive on both ends and applies to the tweet-level score of the
    selected emotion.
    """
    kept: list[AnalyzedTweet] = []
    for t in tweets:
        if f.states is not None and t.state not in f.states:
            continue
        if f.time_from is not None and t.created_at < f.time_from:
            continue
        if f.time_to is not None and t.created_at >= f.time_to:
            continue
        if f.emotion is not None and f.score_range is not None:
            lo, hi = f.score_range
            if not (lo <= t.emotions[f.emotion] <= hi):
                continue
        if f.restrict_to is not None and not tweet_matches_key(t, f.restrict_to):
            continue
        kept.append(t)
    return kept


_POLARITY_SLOT = {Polarity.NEGATIVE: 0, Polarity.NEUTRAL: 1, Polarity.POSITIVE: 2}


def aggregate(tweets: Iterable[AnalyzedTweet], axis: Axis) -> list[GroupAggregate]:
    """One GroupAggregate per non-empty group, ordered by key.

    States sort alphabetically; all three time-key formats sort
    chronologically as strings.
    """
    counts: dict[GroupKey, int] = {}
    polarity: dict[GroupKey, list[int]] = {}
    sums: dict[GroupKey, dict[str, float]] = {}
    contributors: dict[GroupKey, dict[str, int]] = {}
    for t in tweets:
        key = group_key_for(t, axis)
        if key not in counts:
            counts[key] = 0
            polarity[key] = [0, 0, 0]
            sums[key] = {e: 0.0 for e in EMOTIONS}
            contributors[key] = {e: 0 for e in EMOTIONS}
        counts[key] += 1
        polarity[key][_POLARITY_SLOT[t.polarity]] += 1
        for e, score in effective_emotions(t.emotions, t.category).items():
            sums[key][e] += score
            contributors[key][e] += 1
    rows: list[GroupAggregate] = []
    for key in sorted(counts, key=lambda k: k.value):
        means = {
            e: EmotionMean(
                mean=sums[key][e] / contributors[key][e] if contributors[key][e] else 0.0,
                contributing_count=contributors[key][e],
            )
            for e in EMOTIONS
        }
        rows.append(
            GroupAggregate(
                key=key,
                tweet_count=counts[key],
                polarity_counts=tuple(polarity[key]),
                emotion_means=means,
            )
        )
    return rows


def drill_down(
    tweets: Sequence[AnalyzedTweet],
    selected: GroupKey,
    target_axis: Axis,
    f: FilterSpec = FilterSpec(),
) -> list[GroupAggregate]:
    """Aggregate on target_axis restricted to one selected group.

    Works in both directions (state to time bucket and back); the selected
    key must exist in the unfiltered store.
    """
    if selected.axis is target_axis:
        raise BadQuery("drill-down target axis must differ from the selected axis")
    if not any(tweet_matches_key(t, selected) for t in tweets):
        raise UnknownGroup(f"no tweets in group {selected.value!r}")
    restricted = replace(f, restrict_to=selected)
    return aggregate(apply_filters(tweets, restricted), target_axis)


def export_csv(rows: Sequence[GroupAggregate]) -> str:
    """CSV rows: key, counts, then (mean, n) per emotion in canonical order."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = ["key", "tweet_count", "negative", "neutral", "positive"]
    for e in EMOTIONS:
        header += [f"{e}_mean", f"{e}_n"]
    writer.writerow(header)
    for row in rows:
        neg, neu, pos = row.polarity_counts
        out = [row.key.value, row.tweet_count, neg, neu, pos]
        for e in EMOTIONS:
            stat = row.emotion_means[e]
            out += [repr(stat.mean), stat.contributing_count]
        writer.writerow(out)
    return buf.getvalue()
