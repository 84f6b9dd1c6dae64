"""Tweet records, the JSONL store, and the synthetic corpus generator.

A store is written once and read immutably afterwards: one JSON object per
line in canonical field order, plus a ``<store>.meta.json`` sidecar with the
kept/rejected accounting. Geolocation arrives pre-resolved as a two-letter
state code; coordinate resolution is out of scope.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from datetime import datetime, timedelta, timezone
from enum import Enum
from pathlib import Path

from .emotion import EMOTIONS, Category, EmotionVector
from .errors import BadState, BadTimestamp, DuplicateId, MalformedRecord
from .sentiment import Polarity

# 50 states plus DC, the 51 accepted geolocation values.
STATE_CODES = (
    "AK", "AL", "AR", "AZ", "CA", "CO", "CT", "DC", "DE", "FL", "GA", "HI",
    "IA", "ID", "IL", "IN", "KS", "KY", "LA", "MA", "MD", "ME", "MI", "MN",
    "MO", "MS", "MT", "NC", "ND", "NE", "NH", "NJ", "NM", "NV", "NY", "OH",
    "OK", "OR", "PA", "RI", "SC", "SD", "TN", "TX", "UT", "VA", "VT", "WA",
    "WI", "WV", "WY",
)
_STATE_SET = frozenset(STATE_CODES)


class RejectReason(str, Enum):
    NON_ENGLISH = "non_english"
    NO_GEOLOCATION = "no_geolocation"


@dataclass(frozen=True)
class RawTweet:
    id: str
    text: str
    created_at: datetime
    state: str | None
    lang: str


@dataclass(frozen=True)
class AnalyzedTweet:
    id: str
    text: str
    created_at: datetime
    state: str
    lang: str
    compound: float
    polarity: Polarity
    confidence: float
    emotions: EmotionVector
    category: Category


@dataclass(frozen=True)
class StoreMeta:
    tweet_count: int
    rejected_count: int
    date_min: datetime | None
    date_max: datetime | None
    states_present: tuple[str, ...]


def parse_timestamp(value: object) -> datetime:
    """ISO-8601 to an aware UTC datetime at second precision."""
    if not isinstance(value, str):
        raise BadTimestamp(f"timestamp must be a string, got {type(value).__name__}")
    text = value.strip()
    if text.endswith(("Z", "z")):
        text = text[:-1] + "+00:00"
    try:
        parsed = datetime.fromisoformat(text)
    except ValueError:
        raise BadTimestamp(f"not an ISO-8601 timestamp: {value!r}") from None
    if parsed.tzinfo is None:
        parsed = parsed.replace(tzinfo=timezone.utc)
    return parsed.astimezone(timezone.utc).replace(microsecond=0)


def format_timestamp(ts: datetime) -> str:
    return ts.astimezone(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def _required_str(obj: dict, key: str) -> str:
    value = obj.get(key)
    if not isinstance(value, str):
        raise MalformedRecord(f"missing or non-string field {key!r}")
    return value


def parse_raw_tweet(line: str) -> RawTweet:
    """Parse one JSONL line into a RawTweet.

    The state field may be absent (validation rejects it later); when present
    it must be one of the 51 accepted codes after uppercasing.
    """
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise MalformedRecord(f"bad JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise MalformedRecord("record is not a JSON object")
    tweet_id = _required_str(obj, "id")
    if not tweet_id:
        raise MalformedRecord("empty id")
    text = _required_str(obj, "text")
    created_at = parse_timestamp(obj.get("created_at"))
    lang = _required_str(obj, "lang").split("-")[0].lower()
    state_raw = obj.get("state")
    state: str | None
    if state_raw is None or state_raw == "":
        state = None
    elif isinstance(state_raw, str):
        state = state_raw.upper()
        if state not in _STATE_SET:
            raise BadState(f"unknown state code {state_raw!r}")
    else:
        raise BadState(f"state must be a string, got {type(state_raw).__name__}")
    return RawTweet(id=tweet_id, text=text, created_at=created_at, state=state, lang=lang)


def validate_tweet(t: RawTweet) -> RejectReason | None:
    """None when the tweet is kept, otherwise the reject reason."""
    if t.lang != "en":
        return RejectReason.NON_ENGLISH
    if t.state is None or t.state not in _STATE_SET:
        return RejectReason.NO_GEOLOCATION
    return None


def analyzed_to_dict(t: AnalyzedTweet) -> dict:
    """Store-line payload in canonical field order."""
    return {
        "id": t.id,
        "text": t.text,
        "created_at": format_timestamp(t.created_at),
        "state": t.state,
        "lang": t.lang,
        "compound": t.compound,
        "polarity": t.polarity.value,
        "confidence": t.confidence,
        "emotions": {e: t.emotions[e] for e in EMOTIONS},
        "category": t.category.value,
    }


def analyzed_from_dict(obj: dict) -> AnalyzedTweet:
    try:
        emotions = {e: float(obj["emotions"][e]) for e in EMOTIONS}
        return AnalyzedTweet(
            id=obj["id"],
            text=obj["text"],
            created_at=parse_timestamp(obj["created_at"]),
            state=obj["state"],
            lang=obj["lang"],
            compound=float(obj["compound"]),
            polarity=Polarity(obj["polarity"]),
            confidence=float(obj["confidence"]),
            emotions=emotions,
            category=Category(obj["category"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedRecord(f"bad store record: {exc}") from None


def meta_path(store_path: str | Path) -> Path:
    return Path(store_path).with_suffix(".meta.json")


def _meta_from_records(records: list[AnalyzedTweet], rejected_count: int) -> StoreMeta:
    dates = [t.created_at for t in records]
    return StoreMeta(
        tweet_count=len(records),
        rejected_count=rejected_count,
        date_min=min(dates) if dates else None,
        date_max=max(dates) if dates else None,
        states_present=tuple(sorted({t.state for t in records})),
    )


def write_store(
    records: list[AnalyzedTweet],
    path: str | Path,
    rejected_count: int = 0,
) -> StoreMeta:
    """Write the JSONL store and its meta sidecar; duplicate ids are fatal."""
    seen: set[str] = set()
    for t in records:
        if t.id in seen:
            raise DuplicateId(f"duplicate tweet id {t.id!r}")
        seen.add(t.id)
    path = Path(path)
    with open(path, "w", encoding="utf-8") as fh:
        for t in records:
            fh.write(json.dumps(analyzed_to_dict(t), ensure_ascii=False))
            fh.write("\n")
    meta = _meta_from_records(records, rejected_count)
    with open(meta_path(path), "w", encoding="utf-8") as fh:
        json.dump(
            {
                "tweet_count": meta.tweet_count,
                "rejected_count": meta.rejected_count,
                "date_min": format_timestamp(meta.date_min) if meta.date_min else None,
                "date_max": format_timestamp(meta.date_max) if meta.date_max else None,
                "states_present": list(meta.states_present),
            },
            fh,
            indent=2,
            sort_keys=True,
        )
        fh.write("\n")
    return meta


def read_store(path: str | Path) -> list[AnalyzedTweet]:
    records: list[AnalyzedTweet] = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise MalformedRecord(f"bad store line: {exc}") from None
            records.append(analyzed_from_dict(obj))
    return records


def read_meta(path: str | Path) -> StoreMeta:
    with open(meta_path(path), encoding="utf-8") as fh:
        obj = json.load(fh)
    return StoreMeta(
        tweet_count=int(obj["tweet_count"]),
        rejected_count=int(obj["rejected_count"]),
        date_min=parse_timestamp(obj["date_min"]) if obj["date_min"] else None,
        date_max=parse_timestamp(obj["date_max"]) if obj["date_max"] else None,
        states_present=tuple(obj["states_present"]),
    )


# Phrase pool for the synthetic corpus. Every one of the eight feelings and
# all three polarities are represented; wording leans on the bundled lexica
# so generated corpora exercise the whole scoring path.
PHRASES = (
    # joy
    "So happy and grateful today, the good news made me smile",
    "Celebrating with friends tonight, feeling blessed and joyful",
    "What a wonderful day, I love this community",
    "Thrilled and proud of our amazing nurses",
    "Finally some relief, laughing and enjoying the little things",
    # trust
    "I trust the doctors and the science, they are reliable",
    "Our community support network feels safe and dependable",
    "Honest reporting builds confidence and trust",
    "The response team has been honest and supportive, we are in safe hands",
    # anticipation
    "Counting down the days, eager and hopeful for my appointment tomorrow",
    "Really excited for the upcoming reopening",
    "Planning ahead and expecting good results soon",
    "Ready and waiting, hope is on the horizon",
    # surprise
    "Totally shocked by the sudden announcement, what a surprise",
    "Wow, the numbers today are astonishing and unexpected",
    "Stunned by this surprising turn of events",
    # fear
    "Terrified of the new variant, this is scary",
    "So worried and anxious about the rising cases",
    "The danger feels real, fear everywhere tonight",
    "Afraid to leave the house, panic is spreading",
    # anger
    "Furious about the slow rollout, this is outrageous",
    "So angry and frustrated with the endless delays",
    "Mad at the hostile comments, the rage is real",
    # sadness
    "Heartbroken over the losses, crying for the families",
    "Such a sad and gloomy week, grief everywhere",
    "Feeling lonely and depressed after another lockdown",
    "Tragic news again, tears and sorrow tonight",
    # disgust
    "The misinformation is disgusting and vile",
    "Gross negligence everywhere, absolutely revolting",
    "Nasty rumors spreading and it makes me sick",
    # neutral
    "The clinic opens at 9 am on weekdays",
    "County reports new case numbers this afternoon",
    "The briefing is scheduled for noon",
    "Masks remain required on public transit",
    "The update covers three counties and two cities",
    # negated / mixed
    "Not happy with the response this week",
    "The lines were not bad at all today",
    "I don't trust these numbers",
    "Hardly any progress, barely moving",
)

_HASHTAGS = ("#covid19", "#vaccine", "#staysafe", "#lockdown", "#community")
_MENTIONS = ("@healthdept", "@localnews", "@cityhall")
_URLS = ("https://news.example/latest", "https://health.example/update")

_SYNTH_START = datetime(2021, 1, 1, tzinfo=timezone.utc)
_SYNTH_END = datetime(2021, 5, 31, 23, 59, 59, tzinfo=timezone.utc)


def synthesize_corpus(n: int, seed: int) -> list[RawTweet]:
    """Deterministic corpus of n English, state-tagged tweets (Jan-May 2021)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    rng = random.Random(seed)
    span = int((_SYNTH_END - _SYNTH_START).total_seconds())
    tweets: list[RawTweet] = []
    for i in range(n):
        parts = [rng.choice(PHRASES)]
        if rng.random() < 0.20:
            parts.append(rng.choice(PHRASES))
        if rng.random() < 0.15:
            parts.append(rng.choice(_MENTIONS))
        if rng.random() < 0.35:
            parts.append(rng.choice(_HASHTAGS))
        if rng.random() < 0.15:
            parts.append(rng.choice(_URLS))
        text = " ".join(parts)
        if rng.random() < 0.25:
            text += "!" * rng.randint(1, 4)
        tweets.append(
            RawTweet(
                id=f"synth-{i:06d}",
                text=text,
                created_at=_SYNTH_START + timedelta(seconds=rng.randrange(span + 1)),
                state=rng.choice(STATE_CODES),
                lang="en",
            )
        )
    return tweets
