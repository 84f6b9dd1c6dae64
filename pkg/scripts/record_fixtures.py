"""Regenerate frontend/test/fixtures.ts from a live in-process API.

Uses a deterministic demo store (synth n=300 seed=7) so recorded payloads
are stable across runs.
"""

import json
import tempfile
from pathlib import Path

from fastapi.testclient import TestClient

from tecvis.corpus import synthesize_corpus, write_store
from tecvis.emotion import load_emotion_lexicon
from tecvis.lexdata import default_emotion_lexicon_path, default_sentiment_lexicon_path
from tecvis.pipeline import analyze_tweet
from tecvis.sentiment import load_sentiment_lexicon
from tecvis.server import create_app

ROOT = Path(__file__).resolve().parent.parent


def main() -> None:
    slex = load_sentiment_lexicon(default_sentiment_lexicon_path())
    elex = load_emotion_lexicon(default_emotion_lexicon_path())
    records = [analyze_tweet(t, slex, elex) for t in synthesize_corpus(300, seed=7)]
    store = Path(tempfile.mkdtemp()) / "fixtures.jsonl"
    write_store(records, store)
    client = TestClient(create_app(store_path=store))

    def get(path: str, **params: str) -> object:
        resp = client.get(path, params=params)
        resp.raise_for_status()
        return resp.json()

    fixtures = {
        "meta": get("/api/meta"),
        "aggregateStates": get("/api/aggregate", axis="state", states="CA,NY,TX,FL,WA,OH"),
        "aggregateCaMonths": get(
            "/api/aggregate", axis="time", granularity="month",
            restrict_axis="state", restrict_value="CA",
        ),
        "compareCaNy": get("/api/compare", axis="state", a="CA", b="NY"),
        "tweetsCa": get("/api/tweets", axis="state", value="CA", limit="3"),
    }
    body = "// Recorded API payloads from a deterministic demo store (synth n=300 seed=7).\n"
    body += "// Regenerate with scripts/record_fixtures.py at the repo root.\n\n"
    for name, payload in fixtures.items():
        body += f"export const {name} = {json.dumps(payload, indent=2, sort_keys=True)} as const;\n\n"
    out = ROOT / "frontend" / "test" / "fixtures.ts"
    out.write_text(body)
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
