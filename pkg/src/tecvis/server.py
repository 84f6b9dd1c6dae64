"""Read-only HTTP API over an immutable analyzed store.

Every endpoint is a pure function of (store, query): responses are
canonically serialized so repeated calls, server restarts, and the CLI all
produce byte-identical bodies. Ingestion happens offline via the CLI; a
restart picks up a new store file.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from . import __version__
from .aggregate import (
    Axis,
    FilterSpec,
    GroupKey,
    aggregate,
    apply_filters,
    resolve_axis,
    tweet_matches_key,
    validate_group_value,
)
from .compare import compare_groups
from .corpus import AnalyzedTweet, StoreMeta, parse_timestamp, read_meta, read_store
from .errors import (
    BadQuery,
    BadTimestamp,
    SameGroup,
    StoreNotLoaded,
    TecvisError,
    UnknownGroup,
)
from .schemas import (
    aggregate_payload,
    canonical_json,
    comparison_payload,
    meta_payload,
    tweet_model,
)

_ERROR_STATUS = {
    "store_not_loaded": 503,
    "bad_query": 400,
    "same_group": 400,
    "axis_mismatch": 400,
    "unknown_group": 404,
}

MAX_PAGE_LIMIT = 500
DEFAULT_PAGE_LIMIT = 100


def _json_response(payload: object, status_code: int = 200) -> Response:
    return Response(
        content=canonical_json(payload),
        status_code=status_code,
        media_type="application/json",
    )


def _parse_int(raw: str | None, name: str, default: int) -> int:
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise BadQuery(f"{name} must be an integer, got {raw!r}") from None


def _parse_float(raw: str, name: str) -> float:
    try:
        return float(raw)
    except ValueError:
        raise BadQuery(f"{name} must be a number, got {raw!r}") from None


def _parse_time(raw: str, name: str):
    try:
        return parse_timestamp(raw)
    except BadTimestamp:
        raise BadQuery(f"{name} must be an ISO-8601 timestamp, got {raw!r}") from None


def _parse_filters(
    states: str | None,
    time_from: str | None,
    time_to: str | None,
    emotion: str | None,
    score_min: str | None,
    score_max: str | None,
    restrict_axis: str | None,
    restrict_value: str | None,
) -> FilterSpec:
    parsed_states = None
    if states:
        parsed_states = frozenset(s.strip().upper() for s in states.split(",") if s.strip())
    score_range = None
    if score_min is not None or score_max is not None:
        lo = _parse_float(score_min, "min") if score_min is not None else 0.0
        hi = _parse_float(score_max, "max") if score_max is not None else 1.0
        score_range = (lo, hi)
    restrict_to = None
    if restrict_axis is not None or restrict_value is not None:
        if restrict_axis is None or restrict_value is None:
            raise BadQuery("restrict_axis and restrict_value must be given together")
        try:
            axis = Axis(restrict_axis)
        except ValueError:
            raise BadQuery(f"unknown restrict_axis {restrict_axis!r}") from None
        validate_group_value(axis, restrict_value)
        restrict_to = GroupKey(axis, restrict_value)
    return FilterSpec(
        states=parsed_states,
        time_from=_parse_time(time_from, "from") if time_from else None,
        time_to=_parse_time(time_to, "to") if time_to else None,
        emotion=emotion or None,
        score_range=score_range,
        restrict_to=restrict_to,
    )


def create_app(
    store_path: str | Path | None = None,
    cors_origin: str = "*",
    records: list[AnalyzedTweet] | None = None,
    meta: StoreMeta | None = None,
) -> FastAPI:
    """Build the API app, loading the store eagerly when a path is given."""
    app = FastAPI(title="tecvis", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[cors_origin],
        allow_methods=["GET"],
        allow_headers=["*"],
    )
    if store_path is not None:
        records = read_store(store_path)
        meta = read_meta(store_path)
    app.state.records = records
    app.state.meta = meta

    def _store() -> list[AnalyzedTweet]:
        if app.state.records is None:
            raise StoreNotLoaded("no store loaded")
        return app.state.records

    @app.exception_handler(TecvisError)
    async def _tecvis_error(_: Request, exc: TecvisError) -> Response:
        status = _ERROR_STATUS.get(exc.code, 400)
        body = {"status": status, "code": exc.code, "message": str(exc)}
        return _json_response(body, status_code=status)

    @app.get("/api/meta")
    def api_meta() -> Response:
        _store()
        if app.state.meta is None:
            raise StoreNotLoaded("no store meta loaded")
        return _json_response(meta_payload(app.state.meta, __version__))

    # "from", "min", and "max" clash with keywords/builtins as parameter
    # names, so these handlers read the raw query string directly.
    @app.get("/api/aggregate")
    def api_aggregate(request: Request) -> Response:
        store = _store()
        q = request.query_params
        axis = q.get("axis")
        if axis is None:
            raise BadQuery("axis is required (state or time)")
        resolved = resolve_axis(axis, q.get("granularity"))
        f = _parse_filters(
            q.get("states"), q.get("from"), q.get("to"), q.get("emotion"),
            q.get("min"), q.get("max"), q.get("restrict_axis"), q.get("restrict_value"),
        )
        rows = aggregate(apply_filters(store, f), resolved)
        return _json_response(aggregate_payload(rows))

    @app.get("/api/compare")
    def api_compare(request: Request) -> Response:
        store = _store()
        q = request.query_params
        axis = q.get("axis")
        if axis is None:
            raise BadQuery("axis is required (state or time)")
        resolved = resolve_axis(axis, q.get("granularity"))
        a_value, b_value = q.get("a"), q.get("b")
        if not a_value or not b_value:
            raise BadQuery("both a and b group keys are required")
        validate_group_value(resolved, a_value)
        validate_group_value(resolved, b_value)
        if a_value == b_value:
            raise SameGroup(f"a and b are both {a_value!r}")
        f = _parse_filters(
            q.get("states"), q.get("from"), q.get("to"), q.get("emotion"),
            q.get("min"), q.get("max"), q.get("restrict_axis"), q.get("restrict_value"),
        )
        rows = {r.key.value: r for r in aggregate(apply_filters(store, f), resolved)}
        for value in (a_value, b_value):
            if value not in rows:
                raise UnknownGroup(f"group {value!r} not present after filters")
        result = compare_groups(rows[a_value], rows[b_value])
        return _json_response(comparison_payload(result))

    @app.get("/api/tweets")
    def api_tweets(request: Request) -> Response:
        store = _store()
        q = request.query_params
        axis_raw, value = q.get("axis"), q.get("value")
        if axis_raw is None or value is None:
            raise BadQuery("axis and value are required")
        try:
            axis = Axis(axis_raw)
        except ValueError:
            raise BadQuery(f"unknown axis {axis_raw!r}") from None
        validate_group_value(axis, value)
        limit = _parse_int(q.get("limit"), "limit", DEFAULT_PAGE_LIMIT)
        offset = _parse_int(q.get("offset"), "offset", 0)
        if not (0 <= limit <= MAX_PAGE_LIMIT):
            raise BadQuery(f"limit must be between 0 and {MAX_PAGE_LIMIT}")
        if offset < 0:
            raise BadQuery("offset must be >= 0")
        key = GroupKey(axis, value)
        matched = [t for t in store if tweet_matches_key(t, key)]
        if not matched:
            raise UnknownGroup(f"no tweets in group {value!r}")
        matched.sort(key=lambda t: (t.created_at, t.id))
        page = matched[offset : offset + limit]
        payload = {
            "axis": axis.value,
            "value": value,
            "total": len(matched),
            "limit": limit,
            "offset": offset,
            "tweets": [tweet_model(t).model_dump() for t in page],
        }
        return _json_response(payload)

    return app
