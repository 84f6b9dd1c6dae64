"""Command-line interface: synth, ingest, aggregate, compare, serve.

Standard output is the data channel; logs go to standard error. Exit codes:
0 success, 1 usage error, 2 data error, 3 I/O error. JSON output shares the
canonical encoder with the HTTP API, so `tecvis aggregate --format json`
and /api/aggregate return byte-identical bodies for equal parameters.
"""

from __future__ import annotations

import dataclasses
import json
import sys
from pathlib import Path

import click

from . import __version__
from .aggregate import (
    Axis,
    FilterSpec,
    GroupKey,
    aggregate,
    apply_filters,
    export_csv,
    resolve_axis,
    validate_group_value,
)
from .compare import compare_groups
from .corpus import (
    format_timestamp,
    parse_timestamp,
    read_store,
    synthesize_corpus,
    write_store,
)
from .errors import (
    AxisMismatch,
    BadQuery,
    BadTimestamp,
    DuplicateId,
    MalformedLexicon,
    SameGroup,
    TecvisError,
    UnknownGroup,
)
from .emotion import load_emotion_lexicon
from .lexdata import default_emotion_lexicon_path, default_sentiment_lexicon_path
from .pipeline import ingest_lines
from .schemas import aggregate_payload, canonical_json
from .sentiment import ScoringConfig, load_sentiment_lexicon

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_IO = 3

_USAGE_ERRORS = (BadQuery, SameGroup, AxisMismatch)


def _load_config(path: str | None) -> dict:
    """Optional flat TOML config; [defaults] seeds flags, [scoring] the rule
    constants. Flags always win."""
    if path is None:
        return {}
    try:
        import tomllib  # py3.11+
    except ModuleNotFoundError:
        return _parse_flat_toml(Path(path).read_text(encoding="utf-8"))
    with open(path, "rb") as fh:
        return tomllib.load(fh)


def _parse_flat_toml(text: str) -> dict:
    """Minimal section/key=value reader for the flat config subset."""
    result: dict = {}
    section = result
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            section = result.setdefault(line[1:-1].strip(), {})
            continue
        if "=" not in line:
            raise BadQuery(f"config line {lineno}: expected key = value")
        key, _, value = line.partition("=")
        section[key.strip()] = _parse_toml_value(value.strip(), lineno)
    return result


def _parse_toml_value(value: str, lineno: int):
    if value.startswith('"') and value.endswith('"') and len(value) >= 2:
        return value[1:-1]
    if value in ("true", "false"):
        return value == "true"
    try:
        return int(value)
    except ValueError:
        pass
    try:
        return float(value)
    except ValueError:
        raise BadQuery(f"config line {lineno}: cannot parse value {value!r}") from None


def _scoring_config(config: dict) -> ScoringConfig:
    overrides = config.get("scoring", {})
    known = {f.name for f in dataclasses.fields(ScoringConfig)}
    unknown = set(overrides) - known
    if unknown:
        raise BadQuery(f"unknown scoring option(s): {', '.join(sorted(unknown))}")
    return ScoringConfig(**overrides)


def _default(value, config: dict, key: str, fallback=None):
    if value is not None:
        return value
    return config.get("defaults", {}).get(key, fallback)


def _build_filters(
    states: str | None,
    time_from: str | None,
    time_to: str | None,
    emotion: str | None,
    score_min: float | None,
    score_max: float | None,
    restrict_axis: str | None,
    restrict_value: str | None,
) -> FilterSpec:
    parsed_states = None
    if states:
        parsed_states = frozenset(s.strip().upper() for s in states.split(",") if s.strip())
    score_range = None
    if score_min is not None or score_max is not None:
        score_range = (
            score_min if score_min is not None else 0.0,
            score_max if score_max is not None else 1.0,
        )
    restrict_to = None
    if restrict_axis is not None or restrict_value is not None:
        if restrict_axis is None or restrict_value is None:
            raise BadQuery("--restrict-axis and --restrict-value must be given together")
        try:
            axis = Axis(restrict_axis)
        except ValueError:
            raise BadQuery(f"unknown restrict axis {restrict_axis!r}") from None
        validate_group_value(axis, restrict_value)
        restrict_to = GroupKey(axis, restrict_value)

    def _time(raw: str | None, name: str):
        if raw is None:
            return None
        try:
            return parse_timestamp(raw)
        except BadTimestamp:
            raise BadQuery(f"--{name} must be an ISO-8601 timestamp") from None

    return FilterSpec(
        states=parsed_states,
        time_from=_time(time_from, "from"),
        time_to=_time(time_to, "to"),
        emotion=emotion,
        score_range=score_range,
        restrict_to=restrict_to,
    )


_FILTER_OPTIONS = [
    click.option("--states", help="Comma-separated state codes, e.g. CA,NY."),
    click.option("--from", "time_from", help="Inclusive ISO-8601 lower time bound."),
    click.option("--to", "time_to", help="Exclusive ISO-8601 upper time bound."),
    click.option("--emotion", help="Emotion name for the score-range filter."),
    click.option("--min", "score_min", type=float, help="Score range lower bound."),
    click.option("--max", "score_max", type=float, help="Score range upper bound."),
    click.option("--restrict-axis", help="Drill-down axis: state, day, week, or month."),
    click.option("--restrict-value", help="Drill-down group key."),
]


def _with_filter_options(cmd):
    for option in reversed(_FILTER_OPTIONS):
        cmd = option(cmd)
    return cmd


@click.group()
@click.version_option(version=__version__, prog_name="tecvis")
@click.option("--config", "config_path", type=click.Path(), help="Optional TOML config.")
@click.pass_context
def cli(ctx: click.Context, config_path: str | None) -> None:
    """Tweet emotion comparison pipeline."""
    ctx.obj = _load_config(config_path)


@cli.command()
@click.option("--n", "count", type=int, required=True, help="Number of tweets.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--output", type=click.Path(), required=True)
def synth(count: int, seed: int, output: str) -> None:
    """Generate a deterministic raw JSONL corpus."""
    if count < 0:
        raise BadQuery("--n must be >= 0")
    tweets = synthesize_corpus(count, seed)
    with open(output, "w", encoding="utf-8") as fh:
        for t in tweets:
            fh.write(
                json.dumps(
                    {
                        "id": t.id,
                        "text": t.text,
                        "created_at": format_timestamp(t.created_at),
                        "state": t.state,
                        "lang": t.lang,
                    },
                    ensure_ascii=False,
                )
            )
            fh.write("\n")
    click.echo(canonical_json({"records_written": len(tweets)}))


@cli.command()
@click.option("--input", "input_path", type=click.Path(), required=True)
@click.option("--sentiment-lexicon", "sentiment_path", type=click.Path())
@click.option("--emotion-lexicon", "emotion_path", type=click.Path())
@click.option("--output", type=click.Path(), required=True)
@click.pass_obj
def ingest(config: dict, input_path: str, sentiment_path: str | None,
           emotion_path: str | None, output: str) -> None:
    """Validate, analyze, and write a store; prints the store meta as JSON."""
    sentiment_path = _default(sentiment_path, config, "sentiment_lexicon",
                              default_sentiment_lexicon_path())
    emotion_path = _default(emotion_path, config, "emotion_lexicon",
                            default_emotion_lexicon_path())
    slex = load_sentiment_lexicon(sentiment_path)
    elex = load_emotion_lexicon(emotion_path)
    scoring = _scoring_config(config)
    with open(input_path, encoding="utf-8") as fh:
        result = ingest_lines(fh, slex, elex, scoring)
    meta = write_store(result.records, output, rejected_count=result.rejected_count)
    click.echo(
        canonical_json(
            {
                "tweet_count": meta.tweet_count,
                "rejected_count": meta.rejected_count,
                "date_min": format_timestamp(meta.date_min) if meta.date_min else None,
                "date_max": format_timestamp(meta.date_max) if meta.date_max else None,
                "states_present": list(meta.states_present),
                "reject_reasons": dict(sorted(result.reject_reasons.items())),
            }
        )
    )


@cli.command("aggregate")
@click.option("--store", "store_path", type=click.Path())
@click.option("--axis", required=True, help="state or time.")
@click.option("--granularity", help="day, week, or month (time axis).")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv",
              show_default=True)
@_with_filter_options
@click.pass_obj
def aggregate_cmd(config: dict, store_path: str | None, axis: str, granularity: str | None,
                  fmt: str, states: str | None, time_from: str | None, time_to: str | None,
                  emotion: str | None, score_min: float | None, score_max: float | None,
                  restrict_axis: str | None, restrict_value: str | None) -> None:
    """Print dot-plot aggregate rows for a store."""
    store_path = _default(store_path, config, "store")
    if store_path is None:
        raise BadQuery("--store is required (or set defaults.store in the config)")
    resolved = resolve_axis(axis, granularity)
    f = _build_filters(states, time_from, time_to, emotion, score_min, score_max,
                       restrict_axis, restrict_value)
    rows = aggregate(apply_filters(read_store(store_path), f), resolved)
    if fmt == "json":
        # No trailing newline: the bytes match the /api/aggregate body exactly.
        sys.stdout.write(canonical_json(aggregate_payload(rows)))
        sys.stdout.flush()
    else:
        sys.stdout.write(export_csv(rows))
        sys.stdout.flush()


@cli.command("compare")
@click.option("--store", "store_path", type=click.Path())
@click.option("--axis", required=True, help="state or time.")
@click.option("--granularity", help="day, week, or month (time axis).")
@click.option("--a", "a_value", required=True, help="First group key.")
@click.option("--b", "b_value", required=True, help="Second group key.")
@_with_filter_options
@click.pass_obj
def compare_cmd(config: dict, store_path: str | None, axis: str, granularity: str | None,
                a_value: str, b_value: str, states: str | None, time_from: str | None,
                time_to: str | None, emotion: str | None, score_min: float | None,
                score_max: float | None, restrict_axis: str | None,
                restrict_value: str | None) -> None:
    """Print the 8-row tornado comparison table for two groups."""
    store_path = _default(store_path, config, "store")
    if store_path is None:
        raise BadQuery("--store is required (or set defaults.store in the config)")
    resolved = resolve_axis(axis, granularity)
    validate_group_value(resolved, a_value)
    validate_group_value(resolved, b_value)
    if a_value == b_value:
        raise SameGroup(f"--a and --b are both {a_value!r}")
    f = _build_filters(states, time_from, time_to, emotion, score_min, score_max,
                       restrict_axis, restrict_value)
    rows = {r.key.value: r for r in aggregate(apply_filters(read_store(store_path), f), resolved)}
    for value in (a_value, b_value):
        if value not in rows:
            raise UnknownGroup(f"group {value!r} not present after filters")
    result = compare_groups(rows[a_value], rows[b_value])
    header = f"{'emotion':<14}{'score_a':>10}{'score_b':>10}{'delta':>10}  higher_side"
    click.echo(header)
    for row in result.rows:
        click.echo(
            f"{row.emotion:<14}{row.score_a:>10.6f}{row.score_b:>10.6f}"
            f"{row.delta:>10.6f}  {row.higher_side.value}"
        )


@cli.command()
@click.option("--store", "store_path", type=click.Path())
@click.option("--port", type=int, default=None, help="Listen port (default 8080).")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--cors-origin", default=None, help="Allowed CORS origin (default *).")
@click.pass_obj
def serve(config: dict, store_path: str | None, port: int | None, host: str,
          cors_origin: str | None) -> None:
    """Serve the read-only API over a store."""
    import uvicorn

    from .server import create_app

    store_path = _default(store_path, config, "store")
    if store_path is None:
        raise BadQuery("--store is required (or set defaults.store in the config)")
    port = int(_default(port, config, "port", 8080))
    cors_origin = _default(cors_origin, config, "cors_origin", "*")
    app = create_app(store_path=store_path, cors_origin=cors_origin)
    uvicorn.run(app, host=host, port=port, log_level="info")


def main(argv: list[str] | None = None) -> int:
    """Entry point with the documented exit-code mapping."""
    try:
        cli.main(args=argv, standalone_mode=False)
        return EXIT_OK
    except _USAGE_ERRORS as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_USAGE
    except click.UsageError as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return EXIT_USAGE
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return EXIT_USAGE
    except (MalformedLexicon, DuplicateId, UnknownGroup) as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_DATA
    except TecvisError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_DATA
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
