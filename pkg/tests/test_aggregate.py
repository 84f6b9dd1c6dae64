

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tecvis.aggregate import (
    Axis,
    FilterSpec,
    GroupKey,
    aggregate,
    apply_filters,
    bucket_timestamp,
    drill_down,
    export_csv,
    resolve_axis,
    validate_group_value,
)
from tecvis.emotion import EMOTIONS, Category
from tecvis.errors import BadQuery, UnknownGroup
from tecvis.sentiment import Polarity

from .conftest import make_tweet, ts
from .reference import naive_aggregate


class TestBucketTimestamp:
    def test_month(self):
        key = bucket_timestamp(ts("2021-01-15T12:00:00"), Axis.MONTH)
        assert key == GroupKey(Axis.MONTH, "2021-01")

    def test_day(self):
        key = bucket_timestamp(ts("2021-01-15T12:00:00"), Axis.DAY)
        assert key.value == "2021-01-15"

    def test_iso_week(self):
        assert bucket_timestamp(ts("2021-01-15T12:00:00"), Axis.WEEK).value == "2021-W02"

    def test_iso_week_year_boundary(self):
        # Jan 1 2021 belongs to ISO week 53 of 2020
        assert bucket_timestamp(ts("2021-01-01T00:00:00"), Axis.WEEK).value == "2020-W53"

    def test_state_axis_rejected(self):
        with pytest.raises(BadQuery):
            bucket_timestamp(ts("2021-01-15T12:00:00"), Axis.STATE)


class TestResolveAxis:
    def test_state(self):
        assert resolve_axis("state", None) is Axis.STATE

    def test_time_needs_granularity(self):
        with pytest.raises(BadQuery):
            resolve_axis("time", None)

    def test_time_with_granularity(self):
        assert resolve_axis("time", "week") is Axis.WEEK

    def test_unknown_axis(self):
        with pytest.raises(BadQuery):
            resolve_axis("country", None)

    def test_state_granularity_rejected(self):
        with pytest.raises(BadQuery):
            resolve_axis("time", "state")


class TestFilterSpec:
    def test_score_range_requires_emotion(self):
        with pytest.raises(BadQuery):
            FilterSpec(score_range=(0.2, 0.8))

    def test_inverted_range_rejected(self):
        with pytest.raises(BadQuery):
            FilterSpec(emotion="joy", score_range=(0.9, 0.1))

    def test_unknown_state_rejected(self):
        with pytest.raises(BadQuery):
            FilterSpec(states=frozenset({"CA", "ZZ"}))

    def test_unknown_emotion_rejected(self):
        with pytest.raises(BadQuery):
            FilterSpec(emotion="bliss")

    def test_range_outside_unit_interval_rejected(self):
        with pytest.raises(BadQuery):
            FilterSpec(emotion="joy", score_range=(-0.1, 0.5))


class TestApplyFilters:
    def test_empty_spec_is_identity(self, small_corpus):
        assert apply_filters(small_corpus, FilterSpec()) == small_corpus

    def test_state_filter(self):
        tweets = [make_tweet(f"c{i}", state="CA") for i in range(3)]
        tweets += [make_tweet(f"n{i}", state="NY") for i in range(2)]
        kept = apply_filters(tweets, FilterSpec(states=frozenset({"CA"})))
        assert [t.id for t in kept] == ["c0", "c1", "c2"]

    def test_score_range_inclusive_bounds(self):
        tweets = [
            make_tweet("a", category=Category.POSITIVE, joy=0.2, trust=0.8),
            make_tweet("b", category=Category.POSITIVE, joy=0.3, trust=0.7),
            make_tweet("c", category=Category.POSITIVE, joy=0.5, trust=0.5),
        ]
        kept = apply_filters(tweets, FilterSpec(emotion="joy", score_range=(0.3, 1.0)))
        assert [t.id for t in kept] == ["b", "c"]

    def test_time_bounds_from_inclusive_to_exclusive(self):
        tweets = [
            make_tweet("a", created_at="2021-01-01T00:00:00"),
            make_tweet("b", created_at="2021-02-01T00:00:00"),
            make_tweet("c", created_at="2021-03-01T00:00:00"),
        ]
        kept = apply_filters(
            tweets,
            FilterSpec(time_from=ts("2021-02-01T00:00:00"), time_to=ts("2021-03-01T00:00:00")),
        )
        assert [t.id for t in kept] == ["b"]

    def test_restrict_to_group(self):
        tweets = [
            make_tweet("a", state="CA", created_at="2021-01-10T00:00:00"),
            make_tweet("b", state="CA", created_at="2021-02-10T00:00:00"),
            make_tweet("c", state="NY", created_at="2021-01-20T00:00:00"),
        ]
        kept = apply_filters(tweets, FilterSpec(restrict_to=GroupKey(Axis.MONTH, "2021-01")))
        assert [t.id for t in kept] == ["a", "c"]

    @settings(max_examples=30)
    @given(
        lo=st.floats(min_value=0, max_value=0.5),
        width=st.floats(min_value=0, max_value=0.5),
        shrink=st.floats(min_value=0, max_value=0.2),
    )
    def test_monotone_in_range_width(self, small_corpus, lo, width, shrink):
        wide = FilterSpec(emotion="joy", score_range=(lo, lo + width))
        narrow_width = max(width - shrink, 0.0)
        narrow = FilterSpec(emotion="joy", score_range=(lo, lo + narrow_width))
        kept_wide = {t.id for t in apply_filters(small_corpus, wide)}
        kept_narrow = {t.id for t in apply_filters(small_corpus, narrow)}
        assert kept_narrow <= kept_wide


class TestAggregate:
    def test_two_value_mean(self):
        tweets = [
            make_tweet("a", category=Category.POSITIVE, joy=0.4, trust=0.1,
                       surprise=0.1, anticipation=0.1, fear=0.3),
            make_tweet("b", category=Category.POSITIVE, joy=0.6, trust=0.1,
                       surprise=0.1, anticipation=0.1, anger=0.1),
        ]
        rows = aggregate(tweets, Axis.STATE)
        assert len(rows) == 1
        stat = rows[0].emotion_means["joy"]
        assert stat.mean == pytest.approx(0.5)
        assert stat.contributing_count == 2

    def test_out_of_category_score_excluded(self):
        tweets = [
            make_tweet("a", polarity=Polarity.NEGATIVE, category=Category.NEGATIVE,
                       joy=0.5, fear=0.25, sadness=0.25),
        ]
        rows = aggregate(tweets, Axis.STATE)
        stat = rows[0].emotion_means["joy"]
        assert stat.mean == 0.0
        assert stat.contributing_count == 0
        assert rows[0].emotion_means["fear"].contributing_count == 1

    def test_polarity_counts(self):
        tweets = [
            make_tweet("a", polarity=Polarity.NEGATIVE),
            make_tweet("b", polarity=Polarity.NEGATIVE),
            make_tweet("c", polarity=Polarity.NEUTRAL),
            make_tweet("d", polarity=Polarity.POSITIVE),
        ]
        row = aggregate(tweets, Axis.STATE)[0]
        assert row.polarity_counts == (2, 1, 1)
        assert row.tweet_count == 4

    def test_states_alphabetical(self, small_corpus):
        rows = aggregate(small_corpus, Axis.STATE)
        values = [r.key.value for r in rows]
        assert values == sorted(values)

    def test_weeks_chronological(self, small_corpus):
        rows = aggregate(small_corpus, Axis.WEEK)
        values = [r.key.value for r in rows]
        assert values == sorted(values)
        assert values[0].startswith("2020-W53")

    def test_matches_naive_reference(self, small_corpus):
        for axis in ("state", "day", "week", "month"):
            rows = aggregate(small_corpus, Axis(axis))
            expected = naive_aggregate(small_corpus, axis)
            assert [r.key.value for r in rows] == list(expected)
            for row in rows:
                ref = expected[row.key.value]
                assert row.tweet_count == ref["tweet_count"]
                assert row.polarity_counts == ref["polarity_counts"]
                for e in EMOTIONS:
                    assert row.emotion_means[e].contributing_count == ref["contributing"][e]
                    assert row.emotion_means[e].mean == pytest.approx(
                        ref["means"][e], abs=1e-9
                    )

    def test_contributing_means_floored_above_threshold(self, small_corpus):
        for row in aggregate(small_corpus, Axis.STATE):
            for stat in row.emotion_means.values():
                if stat.contributing_count:
                    assert 0.1 < stat.mean <= 1.0
                else:
                    assert stat.mean == 0.0


class TestDrillDown:
    def test_state_to_month(self, small_corpus):
        rows = drill_down(small_corpus, GroupKey(Axis.STATE, "CA"), Axis.MONTH)
        assert rows
        assert all(r.key.axis is Axis.MONTH for r in rows)
        naive = naive_aggregate(small_corpus, "month", restrict_axis="state", restrict_value="CA")
        assert [r.key.value for r in rows] == list(naive)

    def test_conservation_both_directions(self, small_corpus):
        by_state = {r.key.value: r.tweet_count for r in aggregate(small_corpus, Axis.STATE)}
        for state, count in by_state.items():
            children = drill_down(small_corpus, GroupKey(Axis.STATE, state), Axis.MONTH)
            assert sum(r.tweet_count for r in children) == count
        by_month = {r.key.value: r.tweet_count for r in aggregate(small_corpus, Axis.MONTH)}
        for month, count in by_month.items():
            children = drill_down(small_corpus, GroupKey(Axis.MONTH, month), Axis.STATE)
            assert sum(r.tweet_count for r in children) == count

    def test_unknown_group(self, small_corpus):
        with pytest.raises(UnknownGroup):
            drill_down(small_corpus, GroupKey(Axis.MONTH, "2030-01"), Axis.STATE)

    def test_same_axis_rejected(self, small_corpus):
        with pytest.raises(BadQuery):
            drill_down(small_corpus, GroupKey(Axis.STATE, "CA"), Axis.STATE)

    def test_month_to_state_example(self, small_corpus):
        rows = drill_down(small_corpus, GroupKey(Axis.MONTH, "2021-01"), Axis.STATE)
        january = [
            t for t in small_corpus if t.created_at.strftime("%Y-%m") == "2021-01"
        ]
        assert sum(r.tweet_count for r in rows) == len(january)


class TestCsvExport:
    def test_header_and_row_shape(self, small_corpus):
        rows = aggregate(small_corpus, Axis.STATE)
        text = export_csv(rows)
        lines = text.strip().split("\n")
        header = lines[0].split(",")
        assert header[:5] == ["key", "tweet_count", "negative", "neutral", "positive"]
        assert header[5] == "anger_mean"
        assert len(header) == 5 + 2 * len(EMOTIONS)
        assert len(lines) == 1 + len(rows)

    def test_empty_rows(self):
        text = export_csv([])
        assert text.startswith("key,tweet_count")
        assert len(text.strip().split("\n")) == 1


class TestValidateGroupValue:
    def test_good_values(self):
        validate_group_value(Axis.STATE, "CA")
        validate_group_value(Axis.DAY, "2021-01-15")
        validate_group_value(Axis.WEEK, "2021-W02")
        validate_group_value(Axis.MONTH, "2021-01")

    def test_bad_values(self):
        with pytest.raises(BadQuery):
            validate_group_value(Axis.STATE, "ZZ")
        with pytest.raises(BadQuery):
            validate_group_value(Axis.MONTH, "2021-1")
        with pytest.raises(BadQuery):
            validate_group_value(Axis.WEEK, "2021-02")
