"""Tornado-chart payload: per-emotion difference between two groups."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .aggregate import GroupAggregate, GroupKey
from .emotion import EMOTIONS
from .errors import AxisMismatch, SameGroup


class Side(str, Enum):
    A = "A"
    B = "B"
    NONE = "none"


@dataclass(frozen=True)
class TornadoRow:
    emotion: str
    score_a: float
    score_b: float
    delta: float
    higher_side: Side


@dataclass(frozen=True)
class ComparisonResult:
    key_a: GroupKey
    key_b: GroupKey
    rows: tuple[TornadoRow, ...]


def compare_groups(a: GroupAggregate, b: GroupAggregate) -> ComparisonResult:
    """Eight rows in canonical emotion order; higher_side marks where the
    darker difference segment renders."""
    if a.key.axis is not b.key.axis:
        raise AxisMismatch(f"cannot compare {a.key.axis.value} with {b.key.axis.value}")
    if a.key == b.key:
        raise SameGroup(f"both sides are {a.key.value!r}")
    rows = []
    for e in EMOTIONS:
        score_a = a.emotion_means[e].mean
        score_b = b.emotion_means[e].mean
        if score_a > score_b:
            side = Side.A
        elif score_b > score_a:
            side = Side.B
        else:
            side = Side.NONE
        rows.append(
            TornadoRow(
                emotion=e,
                score_a=score_a,
                score_b=score_b,
                delta=abs(score_a - score_b),
                higher_side=side,
            )
        )
    return ComparisonResult(key_a=a.key, key_b=b.key, rows=tuple(rows))
