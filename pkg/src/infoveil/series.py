"""Date-indexed daily series: construction, alignment, differencing, lagging."""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from datetime import date, timedelta
from typing import TypeVar

import numpy as np

from .errors import AlignmentError, DomainError, InvalidInputError

__all__ = [
    "DailySeries",
    "DiffSeries",
    "difference",
    "integrate",
    "normalize_per_million",
    "align",
    "lag",
    "date_span",
]

ONE_DAY = timedelta(days=1)


def date_span(start: date, end: date) -> list[date]:
    """Every date from ``start`` to ``end`` inclusive."""
    n = (end - start).days + 1
    return [start + timedelta(days=i) for i in range(max(n, 0))]


def _frozen_array(values) -> np.ndarray:
    arr = np.array(values, dtype=np.float64, copy=True).reshape(-1)
    arr.flags.writeable = False
    return arr


class _Dated:
    """Shared behaviour of the two series types (one value per consecutive day)."""

    start_date: date
    values: np.ndarray

    def _check(self):
        object.__setattr__(self, "values", _frozen_array(self.values))
        if self.values.size == 0:
            raise InvalidInputError("series must contain at least one value")
        if not np.all(np.isfinite(self.values)):
            raise InvalidInputError("series values must be finite")
        if not isinstance(self.start_date, date):
            raise InvalidInputError("start_date must be a calendar date")

    def __len__(self) -> int:
        return int(self.values.size)

    @property
    def end_date(self) -> date:
        return self.start_date + timedelta(days=len(self) - 1)

    @property
    def dates(self) -> list[date]:
        return date_span(self.start_date, self.end_date)

    def index_of(self, day: date) -> int:
        i = (day - self.start_date).days
        if not 0 <= i < len(self):
            raise KeyError(day)
        return i

    def __getitem__(self, day: date) -> float:
        return float(self.values[self.index_of(day)])

    def covers(self, day: date) -> bool:
        return 0 <= (day - self.start_date).days < len(self)

    def window(self, start: date, end: date):
        """Restrict to ``[start, end]``; both ends must lie inside the series."""
        if start > end or not (self.covers(start) and self.covers(end)):
            raise AlignmentError(
                f"window {start}..{end} not inside {self.start_date}..{self.end_date}"
            )
        i, j = self.index_of(start), self.index_of(end)
        return dataclasses.replace(self, start_date=start, values=self.values[i:j + 1])

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return all(
            np.array_equal(getattr(self, f.name), getattr(other, f.name))
            if f.name == "values"
            else getattr(self, f.name) == getattr(other, f.name)
            for f in dataclasses.fields(self)
        )

    __hash__ = None


@dataclass(frozen=True, eq=False)
class DailySeries(_Dated):
    start_date: date
    values: np.ndarray
    label: str = ""

    def __post_init__(self):
        self._check()

    def __repr__(self) -> str:
        return f"DailySeries({self.label!r}, {self.start_date}..{self.end_date}, n={len(self)})"


@dataclass(frozen=True, eq=False)
class DiffSeries(_Dated):
    """First differences; ``start_date`` is the second day of the source."""

    start_date: date
    values: np.ndarray
    source_label: str = ""

    def __post_init__(self):
        self._check()

    def __repr__(self) -> str:
        return f"DiffSeries({self.source_label!r}, {self.start_date}..{self.end_date}, n={len(self)})"


S = TypeVar("S", DailySeries, DiffSeries)


def difference(series: DailySeries) -> DiffSeries:
    if len(series) < 2:
        raise InvalidInputError("differencing needs at least two values")
    return DiffSeries(series.start_date + ONE_DAY, np.diff(series.values), series.label)


def integrate(diff: DiffSeries, first_value: float, label: str | None = None) -> DailySeries:
    """Inverse of :func:`difference` given the level on the day before ``diff`` starts."""
    values = np.concatenate(([float(first_value)], float(first_value) + np.cumsum(diff.values)))
    return DailySeries(
        diff.start_date - ONE_DAY, values, diff.source_label if label is None else label
    )


def normalize_per_million(counts: DailySeries, totals: DailySeries) -> DailySeries:
    """Counts per one million posts of the daily total."""
    if counts.start_date != totals.start_date or len(counts) != len(totals):
        raise AlignmentError(
            f"counts span {counts.start_date}..{counts.end_date} but totals span "
            f"{totals.start_date}..{totals.end_date}"
        )
    bad = np.flatnonzero(totals.values <= 0)
    if bad.size:
        day = totals.start_date + timedelta(days=int(bad[0]))
        raise DomainError(f"daily total must be positive; got {totals.values[bad[0]]} on {day}")
    return DailySeries(counts.start_date, counts.values / totals.values * 1e6, counts.label)


def align(a: S, b: S) -> tuple[S, S]:
    """Restrict both series to their common date range."""
    start = max(a.start_date, b.start_date)
    end = min(a.end_date, b.end_date)
    if start > end:
        raise AlignmentError(
            f"no overlap between {a.start_date}..{a.end_date} and {b.start_date}..{b.end_date}"
        )
    return a.window(start, end), b.window(start, end)


def lag(series: DiffSeries, k: int) -> DiffSeries:
    """Shift forward by ``k`` days: output at date d is the input at d - k."""
    if int(k) != k or k < 1:
        raise InvalidInputError(f"lag must be a positive integer, got {k!r}")
    k = int(k)
    if k >= len(series):
        raise InvalidInputError(f"lag {k} leaves nothing of a length-{len(series)} series")
    return dataclasses.replace(
        series,
        start_date=series.start_date + timedelta(days=k),
        values=series.values[: len(series) - k],
    )
