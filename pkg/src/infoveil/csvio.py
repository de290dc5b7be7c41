"""CSV reading and writing shared by the library and the CLI.

Output conventions: header row, ``.`` decimal separator, 9 significant digits,
``\\n`` line endings, atomic replacement of the target file.
"""
from __future__ import annotations

import csv
import io
import os
import tempfile
from datetime import date, timedelta
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import DataFormatError
from .series import DailySeries, date_span


def fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "1" if value else "0"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        v = float(value)
        if v != v:
            return "nan"
        if v == 0.0:
            return "0"
        return f"{v:.9g}"
    if isinstance(value, date):
        return value.isoformat()
    return str(value)


def atomic_write_text(path, text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def render_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(v) for v in row])
    return buf.getvalue()


def write_csv(path, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    atomic_write_text(path, render_csv(header, rows))


def parse_date(text: str, path=None, line=None, column="date") -> date:
    try:
        return date.fromisoformat(text.strip())
    except ValueError:
        raise DataFormatError(f"expected YYYY-MM-DD, got {text!r}", path, line, column) from None


def parse_float(text: str, path=None, line=None, column="value") -> float:
    try:
        v = float(text)
    except ValueError:
        raise DataFormatError(f"expected a number, got {text!r}", path, line, column) from None
    if not np.isfinite(v):
        raise DataFormatError(f"non-finite value {text!r}", path, line, column)
    return v


def read_series_csv(path, column: str = "value", label: str | None = None,
                    fill_zero: bool = False) -> DailySeries:
    """Read one value column of a date-indexed CSV into a :class:`DailySeries`.

    Dates must be strictly ascending. A missing day is an error unless
    ``fill_zero`` is set, in which case 0 is inserted.
    """
    path = Path(path)
    try:
        fh = open(path, encoding="utf-8", newline="")
    except OSError as exc:
        raise DataFormatError(f"cannot open: {exc.strerror}", path) from None
    with fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None:
            raise DataFormatError("empty file", path, 1)
        header = [h.strip() for h in header]
        if "date" not in header:
            raise DataFormatError("header lacks a 'date' column", path, 1, "date")
        if column not in header:
            raise DataFormatError(f"header lacks a {column!r} column", path, 1, column)
        di, vi = header.index("date"), header.index(column)
        days: list[date] = []
        vals: list[float] = []
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not c.strip() for c in row):
                continue
            if len(row) != len(header):
                raise DataFormatError(
                    f"expected {len(header)} fields, got {len(row)}", path, lineno)
            d = parse_date(row[di], path, lineno)
            v = parse_float(row[vi], path, lineno, column)
            if days:
                gap = (d - days[-1]).days
                if gap <= 0:
                    raise DataFormatError(
                        f"dates must be strictly ascending ({d} after {days[-1]})",
                        path, lineno, "date")
                if gap > 1:
                    if not fill_zero:
                        raise DataFormatError(
                            f"missing {gap - 1} day(s) before {d}; use fill-zero to impute",
                            path, lineno, "date")
                    for i in range(1, gap):
                        days.append(days[-1] + timedelta(days=1))
                        vals.append(0.0)
            days.append(d)
            vals.append(v)
    if not days:
        raise DataFormatError("no data rows", path, 2)
    return DailySeries(days[0], np.array(vals), label if label is not None else column if column != "value" else path.stem)


def write_series_csv(path, series) -> None:
    write_csv(path, ["date", "value"], zip(series.dates, series.values))


def write_wide_csv(path, columns: Mapping[str, DailySeries]) -> None:
    """Outer-join several series on date; blank cells where a series has no value."""
    start = min(s.start_date for s in columns.values())
    end = max(s.end_date for s in columns.values())
    rows = []
    for d in date_span(start, end):
        rows.append([d] + [s[d] if s.covers(d) else None for s in columns.values()])
    write_csv(path, ["date", *columns.keys()], rows)
