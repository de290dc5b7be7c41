from datetime import date

import numpy as np
import pytest

from infoveil.csvio import fmt, read_series_csv, render_csv, write_series_csv, write_wide_csv
from infoveil.errors import DataFormatError
from infoveil.series import DailySeries


def test_fmt_nine_significant_digits():
    assert fmt(1 / 3) == "0.333333333"
    assert fmt(123456789.123) == "123456789"
    assert fmt(0.0) == "0"
    assert fmt(-0.0) == "0"
    assert fmt(3) == "3"
    assert fmt(True) == "1"
    assert fmt(date(2020, 2, 12)) == "2020-02-12"
    assert fmt(float("nan")) == "nan"


def test_render_csv_header_and_newlines():
    assert render_csv(["a", "b"], [[1, 0.5]]) == "a,b\n1,0.5\n"


def test_roundtrip(tmp_path):
    s = DailySeries(date(2020, 2, 27), [1.5, 2.0, 1e-7, 4.0], "x")
    p = tmp_path / "s.csv"
    write_series_csv(p, s)
    assert p.read_text().splitlines()[0] == "date,value"
    back = read_series_csv(p)
    assert back.start_date == s.start_date
    np.testing.assert_array_equal(back.values, s.values)


def test_gap_is_error_unless_fill_zero(tmp_path):
    p = tmp_path / "gap.csv"
    p.write_text("date,value\n2020-01-01,1\n2020-01-03,2\n")
    with pytest.raises(DataFormatError) as exc:
        read_series_csv(p)
    assert exc.value.line == 3 and exc.value.column == "date"
    s = read_series_csv(p, fill_zero=True)
    assert list(s.values) == [1.0, 0.0, 2.0]


@pytest.mark.parametrize("body, line, column", [
    ("date,value\n2020-01-01,1\n2020-01-01,2\n", 3, "date"),
    ("date,value\n2020-01-02,1\n2020-01-01,2\n", 3, "date"),
    ("date,value\n2020-13-01,1\n", 2, "date"),
    ("date,value\n2020-01-01,abc\n", 2, "value"),
    ("date,value\n2020-01-01,inf\n", 2, "value"),
    ("date,value\n2020-01-01,1,2\n", 2, None),
    ("day,value\n2020-01-01,1\n", 1, "date"),
])
def test_malformed_reports_location(tmp_path, body, line, column):
    p = tmp_path / "bad.csv"
    p.write_text(body)
    with pytest.raises(DataFormatError) as exc:
        read_series_csv(p)
    assert exc.value.line == line
    assert exc.value.column == column
    assert str(p) in str(exc.value)


def test_named_column(tmp_path):
    p = tmp_path / "wide.csv"
    p.write_text("date,cases,sick\n2020-01-01,1,10\n2020-01-02,3,20\n")
    assert list(read_series_csv(p, "sick").values) == [10, 20]
    assert read_series_csv(p, "cases").label == "cases"


def test_wide_outer_join(tmp_path):
    a = DailySeries(date(2020, 1, 1), [1.0, 2.0])
    b = DailySeries(date(2020, 1, 2), [5.0, 6.0])
    p = tmp_path / "w.csv"
    write_wide_csv(p, {"a": a, "b": b})
    assert p.read_text() == "date,a,b\n2020-01-01,1,\n2020-01-02,2,5\n2020-01-03,,6\n"


def test_missing_file(tmp_path):
    with pytest.raises(DataFormatError):
        read_series_csv(tmp_path / "nope.csv")
