from dataclasses import replace
from datetime import date, timedelta

import numpy as np
import pytest

from infoveil.econometrics.ols import INTERCEPT
from infoveil.errors import CoverageError, DomainError, InvalidInputError
from infoveil.granger import (EFFECT_COLUMNS, PULSE, SUMMARY_COLUMNS, GrangerSpec,
                              InterventionSpec, build_design, case_lag, compare_decays,
                              fit_granger, intervention_indicator, region_split_analysis,
                              scan_lags, signal_lag, write_effects_csv, write_summary_csv)
from infoveil.series import DiffSeries, difference
from infoveil.synth import PulseConfig, SynthConfig, generate

FEB12 = date(2020, 2, 12)
D0 = date(2020, 1, 1)


def synth_pair(seed, kernel, days=143, ar=(0.6, 0.2), pulse=150.0, **kw):
    truth = generate(SynthConfig(days=days, kernel=kernel, ar=ar,
                                 pulse=PulseConfig(FEB12, pulse) if pulse else None, seed=seed, **kw))
    return difference(truth.cases), difference(truth.sick_normalized)


@pytest.mark.parametrize("d, expected", [
    (1, [1.0]), (2, [1.0, 0.5]), (3, [1.0, 2 / 3, 1 / 3]),
    (4, [1.0, 0.75, 0.5, 0.25]), (5, [1.0, 0.8, 0.6, 0.4, 0.2]),
])
def test_indicator_codings(d, expected):
    s = intervention_indicator(InterventionSpec(FEB12, d), date(2020, 2, 1), date(2020, 2, 29))
    i = s.index_of(FEB12)
    assert list(s.values[i:i + d]) == expected
    assert s.values.sum() == pytest.approx(sum(expected))
    assert np.count_nonzero(s.values) == d


def test_indicator_truncated_at_range_end():
    s = intervention_indicator(InterventionSpec(FEB12, 4), date(2020, 2, 10), date(2020, 2, 13))
    assert list(s.values) == [0, 0, 1.0, 0.75]


def test_indicator_errors():
    with pytest.raises(DomainError):
        intervention_indicator(InterventionSpec(FEB12), date(2020, 3, 1), date(2020, 3, 5))
    with pytest.raises(InvalidInputError):
        InterventionSpec(FEB12, 0)


@pytest.mark.parametrize("m", [0, 30, -1, 2.5, True])
def test_spec_lag_range(m):
    with pytest.raises(InvalidInputError):
        GrangerSpec(m)


def test_design_m1_hand_layout():
    cases = DiffSeries(D0, [1.0, 2.0, 4.0, 8.0])
    sig = DiffSeries(D0 - timedelta(days=1), [10.0, 20.0, 30.0, 40.0, 50.0])
    X, y, rows = build_design(cases, sig, GrangerSpec(1))
    # rows Jan 2..Jan 4; dS lag 1 at Jan 2 is the Jan 1 value (20)
    assert rows == [date(2020, 1, 2), date(2020, 1, 3), date(2020, 1, 4)]
    np.testing.assert_array_equal(X.values, [[1, 1, 20], [1, 2, 30], [1, 4, 40]])
    np.testing.assert_array_equal(y, [2, 4, 8])
    assert X.column_names == (INTERCEPT, case_lag(1), signal_lag(1))


def test_design_ends_at_signal_end_plus_one():
    cases = DiffSeries(D0, np.arange(10.0))
    sig = DiffSeries(D0, np.arange(5.0))
    _, _, rows = build_design(cases, sig, GrangerSpec(1))
    assert rows[0] == D0 + timedelta(days=1) and rows[-1] == D0 + timedelta(days=5)


def test_mainland_row_count():
    rng = np.random.default_rng(0)
    cases = DiffSeries(date(2019, 12, 1), rng.normal(size=122))
    posts = DiffSeries(date(2019, 11, 10), rng.normal(size=143))
    spec = GrangerSpec(20, InterventionSpec(FEB12), presample_cases="zero")
    X, y, rows = build_design(cases, posts, spec)
    assert (X.n, X.k) == (122, 42)
    assert rows[0] == date(2019, 12, 1) and rows[-1] == date(2020, 3, 31)
    # presample case lags are zero-filled
    assert X.column(case_lag(1))[0] == 0.0
    no_pulse = build_design(cases, posts, replace(spec, intervention=None))[0]
    assert no_pulse.k == X.k - 1


def test_coverage_error_names_required_start():
    cases = DiffSeries(date(2019, 12, 1), np.zeros(50))
    posts = DiffSeries(date(2019, 11, 20), np.zeros(80))
    with pytest.raises(CoverageError) as exc:
        build_design(cases, posts, GrangerSpec(20, presample_cases="zero"))
    assert exc.value.required_start == date(2019, 11, 11)
    assert "2019-11-11" in str(exc.value)


def test_no_leakage():
    rng = np.random.default_rng(1)
    cases = DiffSeries(D0, rng.normal(size=60))
    sig = DiffSeries(D0, rng.normal(size=60))
    spec = GrangerSpec(5, InterventionSpec(date(2020, 1, 20)))
    X, _, rows = build_design(cases, sig, spec)
    for r, t in enumerate(rows):
        for j in range(1, 6):
            d = t - timedelta(days=j)
            assert d < t
            assert X.column(case_lag(j))[r] == cases[d]
            assert X.column(signal_lag(j))[r] == sig[d]


def test_fit_report_consistency():
    dc, ds = synth_pair(0, {3: 0.3, 6: 0.25})
    rep = fit_granger(dc, ds, GrangerSpec(20, InterventionSpec(FEB12)))
    assert rep.delta_adj_r2 == rep.fit.adj_r2 - rep.baseline_fit.adj_r2
    assert rep.fit.r2 >= rep.baseline_fit.r2
    assert set(rep.baseline_fit.column_names) <= set(rep.fit.column_names)
    assert rep.baseline_fit.n == rep.fit.n
    assert len(rep.effects) == 20 and rep.effect(3).lag == 3
    for e in rep.effects:
        assert e.ci_lo <= e.coef <= e.ci_hi and 0 <= e.p <= 1
    assert {3, 6} <= set(rep.significant_lags())
    assert rep.joint_f.df_num == 20 and rep.joint_f.pvalue < 1e-6


def test_swapped_direction_is_independent():
    dc, ds = synth_pair(2, {3: 0.3})
    spec = GrangerSpec(5)
    a = fit_granger(dc, ds, spec)
    b = fit_granger(ds, dc, spec)
    a2 = fit_granger(dc, ds, spec)
    assert not np.allclose(a.fit.coefficients, b.fit.coefficients)
    np.testing.assert_array_equal(a.fit.coefficients, a2.fit.coefficients)


@pytest.mark.slow
def test_null_predictor_delta_small():
    hits = 0
    for seed in range(200):
        dc, _ = synth_pair(seed, {})
        noise = np.random.default_rng(10_000 + seed).normal(size=len(dc))
        ds = DiffSeries(dc.start_date, noise)
        rep = fit_granger(dc, ds, GrangerSpec(20, InterventionSpec(FEB12)))
        assert rep.fit.n == 122
        hits += abs(rep.delta_adj_r2) < 0.05
    assert hits / 200 >= 0.9


def test_scan_common_rows_and_monotone_r2():
    dc, ds = synth_pair(4, {1: 0.5, 2: 0.5, 3: 0.5}, ar=(0.5,), pulse=400.0)
    res = scan_lags(dc, ds, GrangerSpec(1, InterventionSpec(FEB12)), range(1, 9))
    assert [r.m for r in res.rows] == list(range(1, 9))
    assert len({r.n for r in res.rows}) == 1
    r2 = [r.r2 for r in res.rows]
    assert all(b >= a - 1e-12 for a, b in zip(r2, r2[1:]))
    assert [r.model_df for r in res.rows] == [2 * m + 1 for m in range(1, 9)]
    assert res.recommended == 3
    full = fit_granger(dc, ds, GrangerSpec(3, InterventionSpec(FEB12), sample_start=dc.start_date
                                           + timedelta(days=8)))
    assert res.rows[2].adj_r2 == pytest.approx(full.fit.adj_r2, rel=1e-12)


def test_scan_errors():
    dc, ds = synth_pair(4, {1: 0.5})
    with pytest.raises(InvalidInputError):
        scan_lags(dc, ds, GrangerSpec(1), [])
    with pytest.raises(InvalidInputError):
        scan_lags(dc, ds, GrangerSpec(1), [1, 30])


def test_compare_decays_table():
    dc, ds = synth_pair(5, {3: 0.3})
    rows = compare_decays(dc, ds, GrangerSpec(10, InterventionSpec(FEB12)))
    assert [r.decay_days for r in rows] == [1, 2, 3, 4, 5]
    assert sum(r.best for r in rows) == 1
    assert len({(r.n, r.k) for r in rows}) == 1
    # equal n and k: AIC ordering is the adjusted-R^2 (RSS) ordering reversed
    assert np.argsort([r.aic for r in rows]).tolist() == np.argsort([-r.adj_r2 for r in rows]).tolist()
    with pytest.raises(InvalidInputError):
        compare_decays(dc, ds, GrangerSpec(10))


@pytest.mark.slow
def test_instant_pulse_wins_aic():
    wins = 0
    for seed in range(200):
        dc, ds = synth_pair(seed, {3: 0.3, 6: 0.25})
        rows = compare_decays(dc, ds, GrangerSpec(20, InterventionSpec(FEB12)))
        wins += rows[0].best
    assert wins / 200 >= 0.9


def test_region_split():
    dc, ds = synth_pair(6, {2: 0.4})
    spec = GrangerSpec(5, InterventionSpec(FEB12))
    reps = region_split_analysis({"a": dc, "b": dc}, {"a": ds, "b": ds}, spec)
    assert list(reps) == ["a", "b"]
    np.testing.assert_array_equal(reps["a"].fit.coefficients, reps["b"].fit.coefficients)
    with pytest.raises(InvalidInputError):
        region_split_analysis({"a": dc}, {"b": ds}, spec)


def test_region_split_targeted_signal():
    hb_c, hb_s = synth_pair(7, {3: 0.3, 6: 0.25})
    other_c, _ = synth_pair(8, {}, pulse=None)
    spec = GrangerSpec(20, InterventionSpec(FEB12))
    reps = region_split_analysis({"hubei": hb_c, "elsewhere": other_c},
                                 {"hubei": hb_s, "elsewhere": hb_s}, spec,
                                 overrides={"elsewhere": replace(spec, intervention=None)})
    assert {3, 6} <= set(reps["hubei"].significant_lags())
    assert reps["hubei"].delta_adj_r2 > 0.05
    assert abs(reps["elsewhere"].delta_adj_r2) < 0.05
    assert PULSE not in reps["elsewhere"].fit.column_names
    with pytest.raises(InvalidInputError):
        region_split_analysis({"a": hb_c}, {"a": hb_s}, spec, overrides={"zz": spec})


def test_report_csvs(tmp_path):
    dc, ds = synth_pair(9, {3: 0.3})
    rep = fit_granger(dc, ds, GrangerSpec(4, InterventionSpec(FEB12)))
    write_effects_csv(tmp_path / "e.csv", rep)
    write_summary_csv(tmp_path / "s.csv", rep)
    e = (tmp_path / "e.csv").read_text().splitlines()
    s = (tmp_path / "s.csv").read_text().splitlines()
    assert e[0] == ",".join(EFFECT_COLUMNS) and len(e) == 5
    assert s[0] == ",".join(SUMMARY_COLUMNS) and len(s) == 2
    assert s[1].split(",")[:2] == [str(rep.fit.n), str(rep.fit.k)]
