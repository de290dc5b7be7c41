"""Lagged difference regressions for Granger-style forecasting tests.

The full model for row date t is

    dC_t = a0 + sum_{i=1..m} a_i dC_{t-i} + sum_{j=1..m} b_j dS_{t-j} + c1 I_t + e_t

and the baseline drops the dS block. Evidence is reported per lag (robust
t-ratios, standardized effects) together with the gain in adjusted R^2 over
the baseline and a joint test on the dS block.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from datetime import date, timedelta
from typing import Iterable, Mapping, Sequence

import numpy as np

from .csvio import render_csv, write_csv
from .econometrics.ols import (DEFAULT_ROBUST, DesignMatrix, FTest, RegressionFit,
                               confidence_interval, nested_f_test, ols_fit,
                               standardized_coefficients, wald_test)
from .errors import CoverageError, DomainError, InsufficientDataError, InvalidInputError
from .series import DailySeries, DiffSeries, date_span

MAX_LAG_LIMIT = 29
PULSE = "pulse"
PRESAMPLE_MODES = ("require", "zero")
DEFAULT_DECAYS = (1, 2, 3, 4, 5)
EFFECT_COLUMNS = ("lag", "coef", "std_coef", "se", "ci_lo", "ci_hi", "p")
SUMMARY_COLUMNS = ("n", "k", "adj_r2", "delta_adj_r2", "aic", "bic")


def case_lag(i: int) -> str:
    return f"dC_lag{i}"


def signal_lag(j: int) -> str:
    return f"dS_lag{j}"


@dataclass(frozen=True)
class InterventionSpec:
    date: date
    decay_days: int = 1

    def __post_init__(self):
        if int(self.decay_days) != self.decay_days or self.decay_days < 1:
            raise InvalidInputError(f"decay_days must be an integer >= 1, got {self.decay_days!r}")

    def weights(self) -> np.ndarray:
        d = self.decay_days
        return (d - np.arange(d)) / d


@dataclass(frozen=True)
class GrangerSpec:
    """Model specification.

    ``presample_cases="zero"`` treats case differences before the first
    observed day as 0, which is how a case series that starts with the
    outbreak is usually handled; the default requires observed history.
    """

    max_lag: int
    intervention: InterventionSpec | None = None
    predictor_label: str = "signal"
    presample_cases: str = "require"
    sample_start: date | None = None
    sample_end: date | None = None

    def __post_init__(self):
        m = self.max_lag
        if isinstance(m, bool) or int(m) != m or not 1 <= m <= MAX_LAG_LIMIT:
            raise InvalidInputError(f"max_lag must be an integer in [1, {MAX_LAG_LIMIT}], got {m!r}")
        if self.presample_cases not in PRESAMPLE_MODES:
            raise InvalidInputError(f"presample_cases must be one of {PRESAMPLE_MODES}")


def intervention_indicator(spec: InterventionSpec, start: date, end: date) -> DailySeries:
    """Linearly decaying pulse: (d - i)/d on ``spec.date + i`` for i < d, else 0."""
    if not start <= spec.date <= end:
        raise DomainError(f"intervention date {spec.date} outside {start}..{end}")
    n = (end - start).days + 1
    out = np.zeros(n)
    i0 = (spec.date - start).days
    w = spec.weights()
    stop = min(n, i0 + w.size)
    out[i0:stop] = w[: stop - i0]
    return DailySeries(start, out, "intervention")


def feasible_rows(cases: DiffSeries, predictor: DiffSeries, spec: GrangerSpec) -> tuple[date, date]:
    """First and last row date usable for ``spec`` (before any sample limits)."""
    m = spec.max_lag
    one = timedelta(days=1)
    first = cases.start_date if spec.presample_cases == "zero" else cases.start_date + m * one
    need = first - m * one
    if predictor.start_date > need:
        raise CoverageError(
            f"{spec.predictor_label} series starts {predictor.start_date}; lag {m} needs it "
            f"to start on or before {need}", required_start=need)
    last = min(cases.end_date, predictor.end_date + one)
    if spec.sample_start is not None:
        if spec.sample_start < first:
            raise CoverageError(f"sample start {spec.sample_start} precedes the first usable "
                                f"row {first}", required_start=spec.sample_start - m * one)
        first = spec.sample_start
    if spec.sample_end is not None:
        if spec.sample_end > last:
            raise InsufficientDataError(f"sample end {spec.sample_end} is after the last usable row {last}")
        last = spec.sample_end
    if last < first:
        raise InsufficientDataError(f"no usable rows: {first} > {last}")
    return first, last


def _lagged(series: DiffSeries, rows: list[date], k: int, pad_zero: bool) -> np.ndarray:
    out = np.empty(len(rows))
    step = timedelta(days=k)
    for r, t in enumerate(rows):
        d = t - step
        if series.covers(d):
            out[r] = series.values[(d - series.start_date).days]
        elif pad_zero and d < series.start_date:
            out[r] = 0.0
        else:
            raise CoverageError(f"no value for {d}", required_start=d)
    return out


def build_design(cases: DiffSeries, predictor: DiffSeries,
                 spec: GrangerSpec) -> tuple[DesignMatrix, np.ndarray, list[date]]:
    """Regressors, outcome and row dates for the full model."""
    first, last = feasible_rows(cases, predictor, spec)
    rows = date_span(first, last)
    pad = spec.presample_cases == "zero"
    cols: dict[str, np.ndarray] = {}
    for i in range(1, spec.max_lag + 1):
        cols[case_lag(i)] = _lagged(cases, rows, i, pad)
    for j in range(1, spec.max_lag + 1):
        cols[signal_lag(j)] = _lagged(predictor, rows, j, False)
    if spec.intervention is not None:
        cols[PULSE] = intervention_indicator(spec.intervention, first, last).values
    y = cases.window(first, last).values.copy()
    return DesignMatrix.from_columns(cols, n=len(rows)), y, rows


@dataclass(frozen=True)
class LagEffect:
    lag: int
    coef: float
    std_coef: float
    se: float
    ci_lo: float
    ci_hi: float
    p: float


@dataclass(frozen=True, eq=False)
class GrangerReport:
    spec: GrangerSpec
    fit: RegressionFit
    baseline_fit: RegressionFit
    effects: tuple[LagEffect, ...]
    delta_adj_r2: float
    joint_f: FTest
    joint_wald: FTest
    dates: tuple[date, ...] = field(repr=False)

    def effect(self, lag: int) -> LagEffect:
        return self.effects[lag - 1]

    def significant_lags(self, alpha: float = 0.05) -> list[int]:
        return [e.lag for e in self.effects if e.p < alpha]

    def summary_row(self) -> tuple:
        f = self.fit
        return (f.n, f.k, f.adj_r2, self.delta_adj_r2, f.aic, f.bic)


def delta_adj_r2(fit: RegressionFit, baseline: RegressionFit) -> float:
    """Adjusted-R^2 gain of the full model over its baseline."""
    return fit.adj_r2 - baseline.adj_r2


def fit_granger(cases: DiffSeries, predictor: DiffSeries, spec: GrangerSpec,
                robust: str = DEFAULT_ROBUST, level: float = 0.95) -> GrangerReport:
    X, y, rows = build_design(cases, predictor, spec)
    fit = ols_fit(X, y, robust)
    block = [signal_lag(j) for j in range(1, spec.max_lag + 1)]
    Xb = X.drop(block)
    base = ols_fit(Xb, y, robust)
    std = standardized_coefficients(fit, X, y)
    se = fit.robust_se
    effects = []
    for j, name in enumerate(block, start=1):
        i = fit.index(name)
        lo, hi = confidence_interval(fit, name, level)
        effects.append(LagEffect(j, float(fit.coefficients[i]), std[name], float(se[i]),
                                 lo, hi, fit.pvalue(name)))
    return GrangerReport(spec, fit, base, tuple(effects), delta_adj_r2(fit, base),
                         nested_f_test(fit, base), wald_test(fit, block), tuple(rows))


# ---------------------------------------------------------------------------
# Lag-order scan


@dataclass(frozen=True)
class ScanRow:
    m: int
    n: int
    r2: float
    adj_r2: float
    delta_adj_r2: float
    aic: float
    bic: float
    model_df: int


@dataclass(frozen=True)
class ScanResult:
    rows: tuple[ScanRow, ...]
    recommended: int
    threshold: float


def recommend_lag(rows: Sequence[ScanRow], threshold: float) -> int:
    """Smallest m after which every later step adds less than ``threshold`` adjusted R^2."""
    for r in reversed(rows):
        if r.delta_adj_r2 >= threshold:
            return r.m
    return rows[0].m


def _lag_fit(cases, predictor, spec, m, first, last, robust):
    if m == 0:
        X, y, _ = build_design(cases, predictor, replace(spec, max_lag=1,
                                                         sample_start=first, sample_end=last))
        X = X.drop([case_lag(1), signal_lag(1)])
    else:
        X, y, _ = build_design(cases, predictor, replace(spec, max_lag=m,
                                                         sample_start=first, sample_end=last))
    return ols_fit(X, y, robust)


def scan_lags(cases: DiffSeries, predictor: DiffSeries, spec_base: GrangerSpec,
              m_range: Iterable[int], threshold: float = 0.005,
              robust: str = DEFAULT_ROBUST) -> ScanResult:
    """Fit the full model for each m on the rows usable at the largest m.

    Each row's delta is relative to m - 1 (m = 0 meaning intercept and pulse
    only), fitted on the same rows.
    """
    ms = sorted(set(int(m) for m in m_range))
    if not ms:
        raise InvalidInputError("lag range is empty")
    for m in ms:
        replace(spec_base, max_lag=m)  # validates the range
    first, last = feasible_rows(cases, predictor, replace(spec_base, max_lag=ms[-1]))
    fits = {}
    for m in sorted(set(ms) | {m - 1 for m in ms}):
        fits[m] = _lag_fit(cases, predictor, spec_base, m, first, last, robust)
    out = [ScanRow(m, fits[m].n, fits[m].r2, fits[m].adj_r2, fits[m].adj_r2 - fits[m - 1].adj_r2,
                   fits[m].aic, fits[m].bic, fits[m].k - 1) for m in ms]
    return ScanResult(tuple(out), recommend_lag(out, threshold), threshold)


# ---------------------------------------------------------------------------
# Decay codings and region splits


@dataclass(frozen=True)
class DecayRow:
    decay_days: int
    n: int
    k: int
    adj_r2: float
    aic: float
    bic: float
    best: bool


def compare_decays(cases: DiffSeries, predictor: DiffSeries, spec: GrangerSpec,
                   decay_set: Sequence[int] = DEFAULT_DECAYS,
                   robust: str = DEFAULT_ROBUST) -> tuple[DecayRow, ...]:
    """Refit the full model per pulse coding; flag the AIC minimizer.

    Ties go to fewer parameters, then to the shorter decay.
    """
    if spec.intervention is None:
        raise InvalidInputError("decay comparison needs GrangerSpec.intervention to be set")
    decays = list(dict.fromkeys(int(d) for d in decay_set))
    if not decays:
        raise InvalidInputError("decay set is empty")
    fits = []
    for d in decays:
        s = replace(spec, intervention=replace(spec.intervention, decay_days=d))
        X, y, _ = build_design(cases, predictor, s)
        fits.append((d, ols_fit(X, y, robust)))
    win = min(range(len(fits)), key=lambda i: (fits[i][1].aic, fits[i][1].k, fits[i][0]))
    return tuple(DecayRow(d, f.n, f.k, f.adj_r2, f.aic, f.bic, i == win)
                 for i, (d, f) in enumerate(fits))


def region_split_analysis(cases_by_region: Mapping[str, DiffSeries],
                          predictors_by_region: Mapping[str, DiffSeries],
                          spec: GrangerSpec,
                          overrides: Mapping[str, GrangerSpec] | None = None,
                          robust: str = DEFAULT_ROBUST) -> dict[str, GrangerReport]:
    """Independent fits per region, in the order of ``cases_by_region``.

    ``overrides`` replaces the GrangerSpec for named regions, e.g. to keep the pulse
    in one region's model only.
    """
    if set(cases_by_region) != set(predictors_by_region):
        raise InvalidInputError("case and predictor regions differ")
    overrides = dict(overrides or {})
    unknown = set(overrides) - set(cases_by_region)
    if unknown:
        raise InvalidInputError(f"overrides for unknown regions: {sorted(unknown)}")
    return {r: fit_granger(cases_by_region[r], predictors_by_region[r], overrides.get(r, spec), robust)
            for r in cases_by_region}


# ---------------------------------------------------------------------------
# Report files


def effect_rows(report: GrangerReport) -> list[tuple]:
    return [(e.lag, e.coef, e.std_coef, e.se, e.ci_lo, e.ci_hi, e.p) for e in report.effects]


def render_effects_csv(report: GrangerReport) -> str:
    return render_csv(EFFECT_COLUMNS, effect_rows(report))


def write_effects_csv(path, report: GrangerReport) -> None:
    write_csv(path, EFFECT_COLUMNS, effect_rows(report))


def write_summary_csv(path, report: GrangerReport) -> None:
    write_csv(path, SUMMARY_COLUMNS, [report.summary_row()])


def write_scan_csv(path, scan: ScanResult) -> None:
    write_csv(path, ("m", "n", "r2", "adj_r2", "delta_adj_r2", "aic", "bic", "model_df", "recommended"),
              [(r.m, r.n, r.r2, r.adj_r2, r.delta_adj_r2, r.aic, r.bic, r.model_df,
                r.m == scan.recommended) for r in scan.rows])


def write_decay_csv(path, rows: Sequence[DecayRow]) -> None:
    write_csv(path, ("decay_days", "n", "k", "adj_r2", "aic", "bic", "best"),
              [(r.decay_days, r.n, r.k, r.adj_r2, r.aic, r.bic, r.best) for r in rows])
