"""Ordinary least squares with heteroskedasticity-robust covariance."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, NamedTuple, Sequence

import numpy as np
from scipy import linalg, stats

from .. import kernels
from ..errors import (ColumnLookupError, DegenerateDataError, DomainError,
                      InsufficientDataError, InvalidInputError, RankError)

INTERCEPT = "intercept"
RANK_TOL = 1e-10
ROBUST_FLAVORS = ("HC0", "HC1", "HC3")
DEFAULT_ROBUST = "HC1"


@dataclass(frozen=True, eq=False)
class DesignMatrix:
    """Regressor matrix whose first column is the all-ones intercept."""

    values: np.ndarray
    column_names: tuple[str, ...]

    def __post_init__(self):
        X = np.array(self.values, dtype=np.float64)
        if X.ndim != 2:
            raise InvalidInputError("design matrix must be two-dimensional")
        names = tuple(self.column_names)
        if len(names) != X.shape[1]:
            raise InvalidInputError(f"{len(names)} names for {X.shape[1]} columns")
        if len(set(names)) != len(names):
            raise InvalidInputError("column names must be unique")
        if not names or names[0] != INTERCEPT or not np.all(X[:, 0] == 1.0):
            raise InvalidInputError("first column must be the all-ones intercept")
        if not np.all(np.isfinite(X)):
            raise InvalidInputError("design matrix contains non-finite entries")
        if X.shape[0] < X.shape[1]:
            raise InsufficientDataError(f"{X.shape[0]} rows for {X.shape[1]} columns")
        X.flags.writeable = False
        object.__setattr__(self, "values", X)
        object.__setattr__(self, "column_names", names)

    @classmethod
    def from_columns(cls, columns: Mapping[str, Sequence[float]], n: int | None = None) -> "DesignMatrix":
        """Build from named columns; the intercept is prepended automatically."""
        cols = [np.asarray(v, dtype=np.float64) for v in columns.values()]
        if n is None:
            if not cols:
                raise InvalidInputError("row count needed for an intercept-only design")
            n = cols[0].shape[0]
        X = np.column_stack([np.ones(n), *cols]) if cols else np.ones((n, 1))
        return cls(X, (INTERCEPT, *columns.keys()))

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def k(self) -> int:
        return self.values.shape[1]

    def index(self, name: str) -> int:
        try:
            return self.column_names.index(name)
        except ValueError:
            raise ColumnLookupError(f"no column named {name!r}") from None

    def column(self, name: str) -> np.ndarray:
        return self.values[:, self.index(name)]

    def drop(self, names: Sequence[str]) -> "DesignMatrix":
        drop = set(names)
        if INTERCEPT in drop:
            raise InvalidInputError("the intercept cannot be dropped")
        keep = [i for i, c in enumerate(self.column_names) if c not in drop]
        return DesignMatrix(self.values[:, keep], tuple(self.column_names[i] for i in keep))


@dataclass(frozen=True, eq=False)
class RegressionFit:
    column_names: tuple[str, ...]
    coefficients: np.ndarray
    residuals: np.ndarray
    classical_cov: np.ndarray
    robust_cov: np.ndarray
    robust_flavor: str
    rss: float
    tss: float
    r2: float
    adj_r2: float
    aic: float
    bic: float
    n: int
    k: int

    @property
    def residual_df(self) -> int:
        return self.n - self.k

    @property
    def params(self) -> dict[str, float]:
        return dict(zip(self.column_names, map(float, self.coefficients)))

    @property
    def robust_se(self) -> np.ndarray:
        return np.sqrt(np.clip(np.diag(self.robust_cov), 0.0, None))

    @property
    def classical_se(self) -> np.ndarray:
        return np.sqrt(np.clip(np.diag(self.classical_cov), 0.0, None))

    def index(self, name: str) -> int:
        try:
            return self.column_names.index(name)
        except ValueError:
            raise ColumnLookupError(f"no column named {name!r}") from None

    def tvalue(self, name: str) -> float:
        i = self.index(name)
        se = self.robust_se[i]
        return float(self.coefficients[i] / se) if se > 0 else math.copysign(math.inf, self.coefficients[i])

    def pvalue(self, name: str) -> float:
        """Two-sided p-value of the robust t-ratio on ``residual_df`` degrees of freedom."""
        return float(2.0 * stats.t.sf(abs(self.tvalue(name)), self.residual_df))


def _numerically_zero_rss(rss: float, y: np.ndarray) -> bool:
    scale = float(y @ y)
    return rss <= (np.finfo(float).eps ** 2) * y.size * max(scale, np.finfo(float).tiny)


def _qr(X: np.ndarray, names: Sequence[str]):
    Q, R = np.linalg.qr(X, mode="reduced")
    d = np.abs(np.diag(R))
    bad = np.flatnonzero(d < RANK_TOL * d.max()) if d.size else []
    if len(bad):
        j = int(bad[0])
        raise RankError(f"design is rank deficient: column {names[j]!r} is collinear "
                        "with the columns before it", column=names[j])
    return Q, R


def least_squares(X: np.ndarray, y: np.ndarray, names: Sequence[str] | None = None):
    """QR solve without any design-matrix conventions.

    Returns ``(beta, residuals, xtx_inv, Q)``. Used directly by the unit-root
    regressions, which may have no intercept.
    """
    names = names or [f"x{i}" for i in range(X.shape[1])]
    Q, R = _qr(X, names)
    beta = linalg.solve_triangular(R, Q.T @ y)
    resid = y - X @ beta
    Rinv = linalg.solve_triangular(R, np.eye(R.shape[0]))
    return beta, resid, Rinv @ Rinv.T, Q


def _sandwich(X: np.ndarray, resid: np.ndarray, xtx_inv: np.ndarray, flavor: str,
              leverage: np.ndarray | None = None) -> np.ndarray:
    n, k = X.shape
    if flavor == "HC3":
        if leverage is None:
            leverage = np.einsum("ij,jk,ik->i", X, xtx_inv, X)
        e = resid / np.clip(1.0 - leverage, np.finfo(float).eps, None)
    elif flavor in ("HC0", "HC1"):
        e = resid
    else:
        raise InvalidInputError(f"robust flavor must be one of {ROBUST_FLAVORS}, got {flavor!r}")
    meat = kernels.sandwich_meat(np.ascontiguousarray(X), np.ascontiguousarray(e))
    cov = xtx_inv @ meat @ xtx_inv
    if flavor == "HC1":
        cov *= n / (n - k)
    return 0.5 * (cov + cov.T)


class InformationCriteria(NamedTuple):
    aic: float
    bic: float


def gaussian_ic(rss: float, n: int, k: int) -> InformationCriteria:
    """Full Gaussian log-likelihood criteria; the error variance counts as a parameter."""
    p = k + 1
    base = n * math.log(2 * math.pi) + n * math.log(rss / n) + n
    return InformationCriteria(base + 2 * p, base + p * math.log(n))


def ols_fit(X: DesignMatrix, y: Sequence[float], robust: str = DEFAULT_ROBUST) -> RegressionFit:
    """Least-squares fit via QR with classical and robust covariance."""
    y = np.asarray(y, dtype=np.float64).reshape(-1)
    n, k = X.values.shape
    if y.size != n:
        raise InvalidInputError(f"y has {y.size} values for {n} design rows")
    if not np.all(np.isfinite(y)):
        raise InvalidInputError("y contains non-finite values")
    if n <= k:
        raise InsufficientDataError(f"need more rows than columns ({n} rows, {k} columns)")
    beta, resid, xtx_inv, Q = least_squares(X.values, y, X.column_names)
    rss = float(resid @ resid)
    dev = y - y.mean()
    tss = float(dev @ dev)
    classical = rss / (n - k) * xtx_inv
    classical = 0.5 * (classical + classical.T)
    robust_cov = _sandwich(X.values, resid, xtx_inv, robust, leverage=np.einsum("ij,ij->i", Q, Q))
    # clipped: rounding can push an intercept-only fit a hair below zero
    r2 = min(1.0, max(0.0, 1.0 - rss / tss)) if tss > 0 else math.nan
    adj = 1.0 - (1.0 - r2) * (n - 1) / (n - k) if tss > 0 else math.nan
    if _numerically_zero_rss(rss, y):
        aic = bic = math.nan
    else:
        aic, bic = gaussian_ic(rss, n, k)
    return RegressionFit(X.column_names, beta, resid, classical, robust_cov, robust,
                         rss, tss, r2, adj, aic, bic, n, k)


def robust_covariance(fit: RegressionFit, X: DesignMatrix, flavor: str | None = None) -> np.ndarray:
    """Sandwich covariance (X'X)^-1 X' diag(e^2) X (X'X)^-1 with the flavor's correction."""
    if X.column_names != fit.column_names or X.n != fit.n:
        raise InvalidInputError("fit was not produced from this design")
    xtx_inv = np.linalg.inv(X.values.T @ X.values)
    return _sandwich(X.values, fit.residuals, xtx_inv, flavor or fit.robust_flavor)


def information_criteria(fit: RegressionFit) -> InformationCriteria:
    if fit.rss <= 0 or math.isnan(fit.aic):
        raise DegenerateDataError("residual sum of squares is zero; AIC/BIC undefined")
    return gaussian_ic(fit.rss, fit.n, fit.k)


def standardized_coefficients(fit: RegressionFit, X: DesignMatrix, y: Sequence[float]) -> dict[str, float]:
    """Slopes rescaled to standard-deviation units: b * sd(x) / sd(y)."""
    y = np.asarray(y, dtype=np.float64)
    sd_y = float(np.std(y, ddof=1))
    if not sd_y > 0:
        raise DomainError("outcome has zero variance")
    out = {}
    for j, name in enumerate(X.column_names):
        if name == INTERCEPT:
            continue
        sd_x = float(np.std(X.values[:, j], ddof=1))
        if not sd_x > 0:
            raise DomainError(f"column {name!r} has zero variance")
        out[name] = float(fit.coefficients[fit.index(name)]) * sd_x / sd_y
    return out


def t_quantile(prob: float, df: float) -> float:
    return float(stats.t.ppf(prob, df))


def confidence_interval(fit: RegressionFit, column: str, level: float = 0.95) -> tuple[float, float]:
    """Student-t interval around the estimate using the robust standard error."""
    if not 0.0 < level < 1.0:
        raise DomainError(f"confidence level must lie in (0, 1), got {level}")
    i = fit.index(column)
    half = t_quantile((1.0 + level) / 2.0, fit.residual_df) * fit.robust_se[i]
    b = float(fit.coefficients[i])
    return b - half, b + half


def format_effect(estimate: float, lo: float, hi: float, level: float = 0.95, digits: int = 3) -> str:
    """Render an estimate as ``0.133 (95% CI: 0.065, 0.201)``."""
    pct = f"{level * 100:.10g}"
    return f"{estimate:.{digits}f} ({pct}% CI: {lo:.{digits}f}, {hi:.{digits}f})"


class FTest(NamedTuple):
    statistic: float
    df_num: int
    df_den: int
    pvalue: float


def nested_f_test(full: RegressionFit, restricted: RegressionFit) -> FTest:
    """Classical F test of the columns in ``full`` that ``restricted`` omits."""
    q = full.k - restricted.k
    if q <= 0 or full.n != restricted.n:
        raise InvalidInputError("restricted model must be nested in the full model on the same rows")
    df = full.residual_df
    f = ((restricted.rss - full.rss) / q) / (full.rss / df)
    return FTest(float(f), q, df, float(stats.f.sf(f, q, df)))


def wald_test(fit: RegressionFit, columns: Sequence[str], robust: bool = True) -> FTest:
    """Wald test that the named coefficients are jointly zero, in F form."""
    idx = [fit.index(c) for c in columns]
    b = fit.coefficients[idx]
    V = (fit.robust_cov if robust else fit.classical_cov)[np.ix_(idx, idx)]
    q = len(idx)
    stat = float(b @ np.linalg.solve(V, b)) / q
    return FTest(stat, q, fit.residual_df, float(stats.f.sf(stat, q, fit.residual_df)))
