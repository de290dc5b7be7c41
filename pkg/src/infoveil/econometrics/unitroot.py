"""Dickey-Fuller unit-root tests without trend.

Two variants share one regression core:

``adf_no_trend``
    Dy_t = c + rho * y_{t-1} + sum_j g_j Dy_{t-j} + e_t, t-ratio on rho.
``dfgls_demeaned``
    The series is first GLS-demeaned with local-to-unity parameter
    cbar = -7, then the same regression is run without the constant.

Critical values are read from a Monte Carlo table keyed by variant, series
length and lag order (see :mod:`.cvgen`), interpolated linearly in 1/T.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..errors import InsufficientDataError, InvalidInputError
from . import _cvtable
from .cvgen import GLS_CBAR, gls_demean_rows
from .ols import least_squares

VARIANTS = ("adf_no_trend", "dfgls_demeaned")
LEVELS = (0.01, 0.05, 0.10)


@dataclass(frozen=True)
class UnitRootResult:
    t_stat: float
    lags: int
    critical_values: tuple[float, float, float]
    variant: str
    nobs: int

    def __post_init__(self):
        cv = self.critical_values
        if not (cv[0] < cv[1] < cv[2]):
            raise InvalidInputError(f"critical values must increase from 1% to 10%: {cv}")

    def rejects(self, level: float = 0.05) -> bool:
        """True when the unit-root null is rejected at ``level`` (0.01, 0.05 or 0.10)."""
        try:
            i = LEVELS.index(level)
        except ValueError:
            raise InvalidInputError(f"level must be one of {LEVELS}") from None
        return self.t_stat < self.critical_values[i]


def gls_demean(y: Sequence[float], cbar: float = GLS_CBAR) -> np.ndarray:
    return gls_demean_rows(np.asarray(y, dtype=np.float64)[None, :], cbar)[0]


def critical_values(variant: str, T: int, lags: int) -> tuple[float, float, float]:
    """Interpolated (1%, 5%, 10%) critical values for a length-``T`` series."""
    if variant not in VARIANTS:
        raise InvalidInputError(f"variant must be one of {VARIANTS}, got {variant!r}")
    grid_lags = _cvtable.GRID_LAGS
    j = min(max(int(lags), 0), grid_lags[-1])
    rows = _cvtable.TABLE[variant]
    xs = [0.0]
    ys = [_cvtable.ASYMPTOTIC[variant]]
    for T_i, row in sorted(zip(_cvtable.GRID_T, rows), key=lambda p: -p[0]):
        cell = row[grid_lags.index(j)]
        if cell is not None:
            xs.append(1.0 / T_i)
            ys.append(cell)
    ys_arr = np.array(ys)
    x = 1.0 / T
    return tuple(float(np.interp(x, xs, ys_arr[:, c])) for c in range(3))


def _df_regression(y: np.ndarray, lags: int, constant: bool) -> tuple[float, int]:
    dy = np.diff(y)
    T = y.size
    rows = T - 1 - lags
    cols = [y[lags:T - 1]]
    names = ["y_lag1"]
    for j in range(1, lags + 1):
        cols.append(dy[lags - j:T - 1 - j])
        names.append(f"dy_lag{j}")
    if constant:
        cols.append(np.ones(rows))
        names.append("const")
    X = np.column_stack(cols)
    target = dy[lags:]
    if rows <= X.shape[1]:
        raise InsufficientDataError(
            f"{rows} usable observations for {X.shape[1]} regressors at {lags} lags")
    beta, resid, xtx_inv, _ = least_squares(X, target, names)
    s2 = float(resid @ resid) / (rows - X.shape[1])
    return float(beta[0] / np.sqrt(s2 * xtx_inv[0, 0])), rows


def unit_root_test(series: Sequence[float], max_lag: int, variant: str = "adf_no_trend") -> UnitRootResult:
    """Dickey-Fuller t test with exactly ``max_lag`` lagged differences."""
    if variant not in VARIANTS:
        raise InvalidInputError(f"variant must be one of {VARIANTS}, got {variant!r}")
    if int(max_lag) != max_lag or max_lag < 0:
        raise InvalidInputError(f"max_lag must be a non-negative integer, got {max_lag!r}")
    y = np.asarray(series, dtype=np.float64).reshape(-1)
    if not np.all(np.isfinite(y)):
        raise InvalidInputError("series contains non-finite values")
    if y.size <= max_lag + 2:
        raise InsufficientDataError(f"series of length {y.size} too short for {max_lag} lags")
    if variant == "dfgls_demeaned":
        t, nobs = _df_regression(gls_demean(y), int(max_lag), constant=False)
    else:
        t, nobs = _df_regression(y, int(max_lag), constant=True)
    return UnitRootResult(t, int(max_lag), critical_values(variant, y.size, int(max_lag)), variant, nobs)


def unit_root_table(series: Sequence[float], max_lags: int, variant: str = "dfgls_demeaned") -> list[UnitRootResult]:
    """One test per lag order, longest first (``max_lags`` down to 1)."""
    return [unit_root_test(series, p, variant) for p in range(max_lags, 0, -1)]
