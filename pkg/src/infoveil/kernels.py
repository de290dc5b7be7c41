"""Hot numeric kernels with a numba path and a pure-numpy path.

Each kernel exists twice: ``*_loop`` is written as explicit loops and compiled
with numba, ``*_numpy`` is the vectorised fallback. The public name dispatches
on :data:`infoveil._accel.USE_NUMBA`. Both paths are exercised by the test
suite and compared in ``benchmarks/bench_kernels.py``.
"""
from __future__ import annotations

import numpy as np
from scipy.signal import lfilter

from ._accel import USE_NUMBA, njit

__all__ = [
    "ar_filter",
    "sandwich_meat",
    "adf_tstats",
    "coincidence_matrix",
]


# ---------------------------------------------------------------------------
# AR recursion: out[t] = drive[t] + sum_i ar[i] * out[t - 1 - i]


@njit
def ar_filter_loop(drive, ar):
    n = drive.shape[0]
    p = ar.shape[0]
    out = np.empty(n)
    for t in range(n):
        acc = drive[t]
        for i in range(p):
            s = t - 1 - i
            if s < 0:
                break
            acc += ar[i] * out[s]
        out[t] = acc
    return out


def ar_filter_numpy(drive, ar):
    drive = np.asarray(drive, dtype=np.float64)
    ar = np.asarray(ar, dtype=np.float64)
    if ar.size == 0:
        return drive.copy()
    return lfilter([1.0], np.concatenate(([1.0], -ar)), drive)


# ---------------------------------------------------------------------------
# Sandwich meat: X' diag(e^2) X


@njit
def sandwich_meat_loop(X, resid):
    n, k = X.shape
    out = np.zeros((k, k))
    for r in range(n):
        w = resid[r] * resid[r]
        if w == 0.0:
            continue
        for i in range(k):
            xi = X[r, i] * w
            for j in range(i, k):
                out[i, j] += xi * X[r, j]
    for i in range(k):
        for j in range(i):
            out[i, j] = out[j, i]
    return out


def sandwich_meat_numpy(X, resid):
    Xw = X * (resid * resid)[:, None]
    meat = Xw.T @ X
    return 0.5 * (meat + meat.T)


# ---------------------------------------------------------------------------
# Batched Dickey-Fuller t-ratios for Monte Carlo work.
#
# Row r of Y is one series y_0..y_{T-1}. The regression is
#   dy_t = [c] + rho * y_{t-1} + sum_{j=1..lags} g_j dy_{t-j} + e_t
# over every t with a full lag history; the t-ratio on rho is returned.


@njit
def _chol_solve_inplace(A, b, k):
    # A is overwritten with its lower Cholesky factor; returns (x, ok)
    for j in range(k):
        s = A[j, j]
        for m in range(j):
            s -= A[j, m] * A[j, m]
        if s <= 0.0:
            return b, False
        A[j, j] = np.sqrt(s)
        for i in range(j + 1, k):
            s = A[i, j]
            for m in range(j):
                s -= A[i, m] * A[j, m]
            A[i, j] = s / A[j, j]
    x = b.copy()
    for i in range(k):
        s = x[i]
        for m in range(i):
            s -= A[i, m] * x[m]
        x[i] = s / A[i, i]
    for i in range(k - 1, -1, -1):
        s = x[i]
        for m in range(i + 1, k):
            s -= A[m, i] * x[m]
        x[i] = s / A[i, i]
    return x, True


@njit
def adf_tstats_loop(Y, lags, constant):
    R, T = Y.shape
    k = 1 + lags + (1 if constant else 0)
    out = np.empty(R)
    row = np.empty(k)
    for r in range(R):
        y = Y[r]
        XtX = np.zeros((k, k))
        Xty = np.zeros(k)
        yty = 0.0
        nobs = 0
        # dy index t runs over 1..T-1 (dy_t = y_t - y_{t-1}); need t - lags >= 1
        for t in range(lags + 1, T):
            target = y[t] - y[t - 1]
            row[0] = y[t - 1]
            for j in range(1, lags + 1):
                row[j] = y[t - j] - y[t - j - 1]
            if constant:
                row[k - 1] = 1.0
            for i in range(k):
                Xty[i] += row[i] * target
                for j in range(i, k):
                    XtX[i, j] += row[i] * row[j]
            yty += target * target
            nobs += 1
        for i in range(k):
            for j in range(i):
                XtX[i, j] = XtX[j, i]
        if nobs <= k:
            out[r] = np.nan
            continue
        A = XtX.copy()
        beta, ok = _chol_solve_inplace(A, Xty.copy(), k)
        if not ok:
            out[r] = np.nan
            continue
        rss = yty
        for i in range(k):
            rss -= beta[i] * Xty[i]
        s2 = rss / (nobs - k)
        # [XtX^{-1}]_{00} from the Cholesky factor: solve L L' v = e_0
        e0 = np.zeros(k)
        e0[0] = 1.0
        v = e0.copy()
        for i in range(k):
            s = v[i]
            for m in range(i):
                s -= A[i, m] * v[m]
            v[i] = s / A[i, i]
        inv00 = 0.0
        for i in range(k):
            inv00 += v[i] * v[i]
        out[r] = beta[0] / np.sqrt(s2 * inv00)
    return out


def adf_tstats_numpy(Y, lags, constant, chunk=512):
    Y = np.asarray(Y, dtype=np.float64)
    R, T = Y.shape
    k = 1 + lags + (1 if constant else 0)
    nobs = T - 1 - lags
    out = np.full(R, np.nan)
    if nobs <= k:
        return out
    dY = np.diff(Y, axis=1)
    for lo in range(0, R, chunk):
        hi = min(R, lo + chunk)
        d = dY[lo:hi]
        cols = [Y[lo:hi, lags:T - 1]]
        for j in range(1, lags + 1):
            cols.append(d[:, lags - j:T - 1 - j])
        if constant:
            cols.append(np.ones((hi - lo, nobs)))
        X = np.stack(cols, axis=2)
        target = d[:, lags:]
        XtX = np.einsum("rnk,rnl->rkl", X, X)
        Xty = np.einsum("rnk,rn->rk", X, target)
        beta = np.linalg.solve(XtX, Xty[..., None])[..., 0]
        resid = target - np.einsum("rnk,rk->rn", X, beta)
        s2 = np.einsum("rn,rn->r", resid, resid) / (nobs - k)
        inv00 = np.linalg.inv(XtX)[:, 0, 0]
        out[lo:hi] = beta[:, 0] / np.sqrt(s2 * inv00)
    return out


# ---------------------------------------------------------------------------
# Krippendorff coincidence matrix from a (units x values) count table.


@njit
def coincidence_matrix_loop(counts):
    n_units, n_vals = counts.shape
    out = np.zeros((n_vals, n_vals))
    for u in range(n_units):
        m = 0.0
        for c in range(n_vals):
            m += counts[u, c]
        if m < 2.0:
            continue
        w = 1.0 / (m - 1.0)
        for c in range(n_vals):
            nc = counts[u, c]
            if nc == 0.0:
                continue
            for d in range(n_vals):
                if c == d:
                    out[c, d] += nc * (nc - 1.0) * w
                else:
                    out[c, d] += nc * counts[u, d] * w
    return out


def coincidence_matrix_numpy(counts):
    counts = np.asarray(counts, dtype=np.float64)
    m = counts.sum(axis=1)
    keep = m >= 2
    c = counts[keep]
    w = 1.0 / (m[keep] - 1.0)
    pairs = np.einsum("u,uc,ud->cd", w, c, c)
    return pairs - np.diag((w[:, None] * c).sum(axis=0))


# X^T diag(e^2) X is one BLAS call in numpy and beats the compiled loop at the
# sizes used here (see the benchmark), so both backends take the numpy path
sandwich_meat = sandwich_meat_numpy

if USE_NUMBA:
    ar_filter = ar_filter_loop
    adf_tstats = adf_tstats_loop
    coincidence_matrix = coincidence_matrix_loop
else:
    ar_filter = ar_filter_numpy
    adf_tstats = adf_tstats_numpy
    coincidence_matrix = coincidence_matrix_numpy
