"""Both kernel paths must agree; the env flag must switch dispatch."""
import os
import subprocess
import sys

import numpy as np
import pytest

from infoveil import _accel, kernels


def test_ar_filter_paths_agree(rng):
    drive = rng.normal(size=300)
    for ar in (np.array([]), np.array([0.5]), np.array([0.6, 0.2, -0.1])):
        a = kernels.ar_filter_loop(drive, ar)
        b = kernels.ar_filter_numpy(drive, ar)
        np.testing.assert_allclose(a, b, rtol=1e-12, atol=1e-12)


def test_ar_filter_recursion():
    out = kernels.ar_filter_numpy(np.array([1.0, 0.0, 0.0, 0.0]), np.array([0.5]))
    np.testing.assert_allclose(out, [1.0, 0.5, 0.25, 0.125])


def test_sandwich_meat_paths_agree(rng):
    X = rng.normal(size=(80, 6))
    e = rng.normal(size=80)
    a = kernels.sandwich_meat_loop(X, e)
    b = kernels.sandwich_meat_numpy(X, e)
    np.testing.assert_allclose(a, b, rtol=1e-12, atol=1e-12)
    np.testing.assert_array_equal(a, a.T)


@pytest.mark.parametrize("lags, constant", [(0, True), (3, True), (2, False), (8, False)])
def test_adf_tstats_paths_agree(rng, lags, constant):
    Y = np.cumsum(rng.normal(size=(40, 120)), axis=1)
    a = kernels.adf_tstats_loop(Y, lags, constant)
    b = kernels.adf_tstats_numpy(Y, lags, constant, chunk=7)
    np.testing.assert_allclose(a, b, rtol=1e-9)


def test_adf_tstats_matches_unit_root_regression(rng):
    from infoveil.econometrics.unitroot import unit_root_test
    y = np.cumsum(rng.normal(size=150))
    t = kernels.adf_tstats_numpy(y[None, :], 4, True)[0]
    assert t == pytest.approx(unit_root_test(y, 4, "adf_no_trend").t_stat, rel=1e-9)


def test_adf_tstats_too_short():
    Y = np.zeros((2, 5))
    assert np.isnan(kernels.adf_tstats_numpy(Y, 3, True)).all()
    assert np.isnan(kernels.adf_tstats_loop(Y, 3, True)).all()


def test_coincidence_paths_agree(rng):
    counts = rng.integers(0, 4, size=(50, 5)).astype(float)
    a = kernels.coincidence_matrix_loop(counts)
    b = kernels.coincidence_matrix_numpy(counts)
    np.testing.assert_allclose(a, b, rtol=1e-12, atol=1e-12)
    np.testing.assert_allclose(a, a.T)


def test_backend_reported():
    assert _accel.backend() in ("numba", "numpy")
    assert _accel.backend() == ("numba" if _accel.USE_NUMBA else "numpy")


def test_env_flag_forces_numpy():
    env = dict(os.environ, INFOVEIL_DISABLE_NUMBA="1")
    code = ("from infoveil import _accel, kernels;"
            "print(_accel.backend(), kernels.ar_filter is kernels.ar_filter_numpy)")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True,
                         check=True).stdout.split()
    assert out == ["numpy", "True"]
