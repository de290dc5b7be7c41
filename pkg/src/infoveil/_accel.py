"""Backend selection for the compiled kernels.

Kernels are compiled with numba when it is importable, unless the environment
variable ``INFOVEIL_DISABLE_NUMBA`` is set to a truthy value, in which case the
pure-numpy implementations are used everywhere.
"""
from __future__ import annotations

import logging
import os

logger = logging.getLogger(__name__)

_FLAG = "INFOVEIL_DISABLE_NUMBA"


def _disabled_by_env() -> bool:
    return os.environ.get(_FLAG, "").strip().lower() in {"1", "true", "yes", "on"}


try:
    import numba

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAS_NUMBA = False

USE_NUMBA = HAS_NUMBA and not _disabled_by_env()

if not USE_NUMBA:
    logger.debug("numba kernels disabled; using numpy fallbacks")


def njit(fn):
    """Compile ``fn`` in nopython mode when numba is available.

    The decorator is applied whenever numba can be imported, independent of
    the env flag, so the loop kernels can always be compared against the numpy
    path in tests. Backend *dispatch* is what the env flag controls.
    """
    if HAS_NUMBA:
        return numba.njit(cache=True, nogil=True)(fn)
    return fn


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"
