"""Optional numba acceleration for the hot kernels.

Set ``DICYCLES_DISABLE_NUMBA=1`` to run every kernel as plain Python over
numpy arrays. The flag is read once, at import time.
"""

import os

__all__ = ["NUMBA_ENABLED", "njit"]


def _flag_set(name):
    return os.environ.get(name, "").strip().lower() in ("1", "true", "yes", "on")


NUMBA_ENABLED = False

if not _flag_set("DICYCLES_DISABLE_NUMBA"):
    try:
        import numba

        NUMBA_ENABLED = True
    except ImportError:  # pragma: no cover - numba is a hard dependency here
        pass


def njit(func):
    """Compile ``func`` in nopython mode when numba is enabled, else return it."""
    if NUMBA_ENABLED:
        return numba.njit(cache=True)(func)
    return func
