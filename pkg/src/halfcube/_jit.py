"""Numba switch.

Set ``HALFCUBE_DISABLE_JIT=1`` to force the pure-numpy kernels (useful for
debugging and for the benchmark that compares both paths).
"""

from __future__ import annotations

import os
from typing import Any, Callable

JIT_ENABLED = os.environ.get("HALFCUBE_DISABLE_JIT", "0").lower() not in ("1", "true", "yes")

try:
    from numba import njit as _numba_njit
except ImportError:  # pragma: no cover
    _numba_njit = None
    JIT_ENABLED = False


def njit(*args: Any, **kwargs: Any) -> Callable:
    """Compile with numba when available; otherwise return the function unchanged.

    The compiled version is always produced if numba imports, so the benchmark
    can time both paths; ``JIT_ENABLED`` only decides which one is dispatched.
    """
    if _numba_njit is None:
        if args and callable(args[0]):
            return args[0]
        return lambda f: f
    return _numba_njit(*args, **kwargs)


HAVE_NUMBA = _numba_njit is not None
