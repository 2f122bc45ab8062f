"""Backend selection for the hot kernels.

``QHUMBERT_BACKEND=numpy`` forces the vectorized numpy kernels; the default
is ``numba`` whenever numba imports cleanly.
"""

import os
from contextlib import contextmanager

try:
    from numba import njit as _njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False


def njit(*args, **kwargs):
    if HAVE_NUMBA:
        return _njit(*args, **kwargs)

    def wrap(func):
        return func

    if args and callable(args[0]):
        return args[0]
    return wrap


BACKENDS = ("numba", "numpy")

_requested = os.environ.get("QHUMBERT_BACKEND", "").strip().lower() or "numba"
if _requested not in BACKENDS:
    raise ImportError(f"QHUMBERT_BACKEND must be one of {BACKENDS}, got {_requested!r}")
_backend = _requested if (_requested == "numpy" or HAVE_NUMBA) else "numpy"


def get_backend() -> str:
    return _backend


def set_backend(name: str) -> None:
    global _backend
    if name not in BACKENDS:
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba is not installed")
    _backend = name


@contextmanager
def backend(name: str):
    old = get_backend()
    set_backend(name)
    try:
        yield
    finally:
        set_backend(old)
