"""Dispatch to the numba or numpy implementation of each hot kernel."""

import numpy as np

from . import _kernels_numpy as _np_k
from ._accel import backend, get_backend, set_backend

OK, MAXED, BAD_RATIO = _np_k.OK, _np_k.MAXED, _np_k.BAD_RATIO

__all__ = [
    "OK", "MAXED", "BAD_RATIO", "backend", "get_backend", "set_backend",
    "qpinf", "qpinf_array", "rphis", "humbert_sum",
]


def _impl():
    if get_backend() == "numba":
        from . import _kernels_numba

        return _kernels_numba
    return _np_k


def _carr(values):
    return np.ascontiguousarray(np.asarray(values, dtype=np.complex128).ravel())


def qpinf(a, q, tol, max_terms, consecutive_small):
    return _impl().qpinf(complex(a), complex(q), float(tol), int(max_terms), int(consecutive_small))


def qpinf_array(a, q, tol, max_terms, consecutive_small):
    arr = _carr(a)
    out, used, status = _impl().qpinf_array(arr, complex(q), float(tol), int(max_terms), int(consecutive_small))
    return np.asarray(out).reshape(np.shape(a)), int(used), int(status)


def rphis(numer, denom, z, q, tol, max_terms, consecutive_small):
    return _impl().rphis(_carr(numer), _carr(denom), complex(z), complex(q), float(tol),
                         int(max_terms), int(consecutive_small))


def humbert_sum(classical, q, num_m, num_n, num_k, den_m, x, y, init, tol, max_blocks, consecutive_small):
    return _impl().humbert_sum(
        bool(classical), complex(q), _carr(num_m), _carr(num_n), _carr(num_k), _carr(den_m),
        complex(x), complex(y), complex(init), float(tol), int(max_blocks), int(consecutive_small),
    )
