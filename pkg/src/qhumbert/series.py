"""Convergence-controlled summation engines.

Double series are summed along antidiagonals ``n + k = l``, which is the
rearrangement ``sum_{n,k} A(n, k) = sum_l sum_{kappa<=l} A(l - kappa, kappa)``.
Each block is generated from the previous one by the term-ratio recurrences,
so a term costs O(1) and no Pochhammer symbol is recomputed.

Basic hypergeometric series use the plain quotient convention

    rphis(a_1..a_r; b_1..b_s; q, z) = sum_n prod (a_i; q)_n / (prod (b_j; q)_n (q; q)_n) z**n

with no ``(-1)**n q**binom(n, 2)`` correction for ``s + 1 > r``; a zero
denominator parameter is therefore just a missing factor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from . import _kernels_numpy, kernels
from .types import (
    DEFAULT_CONFIG,
    DomainError,
    EvalResult,
    NotConverged,
    QContext,
    RatioUndefined,
    SeriesConfig,
    guard_denominator,
)

__all__ = [
    "DoubleSeriesSpec", "HyperSeriesSpec", "sum_double", "sum_rphis", "rphis_plain",
    "double_series_terms", "is_terminating", "sum_terms",
]


@dataclass(frozen=True)
class DoubleSeriesSpec:
    """A double series given by its ``(0, 0)`` term and two term ratios.

    ``ratio_n(n, k) = T(n+1, k) / T(n, k)`` and
    ``ratio_k(n, k) = T(n, k+1) / T(n, k)``. Both are called with integer
    ndarrays and must broadcast. ``kernel`` optionally names a compiled
    Humbert-type kernel (see :func:`qhumbert.kernels.humbert_sum`) computing
    the same series; it is used instead of the callables when the numba
    backend is active.
    """

    initial_term: complex
    ratio_n: Callable
    ratio_k: Callable
    kernel: tuple | None = field(default=None, compare=False)


@dataclass(frozen=True)
class HyperSeriesSpec:
    numerator: Sequence[complex]
    denominator: Sequence[complex]
    argument: complex


def _finish(value, used, tail, status, what):
    if status == kernels.BAD_RATIO:
        raise RatioUndefined(f"{what}: a term ratio is not finite near term {used}")
    res = EvalResult(complex(value), int(used), float(tail), status == kernels.OK)
    if not res.converged:
        raise NotConverged(f"{what}: not converged after {used} terms (tail ~ {tail:.3g})", res)
    return res


def sum_double(ctx: QContext, spec: DoubleSeriesSpec, cfg: SeriesConfig = DEFAULT_CONFIG) -> EvalResult:
    """Sum a double series antidiagonal by antidiagonal.

    Stops once ``cfg.consecutive_small`` successive blocks have
    ``sum |T| < tol * max(1, |partial|)``. ``terms_used`` counts antidiagonals.
    """
    if spec.kernel is not None and kernels.get_backend() == "numba":
        out = kernels.humbert_sum(*spec.kernel, spec.initial_term, cfg.tol, cfg.max_terms_2d,
                                  cfg.consecutive_small)
    else:
        out = _kernels_numpy.block_recurrence_sum(spec.initial_term, spec.ratio_n, spec.ratio_k, cfg.tol,
                                                  cfg.max_terms_2d, cfg.consecutive_small)
    return _finish(*out, "double series")


def double_series_terms(spec: DoubleSeriesSpec, max_ell: int) -> np.ndarray:
    """Terms ``T[n, k]`` for ``n + k <= max_ell`` via the same block recurrence.

    Entries with ``n + k > max_ell`` are left as zero.
    """
    out = np.zeros((max_ell + 1, max_ell + 1), np.complex128)
    prev = np.array([complex(spec.initial_term)])
    out[0, 0] = prev[0]
    for ell in range(1, max_ell + 1):
        k_prev = np.arange(ell)
        rn = np.asarray(spec.ratio_n(ell - 1 - k_prev, k_prev), dtype=np.complex128)
        rk = np.asarray(spec.ratio_k(np.array([0]), np.array([ell - 1])), dtype=np.complex128).ravel()[0]
        cur = np.empty(ell + 1, np.complex128)
        cur[:ell] = prev * rn
        cur[ell] = prev[-1] * rk
        kk = np.arange(ell + 1)
        out[ell - kk, kk] = cur
        prev = cur
    return out


def is_terminating(ctx: QContext, numerator, tol_pole: float = 1e-8, max_index: int = 10_000):
    """Smallest ``m`` with ``a q**m == 1`` for some numerator ``a`` (so terms vanish past ``m``), else None."""
    best = None
    q = ctx.q
    for a in numerator:
        a = complex(a)
        if a == 0:
            continue
        aj = a
        for j in range(max_index):
            if abs(1.0 - aj) < tol_pole:
                best = j if best is None else min(best, j)
                break
            if abs(aj) < 0.5:
                break
            aj *= q
    return best


def sum_rphis(ctx: QContext, spec: HyperSeriesSpec, cfg: SeriesConfig = DEFAULT_CONFIG) -> EvalResult:
    """Plain-convention basic hypergeometric series (see module docstring)."""
    for b in spec.denominator:
        guard_denominator(ctx, b, cfg.tol_pole)
    z = complex(spec.argument)
    if abs(z) >= 1.0 and is_terminating(ctx, spec.numerator, cfg.tol_pole) is None:
        raise DomainError(f"non-terminating series needs |argument| < 1, got {z!r}")
    out = kernels.rphis(list(spec.numerator), list(spec.denominator), z, ctx.q, cfg.tol,
                        cfg.max_terms_1d, cfg.consecutive_small)
    return _finish(*out, "rphis")


def rphis_plain(ctx: QContext, numerator, denominator, argument, cfg: SeriesConfig = DEFAULT_CONFIG) -> EvalResult:
    return sum_rphis(ctx, HyperSeriesSpec(tuple(numerator), tuple(denominator), argument), cfg)


def sum_terms(term, cfg: SeriesConfig = DEFAULT_CONFIG, what="series") -> EvalResult:
    """Sum ``term(0) + term(1) + ...`` for a callable producing single terms.

    Used for outer sums whose terms are themselves series values, so each
    call may be expensive; the stopping rule is the same as everywhere else.
    """
    acc = _kernels_numpy._Neumaier()
    small = 0
    last = 0.0
    for n in range(cfg.max_terms_1d):
        t = complex(term(n))
        if not np.isfinite(t.real) or not np.isfinite(t.imag):
            raise RatioUndefined(f"{what}: term {n} is not finite")
        acc.add(t)
        last = abs(t)
        if last < cfg.tol * max(1.0, abs(acc.value)):
            small += 1
            if small >= cfg.consecutive_small:
                return EvalResult(acc.value, n + 1, last)
        else:
            small = 0
    res = EvalResult(acc.value, cfg.max_terms_1d, last, False)
    raise NotConverged(f"{what}: not converged after {cfg.max_terms_1d} terms", res)
