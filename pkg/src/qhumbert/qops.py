"""q-operators acting on black-box evaluators.

An evaluator is any callable returning a number or an
:class:`~qhumbert.types.EvalResult`; operators unwrap it and return plain
complex values, so truncation diagnostics of the inner function are not
propagated. Evaluators must be deterministic and safe to call concurrently.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .types import (
    DEFAULT_CONFIG,
    DomainError,
    EvalResult,
    QContext,
    SeriesConfig,
    ZeroArgument,
    check_result,
    value_of,
)

__all__ = [
    "jackson_derivative", "jackson_derivative_iter", "jackson_integral_01",
    "theta_shift_x", "theta_shift_y", "bracket_theta", "theta_q_operator", "param_q_derivative",
]

ZERO_GUARD = 1e-8


def _nonzero(z, what="argument"):
    if abs(complex(z)) < ZERO_GUARD:
        raise ZeroArgument(f"q-derivative undefined at {what} {z!r}")


def jackson_derivative(ctx: QContext, f, z) -> complex:
    """``(f(z) - f(qz)) / ((1 - q) z)``."""
    _nonzero(z)
    q = ctx.q
    return (value_of(f(z)) - value_of(f(q * z))) / ((1.0 - q) * z)


@lru_cache(maxsize=256)
def _iter_weights(q, r):
    # D^r f(z) = ((1-q) z)**-r * sum_j w_j f(q**j z); each application maps
    # w_j -> w_j - q**-s w_{j-1} where s is the number of applications so far
    w = [1.0]
    for s in range(r):
        nxt = w + [0.0]
        for j in range(1, len(nxt)):
            nxt[j] -= q ** (-s) * w[j - 1]
        w = nxt
    return tuple(w)


def jackson_derivative_iter(ctx: QContext, f, z, r: int) -> complex:
    """``r``-fold Jackson derivative from the ``r + 1`` lattice values ``f(q**j z)``."""
    if r < 1:
        raise DomainError(f"r must be a positive integer, got {r}")
    _nonzero(z)
    q = ctx.q
    w = _iter_weights(q, r)
    total = 0j
    zj = z
    for wj in w:
        total += wj * value_of(f(zj))
        zj = zj * q
    return total / ((1.0 - q) * z) ** r


def jackson_integral_01(ctx: QContext, f, cfg: SeriesConfig = DEFAULT_CONFIG, vectorized=False,
                        chunk=64) -> EvalResult:
    """Jackson integral on [0, 1]: ``(1 - q) sum_k q**k f(q**k)``.

    With ``vectorized=True`` ``f`` is called on arrays of lattice points.
    """
    q = ctx.require_real("jackson_integral_01")
    total = 0j
    comp = 0j
    small = 0
    k0 = 0
    last = 0.0
    while k0 < cfg.max_terms_1d:
        k = np.arange(k0, min(cfg.max_terms_1d, k0 + chunk))
        t = q ** k
        if vectorized:
            vals = np.asarray(f(t), dtype=np.complex128)
        else:
            vals = np.array([value_of(f(float(tk))) for tk in t], dtype=np.complex128)
        terms = (1.0 - q) * t * vals
        for i, term in enumerate(terms):
            y = term - comp
            s = total + y
            comp = (s - total) - y
            total = s
            last = abs(term)
            if last < cfg.tol * max(1.0, abs(total)):
                small += 1
                if small >= cfg.consecutive_small:
                    return EvalResult(complex(total), int(k0 + i + 1), float(last))
            else:
                small = 0
        k0 += k.size
    return check_result(EvalResult(complex(total), cfg.max_terms_1d, float(last), False), "Jackson integral")


def theta_shift_x(ctx: QContext, f, x, y) -> complex:
    """``q**Theta_x f = f(qx, y)``."""
    return value_of(f(ctx.q * x, y))


def theta_shift_y(ctx: QContext, f, x, y) -> complex:
    return value_of(f(x, ctx.q * y))


def bracket_theta(ctx: QContext, f, axis: str, shift, x, y) -> complex:
    """The operator ``[Theta + shift]_q`` on the chosen axis (``x``, ``y`` or ``both``).

    ``(f(x, y) - q**shift f(sx, sy)) / (1 - q)`` with ``s = q`` on the shifted
    axes. On ``x**n y**k`` with ``axis="both"`` it multiplies by
    ``[n + k + shift]_q``.
    """
    q = ctx.q
    if axis not in ("x", "y", "both"):
        raise ValueError(f"axis must be 'x', 'y' or 'both', got {axis!r}")
    sx = q if axis in ("x", "both") else 1.0
    sy = q if axis in ("y", "both") else 1.0
    qs = 1.0 if shift == 0 else ctx.power(shift)
    return (value_of(f(x, y)) - qs * value_of(f(sx * x, sy * y))) / (1.0 - q)


def theta_q_operator(ctx: QContext, f, axis: str, x, y) -> complex:
    """``[Theta_x]_q f`` (or ``y``); the same operator as ``x D_{x,q}``."""
    if axis not in ("x", "y"):
        raise ValueError(f"axis must be 'x' or 'y', got {axis!r}")
    return bracket_theta(ctx, f, axis, 0, x, y)


def param_q_derivative(ctx: QContext, g, a) -> complex:
    """Jackson derivative in a parameter value ``a = q**alpha``."""
    _nonzero(a, "parameter")
    return jackson_derivative(ctx, g, a)

