"""Scalar q-calculus primitives.

Parameters of the q-series are carried as q-power values ``a = q**alpha``
(shifting ``alpha`` by one is multiplication by ``q``); functions that need
the exponent itself, such as :func:`q_number` and :func:`q_gamma`, take it
explicitly. Complex powers use the principal branch.
"""

from __future__ import annotations

from dataclasses import replace

import numpy as np

from . import kernels
from .types import (
    DEFAULT_CONFIG,
    DomainError,
    EvalResult,
    NotConverged,
    PoleAtNonpositiveInteger,
    QContext,
    SeriesConfig,
    check_result,
)

__all__ = [
    "q_number", "q_factorial", "q_pochhammer", "q_pochhammer_inf", "q_pochhammer_inf_array",
    "q_gamma", "q_beta", "q_exponential", "q_power_binomial", "q_power_product",
]


def _is_nonpositive_integer(z, eps=1e-12) -> bool:
    z = complex(z)
    return abs(z.imag) < eps and z.real < 0.5 and abs(z.real - round(z.real)) < eps


def q_number(ctx: QContext, alpha) -> complex:
    """``[alpha]_q = (1 - q**alpha) / (1 - q)``."""
    return (1.0 - ctx.power(alpha)) / (1.0 - ctx.q)


def q_factorial(ctx: QContext, n: int) -> complex:
    """``[n]_q! = [1]_q [2]_q ... [n]_q``."""
    out = 1.0
    for j in range(1, n + 1):
        out *= q_number(ctx, j)
    return out


def q_pochhammer(ctx: QContext, a, n: int):
    """Finite q-shifted factorial ``(a; q)_n``; 1 for ``n == 0``."""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    q = ctx.q
    out = 1.0
    aq = a
    for _ in range(n):
        out = out * (1.0 - aq)
        aq = aq * q
    return out


def q_pochhammer_inf(ctx: QContext, a, cfg: SeriesConfig = DEFAULT_CONFIG) -> EvalResult:
    """``(a; q)_inf``, truncated once ``|a q^r| < tol`` for ``consecutive_small`` factors."""
    val, used, tail, status = kernels.qpinf(a, ctx.q, cfg.tol, cfg.max_terms_1d, cfg.consecutive_small)
    res = EvalResult(complex(val), int(used), float(tail), status == kernels.OK)
    return check_result(res, f"({a}; q)_inf")


def q_pochhammer_inf_array(ctx: QContext, a, cfg: SeriesConfig = DEFAULT_CONFIG) -> np.ndarray:
    """Elementwise ``(a; q)_inf`` for an array of ``a``."""
    out, used, status = kernels.qpinf_array(a, ctx.q, cfg.tol, cfg.max_terms_1d, cfg.consecutive_small)
    if status != kernels.OK:
        raise NotConverged(f"(a; q)_inf: not converged after {used} factors")
    return out


def q_gamma(ctx: QContext, alpha, cfg: SeriesConfig = DEFAULT_CONFIG) -> EvalResult:
    """q-gamma ``(q; q)_inf / ((q**alpha; q)_inf (1 - q)**(alpha - 1))`` for real ``0 < q < 1``."""
    q = ctx.require_real("q_gamma")
    if _is_nonpositive_integer(alpha):
        raise PoleAtNonpositiveInteger(f"q_gamma has a pole at alpha={alpha!r}")
    a = ctx.power(alpha)
    num = q_pochhammer_inf(ctx, q, cfg)
    den = q_pochhammer_inf(ctx, a, cfg)
    if min(abs(num.value), abs(den.value)) < _UNDERFLOW:
        # near q = 1 both products underflow; their quotient does not
        value, used = _q_gamma_log(q, a, alpha, cfg)
        res = EvalResult(value, used, max(num.tail_estimate, den.tail_estimate))
    else:
        scale = (1.0 - q) ** (complex(alpha) - 1.0)
        res = EvalResult(num.value / (den.value * scale), max(num.terms_used, den.terms_used),
                         max(num.tail_estimate, den.tail_estimate))
    if complex(alpha).imag == 0.0:
        res = replace(res, value=complex(res.value.real, 0.0))
    return res


_UNDERFLOW = 1e-250


def _q_gamma_log(q, a, alpha, cfg):
    """``prod (1 - q**(r+1)) / (1 - a q**r) * (1 - q)**(1 - alpha)`` summed in logarithms."""
    n = int(np.ceil(np.log(cfg.tol / max(1.0, abs(a))) / np.log(q))) + cfg.consecutive_small
    if n > cfg.max_terms_1d:
        raise NotConverged(f"q_gamma: needs {n} factors, more than max_terms_1d={cfg.max_terms_1d}")
    qr = q ** np.arange(n, dtype=float)
    logs = np.log1p(-q * qr).astype(complex) - np.log1p(-a * qr.astype(complex))
    return complex(np.exp(np.sum(logs) + (1.0 - complex(alpha)) * np.log(1.0 - q))), n


def q_beta(ctx: QContext, m, n, cfg: SeriesConfig = DEFAULT_CONFIG) -> EvalResult:
    """q-beta ``B_q(m, n)`` as the Jackson integral of ``t**(m-1) (qt; q)_inf / (t q**n; q)_inf``."""
    from .qops import jackson_integral_01

    ctx.require_real("q_beta")
    if not complex(m).real > 0:
        raise DomainError(f"q_beta needs Re(m) > 0, got m={m!r}")
    if _is_nonpositive_integer(n):
        raise DomainError(f"q_beta needs n not in {{0, -1, -2, ...}}, got n={n!r}")
    qn = ctx.power(n)
    q = ctx.q

    def integrand(t):
        t = np.asarray(t, dtype=np.complex128)
        return t ** (complex(m) - 1.0) * q_pochhammer_inf_array(ctx, q * t, cfg) / q_pochhammer_inf_array(
            ctx, qn * t, cfg
        )

    return jackson_integral_01(ctx, integrand, cfg, vectorized=True)


def q_exponential(ctx: QContext, z, cfg: SeriesConfig = DEFAULT_CONFIG) -> EvalResult:
    """``e_q(z) = sum z**n / [n]_q!``, restricted to ``|z (1 - q)| < 1``."""
    q = ctx.q
    if abs(complex(z) * (1.0 - q)) >= 1.0:
        raise DomainError(f"e_q(z) needs |z (1 - q)| < 1, got z={z!r}")
    # z**n / [n]_q! = ((1-q) z)**n / (q; q)_n, a plain 1phi0-type series
    val, used, tail, status = kernels.rphis([], [], (1.0 - q) * complex(z), q, cfg.tol,
                                            cfg.max_terms_1d, cfg.consecutive_small)
    return check_result(EvalResult(complex(val), int(used), float(tail), status == kernels.OK), "e_q")


def q_power_binomial(ctx: QContext, t, nu, cfg: SeriesConfig = DEFAULT_CONFIG) -> EvalResult:
    """The series ``(1 - qt)_{-nu} = sum [nu]_q [nu+1]_q ... [nu+n-1]_q / [n]_q! * t**n``.

    The coefficient equals ``(q**nu; q)_n / (q; q)_n``. Only defined by this
    series for ``|t| < 1``. For a positive exponent call it with ``-nu``.
    """
    if abs(complex(t)) >= 1.0:
        raise DomainError(f"(1 - qt)_(-nu) series needs |t| < 1, got t={t!r}")
    val, used, tail, status = kernels.rphis([ctx.power(nu)], [], t, ctx.q, cfg.tol,
                                            cfg.max_terms_1d, cfg.consecutive_small)
    return check_result(EvalResult(complex(val), int(used), float(tail), status == kernels.OK),
                        "(1 - qt)_(-nu)")


def q_power_product(ctx: QContext, t, nu, cfg: SeriesConfig = DEFAULT_CONFIG) -> EvalResult:
    """Product form of the q-power: ``(1 - qt)_nu = (qt; q)_inf / (q**(nu+1) t; q)_inf``.

    Finite on the whole lattice ``t = q**k``, including ``t = 1`` where the
    series form diverges.
    """
    q = ctx.q
    num = q_pochhammer_inf(ctx, q * complex(t), cfg)
    den = q_pochhammer_inf(ctx, ctx.power(complex(nu) + 1.0) * complex(t), cfg)
    return EvalResult(num.value / den.value, max(num.terms_used, den.terms_used),
                      max(num.tail_estimate, den.tail_estimate))
