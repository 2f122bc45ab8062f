"""Shared value types and exceptions."""

from __future__ import annotations

import cmath
import os
from dataclasses import dataclass, field


class QHumbertError(Exception):
    """Base class for all library errors."""


class DomainError(QHumbertError, ValueError):
    """Input outside the domain where the requested quantity is defined."""


class PoleAtNonpositiveInteger(DomainError):
    pass


class ZeroArgument(DomainError):
    pass


class NotConverged(QHumbertError, ArithmeticError):
    """Truncation limit reached before the tail became negligible.

    The partial result is kept on ``self.result`` so callers can inspect it.
    """

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


class RatioUndefined(QHumbertError, ArithmeticError):
    pass


@dataclass(frozen=True)
class QContext:
    """The base ``q`` of every computation, with ``0 < |q| < 1``."""

    q: complex

    def __post_init__(self):
        q = complex(self.q)
        if not 0.0 < abs(q) < 1.0:
            raise DomainError(f"need 0 < |q| < 1, got q={self.q!r}")
        # keep real q as a float so that q**n stays exact for dyadic q
        object.__setattr__(self, "q", q.real if q.imag == 0.0 else q)

    @property
    def is_real(self) -> bool:
        return isinstance(self.q, float) and 0.0 < self.q < 1.0

    def require_real(self, what: str) -> float:
        if not self.is_real:
            raise DomainError(f"{what} is only defined for real q in (0, 1), got q={self.q!r}")
        return self.q

    def power(self, alpha) -> complex:
        """``q**alpha`` on the principal branch (cut along the negative real axis)."""
        if alpha == float("inf"):
            return 0.0
        if self.is_real and complex(alpha).imag == 0.0:
            return self.q ** complex(alpha).real
        return cmath.exp(complex(alpha) * cmath.log(self.q))


def _env_tol(default: float) -> float:
    raw = os.environ.get("QHUMBERT_TOL")
    if not raw:
        return default
    try:
        return float(raw)
    except ValueError:
        raise DomainError(f"QHUMBERT_TOL is not a number: {raw!r}") from None


@dataclass(frozen=True)
class SeriesConfig:
    """Truncation policy shared by every series, product and q-integral.

    A sum stops once ``consecutive_small`` successive terms (or antidiagonal
    blocks, for double series) are below ``tol * max(1, |partial sum|)``.
    """

    tol: float = 1e-16
    max_terms_1d: int = 100_000
    max_terms_2d: int = 1000
    consecutive_small: int = 3
    tol_pole: float = 1e-8

    def __post_init__(self):
        if not self.tol > 0:
            raise DomainError("tol must be positive")
        if self.max_terms_1d < 1 or self.max_terms_2d < 1:
            raise DomainError("max_terms must be at least 1")
        if self.consecutive_small < 2:
            raise DomainError("consecutive_small must be at least 2")
        if not self.tol_pole > 0:
            raise DomainError("tol_pole must be positive")

    @classmethod
    def from_env(cls, **overrides) -> "SeriesConfig":
        """Defaults, with ``tol`` taken from ``QHUMBERT_TOL`` when set.

        Explicit keyword overrides win over the environment.
        """
        overrides.setdefault("tol", _env_tol(cls.tol))
        return cls(**overrides)


DEFAULT_CONFIG = SeriesConfig()


@dataclass(frozen=True)
class EvalResult:
    value: complex
    terms_used: int
    tail_estimate: float
    converged: bool = True
    extra: dict = field(default_factory=dict, compare=False, repr=False)

    def __complex__(self):
        return complex(self.value)


def value_of(v) -> complex:
    """Unwrap an :class:`EvalResult` (or pass through a plain number)."""
    if isinstance(v, EvalResult):
        return v.value
    return v


def check_result(res: EvalResult, what: str) -> EvalResult:
    if not res.converged:
        raise NotConverged(
            f"{what}: not converged after {res.terms_used} terms "
            f"(tail ~ {res.tail_estimate:.3g})",
            res,
        )
    return res


def guard_denominator(ctx: QContext, c: complex, tol_pole: float, nfactors: int | None = None, name="denominator"):
    """Reject ``c`` when some factor ``1 - c q^j`` of ``(c; q)_n`` is (nearly) zero.

    With ``nfactors=None`` all ``j >= 0`` are scanned; since ``|c q^j| -> 0``
    only finitely many can come close to 1.
    """
    q = ctx.q
    cj = complex(c)
    j = 0
    while nfactors is None or j < nfactors:
        if abs(1.0 - cj) < tol_pole:
            raise DomainError(f"{name} parameter {c!r} hits the excluded value q^{-j}")
        if nfactors is None and abs(cj) < 0.5:
            break
        cj *= q
        j += 1
