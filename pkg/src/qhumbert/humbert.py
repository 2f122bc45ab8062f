"""The basic Humbert functions and their classical (q -> 1) counterparts.

    Phi1(a, b; c; q, x, y) = sum (a;q)_{n+k} (b;q)_n       / ((c;q)_{n+k} (q;q)_n (q;q)_k) x**n y**k
    Phi2(a, b; c; q, x, y) = sum (a;q)_n     (b;q)_k       / ((c;q)_{n+k} (q;q)_n (q;q)_k) x**n y**k
    Phi3(a; c; q, x, y)    = sum (a;q)_n                   / ((c;q)_{n+k} (q;q)_n (q;q)_k) x**n y**k

with ``a = q**alpha`` etc. The printed notation for Phi3 calls its
denominator ``q**beta``; here it always lives in the ``c`` slot
(``HumbertParams.c``), and ``HumbertParams.phi3`` builds it from that name.

All three converge for ``|x| < 1`` and ``|y| < 1``: along either axis the
term ratio tends to the argument itself.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .series import DoubleSeriesSpec, sum_double
from .types import DEFAULT_CONFIG, DomainError, EvalResult, QContext, SeriesConfig, guard_denominator
from . import _kernels_numpy

__all__ = [
    "HumbertParams", "ClassicalParams", "phi1", "phi2", "phi3", "phi_spec",
    "classical_phi1", "classical_phi2", "classical_phi3", "classical_spec", "shifted",
]


@dataclass(frozen=True)
class HumbertParams:
    """q-power parameters ``a = q**alpha``, ``b = q**beta``, ``c = q**gamma``.

    ``b`` is unused by Phi3. The denominator is checked against
    ``{1, q**-1, q**-2, ...}`` on construction.
    """

    ctx: QContext
    a: complex
    b: complex
    c: complex
    tol_pole: float = DEFAULT_CONFIG.tol_pole

    def __post_init__(self):
        guard_denominator(self.ctx, self.c, self.tol_pole, name="denominator")

    @classmethod
    def from_exponents(cls, ctx: QContext, alpha, beta, gamma, **kw) -> "HumbertParams":
        return cls(ctx, ctx.power(alpha), ctx.power(beta), ctx.power(gamma), **kw)

    @classmethod
    def phi3(cls, ctx: QContext, alpha, beta, **kw) -> "HumbertParams":
        """Parameters for ``Phi3(q**alpha; q**beta)``: ``q**beta`` goes to the ``c`` slot."""
        return cls(ctx, ctx.power(alpha), 0.0, ctx.power(beta), **kw)


@dataclass(frozen=True)
class ClassicalParams:
    alpha: complex
    beta: complex
    gamma: complex

    def __post_init__(self):
        g = complex(self.gamma)
        if abs(g.imag) < 1e-12 and g.real <= 0 and abs(g.real - round(g.real)) < 1e-12:
            raise DomainError(f"gamma must not be a nonpositive integer, got {self.gamma!r}")


def shifted(p: HumbertParams, da: int = 0, db: int = 0, dc: int = 0) -> HumbertParams:
    """Parameters with ``alpha += da``, ``beta += db``, ``gamma += dc`` (integers).

    Each unit step is one multiplication (or division) by q, so integer
    shifts never re-evaluate a power.
    """
    q = p.ctx.q
    a, b, c = p.a, p.b, p.c
    for d, name in ((da, "a"), (db, "b"), (dc, "c")):
        if int(d) != d:
            raise DomainError(f"shift for {name} must be an integer, got {d!r}")
    for _ in range(abs(da)):
        a = a * q if da > 0 else a / q
    for _ in range(abs(db)):
        b = b * q if db > 0 else b / q
    for _ in range(abs(dc)):
        c = c * q if dc > 0 else c / q
    return replace(p, a=a, b=b, c=c)


_LAYOUT = {
    # kind: (params on n+k, params on n, params on k), denominators always on n+k
    1: (("a",), ("b",), ()),
    2: ((), ("a",), ("b",)),
    3: ((), ("a",), ()),
}


def _spec(classical, q, kind, vals, den, x, y):
    on_m, on_n, on_k = _LAYOUT[kind]
    num_m = [vals[s] for s in on_m]
    num_n = [vals[s] for s in on_n]
    num_k = [vals[s] for s in on_k]
    den_m = [den]
    kernel = (classical, q, num_m, num_n, num_k, den_m, complex(x), complex(y))
    rn, rk = _kernels_numpy.humbert_ratios(*kernel)
    return DoubleSeriesSpec(1.0, rn, rk, kernel=kernel)


def phi_spec(kind: int, p: HumbertParams, x, y) -> DoubleSeriesSpec:
    """The :class:`DoubleSeriesSpec` of ``Phi_kind`` at ``(x, y)``."""
    return _spec(False, p.ctx.q, kind, {"a": p.a, "b": p.b}, p.c, x, y)


def _evaluate(kind, p, x, y, cfg):
    return sum_double(p.ctx, phi_spec(kind, p, x, y), cfg)


def phi1(p: HumbertParams, x, y, cfg: SeriesConfig = DEFAULT_CONFIG) -> EvalResult:
    return _evaluate(1, p, x, y, cfg)


def phi2(p: HumbertParams, x, y, cfg: SeriesConfig = DEFAULT_CONFIG) -> EvalResult:
    return _evaluate(2, p, x, y, cfg)


def phi3(p: HumbertParams, x, y, cfg: SeriesConfig = DEFAULT_CONFIG) -> EvalResult:
    """``Phi3(a; c; q, x, y)``; ``p.b`` is ignored."""
    return _evaluate(3, p, x, y, cfg)


def classical_spec(kind: int, p: ClassicalParams, x, y) -> DoubleSeriesSpec:
    # the q-mode factor (1 - u q^j) becomes u + j, and (1 - q^{j+1}) becomes j + 1
    return _spec(True, 1.0, kind, {"a": complex(p.alpha), "b": complex(p.beta)}, complex(p.gamma), x, y)


def classical_phi1(p: ClassicalParams, x, y, cfg: SeriesConfig = DEFAULT_CONFIG) -> EvalResult:
    """Humbert ``Phi1(alpha, beta; gamma; x, y)`` with rising factorials."""
    return sum_double(QContext(0.5), classical_spec(1, p, x, y), cfg)


def classical_phi2(p: ClassicalParams, x, y, cfg: SeriesConfig = DEFAULT_CONFIG) -> EvalResult:
    return sum_double(QContext(0.5), classical_spec(2, p, x, y), cfg)


def classical_phi3(p: ClassicalParams, x, y, cfg: SeriesConfig = DEFAULT_CONFIG) -> EvalResult:
    """Humbert ``Phi3(alpha; gamma; x, y)``; ``p.beta`` is ignored."""
    return sum_double(QContext(0.5), classical_spec(3, p, x, y), cfg)
