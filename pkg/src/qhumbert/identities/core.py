"""Building blocks for identity specifications.

An identity side is a function of an :class:`Env`, which binds one
:class:`SamplePoint` and exposes the library operations in the notation of
the formulas: ``E.phi(1, da=1)`` is ``Phi1(q**(alpha+1), q**beta; q**gamma; q, x, y)``.

Shift notation: a shifted call such as ``Phi1(q**(gamma+1), qx)`` changes only
the listed parameters and arguments, everything else keeps the value of the
sample point. For Phi3 the sample point's ``beta`` is the denominator
exponent, so ``E.phi(3, db=1)`` raises the denominator.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields
from typing import Callable

from ..humbert import HumbertParams, phi1, phi2, phi3, shifted
from ..qcore import q_number, q_pochhammer, q_pochhammer_inf
from ..qops import (
    bracket_theta,
    jackson_derivative,
    jackson_derivative_iter,
    param_q_derivative,
    theta_q_operator,
    theta_shift_x,
    theta_shift_y,
)
from ..series import rphis_plain, sum_terms
from ..types import DEFAULT_CONFIG, QContext, SeriesConfig

KINDS = ("algebraic", "operator", "recursion", "integral", "limit")

DEFAULT_CHECK_TOL = {
    "algebraic": 1e-8,
    "operator": 1e-8,
    "recursion": 1e-8,
    "integral": 1e-6,
    "limit": 1e-2,
}

STATUSES = ("pass", "fail", "unverifiable", "not_converged")


@dataclass(frozen=True)
class SamplePoint:
    q: complex
    alpha: complex
    beta: complex
    gamma: complex
    x: complex
    y: complex
    r: int = 1
    s: int = 1
    ell: int = 1
    m: int = 0

    def to_json(self) -> dict:
        out = {}
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, complex):
                v = v.real if v.imag == 0 else [v.real, v.imag]
            out[f.name] = v
        return out

    @classmethod
    def from_json(cls, data: dict) -> "SamplePoint":
        kw = {}
        for f in fields(cls):
            if f.name not in data:
                continue
            v = data[f.name]
            if isinstance(v, (list, tuple)):
                v = complex(v[0], v[1])
            kw[f.name] = v
        return cls(**kw)


@dataclass(frozen=True)
class Constraint:
    text: str
    test: Callable[[SamplePoint], bool]


@dataclass(frozen=True)
class Domain:
    """Sampling ranges and constraints of one identity.

    ``cond`` (optional) estimates the error amplification of the operator
    side at a point, e.g. the ``((1-q)|x|)**-r`` growth of an ``r``-fold
    Jackson derivative. The sampler rejects points where
    ``cond * 2.2e-16`` exceeds ``cond_limit``.
    """

    q: tuple = (0.3, 0.9)
    exponents: tuple = (0.2, 3.0)
    xy: tuple = (0.0, 0.4)
    depths: tuple = ()
    m_values: tuple = ()
    fixed: dict = field(default_factory=dict)
    constraints: tuple = ()
    cond: Callable[[SamplePoint], float] | None = None
    cond_limit: float = 1e-10
    note: str = ""

    def describe(self) -> str:
        parts = [f"q in [{self.q[0]}, {self.q[1]}]", f"exponents in [{self.exponents[0]}, {self.exponents[1]}]"]
        lo, hi = self.xy
        parts.append(f"{lo} <= |x|,|y| <= {hi}" if lo > 0 else f"|x|,|y| <= {hi}")
        if self.depths:
            parts.append(", ".join(self.depths) + " in {1,2,3}")
        if self.m_values:
            parts.append(f"n+k in {{{','.join(map(str, self.m_values))}}}")
        for k, v in self.fixed.items():
            parts.append(f"{k} = {v}")
        parts.extend(c.text for c in self.constraints)
        if self.note:
            parts.append(self.note)
        return "; ".join(parts)

    def violations(self, pt: SamplePoint) -> list[str]:
        return [c.text for c in self.constraints if not c.test(pt)]


@dataclass(frozen=True)
class Variant:
    """A candidate reading of an equation, evaluated next to the printed form.

    ``role`` is ``"repair"`` (the minimal correction expected to hold) or
    ``"alternative"`` (a competing reading that is reported but expected to
    fail). A side left as None is taken from the printed form.
    """

    name: str
    role: str
    note: str
    lhs: Callable | None = None
    rhs: Callable | None = None


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    paper_equation: str
    kind: str
    lhs: Callable
    rhs: Callable
    domain: Domain = field(default_factory=Domain)
    variants: tuple = ()
    note: str = ""
    classification: str | None = None
    # for recursion identities: (field, step) advanced by one depth-1 relation
    step: tuple | None = None
    base: Callable | None = None
    # for limit identities: the default approach sequence (q or exponent values)
    # and an optional exact termwise comparison returning a max residual
    sequence: tuple = ()
    termwise: Callable | None = None

    @property
    def check_tol(self) -> float:
        return DEFAULT_CHECK_TOL[self.kind]


@dataclass
class CheckResult:
    id: str
    point: SamplePoint
    lhs_value: complex | None
    rhs_value: complex | None
    abs_residual: float
    rel_residual: float
    status: str
    variant: str | None = None
    message: str = ""
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        d = {
            "id": self.id,
            "point": self.point.to_json(),
            "lhs": _cjson(self.lhs_value),
            "rhs": _cjson(self.rhs_value),
            "abs_residual": self.abs_residual,
            "rel_residual": self.rel_residual,
            "status": self.status,
        }
        if self.variant:
            d["variant"] = self.variant
        if self.message:
            d["message"] = self.message
        if self.extra:
            d.update(self.extra)
        return d


def _cjson(v):
    if v is None:
        return None
    v = complex(v)
    return [v.real, v.imag]


class Env:
    """Evaluation environment for one sample point."""

    def __init__(self, pt: SamplePoint, cfg: SeriesConfig = DEFAULT_CONFIG):
        self.pt = pt
        self.cfg = cfg
        self.ctx = QContext(pt.q)
        self.q = self.ctx.q
        self.al, self.be, self.ga = pt.alpha, pt.beta, pt.gamma
        self.a = self.ctx.power(pt.alpha)
        self.b = self.ctx.power(pt.beta)
        self.c = self.ctx.power(pt.gamma)
        self.x, self.y = pt.x, pt.y
        self.r, self.s, self.ell, self.m = pt.r, pt.s, pt.ell, pt.m

    # parameters and scalar helpers

    def qn(self, alpha):
        return q_number(self.ctx, alpha)

    def qp(self, v, n):
        return q_pochhammer(self.ctx, v, n)

    def pinf(self, *vals):
        out = 1.0
        for v in vals:
            out *= q_pochhammer_inf(self.ctx, v, self.cfg).value
        return out

    def pw(self, alpha):
        return self.ctx.power(alpha)

    def params(self, kind, da=0, db=0, dc=0, a=None, b=None, c=None) -> HumbertParams:
        if kind == 3:
            if dc:
                raise ValueError("Phi3 has no gamma; its denominator is shifted with db")
            base = HumbertParams(self.ctx, self.a if a is None else a, 0.0,
                                 self.b if c is None else c, self.cfg.tol_pole)
            return shifted(base, da, 0, db)
        base = HumbertParams(self.ctx, self.a if a is None else a, self.b if b is None else b,
                             self.c if c is None else c, self.cfg.tol_pole)
        return shifted(base, da, db, dc)

    # Humbert evaluations

    def F(self, kind, da=0, db=0, dc=0, **vals):
        """``(x, y) -> Phi_kind`` with shifted parameters, as a black-box evaluator."""
        p = self.params(kind, da, db, dc, **vals)
        fn = {1: phi1, 2: phi2, 3: phi3}[kind]
        cfg = self.cfg

        def f(x, y):
            return fn(p, x, y, cfg).value

        return f

    def phi(self, kind, da=0, db=0, dc=0, x=None, y=None, **vals):
        return self.F(kind, da, db, dc, **vals)(self.x if x is None else x, self.y if y is None else y)

    # operators, all evaluated at the point's (x, y)

    def D(self, f, r=0, s=0, x=None, y=None):
        """``D_x**r D_y**s f`` for a two-variable evaluator."""
        x = self.x if x is None else x
        y = self.y if y is None else y
        ctx = self.ctx
        if s:
            g = lambda u: jackson_derivative_iter(ctx, lambda w: f(u, w), y, s)
        else:
            g = lambda u: f(u, y)
        if r:
            return jackson_derivative_iter(ctx, g, x, r)
        return g(x)

    def D1(self, g, z, r):
        """``D_z**r g`` for a one-variable evaluator."""
        return jackson_derivative_iter(self.ctx, g, z, r)

    def xsq_D(self, g, z, r):
        """``(z**2 D_z)**r g`` by nesting the two-point rule."""
        ctx = self.ctx
        h = g
        for _ in range(r):
            h = (lambda inner: lambda u: u * u * jackson_derivative(ctx, inner, u))(h)
        return h(z)

    def scaled(self, f, sx=1, sy=1):
        """``(x, y) -> f(sx x, sy y)``; with ``sx = q`` this is ``Phi(qx)`` in the shift notation."""
        return lambda u, v: f(sx * u, sy * v)

    def qshift(self, f, axis):
        """``q**Theta_x f`` (or ``y``) at the point."""
        fn = theta_shift_x if axis == "x" else theta_shift_y
        return fn(self.ctx, f, self.x, self.y)

    def theta(self, f, axis):
        return theta_q_operator(self.ctx, f, axis, self.x, self.y)

    def op(self, f, *brackets):
        """Apply ``[Theta_1 + s_1]_q [Theta_2 + s_2]_q ...`` to ``f`` (rightmost first).

        Each bracket is ``(axis, shift)`` with axis ``"x"``, ``"y"`` or ``"both"``.
        """
        ctx = self.ctx
        g = f
        for axis, shift in reversed(brackets):
            g = (lambda h, ax, sh: lambda u, v: bracket_theta(ctx, h, ax, sh, u, v))(g, axis, shift)
        return g(self.x, self.y)

    def pD(self, kind, which, at=None):
        """Jackson derivative of ``Phi_kind`` in the q-power of parameter ``which`` ("a", "b" or "c")."""
        ctx = self.ctx
        p0 = self.params(kind)
        v0 = {"a": p0.a, "b": p0.b, "c": p0.c}[which]
        x, y = self.x, self.y

        def g(v):
            return self.F(kind, **{which: v})(x, y)

        return param_q_derivative(ctx, g, v0 if at is None else at)

    # one-variable series

    def rphis(self, numer, denom, z):
        return rphis_plain(self.ctx, numer, denom, z, self.cfg).value

    def series(self, term, what="outer sum"):
        return sum_terms(term, self.cfg, what).value

    def sum_r(self, term, upto=None):
        """Finite sum ``term(1) + ... + term(upto)``, ``upto`` defaulting to the depth ``ell``."""
        n = self.ell if upto is None else upto
        return sum(term(r) for r in range(1, n + 1))
