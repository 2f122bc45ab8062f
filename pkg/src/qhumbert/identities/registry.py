"""The identity registry and the helpers the catalog modules use to fill it."""

from __future__ import annotations

from .core import KINDS, Constraint, Domain, IdentitySpec, SamplePoint

REGISTRY: dict[str, IdentitySpec] = {}

EPS = 2.220446049250313e-16


def register(id, paper_equation, kind, lhs, rhs, domain=None, variants=(), note="", **kw) -> IdentitySpec:
    if id in REGISTRY:
        raise ValueError(f"duplicate identity id {id}")
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    spec = IdentitySpec(id, paper_equation, kind, lhs, rhs, domain or Domain(), tuple(variants), note, **kw)
    REGISTRY[id] = spec
    return spec


def get(id: str) -> IdentitySpec:
    try:
        return REGISTRY[id]
    except KeyError:
        raise KeyError(f"unknown identity id {id!r}") from None


def _weights_sum(q, r):
    # sum |w_j| of the r-fold Jackson difference: prod_{j<r} (1 + |q|**-j)
    out = 1.0
    for j in range(r):
        out *= 1.0 + abs(q) ** (-j)
    return out


def derivative_amplification(pt: SamplePoint, r: int, s: int, scale: float = 1.0) -> float:
    """Error amplification of ``D_x**r D_y**s`` at ``pt`` relative to ``max(1, scale)``."""
    q = abs(pt.q)
    amp = 1.0
    if r:
        amp *= _weights_sum(q, r) / (abs(1 - pt.q) * abs(pt.x)) ** r
    if s:
        amp *= _weights_sum(q, s) / (abs(1 - pt.q) * abs(pt.y)) ** s
    return amp / max(1.0, scale)


def real_q(pt):
    return complex(pt.q).imag == 0 and 0 < complex(pt.q).real < 1


REAL_Q = Constraint("q real in (0, 1)", real_q)


def _order_key(id: str):
    # equation order: EQ_2_12b -> (12, "b"); SC_3a after (2.53); SC_54_1 after (2.54)
    parts = id.split("_")
    if parts[0] == "SC":
        if len(parts) == 3:
            return (int(parts[1]), "z" + parts[2])
        return (53, "z" + parts[1])
    tail = parts[2]
    digits = "".join(ch for ch in tail if ch.isdigit())
    return (int(digits), tail[len(digits):])


def ordered_ids() -> list[str]:
    return sorted(REGISTRY, key=_order_key)
