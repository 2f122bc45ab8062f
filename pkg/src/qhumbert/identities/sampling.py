"""Deterministic sampling of in-domain points for an identity."""

from __future__ import annotations

import zlib
from dataclasses import fields

import numpy as np

from ..types import DomainError
from .core import SamplePoint
from .registry import EPS, get

# beta and gamma stay this far from integers, which keeps every shifted
# denominator (q**gamma, q**(gamma-l), q**beta for Phi3, ...) off its poles
INTEGER_GAP = 0.05
MAX_ATTEMPTS_PER_POINT = 2000

_FIELDS = {f.name for f in fields(SamplePoint)}


def _rng(id: str, seed: int) -> np.random.Generator:
    return np.random.default_rng([int(seed), zlib.crc32(id.encode())])


def _exponent(rng, lo, hi, avoid_integers):
    while True:
        v = float(rng.uniform(lo, hi))
        if not avoid_integers or abs(v - round(v)) >= INTEGER_GAP:
            return v


def _coordinate(rng, lo, hi):
    mag = float(rng.uniform(lo, hi))
    return mag if rng.random() < 0.5 else -mag


def _draw(rng, dom, xy) -> dict:
    lo, hi = dom.exponents
    vals = {
        "q": float(rng.uniform(*dom.q)),
        "alpha": _exponent(rng, lo, hi, False),
        "beta": _exponent(rng, lo, hi, True),
        "gamma": _exponent(rng, lo, hi, True),
        "x": _coordinate(rng, *xy),
        "y": _coordinate(rng, *xy),
    }
    for name in dom.depths:
        vals[name] = int(rng.integers(1, 4))
    if dom.m_values:
        vals["m"] = int(rng.choice(dom.m_values))
    return vals


def _acceptable(dom, pt) -> bool:
    if dom.violations(pt):
        return False
    if dom.cond is not None and dom.cond(pt) * EPS > dom.cond_limit:
        return False
    return True


def sample_domain(id: str, seed: int, count: int, fixed: dict | None = None,
                  xy_max: float | None = None) -> list[SamplePoint]:
    """``count`` points of the domain of ``id``, identical for identical arguments.

    ``fixed`` pins fields of every point (e.g. ``{"ell": 2}``) before the
    domain constraints are applied, on top of the domain's own fixed values.
    ``xy_max`` widens (or narrows) the upper bound of ``|x|`` and ``|y|``.
    """
    if count < 1:
        raise ValueError(f"count must be at least 1, got {count}")
    dom = get(id).domain
    xy = dom.xy
    if xy_max is not None:
        if not xy_max > xy[0]:
            raise ValueError(f"xy_max must exceed the lower bound {xy[0]}, got {xy_max}")
        xy = (xy[0], float(xy_max))
    pins = {**dom.fixed, **(fixed or {})}
    unknown = set(pins) - _FIELDS
    if unknown:
        raise ValueError(f"unknown sample point fields {sorted(unknown)}")
    rng = _rng(id, seed)
    out = []
    attempts = 0
    while len(out) < count:
        if attempts >= MAX_ATTEMPTS_PER_POINT * count:
            raise DomainError(f"{id}: could not draw {count} admissible points "
                              f"(got {len(out)} after {attempts} attempts)")
        attempts += 1
        vals = _draw(rng, dom, xy)
        vals.update(pins)
        pt = SamplePoint(**vals)
        if _acceptable(dom, pt):
            out.append(pt)
    return out
