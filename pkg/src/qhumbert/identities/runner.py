"""Residual checks at single points and the audit suite over many identities."""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field, replace

import numpy as np

from ..types import DEFAULT_CONFIG, DomainError, NotConverged, RatioUndefined, SeriesConfig
from .core import DEFAULT_CHECK_TOL, CheckResult, Env, SamplePoint, _cjson
from .registry import REGISTRY, get, ordered_ids
from .sampling import sample_domain

CSV_HEADER = "id,paper_equation,n_points,n_pass,n_fail,n_not_converged,max_rel_residual,verdict"

VERDICTS = ("verified", "refuted-as-printed", "unverifiable")

# candidate constant factors L/R, tested when a printed form fails everywhere
FACTOR_CANDIDATES = (
    ("1", lambda q: 1.0),
    ("1/(1-q)", lambda q: 1.0 / (1.0 - q)),
    ("(1-q)", lambda q: 1.0 - q),
    ("q", lambda q: q),
    ("1/q", lambda q: 1.0 / q),
)
FACTOR_SPREAD = 1e-6
TERMWISE_TOL = 1e-15
ERROR_FLOOR = 1e-13


def _tol_for(spec, check_tol):
    if check_tol is None or spec.kind == "limit":
        return spec.check_tol
    return check_tol


def _finite(v):
    v = complex(v)
    return math.isfinite(v.real) and math.isfinite(v.imag)


def _residuals(L, R):
    d = abs(complex(L) - complex(R))
    return d, d / max(1.0, abs(complex(R)))


def _sides(spec, variant):
    if variant is None:
        return spec.lhs, spec.rhs
    for v in spec.variants:
        if v.name == variant:
            return v.lhs or spec.lhs, v.rhs or spec.rhs
    raise KeyError(f"{spec.id} has no variant {variant!r}")


def _evaluate(id, point, lhs, rhs, cfg, tol, variant):
    try:
        E = Env(point, cfg)
        L = complex(lhs(E))
        R = complex(rhs(E))
    except (NotConverged, RatioUndefined) as exc:
        return CheckResult(id, point, None, None, math.nan, math.nan, "not_converged", variant, str(exc))
    except DomainError as exc:
        return CheckResult(id, point, None, None, math.nan, math.nan, "unverifiable", variant, str(exc))
    if not (_finite(L) and _finite(R)):
        return CheckResult(id, point, L, R, math.nan, math.nan, "not_converged", variant,
                           "a side evaluated to a non-finite value")
    a, r = _residuals(L, R)
    return CheckResult(id, point, L, R, a, r, "pass" if r <= tol else "fail", variant)


def check(id: str, point: SamplePoint, cfg: SeriesConfig = DEFAULT_CONFIG, check_tol: float | None = None,
          variant: str | None = None) -> CheckResult:
    """Evaluate both sides of ``id`` (or of one of its variants) at ``point``.

    Raises :class:`DomainError` when the point violates the identity's domain.
    Non-convergence is reported as status ``not_converged``; a domain error
    raised while evaluating a side (for instance a series used outside its
    disc) makes the point ``unverifiable``.
    """
    spec = get(id)
    bad = spec.domain.violations(point)
    if bad:
        raise DomainError(f"{id}: point violates {'; '.join(bad)}")
    if spec.kind == "limit":
        return limit_check(id, None, point, cfg)
    lhs, rhs = _sides(spec, variant)
    res = _evaluate(id, point, lhs, rhs, cfg, _tol_for(spec, check_tol), variant)
    if spec.classification == "unverifiable" and variant is None:
        res.status = "unverifiable"
    return res


def compose_check(id: str, point: SamplePoint, cfg: SeriesConfig = DEFAULT_CONFIG,
                  check_tol: float | None = None, variant: str | None = None) -> CheckResult:
    """Rebuild a depth-``ell`` recursion from ``ell`` depth-1 steps and compare.

    Step ``j`` is the depth-1 relation at the point with the stepped
    parameter moved ``j - 1`` times; summing the increments telescopes to the
    depth-``ell`` value, which is compared with the depth-``ell`` right side
    of the chosen form.
    """
    spec = get(id)
    if spec.step is None:
        raise ValueError(f"{id} is not a recursion identity")
    name, step = spec.step
    lhs, rhs = _sides(spec, variant)
    tol = _tol_for(spec, check_tol)

    def composed(E):
        total = spec.base(E)
        for j in range(1, point.ell + 1):
            pj = replace(point, ell=1, **{name: getattr(point, name) + (j - 1) * step})
            Ej = Env(pj, cfg)
            total += rhs(Ej) - spec.base(Ej)
        return total

    res = _evaluate(id, point, composed, rhs, cfg, tol, "composition")
    res.extra["form"] = variant or "printed"
    return res


def limit_check(id: str, sequence, point: SamplePoint, cfg: SeriesConfig = DEFAULT_CONFIG) -> CheckResult:
    """Follow a limit along ``sequence`` (the identity's default when None).

    Passes when the error against the target strictly decreases (until it
    reaches the rounding floor) and the last error is below the limit
    tolerance. Identities with an exact termwise comparison at the limiting
    parameter value are decided by that comparison alone.
    """
    spec = get(id)
    if spec.kind != "limit":
        raise ValueError(f"{id} is not a limit identity")
    seq = tuple(spec.sequence if sequence is None else sequence)
    tol = spec.check_tol
    extra = {"sequence": list(seq)}
    try:
        E = Env(point, cfg)
        lhs_vals = [complex(spec.lhs(E, s)) for s in seq]
        if spec.rhs is None:
            extra["lhs_sequence"] = [_cjson(v) for v in lhs_vals]
            return CheckResult(id, point, lhs_vals[-1] if lhs_vals else None, None, math.nan, math.nan,
                               "unverifiable", None, spec.note, extra)
        rhs_vals = [complex(spec.rhs(E, s)) for s in seq]
        termwise = spec.termwise(E) if spec.termwise is not None else None
    except (NotConverged, RatioUndefined) as exc:
        return CheckResult(id, point, None, None, math.nan, math.nan, "not_converged", None, str(exc), extra)
    except DomainError as exc:
        return CheckResult(id, point, None, None, math.nan, math.nan, "unverifiable", None, str(exc), extra)
    errors = [_residuals(L, R)[1] for L, R in zip(lhs_vals, rhs_vals)]
    extra["errors"] = errors
    if termwise is not None:
        # an exact substitution decides; the sequence is kept as an observation
        extra["termwise_residual"] = termwise
        ok = termwise <= TERMWISE_TOL
    else:
        ok = _approaches(errors) and errors[-1] < tol
    status = "pass" if ok else "fail"
    if spec.classification == "unverifiable":
        status = "unverifiable"
    L, R = (lhs_vals[-1], rhs_vals[-1]) if seq else (None, None)
    a, r = _residuals(L, R) if seq else (math.nan, math.nan)
    return CheckResult(id, point, L, R, a, r, status, None, "", extra)


def _approaches(errors):
    """Strictly decreasing until the error reaches the rounding floor, then staying there."""
    if not errors:
        return False
    for a, b in zip(errors, errors[1:]):
        if a <= ERROR_FLOOR:
            if b > ERROR_FLOOR:
                return False
        elif not b < a:
            return False
    return True


# suite

def _counts(results):
    c = {s: 0 for s in ("pass", "fail", "not_converged", "unverifiable")}
    for r in results:
        c[r.status] += 1
    return c


def _max_residual(results):
    vals = [r.rel_residual for r in results if r.status in ("pass", "fail") and not math.isnan(r.rel_residual)]
    return max(vals) if vals else None


def _verdict(counts, classification=None):
    if classification:
        return classification
    if counts["fail"]:
        return "refuted-as-printed"
    if counts["pass"] == 0:
        return "unverifiable"
    return "verified"


def _ratio(r):
    if r.lhs_value is None or r.rhs_value is None or r.rhs_value == 0:
        return None
    return complex(r.lhs_value) / complex(r.rhs_value)


def residual_pattern(results, depths=()) -> dict:
    """Summarize how a printed form fails: the ratio L/R, a constant-factor
    candidate and which depth values fail."""
    fails = [r for r in results if r.status == "fail"]
    passes = [r for r in results if r.status == "pass"]
    ratios = [(r, _ratio(r)) for r in fails]
    ratios = [(r, z) for r, z in ratios if z is not None and _finite(z)]
    out = {"n_fail": len(fails)}
    if ratios:
        zs = np.array([z for _, z in ratios])
        real = bool(np.all(np.abs(zs.imag) <= 1e-12 * np.maximum(1.0, np.abs(zs))))
        vals = zs.real if real else np.abs(zs)
        out["ratio_min"] = float(vals.min())
        out["ratio_max"] = float(vals.max())
        out["ratio_is_real"] = real
        candidate = None
        for name, fn in FACTOR_CANDIDATES:
            scaled = np.array([z / fn(complex(r.point.q)) for r, z in ratios])
            spread = float(np.max(np.abs(scaled - scaled[0])) / max(1.0, abs(scaled[0])))
            if spread < FACTOR_SPREAD:
                candidate = {"factor": name, "constant": _cjson(scaled[0])}
                break
        out["constant_factor"] = candidate
    if depths:
        def key(r):
            return [getattr(r.point, d) for d in depths]

        out["depth_fields"] = list(depths)
        out["failing_depths"] = sorted({tuple(key(r)) for r in fails})
        out["passing_depths"] = sorted({tuple(key(r)) for r in passes})
    return out


def _failing_point(r):
    z = _ratio(r)
    return {
        "point": r.point.to_json(),
        "lhs": _cjson(r.lhs_value),
        "rhs": _cjson(r.rhs_value),
        "ratio": _cjson(z) if z is not None else None,
        "rel_residual": r.rel_residual,
    }


@dataclass
class VariantSummary:
    name: str
    role: str
    note: str
    counts: dict
    max_rel_residual: float | None
    verdict: str

    def to_json(self):
        return {"name": self.name, "role": self.role, "note": self.note, "counts": self.counts,
                "max_rel_residual": self.max_rel_residual, "verdict": self.verdict}


@dataclass
class IdentityRecord:
    id: str
    paper_equation: str
    kind: str
    results: list
    verdict: str
    residual_pattern: dict | None = None
    variants: list = field(default_factory=list)
    note: str = ""

    @property
    def counts(self):
        return _counts(self.results)

    @property
    def max_rel_residual(self):
        return _max_residual(self.results)

    def repaired(self) -> bool:
        return any(v.role == "repair" and v.verdict == "verified" for v in self.variants)

    def to_json(self):
        c = self.counts
        rec = {
            "id": self.id,
            "paper_equation": self.paper_equation,
            "kind": self.kind,
            "n_points": len(self.results),
            "n_pass": c["pass"],
            "n_fail": c["fail"],
            "n_not_converged": c["not_converged"],
            "n_unverifiable": c["unverifiable"],
            "max_rel_residual": self.max_rel_residual,
            "verdict": self.verdict,
            "note": self.note,
            "failing_points": [_failing_point(r) for r in self.results if r.status == "fail"],
            "residual_pattern": self.residual_pattern,
            "variants": [v.to_json() for v in self.variants],
        }
        if self.kind == "limit":
            rec["limit_details"] = [r.extra for r in self.results]
        return rec


def _summarize_variant(name, role, note, results):
    c = _counts(results)
    return VariantSummary(name, role, note, c, _max_residual(results), _verdict(c))


def audit_identity(id: str, seed: int, count: int, cfg: SeriesConfig = DEFAULT_CONFIG,
                   check_tol: float | None = None, xy_max: float | None = None) -> IdentityRecord:
    spec = get(id)
    points = sample_domain(id, seed, count, xy_max=xy_max)
    printed = [check(id, p, cfg, check_tol) for p in points]
    verdict = _verdict(_counts(printed), spec.classification)
    rec = IdentityRecord(id, spec.paper_equation, spec.kind, printed, verdict, note=spec.note or "")
    for v in spec.variants:
        res = [check(id, p, cfg, check_tol, variant=v.name) for p in points]
        rec.variants.append(_summarize_variant(v.name, v.role, v.note, res))
    if spec.step is not None:
        form = None
        if verdict == "refuted-as-printed":
            form = next((v.name for v, s in zip(spec.variants, rec.variants)
                         if v.role == "repair" and s.verdict == "verified"), None)
        res = [compose_check(id, p, cfg, check_tol, variant=form) for p in points]
        rec.variants.append(_summarize_variant(
            "composition", "composition",
            f"depth-l value rebuilt from depth-1 steps of the {form or 'printed'} form", res))
    if verdict == "refuted-as-printed":
        rec.residual_pattern = residual_pattern(printed, spec.domain.depths)
    return rec


@dataclass
class SuiteReport:
    records: list
    seed: int
    count: int
    cfg: SeriesConfig
    check_tol: float | None = None
    version: str = ""
    backend: str = ""
    xy_max: float | None = None

    def record(self, id):
        for r in self.records:
            if r.id == id:
                return r
        raise KeyError(id)

    def exit_code(self) -> int:
        for r in self.records:
            if r.verdict == "refuted-as-printed" and not r.repaired():
                return 4
            if any(v.role == "composition" and v.verdict == "refuted-as-printed" for v in r.variants):
                return 4
        return 0

    def to_dict(self):
        return {
            "tool": "qhumbert",
            "version": self.version,
            "backend": self.backend,
            "seed": self.seed,
            "count": self.count,
            "check_tol": self.check_tol,
            "xy_max": self.xy_max,
            "default_check_tol": DEFAULT_CHECK_TOL,
            "cfg": asdict(self.cfg),
            "identities": [r.to_json() for r in self.records],
        }

    def to_json(self) -> str:
        return json.dumps(_clean(self.to_dict()), indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER.split(","))
        for r in self.records:
            c = r.counts
            m = r.max_rel_residual
            w.writerow([r.id, r.paper_equation, len(r.results), c["pass"], c["fail"], c["not_converged"],
                        "" if m is None else repr(m), r.verdict])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = []
        for r in self.records:
            c = r.counts
            m = r.max_rel_residual
            ms = "-" if m is None else f"{m:.2e}"
            lines.append(f"{r.id:<10} {r.paper_equation:<40} {r.verdict:<19} "
                         f"pass {c['pass']}/{len(r.results)}  max rel {ms}")
            for v in r.variants:
                vm = "-" if v.max_rel_residual is None else f"{v.max_rel_residual:.2e}"
                lines.append(f"    {v.role:<11} {v.name:<40} {v.verdict:<19} "
                             f"pass {v.counts['pass']}/{sum(v.counts.values())}  max rel {vm}")
        verdicts = [r.verdict for r in self.records]
        lines.append("")
        lines.append(", ".join(f"{v}: {verdicts.count(v)}" for v in VERDICTS))
        return "\n".join(lines) + "\n"


def _clean(obj):
    # NaN is not JSON; missing residuals are reported as null
    if isinstance(obj, float) and math.isnan(obj):
        return None
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def run_suite(ids=None, seed: int = 1, count: int = 10, cfg: SeriesConfig = DEFAULT_CONFIG,
              check_tol: float | None = None, workers: int = 1, xy_max: float | None = None) -> SuiteReport:
    """Audit ``ids`` (all registered identities when None) at ``count`` points each.

    Identities are independent; with ``workers > 1`` they are checked on a
    thread pool and the report keeps the requested order.
    """
    from .. import __version__
    from ..kernels import get_backend

    ids = ordered_ids() if ids is None else list(ids)
    for i in ids:
        get(i)

    def one(i):
        return audit_identity(i, seed, count, cfg, check_tol, xy_max)

    if workers > 1 and len(ids) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(one, ids))
    else:
        records = [one(i) for i in ids]
    return SuiteReport(records, seed, count, cfg, check_tol, __version__, get_backend(), xy_max)


__all__ = [
    "check", "compose_check", "limit_check", "run_suite", "audit_identity", "residual_pattern",
    "SuiteReport", "IdentityRecord", "VariantSummary", "CSV_HEADER", "VERDICTS", "REGISTRY",
]
