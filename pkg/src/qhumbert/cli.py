"""Command line interface.

Usage::

    qhumbert eval phi1 --q 0.5 --alpha 1 --beta 1 --gamma 2 --x 0.2 --y 0.3
    qhumbert check EQ_2_54
    qhumbert suite --all --seed 1 --count 50 --format json --output report.json
    qhumbert list --kind integral

Exit codes:
    0  converged / pass / no unrepaired refutation
    1  usage error (bad parameters, unknown id, unwritable output)
    2  series did not converge
    3  domain error (eval)
    4  identity check failed, or the suite found an unrepaired refutation
    5  identity check unverifiable
"""

import argparse
import json
import math
import sys
from dataclasses import replace

from . import __version__
from .humbert import HumbertParams, phi1, phi2, phi3
from .identities import REGISTRY, check, get, ordered_ids, run_suite, sample_domain
from .identities.core import _cjson
from .identities.runner import _clean
from .qcore import q_beta, q_exponential, q_gamma, q_pochhammer, q_pochhammer_inf
from .series import rphis_plain
from .types import DomainError, EvalResult, NotConverged, QContext, RatioUndefined, SeriesConfig

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NOT_CONVERGED = 2
EXIT_DOMAIN = 3
EXIT_FAIL = 4
EXIT_UNVERIFIABLE = 5

FUNCTIONS = ("phi1", "phi2", "phi3", "qgamma", "qbeta", "qpochhammer", "qpochhammer_inf", "qexp", "rphis")
CHECK_EXIT = {"pass": EXIT_OK, "fail": EXIT_FAIL, "not_converged": EXIT_NOT_CONVERGED,
              "unverifiable": EXIT_UNVERIFIABLE}

_NUMERIC = ("q", "alpha", "beta", "gamma", "x", "y")
_DEPTHS = ("r", "s", "ell", "m")
_EVAL_DEFAULTS = {"q": 0.5, "alpha": 1.0, "beta": 1.0, "gamma": 2.0, "x": 0.0, "y": 0.0}


class UsageError(Exception):
    pass


def _number(text, allow_complex):
    """A real number, or ``"re,im"`` when complex input is enabled."""
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return float(parts[0])
        if len(parts) == 2 and allow_complex:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    hint = " (pass --complex for re,im pairs)" if len(parts) == 2 else ""
    raise UsageError(f"not a number: {text!r}{hint}")


def _exponents(text):
    """Comma separated exponents; ``inf`` stands for a zero parameter q**inf."""
    if not text:
        return []
    try:
        return [float(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"not a list of exponents: {text!r}") from None


def _values(args):
    out = {}
    for name in _NUMERIC:
        raw = getattr(args, name)
        if raw is not None:
            out[name] = _number(raw, args.complex)
    for name in _DEPTHS:
        v = getattr(args, name)
        if v is not None:
            if v < 0:
                raise UsageError(f"--{name} must be nonnegative")
            out[name] = v
    return out


def _config(args):
    try:
        if args.tol is not None:
            return SeriesConfig.from_env(tol=args.tol)
        return SeriesConfig.from_env()
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def _jsonable(v):
    if isinstance(v, complex):
        return _cjson(v)
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


def _text(v):
    if isinstance(v, list) and len(v) == 2 and all(isinstance(t, float) for t in v):
        return repr(complex(*v))
    if isinstance(v, dict):
        return ", ".join(f"{k}={_text(t)}" for k, t in v.items())
    return str(v)


def _emit(text, path=None):
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from None


# eval

def _evaluate(name, vals, n, numer, denom, cfg):
    ctx = QContext(vals["q"])
    if name in ("phi1", "phi2"):
        p = HumbertParams.from_exponents(ctx, vals["alpha"], vals["beta"], vals["gamma"], tol_pole=cfg.tol_pole)
        return (phi1 if name == "phi1" else phi2)(p, vals["x"], vals["y"], cfg)
    if name == "phi3":
        # Phi3 has one numerator and one denominator parameter: q**alpha and q**beta
        p = HumbertParams.phi3(ctx, vals["alpha"], vals["beta"], tol_pole=cfg.tol_pole)
        return phi3(p, vals["x"], vals["y"], cfg)
    if name == "qgamma":
        return q_gamma(ctx, vals["alpha"], cfg)
    if name == "qbeta":
        return q_beta(ctx, vals["alpha"], vals["beta"], cfg)
    if name == "qpochhammer":
        return EvalResult(complex(q_pochhammer(ctx, ctx.power(vals["alpha"]), n)), n, 0.0)
    if name == "qpochhammer_inf":
        return q_pochhammer_inf(ctx, ctx.power(vals["alpha"]), cfg)
    if name == "qexp":
        return q_exponential(ctx, vals["x"], cfg)
    if name == "rphis":
        return rphis_plain(ctx, [ctx.power(e) for e in numer], [ctx.power(e) for e in denom], vals["x"], cfg)
    raise UsageError(f"unknown function {name!r}")


def cmd_eval(args):
    cfg = _config(args)
    vals = {**_EVAL_DEFAULTS, **_values(args)}
    numer, denom = _exponents(args.numer), _exponents(args.denom)
    out = {"function": args.function, "parameters": {k: _jsonable(v) for k, v in vals.items()}}
    try:
        res = _evaluate(args.function, vals, args.n, numer, denom, cfg)
    except NotConverged as exc:
        partial = exc.result
        out.update(converged=False, error=str(exc))
        if partial is not None:
            out.update(value=_cjson(partial.value), terms_used=partial.terms_used,
                       tail_estimate=_jsonable(partial.tail_estimate))
        code = EXIT_NOT_CONVERGED
    except RatioUndefined as exc:
        out.update(converged=False, error=str(exc))
        code = EXIT_NOT_CONVERGED
    except DomainError as exc:
        out.update(error=f"DomainError: {exc}")
        code = EXIT_DOMAIN
    else:
        out.update(value=_cjson(res.value), terms_used=res.terms_used,
                   tail_estimate=_jsonable(res.tail_estimate), converged=bool(res.converged))
        code = EXIT_OK if res.converged else EXIT_NOT_CONVERGED
    if args.format == "json":
        _emit(json.dumps(out, indent=2) + "\n", args.output)
    else:
        _emit("".join(f"{k}: {_text(v)}\n" for k, v in out.items()), args.output)
    return code


# check

def _unknown_id(id):
    return UsageError(f"unknown identity id {id!r}; valid ids:\n  " + "\n  ".join(ordered_ids()))


def _point(id, args):
    """The first sampled point of ``id`` for ``--seed``, with the given flags applied."""
    vals = _values(args)
    base = sample_domain(id, args.seed, 1)[0]
    return replace(base, **vals)


def cmd_check(args):
    if args.id not in REGISTRY:
        raise _unknown_id(args.id)
    cfg = _config(args)
    pt = _point(args.id, args)
    try:
        res = check(args.id, pt, cfg, args.check_tol)
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    spec = get(args.id)
    out = {"id": res.id, "paper_equation": spec.paper_equation, **res.to_json()}
    if args.format == "json":
        _emit(json.dumps(_clean(out), indent=2, default=_jsonable) + "\n", args.output)
    else:
        lines = [f"{res.id} {spec.paper_equation}", f"point: {json.dumps(pt.to_json())}",
                 f"lhs: {res.lhs_value}", f"rhs: {res.rhs_value}",
                 f"abs residual: {res.abs_residual:.3e}", f"rel residual: {res.rel_residual:.3e}",
                 f"status: {res.status}"]
        if res.message:
            lines.append(f"message: {res.message}")
        _emit("\n".join(lines) + "\n", args.output)
    return CHECK_EXIT[res.status]


# suite

def cmd_suite(args):
    if args.ids and args.all:
        raise UsageError("use either --ids or --all")
    ids = None
    if args.ids:
        ids = [i.strip() for i in args.ids.split(",") if i.strip()]
        for i in ids:
            if i not in REGISTRY:
                raise _unknown_id(i)
    if args.count < 1:
        raise UsageError("--count must be at least 1")
    cfg = _config(args)
    try:
        report = run_suite(ids, seed=args.seed, count=args.count, cfg=cfg, check_tol=args.check_tol,
                           workers=max(1, args.workers), xy_max=args.xy_max)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    fmt = args.format or "json"
    body = {"json": report.to_json, "csv": report.to_csv, "text": report.to_text}[fmt]()
    if args.output is not None:
        _emit(body, args.output)
        sys.stdout.write(report.to_text())
    else:
        _emit(body)
    return report.exit_code()


# list

def cmd_list(args):
    ids = [i for i in ordered_ids() if args.kind is None or get(i).kind == args.kind]
    if args.format == "json":
        rows = [{"id": i, "paper_equation": get(i).paper_equation, "kind": get(i).kind,
                 "domain": get(i).domain.describe()} for i in ids]
        sys.stdout.write(json.dumps(rows, indent=2) + "\n")
    else:
        for i in ids:
            spec = get(i)
            sys.stdout.write(f"{i:<10} {spec.paper_equation:<42} {spec.kind:<10} {spec.domain.describe()}\n")
    return EXIT_OK


def _add_point_flags(p, eval_mode=False):
    g = p.add_argument_group("point")
    for name in _NUMERIC:
        default = f" (default {_EVAL_DEFAULTS[name]})" if eval_mode else ""
        g.add_argument(f"--{name}", help=f"{name}{default}")
    g.add_argument("--complex", action="store_true", help='accept complex values as "re,im"')
    for name in _DEPTHS:
        g.add_argument(f"--{name}", type=int)


def _add_numeric_flags(p):
    p.add_argument("--tol", type=float, help="series truncation tolerance (overrides QHUMBERT_TOL)")


def build_parser():
    parser = argparse.ArgumentParser(prog="qhumbert", description="Basic Humbert functions and identity audit")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a function at a point")
    p.add_argument("function", choices=FUNCTIONS)
    _add_point_flags(p, eval_mode=True)
    p.add_argument("--n", type=int, default=1, help="length of the finite q-Pochhammer product")
    p.add_argument("--numer", default="", help="rphis numerator exponents, comma separated")
    p.add_argument("--denom", default="", help="rphis denominator exponents, comma separated")
    _add_numeric_flags(p)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--output")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("check", help="check one identity at one point")
    p.add_argument("id")
    _add_point_flags(p)
    p.add_argument("--seed", type=int, default=1, help="seed of the default point")
    p.add_argument("--check-tol", type=float, dest="check_tol")
    _add_numeric_flags(p)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--output")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("suite", help="audit identities over sampled points")
    p.add_argument("--ids", help="comma separated identity ids")
    p.add_argument("--all", action="store_true", help="every registered identity (the default)")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--check-tol", type=float, dest="check_tol")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--xy-max", type=float, dest="xy_max",
                   help="sample |x|, |y| up to this bound instead of each identity's default")
    _add_numeric_flags(p)
    p.add_argument("--format", choices=("json", "csv", "text"))
    p.add_argument("--output", help="report path; a text summary goes to standard output")
    p.set_defaults(func=cmd_suite)

    p = sub.add_parser("list", help="print the identity catalog")
    p.add_argument("--kind", choices=sorted({s.kind for s in REGISTRY.values()}))
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_list)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on bad usage; usage errors are 1 here
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"qhumbert: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
