import json
import math
import re

import pytest

from oracles import phi_direct, qnum, rel
from qhumbert.identities import (
    CSV_HEADER,
    REGISTRY,
    REGISTRY_SIZE,
    Env,
    SamplePoint,
    audit_identity,
    check,
    compose_check,
    get,
    limit_check,
    ordered_ids,
    residual_pattern,
    run_suite,
    sample_domain,
)
from qhumbert.identities.runner import _verdict
from qhumbert.types import DomainError


# registry

def test_registry_size_and_uniqueness():
    ids = ordered_ids()
    assert len(ids) == len(set(ids)) == REGISTRY_SIZE == len(REGISTRY)


def test_every_equation_of_section_two_is_present():
    ids = set(REGISTRY)
    numbers = set()
    for i in ids:
        m = re.match(r"(?:EQ|LIM)_2_(\d+)", i)
        if m:
            numbers.add(int(m.group(1)))
    assert numbers == set(range(1, 68))
    for sc in ("SC_1", "SC_2", "SC_3a", "SC_3b", "SC_4a", "SC_4b", "SC_54_1", "SC_54_2"):
        assert sc in ids
    for i in ("EQ_2_2a", "EQ_2_2b", "EQ_2_6a", "EQ_2_6b", "EQ_2_8b", "EQ_2_13a", "EQ_2_13b", "EQ_2_14a",
              "EQ_2_14b", "EQ_2_15", "EQ_2_20", "EQ_2_25", "EQ_2_54", "LIM_2_66"):
        assert i in ids


def test_kinds_and_equation_labels():
    kinds = {get(i).kind for i in REGISTRY}
    assert kinds <= {"algebraic", "operator", "recursion", "integral", "limit"}
    assert {i for i in REGISTRY if get(i).kind == "integral"} == {"EQ_2_55", "EQ_2_56", "EQ_2_57"}
    assert {i for i in REGISTRY if get(i).kind == "limit"} == {f"LIM_2_{n}" for n in range(62, 68)}
    for i in REGISTRY:
        assert get(i).paper_equation.startswith("(2.")
    with pytest.raises(KeyError):
        get("EQ_9_9")


def test_recursions_carry_depth():
    for n in (16, 17, 18, 19, 21, 22, 23, 24):
        for i in REGISTRY:
            if i.startswith(f"EQ_2_{n}"):
                assert get(i).kind == "recursion"
                assert "ell" in get(i).domain.depths


# sampling

def test_sampling_is_deterministic():
    a = sample_domain("EQ_2_54", 7, 20)
    b = sample_domain("EQ_2_54", 7, 20)
    assert a == b
    assert a != sample_domain("EQ_2_54", 8, 20)


def test_sampling_rejects_empty_request():
    with pytest.raises(ValueError):
        sample_domain("EQ_2_54", 1, 0)
    with pytest.raises(KeyError):
        sample_domain("EQ_2_999", 1, 3)


def test_default_ranges():
    for p in sample_domain("EQ_2_50", 2, 200):
        assert 0.3 <= p.q <= 0.9
        for e in (p.alpha, p.beta, p.gamma):
            assert 0.2 <= e <= 3.0
        assert abs(p.x) <= 0.4 and abs(p.y) <= 0.4


def test_denominator_recursion_samples_avoid_excluded_values():
    for p in sample_domain("EQ_2_21", 5, 1000):
        qg = p.q ** p.gamma
        for r in range(0, p.ell + 1):
            assert abs(qg - p.q ** r) > 1e-8


def test_fixed_fields_and_widening():
    pts = sample_domain("EQ_2_17a", 1, 10, fixed={"ell": 2})
    assert {p.ell for p in pts} == {2}
    wide = sample_domain("EQ_2_50", 1, 300, xy_max=0.8)
    assert max(max(abs(p.x), abs(p.y)) for p in wide) > 0.4


# check

def test_origin_forces_eq_2_38():
    res = check("EQ_2_38", SamplePoint(0.5, 0.7, 1.2, 2.1, 0.0, 0.0))
    assert res.status == "pass"
    assert res.abs_residual == 0


def test_check_examples():
    r = check("EQ_2_1", SamplePoint(0.5, 1.0, 1.0, 2.0, 0.2, 0.1, r=1))
    assert r.status == "pass" and r.rel_residual < 1e-8
    r = check("EQ_2_54", SamplePoint(0.5, 0.7, 1.3, 2.1, 0.2, 0.15))
    assert r.status == "pass" and r.rel_residual < 1e-8
    for m in (0, 1, 3):
        r = check("EQ_2_57", SamplePoint(0.6, 1.2, 1.0, 2.5, 0.0, 0.0, m=m))
        assert r.status == "pass" and r.rel_residual < 1e-8


def test_check_rejects_points_outside_domain():
    with pytest.raises(DomainError):
        check("EQ_2_55", SamplePoint(0.5 + 0.1j, 1.0, 1.0, 2.0, 0.1, 0.1))
    with pytest.raises(DomainError):
        check("SC_54_2", SamplePoint(0.5, 2.0, 1.0, 2.5, 0.1, 0.1))


def test_evaluation_domain_error_is_unverifiable():
    # the printed (2.56) power series is summed at the lattice point t = 1
    res = check("EQ_2_56", sample_domain("EQ_2_56", 1, 1)[0])
    assert res.status == "unverifiable"


def test_non_convergence_is_not_a_failure():
    from qhumbert import SeriesConfig

    res = check("EQ_2_50", sample_domain("EQ_2_50", 1, 1)[0], SeriesConfig(max_terms_2d=2, max_terms_1d=2))
    assert res.status == "not_converged"


def test_pass_iff_within_tolerance():
    pt = sample_domain("EQ_2_17a", 1, 1)[0]
    res = check("EQ_2_17a", pt)
    assert res.status == "fail"
    assert check("EQ_2_17a", pt, check_tol=10 * res.rel_residual).status == "pass"
    assert res.rel_residual == pytest.approx(res.abs_residual / max(1.0, abs(res.rhs_value)))


def test_composition_of_depth_one_steps():
    for p in sample_domain("EQ_2_16", 1, 6):
        assert compose_check("EQ_2_16", p).status == "pass"
    p = sample_domain("EQ_2_19", 2, 1, fixed={"ell": 2})[0]
    assert compose_check("EQ_2_19", p).status == "pass"
    with pytest.raises(ValueError):
        compose_check("EQ_2_1", p)


# limits

def test_limit_examples():
    pt = SamplePoint(0.5, 1.0, 1.0, 2.0, 0.2, 0.3)
    res = limit_check("LIM_2_62", [0.9, 0.99, 0.999], pt)
    errs = res.extra["errors"]
    assert errs[0] > errs[1] > errs[2] and errs[2] < 1e-2
    assert res.status == "pass"
    res = limit_check("LIM_2_65", None, sample_domain("LIM_2_65", 1, 1)[0])
    assert res.extra["termwise_residual"] == 0
    assert res.status == "pass"
    assert limit_check("LIM_2_66", None, sample_domain("LIM_2_66", 1, 1)[0]).status == "unverifiable"
    with pytest.raises(ValueError):
        limit_check("EQ_2_1", None, pt)


def test_limit_detects_a_wrong_target():
    pt = SamplePoint(0.5, 1.0, 1.0, 2.0, 0.2, 0.3)
    res = limit_check("LIM_2_62", [0.9, 0.8, 0.7], pt)
    assert res.status == "fail"


# verdicts and reports

def test_verdict_rules():
    c = {"pass": 3, "fail": 0, "not_converged": 1, "unverifiable": 0}
    assert _verdict(c) == "verified"
    assert _verdict({**c, "fail": 1}) == "refuted-as-printed"
    assert _verdict({"pass": 0, "fail": 0, "not_converged": 2, "unverifiable": 1}) == "unverifiable"
    assert _verdict(c, "unverifiable") == "unverifiable"


def test_shift_relations_always_pass():
    rep = run_suite(["EQ_2_6a", "EQ_2_7a", "EQ_2_8a"], seed=4, count=20)
    for r in rep.records:
        assert r.counts["pass"] == 20
        assert r.max_rel_residual == 0


def test_empty_suite():
    rep = run_suite([], seed=1, count=5)
    assert rep.records == [] and rep.exit_code() == 0
    assert json.loads(rep.to_json())["identities"] == []


def test_refuted_record_has_pattern_and_repair():
    rec = audit_identity("EQ_2_21", 1, 12)
    assert rec.verdict == "refuted-as-printed"
    assert rec.repaired()
    pat = rec.residual_pattern
    assert pat["n_fail"] == rec.counts["fail"]
    assert pat["depth_fields"] == ["ell"]
    roles = {v.role: v.verdict for v in rec.variants}
    assert roles == {"repair": "verified", "composition": "verified"}


def test_normalization_mismatch_is_recognised():
    # reading (2.30) with the 1/(1-q) of (2.31) is off by exactly that factor
    pts = sample_domain("EQ_2_30", 1, 8)
    res = [check("EQ_2_30", p, variant="extra 1/(1-q)") for p in pts]
    assert all(r.status == "fail" for r in res)
    pat = residual_pattern(res)
    assert pat["constant_factor"]["factor"] == "(1-q)"
    assert pat["constant_factor"]["constant"] == pytest.approx([1.0, 0.0], abs=1e-12)


def test_report_schema():
    rep = run_suite(["EQ_2_1", "EQ_2_17a", "LIM_2_66"], seed=1, count=4)
    data = json.loads(rep.to_json())
    assert data["seed"] == 1 and data["tool"] == "qhumbert"
    assert "cfg" in data and data["cfg"]["tol"] == 1e-16
    for rec in data["identities"]:
        n = rec["n_pass"] + rec["n_fail"] + rec["n_not_converged"] + rec["n_unverifiable"]
        assert n == rec["n_points"] == 4
        for key in ("id", "paper_equation", "max_rel_residual", "verdict", "failing_points"):
            assert key in rec
        assert len(rec["failing_points"]) == rec["n_fail"]
    assert rep.to_csv().splitlines()[0] == CSV_HEADER
    assert "refuted-as-printed: 1" in rep.to_text()


# operator sides against a direct weighted double loop

def _br(q, axis, s):
    return lambda n, k: qnum(s + (n if axis in ("x", "both") else 0) + (k if axis in ("y", "both") else 0), q)


class _Oracle:
    """Weighted truncated series at one sample point, summed by a plain double loop."""

    def __init__(self, pt):
        self.q = pt.q
        self.al, self.be, self.ga = pt.alpha, pt.beta, pt.gamma
        self.x, self.y = pt.x, pt.y

    def S(self, kind, w=None, da=0, db=0, dc=0):
        if kind == 3:
            return phi_direct(3, self.al + da, self.be + db, None, self.q, self.x, self.y, w, N=60)
        return phi_direct(kind, self.al + da, self.be + db, self.ga + dc, self.q, self.x, self.y, w, N=60)

    def qn(self, t):
        return qnum(t, self.q)

    def pw(self, t):
        return self.q ** t


def _mixed(kind, e, axis):
    def f(o):
        u = o.pw(e(o))
        if axis == "x":
            w = lambda n, k: u * o.qn(n) + o.qn(e(o)) + u * o.q ** n * o.qn(k)
        else:
            w = lambda n, k: u * o.qn(k) + o.qn(e(o)) + u * o.q ** k * o.qn(n)
        return o.S(kind, w)

    return f


def _single(kind, e, axis):
    def f(o):
        u = o.pw(e(o))
        return o.S(kind, lambda n, k: u * o.qn(n if axis == "x" else k) + o.qn(e(o)))

    return f


def _swap(kind, first="x"):
    if first == "x":
        return lambda o: o.S(kind, lambda n, k: o.qn(n) + o.q ** n * o.qn(k))
    return lambda o: o.S(kind, lambda n, k: o.qn(k) + o.q ** k * o.qn(n))


def _ops(kind, *brackets, scale=lambda o: 1.0):
    def f(o):
        def w(n, k):
            out = 1.0
            for axis, s in brackets:
                out *= _br(o.q, axis, s(o))(n, k)
            return out

        return scale(o) * o.S(kind, w)

    return f


def _recur(kind, e, shifts, sx, sy):
    def f(o):
        u = o.pw(e(o))
        return ((1 - u) * o.S(kind, None, *shifts)
                + u * o.S(kind, lambda n, k: o.q ** (n * sx + k * sy)))

    return f


def _expanded(kind, axis, e):
    def f(o):
        u = o.pw(e(o) - 1)
        idx = (lambda n, k: n) if axis == "x" else (lambda n, k: k)
        return o.S(kind, lambda n, k: o.qn(idx(n, k)) * (u * o.qn(n + k) + o.qn(e(o)) - u))

    return f


_al = lambda o: o.al
_be = lambda o: o.be
_ga = lambda o: o.ga
_gm1 = lambda o: o.ga - 1
_bm1 = lambda o: o.be - 1
_zero = lambda o: 0.0

LHS_ORACLES = {
    "EQ_2_9": _mixed(1, _al, "x"),
    "EQ_2_10a": _mixed(1, _al, "y"),
    "EQ_2_10b": _single(1, _be, "x"),
    "EQ_2_10c": _mixed(1, _gm1, "x"),
    "EQ_2_10d": _mixed(1, _gm1, "y"),
    "EQ_2_11a": _single(2, _al, "x"),
    "EQ_2_11b": _single(2, _be, "y"),
    "EQ_2_11c": _mixed(2, _gm1, "x"),
    "EQ_2_11d": _mixed(2, _gm1, "y"),
    "EQ_2_12a": _single(3, _al, "x"),
    "EQ_2_12b": _mixed(3, _bm1, "x"),
    "EQ_2_12c": _mixed(3, _bm1, "y"),
    "EQ_2_13a": _swap(1),
    "EQ_2_14a": lambda o: (o.pw(o.al) / o.qn(o.al) * o.S(2, lambda n, k: o.qn(n)) + o.S(2, None, 0, 1)),
    "EQ_2_14b": _swap(2),
    "EQ_2_15": _swap(3),
    "EQ_2_30": _ops(1, ("x", _zero)),
    "EQ_2_31": _ops(1, ("y", _zero)),
    "EQ_2_32a": _ops(2, ("x", _zero)),
    "EQ_2_32b": _ops(2, ("y", _zero)),
    "EQ_2_33a": _ops(3, ("x", _zero)),
    "EQ_2_33b": _ops(3, ("y", _zero)),
    "EQ_2_34": _ops(1, ("both", _al)),
    "EQ_2_35a": _ops(1, ("x", _be)),
    "EQ_2_35b": _ops(1, ("both", _gm1)),
    "EQ_2_36a": _ops(2, ("x", _al)),
    "EQ_2_36b": _ops(2, ("y", _be)),
    "EQ_2_36c": _ops(2, ("both", _gm1)),
    "EQ_2_37a": _ops(3, ("x", _al)),
    "EQ_2_37b": _ops(3, ("both", _bm1)),
    "EQ_2_38": _recur(1, _al, (1, 0, 0), 1, 1),
    "EQ_2_39a": _recur(1, _be, (0, 1, 0), 1, 0),
    "EQ_2_39b": _recur(1, _gm1, (0, 0, -1), 1, 1),
    "EQ_2_40a": _recur(2, _al, (1, 0, 0), 1, 0),
    "EQ_2_40b": _recur(2, _be, (0, 1, 0), 0, 1),
    "EQ_2_40c": _recur(2, _gm1, (0, 0, -1), 1, 1),
    "EQ_2_41a": _recur(3, _al, (1, 0), 1, 0),
    "EQ_2_41b": _recur(3, _bm1, (0, -1), 1, 1),
    "EQ_2_42": _ops(1, ("x", _zero), ("both", _gm1)),
    "EQ_2_43": _ops(1, ("y", _zero), ("both", _gm1)),
    "EQ_2_44a": _ops(2, ("x", _zero), ("both", _gm1)),
    "EQ_2_44b": _ops(2, ("y", _zero), ("both", _gm1)),
    "EQ_2_45a": _ops(3, ("x", _zero), ("both", _bm1)),
    "EQ_2_45b": _ops(3, ("y", _zero), ("both", _bm1)),
    "EQ_2_46": _expanded(1, "x", _ga),
    "EQ_2_47": _expanded(1, "y", _ga),
    "EQ_2_48a": _expanded(2, "x", _ga),
    "EQ_2_48b": _expanded(2, "y", _ga),
    "EQ_2_49a": _expanded(3, "x", _be),
    "EQ_2_49b": _expanded(3, "y", _be),
}

RHS_ORACLES = {
    "EQ_2_13a": _swap(1, "y"),
    "EQ_2_14b": _swap(2, "y"),
    "EQ_2_15": _swap(3, "y"),
    "EQ_2_42": _ops(1, ("both", _al), ("x", _be), scale=lambda o: o.x),
    "EQ_2_43": _ops(1, ("both", _al), scale=lambda o: o.y / (1 - o.q)),
    "EQ_2_44a": _ops(2, ("x", _al), scale=lambda o: o.x / (1 - o.q)),
    "EQ_2_44b": _ops(2, ("y", _be), scale=lambda o: o.y / (1 - o.q)),
    "EQ_2_45a": _ops(3, ("x", _al), scale=lambda o: o.x / (1 - o.q)),
    "EQ_2_46": lambda o: o.x * o.S(1, lambda n, k: (o.pw(o.al + o.be) * o.qn(n + k) * o.qn(n)
                                                     + o.pw(o.al) * o.qn(o.be) * o.qn(n + k)
                                                     + o.pw(o.be) * o.qn(o.al) * o.qn(n)
                                                     + o.qn(o.al) * o.qn(o.be))),
    "EQ_2_47": lambda o: o.y / (1 - o.q) * o.S(1, lambda n, k: o.pw(o.al) * o.qn(n + k) + o.qn(o.al)),
    "EQ_2_48a": lambda o: o.x / (1 - o.q) * o.S(2, lambda n, k: o.pw(o.al) * o.qn(n) + o.qn(o.al)),
    "EQ_2_48b": lambda o: o.y / (1 - o.q) * o.S(2, lambda n, k: o.pw(o.be) * o.qn(k) + o.qn(o.be)),
    "EQ_2_49a": lambda o: o.x / (1 - o.q) * o.S(3, lambda n, k: o.pw(o.al) * o.qn(n) + o.qn(o.al)),
}


def test_oracle_tables_cover_the_operator_families():
    wanted = [i for i in ordered_ids()
              if re.match(r"EQ_2_(9|1[0-5]|3\d|4\d)[a-z]?$", i) and i != "EQ_2_13b"]
    assert sorted(wanted) == sorted(LHS_ORACLES)


@pytest.mark.parametrize("id", sorted(LHS_ORACLES))
def test_operator_side_matches_direct_double_loop(id):
    spec = get(id)
    for pt in sample_domain(id, 3, 10):
        o = _Oracle(pt)
        E = Env(pt)
        assert rel(complex(spec.lhs(E)), LHS_ORACLES[id](o)) < 1e-8, (id, pt)
        if id in RHS_ORACLES:
            assert rel(complex(spec.rhs(E)), RHS_ORACLES[id](o)) < 1e-8, (id, pt)


def test_samplepoint_json_round_trip():
    p = SamplePoint(0.5 + 0.1j, 1.0, 2.0, 3.0, 0.1, -0.2, r=2, s=3, ell=1, m=4)
    assert SamplePoint.from_json(json.loads(json.dumps(p.to_json()))) == p
    assert not math.isnan(p.to_json()["x"])


@pytest.mark.parametrize("id", ["EQ_2_2b", "EQ_2_3c", "EQ_2_4c"])
def test_lattice_rounding_stays_inside_the_sampler_bound(id):
    # r = s = 3 is the worst case; includes points with sign cancellation in Phi
    from qhumbert.identities.registry import EPS

    dom = get(id).domain
    for p in sample_domain(id, 11, 15, fixed={"r": 3, "s": 3}):
        res = check(id, p)
        assert res.status == "pass"
        assert res.rel_residual <= dom.cond(p) * EPS
