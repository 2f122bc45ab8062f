import numpy as np
import pytest

from oracles import classical_direct, phi_direct, rel
from qhumbert import (
    ClassicalParams,
    DomainError,
    HumbertParams,
    QContext,
    SeriesConfig,
    classical_phi1,
    classical_phi2,
    classical_phi3,
    phi1,
    phi2,
    phi3,
    rphis_plain,
    shifted,
)

Q = QContext(0.5)


def params(kind, ctx, al, be, ga=None):
    return HumbertParams.phi3(ctx, al, be) if kind == 3 else HumbertParams.from_exponents(ctx, al, be, ga)


@pytest.mark.parametrize("fn", [phi1, phi2, phi3])
def test_origin(fn):
    p = HumbertParams.from_exponents(Q, 0.7, 1.2, 2.1)
    assert fn(p, 0, 0).value == 1


def test_phi1_y0_is_2phi1():
    p = HumbertParams.from_exponents(Q, 0.7, 1.2, 2.1)
    got = phi1(p, 0.35, 0).value
    assert rel(got, rphis_plain(Q, [p.a, p.b], [p.c], 0.35).value) < 1e-14


def test_phi1_equal_parameters_against_direct_loop():
    p = HumbertParams.from_exponents(Q, 1.3, 1.3, 1.3)
    assert rel(phi1(p, 0.2, 0.3).value, phi_direct(1, 1.3, 1.3, 1.3, 0.5, 0.2, 0.3)) < 1e-14


def test_phi2_x0_and_symmetry():
    p = HumbertParams.from_exponents(Q, 0.7, 1.2, 2.1)
    got = phi2(p, 0, 0.3).value
    assert rel(got, rphis_plain(Q, [p.b, 0.0], [p.c], 0.3).value) < 1e-14
    swapped = HumbertParams.from_exponents(Q, 1.2, 0.7, 2.1)
    rng = np.random.default_rng(3)
    for _ in range(5):
        x, y = rng.uniform(-0.4, 0.4, 2)
        assert rel(phi2(p, x, y).value, phi2(swapped, y, x).value) < 1e-14


def test_phi3_examples():
    p = HumbertParams.phi3(Q, 1, 2)
    assert rel(phi3(p, 0, 0.3).value, rphis_plain(Q, [0.0, 0.0], [p.c], 0.3).value) < 1e-14
    assert rel(phi3(p, 0.3, 0.4).value, phi_direct(3, 1, 2, None, 0.5, 0.3, 0.4, N=81)) < 1e-14


@pytest.mark.parametrize("kind", [1, 2, 3])
def test_against_direct_loop_random(kind):
    rng = np.random.default_rng(40 + kind)
    fn = {1: phi1, 2: phi2, 3: phi3}[kind]
    for _ in range(8):
        q = rng.uniform(0.3, 0.9)
        al, be, ga = rng.uniform(0.2, 3, 3)
        x, y = rng.uniform(-0.4, 0.4, 2)
        got = fn(params(kind, QContext(q), al, be, ga), x, y).value
        assert rel(got, phi_direct(kind, al, be, ga, q, x, y, N=70)) < 1e-12


def test_complex_q_and_arguments():
    ctx = QContext(0.4 + 0.3j)
    p = HumbertParams.from_exponents(ctx, 0.6 + 0.2j, 1.1, 2.4)
    got = phi1(p, 0.2 - 0.1j, 0.3j).value
    assert rel(got, phi_direct(1, 0.6 + 0.2j, 1.1, 2.4, 0.4 + 0.3j, 0.2 - 0.1j, 0.3j, N=70)) < 1e-12


def test_denominator_pole_guard():
    with pytest.raises(DomainError):
        HumbertParams.from_exponents(Q, 1, 1, 0)
    with pytest.raises(DomainError):
        HumbertParams.from_exponents(Q, 1, 1, -2)
    with pytest.raises(DomainError):
        HumbertParams.phi3(Q, 1, -1 + 1e-12)


def test_shifted_examples():
    p = HumbertParams.from_exponents(Q, 0.3, 1.7, 2.2)
    assert shifted(p) == p
    assert shifted(p, da=1).a == p.a * 0.5
    there = shifted(shifted(p, dc=-1), dc=-1)
    assert shifted(there, dc=2).c == p.c
    with pytest.raises(DomainError):
        shifted(p, da=0.5)
    with pytest.raises(DomainError):
        shifted(HumbertParams.from_exponents(Q, 1, 1, 1), dc=-1)


@pytest.mark.parametrize("fn,kind", [(phi1, 1), (phi2, 2), (phi3, 3)])
def test_truncation_stability(fn, kind):
    rng = np.random.default_rng(kind)
    wide = SeriesConfig(max_terms_2d=2000)
    for _ in range(50):
        q = rng.uniform(0.3, 0.9)
        al, be, ga = rng.uniform(0.2, 3, 3)
        x, y = rng.uniform(-0.4, 0.4, 2)
        p = params(kind, QContext(q), al, be, ga)
        a, b = fn(p, x, y).value, fn(p, x, y, wide).value
        assert abs(a - b) <= 10 * 1e-16 * max(1, abs(a))


def test_degenerate_beta_zero_collapses_to_column():
    p = HumbertParams.from_exponents(Q, 0.8, 0.0, 1.9)
    got = phi1(p, 0.3, 0.25).value
    assert rel(got, rphis_plain(Q, [p.a], [p.c], 0.25).value) < 1e-14


def test_classical_examples():
    c = ClassicalParams(0.7, 1.2, 2.1)
    for fn in (classical_phi1, classical_phi2, classical_phi3):
        assert fn(c, 0, 0).value == 1
    # Gauss 2F1 for y = 0
    import mpmath
    assert rel(classical_phi1(c, 0.3, 0).value, complex(mpmath.hyp2f1(0.7, 1.2, 2.1, 0.3))) < 1e-14
    got = classical_phi3(ClassicalParams(1, 0, 1), 0.2, 0.1).value
    assert rel(got, classical_direct(3, 1, 1, None, 0.2, 0.1)) < 1e-14
    for kind, fn in ((1, classical_phi1), (2, classical_phi2)):
        assert rel(fn(c, 0.3, -0.2).value, classical_direct(kind, 0.7, 1.2, 2.1, 0.3, -0.2)) < 1e-13
    with pytest.raises(DomainError):
        ClassicalParams(1, 1, -3)


def test_q_to_one_limits_decrease():
    al, be, ga, x, y = 1.0, 1.0, 2.0, 0.2, 0.3
    targets = {
        1: classical_phi1(ClassicalParams(al, be, ga), x, y).value,
        2: classical_phi2(ClassicalParams(al, be, ga), x, y).value,
        3: classical_phi3(ClassicalParams(al, 0, be), x, y).value,
    }
    for kind, fn in ((1, phi1), (2, phi2), (3, phi3)):
        errors = []
        for q in (0.9, 0.99, 0.999):
            p = params(kind, QContext(q), al, be, ga)
            xs, ys = {1: (x, (1 - q) * y), 2: ((1 - q) * x, (1 - q) * y), 3: ((1 - q) * x, (1 - q) ** 2 * y)}[kind]
            errors.append(abs(fn(p, xs, ys).value - targets[kind]))
        assert errors[0] > errors[1] > errors[2]
        assert errors[2] < 1e-2
