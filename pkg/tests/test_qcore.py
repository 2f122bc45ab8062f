import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import poch, poch_inf, rel
from qhumbert import (
    DEFAULT_CONFIG,
    DomainError,
    NotConverged,
    QContext,
    SeriesConfig,
    q_beta,
    q_exponential,
    q_factorial,
    q_gamma,
    q_number,
    q_pochhammer,
    q_pochhammer_inf,
    q_power_binomial,
    q_power_product,
)
from qhumbert.types import PoleAtNonpositiveInteger

Q = QContext(0.5)


def test_context_rejects_q_outside_unit_disc():
    for q in (0.0, 1.0, -1.0, 1.5, 1j):
        with pytest.raises(DomainError):
            QContext(q)
    assert QContext(0.5 + 0.5j).q == 0.5 + 0.5j
    assert isinstance(QContext(0.5).q, float)


def test_series_config_validation():
    with pytest.raises(DomainError):
        SeriesConfig(tol=0.0)
    with pytest.raises(DomainError):
        SeriesConfig(consecutive_small=1)
    with pytest.raises(DomainError):
        SeriesConfig(max_terms_1d=0)


def test_tol_from_environment(monkeypatch):
    monkeypatch.setenv("QHUMBERT_TOL", "1e-12")
    assert SeriesConfig.from_env().tol == 1e-12
    assert SeriesConfig.from_env(tol=1e-10).tol == 1e-10
    monkeypatch.setenv("QHUMBERT_TOL", "small")
    with pytest.raises(DomainError):
        SeriesConfig.from_env()


def test_q_number_examples():
    assert q_number(Q, 0) == 0
    assert q_number(Q, 1) == 1
    assert q_number(Q, 2) == pytest.approx(1.5, abs=1e-15)


def test_q_factorial_is_product_of_q_numbers():
    assert q_factorial(Q, 0) == 1
    assert q_factorial(Q, 3) == pytest.approx(1 * 1.5 * 1.75)


def test_q_pochhammer_examples():
    assert q_pochhammer(Q, 0.3, 0) == 1
    assert q_pochhammer(Q, 0.5, 2) == pytest.approx(0.375, abs=1e-15)
    for q in (0.2, 0.7, 0.5j):
        assert q_pochhammer(QContext(q), 1.0, 3) == 0
    with pytest.raises(DomainError):
        q_pochhammer(Q, 0.5, -1)


def test_q_pochhammer_inf_examples():
    assert q_pochhammer_inf(Q, 0.0).value == 1
    # frozen from an independent product evaluation
    assert q_pochhammer_inf(Q, 0.5).value == pytest.approx(0.2887880951, abs=1e-10)
    q = QContext(0.9)
    brute = np.prod(1 - 0.9 * 0.9 ** np.arange(10_000))
    assert rel(q_pochhammer_inf(q, 0.9).value, brute) < 1e-14


def test_q_pochhammer_inf_reports_truncation():
    res = q_pochhammer_inf(QContext(0.9), 0.5)
    assert res.converged
    assert res.tail_estimate <= DEFAULT_CONFIG.tol
    with pytest.raises(NotConverged):
        q_pochhammer_inf(QContext(0.999), 0.5, SeriesConfig(max_terms_1d=50))


@pytest.mark.parametrize("N", [5, 20])
def test_q_pochhammer_inf_splits(N):
    for a in (0.3, -0.7, 0.4 + 0.3j):
        lhs = q_pochhammer_inf(Q, a).value
        rhs = q_pochhammer(Q, a, N) * q_pochhammer_inf(Q, a * 0.5 ** N).value
        assert rel(lhs, rhs) < 1e-15


def test_q_gamma_examples():
    assert q_gamma(Q, 1).value == pytest.approx(1, abs=1e-15)
    assert q_gamma(Q, 2).value == pytest.approx(1, abs=1e-15)
    g = q_gamma(Q, 2.5).value
    assert rel(q_gamma(Q, 3.5).value, q_number(Q, 2.5) * g) < 1e-14


def test_q_gamma_poles_and_complex_q():
    for alpha in (0, -1, -2.0):
        with pytest.raises(PoleAtNonpositiveInteger):
            q_gamma(Q, alpha)
    with pytest.raises(DomainError):
        q_gamma(QContext(0.5j), 1.5)


def test_q_gamma_approaches_gamma_monotonically():
    for alpha in (0.5, 1.7, 3.2):
        errors = [abs(q_gamma(QContext(q), alpha).value - math.gamma(alpha)) for q in (0.9, 0.99, 0.999)]
        assert errors[0] > errors[1] > errors[2]
        assert errors[2] < 1e-2


def test_q_beta_examples():
    assert q_beta(Q, 2, 1).value == pytest.approx(2 / 3, abs=1e-14)
    assert q_beta(Q, 1, 1).value == pytest.approx(1, abs=1e-14)
    q = QContext(0.4)
    expected = q_gamma(q, 1.5).value * q_gamma(q, 2.5).value / q_gamma(q, 4.0).value
    assert rel(q_beta(q, 1.5, 2.5).value, expected) < 1e-12


def test_q_beta_domain():
    with pytest.raises(DomainError):
        q_beta(Q, 0.0, 1.0)
    with pytest.raises(DomainError):
        q_beta(Q, 1.0, -2.0)


def test_q_exponential_examples():
    assert q_exponential(Q, 0).value == 1
    z = 1e-9
    assert q_exponential(Q, z).value == pytest.approx(1 + z, abs=1e-17)
    brute = sum(0.3 ** n / q_factorial(Q, n) for n in range(50))
    assert rel(q_exponential(Q, 0.3).value, brute) < 1e-15


def test_q_exponential_product_form():
    # e_q(z) = 1 / ((1-q) z; q)_inf inside the radius
    for z in (0.3, -1.2, 0.5 + 0.9j):
        assert rel(q_exponential(Q, z).value, 1 / poch_inf((1 - 0.5) * z, 0.5)) < 1e-13


def test_q_exponential_radius_guard():
    with pytest.raises(DomainError):
        q_exponential(Q, 2.0)


def test_q_power_binomial_examples():
    assert q_power_binomial(Q, 0.0, 0.7).value == 1
    assert q_power_binomial(Q, 0.2, 1).value == pytest.approx(1.25, abs=1e-14)
    assert q_power_binomial(Q, 0.6, 0).value == 1
    with pytest.raises(DomainError):
        q_power_binomial(Q, 1.0, 0.5)


def test_q_power_binomial_matches_q_binomial_theorem():
    # sum (q^nu; q)_n / (q; q)_n t^n = (q^nu t; q)_inf / (t; q)_inf
    for t, nu in ((0.3, 0.7), (-0.5, 2.3), (0.2 + 0.1j, 1.1)):
        expected = poch_inf(0.5 ** nu * t, 0.5) / poch_inf(t, 0.5)
        assert rel(q_power_binomial(Q, t, nu).value, expected) < 1e-13


def test_q_power_product_on_lattice():
    # (1 - qt)_nu at t = 1 is finite, and integer nu gives the finite product (qt; q)_nu
    assert q_power_product(Q, 1.0, 0.5).converged
    assert rel(q_power_product(Q, 0.3, 3).value, poch(0.5 * 0.3, 0.5, 3)) < 1e-14


@settings(max_examples=60, deadline=None)
@given(q=st.floats(0.1, 0.95), alpha=st.floats(-3, 3), n=st.integers(0, 15), k=st.integers(0, 15))
def test_pochhammer_splitting_property(q, alpha, n, k):
    ctx = QContext(q)
    a = ctx.power(alpha)
    lhs = q_pochhammer(ctx, a, n + k)
    rhs = q_pochhammer(ctx, a, n) * q_pochhammer(ctx, a * q ** n, k)
    assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(lhs), abs(q_pochhammer(ctx, a, n)) * abs(
        q_pochhammer(ctx, a * q ** n, k)))


@settings(max_examples=60, deadline=None)
@given(q=st.floats(0.05, 0.95), alpha=st.floats(-5, 5))
def test_q_number_limits_and_shift(q, alpha):
    ctx = QContext(q)
    # [alpha + 1]_q = 1 + q [alpha]_q
    assert q_number(ctx, alpha + 1) == pytest.approx(1 + q * q_number(ctx, alpha), rel=1e-12, abs=1e-12)
