"""q-integral representations of Phi1 and the q-beta integral behind them."""

import numpy as np

from ..qcore import (
    q_exponential,
    q_gamma,
    q_pochhammer_inf_array,
    q_power_binomial,
    q_power_product,
)
from ..qops import jackson_integral_01
from .core import Constraint, Domain, Variant
from .registry import REAL_Q, register


def _gap(pt):
    d = pt.gamma - pt.alpha
    return complex(pt.alpha).real > 0 and complex(d).real >= 0.2


_DOMAIN = Domain(constraints=(REAL_Q, Constraint("0 < alpha, gamma - alpha >= 0.2", _gap)))


def _prefactor(E):
    ctx, cfg = E.ctx, E.cfg
    return (q_gamma(ctx, E.ga, cfg).value
            / (q_gamma(ctx, E.al, cfg).value * q_gamma(ctx, E.ga - E.al, cfg).value))


def _integral(E, f, vectorized=True):
    return jackson_integral_01(E.ctx, f, E.cfg, vectorized=vectorized).value


def _pinf_arr(E, v):
    return q_pochhammer_inf_array(E.ctx, v, E.cfg)


def _eq_2_55(E):
    a, b, c, x, y, q = E.a, E.b, E.c, E.x, E.y, E.q

    def f(t):
        t = np.asarray(t, dtype=np.complex128)
        num = _pinf_arr(E, q * t) * _pinf_arr(E, x * t * b)
        den = _pinf_arr(E, x * t) * _pinf_arr(E, y * t) * _pinf_arr(E, t * c / a)
        return t ** (E.al - 1) * num / den

    return _prefactor(E) * _integral(E, f)


register("EQ_2_55", "(2.55)", "integral", lambda E: E.phi(1), _eq_2_55, _DOMAIN)


# (2.56): the three readings of the power factor (1 - qt)_(gamma-alpha-1)

def _reading_series(E, t, nu):
    # the displayed series with exponent -nu, applied as printed; it needs |t| < 1
    return q_power_binomial(E.ctx, t, -nu, E.cfg).value


def _reading_reciprocal(E, t, nu):
    # 1 / (1 - qt)_(-nu) continued through its product form (t; q)_inf / (q^nu t; q)_inf
    return E.pinf(t) / E.pinf(E.pw(nu) * t)


def _reading_product(E, t, nu):
    # (qt; q)_inf / (q^(nu+1) t; q)_inf, the kernel of (2.55) and (2.57)
    return q_power_product(E.ctx, t, nu, E.cfg).value


def _eq_2_56(power):
    def rhs(E):
        nu = E.ga - E.al - 1

        def f(t):
            return (t ** (E.al - 1) * power(E, t, nu)
                    * q_power_binomial(E.ctx, E.x * t, E.be, E.cfg).value
                    * q_exponential(E.ctx, t * E.y / (1 - E.q), E.cfg).value)

        return _prefactor(E) * _integral(E, f, vectorized=False)

    return rhs


register("EQ_2_56", "(2.56)", "integral", lambda E: E.phi(1), _eq_2_56(_reading_series), _DOMAIN,
         variants=(
             Variant("reciprocal product form", "alternative",
                     "(1 - qt)_nu read as 1/(1 - qt)_(-nu) with the displayed series summed in closed form, "
                     "(t; q)_inf / (q^nu t; q)_inf",
                     rhs=_eq_2_56(_reading_reciprocal)),
             Variant("q-beta kernel", "repair",
                     "(1 - qt)_nu read as (qt; q)_inf / (q^(nu+1) t; q)_inf, the kernel of (2.57)",
                     rhs=_eq_2_56(_reading_product)),
         ),
         note="as printed, the power factor is the displayed series, which diverges at the lattice point t = 1")


def _eq_2_57(E):
    a, c, q, m = E.a, E.c, E.q, E.m

    def f(t):
        t = np.asarray(t, dtype=np.complex128)
        return t ** (E.al + m - 1) * _pinf_arr(E, q * t) / _pinf_arr(E, t * c / a)

    return _prefactor(E) * _integral(E, f)


register("EQ_2_57", "(2.57)", "integral",
         lambda E: E.qp(E.a, E.m) / E.qp(E.c, E.m), _eq_2_57,
         Domain(m_values=(0, 1, 2, 3, 4, 5), fixed={"x": 0.0, "y": 0.0},
                constraints=_DOMAIN.constraints),
         note="the plain q-beta normalization Gamma_q(gamma)/(Gamma_q(alpha) Gamma_q(gamma-alpha)) "
              "reproduces the Pochhammer quotient with no extra factor")
