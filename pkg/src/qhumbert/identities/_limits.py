"""Limits: q -> 1 towards the confluent Humbert functions, and parameter limits.

Each side takes the environment and one element ``s`` of the approach
sequence (a value of q, or an exponent). The parameter limits
``q**beta -> 0`` are decided exactly, by substituting the zero value and
comparing the double series term by term; their exponent sequence is only
recorded.
"""

from dataclasses import replace

import numpy as np

from ..humbert import ClassicalParams, HumbertParams, classical_phi1, classical_phi2, classical_phi3, phi_spec
from ..series import double_series_terms
from .core import Domain, Env
from .registry import register

_Q_SEQ = (0.9, 0.99, 0.999)
_EXP_SEQ = (4.0, 8.0, 16.0, 32.0, 64.0)
_TERMWISE_DEPTH = 40

# the q -> 1 limits are followed at one small (x, y); along a random (x, y) the
# first-order error can change sign near q = 0.99 and break strict decrease
_Q_DOMAIN = Domain(fixed={"x": 0.2, "y": 0.3},
                   note="q runs through the approach sequence; the sampled q is not used")


def _at_q(E, q):
    return Env(replace(E.pt, q=q), E.cfg)


def _classical(fn):
    return lambda E, s: fn(ClassicalParams(E.al, E.be, E.ga), E.x, E.y, E.cfg).value


def _classical_phi3(E, s):
    # the point's beta is the Phi3 denominator, which the classical params keep in gamma
    return classical_phi3(ClassicalParams(E.al, 0.0, E.be), E.x, E.y, E.cfg).value


register("LIM_2_62", "(2.62)", "limit",
         lambda E, s: _at_q(E, s).phi(1, y=(1 - s) * E.y),
         _classical(classical_phi1),
         _Q_DOMAIN,
         sequence=_Q_SEQ)
register("LIM_2_63", "(2.63)", "limit",
         lambda E, s: _at_q(E, s).phi(2, x=(1 - s) * E.x, y=(1 - s) * E.y),
         _classical(classical_phi2),
         _Q_DOMAIN,
         sequence=_Q_SEQ)
register("LIM_2_64", "(2.64)", "limit",
         lambda E, s: _at_q(E, s).phi(3, x=(1 - s) * E.x, y=(1 - s) ** 2 * E.y),
         _classical_phi3,
         _Q_DOMAIN,
         sequence=_Q_SEQ)


def _termwise(kind_a, pa, kind_b, pb):
    def residual(E):
        ta = double_series_terms(phi_spec(kind_a, pa(E), E.x, E.y), _TERMWISE_DEPTH)
        tb = double_series_terms(phi_spec(kind_b, pb(E), E.x, E.y), _TERMWISE_DEPTH)
        return float(np.max(np.abs(ta - tb)))

    return residual


def _phi3_params(E, num):
    return HumbertParams(E.ctx, num, 0.0, E.c, E.cfg.tol_pole)


register("LIM_2_65", "(2.65)", "limit",
         lambda E, s: E.phi(2, b=E.pw(s)),
         lambda E, s: E.phi(3, a=E.a, c=E.c),
         Domain(note="beta runs through the approach sequence; the limit is also checked at q^beta = 0"),
         sequence=_EXP_SEQ,
         termwise=_termwise(2, lambda E: E.params(2, b=0.0), 3, lambda E: _phi3_params(E, E.a)))

register("LIM_2_66", "(2.66)", "limit",
         lambda E, s: E.phi(2, b=E.pw(s), x=E.x * E.pw(-s)),
         None,
         Domain(note="the right side depends on an unbound index n; only the left side is recorded"),
         sequence=(-5.0, -10.0, -15.0),
         classification="unverifiable",
         note="the limit value contains q^((n-1)/2) with n not bound by the statement")

register("LIM_2_67", "(2.67)", "limit",
         lambda E, s: E.phi(1, a=E.pw(s)),
         lambda E, s: E.phi(3, a=E.b, c=E.c),
         Domain(note="alpha runs through the approach sequence; the limit is also checked at q^alpha = 0"),
         sequence=_EXP_SEQ,
         termwise=_termwise(1, lambda E: E.params(1, a=0.0), 3, lambda E: _phi3_params(E, E.b)))
