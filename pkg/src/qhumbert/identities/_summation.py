"""Outer-sum expansions, the transformation to a 3phi2 and their special cases."""

from .core import Constraint, Domain
from .registry import register


def _outer(E, coef, inner):
    """``sum_j coef(j) * inner(j)`` summed until the terms are negligible."""
    return E.series(lambda j: coef(j) * inner(j))


def _eq_2_50(E):
    return _outer(E, lambda n: E.qp(E.a, n) * E.qp(E.b, n) / (E.qp(E.c, n) * E.qp(E.q, n)) * E.x ** n,
                  lambda n: E.rphis([E.a * E.q ** n, 0.0], [E.c * E.q ** n], E.y))


def _eq_2_51(E):
    return _outer(E, lambda k: E.qp(E.a, k) / (E.qp(E.c, k) * E.qp(E.q, k)) * E.y ** k,
                  lambda k: E.rphis([E.a * E.q ** k, E.b], [E.c * E.q ** k], E.x))


register("EQ_2_50", "(2.50)", "algebraic", lambda E: E.phi(1), _eq_2_50,
         note="the doubled 'q,q' in the printed argument list is read as a single base q")
register("EQ_2_51", "(2.51)", "algebraic", lambda E: E.phi(1), _eq_2_51)
register("EQ_2_52a", "(2.52) line 1", "algebraic", lambda E: E.phi(2),
         lambda E: _outer(E, lambda n: E.qp(E.a, n) / (E.qp(E.c, n) * E.qp(E.q, n)) * E.x ** n,
                          lambda n: E.rphis([E.b, 0.0], [E.c * E.q ** n], E.y)))
register("EQ_2_52b", "(2.52) line 2", "algebraic", lambda E: E.phi(2),
         lambda E: _outer(E, lambda k: E.qp(E.b, k) / (E.qp(E.c, k) * E.qp(E.q, k)) * E.y ** k,
                          lambda k: E.rphis([E.a, 0.0], [E.c * E.q ** k], E.x)))
register("EQ_2_53a", "(2.53) line 1", "algebraic", lambda E: E.phi(3),
         lambda E: _outer(E, lambda n: E.qp(E.a, n) / (E.qp(E.b, n) * E.qp(E.q, n)) * E.x ** n,
                          lambda n: E.rphis([0.0, 0.0], [E.b * E.q ** n], E.y)))
register("EQ_2_53b", "(2.53) line 2", "algebraic", lambda E: E.phi(3),
         lambda E: _outer(E, lambda k: 1.0 / (E.qp(E.b, k) * E.qp(E.q, k)) * E.y ** k,
                          lambda k: E.rphis([E.a, 0.0], [E.b * E.q ** k], E.x)))

_Y0 = Domain(fixed={"y": 0.0})
_X0 = Domain(fixed={"x": 0.0})

register("SC_1", "(2.50) special case y = 0", "algebraic", lambda E: E.phi(1),
         lambda E: E.rphis([E.a, E.b], [E.c], E.x), _Y0)
register("SC_2", "(2.51) special case x = 0", "algebraic", lambda E: E.phi(1),
         lambda E: E.rphis([E.a, 0.0], [E.c], E.y), _X0)
register("SC_3a", "(2.52) special case y = 0", "algebraic", lambda E: E.phi(2),
         lambda E: E.rphis([E.a, 0.0], [E.c], E.x), _Y0)
register("SC_3b", "(2.52) special case x = 0", "algebraic", lambda E: E.phi(2),
         lambda E: E.rphis([E.b, 0.0], [E.c], E.y), _X0)
register("SC_4a", "(2.53) special case y = 0", "algebraic", lambda E: E.phi(3),
         lambda E: E.rphis([E.a, 0.0], [E.b], E.x), _Y0)
register("SC_4b", "(2.53) special case x = 0", "algebraic", lambda E: E.phi(3),
         lambda E: E.rphis([0.0, 0.0], [E.b], E.y), _X0)


# transformation

def _eq_2_54(E):
    return (E.pinf(E.a, E.b * E.x) / E.pinf(E.c, E.x, E.y)
            * E.rphis([E.c / E.a, E.x, E.y], [E.b * E.x, 0.0], E.a))


register("EQ_2_54", "(2.54)", "algebraic", lambda E: E.phi(1), _eq_2_54)
register("SC_54_1", "(2.54) special case y = q^beta x", "algebraic",
         lambda E: E.phi(1, y=E.b * E.x),
         lambda E: E.rphis([E.a, 0.0], [E.c], E.x),
         Domain(note="y is replaced by q^beta x"))


# x = q^(gamma-alpha-beta) must lie inside |x| < 1 (gamma > alpha + beta for real q);
# the margin keeps Phi1 clear of its radius, where the default term cap runs out
def _x_special(pt):
    return abs(complex(pt.q) ** (pt.gamma - pt.alpha - pt.beta)) <= 0.9


def _sc_54_2_rhs(E):
    X = E.pw(E.ga - E.al - E.be)
    return (E.pinf(E.a, E.c / E.a) / E.pinf(E.c, X, E.y)
            * E.rphis([X, E.y], [0.0], E.a))


register("SC_54_2", "(2.54) special case x = q^(gamma-alpha-beta)", "algebraic",
         lambda E: E.phi(1, x=E.pw(E.ga - E.al - E.be)), _sc_54_2_rhs,
         Domain(constraints=(Constraint("|q^(gamma-alpha-beta)| <= 0.9", _x_special),),
                note="x is replaced by q^(gamma-alpha-beta)"))
