"""q-derivative formulas, theta shifts, q-differential formulas and the
differentiation formulas with power prefactors."""

from .core import Domain, Env, Variant
from .registry import derivative_amplification, register

_D = 1e-11  # cond_limit for operator sides built from iterated Jackson differences
# The bound of _deriv_domain tracks the rounding of every lattice value, so it
# can sit closer to check_tol: residuals stay below it at r = s = 3.
_D_TERMWISE = 1e-9


def _deriv_domain(r_used, s_used, coef, kind, shifts):
    depths = tuple(n for n, used in (("r", r_used), ("s", s_used)) if used)

    def cond(pt):
        E = Env(pt)
        r, s = (pt.r if r_used else 0), (pt.s if s_used else 0)
        # rounding on the lattice scales with the sum of |terms|, i.e. Phi at (|x|, |y|)
        # for positive coefficients; the residual is relative to the right side
        base = max(1.0, abs(E.phi(kind, x=abs(pt.x), y=abs(pt.y))))
        return derivative_amplification(pt, r, s, abs(coef(E) * E.phi(kind, *shifts(E)))) * base

    return Domain(xy=(0.15, 0.4), depths=depths, cond=cond, cond_limit=_D_TERMWISE,
                  note="points with ill-conditioned lattice differences are rejected")


def _deriv(id, eq, kind, r_used, s_used, coef, shifts):
    def lhs(E):
        return E.D(E.F(kind), E.r if r_used else 0, E.s if s_used else 0)

    def rhs(E):
        return coef(E) * E.phi(kind, *shifts(E))

    register(id, eq, "operator", lhs, rhs, _deriv_domain(r_used, s_used, coef, kind, shifts))


_deriv("EQ_2_1", "(2.1)", 1, True, False,
       lambda E: E.qp(E.a, E.r) * E.qp(E.b, E.r) / (E.qp(E.c, E.r) * (1 - E.q) ** E.r),
       lambda E: (E.r, E.r, E.r))
_deriv("EQ_2_2a", "(2.2) line 1", 1, False, True,
       lambda E: E.qp(E.a, E.s) / (E.qp(E.c, E.s) * (1 - E.q) ** E.s),
       lambda E: (E.s, 0, E.s))
_deriv("EQ_2_2b", "(2.2) line 2", 1, True, True,
       lambda E: E.qp(E.a, E.r + E.s) * E.qp(E.b, E.r) / (E.qp(E.c, E.r + E.s) * (1 - E.q) ** (E.r + E.s)),
       lambda E: (E.r + E.s, E.r, E.r + E.s))
_deriv("EQ_2_3a", "(2.3) line 1", 2, True, False,
       lambda E: E.qp(E.a, E.r) / (E.qp(E.c, E.r) * (1 - E.q) ** E.r),
       lambda E: (E.r, 0, E.r))
_deriv("EQ_2_3b", "(2.3) line 2", 2, False, True,
       lambda E: E.qp(E.b, E.s) / (E.qp(E.c, E.s) * (1 - E.q) ** E.s),
       lambda E: (0, E.s, E.s))
_deriv("EQ_2_3c", "(2.3) line 3", 2, True, True,
       lambda E: E.qp(E.a, E.r) * E.qp(E.b, E.s) / (E.qp(E.c, E.r + E.s) * (1 - E.q) ** (E.r + E.s)),
       lambda E: (E.r, E.s, E.r + E.s))
# Phi3: the sample point's beta is the denominator exponent (E.b = q**beta)
_deriv("EQ_2_4a", "(2.4) line 1", 3, True, False,
       lambda E: E.qp(E.a, E.r) / (E.qp(E.b, E.r) * (1 - E.q) ** E.r),
       lambda E: (E.r, E.r))
_deriv("EQ_2_4b", "(2.4) line 2", 3, False, True,
       lambda E: 1.0 / (E.qp(E.b, E.s) * (1 - E.q) ** E.s),
       lambda E: (0, E.s))
_deriv("EQ_2_4c", "(2.4) line 3", 3, True, True,
       lambda E: E.qp(E.a, E.r) / ((1 - E.q) ** (E.r + E.s) * E.qp(E.b, E.r + E.s)),
       lambda E: (E.r, E.r + E.s))


def _coef_25(E):
    return (1 - E.a) * (1 - E.b) / ((1 - E.q) * (1 - E.c))


register("EQ_2_5", "(2.5)", "operator",
         lambda E: E.D(E.F(1), 1, 0),
         lambda E: _coef_25(E) * E.phi(1, 1, 1, 1),
         Domain(xy=(0.15, 0.4), cond=lambda pt: derivative_amplification(pt, 1, 0), cond_limit=_D))

# theta shifts: q**Theta_x f = f(qx)
for _kind, _eq in ((1, "(2.6)"), (2, "(2.7)"), (3, "(2.8)")):
    for _sub, _axis in (("a", "x"), ("b", "y")):
        register(f"EQ_2_{5 + _kind}{_sub}", f"{_eq} line {1 if _axis == 'x' else 2}", "operator",
                 (lambda k, ax: lambda E: E.qshift(E.F(k), ax))(_kind, _axis),
                 (lambda k, ax: lambda E: E.phi(k, x=E.q * E.x) if ax == "x" else E.phi(k, y=E.q * E.y))(_kind, _axis))


# q-differential formulas (2.9)-(2.12)

def _mixed(kind, up, u_exp, axis, param_shift):
    """``(u Theta_axis + [e]_q) Phi + u Theta_other Phi(q axis) = [e]_q Phi(shifted)``."""
    other = "y" if axis == "x" else "x"

    def lhs(E):
        e = u_exp(E)
        u = E.pw(e)
        f = E.F(kind)
        g = E.scaled(f, sx=E.q) if axis == "x" else E.scaled(f, sy=E.q)
        return u * E.theta(f, axis) + E.qn(e) * f(E.x, E.y) + u * E.theta(g, other)

    def rhs(E):
        return E.qn(u_exp(E)) * E.phi(kind, *param_shift)

    return lhs, rhs


def _single(kind, u_exp, axis, param_shift):
    """``(u Theta_axis + [e]_q) Phi = [e]_q Phi(shifted)``."""

    def lhs(E):
        e = u_exp(E)
        f = E.F(kind)
        return E.pw(e) * E.theta(f, axis) + E.qn(e) * f(E.x, E.y)

    def rhs(E):
        return E.qn(u_exp(E)) * E.phi(kind, *param_shift)

    return lhs, rhs


_al = lambda E: E.al
_be = lambda E: E.be
_gm1 = lambda E: E.ga - 1
_bm1 = lambda E: E.be - 1

for _id, _eq, _l in (
    ("EQ_2_9", "(2.9)", _mixed(1, True, _al, "x", (1, 0, 0))),
    ("EQ_2_10a", "(2.10) line 1", _mixed(1, True, _al, "y", (1, 0, 0))),
    ("EQ_2_10b", "(2.10) line 2", _single(1, _be, "x", (0, 1, 0))),
    ("EQ_2_10c", "(2.10) line 3", _mixed(1, True, _gm1, "x", (0, 0, -1))),
    ("EQ_2_10d", "(2.10) line 4", _mixed(1, True, _gm1, "y", (0, 0, -1))),
    ("EQ_2_11a", "(2.11) line 1", _single(2, _al, "x", (1, 0, 0))),
    ("EQ_2_11b", "(2.11) line 2", _single(2, _be, "y", (0, 1, 0))),
    ("EQ_2_11c", "(2.11) line 3", _mixed(2, True, _gm1, "x", (0, 0, -1))),
    ("EQ_2_11d", "(2.11) line 4", _mixed(2, True, _gm1, "y", (0, 0, -1))),
    ("EQ_2_12a", "(2.12) line 1", _single(3, _al, "x", (1, 0))),
    ("EQ_2_12b", "(2.12) line 2", _mixed(3, True, _bm1, "x", (0, -1))),
    ("EQ_2_12c", "(2.12) line 3", _mixed(3, True, _bm1, "y", (0, -1))),
):
    register(_id, _eq, "operator", *_l,
             note="the unclosed bracket of the printed line is read as closing before Phi2" if _id == "EQ_2_11d" else "")


# q-partial derivative relations (2.13)-(2.15)

def _swap(kind):
    """``Theta_x Phi + Theta_y Phi(qx) = Theta_y Phi + Theta_x Phi(qy)``."""

    def lhs(E):
        f = E.F(kind)
        return E.theta(f, "x") + E.theta(E.scaled(f, sx=E.q), "y")

    def rhs(E):
        f = E.F(kind)
        return E.theta(f, "y") + E.theta(E.scaled(f, sy=E.q), "x")

    return lhs, rhs


register("EQ_2_13a", "(2.13) line 1", "operator", *_swap(1))
register("EQ_2_13b", "(2.13) line 2", "operator",
         lambda E: (E.a - E.pw(E.ga - 1)) * E.phi(1),
         lambda E: (1 - E.pw(E.ga - 1)) * E.a * E.phi(1, dc=-1) - (1 - E.a) * E.pw(E.ga - 1) * E.phi(1, da=1))
register("EQ_2_14a", "(2.14) line 1", "operator",
         lambda E: E.a / E.qn(E.al) * E.theta(E.F(2), "x") + E.phi(2, db=1),
         lambda E: E.b / E.qn(E.be) * E.theta(E.F(2), "y") + E.phi(2, da=1))
register("EQ_2_14b", "(2.14) line 2", "operator", *_swap(2))
register("EQ_2_15", "(2.15)", "operator", *_swap(3))


# differentiation formulas with power prefactors (2.58)-(2.61)

def _power_deriv(kind, p_exp, param, shifts, axis="x"):
    def lhs(E):
        f = E.F(kind)
        e = p_exp(E) + E.r - 1
        if axis == "x":
            g = lambda u: complex(u) ** e * f(u, E.y)
            return E.D1(g, E.x, E.r)
        g = lambda u: complex(u) ** e * f(E.x, u)
        return E.D1(g, E.y, E.r)

    def rhs(E):
        z = E.x if axis == "x" else E.y
        return (E.qp(param(E), E.r) / (1 - E.q) ** E.r * complex(z) ** (p_exp(E) - 1)
                * E.phi(kind, *shifts(E)))

    return lhs, rhs


def _pd_domain(axis):
    def cond(pt):
        return derivative_amplification(pt, pt.r if axis == "x" else 0, pt.r if axis == "y" else 0)

    return Domain(xy=(0.15, 0.4), depths=("r",), cond=cond, cond_limit=_D)


register("EQ_2_58", "(2.58)", "operator",
         *_power_deriv(1, lambda E: E.be, lambda E: E.b, lambda E: (0, E.r, 0)), domain=_pd_domain("x"),
         note="the doubled 'q,q' in the printed argument list is read as a single base q")


def _xsq(kind_axis, exponent):
    # (z**2 D_z)**r [z**e Phi1(x, xy)] on the x axis, or the mirrored y form
    def lhs(E):
        f = E.F(1)
        e = exponent(E)
        if kind_axis == "x":
            g = lambda u: complex(u) ** e * f(u, u * E.y)
            return E.xsq_D(g, E.x, E.r)
        g = lambda u: complex(u) ** e * f(E.x * u, u)
        return E.xsq_D(g, E.y, E.r)

    return lhs


def _xsq_rhs(axis):
    def rhs(E):
        z = E.x if axis == "x" else E.y
        xa, ya = (E.x, E.x * E.y) if axis == "x" else (E.x * E.y, E.y)
        return E.qp(E.a, E.r) / (1 - E.q) ** E.r * complex(z) ** (E.al + E.r) * E.phi(1, da=E.r, x=xa, y=ya)

    return rhs


for _id, _eq, _axis in (("EQ_2_59a", "(2.59) line 1", "x"), ("EQ_2_59b", "(2.59) line 2", "y")):
    register(_id, _eq, "operator", _xsq(_axis, lambda E: E.al - E.r + 1), _xsq_rhs(_axis),
             domain=_pd_domain(_axis),
             variants=(Variant("prefactor z**alpha", "repair",
                               "the power multiplying Phi1 is z**alpha instead of z**(alpha-r+1); "
                               "the two agree only at r = 1",
                               lhs=_xsq(_axis, lambda E: E.al)),))

register("EQ_2_60a", "(2.60) line 1", "operator",
         *_power_deriv(2, lambda E: E.al, lambda E: E.a, lambda E: (E.r, 0, 0)), domain=_pd_domain("x"))
register("EQ_2_60b", "(2.60) line 2", "operator",
         *_power_deriv(2, lambda E: E.be, lambda E: E.b, lambda E: (0, E.r, 0), axis="y"), domain=_pd_domain("y"))
register("EQ_2_61", "(2.61)", "operator",
         *_power_deriv(3, lambda E: E.al, lambda E: E.a, lambda E: (E.r, 0)), domain=_pd_domain("x"),
         note="the printed Phi3(q^alpha, q^beta; q^gamma) is read as Phi3(q^alpha; q^beta), q^beta the denominator")
