"""Parameter q-difference equations, theta-bracket relations, q-recurrences
and q-partial differential equations."""

from .core import Variant
from .registry import register


def _th(E, f, axis):
    return E.theta(f, axis)


def _mixed_theta(kind, first, shifts=(0, 0, 0)):
    """``Theta_first Phi + Theta_other Phi(q first)`` with shifted parameters."""
    other = "y" if first == "x" else "x"

    def value(E):
        f = E.F(kind, *shifts)
        g = E.scaled(f, sx=E.q) if first == "x" else E.scaled(f, sy=E.q)
        return E.theta(f, first) + E.theta(g, other)

    return value


# parameter q-difference equations

register("EQ_2_26", "(2.26)", "operator",
         lambda E: E.pD(1, "a"),
         lambda E: -1.0 / (1 - E.a) * _mixed_theta(1, "x")(E),
         variants=(Variant("derivative without the 1/q^alpha factor", "alternative",
                           "reads D_alpha as (f(q^alpha) - f(q^(alpha+1)))/(1-q), i.e. q^alpha times the "
                           "Jackson derivative in q^alpha",
                           lhs=lambda E: E.a * E.pD(1, "a")),))
register("EQ_2_27a", "(2.27) line 1", "operator",
         lambda E: E.pD(1, "a"), lambda E: -1.0 / (1 - E.a) * _mixed_theta(1, "y")(E))
register("EQ_2_27b", "(2.27) line 2", "operator",
         lambda E: E.pD(1, "b"), lambda E: -1.0 / (1 - E.b) * E.theta(E.F(1), "x"))
register("EQ_2_27c", "(2.27) line 3", "operator",
         lambda E: E.pD(1, "c"), lambda E: 1.0 / (1 - E.c) * _mixed_theta(1, "x", (0, 0, 1))(E))
register("EQ_2_27d", "(2.27) line 4", "operator",
         lambda E: E.pD(1, "c"), lambda E: 1.0 / (1 - E.c) * _mixed_theta(1, "y", (0, 0, 1))(E))

register("EQ_2_28a", "(2.28) line 1", "operator",
         lambda E: E.pD(2, "a"), lambda E: -1.0 / (1 - E.a) * E.theta(E.F(2), "x"))
register("EQ_2_28b", "(2.28) line 2", "operator",
         lambda E: E.pD(2, "b"), lambda E: -1.0 / (1 - E.b) * E.theta(E.F(2), "y"))
register("EQ_2_28c", "(2.28) line 3", "operator",
         lambda E: E.pD(2, "c"), lambda E: 1.0 / (1 - E.c) * _mixed_theta(2, "x", (0, 0, 1))(E))
register("EQ_2_28d", "(2.28) line 4", "operator",
         lambda E: E.pD(2, "c"), lambda E: 1.0 / (1 - E.c) * _mixed_theta(2, "y", (0, 0, 1))(E))

# Phi3: its denominator q^beta sits in the c slot, so D_beta differentiates "c"
register("EQ_2_29a", "(2.29) line 1", "operator",
         lambda E: E.pD(3, "a"), lambda E: -1.0 / (1 - E.a) * E.theta(E.F(3), "x"))
register("EQ_2_29b", "(2.29) line 2", "operator",
         lambda E: E.pD(3, "c"), lambda E: 1.0 / (1 - E.b) * _mixed_theta(3, "x", (0, 1))(E))
register("EQ_2_29c", "(2.29) line 3", "operator",
         lambda E: E.pD(3, "c"), lambda E: 1.0 / (1 - E.b) * _mixed_theta(3, "y", (0, 1))(E))


# theta-bracket relations

register("EQ_2_30", "(2.30)", "operator",
         lambda E: E.theta(E.F(1), "x"),
         lambda E: E.qn(E.al) * E.qn(E.be) / E.qn(E.ga) * E.x * E.phi(1, 1, 1, 1),
         variants=(Variant("extra 1/(1-q)", "alternative",
                           "the normalization of the neighbouring y-relation, which does not apply here",
                           rhs=lambda E: E.qn(E.al) * E.qn(E.be) / ((1 - E.q) * E.qn(E.ga)) * E.x
                           * E.phi(1, 1, 1, 1)),))
register("EQ_2_31", "(2.31)", "operator",
         lambda E: E.theta(E.F(1), "y"),
         lambda E: E.qn(E.al) / ((1 - E.q) * E.qn(E.ga)) * E.y * E.phi(1, 1, 0, 1),
         variants=(Variant("without 1/(1-q)", "alternative",
                           "the normalization of the x-relation, which does not apply here",
                           rhs=lambda E: E.qn(E.al) / E.qn(E.ga) * E.y * E.phi(1, 1, 0, 1)),))
register("EQ_2_32a", "(2.32) line 1", "operator",
         lambda E: E.theta(E.F(2), "x"),
         lambda E: E.qn(E.al) / ((1 - E.q) * E.qn(E.ga)) * E.x * E.phi(2, 1, 0, 1))
register("EQ_2_32b", "(2.32) line 2", "operator",
         lambda E: E.theta(E.F(2), "y"),
         lambda E: E.qn(E.be) / ((1 - E.q) * E.qn(E.ga)) * E.y * E.phi(2, 0, 1, 1))
register("EQ_2_33a", "(2.33) line 1", "operator",
         lambda E: E.theta(E.F(3), "x"),
         lambda E: E.qn(E.al) / ((1 - E.q) * E.qn(E.be)) * E.x * E.phi(3, 1, 1))
register("EQ_2_33b", "(2.33) line 2", "operator",
         lambda E: E.theta(E.F(3), "y"),
         lambda E: 1.0 / ((1 - E.q) ** 2 * E.qn(E.be)) * E.y * E.phi(3, 0, 1))


# [Theta + e]_q Phi = [e]_q Phi(shifted)

def _bracket(kind, axis, exp, shifts):
    return (lambda E: E.op(E.F(kind), (axis, exp(E))),
            lambda E: E.qn(exp(E)) * E.phi(kind, *shifts))


_al = lambda E: E.al
_be = lambda E: E.be
_gm1 = lambda E: E.ga - 1
_bm1 = lambda E: E.be - 1

for _id, _eq, (_k, _ax, _e, _sh) in (
    ("EQ_2_34", "(2.34)", (1, "both", _al, (1, 0, 0))),
    ("EQ_2_35a", "(2.35) line 1", (1, "x", _be, (0, 1, 0))),
    ("EQ_2_35b", "(2.35) line 2", (1, "both", _gm1, (0, 0, -1))),
    ("EQ_2_36a", "(2.36) line 1", (2, "x", _al, (1, 0, 0))),
    ("EQ_2_36b", "(2.36) line 2", (2, "y", _be, (0, 1, 0))),
    ("EQ_2_36c", "(2.36) line 3", (2, "both", _gm1, (0, 0, -1))),
    ("EQ_2_37a", "(2.37) line 1", (3, "x", _al, (1, 0))),
    ("EQ_2_37b", "(2.37) line 2", (3, "both", _bm1, (0, -1))),
):
    register(_id, _eq, "operator", *_bracket(_k, _ax, _e, _sh))


# (1 - u) Phi(shifted) + u Phi(scaled arguments) - Phi = 0, written as lhs = Phi

def _recurrence(kind, exp, shifts, sx, sy):
    def lhs(E):
        u = E.pw(exp(E))
        xs = E.q * E.x if sx else E.x
        ys = E.q * E.y if sy else E.y
        return (1 - u) * E.phi(kind, *shifts) + u * E.phi(kind, x=xs, y=ys)

    return lhs, (lambda E: E.phi(kind))


for _id, _eq, _args in (
    ("EQ_2_38", "(2.38)", (1, _al, (1, 0, 0), True, True)),
    ("EQ_2_39a", "(2.39) line 1", (1, _be, (0, 1, 0), True, False)),
    ("EQ_2_39b", "(2.39) line 2", (1, _gm1, (0, 0, -1), True, True)),
    ("EQ_2_40a", "(2.40) line 1", (2, _al, (1, 0, 0), True, False)),
    ("EQ_2_40b", "(2.40) line 2", (2, _be, (0, 1, 0), False, True)),
    ("EQ_2_40c", "(2.40) line 3", (2, _gm1, (0, 0, -1), True, True)),
    ("EQ_2_41a", "(2.41) line 1", (3, _al, (1, 0), True, False)),
    ("EQ_2_41b", "(2.41) line 2", (3, _bm1, (0, -1), True, True)),
):
    register(_id, _eq, "operator", *_recurrence(*_args))


# q-partial differential equations; the terms carrying an x or y prefactor form the rhs

register("EQ_2_42", "(2.42)", "operator",
         lambda E: E.op(E.F(1), ("x", 0), ("both", E.ga - 1)),
         lambda E: E.x * E.op(E.F(1), ("both", E.al), ("x", E.be)))
register("EQ_2_43", "(2.43)", "operator",
         lambda E: E.op(E.F(1), ("y", 0), ("both", E.ga - 1)),
         lambda E: E.y / (1 - E.q) * E.op(E.F(1), ("both", E.al)))
register("EQ_2_44a", "(2.44) line 1", "operator",
         lambda E: E.op(E.F(2), ("x", 0), ("both", E.ga - 1)),
         lambda E: E.x / (1 - E.q) * E.op(E.F(2), ("x", E.al)))
register("EQ_2_44b", "(2.44) line 2", "operator",
         lambda E: E.op(E.F(2), ("y", 0), ("both", E.ga - 1)),
         lambda E: E.y / (1 - E.q) * E.op(E.F(2), ("y", E.be)))
register("EQ_2_45a", "(2.45) line 1", "operator",
         lambda E: E.op(E.F(3), ("x", 0), ("both", E.be - 1)),
         lambda E: E.x / (1 - E.q) * E.op(E.F(3), ("x", E.al)))
register("EQ_2_45b", "(2.45) line 2", "operator",
         lambda E: E.op(E.F(3), ("y", 0), ("both", E.be - 1)),
         lambda E: E.y / (1 - E.q) ** 2 * E.phi(3))


def _lhs_expanded(kind, axis, e):
    """``q**(e-1) [Theta_axis][Theta_x+Theta_y] + ([e]_q - q**(e-1)) [Theta_axis]`` applied to Phi."""

    def lhs(E):
        f = E.F(kind)
        u = E.pw(e(E) - 1)
        return u * E.op(f, (axis, 0), ("both", 0)) + (E.qn(e(E)) - u) * E.op(f, (axis, 0))

    return lhs


_ga = lambda E: E.ga

register("EQ_2_46", "(2.46)", "operator", _lhs_expanded(1, "x", _ga),
         lambda E: E.x * (E.pw(E.al + E.be) * E.op(E.F(1), ("both", 0), ("x", 0))
                          + E.a * E.qn(E.be) * E.op(E.F(1), ("both", 0))
                          + E.b * E.qn(E.al) * E.op(E.F(1), ("x", 0))
                          + E.qn(E.al) * E.qn(E.be) * E.phi(1)))
register("EQ_2_47", "(2.47)", "operator", _lhs_expanded(1, "y", _ga),
         lambda E: E.y / (1 - E.q) * (E.a * E.op(E.F(1), ("both", 0)) + E.qn(E.al) * E.phi(1)))
register("EQ_2_48a", "(2.48) line 1", "operator", _lhs_expanded(2, "x", _ga),
         lambda E: E.x / (1 - E.q) * (E.a * E.op(E.F(2), ("x", 0)) + E.qn(E.al) * E.phi(2)))
register("EQ_2_48b", "(2.48) line 2", "operator", _lhs_expanded(2, "y", _ga),
         lambda E: E.y / (1 - E.q) * (E.b * E.op(E.F(2), ("y", 0)) + E.qn(E.be) * E.phi(2)))
register("EQ_2_49a", "(2.49) line 1", "operator", _lhs_expanded(3, "x", _be),
         lambda E: E.x / (1 - E.q) * (E.a * E.op(E.F(3), ("x", 0)) + E.qn(E.al) * E.phi(3)))
register("EQ_2_49b", "(2.49) line 2", "operator", _lhs_expanded(3, "y", _be),
         lambda E: E.y / (1 - E.q) ** 2 * E.phi(3))
