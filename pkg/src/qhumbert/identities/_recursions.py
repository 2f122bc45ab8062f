"""Recursion formulas in the numerator and denominator parameters.

Each depth-``ell`` formula is the ``ell``-fold iterate of a contiguous
relation; ``step`` names the parameter the single relation advances so the
runner can rebuild the depth-``ell`` value from ``ell`` depth-1 steps.
"""

from .core import Domain, Variant
from .registry import register

_DEPTH = Domain(depths=("ell",))


def _qr(E, r):
    return E.q ** (r - 1)


def _w(E, r, c):
    # q**(r-1) / ((q**r - c)(q**(r-1) - c))
    return E.q ** (r - 1) / ((E.q ** r - c) * (E.q ** (r - 1) - c))


def _rec(id, eq, lhs, rhs, step, base, variants=(), note=""):
    register(id, eq, "recursion", lhs, rhs, _DEPTH, variants, note, step=step, base=base)


_phi1 = lambda E: E.phi(1)
_phi2 = lambda E: E.phi(2)
_phi3 = lambda E: E.phi(3)


# numerator parameters

_rec("EQ_2_16", "(2.16)",
     lambda E: E.phi(1, da=E.ell),
     lambda E: (E.phi(1)
                + E.a * E.x * (1 - E.b) / (1 - E.c) * E.sum_r(lambda r: _qr(E, r) * E.phi(1, r, 1, 1))
                + E.a * E.y / (1 - E.c) * E.sum_r(lambda r: _qr(E, r) * E.phi(1, r, 0, 1, x=E.q * E.x))),
     ("alpha", 1), _phi1)


def _rhs_17a(y_db, x_db):
    def rhs(E):
        return (E.phi(1)
                + E.a * E.y / (1 - E.c) * E.sum_r(lambda r: _qr(E, r) * E.phi(1, r, y_db, 1))
                + E.a * E.x * (1 - E.b) / (1 - E.c)
                * E.sum_r(lambda r: _qr(E, r) * E.phi(1, r, x_db, 1, y=E.q * E.y)))

    return rhs


_rec("EQ_2_17a", "(2.17) line 1", lambda E: E.phi(1, da=E.ell), _rhs_17a(1, 0), ("alpha", 1), _phi1,
     variants=(Variant("beta shifts exchanged", "repair",
                       "the y-sum carries Phi1(q^(alpha+r), q^beta; q^(gamma+1)) and the x-sum "
                       "Phi1(q^(alpha+r), q^(beta+1); q^(gamma+1); x, qy)",
                       rhs=_rhs_17a(0, 1)),))


def _rhs_17b(da, db):
    def rhs(E):
        return E.phi(1) + E.b * E.x * (1 - E.a) / (1 - E.c) * E.sum_r(
            lambda r: _qr(E, r) * E.phi(1, da, db(E, r), 1))

    return rhs


_rec("EQ_2_17b", "(2.17) line 2", lambda E: E.phi(1, db=E.ell), _rhs_17b(0, lambda E, r: E.ell),
     ("beta", 1), _phi1,
     variants=(
         Variant("alpha+1 and beta+r", "repair",
                 "summand Phi1(q^(alpha+1), q^(beta+r); q^(gamma+1))",
                 rhs=_rhs_17b(1, lambda E, r: r)),
         Variant("alpha+1 only", "alternative",
                 "raise alpha in the summand but keep beta+ell",
                 rhs=_rhs_17b(1, lambda E, r: E.ell)),
         Variant("beta+r only", "alternative",
                 "use beta+r in the summand but keep alpha",
                 rhs=_rhs_17b(0, lambda E, r: r)),
     ))

_rec("EQ_2_18a", "(2.18) line 1",
     lambda E: E.phi(2, da=E.ell),
     lambda E: E.phi(2) + E.a * E.x / (1 - E.c) * E.sum_r(lambda r: _qr(E, r) * E.phi(2, r, 0, 1)),
     ("alpha", 1), _phi2)


def _rhs_18b(coef, qx):
    def rhs(E):
        xx = E.q * E.x if qx else E.x
        return E.phi(2) + coef(E) * E.y / (1 - E.c) * E.sum_r(lambda r: _qr(E, r) * E.phi(2, 0, r, 1, x=xx))

    return rhs


_rec("EQ_2_18b", "(2.18) line 2", lambda E: E.phi(2, db=E.ell), _rhs_18b(lambda E: E.a, True),
     ("beta", 1), _phi2,
     variants=(
         Variant("q^beta prefactor, argument x", "repair",
                 "prefactor q^beta y/(1-q^gamma) and summand Phi2(q^alpha, q^(beta+r); q^(gamma+1); x, y)",
                 rhs=_rhs_18b(lambda E: E.b, False)),
         Variant("q^beta prefactor only", "alternative", "keep the qx argument",
                 rhs=_rhs_18b(lambda E: E.b, True)),
         Variant("argument x only", "alternative", "keep the q^alpha prefactor",
                 rhs=_rhs_18b(lambda E: E.a, False)),
     ))

_rec("EQ_2_19", "(2.19)",
     lambda E: E.phi(3, da=E.ell),
     lambda E: E.phi(3) + E.a * E.x / (1 - E.b) * E.sum_r(lambda r: _qr(E, r) * E.phi(3, r, 1)),
     ("alpha", 1), _phi3)

register("EQ_2_20", "(2.20)", "operator",
         lambda E: E.phi(1, da=1),
         lambda E: (E.phi(1) + E.a * E.x * (1 - E.b) / (1 - E.c) * E.phi(1, 1, 1, 1)
                    + E.a * E.y / (1 - E.c) * E.phi(1, 1, 0, 1, x=E.q * E.x)),
         note="the single contiguous relation behind the numerator recursions")


# denominator parameters

def _rhs_21(xscale):
    def rhs(E):
        c = E.c
        return (E.phi(1)
                + c * E.x * (1 - E.a) * (1 - E.b) * E.sum_r(lambda r: _w(E, r, c) * E.phi(1, 1, 1, 2 - r))
                + c * E.y * (1 - E.a) * E.sum_r(lambda r: _w(E, r, c) * E.phi(1, 1, 0, 2 - r, x=xscale(E, r) * E.x)))

    return rhs


_Q_R = lambda E, r: E.q ** r
_Q_1 = lambda E, r: E.q

_rec("EQ_2_21", "(2.21)", lambda E: E.phi(1, dc=-E.ell), _rhs_21(_Q_R), ("gamma", -1), _phi1,
     variants=(Variant("argument qx", "repair",
                       "the y-sum is evaluated at (qx, y) for every r, not (q^r x, y); "
                       "the two agree only at ell = 1",
                       rhs=_rhs_21(_Q_1)),))


def _rhs_22(y_db, x_db, yscale):
    def rhs(E):
        c = E.c
        return (E.phi(1)
                + c * E.y * (1 - E.a) * E.sum_r(lambda r: _w(E, r, c) * E.phi(1, 1, y_db, 2 - r))
                + c * E.x * (1 - E.a) * (1 - E.b)
                * E.sum_r(lambda r: _w(E, r, c) * E.phi(1, 1, x_db, 2 - r, y=yscale(E, r) * E.y)))

    return rhs


_rec("EQ_2_22", "(2.22)", lambda E: E.phi(1, dc=-E.ell), _rhs_22(1, 0, _Q_R), ("gamma", -1), _phi1,
     variants=(
         Variant("beta shifts exchanged, argument qy", "repair",
                 "the y-sum carries Phi1(q^(alpha+1), q^beta; q^(gamma+2-r); x, y) and the x-sum "
                 "Phi1(q^(alpha+1), q^(beta+1); q^(gamma+2-r); x, qy)",
                 rhs=_rhs_22(0, 1, _Q_1)),
         Variant("argument qy only", "alternative", "replace q^r y by qy, keep the printed beta shifts",
                 rhs=_rhs_22(1, 0, _Q_1)),
     ))


def _rhs_23(first, scale):
    # first == "x": x-sum plain, y-sum at (scale x, y); first == "y": mirrored
    def rhs(E):
        c = E.c
        xa = E.sum_r(lambda r: _w(E, r, c) * E.phi(2, 1, 0, 2 - r, y=(scale(E, r) * E.y if first == "y" else E.y)))
        ya = E.sum_r(lambda r: _w(E, r, c) * E.phi(2, 0, 1, 2 - r, x=(scale(E, r) * E.x if first == "x" else E.x)))
        return E.phi(2) + c * E.x * (1 - E.a) * xa + c * E.y * (1 - E.b) * ya

    return rhs


for _sub, _first, _arg in (("a", "x", "qx"), ("b", "y", "qy")):
    _rec(f"EQ_2_23{_sub}", f"(2.23) line {1 if _sub == 'a' else 2}", lambda E: E.phi(2, dc=-E.ell),
         _rhs_23(_first, _Q_R), ("gamma", -1), _phi2,
         variants=(Variant(f"argument {_arg}", "repair",
                           f"the shifted argument is {_arg} for every r, not q^r times it",
                           rhs=_rhs_23(_first, _Q_1)),))


def _rhs_24(first, scale):
    def rhs(E):
        B = E.b
        xa = E.sum_r(lambda r: _w(E, r, B) * E.phi(3, 1, 2 - r, y=(scale(E, r) * E.y if first == "y" else E.y)))
        ya = E.sum_r(lambda r: _w(E, r, B) * E.phi(3, 0, 2 - r, x=(scale(E, r) * E.x if first == "x" else E.x)))
        return E.phi(3) + B * E.x * (1 - E.a) * xa + B * E.y * ya

    return rhs


for _sub, _first, _arg in (("a", "x", "qx"), ("b", "y", "qy")):
    _rec(f"EQ_2_24{_sub}", f"(2.24) line {1 if _sub == 'a' else 2}", lambda E: E.phi(3, db=-E.ell),
         _rhs_24(_first, _Q_R), ("beta", -1), _phi3,
         variants=(Variant(f"argument {_arg}", "repair",
                           f"the shifted argument is {_arg} for every r, not q^r times it",
                           rhs=_rhs_24(_first, _Q_1)),),
         note="the upper summation limit printed as n is read as ell")

register("EQ_2_25", "(2.25)", "operator",
         lambda E: E.phi(1, dc=-1),
         lambda E: (E.phi(1)
                    + E.c * E.x * (1 - E.a) * (1 - E.b) / ((E.q - E.c) * (1 - E.c)) * E.phi(1, 1, 1, 1)
                    + E.c * E.y * (1 - E.a) / ((E.q - E.c) * (1 - E.c)) * E.phi(1, 1, 0, 1, x=E.q * E.x)),
         note="the single contiguous relation behind the denominator recursions")
