"""Plane curves: squarefree bivariate polynomials with their homogenization."""

from fractions import Fraction

from ..algebra.multipoly import MultiPoly, factor_rational, gcd_multipoly, squarefree_part
from ..algebra.numberfield import QQ
from ..errors import SingularInputError

XY = ("x", "y")
XYZ = ("X", "Y", "Z")


class PlaneCurve:
    """A squarefree polynomial P(x, y) over Q with degree and homogenization."""

    def __init__(self, poly):
        if poly.vars != XY:
            poly = poly.extend_vars(XY)
        if poly.is_zero() or poly.is_constant():
            raise SingularInputError("a plane curve needs a nonconstant polynomial")
        sf = squarefree_part(poly)
        norm, _ = sf.primitive_normalized()
        mine, _ = poly.primitive_normalized()
        if norm != mine:
            raise SingularInputError("plane curve polynomial must be squarefree")
        self.poly = mine
        self.d = self.poly.total_degree()

    def homogenization(self):
        terms = {}
        for (ex, ey), c in self.poly.terms.items():
            terms[(ex, ey, self.d - ex - ey)] = c
        return MultiPoly(QQ, XYZ, terms)

    def partial_x(self):
        return self.poly.derivative("x")

    def partial_y(self):
        return self.poly.derivative("y")

    def is_irreducible(self):
        _, factors = factor_rational(self.poly)
        return len(factors) == 1

    def evaluate(self, K, x0, y0):
        return self.poly.change_field(K).subs({"x": K.coerce(x0), "y": K.coerce(y0)})

    def __repr__(self):
        return f"PlaneCurve({self.poly})"


def infinity_point_clusters(curve):
    """Points of the curve on the line at infinity, as Galois clusters.

    Returns a list of dicts: ``chart`` is "X" (points [1 : y0 : 0]) or "Y"
    (the single point [0 : 1 : 0] when X divides the degree form), ``field``
    the residue field, ``coord`` the y0 value (chart X) and ``degree`` the
    cluster size over Q.
    """
    F = curve.homogenization()
    # degree form F(X, Y, 0)
    lead_terms = {}
    for (ex, ey, ez), c in F.terms.items():
        if ez == 0:
            lead_terms[(ex, ey)] = c
    form = MultiPoly(QQ, XY, lead_terms)
    out = []
    # [0:1:0] lies on the curve iff x does not appear to full degree... i.e.
    # the coefficient of Y^d vanishes
    d = curve.d
    if form.terms.get((0, d)) is None:
        out.append({"chart": "Y", "field": QQ, "coord": None, "degree": 1})
    # points [1 : y0 : 0]: roots of form(1, y)
    uni = form.subs({"x": Fraction(1)})
    uni = uni.drop_vars()
    if uni.vars == ():
        return out
    dense = [Fraction(0)] * (uni.degree("y") + 1)
    for exps, c in uni.terms.items():
        dense[exps[0]] = c
    from ..algebra.numberfield import nf_factor
    _, factors = nf_factor(QQ, dense)
    for fac, mult in factors:
        deg = len(fac) - 1
        if deg == 1:
            out.append({"chart": "X", "field": QQ, "coord": -fac[0], "degree": 1})
        else:
            from ..algebra.numberfield import NumberField
            L = NumberField(fac, gen_name="w")
            out.append({"chart": "X", "field": L, "coord": L.gen(), "degree": deg})
    return out


def chart_polynomial(curve, chart):
    """Affine polynomial of the curve in an infinity chart.

    Chart "X": coordinates (y', z') with x = 1/z', y = y'/z'.
    Chart "Y": coordinates (x', z') with x = x'/z', y = 1/z'.
    """
    F = curve.homogenization()
    if chart == "X":
        terms = {(ey, ez): c for (ex, ey, ez), c in F.terms.items()}
        return MultiPoly(QQ, ("yp", "zp"), terms)
    if chart == "Y":
        terms = {(ex, ez): c for (ex, ey, ez), c in F.terms.items()}
        return MultiPoly(QQ, ("xp", "zp"), terms)
    raise SingularInputError(f"unknown chart {chart}")
