"""Vanishing orders at finite singular points: module lengths of branches.

For a branch of X^p - Y^q (p < q, n = gcd, q' = q/n) the torsion part of
the pulled-back differentials has length q'(p-1); for a general branch with
parametrization (x(t), y(t)) on a curve P = 0 the length is

    v(P_x(x(t), y(t))) + v(gcd-content of (x', y')) - v(y'),

equivalently min(v(P_x), v(P_y)) along the branch; both are computed and
the chain-rule consistency v(P_x) + v(x') = v(P_y) + v(y') is enforced.
"""

from fractions import Fraction
from math import gcd

from ..algebra.multipoly import MultiPoly
from ..algebra.numberfield import QQ
from ..algebra.series import TruncatedSeries
from ..errors import InvariantViolation, SingularInputError

XY = ("x", "y")


def monomial_singularity_length(p, q):
    """q'(p-1) with q' = q/gcd(p, q); the branch length of X^p = Y^q."""
    if p < 1 or q < 1:
        raise SingularInputError("exponents must be positive")
    warned = False
    if p > q:
        p, q = q, p
        warned = True
    n = gcd(p, q)
    qp = q // n
    return qp * (p - 1), warned


def monomial_length_oracle(p, q, order=64):
    """Independent computation: the torsion of the differential module of
    k[X, Y]/(X^p - Y^q) pulled back along X = t^(q'), Y = t^(p') is
    O/(h) with h = content-normalized relation; its length is the minimum
    valuation of the evaluated partials."""
    if p > q:
        p, q = q, p
    n = gcd(p, q)
    pp, qp = p // n, q // n
    t = TruncatedSeries.gen(QQ, "t", order)
    X = t ** qp
    Y = t ** pp
    # partials of X^p - Y^q evaluated on the parametrization
    px = (X ** (p - 1)) * p
    py = (Y ** (q - 1)) * (-q)
    vals = []
    for s in (px, py):
        if s.terms:
            vals.append(s.valuation())
    if not vals:
        raise SingularInputError("degenerate monomial germ")
    return int(min(vals))


def branch_torsion_length(curve_poly, x_series, y_series):
    """Length of the torsion of the differentials along one branch.

    ``x_series, y_series`` parametrize a branch of curve_poly = 0 centered
    at a finite point.  Uses the content formula and checks it against the
    symmetric expression through the chain rule.
    """
    K = x_series.field
    P = curve_poly.change_field(K)
    px = P.derivative("x").subs({"x": x_series, "y": y_series})
    py = P.derivative("y").subs({"x": x_series, "y": y_series})
    xp = x_series.derivative()
    yp = y_series.derivative()
    v_xp = xp.valuation() if xp.terms else None
    v_yp = yp.valuation() if yp.terms else None
    if v_xp is None and v_yp is None:
        raise SingularInputError("constant parametrization")
    v_px = px.valuation() if px.terms else None
    v_py = py.valuation() if py.terms else None
    if v_px is not None and v_py is not None and v_xp is not None and v_yp is not None:
        if v_px + v_xp != v_py + v_yp:
            raise InvariantViolation(
                "chain rule violated: v(Px)+v(x') != v(Py)+v(y')")
    contents = [v for v in (v_xp, v_yp) if v is not None]
    vg = min(contents)
    if v_px is not None and v_yp is not None:
        length = v_px + vg - v_yp
    elif v_py is not None and v_xp is not None:
        length = v_py + vg - v_xp
    else:
        raise SingularInputError("branch length undefined: partials vanish")
    # cross-check with the minimum-valuation form
    alt = min(v for v in (v_px, v_py) if v is not None)
    if length != alt:
        raise InvariantViolation("branch length formulas disagree")
    return int(length)


def monomial_branch_series(p, q, order=32):
    """The standard branch (t^{q'}, t^{p'}) of X^p - Y^q ... scaled to the
    curve variables (x, y)."""
    if p > q:
        p, q = q, p
    n = gcd(p, q)
    pp, qp = p // n, q // n
    t = TruncatedSeries.gen(QQ, "t", order)
    return t ** qp, t ** pp


def monomial_curve_poly(p, q):
    return (MultiPoly.var(QQ, XY, "x") ** p) - (MultiPoly.var(QQ, XY, "y") ** q)
