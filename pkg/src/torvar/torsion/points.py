"""Exact sample points on the cover and the pointwise torsion computation.

A sample point fixes a rational eigenvalue alpha0 (so x0 = alpha0 + 1/alpha0
is rational) and takes the second coordinate in the number field generated
by an irreducible factor of P(x0, y).  The twisted-complex torsion at the
point is compared against the assembled peripheral formula; the two agree
up to sign, which is the cross-validation the acceptance suite runs.
"""

from fractions import Fraction

from ..algebra.multipoly import MultiPoly
from ..algebra.numberfield import QQ, NumberField, adjoin_root, nf_factor
from ..errors import SingularInputError
from .cayley import PointComplex

XY = ("x", "y")


class SamplePoint:
    def __init__(self, field, x0, y0, alpha0):
        self.field = field
        self.x0 = field.coerce(x0)
        self.y0 = field.coerce(y0) if y0 is not None else None
        self.alpha0 = field.coerce(alpha0)

    def __repr__(self):
        return f"SamplePoint(x={self.x0!r}, y={self.y0!r}, alpha={self.alpha0!r})"


def template_matrices_at(point):
    """Generator matrices of the meridian template at the point."""
    K = point.field
    a = point.alpha0
    ainv = K.inv(a)
    y = point.y0
    mu = [[a, K.one], [K.zero, ainv]]
    mv = [[a, K.zero], [y - a * a - ainv * ainv, ainv]]
    return [mu, mv]


def trefoil_matrices_at(point):
    """Trefoil matrices at s0 = (j^2 - j) x0 / 3 over Q(j)."""
    K = point.field
    j = K.gen()
    s0 = (j * j - j) * point.x0 / 3
    ma = [[s0, K.one], [-(s0 * s0 + 1), -s0]]
    mb = [[-j, K.zero], [K.zero, -(j * j)]]
    return [ma, mb]


def sample_points(record, curve_poly, count, rng, avoid=()):
    """Sample points avoiding the bad set (ramification, critical traces,
    zeros of the stored tau, reducible locus)."""
    out = []
    tried = 0
    while len(out) < count and tried < 400:
        tried += 1
        num = rng.randint(2, 60)
        den = rng.randint(1, 9)
        alpha0 = Fraction(num, den)
        if alpha0 in (0, 1, -1):
            continue
        x0 = alpha0 + 1 / alpha0
        if x0 in avoid:
            continue
        if record.model == "line":
            Qj = NumberField([1, 1, 1], gen_name="j")
            out.append(SamplePoint(Qj, x0, None, alpha0))
            continue
        pl = curve_poly.subs({"x": x0, "y": MultiPoly.var(QQ, ("y",), "y")})
        dense = [Fraction(0)] * (pl.degree("y") + 1)
        for exps, c in pl.terms.items():
            dense[exps[0]] = c
        if not dense or dense[-1] == 0:
            continue
        _, factors = nf_factor(QQ, dense)
        if any(m > 1 for _, m in factors):
            continue  # x0 at a branch point of y
        fac = max((f for f, _ in factors), key=len)
        K, _, y0 = adjoin_root(QQ, fac, gen_name="py")
        point = SamplePoint(K, x0, y0, alpha0)
        if _point_is_bad(record, curve_poly, point):
            continue
        out.append(point)
    if len(out) < count:
        raise SingularInputError("could not find enough good sample points")
    return out


def _point_is_bad(record, curve_poly, point):
    K = point.field
    sub = {"x": point.x0, "y": point.y0}
    py = curve_poly.derivative("y").change_field(K).subs(sub)
    if K.is_zero(py):
        return True
    if record.tau_poly is not None:
        tv = record.tau_poly.change_field(K).subs(
            {k: v for k, v in sub.items() if k in record.tau_poly.vars})
        if K.is_zero(tv):
            return True
    return False


def cayley_torsion_at(record, presentation, point, sigma):
    """The twisted-complex torsion scalar at the point (Porti-normalized,
    up to the global sign)."""
    K = point.field
    if record.model == "line":
        mats = trefoil_matrices_at(point)
    else:
        mats = template_matrices_at(point)
    pc = PointComplex(presentation, mats, K, record.torsion_word, sigma=sigma)
    return pc.torsion()


def assembled_coefficient_at(form, point):
    """h(point) for omega = h dx = 2 dY/(tau^eps b (2 alpha - x)) dx."""
    K = point.field
    sub = {"x": point.x0, "y": point.y0}
    P = form.plane
    Py = P.derivative("y").change_field(K).subs(sub)
    Px = P.derivative("x").change_field(K).subs(sub)
    Yx = form.Y_eval.derivative("x").change_field(K).subs(sub)
    Yy = form.Y_eval.derivative("y").change_field(K).subs(sub)
    dY_dx = Yx - Yy * Px / Py
    tau = form.tau_poly.change_field(K).subs(
        {k: v for k, v in sub.items() if k in form.tau_poly.vars})
    taueff = tau if form.eps == 1 else K.inv(tau)
    b = form.b_poly.change_field(K).subs(sub)
    w = 2 * point.alpha0 - point.x0
    return 2 * dY_dx / (taueff * b * w)


def cayley_coefficient_at(record, presentation, form, point, sigma):
    """The same coefficient with the pointwise Cayley torsion in place of
    the stored tau polynomial."""
    K = point.field
    tau_c = cayley_torsion_at(record, presentation, point, sigma)
    sub = {"x": point.x0, "y": point.y0}
    P = form.plane
    Py = P.derivative("y").change_field(K).subs(sub)
    Px = P.derivative("x").change_field(K).subs(sub)
    Yx = form.Y_eval.derivative("x").change_field(K).subs(sub)
    Yy = form.Y_eval.derivative("y").change_field(K).subs(sub)
    dY_dx = Yx - Yy * Px / Py
    b = form.b_poly.change_field(K).subs(sub)
    w = 2 * point.alpha0 - point.x0
    return 2 * dY_dx / (tau_c * b * w)
