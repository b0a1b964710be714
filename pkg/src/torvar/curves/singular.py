"""Singular points of plane curves: Milnor numbers, branch counts,
delta-invariants, genus."""

from fractions import Fraction
from math import gcd as _igcd

from ..algebra.multipoly import MultiPoly, gcd_multipoly, resultant
from ..algebra.numberfield import QQ, adjoin_root, nf_factor, poly_gcd, roots_in_field
from ..errors import InvariantViolation, SingularInputError
from .planecurve import PlaneCurve, chart_polynomial, infinity_point_clusters
from .puiseux import UV, branches_at_origin


class SingularPoint:
    """A Galois cluster of singular points with its local invariants."""

    def __init__(self, location, field, degree, multiplicity, mu, r, delta):
        self.location = location      # human-readable description
        self.field = field
        self.degree = degree          # cluster size over Q
        self.multiplicity = multiplicity
        self.mu = mu
        self.r = r
        self.delta = delta

    def __repr__(self):
        return (f"SingularPoint({self.location}, degree={self.degree}, "
                f"mult={self.multiplicity}, mu={self.mu}, r={self.r}, "
                f"delta={self.delta})")


def _dense_y(p, K):
    """Dense coefficient list in y of a (x-free) polynomial over K."""
    out = [K.zero] * (p.degree("y") + 1)
    for exps, c in p.terms.items():
        iy = p.vars.index("y")
        out[exps[iy]] = out[exps[iy]] + c
    return out


def local_germ(poly, K, x0, y0, vars_=("x", "y")):
    """Shift the point to the origin: returns the germ in (u, v)."""
    pK = poly.change_field(K)
    xv = MultiPoly.var(K, vars_, vars_[0]) + K.coerce(x0)
    yv = MultiPoly.var(K, vars_, vars_[1]) + K.coerce(y0)
    shifted = pK.subs({vars_[0]: xv, vars_[1]: yv})
    return MultiPoly(K, UV, {(e[0], e[1]): c for e, c in shifted.terms.items()})


def germ_multiplicity(germ):
    return min(sum(e) for e in germ.terms)


def milnor_number_of_germ(germ, K):
    """Local intersection multiplicity of the two partials at the origin.

    Computed as the u-adic valuation of the v-resultant of the sheared
    partials; two independent admissible shears must agree.
    """
    hu = germ.derivative("u")
    hv = germ.derivative("v")
    if hu.is_zero() or hv.is_zero():
        raise SingularInputError("degenerate germ: a partial vanishes")
    g = gcd_multipoly(hu, hv)
    if not g.is_constant():
        raise SingularInputError("non-isolated singularity: partials share a factor")
    values = []
    shear = 0
    tried = 0
    while len(values) < 2 and tried < 25:
        s = shear
        shear = -shear + (1 if shear <= 0 else 0)
        tried += 1
        val = _milnor_with_shear(hu, hv, K, s)
        if val is not None:
            values.append(val)
    if len(values) < 2:
        raise SingularInputError("no admissible shear found for the Milnor number")
    if values[0] != values[1]:
        raise InvariantViolation(f"Milnor number shear mismatch: {values}")
    return values[0]


def _milnor_with_shear(hu, hv, K, s):
    u = MultiPoly.var(K, UV, "u")
    v = MultiPoly.var(K, UV, "v")
    sub = {"u": u + v.scale(K.coerce(s)), "v": v}
    a = hu.change_field(K).subs(sub)
    b = hv.change_field(K).subs(sub)
    a = MultiPoly(K, UV, a.terms)
    b = MultiPoly(K, UV, b.terms)
    # only the origin may be a common zero on the line u = 0
    a0 = _dense_uni(a.subs({"u": K.zero}), K)
    b0 = _dense_uni(b.subs({"u": K.zero}), K)
    if not a0 or not b0:
        return None
    g = poly_gcd(K, a0, b0)
    # both partials vanish at the origin, so g always has the root v = 0;
    # the shear is admissible only when g is exactly a power of v
    if any(not K.is_zero(c) for c in g[:-1]):
        return None
    if not a.involves("v") or not b.involves("v"):
        return None
    # v-leading coefficients must not vanish at u = 0
    for m in (a, b):
        lead = m.as_univariate("v")[-1]
        cval = lead.subs({"u": K.zero})
        if (cval.is_zero() if isinstance(cval, MultiPoly) else K.is_zero(cval)):
            return None
    res = resultant(a, b, "v")
    if res.is_zero():
        return None
    return res.min_degree("u")


def _dense_uni(p, K):
    """Dense list of a one-variable MultiPoly (any single var)."""
    if isinstance(p, MultiPoly):
        p = p.drop_vars()
        if p.vars == ():
            c = p.constant_value() if p.terms else K.zero
            return [] if K.is_zero(c) else [c]
        out = [K.zero] * (p.degree(p.vars[0]) + 1)
        for exps, c in p.terms.items():
            out[exps[0]] = c
        return out
    return [] if K.is_zero(p) else [p]


def branch_clusters_of_germ(germ, K, order=16):
    return branches_at_origin(germ, K, order)


def geometric_branch_count(germ, K, order=16):
    return sum(b.degree_over(K) for b in branches_at_origin(germ, K, order))


def delta_of_germ(germ, K, order=16):
    mu = milnor_number_of_germ(germ, K)
    r = geometric_branch_count(germ, K, order)
    if (mu + r - 1) % 2:
        raise InvariantViolation(
            f"delta parity violation: mu={mu}, r={r}")
    return mu, r, (mu + r - 1) // 2


def affine_singular_clusters(curve):
    """Galois clusters of affine singular points of the curve."""
    P = curve.poly
    Px, Py = curve.partial_x(), curve.partial_y()
    if not P.involves("y"):
        raise SingularInputError("curve does not involve y")
    r1 = resultant(P, Py, "y") if Py.involves("y") or P.involves("y") else Py
    r2 = resultant(P, Px, "y") if Px.involves("y") else Px
    r1 = r1.drop_vars().extend_vars(("x",))
    r2 = r2.drop_vars().extend_vars(("x",))
    g = gcd_multipoly(r1, r2)
    out = []
    if g.is_constant():
        return out
    _, xfactors = nf_factor(QQ, _dense_uni(g, QQ))
    for mfac, _ in xfactors:
        Kx, _, x0 = adjoin_root(QQ, mfac, gen_name="sx")
        py = _eval_x(P, Kx, x0)
        pxy = _eval_x(Px, Kx, x0)
        pyy = _eval_x(Py, Kx, x0)
        d = poly_gcd(Kx, py, pxy)
        d = poly_gcd(Kx, d, pyy)
        if len(d) <= 1:
            continue
        _, yfactors = nf_factor(Kx, d)
        for yfac, _ in yfactors:
            L, embed, y0 = adjoin_root(Kx, yfac, gen_name="sy")
            x0L = embed(x0)
            germ = local_germ(P, L, x0L, y0)
            m = germ_multiplicity(germ)
            mu, r, delta = delta_of_germ(germ, L)
            deg = getattr(L, "degree", 1)
            out.append(SingularPoint(f"affine x={x0L!r}", L, deg, m, mu, r, delta))
    return out


def _eval_x(p, K, x0):
    """Dense y-coefficients of p(x0, y) over K."""
    pK = p.change_field(K)
    val = pK.subs({"x": K.coerce(x0), "y": MultiPoly.var(K, ("y",), "y")})
    if not isinstance(val, MultiPoly):
        return [] if K.is_zero(val) else [val]
    out = [K.zero] * (val.degree("y") + 1) if val.terms else []
    for exps, c in val.terms.items():
        out[exps[val.vars.index("y")]] = c
    return out


def infinity_singular_clusters(curve, order=16):
    """Singular points on the line at infinity, with invariants."""
    out = []
    for pt in infinity_point_clusters(curve):
        chart = pt["chart"]
        K = pt["field"]
        f = chart_polynomial(curve, chart)
        if chart == "X":
            germ = local_germ(f, K, pt["coord"], K.zero, vars_=("yp", "zp"))
        else:
            germ = local_germ(f, K, K.zero, K.zero, vars_=("xp", "zp"))
        if germ_multiplicity(germ) < 2:
            continue
        m = germ_multiplicity(germ)
        mu, r, delta = delta_of_germ(germ, K, order)
        label = "[0:1:0]" if chart == "Y" else f"[1:{pt['coord']!r}:0]"
        out.append(SingularPoint(f"infinity {label}", K, pt["degree"], m, mu, r, delta))
    return out


def singular_points(curve, order=16):
    """All singular clusters (affine and at infinity)."""
    return affine_singular_clusters(curve) + infinity_singular_clusters(curve, order)


def genus(curve, order=16):
    """(d-1)(d-2)/2 minus the delta-invariants, counted with cluster degree."""
    d = curve.d
    total = (d - 1) * (d - 2) // 2
    for sp in singular_points(curve, order):
        total -= sp.delta * sp.degree
    if total < 0:
        raise InvariantViolation("negative genus: missed singularity or reducible input")
    return total
