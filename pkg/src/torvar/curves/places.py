"""Places of the smooth projective model: Puiseux-parametrized points.

A Place is a Galois cluster of points of the smooth model, carrying exact
truncated parametrizations x(t), y(t) over its residue field.  Ideal places
come from the charts at infinity, finite places from Hensel expansions
(or Newton polygon branches at singular centers).  Every place can be
re-expanded to higher truncation through its ``expander``.
"""

from fractions import Fraction

from ..algebra.multipoly import MultiPoly
from ..algebra.numberfield import QQ, adjoin_root, nf_factor, poly_gcd
from ..algebra.series import TruncatedSeries
from ..errors import InsufficientPrecisionError, InvariantViolation, SingularInputError
from .planecurve import chart_polynomial, infinity_point_clusters
from .puiseux import UV, branches_at_origin, hensel_branch_y
from .singular import local_germ

DEFAULT_N = 24
MAX_N = 512


class Place:
    def __init__(self, label, kind, field, x_series, y_series, degree, expander,
                 center=None):
        self.label = label
        self.kind = kind              # "finite" | "ideal"
        self.field = field
        self.x_series = x_series
        self.y_series = y_series
        self.degree = degree          # cluster size over Q
        self.expander = expander     # N -> (field, x_series, y_series)
        self.center = center or {}
        self._series_cache = {}

    def __repr__(self):
        return f"Place({self.label}: x={self.x_series}, y={self.y_series})"

    def current_order(self):
        orders = [s.order for s in (self.x_series, self.y_series)
                  if s is not None and s.order is not None]
        return min(orders) if orders else None

    def ensure_order(self, N):
        cur = self.current_order()
        if cur is not None and cur < N:
            if self.expander is None:
                raise InsufficientPrecisionError(
                    f"place {self.label} cannot be re-expanded", required_order=N)
            self.field, self.x_series, self.y_series = self.expander(int(N))
            self._series_cache.clear()

    def series_of(self, poly):
        """poly(x(t), y(t)) as a truncated series over the place's field."""
        key = (id(poly), self.current_order())
        hit = self._series_cache.get(key)
        if hit is not None:
            return hit
        pK = poly.change_field(self.field) if poly.field != self.field else poly
        if pK.is_constant():
            out = TruncatedSeries.from_scalar(self.field, "t",
                                              pK.constant_value() if pK.terms
                                              else self.field.zero)
            self._series_cache[key] = out
            return out
        sub = {}
        if "x" in pK.vars:
            sub["x"] = self.x_series
        if "y" in pK.vars and pK.involves("y"):
            if self.y_series is None:
                raise SingularInputError("line-model place has no y coordinate")
            sub["y"] = self.y_series
        out = pK.subs(sub)
        self._series_cache[key] = out
        return out

    def order_of(self, poly, max_n=MAX_N):
        """Exact valuation of poly along the place, with adaptive re-expansion."""
        if poly.is_zero():
            raise SingularInputError("valuation of the zero polynomial")
        while True:
            s = self.series_of(poly)
            try:
                v = s.valuation()
                return v
            except InsufficientPrecisionError:
                cur = self.current_order() or Fraction(DEFAULT_N)
                new_n = int(cur * 2)
                if new_n > max_n:
                    raise
                self.ensure_order(new_n)

    def residual_order(self, poly):
        """Truncation-certified vanishing of poly along the place (sanity)."""
        s = self.series_of(poly)
        return not s.terms


def _branch_sort_key(branch):
    ser = branch.series
    items = sorted(ser.terms.items())[:4]
    sig = tuple((str(e), repr(c)) for e, c in items)
    mp = getattr(branch.field, "minpoly", ())
    return (branch.e, len(mp), str(mp), sig)


def ideal_places(curve, N=DEFAULT_N):
    """Places at infinity of a plane curve, deterministically labeled."""
    clusters = infinity_point_clusters(curve)

    def cluster_key(pt):
        if pt["chart"] == "X":
            mp = getattr(pt["field"], "minpoly", None)
            key = str(mp) if mp else f"rat:{pt['coord']}"
            return (0, len(str(mp)) if mp else 0, key)
        return (1, 0, "")

    clusters.sort(key=cluster_key)
    places = []
    for ci, pt in enumerate(clusters):
        branches = _ideal_branches(curve, pt, N)
        branches_sorted = sorted(range(len(branches)),
                                 key=lambda i: _branch_sort_key(branches[i]))
        for bi_pos, bi in enumerate(branches_sorted):
            b = branches[bi]
            x_ser, y_ser = _ideal_series(pt, b)
            deg = (getattr(b.field, "degree", 1))

            def expander(n, curve=curve, pt=pt, bi=bi):
                bs = _ideal_branches(curve, pt, n)
                bb = bs[bi]
                xs, ys = _ideal_series(pt, bb)
                return bb.field, xs, ys

            places.append(Place(
                label="", kind="ideal", field=b.field,
                x_series=x_ser, y_series=y_ser, degree=deg,
                expander=expander,
                center={"chart": pt["chart"], "cluster": ci, "branch": bi_pos}))
    for i, p in enumerate(places):
        p.label = f"ideal-{i + 1}"
    return places


def _ideal_branches(curve, pt, N):
    K = pt["field"]
    f = chart_polynomial(curve, pt["chart"])
    if pt["chart"] == "X":
        germ = local_germ(f, K, K.zero, pt["coord"], vars_=("zp", "yp"))
    else:
        germ = local_germ(f, K, K.zero, K.zero, vars_=("zp", "xp"))
    return branches_at_origin(germ, K, N)


def _ideal_series(pt, b):
    """(x(t), y(t)) from a chart branch zp = C t^e, other = series."""
    K = b.field
    zp = b.u_series()
    x_or_y_offset = pt["coord"] if pt["chart"] == "X" else None
    zp_inv = zp.inverse()
    if pt["chart"] == "X":
        y0 = b.embed(pt["field"].coerce(x_or_y_offset)) if x_or_y_offset is not None \
            else K.zero
        yp = b.series + y0
        return zp_inv, yp * zp_inv
    else:
        xp = b.series
        return xp * zp_inv, zp_inv


def finite_places_at(curve, K, x0, y0, N=DEFAULT_N, label=""):
    """Places of the smooth model above the affine point (x0, y0) in K."""
    px = curve.partial_x().change_field(K).subs({"x": K.coerce(x0), "y": K.coerce(y0)})
    py = curve.partial_y().change_field(K).subs({"x": K.coerce(x0), "y": K.coerce(y0)})
    deg = getattr(K, "degree", 1)
    if not K.is_zero(py):
        def expander(n, curve=curve, K=K, x0=x0, y0=y0):
            tail = hensel_branch_y(curve.poly, K, x0, y0, n)
            t = TruncatedSeries.gen(K, "t")
            return K, t + K.coerce(x0), tail + K.coerce(y0)

        fld, xs, ys = expander(N)
        return [Place(label, "finite", K, xs, ys, deg, expander,
                      center={"x0": x0, "y0": y0, "type": "x-regular"})]
    if not K.is_zero(px):
        # swap the roles of x and y
        swapped = MultiPoly(curve.poly.field, ("x", "y"),
                            {(ey, ex): c for (ex, ey), c in curve.poly.terms.items()})

        def expander(n, swapped=swapped, K=K, x0=x0, y0=y0):
            from .planecurve import PlaneCurve
            tail = hensel_branch_y(swapped, K, y0, x0, n)
            t = TruncatedSeries.gen(K, "t")
            return K, tail + K.coerce(x0), t + K.coerce(y0)

        fld, xs, ys = expander(N)
        return [Place(label, "finite", K, xs, ys, deg, expander,
                      center={"x0": x0, "y0": y0, "type": "y-regular"})]
    # singular center: one place per branch
    germ = local_germ(curve.poly, K, x0, y0)
    branches = branches_at_origin(germ, K, N)
    order_idx = sorted(range(len(branches)),
                       key=lambda i: _branch_sort_key(branches[i]))
    out = []
    for pos, bi in enumerate(order_idx):
        b = branches[bi]

        def expander(n, curve=curve, K=K, x0=x0, y0=y0, bi=bi):
            germn = local_germ(curve.poly, K, x0, y0)
            bb = branches_at_origin(germn, K, n)[bi]
            return (bb.field, bb.u_series() + bb.embed(K.coerce(x0)),
                    bb.series + bb.embed(K.coerce(y0)))

        fld, xs, ys = expander(N)
        out.append(Place(f"{label}:{pos}" if label else "", "finite", fld, xs, ys,
                         getattr(fld, "degree", 1), expander,
                         center={"x0": x0, "y0": y0, "type": "singular"}))
    return out


def places_above_x(curve, mpoly_coeffs, N=DEFAULT_N, y_filter=None):
    """All places of the curve above the x-values with minimal polynomial
    ``mpoly_coeffs`` (dense over Q).  ``y_filter`` optionally restricts to
    y-roots of the given polynomial (dense in y over the x-field)."""
    Kx, _, x0 = adjoin_root(QQ, [Fraction(c) for c in mpoly_coeffs], gen_name="ax")
    pK = curve.poly.change_field(Kx)
    yv = MultiPoly.var(Kx, ("y",), "y")
    pval = pK.subs({"x": Kx.coerce(x0), "y": yv})
    dense = [Kx.zero] * (pval.degree("y") + 1)
    for exps, c in pval.terms.items():
        dense[exps[0]] = c
    target = dense
    if y_filter is not None:
        target = poly_gcd(Kx, dense, y_filter(Kx, x0))
        if len(target) <= 1:
            return []
    _, yfactors = nf_factor(Kx, target)
    out = []
    for yfac, _ in yfactors:
        L, embed, y0 = adjoin_root(Kx, yfac, gen_name="ay")
        x0L = embed(x0) if L is not Kx else x0
        out.extend(finite_places_at(curve, L, x0L, y0, N))
    return out
