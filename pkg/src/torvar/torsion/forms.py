"""The torsion 1-form on the eigenvalue cover, its valuations and divisor.

The peripheral comparison formula assembles the form as

    omega = 2 dY_mu / (tau * (Z_mu - Z_mu^{-1}))

with Z_mu - Z_mu^{-1} = b(x, y) (2 alpha - x) and (2 alpha - x)^2 = x^2 - 4.
Every valuation therefore reduces to base-place data:

    ord(omega) = e * ( v(dY/dt) - eps * v(tau) - v(b) - v(x^2-4)/2 ) + (e - 1)

where e is the ramification index of the cover at the lift and eps records
whether the stored tau polynomial sits in the denominator.  When no tau is
pinned, the order comes from the twisted-complex determinant filtration
along the place instead.
"""

from fractions import Fraction

from ..algebra.multipoly import MultiPoly, factor_rational, gcd_multipoly, resultant
from ..algebra.numberfield import QQ, adjoin_root, nf_factor, roots_in_field, sqrt_in_field
from ..algebra.series import TruncatedSeries, series_sqrt
from ..charvar.augmented import CoverElement, eigenvalue_function
from ..charvar.traces import reduce_mod_plane, trace_of_word
from ..errors import (InsufficientPrecisionError, InvariantViolation,
                      SingularInputError)

XY = ("x", "y")


class AugmentedPlace:
    """A place of the cover: base series plus an alpha branch."""

    def __init__(self, base, e, field, x_series, y_series, alpha_series, label):
        self.base = base
        self.e = e
        self.field = field
        self.x_series = x_series
        self.y_series = y_series
        self.alpha_series = alpha_series
        self.label = label

    def residual_alpha(self):
        a = self.alpha_series
        return a * a - self.x_series * a + 1


def alpha_branch_series(x_series, K, which="plus"):
    """A root of alpha^2 - x alpha + 1 over K((t)); 'plus' is the branch with
    the smaller valuation (pole at ideal places).  May extend the field."""
    x2m4 = x_series * x_series - 4
    v = x2m4.valuation()
    if int(v.numerator) % 2 or v.denominator != 1:
        raise SingularInputError("alpha branch needs even valuation of x^2-4")
    lead = x2m4.terms[v]
    s0 = sqrt_in_field(K, lead)
    if s0 is None:
        L, embed, s0 = adjoin_root(K, [-lead, K.zero, K.one], gen_name="sq")
        x_series = x_series.map_coefficients(embed, L)
        x2m4 = x2m4.map_coefficients(embed, L)
        K = L
    s = series_sqrt(x2m4, s0)
    half = Fraction(1, 2)
    if which == "plus":
        alpha = (x_series + s) * half
        other = (x_series - s) * half
    else:
        alpha = (x_series - s) * half
        other = (x_series + s) * half
    # orient: "plus" takes the branch of smaller valuation when they differ
    try:
        va, vo = alpha.valuation(), other.valuation()
        if (which == "plus" and va > vo) or (which == "minus" and va < vo):
            alpha = other
    except InsufficientPrecisionError:
        pass
    return K, x_series, alpha


def lift_place(lift, which="plus", order=None):
    """Build an AugmentedPlace from a PlaceLift of the cover."""
    base = lift.base
    if order is not None:
        base.ensure_order(order)
    K = base.field
    xs, ys = base.x_series, base.y_series
    if lift.e == 1:
        K2, xs2, alpha = alpha_branch_series(xs, K, which)
        ys2 = ys.map_coefficients(K2.coerce, K2) if (ys is not None and K2 is not K) else ys
        suffix = "a" if which == "plus" else "b"
        return AugmentedPlace(base, 1, K2, xs2, ys2, alpha,
                              f"{base.label}{suffix}" if lift.n_lifts == 2 else base.label)
    # ramified: new uniformizer tau = alpha -/+ 1, with x = alpha + 1/alpha
    x0 = xs.terms.get(Fraction(0))
    if x0 is None or (x0 != 2 and x0 != -2):
        raise SingularInputError("ramified lift needs a base point with x = +-2")
    alpha0 = K.coerce(1 if x0 == 2 else -1)
    n = xs.order if xs.order is not None else Fraction(32)
    tau = TruncatedSeries.gen(K, "t", n)
    alpha = tau + alpha0
    x_of_tau = alpha + alpha.inverse()
    # compose base series through t_base = x - x0 (base is x-regular: x = x0 + t)
    t_of_tau = x_of_tau - K.coerce(x0)
    if ys is not None:
        shifted = TruncatedSeries(K, "t", {e: c for e, c in ys.terms.items() if e != 0},
                                  ys.order)
        y0 = ys.terms.get(Fraction(0), K.zero)
        y_of_tau = shifted.compose(t_of_tau) + y0
    else:
        y_of_tau = None
    return AugmentedPlace(base, 2, K, x_of_tau, y_of_tau, alpha, base.label)


class TorsionForm:
    """omega = 2 dY_mu / (tau^eps * b * (2 alpha - x)) for one knot record."""

    def __init__(self, record, rep, plane_poly=None):
        self.record = record
        self.rep = rep
        self.mu = record.torsion_word
        if record.model == "line":
            self.Y_mu = MultiPoly(QQ, ("x",), {(1,): Fraction(1)})
            self.Y_eval = self.Y_mu
            self.b_poly = MultiPoly(QQ, ("x",), {(0,): Fraction(1)})
            self.plane = None
        else:
            if plane_poly is None:
                raise SingularInputError("plane model needs the curve polynomial")
            self.plane = plane_poly
            self.Y_mu = trace_of_word(rep, self.mu)
            if record.Y_mu is not None:
                if reduce_mod_plane(self.Y_mu - record.Y_mu, plane_poly).is_zero() is False:
                    raise InvariantViolation(
                        f"{record.name}: longitude trace disagrees with pinned Y_mu")
            self.Y_eval = reduce_mod_plane(self.Y_mu, plane_poly)
            z = eigenvalue_function(rep, self.mu, plane_poly)
            self.b_poly = z.b
            if self.b_poly.is_zero():
                raise SingularInputError("central peripheral word: Z - 1/Z vanishes")
            # (Z - 1/Z)^2 = Y^2 - 4 on the curve
            x2m4 = MultiPoly(QQ, XY, {(2, 0): Fraction(1), (0, 0): Fraction(-4)})
            lhs = reduce_mod_plane(self.b_poly * self.b_poly * x2m4, plane_poly)
            rhs = reduce_mod_plane(self.Y_mu * self.Y_mu - 4, plane_poly)
            if lhs != rhs:
                raise InvariantViolation("b^2 (x^2-4) != Y_mu^2 - 4 on the curve")
        self.tau_poly = record.tau_poly
        self.eps = 1 if record.tau_orientation in (None, "denominator") else -1
        self._tau_valuator = None  # plugged in for records without pinned tau

    def set_tau_valuator(self, fn):
        """fn(place_lift) -> valuation of tau at the base place (eps = +1)."""
        self._tau_valuator = fn

    # -- local orders ------------------------------------------------------

    def _v_dY(self, base):
        while True:
            s = base.series_of(self.Y_eval)
            try:
                return s.derivative().valuation()
            except InsufficientPrecisionError:
                cur = base.current_order() or Fraction(24)
                if cur * 2 > 1024:
                    raise
                base.ensure_order(int(cur * 2))

    def order_at_lift(self, lift):
        """Vanishing order of the form at (either) lift of the base place."""
        base = lift.base
        e = lift.e
        vdY = self._v_dY(base)
        if self.tau_poly is not None:
            vtau = self.eps * base.order_of(self.tau_poly)
        elif self._tau_valuator is not None:
            vtau = self._tau_valuator(lift)
        else:
            raise SingularInputError(
                f"{self.record.name}: no tau data and no valuator installed")
        vb = base.order_of(self.b_poly) if not self.b_poly.is_constant() else 0
        total = e * (Fraction(vdY) - vtau - vb) + (e - 1) - Fraction(e * lift.v_x2m4, 2)
        if total.denominator != 1:
            raise InvariantViolation("non-integer torsion order")
        return int(total)

    def order_at_lift_direct(self, lift, which="plus"):
        """Same order via an explicit alpha(t) series: v(h(x,y,alpha) x'(t))."""
        aug = lift_place(lift, which=which)
        K = aug.field
        ydata = {"x": aug.x_series}
        if aug.y_series is not None:
            ydata["y"] = aug.y_series
        Y = self.Y_eval.change_field(K).subs(ydata)
        vdY = Y.derivative().valuation()
        if self.tau_poly is not None:
            tau_s = self.tau_poly.change_field(K).subs(ydata)
            vtau = self.eps * tau_s.valuation()
        elif self._tau_valuator is not None:
            vtau = self._tau_valuator(lift)
        else:
            raise SingularInputError("no tau data")
        b_s = self.b_poly.change_field(K).subs(ydata)
        vb = b_s.valuation() if b_s.terms or b_s.order is not None else Fraction(0)
        w = aug.alpha_series * 2 - aug.x_series
        vw = w.valuation()
        total = vdY - vtau - vb - vw
        return int(total)


class DivisorEntry:
    def __init__(self, label, order, degree, lift):
        self.label = label
        self.order = order
        self.degree = degree
        self.lift = lift

    def __repr__(self):
        return f"{self.label}: order {self.order} (degree {self.degree})"


class Divisor:
    """Orders of the torsion form at the places of the cover."""

    def __init__(self, entries, genus_Y):
        self.entries = entries
        self.genus_Y = genus_Y

    @property
    def degree(self):
        return sum(e.order * e.degree for e in self.entries)

    def support(self):
        return [e for e in self.entries if e.order != 0]

    def ideal_entries(self):
        return [e for e in self.entries if e.lift.base.kind == "ideal"]

    def to_json(self):
        return {
            "places": [{"label": e.label, "order": e.order, "degree": e.degree}
                       for e in self.entries],
            "degree": self.degree,
            "canonical_degree": 2 * self.genus_Y - 2,
        }


def candidate_x_minpolys(form, plane_poly, extra=()):
    """Irreducible x-polynomials under the finite candidate support."""
    P = plane_poly
    Py = P.derivative("y")
    Px = P.derivative("x")
    Yx = form.Y_eval.derivative("x")
    Yy = form.Y_eval.derivative("y")
    n_dy = Yx * Py - Yy * Px
    polys = [n_dy, Py, form.b_poly]
    if form.tau_poly is not None:
        polys.append(form.tau_poly)
    mins = {}
    for g in polys:
        g = g.extend_vars(XY)
        if g.is_zero() or g.is_constant():
            continue
        if g.involves("y"):
            r = resultant(P, g, "y")
        else:
            r = g
        r = r.drop_vars()
        if r.vars == () or r.is_constant():
            continue
        r = r.extend_vars(("x",))
        dense = [Fraction(0)] * (r.degree("x") + 1)
        for exps, c in r.terms.items():
            dense[exps[0]] = c
        _, factors = nf_factor(QQ, dense)
        for fac, _ in factors:
            mins[tuple(fac)] = list(fac)
    for fac in extra:
        mins[tuple(Fraction(c) for c in fac)] = [Fraction(c) for c in fac]
    return list(mins.values())


def torsion_divisor(form, cover, extra_x_minpolys=(), spot_checks=2, rng=None):
    """The full divisor of the torsion form on the cover.

    Enumerates ideal places, ramification places, and every finite place
    where a constituent of the form could vanish; asserts the canonical
    degree 2 g(Y) - 2 and spot-checks regularity at random smooth places.
    """
    entries = []
    for lift in cover.ideal:
        order = form.order_at_lift(lift)
        for label in lift.lift_labels():
            entries.append(DivisorEntry(label, order, lift.degree, lift))
    for lift in cover.ram:
        order = form.order_at_lift(lift)
        entries.append(DivisorEntry(lift.base.label, order, lift.degree, lift))
    if cover.model.kind == "plane":
        P = cover.model.curve.poly
        candidate_order = min(8, cover.N)
        for mp in candidate_x_minpolys(form, P, extra_x_minpolys):
            places = cover.model.finite_places_above(mp, candidate_order)
            for p in places:
                lift = cover.lift(p)
                if lift.e == 2:
                    if _is_known_ram(p, cover):
                        continue
                    # an odd place not at x = +-2 would be a new ramification
                    raise InvariantViolation("unexpected ramified candidate place")
                order = form.order_at_lift(lift)
                if order:
                    for i, label in enumerate(["fin-%s%s" % (len(entries), suf)
                                               for suf in ("a", "b")]):
                        entries.append(DivisorEntry(label, order, lift.degree, lift))
                else:
                    entries.append(DivisorEntry(f"fin-{len(entries)}", 0,
                                                lift.degree, lift))
    else:
        for mp in extra_x_minpolys:
            for p in cover.model.finite_places_above(list(mp), cover.N):
                lift = cover.lift(p)
                order = form.order_at_lift(lift)
                if order:
                    raise InvariantViolation("unexpected finite support on the line")
                entries.append(DivisorEntry(f"fin-{len(entries)}", 0, lift.degree, lift))
    div = Divisor([e for e in entries], cover.genus_Y)
    expected = 2 * cover.genus_Y - 2
    if div.degree != expected:
        raise InvariantViolation(
            f"divisor degree {div.degree} != canonical {expected}")
    if rng is not None and cover.model.kind == "plane":
        for _ in range(spot_checks):
            x0 = _random_smooth_x(cover, form, rng)
            for p in cover.model.finite_places_above([-x0, Fraction(1)],
                                                     min(8, cover.N)):
                lift = cover.lift(p)
                if form.order_at_lift(lift) != 0:
                    raise InvariantViolation("spot check found unexpected support")
    return div


def _is_known_ram(place, cover):
    x0 = place.center.get("x0")
    for l in cover.ram:
        if l.base.center.get("x0") == x0 and l.base.field == place.field:
            if l.base.center.get("y0") == place.center.get("y0"):
                return True
    return False


def _random_smooth_x(cover, form, rng):
    P = cover.model.curve.poly
    disc = resultant(P, P.derivative("y"), "y").drop_vars().extend_vars(("x",))
    for _ in range(100):
        x0 = Fraction(rng.randint(3, 40), rng.randint(1, 7))
        if x0 in (2, -2) or disc.subs({"x": x0}) == 0:
            continue
        return x0
    raise SingularInputError("no smooth sample x found")
