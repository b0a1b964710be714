"""The eigenvalue double cover Y -> X and its Euler bookkeeping.

Y is cut out by alpha^2 - x*alpha + 1 = 0 over the base curve.  A base
place ramifies exactly when x^2 - 4 has odd valuation there; each
unramified base place carries two lifts (conjugate under alpha -> x-alpha),
and the lifted orders of pulled-back data follow

    ord_lift = e * ord_base          (functions),
    ord_lift(2*alpha - x) = e * ord_base(x^2 - 4) / 2.

Riemann-Hurwitz fixes chi(Y) = 2 chi(X) - #ram.
"""

from fractions import Fraction

from ..algebra.multipoly import MultiPoly, factor_rational
from ..algebra.numberfield import QQ
from ..errors import InvariantViolation, SingularInputError
from .planecurve import PlaneCurve
from .places import DEFAULT_N, Place, finite_places_at, ideal_places, places_above_x
from .singular import genus as plane_genus
from .singular import singular_points

XY = ("x", "y")


class LineModel:
    """The rational-line trace curve (trefoil): X is the affine x-line."""

    kind = "line"

    def __init__(self):
        self.genus_X = 0
        self.chi_X = 2

    def ideal_places(self, N=DEFAULT_N):
        from ..algebra.series import TruncatedSeries
        t = TruncatedSeries.gen(QQ, "t")

        def expander(n):
            tt = TruncatedSeries.gen(QQ, "t")
            return QQ, tt.inverse(), None

        x_ser = t.inverse()
        return [Place("ideal-1", "ideal", QQ, x_ser, None, 1, expander,
                      center={"x": "inf"})]

    def finite_places_above(self, mpoly_coeffs, N=DEFAULT_N):
        from ..algebra.numberfield import adjoin_root
        from ..algebra.series import TruncatedSeries
        K, _, x0 = adjoin_root(QQ, [Fraction(c) for c in mpoly_coeffs], gen_name="ax")

        def expander(n, K=K, x0=x0):
            t = TruncatedSeries.gen(K, "t")
            return K, t + K.coerce(x0), None

        _, xs, _ = expander(N)
        return [Place("", "finite", K, xs, None, getattr(K, "degree", 1),
                      expander, center={"x0": x0})]


class PlaneModel:
    """Smooth projective model data of a plane trace curve."""

    kind = "plane"

    def __init__(self, curve, N=DEFAULT_N):
        if isinstance(curve, MultiPoly):
            curve = PlaneCurve(curve)
        self.curve = curve
        self.singular = singular_points(curve)
        self.genus_X = (curve.d - 1) * (curve.d - 2) // 2 - sum(
            sp.delta * sp.degree for sp in self.singular)
        if self.genus_X < 0:
            raise InvariantViolation("negative genus")
        self.chi_X = 2 - 2 * self.genus_X

    def ideal_places(self, N=DEFAULT_N):
        return ideal_places(self.curve, N)

    def finite_places_above(self, mpoly_coeffs, N=DEFAULT_N, y_filter=None):
        return places_above_x(self.curve, mpoly_coeffs, N, y_filter)


class PlaceLift:
    """A place of Y above a base place: ramification index and lift count."""

    def __init__(self, base, e, n_lifts, v_x2m4):
        self.base = base
        self.e = e                  # ramification index of Y -> X at the lift
        self.n_lifts = n_lifts      # 1 if ramified else 2
        self.v_x2m4 = v_x2m4        # base valuation of x^2 - 4

    @property
    def degree(self):
        return self.base.degree

    def lift_labels(self):
        if self.n_lifts == 1:
            return [self.base.label]
        return [f"{self.base.label}a", f"{self.base.label}b"]


class CoverData:
    def __init__(self, model, N=DEFAULT_N):
        self.model = model
        self.N = N
        self.genus_X = model.genus_X
        self.chi_X = model.chi_X
        self.ideal = [self.lift(p) for p in model.ideal_places(N)]
        for lift in self.ideal:
            if lift.e != 1:
                raise InvariantViolation(
                    "cover ramifies at an ideal place (x should blow up there)")
        self.ram = self._ramification_places(N)
        self.n_ram = sum(l.degree for l in self.ram)
        self.chi_Y = 2 * self.chi_X - self.n_ram
        if (2 - self.chi_Y) % 2:
            raise InvariantViolation("chi(Y) parity broken")
        self.genus_Y = (2 - self.chi_Y) // 2
        if self.genus_Y < 0:
            raise InvariantViolation("negative genus of the cover")

    def lift(self, place):
        x2m4 = MultiPoly(QQ, XY, {(2, 0): Fraction(1), (0, 0): Fraction(-4)})
        if place.y_series is None:
            x2m4 = MultiPoly(QQ, ("x",), {(2,): Fraction(1), (0,): Fraction(-4)})
        v = place.order_of(x2m4)
        if v.denominator != 1:
            raise InvariantViolation("fractional valuation of x^2-4")
        v = int(v)
        if v % 2:
            return PlaceLift(place, 2, 1, v)
        return PlaceLift(place, 1, 2, v)

    def _ramification_places(self, N):
        out = []
        for x0 in (2, -2):
            mpoly = [Fraction(-x0), Fraction(1)]
            places = self.model.finite_places_above(mpoly, N)
            for p in places:
                lift = self.lift(p)
                if lift.e == 2:
                    out.append(lift)
        for i, l in enumerate(out):
            l.base.label = f"ram-{i + 1}"
        return out


def build_cover(model, N=DEFAULT_N):
    return CoverData(model, N)
