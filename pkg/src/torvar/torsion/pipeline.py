"""End-to-end per-knot analysis context: record -> representation -> curve
-> cover -> torsion form.  Everything downstream (divisors, theorem checks,
reports, the command line) goes through KnotAnalysis."""

from fractions import Fraction
from functools import cached_property

from ..algebra.multipoly import factor_rational
from ..charvar.defining import defining_polynomial, polys_equal_up_to_unit
from ..charvar.tautrep import meridian_template_rep, trefoil_rep
from ..curves.cover import CoverData, LineModel, PlaneModel
from ..curves.planecurve import PlaneCurve
from ..errors import InvariantViolation, SingularInputError
from ..knots.database import load_knot
from .forms import TorsionForm, torsion_divisor


class KnotAnalysis:
    def __init__(self, record, order=24):
        if isinstance(record, str):
            record = load_knot(record)
        self.record = record
        self.order = order

    @cached_property
    def rep(self):
        if self.record.model == "line":
            return trefoil_rep()
        return meridian_template_rep(self.record.presentation.generators)

    @cached_property
    def defining(self):
        if self.record.model == "line":
            return None
        return defining_polynomial(self.rep, self.record.presentation)

    @cached_property
    def curve_poly(self):
        """The irreducible-type trace-curve polynomial, validated against the
        pinned record value when present."""
        if self.record.model == "line":
            return None
        irr = self.defining.irreducible_factors
        if len(irr) != 1:
            raise SingularInputError(
                f"{self.record.name}: expected one irreducible-type factor")
        poly = irr[0]
        if self.record.P is not None:
            _, pinned_factors = factor_rational(self.record.P)
            match = any(polys_equal_up_to_unit(poly, f) for f, _ in pinned_factors)
            if not match:
                raise InvariantViolation(
                    f"{self.record.name}: derived curve disagrees with pinned P")
        return poly

    @cached_property
    def model(self):
        if self.record.model == "line":
            return LineModel()
        return PlaneModel(PlaneCurve(self.curve_poly))

    @cached_property
    def cover(self):
        return CoverData(self.model, self.order)

    @cached_property
    def form(self):
        return TorsionForm(self.record, self.rep, self.curve_poly)

    @cached_property
    def boundary_cycle(self):
        from .cycle import boundary_cycle
        return boundary_cycle(self.record, self.curve_poly)

    def divisor(self, rng=None, extra_x_minpolys=()):
        return torsion_divisor(self.form, self.cover,
                               extra_x_minpolys=extra_x_minpolys, rng=rng)

    def torsion_valuation_via_complex(self, lift, which="plus", order=None):
        """Order of the torsion form at a lift, through the twisted-complex
        determinant filtration (independent of the stored tau).

        The scalar computed with the tangent cocycle as H^1 basis is
        tau * (dY/dt)^-1 up to sign, so the order of tor = f dt is
        -(ratio valuation) - v(Z - 1/Z).
        """
        from ..errors import InsufficientPrecisionError
        from .cayley import SeriesComplex
        from .forms import lift_place
        n = order or max(self.order, 32)
        while n <= 4096:
            try:
                aug = lift_place(lift, which=which, order=n)
                mats = self._series_matrices(aug)
                sc = SeriesComplex(self.record.presentation, mats, aug.field,
                                   self.record.torsion_word, self.boundary_cycle)
                ratio = sc.torsion_valuation()
                w = aug.alpha_series * 2 - aug.x_series
                vw = w.valuation()
                if self.record.model != "line":
                    K = aug.field
                    b = self.form.b_poly.change_field(K).subs(
                        {"x": aug.x_series, "y": aug.y_series})
                    vw = vw + b.valuation()
                return int(-ratio - vw)
            except InsufficientPrecisionError:
                n *= 2
        raise InsufficientPrecisionError(
            "torsion valuation via the twisted complex did not stabilize",
            required_order=n)

    def _series_matrices(self, aug):
        from ..algebra.series import TruncatedSeries
        if self.record.model == "line":
            Qj = self.rep.field
            K = aug.field
            if K == Qj:
                xs = aug.x_series
            elif getattr(K, "degree", 1) == 1:
                xs = aug.x_series.map_coefficients(Qj.coerce, Qj)
            else:
                raise SingularInputError("trefoil series places must be rational")
            j = Qj.gen()
            one = TruncatedSeries.from_scalar(Qj, "t", 1)
            zero = TruncatedSeries.zero(Qj, "t")
            s = xs * ((j * j - j) / 3)
            ma = [[s, one], [-(s * s + 1), -s]]
            mb = [[one * (-j), zero], [zero, one * (-(j * j))]]
            aug.field = Qj  # the complex runs over Q(j)
            return [ma, mb]
        K = aug.field
        one = TruncatedSeries.from_scalar(K, "t", 1)
        zero = TruncatedSeries.zero(K, "t")
        a = aug.alpha_series
        ainv = a.inverse()
        y = aug.y_series
        mu = [[a, one], [zero, ainv]]
        mv = [[a, zero], [y - a * a - ainv * ainv, ainv]]
        return [mu, mv]
