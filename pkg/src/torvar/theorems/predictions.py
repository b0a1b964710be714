"""Finite-point vanishing-order predictions and ideal-point bound checks."""

from fractions import Fraction

from ..algebra.multipoly import MultiPoly, gcd_multipoly, resultant
from ..algebra.numberfield import QQ, NumberField, adjoin_root, nf_factor
from ..errors import InvariantViolation, SingularInputError
from ..knots.alexander import alexander_polynomial, alexander_root_order

XY = ("x", "y")


class FinitePointPrediction:
    def __init__(self, label, kind, order, provenance, assumed=False, note=""):
        self.label = label
        self.kind = kind              # irreducible-singular | reducible-intersection | smooth
        self.order = order
        self.provenance = provenance  # "length formula" | "2r-2" | "zero"
        self.assumed = assumed
        self.note = note

    def to_json(self):
        return {"label": self.label, "kind": self.kind, "order": self.order,
                "provenance": self.provenance, "assumed": self.assumed,
                "note": self.note}


class IdealPointCheck:
    def __init__(self, label, order, chi, applicable=True, assigned=True):
        self.label = label
        self.order = order
        self.chi = chi
        self.applicable = applicable
        self.assigned = assigned

    @property
    def bound(self):
        return None if self.chi is None else -self.chi - 1

    @property
    def ok(self):
        if not self.assigned:
            return None
        return self.order <= self.bound

    @property
    def equality(self):
        if not self.assigned:
            return None
        return self.order == self.bound

    def to_json(self):
        return {"label": self.label, "order": self.order, "chi": self.chi,
                "bound": self.bound, "ok": self.ok, "equality": self.equality,
                "applicable": self.applicable, "assigned": self.assigned}


def reducible_intersection_x_minpolys(record, curve_poly):
    """x-minimal-polynomials of intersections with the reducible locus.

    The reducible characters satisfy y = x^2 - 2 (diagonal family), so the
    intersection x-values satisfy P(x, x^2 - 2) = 0; the eigenvalue data
    satisfies x^2 = lam^2 + lam^-2 + 2 with lam^2 ranging over roots of the
    Alexander polynomial.  Both routes are computed and intersected.
    """
    delta = alexander_polynomial(record.presentation)
    if record.model == "line":
        gx = None
    else:
        x = MultiPoly.var(QQ, XY, "x")
        sub = {"y": x * x - 2}
        gx = curve_poly.subs(sub).drop_vars().extend_vars(("x",))
    # eliminate t from { delta(t) = 0, x^2 t = (t+1)^2 }
    t = MultiPoly.var(QQ, ("x", "t"), "t")
    xv = MultiPoly.var(QQ, ("x", "t"), "x")
    rel = xv * xv * t - (t + 1) * (t + 1)
    dl = delta.extend_vars(("x", "t"))
    res = resultant(dl, rel, "t").drop_vars().extend_vars(("x",))
    if gx is not None:
        common = gcd_multipoly(res, gx)
    else:
        common = res
    if common.is_constant():
        return [], delta
    dense = [Fraction(0)] * (common.degree("x") + 1)
    for exps, c in common.terms.items():
        dense[exps[0]] = c
    _, factors = nf_factor(QQ, dense)
    return [list(f) for f in (fac for fac, _ in factors)], delta


def reducible_point_predictions(record, curve_poly):
    """Predicted orders 2r - 2 at reducible-intersection points."""
    minpolys, delta = reducible_intersection_x_minpolys(record, curve_poly)
    out = []
    _, dfactors = nf_factor(QQ, _dense_t(delta))
    for i, mp in enumerate(minpolys):
        # the multiplicity r of the matching Alexander root
        K, _, x0 = adjoin_root(QQ, mp, gen_name="xi")
        # lam^2 + lam^-2 = x0^2 - 2: lam^2 is a root of z^2 - (x0^2-2) z + 1
        z2 = [K.one, -(x0 * x0 - 2), K.one][::-1]
        lam_candidates = _roots_possibly_extending(K, z2)
        orders = set()
        for L, lam_sq in lam_candidates:
            if lam_sq == 1:
                raise InvariantViolation("lambda^2 = 1 at a reducible point")
            r = alexander_root_order(delta, lam_sq, L)
            if r >= 1:
                orders.add(r)
        if not orders:
            continue
        r = max(orders)
        out.append(FinitePointPrediction(
            label=f"red-{i + 1}", kind="reducible-intersection",
            order=2 * r - 2, provenance="2r-2",
            assumed=(r >= 2),
            note=("simple Alexander root: hypotheses automatic" if r == 1 else
                  "multiple root: cup-bracket rank hypothesis ASSUMED")))
    return out


def _roots_possibly_extending(K, dense):
    from ..algebra.numberfield import roots_in_field
    roots = roots_in_field(K, dense)
    if roots:
        return [(K, r) for r, _ in roots]
    _, factors = nf_factor(K, dense)
    out = []
    for fac, _ in factors:
        L, _, r = adjoin_root(K, fac, gen_name="lam")
        out.append((L, r))
    return out


def _dense_t(p):
    k, p = p.laurent_split("t")
    out = [Fraction(0)] * (p.degree("t") + 1)
    for exps, c in p.terms.items():
        out[exps[0]] = c
    return out


def ideal_bound_checks(record, divisor):
    """Per ideal place: v(tor) <= -chi(Sigma) - 1, with equality flags."""
    assignment = {}
    annular = {}
    for s in record.surfaces:
        for label in s.ideal_points:
            assignment[label] = s.chi
            annular[label] = s.annular
    checks = []
    seen = set()
    for e in divisor.ideal_entries():
        base_label = e.lift.base.label
        if base_label in seen:
            continue
        seen.add(base_label)
        chi = assignment.get(base_label)
        if chi is None:
            checks.append(IdealPointCheck(base_label, e.order, None,
                                          assigned=False))
            continue
        applicable = not annular[base_label]
        checks.append(IdealPointCheck(base_label, e.order, chi,
                                      applicable=applicable))
    return checks
