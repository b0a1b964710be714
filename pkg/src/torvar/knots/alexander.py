"""Alexander polynomials of two-generator one-relator knot groups.

For <u, v | r> with abelianization phi, the twisted chain complex of the
presentation 2-complex over Q[t, 1/t] has kernel of the degree-1 boundary
generated by kappa = ((t^phi(v)-1)/(t-1), -(t^phi(u)-1)/(t-1)), and the
image of the Fox row (dr/du, dr/dv) is Delta * kappa.  The order ideal of
the torsion is therefore principal, generated by Delta: the module is
cyclic, its single invariant factor is the Alexander polynomial, and all
higher invariant-factor gcds collapse to 1.
"""

from fractions import Fraction

from ..algebra.multipoly import MultiPoly, divmod_univariate, exact_div, gcd_multipoly
from ..algebra.numberfield import QQ, poly_eval, poly_derivative
from ..errors import InvariantViolation, SingularInputError
from .fox import fox_derivative


def _tpoly(terms):
    return MultiPoly(QQ, ("t",), terms)


def _t_power_minus_one(n):
    if n == 0:
        return MultiPoly.zero(QQ, ("t",))
    return _tpoly({(n,): Fraction(1), (0,): Fraction(-1)})


def normalize_laurent(p):
    """Shift out powers of t, make integer-primitive with positive lead."""
    k, p = p.laurent_split("t")
    norm, _ = p.primitive_normalized()
    return norm


def alexander_polynomial(presentation):
    """The Alexander polynomial, normalized: primitive integer coefficients,
    positive leading coefficient, nonzero constant term."""
    phi = presentation.phi
    g1, g2 = presentation.generators
    if phi[g1] < 0:
        raise SingularInputError("abelianization not normalized")
    r = presentation.relator
    a1 = fox_derivative(r, g1).abelianized(phi)
    a2 = fox_derivative(r, g2).abelianized(phi)
    # fundamental identity, abelianized
    check = a1 * _t_power_minus_one(phi[g1]) + a2 * _t_power_minus_one(phi[g2])
    if not check.is_zero():
        raise InvariantViolation("abelianized Fox identity failed")
    src = a1 if not a1.is_zero() else a2
    other = phi[g2] if not a1.is_zero() else phi[g1]
    num = normalize_laurent(src) * _t_power_minus_one(1)
    den = _t_power_minus_one(abs(other))
    quot, rem = divmod_univariate(num, den, "t")
    if not rem.is_zero():
        raise InvariantViolation("one-relator Alexander division not exact")
    delta = normalize_laurent(quot)
    at_one = delta.subs({"t": Fraction(1)})
    if at_one not in (Fraction(1), Fraction(-1)):
        raise InvariantViolation(f"Delta(1) = {at_one}, expected +-1")
    if at_one == -1:
        pass  # sign is a unit; representative already has positive lead
    return delta


def invariant_factors(presentation):
    """Invariant factors of the torsion of the Alexander module.

    For a two-generator one-relator group the module is cyclic, so this is
    ``[Delta]`` (or empty when Delta is a unit); computed as the gcd of the
    abelianized Fox derivatives so cyclicity is verified, not assumed.
    """
    phi = presentation.phi
    g1, g2 = presentation.generators
    r = presentation.relator
    a1 = fox_derivative(r, g1).abelianized(phi)
    a2 = fox_derivative(r, g2).abelianized(phi)
    entries = [normalize_laurent(a) for a in (a1, a2) if not a.is_zero()]
    g = entries[0]
    for e in entries[1:]:
        g = gcd_multipoly(g, e)
    g = normalize_laurent(g)
    delta = alexander_polynomial(presentation)
    if g != delta:
        raise InvariantViolation(
            "row gcd of the Fox matrix disagrees with the Alexander polynomial")
    if delta.is_constant():
        return []
    return [delta]


def kth_alexander_polynomial(presentation, k):
    """gcd of products of n+1-k invariant factors (k = 1 recovers Delta)."""
    if k < 1:
        raise SingularInputError("k must be a positive integer")
    factors = invariant_factors(presentation)
    n = len(factors)
    if k > n:
        return MultiPoly.const(QQ, ("t",), 1)
    # factors are sorted by divisibility; products of n+1-k of them have gcd
    # equal to the product of the smallest n+1-k... with one factor, k=1 -> it
    from itertools import combinations
    prods = []
    for combo in combinations(range(n), n + 1 - k):
        p = MultiPoly.const(QQ, ("t",), 1)
        for i in combo:
            p = p * factors[i]
        prods.append(p)
    g = prods[0]
    for p in prods[1:]:
        g = gcd_multipoly(g, p)
    return normalize_laurent(g)


def alexander_root_order(delta, lam_sq, field=None):
    """Multiplicity of lam_sq as a root of delta (0 if not a root).

    ``lam_sq`` may be a Fraction or a number-field element; evaluation is
    exact in that field.
    """
    field = field or QQ
    coeffs = [field.coerce(c) for c in _dense_t(delta)]
    order = 0
    while len(coeffs) > 1:
        val = poly_eval(field, coeffs, field.coerce(lam_sq))
        if not field.is_zero(val):
            return order
        order += 1
        coeffs = poly_derivative(field, coeffs)
    return order


def _dense_t(p):
    k, p = p.laurent_split("t")
    deg = p.degree("t")
    out = [Fraction(0)] * (deg + 1)
    for exps, c in p.terms.items():
        out[exps[0]] = c
    return out


def is_symmetric(delta):
    """Delta(t) agrees with t^deg * Delta(1/t) up to sign."""
    dense = _dense_t(delta)
    rev = list(reversed(dense))
    return dense == rev or dense == [-c for c in rev]
