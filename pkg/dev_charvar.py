"""Dev script: derive defining polynomials, check against pinned values,
and hunt for longitude words.  Not part of the package."""

import sys
from fractions import Fraction

sys.path.insert(0, "src")

from torvar.algebra.multipoly import MultiPoly
from torvar.algebra.numberfield import QQ
from torvar.charvar.augmented import CoverElement, eigenvalue_function, is_peripheral
from torvar.charvar.defining import defining_polynomial, polys_equal_up_to_unit
from torvar.charvar.tautrep import meridian_template_rep, trefoil_rep
from torvar.charvar.traces import trace_of_word, reduce_mod_plane
from torvar.knots.presentation import parse_presentation
from torvar.knots.words import Word

XY = ("x", "y")


def pxy(terms):
    return MultiPoly(QQ, XY, {e: Fraction(c) for e, c in terms.items()})


X = MultiPoly.var(QQ, XY, "x")
Y = MultiPoly.var(QQ, XY, "y")

P_FIG8_FULL = (X**2 - Y - 2) * (2 * X**2 + Y**2 - X**2 * Y - Y - 1)
P_FIG8_IRR = 2 * X**2 + Y**2 - X**2 * Y - Y - 1
P_52 = -(X**2) * (Y - 1) * (Y - 2) + Y**3 - Y**2 - 2 * Y + 1
P_61 = (X**4 * (Y - 2)**2 - X**2 * (Y + 1) * (Y - 2) * (2 * Y - 3)
        + (Y**3 - 3 * Y - 1) * (Y - 1))

FIG8 = "u,v | v*[u,V] = [u,V]*u"
K52 = "u,v | v*(U*V*u*v*U*V) = (U*V*u*v*U*V)*u"
K61 = "u,v | v*[u,V]^2 = [u,V]^2*u"
K61_PRINTED = "u,v | v*(v*U*V*u)^2 = (v*U*V*u)^2*u"

rep = meridian_template_rep()

for name, text, pinned_full, pinned_irr in [
    ("fig8", FIG8, P_FIG8_FULL, P_FIG8_IRR),
    ("5_2", K52, None, P_52),
    ("6_1", K61, None, P_61),
    ("6_1-printed-w", K61_PRINTED, None, P_61),
]:
    pres = parse_presentation(text)
    try:
        res = defining_polynomial(rep, pres)
    except Exception as e:
        print(f"{name}: defining_polynomial FAILED: {e}")
        continue
    print(f"== {name}")
    for f, kind in res.components:
        print(f"   [{kind}] {f}")
    if pinned_full is not None:
        print("   full == pinned-full:", polys_equal_up_to_unit(res.full, pinned_full))
    if pinned_irr is not None:
        irr = res.irreducible_factors
        ok = any(polys_equal_up_to_unit(f, pinned_irr) for f in irr)
        print(f"   some irreducible factor == pinned-irr: {ok}")
