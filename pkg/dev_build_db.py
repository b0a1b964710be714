"""Dev: generate the shipped knot-record JSON files from derivations."""

import json
import sys
from fractions import Fraction

sys.path.insert(0, "src")

from torvar.algebra.multipoly import MultiPoly
from torvar.algebra.numberfield import QQ
from torvar.charvar.augmented import is_peripheral
from torvar.charvar.tautrep import meridian_template_rep
from torvar.charvar.traces import trace_of_word
from torvar.knots.database import XY, poly_to_terms
from torvar.knots.presentation import parse_presentation
from torvar.knots.words import Word

X = MultiPoly.var(QQ, XY, "x")
Y = MultiPoly.var(QQ, XY, "y")

P_FIG8 = (X**2 - Y - 2) * (2 * X**2 + Y**2 - X**2 * Y - Y - 1)
P_52 = -(X**2) * (Y - 1) * (Y - 2) + Y**3 - Y**2 - 2 * Y + 1
P_61 = (X**4 * (Y - 2)**2 - X**2 * (Y + 1) * (Y - 2) * (2 * Y - 3)
        + (Y**3 - 3 * Y - 1) * (Y - 1))

TAU_FIG8 = 5 - 2 * X**2
TAU_52 = 5 * X**4 * (Y - 2) - X**2 * (5 * Y**2 + 7 * Y - 31) + 7 * (Y**2 - Y - 3)

rep = meridian_template_rep()


def longitude_of(wtext):
    w = Word(wtext)
    lam = w.reversed_word() * w
    e = lam.exponent_sum("u") + lam.exponent_sum("v")
    return lam * (Word("u") ** (-e))


records = []

# trefoil: pinned representation over Q(j); line model in x = Tr(a b^-1)
records.append({
    "name": "trefoil",
    "generators": ["a", "b"],
    "relator_lhs": "aa",
    "relator_rhs": "bbb",
    "meridian": "aB",
    "longitude": "aa" + "bA" * 6,
    "torsion_curve": "meridian",
    "model": "line",
    "P": None,
    "tau_mu": {"terms": [[0, 0, 1, 1]], "orientation": "denominator"},
    "Y_mu": [[1, 0, 1, 1]],
    "surfaces": [{"chi": 0, "ideal_points": ["ideal-1"]}],
    "notes": "torus knot; the component of irreducible type is a rational "
             "line in the meridian trace, and the bound check is only an "
             "empirical equality (annulus).",
})

for name, wtext, P, tau, surfaces in [
    ("figure_eight", "uVUv", P_FIG8, TAU_FIG8,
     [{"chi": -2, "ideal_points": ["ideal-1"]},
      {"chi": -2, "ideal_points": ["ideal-2"]}]),
    ("5_2", "UVuvUV", P_52, TAU_52,
     [{"chi": -4, "ideal_points": ["ideal-1"]},
      {"chi": -2, "ideal_points": ["ideal-2", "ideal-3"]}]),
    ("6_1", "uVUvuVUv", P_61, None,
     [{"chi": -2, "ideal_points": ["ideal-1", "ideal-3"]},
      {"chi": -6, "ideal_points": ["ideal-2"]}]),
]:
    w = Word(wtext)
    lhs = (Word("v") * w).letters
    rhs = (w * Word("u")).letters
    lam = longitude_of(wtext)
    pres = parse_presentation(f"u,v | {lhs or '1'} = {rhs}")
    # sanity: peripheral on the irreducible factor
    from torvar.algebra.multipoly import factor_rational
    _, factors = factor_rational(P)
    irr = [f for f, _ in factors if f.total_degree() >= 3]
    assert len(irr) >= 1
    for f in irr:
        assert is_peripheral(rep, lam, f), (name, lam)
    ymu = trace_of_word(rep, lam)
    records.append({
        "name": name,
        "generators": ["u", "v"],
        "relator_lhs": lhs,
        "relator_rhs": rhs,
        "meridian": "u",
        "longitude": lam.letters,
        "torsion_curve": "longitude",
        "model": "plane",
        "P": poly_to_terms(P),
        "tau_mu": ({"terms": poly_to_terms(tau), "orientation": "denominator"}
                   if tau is not None else None),
        "Y_mu": poly_to_terms(ymu),
        "surfaces": surfaces,
        "notes": "",
    })

for r in records:
    path = f"src/torvar/knots/data/{r['name']}.json"
    with open(path, "w") as fh:
        json.dump(r, fh, indent=1)
    print("wrote", path)
