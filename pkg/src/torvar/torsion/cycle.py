"""The boundary-torus 2-cycle of the presentation spine.

The peripheral commutator [mu, lambda] is trivial in the group, so it is a
product of conjugates of the relator; the sum of the conjugators is the
group-ring coefficient sigma of the boundary fundamental 2-cycle in the
spine's cellular chain complex.  By Lyndon's theorem the relation module of
a one-relator group is free cyclic, so sigma is the unique solution of

    d[mu, lambda]/dg = sigma * dr/dg      (g each generator, in Z[Gamma])

and can be found by exact linear algebra after evaluating both sides in
the tautological representation at sample points.  The solution is checked
to be integral, to satisfy both generator equations, and to be stable
across points.
"""

import random
from fractions import Fraction

from ..algebra import linalg
from ..algebra.numberfield import QQ
from ..errors import InvariantViolation
from ..knots.fox import GroupRingElement, fox_derivative
from ..knots.words import Word, commutator
from .cayley import WordMatrices, ad_of_group_ring, sl2_adjoint
from .points import sample_points, template_matrices_at, trefoil_matrices_at


def _prefixes(word):
    out, seen = [], set()
    pref = Word("")
    for ch in word:
        if pref.letters not in seen:
            seen.add(pref.letters)
            out.append(pref)
        pref = pref * Word(ch)
    if pref.letters not in seen:
        out.append(pref)
    return out


def boundary_cycle(record, curve_poly, n_points=2, seed=1729):
    """sigma in Z[Gamma] with d[mu,lambda]/dg = sigma * dr/dg for g = u, v."""
    pres = record.presentation
    comm = commutator(record.meridian, record.longitude)
    prefixes = _prefixes(comm)
    d_r = {g: fox_derivative(pres.relator, g) for g in pres.generators}
    d_c = {g: fox_derivative(comm, g) for g in pres.generators}
    rng = random.Random(seed)
    pts = sample_points(record, curve_poly, n_points + 1, rng)
    rows, rhs = [], []
    for pt in pts[:n_points]:
        K = pt.field
        mats = (trefoil_matrices_at(pt) if record.model == "line"
                else template_matrices_at(pt))
        wm = WordMatrices(pres.generators, mats, K.one, K.zero)
        ads = [sl2_adjoint(wm.of(g)) for g in prefixes]
        deg = getattr(K, "degree", 1)
        for g in pres.generators:
            A = ad_of_group_ring(d_r[g], wm, K.zero)
            B = ad_of_group_ring(d_c[g], wm, K.zero)
            for i in range(3):
                for j in range(3):
                    coeffs = [sum((adk[i][l] * A[l][j] for l in range(3)), K.zero)
                              for adk in ads]
                    for comp in range(deg):
                        row = []
                        for val in coeffs:
                            vec = val.vec if hasattr(val, "vec") else [val]
                            row.append(vec[comp] if comp < len(vec) else Fraction(0))
                        tv = B[i][j]
                        tv = tv.vec if hasattr(tv, "vec") else [tv]
                        rows.append(row)
                        rhs.append(tv[comp] if comp < len(tv) else Fraction(0))
    sol = linalg.solve(QQ, rows, rhs)
    if sol is None:
        raise InvariantViolation(
            f"{record.name}: boundary 2-cycle not supported on commutator prefixes")
    coeffs = {}
    for g, c in zip(prefixes, sol):
        if c:
            if c.denominator != 1:
                raise InvariantViolation(
                    f"{record.name}: non-integral boundary-cycle coefficient {c}")
            coeffs[g] = int(c)
    sigma = GroupRingElement(coeffs)
    _verify_sigma(record, pres, sigma, d_r, d_c, pts[n_points])
    return sigma


def _verify_sigma(record, pres, sigma, d_r, d_c, pt):
    K = pt.field
    mats = (trefoil_matrices_at(pt) if record.model == "line"
            else template_matrices_at(pt))
    wm = WordMatrices(pres.generators, mats, K.one, K.zero)
    msig = ad_of_group_ring(sigma, wm, K.zero)
    for g in pres.generators:
        A = ad_of_group_ring(d_r[g], wm, K.zero)
        B = ad_of_group_ring(d_c[g], wm, K.zero)
        for i in range(3):
            for j in range(3):
                lhs = sum((msig[i][l] * A[l][j] for l in range(3)), K.zero)
                if lhs != B[i][j]:
                    raise InvariantViolation(
                        f"{record.name}: boundary-cycle verification failed")
