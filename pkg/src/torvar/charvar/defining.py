"""Deriving the trace-curve polynomial from the group relation.

Impose rho(lhs) = rho(rhs) entrywise on the template representation, take
the gcd of the four entry polynomials (after clearing alpha-unit monomials),
rewrite symmetrically in x = alpha + 1/alpha, and split off reducible-type
factors.  The commutator-trace witness decides which factors carry
irreducible characters.
"""

from ..algebra.multipoly import (
    MultiPoly,
    exact_div,
    factor_rational,
    gcd_multipoly,
    squarefree_part,
)
from ..algebra.numberfield import QQ
from ..errors import InvariantViolation, SingularInputError
from .tautrep import mat2_sub
from .traces import XY, alpha_symmetric_to_xy, commutator_trace_witness, trace_of_word


class DefiningResult:
    """Factored trace-curve data: full squarefree polynomial and classified
    irreducible factors ('reducible-type' / 'irreducible-type')."""

    def __init__(self, full, components):
        self.full = full
        self.components = components  # list of (factor, kind)

    @property
    def reducible_factors(self):
        return [f for f, kind in self.components if kind == "reducible-type"]

    @property
    def irreducible_factors(self):
        return [f for f, kind in self.components if kind == "irreducible-type"]


def relation_gcd(rep, presentation):
    """gcd of the entries of rho(lhs) - rho(rhs), alpha-units cleared."""
    diff = mat2_sub(rep.matrix_of(presentation.lhs), rep.matrix_of(presentation.rhs))
    entries = []
    for row in diff:
        for e in row:
            if e.is_zero():
                continue
            _, cleared = e.laurent_split("alpha")
            entries.append(cleared)
    if not entries:
        raise SingularInputError(
            "relation identically satisfied: no curve equation (line model)")
    g = entries[0]
    for e in entries[1:]:
        g = gcd_multipoly(g, e)
    if g.is_constant():
        raise SingularInputError("entry gcd degenerates to a constant: no curve")
    _, g = g.laurent_split("alpha")
    return g


def symmetrize_centered(g):
    """Center the alpha-exponents of g and rewrite in (x, y).

    The entry gcd is only well-defined up to alpha-units; a genuine trace
    condition becomes symmetric after shifting by half its alpha-degree.
    """
    lo = g.min_degree("alpha")
    hi = g.degree("alpha")
    total = lo + hi
    if total % 2:
        raise InvariantViolation("alpha-degree span is odd: cannot center")
    shift = -(total // 2)
    idx = g.vars.index("alpha")
    terms = {}
    for exps, c in g.terms.items():
        new = list(exps)
        new[idx] += shift
        terms[tuple(new)] = c
    centered = MultiPoly(g.field, g.vars, terms)
    return alpha_symmetric_to_xy(centered)


def defining_polynomial(rep, presentation):
    """Trace-curve polynomial with reducible/irreducible classification."""
    g = relation_gcd(rep, presentation)
    pxy = symmetrize_centered(g)
    pxy = squarefree_part(pxy)
    unit, factors = factor_rational(pxy)
    witness = commutator_trace_witness()
    components = []
    for f, mult in factors:
        if mult != 1:
            raise InvariantViolation("squarefree part still has a multiple factor")
        kind = "reducible-type" if divides(f, witness) else "irreducible-type"
        components.append((f, kind))
    full = MultiPoly.const(QQ, XY, 1)
    for f, _ in factors:
        full = full * f
    norm, _ = full.primitive_normalized()
    return DefiningResult(norm, components)


def divides(f, p):
    """True iff f divides p exactly."""
    if p.is_zero():
        return True
    try:
        exact_div(p, f)
        return True
    except (SingularInputError, ZeroDivisionError):
        return False


def polys_equal_up_to_unit(a, b):
    """Equality up to a nonzero rational scalar."""
    na, _ = a.primitive_normalized()
    nb, _ = b.primitive_normalized()
    return na == nb or na == nb.scale(-1)
