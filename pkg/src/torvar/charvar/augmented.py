"""The eigenvalue double cover: arithmetic mod (P, alpha^2 - x*alpha + 1).

Function-field elements are written a + b*alpha with a, b polynomials in
(x, y) reduced modulo the curve.  Eigenvalue functions of peripheral words
are the upper-left entries of the (triangular) represented matrices.
"""

from fractions import Fraction

from ..algebra.multipoly import MultiPoly, divmod_univariate
from ..algebra.numberfield import QQ
from ..errors import InvariantViolation, SingularInputError
from ..knots.words import Word, commutator
from .traces import reduce_mod_plane
from .tautrep import AY

XYA = ("x", "y", "alpha")


def alpha_reduce(p):
    """Rewrite a Laurent polynomial in (x, y, alpha) with alpha-degree <= 1,
    using alpha^2 = x*alpha - 1 and 1/alpha = x - alpha."""
    p = p.extend_vars(XYA) if p.vars != XYA else p
    ix = XYA.index("x")
    ia = XYA.index("alpha")
    x = MultiPoly.var(QQ, XYA, "x")
    alpha = MultiPoly.var(QQ, XYA, "alpha")
    out = MultiPoly.zero(QQ, XYA)
    for exps, c in p.terms.items():
        k = exps[ia]
        base_exps = list(exps)
        base_exps[ia] = 0
        base = MultiPoly(QQ, XYA, {tuple(base_exps): c})
        out = out + base * _alpha_power(k)
    return out


_ALPHA_POWER_CACHE = {}


def _alpha_power(k):
    """alpha^k reduced to degree <= 1 in alpha, as a polynomial in (x, alpha)."""
    if k in _ALPHA_POWER_CACHE:
        return _ALPHA_POWER_CACHE[k]
    x = MultiPoly.var(QQ, XYA, "x")
    alpha = MultiPoly.var(QQ, XYA, "alpha")
    one = MultiPoly.const(QQ, XYA, 1)
    if k == 0:
        res = one
    elif k == 1:
        res = alpha
    elif k > 1:
        prev2, prev1 = _alpha_power(k - 2), _alpha_power(k - 1)
        res = prev1 * x - prev2
    else:
        # alpha^-1 = x - alpha; alpha^-k via the mirrored recursion
        prev2, prev1 = _alpha_power(k + 2), _alpha_power(k + 1)
        res = prev1 * x - prev2
    _ALPHA_POWER_CACHE[k] = res
    return res


def from_alpha_y(p):
    """Embed a template-entry polynomial (alpha, y) into reduced (x, y, alpha)."""
    return alpha_reduce(p.extend_vars(XYA))


class CoverElement:
    """a + b*alpha with a, b in Q[x,y] reduced modulo the curve polynomial."""

    __slots__ = ("curve", "a", "b")

    def __init__(self, curve, a, b):
        self.curve = curve
        self.a = reduce_mod_plane(a.extend_vars(("x", "y")) if a.vars != ("x", "y") else a, curve)
        self.b = reduce_mod_plane(b.extend_vars(("x", "y")) if b.vars != ("x", "y") else b, curve)

    @classmethod
    def from_poly(cls, curve, p):
        """p in (x, y, alpha), any alpha-degree."""
        red = alpha_reduce(p)
        ia = XYA.index("alpha")
        a_terms, b_terms = {}, {}
        for exps, c in red.terms.items():
            key = (exps[0], exps[1])
            if exps[ia] == 0:
                a_terms[key] = a_terms.get(key, Fraction(0)) + c
            elif exps[ia] == 1:
                b_terms[key] = b_terms.get(key, Fraction(0)) + c
            else:  # pragma: no cover
                raise InvariantViolation("alpha_reduce left degree > 1")
        a = MultiPoly(QQ, ("x", "y"), a_terms)
        b = MultiPoly(QQ, ("x", "y"), b_terms)
        return cls(curve, a, b)

    def __add__(self, other):
        return CoverElement(self.curve, self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return CoverElement(self.curve, self.a - other.a, self.b - other.b)

    def __neg__(self):
        return CoverElement(self.curve, -self.a, -self.b)

    def __mul__(self, other):
        # (a1 + b1 A)(a2 + b2 A) with A^2 = xA - 1
        x = MultiPoly.var(QQ, ("x", "y"), "x")
        a = self.a * other.a - self.b * other.b
        b = self.a * other.b + self.b * other.a + self.b * other.b * x
        return CoverElement(self.curve, a, b)

    def conjugate(self):
        """Galois conjugate alpha -> x - alpha."""
        x = MultiPoly.var(QQ, ("x", "y"), "x")
        return CoverElement(self.curve, self.a + self.b * x, -self.b)

    def norm(self):
        """Self times conjugate: a^2 + a b x + b^2 reduced mod the curve."""
        x = MultiPoly.var(QQ, ("x", "y"), "x")
        return reduce_mod_plane(self.a * self.a + self.a * self.b * x + self.b * self.b,
                                self.curve)

    def is_zero(self):
        return self.a.is_zero() and self.b.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CoverElement(self.curve, MultiPoly.const(QQ, ("x", "y"), other),
                                 MultiPoly.zero(QQ, ("x", "y")))
        return self.a == other.a and self.b == other.b

    def __repr__(self):
        return f"({self.a}) + ({self.b})*alpha"


def eigenvalue_function(rep, word, curve, meridian="u"):
    """Z_word: the upper-left entry of rho(word) on the cover.

    Requires the word to be peripheral for the template: the lower-left
    entry must vanish mod (P, alpha-relation), which is checked.
    """
    if rep.style != "meridian-template":
        raise SingularInputError("eigenvalue_function needs the meridian template")
    mat = rep.matrix_of(word)
    lower = CoverElement.from_poly(curve, mat[1][0].extend_vars(AY).extend_vars(XYA))
    if not lower.is_zero():
        raise SingularInputError(
            f"word {word!r} is not peripheral: lower-left entry {lower!r}")
    return CoverElement.from_poly(curve, mat[0][0].extend_vars(AY).extend_vars(XYA))


def is_peripheral(rep, word, curve):
    mat = rep.matrix_of(word)
    lower = CoverElement.from_poly(curve, mat[1][0].extend_vars(AY).extend_vars(XYA))
    return lower.is_zero()


def irreducibility_witness(curve, generators=("u", "v")):
    """(word pair, Delta polynomial) certifying irreducible type.

    Returns ((u, v), Delta mod curve); the component is of irreducible type
    iff the reduction is nonzero, and of reducible type otherwise.
    """
    from .traces import commutator_trace_witness
    delta = commutator_trace_witness(generators)
    reduced = reduce_mod_plane(delta, curve)
    return (generators, reduced)
