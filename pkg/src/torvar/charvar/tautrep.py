"""Tautological SL2 representations as symbolic 2x2 matrices.

The two-meridian template sends the generators to

    u |-> [[alpha, 1], [0, 1/alpha]]
    v |-> [[alpha, 0], [y - alpha^2 - alpha^-2, 1/alpha]]

with entries in Z[alpha, 1/alpha][y]; the trace of uv is y by construction
and both generators have trace alpha + 1/alpha.  The trefoil's <a,b | a2=b3>
presentation is not of meridian type and uses its own pinned matrices over
Q(j)[s], j a primitive cube root of unity.
"""

from fractions import Fraction

from ..algebra.multipoly import MultiPoly
from ..algebra.numberfield import QQ, NumberField
from ..errors import SingularInputError
from ..knots.words import Word

AY = ("alpha", "y")


def mat2_mul(a, b):
    return [
        [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
        [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
    ]


def mat2_sub(a, b):
    return [[a[i][j] - b[i][j] for j in range(2)] for i in range(2)]


def mat2_tr(a):
    return a[0][0] + a[1][1]


def mat2_det(a):
    return a[0][0] * a[1][1] - a[0][1] * a[1][0]


def mat2_inv_sl2(a):
    """Inverse of a determinant-one matrix (adjugate)."""
    return [[a[1][1], -a[0][1]], [-a[1][0], a[0][0]]]


class TautRep:
    """Word -> matrix evaluation for a fixed pair of generator matrices."""

    def __init__(self, generators, matrices, field, vars_, style):
        self.generators = tuple(generators)
        self.field = field
        self.vars = vars_
        self.style = style  # "meridian-template" | "trefoil"
        self._mats = {}
        for g, m in zip(self.generators, matrices):
            self._mats[g] = m
            self._mats[g.upper()] = mat2_inv_sl2(m)
        one = MultiPoly.const(field, vars_, 1)
        zero = MultiPoly.zero(field, vars_)
        self._identity = [[one, zero], [zero, one]]
        for g, m in zip(self.generators, matrices):
            d = mat2_det(m)
            if not d == one:
                raise SingularInputError(f"generator {g} matrix has det != 1")

    @property
    def identity(self):
        return self._identity

    def matrix_of(self, word):
        word = Word(word)
        acc = self._identity
        for ch in word:
            acc = mat2_mul(acc, self._mats[ch])
        return acc

    def trace_raw(self, word):
        return mat2_tr(self.matrix_of(word))


def meridian_template_rep(generators=("u", "v")):
    """The two-meridian tautological representation over Z[alpha^{+-1}][y]."""
    A = MultiPoly.var(QQ, AY, "alpha")
    Ainv = MultiPoly(QQ, AY, {(-1, 0): Fraction(1)})
    A2inv = MultiPoly(QQ, AY, {(-2, 0): Fraction(1)})
    Y = MultiPoly.var(QQ, AY, "y")
    one = MultiPoly.const(QQ, AY, 1)
    zero = MultiPoly.zero(QQ, AY)
    mu = [[A, one], [zero, Ainv]]
    mv = [[A, zero], [Y - A * A - A2inv, Ainv]]
    return TautRep(generators, [mu, mv], QQ, AY, "meridian-template")


def trefoil_rep():
    """The pinned trefoil representation over Q(j)[s]: a |-> [[s,1],[-(s2+1),-s]],
    b |-> [[-j,0],[0,-j2]]."""
    Qj = NumberField([1, 1, 1], gen_name="j")
    j = Qj.gen()
    vars_ = ("s",)
    S = MultiPoly.var(Qj, vars_, "s")
    one = MultiPoly.const(Qj, vars_, 1)
    zero = MultiPoly.zero(Qj, vars_)
    ma = [[S, one], [-(S * S + one), -S]]
    mb = [[one.scale(-j), zero], [zero, one.scale(-(j * j))]]
    return TautRep(("a", "b"), [ma, mb], Qj, vars_, "trefoil")
