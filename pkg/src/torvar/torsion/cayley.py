"""The adjoint twisted complex of a two-generator one-relator presentation,
and its torsion by the exact-complex (alternating determinant) recipe.

Cochain model on the presentation 2-complex, sl2 basis (E, F, H):

    C0 = K^3 --d0--> C1 = K^6 --d1--> C2 = K^3
    d0 = [Ad(u) - I ; Ad(v) - I]          (6 x 3)
    d1 = [Ad(dr/du) | Ad(dr/dv)]          (3 x 6)

d1 d0 = Ad(r) - I = 0 by the Fox fundamental identity.  At an irreducible
non-central point H^0 = 0 and H^1, H^2 are lines; the torsion against the
bases (zeta with dY_mu(zeta) = 1, class of the H-cochain) is the
Porti-normalized peripheral torsion, computed as an alternating ratio of
two determinants once bases are completed.

The same matrices evaluated on Puiseux series give valuations of the
torsion form at places, via the determinant-valuation filtration.
"""

from fractions import Fraction
from itertools import combinations

from ..algebra import linalg
from ..algebra.numberfield import QQ
from ..algebra.series import TruncatedSeries
from ..algebra.seriesmatrix import SeriesMatrix, det_valuation_series
from ..errors import (InsufficientPrecisionError, InvariantViolation,
                      SingularInputError, ZeroDeterminantError)
from ..knots.fox import fox_derivative
from ..knots.words import Word


def mat2_mul(x, a, b):
    return [[a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
            [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]]]


def sl2_adjoint(g):
    """3x3 matrix of Ad(g) on sl2 in the basis (E, F, H)."""
    a, b = g[0][0], g[0][1]
    c, d = g[1][0], g[1][1]
    return [
        [a * a, -b * b, -2 * (a * b)],
        [-(c * c), d * d, 2 * (c * d)],
        [-(a * c), b * d, a * d + b * c],
    ]


class WordMatrices:
    """Word -> 2x2 matrix over an arbitrary commutative coefficient object."""

    def __init__(self, gens, mats, one, zero):
        self._m = {}
        for g, m in zip(gens, mats):
            self._m[g] = m
            self._m[g.upper()] = [[m[1][1], -m[0][1]], [-m[1][0], m[0][0]]]
        self.identity = [[one, zero], [zero, one]]

    def of(self, word):
        acc = self.identity
        for ch in Word(word):
            acc = mat2_mul(None, acc, self._m[ch])
        return acc


def ad_of_group_ring(gre, wm, zero):
    """3x3 matrix of Ad applied to a group-ring element."""
    acc = [[zero for _ in range(3)] for _ in range(3)]
    for w, c in gre.coeffs.items():
        m = sl2_adjoint(wm.of(w))
        for i in range(3):
            for j in range(3):
                acc[i][j] = acc[i][j] + m[i][j] * c
    return acc


def twisted_boundaries(presentation, wm, one, zero):
    """(d0, d1) of the adjoint cochain complex; d0 is 6x3, d1 is 3x6."""
    g1, g2 = presentation.generators
    adu = sl2_adjoint(wm.of(g1))
    adv = sl2_adjoint(wm.of(g2))
    d0 = []
    for block in (adu, adv):
        for i in range(3):
            row = [block[i][j] - (one if i == j else zero) for j in range(3)]
            d0.append(row)
    r = presentation.relator
    dru = ad_of_group_ring(fox_derivative(r, g1), wm, zero)
    drv = ad_of_group_ring(fox_derivative(r, g2), wm, zero)
    d1 = [dru[i][:] + drv[i][:] for i in range(3)]
    return d0, d1


def cocycle_at_word(zeta6, word, presentation, wm, zero):
    """Value of the cocycle (zeta_u, zeta_v) at an arbitrary word (3-vector)."""
    g1, g2 = presentation.generators
    du = ad_of_group_ring(fox_derivative(Word(word), g1), wm, zero)
    dv = ad_of_group_ring(fox_derivative(Word(word), g2), wm, zero)
    out = []
    for i in range(3):
        acc = zero
        for j in range(3):
            acc = acc + du[i][j] * zeta6[j] + dv[i][j] * zeta6[3 + j]
        out.append(acc)
    return out


def sl2_from_coords(vec):
    """(e, f, h) coordinates -> [[h, e], [f, -h]]."""
    e, f, h = vec
    return [[h, e], [f, -h]]


def trace_pairing(vec, rho_mu, half):
    """Tr(zeta(mu) * rho0(mu)) with rho0 the trace-free part."""
    zmat = sl2_from_coords(vec)
    tr = rho_mu[0][0] + rho_mu[1][1]
    rho0 = [[rho_mu[0][0] - tr * half, rho_mu[0][1]],
            [rho_mu[1][0], rho_mu[1][1] - tr * half]]
    prod = mat2_mul(None, zmat, rho0)
    return prod[0][0] + prod[1][1]


# ---------------------------------------------------------------------------
# pointwise torsion over a scalar field
# ---------------------------------------------------------------------------

class PointComplex:
    """The twisted complex at an exact algebraic point.

    ``sigma`` is the boundary-torus 2-cycle (a GroupRingElement); the H^2
    basis is normalized so that pairing against sigma and the peripheral
    invariant vector gives 1, which pins the Porti torsion convention.
    """

    def __init__(self, presentation, gens_matrices, K, mu_word, sigma=None):
        self.K = K
        self.pres = presentation
        self.wm = WordMatrices(presentation.generators, gens_matrices,
                               K.one, K.zero)
        self.d0, self.d1 = twisted_boundaries(presentation, self.wm, K.one, K.zero)
        self.mu_word = Word(mu_word)
        self.sigma = sigma
        self._checks()

    def _checks(self):
        K = self.K
        prod = linalg.mat_mul(K, self.d1, self.d0)
        if any(not K.is_zero(e) for row in prod for e in row):
            raise InvariantViolation("d1 d0 != 0 at the point")
        if linalg.rank(K, self.d0) != 3:
            raise SingularInputError("H^0 != 0: point is reducible or central")
        if linalg.rank(K, self.d1) != 2:
            raise SingularInputError("H^2 is not a line at this point")

    def h1_cocycle(self):
        """A kernel vector of d1 with nonzero trace pairing, normalized to 1."""
        K = self.K
        kernel = linalg.nullspace(K, self.d1)
        rho_mu = self.wm.of(self.mu_word)
        half = K.coerce(Fraction(1, 2))
        for vec in kernel + [[a + b for a, b in zip(kernel[0], k)] for k in kernel[1:]]:
            zmu = cocycle_at_word(vec, self.mu_word, self.pres, self.wm, K.zero)
            pairing = trace_pairing(zmu, rho_mu, half)
            if not K.is_zero(pairing):
                inv = K.inv(pairing)
                return [x * inv for x in vec]
        raise SingularInputError(
            "dY_mu vanishes on H^1 at this point (critical point of the trace)")

    def _rho0_mu(self):
        K = self.K
        m = self.wm.of(self.mu_word)
        tr = m[0][0] + m[1][1]
        half = K.coerce(Fraction(1, 2))
        return [[m[0][0] - tr * half, m[0][1]],
                [m[1][0], m[1][1] - tr * half]]

    def boundary_functional(self):
        """L(v) = Tr(sl2(Ad(sigma) v) * rho_0(mu)) on 2-cochain values."""
        K = self.K
        if self.sigma is None:
            raise SingularInputError("boundary 2-cycle required for the torsion")
        msig = ad_of_group_ring(self.sigma, self.wm, K.zero)
        rho0 = self._rho0_mu()

        def L(vec):
            w = [sum((msig[i][j] * vec[j] for j in range(3)), K.zero)
                 for i in range(3)]
            mat = sl2_from_coords(w)
            prod = mat2_mul(None, mat, rho0)
            return prod[0][0] + prod[1][1]

        return L

    def h2_vector(self):
        """The H^2 basis: a 2-cochain value with boundary pairing 1."""
        K = self.K
        L = self.boundary_functional()
        for idx in (2, 0, 1):
            vec = [K.one if i == idx else K.zero for i in range(3)]
            val = L(vec)
            if not K.is_zero(val):
                inv = K.inv(val)
                return [x * inv for x in vec]
        raise SingularInputError("boundary pairing vanished on all of C^2")

    def torsion(self):
        """Alternating determinant ratio det2 / det1 with the fixed bases."""
        K = self.K
        zeta = self.h1_cocycle()
        h2 = self.h2_vector()
        b1 = [[self.d0[i][j] for i in range(6)] for j in range(3)]  # columns
        for s1, s2 in combinations(range(6), 2):
            e1 = [K.one if i == s1 else K.zero for i in range(6)]
            e2 = [K.one if i == s2 else K.zero for i in range(6)]
            cols = b1 + [zeta, e1, e2]
            m1 = [[cols[j][i] for j in range(6)] for i in range(6)]
            det1 = linalg.det(K, m1)
            if K.is_zero(det1):
                continue
            d1s1 = [self.d1[i][s1] for i in range(3)]
            d1s2 = [self.d1[i][s2] for i in range(3)]
            m2 = [[d1s1[i], d1s2[i], h2[i]] for i in range(3)]
            det2 = linalg.det(K, m2)
            if K.is_zero(det2):
                continue
            return det2 * K.inv(det1)
        raise SingularInputError("no admissible basis completion found")


# ---------------------------------------------------------------------------
# torsion-form valuation along a place (series coefficients)
# ---------------------------------------------------------------------------

def _series_scalar(field, var, x, order=None):
    return TruncatedSeries.from_scalar(field, var, x, order)


class SeriesComplex:
    """The twisted complex along a parametrized place of the cover.

    ``gens_matrices`` are 2x2 matrices of TruncatedSeries in the place
    uniformizer.  The H^1 basis is the tangent cocycle (d rho / dt) rho^-1,
    so the torsion scalar is the coefficient f in tor = f dt and its
    valuation is the vanishing order of the torsion form at the place.
    """

    def __init__(self, presentation, gens_matrices, K, mu_word, sigma, var="t"):
        self.K = K
        self.var = var
        self.pres = presentation
        one = _series_scalar(K, var, 1)
        zero = TruncatedSeries.zero(K, var)
        self.wm = WordMatrices(presentation.generators, gens_matrices, one, zero)
        self.zero = zero
        self.one = one
        self.mu_word = Word(mu_word)
        self.sigma = sigma
        self.d0, self.d1 = twisted_boundaries(presentation, self.wm, one, zero)

    def _h2_unscaled(self):
        """(basis 2-cochain value, its boundary pairing series)."""
        msig = ad_of_group_ring(self.sigma, self.wm, self.zero)
        m = self.wm.of(self.mu_word)
        tr = m[0][0] + m[1][1]
        half = Fraction(1, 2)
        rho0 = [[m[0][0] - tr * half, m[0][1]],
                [m[1][0], m[1][1] - tr * half]]
        for idx in (2, 0, 1):
            vec = [self.one if i == idx else self.zero for i in range(3)]
            w = [sum((msig[i][j] * vec[j] for j in range(3)), self.zero)
                 for i in range(3)]
            mat = sl2_from_coords(w)
            prod = mat2_mul(None, mat, rho0)
            pairing = prod[0][0] + prod[1][1]
            if pairing.terms:
                return vec, pairing
        raise InsufficientPrecisionError(
            "boundary pairing zero to truncation along the place")

    def tangent_cocycle(self):
        out = []
        for g in self.pres.generators:
            m = self.wm.of(g)
            minv = self.wm.of(g.upper())
            dm = [[m[i][j].derivative() for j in range(2)] for i in range(2)]
            prod = mat2_mul(None, dm, minv)
            # sl2 coordinates (e, f, h)
            out.extend([prod[0][1], prod[1][0], prod[0][0]])
        # cocycle check to available truncation
        for i in range(3):
            acc = self.zero
            for j in range(6):
                acc = acc + self.d1[i][j] * out[j]
            if acc.terms:
                raise InvariantViolation("tangent cocycle is not in ker d1")
        return out

    def torsion_valuation(self):
        """Valuation of f where tor = f dt along the place."""
        zeta = self.tangent_cocycle()
        h2_vec, pairing = self._h2_unscaled()
        v_pair = pairing.valuation()
        b1 = [[self.d0[i][j] for i in range(6)] for j in range(3)]
        last_error = None
        for s1, s2 in combinations(range(6), 2):
            e1 = [self.one if i == s1 else self.zero for i in range(6)]
            e2 = [self.one if i == s2 else self.zero for i in range(6)]
            cols = b1 + [zeta, e1, e2]
            m1 = [[cols[j][i] for j in range(6)] for i in range(6)]
            d1s1 = [self.d1[i][s1] for i in range(3)]
            d1s2 = [self.d1[i][s2] for i in range(3)]
            m2 = [[d1s1[i], d1s2[i], h2_vec[i]] for i in range(3)]
            try:
                v1, _ = det_valuation_series(SeriesMatrix(self.K, self.var, m1))
                v2, _ = det_valuation_series(SeriesMatrix(self.K, self.var, m2))
            except (ZeroDeterminantError, InsufficientPrecisionError) as err:
                last_error = err
                continue
            return int(v2) - int(v_pair) - int(v1)
        if last_error is not None:
            raise last_error
        raise SingularInputError("no admissible basis completion along the place")
