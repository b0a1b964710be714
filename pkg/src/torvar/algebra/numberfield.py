"""Exact scalar arithmetic: the rationals and simple number fields Q(theta).

Scalars are either ``fractions.Fraction`` (field ``QQ``) or ``NFElement``
(field ``NumberField``).  Number fields are always simple extensions of Q
with a monic rational minimal polynomial, checked irreducible at
construction.  Composites are handled by building a primitive element
(:func:`adjoin_root`), never by nesting.

The univariate polynomial helpers in this module work on dense coefficient
lists over any of these fields; they exist so that field construction,
Trager factorization and root finding do not depend on the sparse
multivariate machinery built on top of them.
"""

from fractions import Fraction

from ..errors import SingularInputError, UnsupportedFieldError
from .factor import factor_univariate_q, is_irreducible_q


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------

class RationalField:
    """The field Q; elements are Fraction."""

    degree = 1
    name = "Q"

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, NFElement):
            return x.as_rational()
        raise TypeError(f"cannot coerce {x!r} into Q")

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def is_zero(self, x):
        return x == 0

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverting zero in Q")
        return 1 / Fraction(x)

    def random(self, rng, size=6):
        return Fraction(rng.randint(-size, size), rng.randint(1, size))

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


QQ = RationalField()


class NFElement:
    """Element of a NumberField, stored as a coefficient vector over Q."""

    __slots__ = ("field", "vec")

    def __init__(self, field, vec):
        self.field = field
        self.vec = tuple(vec)

    # -- arithmetic ---------------------------------------------------

    def _coerce_other(self, other):
        if isinstance(other, NFElement):
            if other.field is not self.field and other.field != self.field:
                raise TypeError("elements of different number fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.coerce(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce_other(other)
        if other is NotImplemented:
            return NotImplemented
        return NFElement(self.field, tuple(a + b for a, b in zip(self.vec, other.vec)))

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, tuple(-a for a in self.vec))

    def __sub__(self, other):
        other = self._coerce_other(other)
        if other is NotImplemented:
            return NotImplemented
        return NFElement(self.field, tuple(a - b for a, b in zip(self.vec, other.vec)))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce_other(other)
        if other is NotImplemented:
            return NotImplemented
        return self.field._mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce_other(other)
        if other is NotImplemented:
            return NotImplemented
        return self * self.field.inv(other)

    def __rtruediv__(self, other):
        return self.field.coerce(other) / self

    def __pow__(self, n):
        if n < 0:
            return self.field.inv(self) ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparisons / hashing ---------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.vec[0] == other and all(c == 0 for c in self.vec[1:])
        if isinstance(other, NFElement):
            return self.field == other.field and self.vec == other.vec
        return NotImplemented

    def __bool__(self):
        return any(c != 0 for c in self.vec)

    def __hash__(self):
        return hash((self.field.minpoly, self.vec))

    def is_rational(self):
        return all(c == 0 for c in self.vec[1:])

    def as_rational(self):
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.vec[0]

    def __repr__(self):
        name = self.field.gen_name
        parts = []
        for i, c in enumerate(self.vec):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                mono = name if i == 1 else f"{name}^{i}"
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts) if parts else "0"


class NumberField:
    """Q(theta) for theta with a given monic irreducible minimal polynomial.

    ``minpoly`` is a dense coefficient tuple (constant first) of length
    degree + 1 with last entry 1.
    """

    def __init__(self, minpoly, gen_name="theta", _trusted=False):
        coeffs = [Fraction(c) for c in minpoly]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if len(coeffs) < 3:
            raise SingularInputError("number field needs a minimal polynomial of degree >= 2")
        lead = coeffs[-1]
        if lead != 1:
            coeffs = [c / lead for c in coeffs]
        if not _trusted and not is_irreducible_q(coeffs):
            raise SingularInputError(
                f"minimal polynomial {coeffs} is reducible over Q")
        self.minpoly = tuple(coeffs)
        self.degree = len(coeffs) - 1
        self.gen_name = gen_name
        d = self.degree
        # theta^k for k = d .. 2d-2, reduced mod minpoly
        theta_d = [-c for c in coeffs[:-1]]  # theta^d
        powers = [tuple(theta_d)]
        current = theta_d
        for _ in range(d - 2):
            top = current[-1]
            shifted = [Fraction(0)] + current[:-1]
            current = [a + top * td for a, td in zip(shifted, theta_d)]
            powers.append(tuple(current))
        self._powers = powers

    # -- structural ----------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.minpoly == other.minpoly

    def __hash__(self):
        return hash(self.minpoly)

    def __repr__(self):
        return f"Q({self.gen_name})[min poly {list(self.minpoly)}]"

    @property
    def name(self):
        return f"Q({self.gen_name})"

    # -- element construction ------------------------------------------

    def element(self, vec):
        vec = list(vec)
        if len(vec) > self.degree:
            raise ValueError("vector longer than field degree")
        vec += [Fraction(0)] * (self.degree - len(vec))
        return NFElement(self, [Fraction(c) for c in vec])

    def gen(self):
        return self.element([0, 1])

    @property
    def zero(self):
        return self.element([0])

    @property
    def one(self):
        return self.element([1])

    def coerce(self, x):
        if isinstance(x, NFElement):
            if x.field == self:
                return x
            if x.is_rational():
                return self.element([x.as_rational()])
            raise TypeError(f"cannot coerce {x!r} into {self!r}")
        if isinstance(x, (int, Fraction)):
            return self.element([Fraction(x)])
        raise TypeError(f"cannot coerce {x!r} into {self!r}")

    def is_zero(self, x):
        return not self.coerce(x)

    # -- arithmetic ------------------------------------------------------

    def _mul(self, a, b):
        d = self.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, ai in enumerate(a.vec):
            if ai == 0:
                continue
            for j, bj in enumerate(b.vec):
                if bj == 0:
                    continue
                prod[i + j] += ai * bj
        out = prod[:d]
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c == 0:
                continue
            pw = self._powers[k - d]
            out = [o + c * p for o, p in zip(out, pw)]
        return NFElement(self, out)

    def inv(self, x):
        x = self.coerce(x)
        if not x:
            raise ZeroDivisionError(f"inverting zero in {self!r}")
        # extended Euclid on (vec as poly, minpoly) over Q
        a = list(x.vec)
        while a and a[-1] == 0:
            a.pop()
        b = list(self.minpoly)
        s0, s1 = [Fraction(1)], []
        r0, r1 = a, b
        while r1:
            q, r = _q_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _q_sub(s0, _q_mul(q, s1))
        # r0 = gcd (a constant, since minpoly irreducible and x != 0)
        if len(r0) != 1:
            raise SingularInputError("non-invertible element: reducible modulus?")
        c = r0[0]
        vec = [si / c for si in s0]
        return self.element(vec[: self.degree])

    def random(self, rng, size=4):
        return self.element([Fraction(rng.randint(-size, size), rng.randint(1, 3))
                             for _ in range(self.degree)])

    def minpoly_of(self, x):
        """Minimal polynomial over Q of an arbitrary element (dense, monic)."""
        x = self.coerce(x)
        d = self.degree
        rows = []
        p = self.one
        for _ in range(d + 1):
            rows.append(list(p.vec))
            p = p * x
        # find least k with 1, x, ..., x^k linearly dependent
        for k in range(1, d + 1):
            dep = _q_linear_dependency(rows[: k + 1])
            if dep is not None:
                lead = dep[-1]
                return tuple(c / lead for c in dep)
        raise SingularInputError("element has no minimal polynomial (bug)")


# ---------------------------------------------------------------------------
# dense univariate helpers over Q (Fraction lists, constant coefficient first)
# ---------------------------------------------------------------------------

def _q_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _q_sub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else Fraction(0)) - (b[i] if i < len(b) else Fraction(0))
           for i in range(n)]
    return _q_trim(out)


def _q_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _q_trim(out)


def _q_divmod(a, b):
    a = list(a)
    b = list(b)
    _q_trim(a), _q_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    lead = b[-1]
    while len(a) >= len(b):
        c = a[-1] / lead
        k = len(a) - len(b)
        q[k] = c
        for i, bi in enumerate(b):
            a[k + i] -= c * bi
        _q_trim(a)
        if not a:
            break
    return _q_trim(q), a


def _q_linear_dependency(rows):
    """Return coefficients c with sum(c_i * rows_i) = 0, c[-1] != 0, else None."""
    k = len(rows) - 1
    n = len(rows[0])
    # solve rows[k] = sum_{i<k} c_i rows[i]
    mat = [[rows[i][j] for i in range(k)] for j in range(n)]
    rhs = [rows[k][j] for j in range(n)]
    sol = _q_solve(mat, rhs)
    if sol is None:
        return None
    return [-c for c in sol] + [Fraction(1)]


def _q_solve(mat, rhs):
    """Solve an overdetermined rational system exactly; None if inconsistent."""
    m = len(mat)
    n = len(mat[0]) if m else 0
    aug = [row[:] + [rhs[i]] for i, row in enumerate(mat)]
    piv_cols = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        scale = aug[r][c]
        aug[r] = [v / scale for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n] != 0:
            return None
    sol = [Fraction(0)] * n
    for i, c in enumerate(piv_cols):
        sol[c] = aug[i][n]
    # check free columns genuinely absent from equations
    for i in range(m):
        total = sum(mat[i][j] * sol[j] for j in range(n))
        if total != rhs[i]:
            return None
    return sol


# ---------------------------------------------------------------------------
# dense univariate helpers over an arbitrary field
# ---------------------------------------------------------------------------

def poly_trim(field, p):
    p = list(p)
    while p and field.is_zero(p[-1]):
        p.pop()
    return p


def poly_add(field, a, b):
    n = max(len(a), len(b))
    z = field.zero
    out = [(a[i] if i < len(a) else z) + (b[i] if i < len(b) else z) for i in range(n)]
    return poly_trim(field, out)


def poly_sub(field, a, b):
    n = max(len(a), len(b))
    z = field.zero
    out = [(a[i] if i < len(a) else z) - (b[i] if i < len(b) else z) for i in range(n)]
    return poly_trim(field, out)


def poly_mul(field, a, b):
    if not a or not b:
        return []
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if field.is_zero(ai):
            continue
        for j, bj in enumerate(b):
            out[i + j] = out[i + j] + ai * bj
    return poly_trim(field, out)


def poly_divmod(field, a, b):
    a = poly_trim(field, list(a))
    b = poly_trim(field, list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [field.zero] * max(0, len(a) - len(b) + 1)
    inv_lead = field.inv(b[-1])
    while len(a) >= len(b):
        c = a[-1] * inv_lead
        k = len(a) - len(b)
        q[k] = c
        for i, bi in enumerate(b):
            a[k + i] = a[k + i] - c * bi
        a = poly_trim(field, a)
        if not a:
            break
    return poly_trim(field, q), a


def poly_gcd(field, a, b):
    """Monic gcd over a field."""
    a = poly_trim(field, list(a))
    b = poly_trim(field, list(b))
    while b:
        _, r = poly_divmod(field, a, b)
        a, b = b, r
    if not a:
        return []
    inv_lead = field.inv(a[-1])
    return [c * inv_lead for c in a]


def poly_eval(field, p, x):
    acc = field.zero
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_derivative(field, p):
    return poly_trim(field, [p[i] * i for i in range(1, len(p))])


def poly_monic(field, p):
    p = poly_trim(field, list(p))
    if not p:
        return p
    inv_lead = field.inv(p[-1])
    return [c * inv_lead for c in p]


def poly_squarefree_part(field, p):
    dp = poly_derivative(field, p)
    if not dp:
        raise SingularInputError("constant or inseparable polynomial")
    g = poly_gcd(field, p, dp)
    q, r = poly_divmod(field, p, g)
    assert not r
    return q


def resultant_univariate(field, a, b):
    """Resultant of two univariate polynomials over a field, exact."""
    a = poly_trim(field, list(a))
    b = poly_trim(field, list(b))
    if not a or not b:
        return field.zero
    res = field.one
    while True:
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            return res * b[0] ** da
        _, r = poly_divmod(field, a, b)
        r = poly_trim(field, r)
        if not r:
            return field.zero
        dr = len(r) - 1
        sign = field.one if (da * db) % 2 == 0 else -field.one
        res = res * sign * b[-1] ** (da - dr)
        a, b = b, r


# ---------------------------------------------------------------------------
# resultants Res_theta(m(theta), G(z, theta)) over Q, by evaluation/interpolation
# ---------------------------------------------------------------------------

def _lagrange_interpolate(points):
    """Dense Q[z] polynomial through the given (x, y) Fraction pairs."""
    result = []
    for i, (xi, yi) in enumerate(points):
        num = [Fraction(1)]
        den = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if i == j:
                continue
            num = _q_mul(num, [-xj, Fraction(1)])
            den *= (xi - xj)
        scale = yi / den
        term = [c * scale for c in num]
        n = max(len(result), len(term))
        result = [(result[k] if k < len(result) else Fraction(0))
                  + (term[k] if k < len(term) else Fraction(0)) for k in range(n)]
    return _q_trim(result)


def resultant_theta(m_coeffs, poly_z_major):
    """Res_theta(m(theta), G(z, theta)) over Q, by evaluation and interpolation.

    ``poly_z_major[i]`` is the theta-coefficient vector of the z**i
    coefficient (the natural shape of a K[z] polynomial with NFElement
    coefficients).  Returns a dense Q[z] coefficient list.  Because m is
    monic, Res_theta(m, G) = prod_i G(z, theta_i) over the roots of m, so
    evaluation at z-points commutes with the resultant even when the
    theta-degree of G drops at special points.
    """
    m = [Fraction(c) for c in m_coeffs]
    rows = [list(map(Fraction, vec)) for vec in poly_z_major]
    if not rows:
        return []
    theta_deg = max(len(v) for v in rows)
    # transpose to theta-major: G[j] = Q[z] coefficient of theta**j
    G = []
    for j in range(theta_deg):
        G.append([v[j] if j < len(v) else Fraction(0) for v in rows])
    while G and not any(G[-1]):
        G.pop()
    if not G:
        return []
    deg_z = max(len(_q_trim(list(c))) - 1 for c in G if any(c))
    bound = (len(m) - 1) * max(deg_z, 0) + 1
    points = []
    x = 0
    while len(points) < bound + 1:
        xq = Fraction(x)
        gz = _q_trim([_q_eval(c, xq) for c in G])
        val = resultant_univariate(QQ, m, gz)
        points.append((xq, val))
        x = -x + (1 if x <= 0 else 0)  # 0, 1, -1, 2, -2, ...
    return _lagrange_interpolate(points)


def _q_eval(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


# ---------------------------------------------------------------------------
# Trager factorization over a number field, root adjunction
# ---------------------------------------------------------------------------

def _nf_poly_to_theta_rep(K, p):
    """K[y] polynomial -> list over y-degree of theta-coefficient lists."""
    return [list(K.coerce(c).vec) for c in p]


def _shift_poly(K, p, s):
    """p(y + s*theta) for p in K[y]; returns K[y] list."""
    theta = K.gen()
    shift = s * theta
    # Horner: p(y + shift)
    out = [K.coerce(p[-1])]
    for c in reversed(p[:-1]):
        # out * (y + shift) + c
        new = [K.zero] * (len(out) + 1)
        for i, o in enumerate(out):
            new[i + 1] = new[i + 1] + o
            new[i] = new[i] + o * shift
        new[0] = new[0] + K.coerce(c)
        out = new
    return out


def trager_factor_squarefree(K, f):
    """Irreducible factorization over K = Q(theta) of a squarefree f in K[y].

    Returns a list of monic irreducible factors (dense K-coefficient lists).
    Classical norm method: for a good shift s the norm of f(y - s*theta) is
    squarefree over Q; its rational factors pull back through gcds.
    """
    f = poly_monic(K, f)
    if len(f) <= 1:
        raise SingularInputError("cannot factor a constant")
    if len(f) == 2:
        return [f]
    for s in _shift_candidates():
        shifted = _shift_poly(K, f, -s)          # roots beta + s*theta
        norm = _q_trim(resultant_theta(K.minpoly, [list(c.vec) for c in shifted]))
        d_norm = poly_derivative(QQ, norm)
        if len(poly_gcd(QQ, norm, d_norm)) <= 1:
            break
    else:  # pragma: no cover
        raise UnsupportedFieldError("no squarefree norm found")
    _, nfactors = factor_univariate_q(norm)
    out = []
    for coeffs, mult in nfactors:
        assert mult == 1
        ni = [K.coerce(Fraction(c)) for c in coeffs]
        ni_shifted = _shift_poly(K, ni, s)       # N_i(y + s*theta)
        g = poly_gcd(K, f, ni_shifted)
        if len(g) > 1:
            out.append(g)
    assert sum(len(g) - 1 for g in out) == len(f) - 1, "Trager factors must cover f"
    return out


def _shift_candidates():
    yield 0
    k = 1
    while k < 50:
        yield k
        yield -k
        k += 1


def nf_factor(field, f):
    """Factor f over Q or a number field into monic irreducibles with multiplicity.

    Returns ``(lead_coeff, [(monic_factor, mult), ...])``.
    """
    f = poly_trim(field, [field.coerce(c) for c in f])
    if not f:
        raise SingularInputError("cannot factor zero")
    lead = f[-1]
    if len(f) == 1:
        return lead, []
    monic = poly_monic(field, f)
    if isinstance(field, RationalField):
        _, factors = factor_univariate_q(monic)
        return lead, [(poly_monic(QQ, list(coeffs)), mult) for coeffs, mult in factors]
    sf = poly_squarefree_part(field, monic) if len(monic) > 2 else monic
    out = []
    rest = monic
    for factor in trager_factor_squarefree(field, sf):
        power = 0
        while True:
            q, r = poly_divmod(field, rest, factor)
            if r:
                break
            rest = q
            power += 1
        assert power >= 1
        out.append((factor, power))
    assert len(rest) == 1, "factorization must exhaust the polynomial"
    return lead, out


def roots_in_field(field, f):
    """Roots of a univariate polynomial lying in the coefficient field itself."""
    _, factors = nf_factor(field, f)
    roots = []
    for fac, mult in factors:
        if len(fac) == 2:
            roots.append((-fac[0], mult))
    return roots


def adjoin_root(field, g, gen_name=None):
    """Extend ``field`` by a root of the irreducible polynomial ``g``.

    Returns ``(L, embed, root)`` where ``embed`` maps old-field elements into
    L and ``root`` is a root of g in L.  For a base field Q this is a plain
    simple extension; over Q(theta) a primitive element gamma = beta +
    c*theta is constructed so L stays a simple extension of Q.
    """
    g = poly_trim(field, [field.coerce(c) for c in g])
    if len(g) < 2:
        raise SingularInputError("cannot adjoin root of a constant")
    if len(g) == 2:
        root = -g[0] / g[-1]
        return field, (lambda x: x), root
    gen_name = gen_name or "theta"
    if isinstance(field, RationalField):
        L = NumberField(poly_monic(QQ, g), gen_name=gen_name)
        return L, (lambda x, L=L: L.coerce(x)), L.gen()
    K = field
    g = poly_monic(K, g)
    for c in _shift_candidates():
        if c == 0:
            continue
        shifted = _shift_poly(K, g, -c)          # g(z - c*theta): roots gamma = beta + c*theta
        G = [list(coeff.vec) for coeff in shifted]
        M = resultant_theta(K.minpoly, G)
        M = _q_trim(M)
        dM = poly_derivative(QQ, M)
        if len(poly_gcd(QQ, M, dM)) <= 1:
            break
    else:  # pragma: no cover
        raise UnsupportedFieldError("no primitive element found")
    if not is_irreducible_q(poly_monic(QQ, M)):
        raise UnsupportedFieldError(
            "primitive-element polynomial unexpectedly reducible")
    L = NumberField(poly_monic(QQ, M), gen_name=gen_name)
    gamma = L.gen()
    # theta inside L: common root of minpoly and w -> g(gamma - c*w)
    m_in_L = [L.coerce(q) for q in K.minpoly]
    # build h(w) = g^(theta->w)(gamma - c w) over L
    h = _eval_bivariate_shift(K, L, g, gamma, c)
    d = poly_gcd(L, m_in_L, h)
    if len(d) != 2:
        raise UnsupportedFieldError("primitive element not separating (retry bug)")
    theta_L = -d[0]
    powers = [L.one]
    for _ in range(K.degree - 1):
        powers.append(powers[-1] * theta_L)

    def embed(x, L=L, powers=powers, K=K):
        x = K.coerce(x)
        acc = L.zero
        for coeff, pw in zip(x.vec, powers):
            acc = acc + coeff * pw
        return acc

    root = gamma - c * theta_L
    # sanity: root satisfies embedded g
    acc = L.zero
    for coeff in reversed(g):
        acc = acc * root + embed(coeff)
    assert not acc, "adjoined root fails its polynomial"
    return L, embed, root


def _eval_bivariate_shift(K, L, g, gamma, c):
    """h(w) = sum_i  g_i(theta->w) * (gamma - c*w)**i  as an L[w] list."""
    base = [gamma, L.coerce(-c)]
    pw = [L.one]
    h = []
    for i, coeff in enumerate(g):
        if i > 0:
            pw = poly_mul(L, pw, base)
        ci = K.coerce(coeff)
        ci_w = [L.coerce(q) for q in ci.vec]  # theta -> w
        term = poly_mul(L, ci_w, pw)
        h = poly_add(L, h, term)
    return h


def sqrt_in_field(field, c):
    """A square root of c in the field, or None."""
    c = field.coerce(c)
    if field.is_zero(c):
        return field.zero
    roots = roots_in_field(field, [-c, field.zero, field.one])
    return roots[0][0] if roots else None
