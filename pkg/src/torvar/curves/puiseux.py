"""Newton-Puiseux branch expansions of plane-curve germs.

``branches_at_origin(f, K, N)`` finds every branch of f(u, v) = 0 through
the origin (with v -> 0 along the branch), parametrized u = t**e,
v = v_series(t), with coefficients in a simple extension of Q built on
demand.  Each returned Branch carries the coefficient field, the embedding
of the input field into it, and the ramification index e; parametrizations
are primitive.  The classical Newton polygon recursion drives everything;
once an edge root is simple the series tail comes from a quadratically
convergent Hensel iteration.
"""

from fractions import Fraction
from math import gcd

from ..algebra.multipoly import MultiPoly
from ..algebra.numberfield import QQ, adjoin_root, nf_factor
from ..algebra.series import TruncatedSeries
from ..errors import InsufficientPrecisionError, SingularInputError

UV = ("u", "v")


class Branch:
    """One Puiseux branch cluster: u = u_coeff * t**e, v = series(t).

    ``field`` is a simple extension of Q containing every coefficient;
    ``embed`` maps the germ's input field into it.
    """

    __slots__ = ("field", "e", "u_coeff", "series", "embed")

    def __init__(self, field, e, u_coeff, series, embed):
        self.field = field
        self.e = e
        self.u_coeff = u_coeff
        self.series = series
        self.embed = embed

    def degree_over(self, K):
        dK = getattr(K, "degree", 1)
        dL = getattr(self.field, "degree", 1)
        assert dL % dK == 0
        return dL // dK

    def u_series(self):
        return TruncatedSeries.monomial(self.field, "t", self.e, self.u_coeff)


def newton_polygon_edges(f):
    """Sloped edges of the Newton polygon of f in (u, v).

    Returns (p, q, points) with p, q coprime positive: branches on the edge
    behave like v ~ c u^(q/p), and q*i + p*j is constant on the edge
    (i = u-exponent, j = v-exponent).
    """
    pts = sorted({(e[0], e[1]) for e in f.terms})
    by_i = {}
    for i, j in pts:
        by_i[i] = min(j, by_i.get(i, j))
    cand = sorted(by_i.items())
    hull = []
    for pt in cand:
        hull.append(pt)
        while len(hull) >= 3:
            (i1, j1), (i2, j2), (i3, j3) = hull[-3:]
            # pop the middle point unless the slope strictly increases there
            if (j2 - j1) * (i3 - i2) >= (j3 - j2) * (i2 - i1):
                hull.pop(-2)
            else:
                break
    edges = []
    for (i1, j1), (i2, j2) in zip(hull, hull[1:]):
        if j1 <= j2:
            continue
        di, dj = i2 - i1, j1 - j2
        g = gcd(di, dj)
        p, q = dj // g, di // g
        if q <= 0:
            continue
        level = p * i1 + q * j1
        pts_on = [(i, j) for (i, j) in pts
                  if p * i + q * j == level and j2 <= j <= j1]
        edges.append((p, q, pts_on))
    return edges


def _edge_polynomial(f, p, q, pts_on):
    """phi(z) = sum over edge points of c_{ij} z^((j - j_min) / p), dense."""
    j_min = min(j for _, j in pts_on)
    dense_deg = max((j - j_min) // p for _, j in pts_on)
    dense = [f.field.zero] * (dense_deg + 1)
    for (i, j) in pts_on:
        c = f.terms.get((i, j))
        if c is not None:
            k = (j - j_min) // p
            dense[k] = dense[k] + c
    return dense


def _bezout_for_edge(p, q):
    """(a, b) with b*p - a*q = 1."""
    # extended Euclid on (p, q), p and q coprime
    old_r, r = p, q
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_s, s = s, old_s - quot * s
        old_t, t = t, old_t - quot * t
    # old_s * p + old_t * q = old_r = 1
    b, a = old_s, -old_t
    assert b * p - a * q == 1
    return a, b


def _transform(f, p, q, z0, K):
    """f(z0^a u^p, z0^b u^q (1 + v)) / u^level with b*p - a*q = 1.

    The root z0 of the edge polynomial kills the constant term, so the
    result is again a germ through the origin.
    """
    f = f.change_field(K)
    a, b = _bezout_for_edge(p, q)
    z0a = z0 ** a if a >= 0 else K.inv(z0) ** (-a)
    z0b = z0 ** b if b >= 0 else K.inv(z0) ** (-b)
    vpoly = MultiPoly.const(K, UV, 1) + MultiPoly.var(K, UV, "v")
    pow_cache = {0: MultiPoly.const(K, UV, 1)}

    def vpow(j):
        if j not in pow_cache:
            pow_cache[j] = vpow(j - 1) * vpoly
        return pow_cache[j]

    out = MultiPoly.zero(K, UV)
    for (i, j), c in f.terms.items():
        scale = c * (z0a ** i) * (z0b ** j)
        base = MultiPoly(K, UV, {(p * i + q * j, 0): scale})
        out = out + base * vpow(j)
    w = out.min_degree("u")
    shifted = {(i - w, j): c for (i, j), c in out.terms.items()}
    result = MultiPoly(K, UV, shifted)
    if result.terms.get((0, 0)) is not None:
        raise SingularInputError("edge transform did not vanish (bad root?)")
    return result, z0a, z0b


def _hensel_tail(f, K, N):
    """v(t) with f(t, v(t)) = O(t^N), v(0) = 0; needs df/dv(0,0) != 0."""
    coeffs = f.as_univariate("v")
    series_coeffs = []
    for c in coeffs:
        terms = {Fraction(e[0]): val for e, val in c.terms.items()}
        series_coeffs.append(TruncatedSeries(K, "t", terms, N))
    lin = coeffs[1].terms.get((0,)) if len(coeffs) > 1 else None
    if lin is None or K.is_zero(lin):
        raise SingularInputError("Hensel tail needs a regular germ")
    fprime_coeffs = [series_coeffs[k] * k for k in range(1, len(series_coeffs))]

    def feval(coeff_list, val):
        acc = TruncatedSeries.zero(K, "t", N)
        for c in reversed(coeff_list):
            acc = acc * val + c
        return acc

    v = TruncatedSeries.zero(K, "t", N)
    for _ in range(64):
        fv = feval(series_coeffs, v)
        if not fv.terms:
            return v
        dfv = feval(fprime_coeffs, v)
        v = v - fv * dfv.inverse()
    raise InsufficientPrecisionError("Hensel iteration did not converge",
                                     required_order=2 * N)


def branches_at_origin(f, K, N, depth=0, _gen_counter=None):
    """All branches of f = 0 through the origin, v -> 0, as Branch objects."""
    if depth > 24:
        raise SingularInputError("Newton polygon recursion too deep")
    if _gen_counter is None:
        _gen_counter = [0]
    f = f.change_field(K)
    if f.terms.get((0, 0)) is not None:
        raise SingularInputError("germ does not pass through the origin")
    out = []
    vmin = f.min_degree("v")
    if vmin > 0:
        if depth == 0:
            raise SingularInputError("v divides the germ: line component")
        if vmin > 1:
            raise SingularInputError("non-squarefree germ (v^2 divides)")
        # exact branch v = 0 of the transformed germ
        out.append(Branch(K, 1, K.one, TruncatedSeries.zero(K, "t"), lambda x: x))
        f = MultiPoly(K, UV, {(i, j - 1): c for (i, j), c in f.terms.items()})
        if f.min_degree("v") > 0:  # pragma: no cover
            raise SingularInputError("unexpected repeated axis branch")
        if not f.involves("v"):
            return out
    for p, q, pts_on in newton_polygon_edges(f):
        phi = _edge_polynomial(f, p, q, pts_on)
        _, factors = nf_factor(K, phi)
        for fac, mult in factors:
            if len(fac) == 2 and K.is_zero(fac[0]):
                continue
            _gen_counter[0] += 1
            L, embed, root = adjoin_root(K, fac, gen_name=f"c{_gen_counter[0]}")
            fL = f.map_coefficients(embed, L) if L is not K else f
            f1, z0a, z0b = _transform(fL, p, q, root, L)
            if mult == 1:
                v1 = _hensel_tail(f1, L, Fraction(N))
                subs = [Branch(L, 1, L.one, v1, lambda x: x)]
            else:
                subs = branches_at_origin(f1, L, N, depth + 1, _gen_counter)
            for b in subs:
                # compose embeddings K -> L -> b.field
                if b.field is L:
                    emb_total = embed
                    z0a_b, z0b_b = z0a, z0b
                else:
                    emb_total = (lambda x, e1=embed, e2=b.embed: e2(e1(x)))
                    z0a_b, z0b_b = b.embed(z0a), b.embed(z0b)
                Fld = b.field
                # u  = z0^a (C t^e)^p,  v = z0^b (C t^e)^q (1 + v1(t))
                Cp = z0a_b * b.u_coeff ** p
                shift = TruncatedSeries.monomial(
                    Fld, "t", q * b.e, z0b_b * b.u_coeff ** q)
                vser = shift * (b.series + Fld.one)
                out.append(Branch(Fld, p * b.e, Cp, vser, emb_total))
    return [_primitive(b) for b in out]


def _primitive(branch):
    g = branch.e
    for exp in branch.series.terms:
        if exp.denominator != 1:
            g = 1
            break
        g = gcd(g, int(exp))
    if g <= 1:
        return branch
    new_terms = {e / g: c for e, c in branch.series.terms.items()}
    order = None if branch.series.order is None else branch.series.order / g
    ser = TruncatedSeries(branch.field, "t", new_terms, order)
    return Branch(branch.field, branch.e // g, branch.u_coeff, ser, branch.embed)


def hensel_branch_y(poly, K, x0, y0, N):
    """Smooth x-regular branch at a finite point: x = x0 + t, y = y0 + series.

    ``poly`` is the curve polynomial over Q in (x, y); requires
    dP/dy(x0, y0) != 0 in K.
    """
    pK = poly.change_field(K)
    local = pK.subs({"x": MultiPoly.var(K, ("x", "y"), "x") + K.coerce(x0),
                     "y": MultiPoly.var(K, ("x", "y"), "y") + K.coerce(y0)})
    local = MultiPoly(K, UV, {(e[0], e[1]): c for e, c in local.terms.items()})
    tail = _hensel_tail(local, K, Fraction(N))
    return tail  # y(t) - y0, with x = x0 + t
