"""Trace functions: symmetric rewriting in x = alpha + 1/alpha, and the
recursive reduction of arbitrary word traces to the three basic traces."""

from fractions import Fraction
from functools import lru_cache

from ..algebra.multipoly import MultiPoly, divmod_univariate, gcd_multipoly
from ..algebra.numberfield import QQ
from ..errors import InvariantViolation, SingularInputError
from ..knots.words import Word
from .tautrep import AY

XY = ("x", "y")
TRACE_VARS = ("Yu", "Yv", "Yuv")


@lru_cache(maxsize=None)
def power_sum_poly(k):
    """S_k(x) with alpha^k + alpha^-k = S_k(alpha + 1/alpha); S_0 = 2, S_1 = x."""
    x = MultiPoly.var(QQ, ("x",), "x")
    if k == 0:
        return MultiPoly.const(QQ, ("x",), 2)
    if k == 1:
        return x
    return x * power_sum_poly(k - 1) - power_sum_poly(k - 2)


def alpha_symmetric_to_xy(p):
    """Rewrite an alpha-symmetric Laurent polynomial in (alpha, y) as a
    polynomial in (x, y); raises InvariantViolation on asymmetry."""
    if p.vars != AY:
        p = p.extend_vars(AY)
    by_alpha = {}
    for (ea, ey), c in p.terms.items():
        by_alpha.setdefault(ea, {})[(ey,)] = c
    coeffs = {k: MultiPoly(QQ, ("y",), t) for k, t in by_alpha.items()}
    out = MultiPoly.zero(QQ, XY)
    seen = set()
    for k in sorted(coeffs, key=abs, reverse=True):
        if k in seen:
            continue
        seen.add(k)
        ck = coeffs[k]
        if k == 0:
            out = out + ck.extend_vars(XY)
            continue
        cmk = coeffs.get(-k, MultiPoly.zero(QQ, ("y",)))
        seen.add(-k)
        if not ck == cmk:
            raise InvariantViolation(
                f"polynomial not symmetric under alpha -> 1/alpha at degree {k}")
        out = out + ck.extend_vars(XY) * power_sum_poly(abs(k)).extend_vars(XY)
    return out


def plane_monic_in_y(p):
    """Scale so the leading y-coefficient is 1; requires it to be constant."""
    lead = p.as_univariate("y")[-1]
    if not lead.is_constant():
        raise SingularInputError("polynomial is not monic-able in y")
    c = lead.constant_value()
    return p.scale(p.field.inv(c))


def reduce_mod_plane(p, plane):
    """Remainder of p modulo the plane polynomial, dividing in y.

    Works for p over (x, y) or (x, y, alpha); the plane polynomial must have
    constant leading y-coefficient.
    """
    plane = plane.extend_vars(p.vars) if plane.vars != p.vars else plane
    monic = plane_monic_in_y_generic(plane)
    _, r = divmod_univariate(p, monic, "y")
    return r


def plane_monic_in_y_generic(p):
    coeffs = p.as_univariate("y")
    lead = coeffs[-1]
    if not lead.is_constant():
        raise SingularInputError("leading y-coefficient is not constant")
    return p.scale(p.field.inv(lead.constant_value()))


def trace_of_word(rep, word, plane=None):
    """Trace of the represented word as a polynomial in (x, y).

    With ``plane`` given, the result is reduced modulo the curve polynomial.
    Only meaningful for the meridian template; the trefoil has its own
    coordinate (see trefoil_trace_in_x).
    """
    if rep.style != "meridian-template":
        raise SingularInputError("trace_of_word in (x, y) needs the meridian template")
    raw = rep.trace_raw(word)
    sym = alpha_symmetric_to_xy(raw)
    if plane is not None:
        sym = reduce_mod_plane(sym, plane)
    return sym


def trefoil_trace_in_x(rep, word):
    """Trefoil traces, rewritten in x = trace of the meridian a*b^-1.

    x = (j - j^2) s, so s = (j^2 - j)/3 * x; traces of group elements are
    symmetric functions that land in Q[x], which is asserted.
    """
    raw = rep.trace_raw(word)
    K = rep.field
    j = K.gen()
    s_of_x = MultiPoly.var(K, ("x",), "x").scale((j * j - j) / 3)
    out = raw.subs({"s": s_of_x})
    rational = {}
    for exps, c in out.terms.items():
        if not c.is_rational():
            raise InvariantViolation(f"trefoil trace not rational in x: {out!r}")
        rational[exps] = c.as_rational()
    return MultiPoly(QQ, ("x",), rational)


def _canonical_rotation(letters):
    best = letters
    for i in range(1, len(letters)):
        rot = letters[i:] + letters[:i]
        if rot < best:
            best = rot
    return best


def trace_reduce(word, generators=("u", "v")):
    """Reduce Tr(word) to a polynomial in (Yu, Yv, Yuv) via the trace relation
    Tr(AB) + Tr(AB^-1) = Tr(A)Tr(B) and Cayley-Hamilton."""
    g1, g2 = generators
    Yu = MultiPoly.var(QQ, TRACE_VARS, "Yu")
    Yv = MultiPoly.var(QQ, TRACE_VARS, "Yv")
    Yuv = MultiPoly.var(QQ, TRACE_VARS, "Yuv")
    base = {g1: Yu, g2: Yv}

    cache = {}

    def tr(w):
        w = Word(w).cyclic_reduction()
        s = _canonical_rotation(w.letters) if w.letters else ""
        if s in cache:
            return cache[s]
        result = _tr_uncached(s)
        cache[s] = result
        return result

    def _tr_uncached(s):
        if not s:
            return MultiPoly.const(QQ, TRACE_VARS, 2)
        if len(s) == 1:
            if s.islower():
                return base[s]
            return base[s.lower()]  # Tr(A^-1) = Tr(A)
        # double letter: Tr(x x w) = Tr(x) Tr(x w) - Tr(w)
        for i in range(len(s)):
            a, b = s[i], s[(i + 1) % len(s)]
            if a == b:
                rot = s[i:] + s[:i]  # starts with the double letter
                head, rest = rot[0], rot[2:]
                return tr(head) * tr(rot[1:]) - tr(rest)
        # inverse letter: Tr(X w) = Tr(x) Tr(w) - Tr(x w)
        for i, ch in enumerate(s):
            if ch.isupper():
                rot = s[i:] + s[:i]
                rest = rot[1:]
                return tr(ch.lower()) * tr(rest) - tr(ch.lower() + rest)
        # positive alternating word: (g1 g2)^k up to rotation
        if len(s) % 2:
            raise InvariantViolation(f"unexpected irreducible trace word {s!r}")
        k = len(s) // 2
        return _chebyshev_trace(k, Yuv)

    def _chebyshev_trace(k, t):
        # Tr(A^k) = S_k(Tr A)
        two = MultiPoly.const(QQ, TRACE_VARS, 2)
        if k == 0:
            return two
        prev, cur = two, t
        for _ in range(k - 1):
            prev, cur = cur, t * cur - prev
        return cur

    return tr(word)


def trace_reduce_check(rep, word, plane):
    """trace_reduce evaluated at (x, x, y) must equal trace_of_word mod plane."""
    reduced = trace_reduce(word, rep.generators)
    x = MultiPoly.var(QQ, XY, "x")
    y = MultiPoly.var(QQ, XY, "y")
    via_relation = reduced.subs({"Yu": x, "Yv": x, "Yuv": y})
    direct = trace_of_word(rep, word)
    diff = via_relation - direct
    if plane is None:
        return diff.is_zero()
    return reduce_mod_plane(diff, plane).is_zero()


def commutator_trace_witness(generators=("u", "v")):
    """Delta_{u,v} = Yu^2 + Yv^2 + Yuv^2 - Yu Yv Yuv - 4 = Tr[u,v] - 2,
    specialized to Yu = Yv = x, Yuv = y."""
    x = MultiPoly.var(QQ, XY, "x")
    y = MultiPoly.var(QQ, XY, "y")
    return x * x + x * x + y * y - x * x * y - 4
