"""Sparse multivariate (Laurent-capable) polynomials over exact scalar fields.

Exponent tuples may contain negative entries, which is how the eigenvalue
ring Z[alpha^{+-1}][y] is represented; operations that require honest
polynomials (division, gcd, resultants, factorization) insist on
nonnegative exponents and callers clear Laurent units first with
:meth:`MultiPoly.laurent_split`.
"""

from fractions import Fraction

from ..errors import SingularInputError
from .factor import factor_terms_q
from .numberfield import QQ, RationalField
from .series import TruncatedSeries


class MultiPoly:
    __slots__ = ("field", "vars", "terms")

    def __init__(self, field, vars_, terms):
        self.field = field
        self.vars = tuple(vars_)
        clean = {}
        nv = len(self.vars)
        for exps, c in terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nv:
                raise ValueError(f"exponent tuple {exps} does not match vars {self.vars}")
            c = field.coerce(c)
            if not field.is_zero(c):
                clean[exps] = clean.get(exps, field.zero) + c
                if field.is_zero(clean[exps]):
                    del clean[exps]
        self.terms = clean

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, field, vars_):
        return cls(field, vars_, {})

    @classmethod
    def const(cls, field, vars_, value):
        return cls(field, vars_, {(0,) * len(vars_): value})

    @classmethod
    def var(cls, field, vars_, name, power=1):
        idx = tuple(vars_).index(name)
        exps = tuple(power if i == idx else 0 for i in range(len(vars_)))
        return cls(field, vars_, {exps: field.one})

    @classmethod
    def from_univariate(cls, field, vars_, name, coeffs):
        """Build sum coeffs[i] * name**i where coeffs are MultiPoly or scalars."""
        idx = tuple(vars_).index(name)
        terms = {}
        for i, c in enumerate(coeffs):
            if isinstance(c, MultiPoly):
                if c.vars != tuple(vars_):
                    c = c.extend_vars(vars_)
                for exps, cc in c.terms.items():
                    new = list(exps)
                    new[idx] += i
                    key = tuple(new)
                    terms[key] = terms.get(key, field.zero) + cc
            else:
                c = field.coerce(c)
                if field.is_zero(c):
                    continue
                exps = tuple(i if k == idx else 0 for k in range(len(vars_)))
                terms[exps] = terms.get(exps, field.zero) + c
        return cls(field, vars_, terms)

    # -- structure ----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def constant_value(self):
        if not self.terms:
            return self.field.zero
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()))

    def degree(self, name):
        idx = self.vars.index(name)
        return max((exps[idx] for exps in self.terms), default=0)

    def min_degree(self, name):
        idx = self.vars.index(name)
        return min((exps[idx] for exps in self.terms), default=0)

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def involves(self, name):
        idx = self.vars.index(name)
        return any(exps[idx] for exps in self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.field, self.vars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = align(self, other)
        return a.terms == b.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, reverse=True):
            c = self.terms[exps]
            mono = "*".join(f"{v}^{e}" if e != 1 else v
                            for v, e in zip(self.vars, exps) if e)
            if mono:
                parts.append(f"({c})*{mono}")
            else:
                parts.append(f"({c})")
        return " + ".join(parts)

    # -- arithmetic -----------------------------------------------------------

    def _coerce_other(self, other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)) or type(other).__name__ == "NFElement":
            return MultiPoly.const(self.field, self.vars, other)
        return None

    def __add__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        a, b = align(self, o)
        terms = dict(a.terms)
        for e, c in b.terms.items():
            terms[e] = terms.get(e, a.field.zero) + c
        return MultiPoly(a.field, a.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.field, self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        a, b = align(self, o)
        terms = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                prod = c1 * c2
                if key in terms:
                    terms[key] = terms[key] + prod
                else:
                    terms[key] = prod
        return MultiPoly(a.field, a.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.const(self.field, self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        c = self.field.coerce(c)
        return MultiPoly(self.field, self.vars,
                         {e: coeff * c for e, coeff in self.terms.items()})

    # -- views ---------------------------------------------------------------

    def as_univariate(self, name):
        """Dense list of MultiPoly coefficients in the remaining variables."""
        idx = self.vars.index(name)
        rest = tuple(v for v in self.vars if v != name)
        if self.min_degree(name) < 0:
            raise SingularInputError(f"negative exponents in {name}: clear Laurent part first")
        deg = self.degree(name)
        coeffs = [dict() for _ in range(deg + 1)]
        for exps, c in self.terms.items():
            k = exps[idx]
            key = tuple(e for i, e in enumerate(exps) if i != idx)
            coeffs[k][key] = c
        return [MultiPoly(self.field, rest, d) for d in coeffs]

    def laurent_split(self, name):
        """Return (k, p) with self = name**k * p and p having min-degree 0."""
        if not self.terms:
            return 0, self
        idx = self.vars.index(name)
        k = self.min_degree(name)
        if k == 0:
            return 0, self
        terms = {}
        for exps, c in self.terms.items():
            new = list(exps)
            new[idx] -= k
            terms[tuple(new)] = c
        return k, MultiPoly(self.field, self.vars, terms)

    def extend_vars(self, vars_):
        """View in a larger variable tuple (superset, any order)."""
        vars_ = tuple(vars_)
        pos = [vars_.index(v) for v in self.vars]
        terms = {}
        for exps, c in self.terms.items():
            new = [0] * len(vars_)
            for p, e in zip(pos, exps):
                new[p] = e
            terms[tuple(new)] = c
        return MultiPoly(self.field, vars_, terms)

    def drop_vars(self):
        """Remove variables that do not occur."""
        used = [i for i, v in enumerate(self.vars) if any(e[i] for e in self.terms)]
        vars_ = tuple(self.vars[i] for i in used)
        terms = {tuple(e[i] for i in used): c for e, c in self.terms.items()}
        return MultiPoly(self.field, vars_, terms)

    def map_coefficients(self, fn, new_field=None):
        field = new_field or self.field
        return MultiPoly(field, self.vars, {e: fn(c) for e, c in self.terms.items()})

    def change_field(self, field):
        """Coerce all coefficients into another scalar field."""
        if field is self.field or field == self.field:
            return self
        return MultiPoly(field, self.vars,
                         {e: field.coerce(c) for e, c in self.terms.items()})

    def derivative(self, name):
        idx = self.vars.index(name)
        terms = {}
        for exps, c in self.terms.items():
            k = exps[idx]
            if k == 0:
                continue
            new = list(exps)
            new[idx] -= 1
            terms[tuple(new)] = c * Fraction(k)
        return MultiPoly(self.field, self.vars, terms)

    # -- evaluation -----------------------------------------------------------

    def subs(self, mapping):
        """Substitute values for variables.

        Values may be scalars, MultiPoly (over the same field), or
        TruncatedSeries; unsubstituted variables must not remain when any
        value is a series or scalar-only result is requested.  Returns a
        scalar if all variables are substituted with scalars, a MultiPoly if
        any value is a MultiPoly, and a TruncatedSeries if any is a series.
        Negative exponents invert the substituted value.
        """
        kinds = set()
        for v in self.vars:
            if v in mapping:
                val = mapping[v]
                if isinstance(val, TruncatedSeries):
                    kinds.add("series")
                elif isinstance(val, MultiPoly):
                    kinds.add("poly")
                else:
                    kinds.add("scalar")
            else:
                kinds.add("poly")
        if "series" in kinds:
            return self._subs_series(mapping)
        if "poly" in kinds:
            return self._subs_poly(mapping)
        acc = self.field.zero
        caches = [dict() for _ in self.vars]
        for exps, c in self.terms.items():
            term = c
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                cache = caches[i]
                if e not in cache:
                    base = self.field.coerce(mapping[self.vars[i]])
                    cache[e] = base ** e if e > 0 else self.field.inv(base) ** (-e)
                term = term * cache[e]
            acc = acc + term
        return acc

    def _subs_poly(self, mapping):
        target_vars = []
        for v in self.vars:
            val = mapping.get(v)
            if val is None:
                if v not in target_vars:
                    target_vars.append(v)
            elif isinstance(val, MultiPoly):
                for w in val.vars:
                    if w not in target_vars:
                        target_vars.append(w)
        target_vars = tuple(target_vars)
        one = MultiPoly.const(self.field, target_vars, 1)
        acc = MultiPoly.zero(self.field, target_vars)
        caches = [dict() for _ in self.vars]
        for exps, c in self.terms.items():
            term = one.scale(c)
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                cache = caches[i]
                if e not in cache:
                    v = self.vars[i]
                    val = mapping.get(v)
                    if val is None:
                        val = MultiPoly.var(self.field, target_vars, v)
                    elif isinstance(val, MultiPoly):
                        val = val.extend_vars(_merge_vars(val.vars, target_vars))
                    else:
                        val = MultiPoly.const(self.field, target_vars, val)
                    if e > 0:
                        cache[e] = val ** e
                    else:
                        k, unit = val.laurent_monomial()
                        inv_terms = {tuple(-x for x in k): self.field.inv(unit)}
                        inv = MultiPoly(self.field, val.vars, inv_terms)
                        cache[e] = inv ** (-e)
                term = term * cache[e].extend_vars(target_vars)
            acc = acc + term
        return acc

    def laurent_monomial(self):
        """If self is a single term, return (exponent tuple, coefficient)."""
        if len(self.terms) != 1:
            raise SingularInputError("inverse substitution needs a monomial value")
        [(exps, c)] = self.terms.items()
        return exps, c

    def _subs_series(self, mapping):
        svals = [v for v in mapping.values() if isinstance(v, TruncatedSeries)]
        var = svals[0].var
        field = svals[0].field
        acc = TruncatedSeries.zero(field, var)
        caches = [dict() for _ in self.vars]
        for exps, c in self.terms.items():
            term = TruncatedSeries.from_scalar(field, var, c)
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                cache = caches[i]
                if e not in cache:
                    val = mapping.get(self.vars[i])
                    if val is None:
                        raise SingularInputError(
                            f"variable {self.vars[i]} not substituted")
                    if not isinstance(val, TruncatedSeries):
                        val = TruncatedSeries.from_scalar(field, var, val)
                    cache[e] = val ** e if e > 0 else val.inverse() ** (-e)
                term = term * cache[e]
            acc = acc + term
        return acc

    # -- normalization over Q ---------------------------------------------------

    def primitive_normalized(self):
        """Integer-primitive representative with positive lex-leading coefficient.

        Only meaningful over Q; returns (normalized, unit) with
        self = unit * normalized.
        """
        if not isinstance(self.field, RationalField):
            raise SingularInputError("primitive normalization is for Q coefficients")
        if not self.terms:
            return self, Fraction(1)
        denom = 1
        for c in self.terms.values():
            denom = _lcm(denom, c.denominator)
        g = 0
        for c in self.terms.values():
            g = _gcd(g, int(c * denom))
        lead = max(self.terms)
        sign = 1 if self.terms[lead] > 0 else -1
        unit = Fraction(sign * g, denom)
        inv = 1 / unit
        return self.scale(inv), unit


def _merge_vars(a, b):
    out = list(b)
    for v in a:
        if v not in out:
            out.append(v)
    return tuple(out)


def _gcd(a, b):
    a, b = abs(int(a)), abs(int(b))
    while b:
        a, b = b, a % b
    return a


def _lcm(a, b):
    return a * b // _gcd(a, b)


def align(a, b):
    """Embed two polynomials into a common variable tuple."""
    if a.vars == b.vars:
        return a, b
    merged = _merge_vars(b.vars, a.vars)
    return a.extend_vars(merged), b.extend_vars(merged)


# ---------------------------------------------------------------------------
# division, gcd, resultants
# ---------------------------------------------------------------------------

def divmod_univariate(p, q, name):
    """Polynomial division of p by q in the variable ``name``.

    Coefficient divisions must be exact (or scalar); raises if not.
    """
    p_c = p.as_univariate(name)
    q_c = q.as_univariate(name)
    if not any(c for c in q_c):
        raise ZeroDivisionError("division by zero polynomial")
    dq = len(q_c) - 1
    lead = q_c[-1]
    quot = [None] * max(0, len(p_c) - dq)
    rem = list(p_c)
    while len(rem) - 1 >= dq and any(c for c in rem):
        while rem and rem[-1].is_zero():
            rem.pop()
        if len(rem) - 1 < dq:
            break
        c = exact_div(rem[-1], lead)
        k = len(rem) - 1 - dq
        quot[k] = c
        for i, qc in enumerate(q_c):
            rem[k + i] = rem[k + i] - c * qc
        if rem and rem[-1].is_zero():
            rem.pop()
    rest = tuple(v for v in p.vars if v != name)
    zero = MultiPoly.zero(p.field, rest)
    quot = [c if c is not None else zero for c in quot]
    qq = MultiPoly.from_univariate(p.field, p.vars, name, quot)
    rr = MultiPoly.from_univariate(p.field, p.vars, name, rem)
    return qq, rr


def exact_div(p, q):
    """Exact division p / q of multivariate polynomials; raises if inexact."""
    if isinstance(q, MultiPoly) and q.is_constant():
        c = q.constant_value()
        if q.field.is_zero(c):
            raise ZeroDivisionError("division by zero")
        return p.scale(q.field.inv(c))
    p, q = align(p, q)
    if p.is_zero():
        return p
    # long division in lex order
    field = p.field
    qlead = max(q.terms)
    qlc = q.terms[qlead]
    rem = p
    quot_terms = {}
    guard = len(p.terms) * (len(q.terms) + 2) + 10
    while rem.terms:
        guard -= 1
        if guard < 0:
            raise SingularInputError("inexact polynomial division")
        rlead = max(rem.terms)
        diff = tuple(a - b for a, b in zip(rlead, qlead))
        if any(d < 0 for d in diff):
            raise SingularInputError("inexact polynomial division")
        c = rem.terms[rlead] * field.inv(qlc)
        quot_terms[diff] = c
        mono = MultiPoly(field, p.vars, {diff: c})
        rem = rem - mono * q
    return MultiPoly(field, p.vars, quot_terms)


def gcd_multipoly(p, q):
    """GCD of multivariate polynomials over a field of coefficients.

    Normalized: over Q, integer-primitive with positive leading coefficient;
    over number fields, monic in lex-leading term.
    """
    p, q = align(p, q)
    if p.is_zero():
        return _normalize_gcd(q)
    if q.is_zero():
        return _normalize_gcd(p)
    if p.is_constant() or q.is_constant():
        return MultiPoly.const(p.field, p.vars, 1)
    name = next(v for v in p.vars if p.involves(v) or q.involves(v))
    if not (p.involves(name) and q.involves(name)):
        # gcd splits: gcd(content wrt name of the one involving it, other)
        if p.involves(name):
            p = _content(p, name)
        else:
            q = _content(q, name)
        return gcd_multipoly(p, q)
    cp, pp = _content_primitive(p, name)
    cq, pq = _content_primitive(q, name)
    cont = gcd_multipoly(cp, cq)
    a, b = pp, pq
    if a.degree(name) < b.degree(name):
        a, b = b, a
    while not b.is_zero():
        r = _pseudo_rem(a, b, name)
        if not r.is_zero():
            _, r = _content_primitive(r, name)
        a, b = b, r
    g = a
    if g.degree(name) == 0:
        g = MultiPoly.const(p.field, p.vars, 1)
    result = cont * g
    return _normalize_gcd(result)


def _normalize_gcd(p):
    if p.is_zero():
        return p
    if isinstance(p.field, RationalField):
        norm, _ = p.primitive_normalized()
        return norm
    lead = max(p.terms)
    return p.scale(p.field.inv(p.terms[lead]))


def _content(p, name):
    coeffs = p.as_univariate(name)
    rest_vars = tuple(v for v in p.vars if v != name)
    acc = MultiPoly.zero(p.field, rest_vars)
    for c in coeffs:
        if c.is_zero():
            continue
        acc = gcd_multipoly(acc, c) if acc.terms else _normalize_gcd(c)
        if acc.is_constant():
            return MultiPoly.const(p.field, rest_vars, 1).extend_vars(p.vars)
    return acc.extend_vars(p.vars)


def _content_primitive(p, name):
    cont = _content(p, name)
    if cont.is_constant():
        return cont, p
    return cont, exact_div(p, cont)


def _pseudo_rem(a, b, name):
    """Pseudo-remainder of a by b in ``name`` (fraction-free)."""
    db = b.degree(name)
    lead = b.as_univariate(name)[-1].extend_vars(a.vars)
    rem = a
    while not rem.is_zero() and rem.degree(name) >= db:
        dr = rem.degree(name)
        rlead = rem.as_univariate(name)[-1].extend_vars(a.vars)
        shift = MultiPoly.var(a.field, a.vars, name, dr - db)
        rem = rem * lead - b * rlead * shift
    return rem


def resultant(p, q, name):
    """Sylvester resultant of p and q with respect to ``name``.

    Sign convention: determinant of the Sylvester matrix with the p-rows
    first.  Computed fraction-free (Bareiss).
    """
    p, q = align(p, q)
    if not (p.involves(name) or q.involves(name)):
        raise SingularInputError(f"resultant: {name} absent from both polynomials")
    if p.is_zero() or q.is_zero():
        raise SingularInputError("resultant of the zero polynomial")
    pc = [c for c in p.as_univariate(name)]
    qc = [c for c in q.as_univariate(name)]
    m, n = len(pc) - 1, len(qc) - 1
    rest = tuple(v for v in p.vars if v != name)
    zero = MultiPoly.zero(p.field, rest)
    if m == 0 and n == 0:
        return MultiPoly.const(p.field, rest, 1)
    size = m + n
    mat = [[zero for _ in range(size)] for _ in range(size)]
    for i in range(n):
        for j, c in enumerate(reversed(pc)):
            mat[i][i + j] = c
    for i in range(m):
        for j, c in enumerate(reversed(qc)):
            mat[n + i][i + j] = c
    return _bareiss_det(mat, p.field, rest)


def _bareiss_det(mat, field, vars_):
    n = len(mat)
    if n == 0:
        return MultiPoly.const(field, vars_, 1)
    mat = [row[:] for row in mat]
    sign = 1
    prev = MultiPoly.const(field, vars_, 1)
    for k in range(n - 1):
        if mat[k][k].is_zero():
            piv = next((i for i in range(k + 1, n) if not mat[i][k].is_zero()), None)
            if piv is None:
                return MultiPoly.zero(field, vars_)
            mat[k], mat[piv] = mat[piv], mat[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]
                mat[i][j] = exact_div(num, prev)
            mat[i][k] = MultiPoly.zero(field, vars_)
        prev = mat[k][k]
    det = mat[n - 1][n - 1]
    return det.scale(-1) if sign < 0 else det


def squarefree_part(p):
    """p divided by the gcd with all its first partials (char 0)."""
    g = None
    for v in p.vars:
        if not p.involves(v):
            continue
        d = p.derivative(v)
        g = d if g is None else gcd_multipoly(g, d)
    if g is None or g.is_zero():
        raise SingularInputError("constant polynomial has no squarefree part")
    g = gcd_multipoly(p, g)
    if g.is_constant():
        return p
    return exact_div(p, g)


def factor_rational(p):
    """Irreducible factorization over Q.

    Returns ``(unit, [(factor, multiplicity), ...])`` with primitive
    positive-leading factors whose product (with the unit) is p exactly.
    """
    if not isinstance(p.field, RationalField):
        raise SingularInputError("factor_rational needs rational coefficients")
    if p.is_zero():
        raise SingularInputError("cannot factor the zero polynomial")
    terms = p.terms
    mins = [min(e[i] for e in terms) for i in range(len(p.vars))] if p.vars else []
    if any(m < 0 for m in mins):
        # Laurent: factor the shifted polynomial, report unit monomial separately
        raise SingularInputError("factor_rational: clear Laurent exponents first")
    unit, raw = factor_terms_q(p.vars, p.terms)
    factors = [(MultiPoly(p.field, p.vars, t), m) for t, m in raw]
    check = MultiPoly.const(p.field, p.vars, unit)
    for f, m in factors:
        check = check * f ** m
    assert check == p, "factorization must re-multiply to the input"
    return unit, factors
