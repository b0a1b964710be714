"""Truncated Laurent/Puiseux series with exact coefficients.

A series carries a dict of Fraction exponents to scalars and a truncation
``order``: terms with exponent >= order are unknown.  ``order=None`` marks
an exact series (no unknown tail; a Laurent polynomial).  Every operation
propagates the truncation pessimistically, and asking for the valuation of
a series that is zero up to its truncation raises InsufficientPrecisionError
rather than silently inventing one.
"""

from fractions import Fraction

from ..errors import InsufficientPrecisionError
from .numberfield import QQ

DEFAULT_ORDER = Fraction(16)


def _f(x):
    return x if isinstance(x, Fraction) else Fraction(x)


class TruncatedSeries:
    __slots__ = ("field", "var", "terms", "order")

    def __init__(self, field, var, terms, order=None):
        self.field = field
        self.var = var
        order = _f(order) if order is not None else None
        clean = {}
        for e, c in terms.items():
            e = _f(e)
            if order is not None and e >= order:
                continue
            c = field.coerce(c)
            if not field.is_zero(c):
                clean[e] = c
        self.terms = clean
        self.order = order

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_scalar(cls, field, var, value, order=None):
        return cls(field, var, {Fraction(0): field.coerce(value)}, order)

    @classmethod
    def gen(cls, field, var, order=None):
        return cls(field, var, {Fraction(1): field.one}, order)

    @classmethod
    def monomial(cls, field, var, exponent, coeff=1, order=None):
        return cls(field, var, {_f(exponent): field.coerce(coeff)}, order)

    @classmethod
    def zero(cls, field, var, order=None):
        return cls(field, var, {}, order)

    # -- inspection -------------------------------------------------------

    def is_exact(self):
        return self.order is None

    def is_exact_zero(self):
        return self.order is None and not self.terms

    def effective_order(self):
        """Truncation order, or None meaning 'known completely'."""
        return self.order

    def valuation_lower_bound(self):
        if self.terms:
            return min(self.terms)
        if self.order is not None:
            return self.order
        return None  # exact zero: valuation +infinity

    def valuation(self):
        """Least exponent with nonzero coefficient.

        Raises InsufficientPrecisionError if the series is zero to its
        truncation (it may or may not be zero), and ValueError on an exact
        zero.
        """
        if self.terms:
            return min(self.terms)
        if self.order is None:
            raise ValueError("valuation of the zero series")
        raise InsufficientPrecisionError(
            f"series is O({self.var}^{self.order}): valuation not certified",
            required_order=self.order * 2 if self.order > 0 else self.order + DEFAULT_ORDER)

    def leading(self):
        v = self.valuation()
        return v, self.terms[v]

    def coefficient(self, exponent):
        e = _f(exponent)
        if self.order is not None and e >= self.order:
            raise InsufficientPrecisionError(
                f"coefficient of {self.var}^{e} beyond truncation {self.order}",
                required_order=e + 1)
        return self.terms.get(e, self.field.zero)

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms and self.order is None:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            if e == 0:
                parts.append(f"({c})")
            else:
                parts.append(f"({c})*{self.var}^{e}")
        if self.order is not None:
            parts.append(f"O({self.var}^{self.order})")
        return " + ".join(parts)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.var == other.var and self.terms == other.terms
                and self.order == other.order)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries.from_scalar(self.field, self.var, other)

    def __add__(self, other):
        other = self._coerce(other)
        order = _min_order(self.order, other.order)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, self.field.zero) + c
        return TruncatedSeries(self.field, self.var, terms, order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.field, self.var,
                               {e: -c for e, c in self.terms.items()}, self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        v1, v2 = self.valuation_lower_bound(), other.valuation_lower_bound()
        candidates = []
        if self.order is not None:
            candidates.append(self.order + v2 if v2 is not None else None)
        if other.order is not None:
            candidates.append(other.order + v1 if v1 is not None else None)
        candidates = [c for c in candidates if c is not None]
        order = min(candidates) if candidates else None
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                if order is not None and e >= order:
                    continue
                prod = c1 * c2
                if e in terms:
                    terms[e] = terms[e] + prod
                else:
                    terms[e] = prod
        return TruncatedSeries(self.field, self.var, terms, order)

    __rmul__ = __mul__

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            return self.inverse() ** (-n)
        result = TruncatedSeries.from_scalar(self.field, self.var, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self):
        """Multiplicative inverse; requires a certified valuation."""
        v = self.valuation()
        c = self.terms[v]
        cinv = self.field.inv(c)
        # self = c t^v (1 + w) with w of positive valuation
        rel = None if self.order is None else self.order - v
        w_terms = {e - v: coeff * cinv for e, coeff in self.terms.items() if e != v}
        w = TruncatedSeries(self.field, self.var, w_terms, rel)
        # geometric series in w up to relative precision
        acc = TruncatedSeries.from_scalar(self.field, self.var, 1, rel)
        if w.terms:
            wv = min(w.terms)
            k_needed = 1 if rel is None else int(rel / wv) + 1
            if rel is None:
                # exact input but infinite inverse: truncate at default order
                rel = DEFAULT_ORDER
                acc = TruncatedSeries.from_scalar(self.field, self.var, 1, rel)
                w = TruncatedSeries(self.field, self.var, w_terms, rel)
                k_needed = int(rel / wv) + 1
            power = TruncatedSeries.from_scalar(self.field, self.var, 1, rel)
            for _ in range(k_needed):
                power = power * (-w)
                acc = acc + power
                if not power.terms:
                    break
        result_order = None if rel is None and not w.terms else (
            rel - v if rel is not None else None)
        shifted = {e - v: coeff * cinv for e, coeff in acc.terms.items()}
        return TruncatedSeries(self.field, self.var, shifted, result_order)

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def derivative(self):
        terms = {e - 1: c * e for e, c in self.terms.items() if e != 0}
        order = None if self.order is None else self.order - 1
        return TruncatedSeries(self.field, self.var, terms, order)

    def truncate(self, order):
        order = _f(order)
        if self.order is not None:
            order = min(order, self.order)
        return TruncatedSeries(self.field, self.var, self.terms, order)

    def shift(self, k):
        """Multiply by var**k."""
        k = _f(k)
        return TruncatedSeries(self.field, self.var,
                               {e + k: c for e, c in self.terms.items()},
                               None if self.order is None else self.order + k)

    def map_coefficients(self, fn, new_field=None):
        field = new_field or self.field
        return TruncatedSeries(field, self.var,
                               {e: fn(c) for e, c in self.terms.items()}, self.order)

    def compose(self, inner):
        """self(inner(t)); inner must have positive valuation.

        Negative exponents of self are routed through inner.inverse().
        """
        vin = inner.valuation()
        if vin <= 0:
            raise ValueError("composition needs inner valuation >= 1")
        pos_exps = sorted(e for e in self.terms if e >= 0)
        neg_exps = sorted((e for e in self.terms if e < 0), reverse=True)
        # the unknown tail of self contributes O(inner**order); everything else
        # carries inner's own truncation through ordinary arithmetic
        out_order = None if self.order is None else self.order * vin
        acc = TruncatedSeries.zero(self.field, inner.var, out_order)
        cache = {}

        def ipow(e):
            if e not in cache:
                if e >= 0:
                    num = int(e.numerator)
                    den = int(e.denominator)
                    if den != 1:
                        raise ValueError("fractional exponent in composition")
                    cache[e] = inner ** num
                else:
                    cache[e] = inner.inverse() ** int(-e)
            return cache[e]

        for e in pos_exps + neg_exps:
            acc = acc + ipow(e) * self.terms[e]
        return acc

    def reversion(self, new_var=None):
        """Compositional inverse: series g with g(self(t)) = t.

        Requires valuation exactly 1.  The result is a series in ``new_var``
        (default: same name).
        """
        v = self.valuation()
        if v != 1:
            raise ValueError("reversion needs valuation exactly 1")
        target = self.order if self.order is not None else DEFAULT_ORDER
        new_var = new_var or self.var
        c1 = self.terms[Fraction(1)]
        s = TruncatedSeries.gen(self.field, new_var, target)
        g = s * self.field.inv(c1)
        # Newton iteration: g <- g - (f(g) - s)/f'(g)
        fprime = self.derivative()
        for _ in range(12):
            fg = _compose_renamed(self, g)
            err = fg - s
            if not err.terms:
                break
            fpg = _compose_renamed(fprime, g)
            g = g - err * fpg.inverse()
        fg = _compose_renamed(self, g)
        assert not (fg - s).terms, "reversion failed to converge"
        return g

    def rescale(self, c):
        """Substitute var -> c*var for a nonzero scalar c."""
        c = self.field.coerce(c)
        out = {}
        for e, coeff in self.terms.items():
            if e.denominator != 1:
                raise ValueError("rescale needs integer exponents")
            out[e] = coeff * c ** int(e)
        return TruncatedSeries(self.field, self.var, out, self.order)


def _compose_renamed(outer, g):
    composed = outer.compose(TruncatedSeries(g.field, outer.var, g.terms, g.order))
    return TruncatedSeries(g.field, g.var, composed.terms, composed.order)


def _min_order(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def series_sqrt(s, branch_scalar):
    """Square root of a series with even valuation.

    ``branch_scalar`` must square to the leading coefficient; it selects the
    branch and supplies the (possibly extended-field) leading value.
    """
    v = s.valuation()
    if v.denominator != 1 or int(v) % 2:
        raise ValueError("series_sqrt needs even valuation")
    c = s.terms[v]
    field = s.field
    b = field.coerce(branch_scalar)
    assert b * b == c, "branch scalar must square to the leading coefficient"
    # s = c t^v (1 + w); sqrt = b t^{v/2} (1 + w)^{1/2} via Newton iteration
    rel = None if s.order is None else s.order - v
    if rel is None:
        rel = DEFAULT_ORDER
    w = TruncatedSeries(field, s.var,
                        {e - v: coeff * field.inv(c) for e, coeff in s.terms.items()
                         if e != v}, rel)
    u = TruncatedSeries.from_scalar(field, s.var, 1, rel)
    one_plus_w = TruncatedSeries.from_scalar(field, s.var, 1, rel) + w
    half = Fraction(1, 2)
    for _ in range(10):
        err = u * u - one_plus_w
        if not err.terms:
            break
        u = u - err * u.inverse() * half
    assert not (u * u - one_plus_w).terms, "series sqrt failed to converge"
    out = u * b
    return out.shift(v / 2)
