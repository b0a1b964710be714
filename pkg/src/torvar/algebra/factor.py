"""Factorization over the rationals, delegated to sympy.

This is the one place the package leans on an external CAS.  Everything
passes through plain coefficient data (dicts / lists of Fractions), so no
other module needs to know sympy exists.  Contract: exact irreducible
factorization over Q of the sizes appearing here (total degree well under
one hundred).
"""

from fractions import Fraction
from functools import lru_cache

import sympy

from ..errors import SingularInputError

_SYMS = {}


def _sym(name):
    if name not in _SYMS:
        _SYMS[name] = sympy.Symbol(name)
    return _SYMS[name]


def _to_sympy(vars_, terms):
    expr = sympy.Integer(0)
    syms = [_sym(v) for v in vars_]
    for exps, coeff in terms.items():
        mono = sympy.Rational(coeff.numerator, coeff.denominator)
        for s, e in zip(syms, exps):
            if e:
                mono *= s ** int(e)
        expr += mono
    return expr, syms


def _from_sympy_poly(poly, vars_):
    terms = {}
    for exps, coeff in poly.terms():
        q = sympy.Rational(coeff)
        terms[tuple(int(e) for e in exps)] = Fraction(int(q.p), int(q.q))
    return terms


def _normalize_factor(terms):
    """Integer-primitive representative with positive leading coefficient.

    Leading term taken in lex order on the exponent tuples.
    """
    if not terms:
        raise SingularInputError("zero factor")
    denom_lcm = 1
    for c in terms.values():
        denom_lcm = denom_lcm * c.denominator // _gcd_int(denom_lcm, c.denominator)
    nums = [c * denom_lcm for c in terms.values()]
    g = 0
    for n in nums:
        g = _gcd_int(g, int(n))
    if g == 0:
        raise SingularInputError("zero factor")
    lead = max(terms)
    sign = 1 if terms[lead] > 0 else -1
    scale = Fraction(denom_lcm, sign * g)
    return {e: c * scale for e, c in terms.items()}, Fraction(sign * g, denom_lcm)


def _gcd_int(a, b):
    a, b = abs(int(a)), abs(int(b))
    while b:
        a, b = b, a % b
    return a


def factor_terms_q(vars_, terms):
    """Factor a (multivariate) polynomial over Q given as an exponent->Fraction map.

    Returns ``(unit, [(factor_terms, multiplicity), ...])`` where each factor
    is irreducible over Q, integer-primitive, with positive lex-leading
    coefficient, and ``unit * prod(factors**mult) == input`` exactly.
    """
    if not terms:
        raise SingularInputError("cannot factor the zero polynomial")
    expr, syms = _to_sympy(vars_, terms)
    coeff, factors = sympy.factor_list(expr, *syms)
    q = sympy.Rational(coeff)
    unit = Fraction(int(q.p), int(q.q))
    out = []
    for fac, mult in factors:
        poly = sympy.Poly(fac, *syms)
        fterms = _from_sympy_poly(poly, vars_)
        norm, scale = _normalize_factor(fterms)
        unit *= scale ** int(mult)
        out.append((norm, int(mult)))
    return unit, out


@lru_cache(maxsize=None)
def _factor_univariate_cached(coeffs):
    terms = {(i,): c for i, c in enumerate(coeffs) if c}
    unit, factors = factor_terms_q(("_z",), terms)
    packed = []
    for fterms, mult in factors:
        deg = max(e[0] for e in fterms)
        packed.append((tuple(fterms.get((i,), Fraction(0)) for i in range(deg + 1)), mult))
    return unit, tuple(packed)


def factor_univariate_q(coeffs):
    """Factor sum(coeffs[i] * z**i) over Q.

    Returns ``(unit, [(coeff_tuple, mult), ...])`` with primitive integer
    factors, positive leading coefficient.
    """
    key = tuple(Fraction(c) for c in coeffs)
    while key and key[-1] == 0:
        key = key[:-1]
    if not key:
        raise SingularInputError("cannot factor the zero polynomial")
    return _factor_univariate_cached(key)


def is_irreducible_q(coeffs):
    """True iff the univariate polynomial is irreducible over Q (degree >= 1)."""
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) <= 1:
        return False
    _, factors = factor_univariate_q(coeffs)
    return len(factors) == 1 and factors[0][1] == 1
