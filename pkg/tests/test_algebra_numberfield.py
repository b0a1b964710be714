"""Number field arithmetic: Q(j), Q(sqrt 5), Trager factorization, towers."""

import random
from fractions import Fraction

import pytest

from torvar.algebra.numberfield import (
    QQ,
    NumberField,
    adjoin_root,
    nf_factor,
    poly_gcd,
    poly_mul,
    resultant_univariate,
    roots_in_field,
    sqrt_in_field,
    trager_factor_squarefree,
)
from torvar.errors import SingularInputError


@pytest.fixture
def Qj():
    # j^2 + j + 1 = 0, a primitive cube root of unity
    return NumberField([1, 1, 1], gen_name="j")


@pytest.fixture
def Qs5():
    return NumberField([-5, 0, 1], gen_name="s5")


def test_cube_root_of_unity(Qj):
    j = Qj.gen()
    assert j * j * j == 1
    assert j * j == -1 - j
    # (j - j^2)^2 = -3
    assert (j - j * j) ** 2 == -3


def test_golden_ratio_inverse(Qs5):
    s5 = Qs5.gen()
    phi = (1 + s5) / 2
    assert Qs5.inv(phi) == (s5 - 1) / 2
    assert phi * ((s5 - 1) / 2) == 1


def test_reducible_minpoly_rejected():
    with pytest.raises(SingularInputError):
        NumberField([-1, 0, 1])  # x^2 - 1 = (x-1)(x+1)


def test_invert_zero_raises(Qj):
    with pytest.raises(ZeroDivisionError):
        Qj.inv(Qj.zero)


def test_field_axioms_random(Qj, Qs5):
    rng = random.Random(7)
    for K in (Qj, Qs5):
        for _ in range(40):
            a, b, c = (K.random(rng) for _ in range(3))
            assert (a + b) * c == a * c + b * c
            assert (a * b) * c == a * (b * c)
            if b:
                assert (a / b) * b == a


def test_minpoly_of_element(Qs5):
    s5 = Qs5.gen()
    mp = Qs5.minpoly_of((1 + s5) / 2)
    # golden ratio: x^2 - x - 1
    assert mp == (Fraction(-1), Fraction(-1), Fraction(1))
    assert Qs5.minpoly_of(Qs5.coerce(3)) == (Fraction(-3), Fraction(1))


def test_roots_in_field(Qs5):
    s5 = Qs5.gen()
    # y^2 - 5 has roots +-sqrt5 in Q(sqrt5)
    roots = roots_in_field(Qs5, [Qs5.coerce(-5), Qs5.zero, Qs5.one])
    vals = {r for r, _ in roots}
    assert vals == {s5, -s5}
    # y^2 - 2 has none
    assert roots_in_field(Qs5, [Qs5.coerce(-2), Qs5.zero, Qs5.one]) == []


def test_sqrt_in_field(Qs5):
    assert sqrt_in_field(QQ, Fraction(9, 4)) == Fraction(3, 2)
    assert sqrt_in_field(QQ, 2) is None
    s = sqrt_in_field(Qs5, 5)
    assert s is not None and s * s == 5


def test_trager_factor(Qs5):
    s5 = Qs5.gen()
    # (y - s5)(y + s5)(y - 1/2) over Q(sqrt5)
    f = poly_mul(Qs5, [-s5, Qs5.one], [s5, Qs5.one])
    f = poly_mul(Qs5, f, [Qs5.coerce(Fraction(-1, 2)), Qs5.one])
    factors = trager_factor_squarefree(Qs5, f)
    assert len(factors) == 3
    lead, fac = nf_factor(Qs5, f)
    assert sorted(m for _, m in fac) == [1, 1, 1]


def test_nf_factor_multiplicity(Qj):
    j = Qj.gen()
    # (y - j)^2 (y + 1)
    f = poly_mul(Qj, poly_mul(Qj, [-j, Qj.one], [-j, Qj.one]), [Qj.one, Qj.one])
    _, factors = nf_factor(Qj, f)
    mults = sorted(m for _, m in factors)
    assert mults == [1, 2]


def test_adjoin_root_over_q():
    L, embed, r = adjoin_root(QQ, [Fraction(-2), Fraction(0), Fraction(1)])
    assert r * r == 2
    assert embed(Fraction(1, 3)) == Fraction(1, 3)


def test_adjoin_root_composite(Qs5):
    # extend Q(sqrt5) by sqrt2: a degree-4 primitive field
    L, embed, r2 = adjoin_root(Qs5, [Qs5.coerce(-2), Qs5.zero, Qs5.one])
    assert L.degree == 4
    assert r2 * r2 == 2
    s5_in_L = embed(Qs5.gen())
    assert s5_in_L * s5_in_L == 5
    # embedding is a ring hom on a sample
    a = Qs5.gen() + 2
    b = 3 - Qs5.gen()
    assert embed(a * b) == embed(a) * embed(b)


def test_resultant_univariate():
    # res(x^2 - 1, x - 2) = 3  (value of x^2-1 at 2)
    r = resultant_univariate(QQ, [Fraction(-1), Fraction(0), Fraction(1)],
                             [Fraction(-2), Fraction(1)])
    assert r == 3
    # common root -> 0
    r = resultant_univariate(QQ, [Fraction(-1), Fraction(0), Fraction(1)],
                             [Fraction(-1), Fraction(1)])
    assert r == 0


def test_poly_gcd_over_nf(Qj):
    j = Qj.gen()
    a = poly_mul(Qj, [-j, Qj.one], [Qj.one, Qj.one])
    b = poly_mul(Qj, [-j, Qj.one], [Qj.coerce(2), Qj.one])
    g = poly_gcd(Qj, a, b)
    assert g == [-j, Qj.one]
