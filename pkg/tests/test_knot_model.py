"""Words, parser, Fox calculus, Alexander polynomials."""

from fractions import Fraction

import pytest

from torvar.algebra.multipoly import MultiPoly
from torvar.algebra.numberfield import QQ, NumberField
from torvar.errors import ParseError
from torvar.knots.alexander import (
    alexander_polynomial,
    alexander_root_order,
    is_symmetric,
    kth_alexander_polynomial,
)
from torvar.knots.fox import GroupRingElement, fox_derivative, fox_identity_defect
from torvar.knots.presentation import parse_presentation
from torvar.knots.words import Word, commutator


def tpoly(terms):
    return MultiPoly(QQ, ("t",), {(e,): Fraction(c) for e, c in terms.items()})


FIG8 = "u,v | v*[u,V]*u^-1*[u,V]^-1 = 1"
TREFOIL = "a,b | a^2 = b^3"
K52 = "u,v | v*(U*V*u*v*U*V) = (U*V*u*v*U*V)*u"
K61 = "u,v | v*[u,V]^2 = [u,V]^2*u"


def test_word_reduction():
    assert Word("uUv") == Word("v")
    assert (Word("uv") * Word("VU")) == Word("")
    assert Word("uvV") == "u"
    assert commutator("u", "V") == Word("uVUv")


def test_parser_figure_eight():
    p = parse_presentation(FIG8)
    w = commutator("u", "V")
    assert p.relator == (Word("v") * w * Word("U") * w.inverse()).cyclic_reduction()
    assert p.phi == {"u": 1, "v": 1}


def test_parser_trefoil():
    p = parse_presentation(TREFOIL)
    assert p.relator == Word("aa" + "BBB")
    assert p.phi == {"a": 3, "b": 2}


def test_parser_trivial_relator_errors():
    with pytest.raises(ParseError):
        parse_presentation("u,v | u = u")


def test_parser_bad_syntax():
    with pytest.raises(ParseError):
        parse_presentation("u,v | [u,v = 1")
    with pytest.raises(ParseError):
        parse_presentation("u,v | u*w = 1")


def test_fox_basics():
    assert fox_derivative("u", "u") == GroupRingElement.of_word(Word())
    assert fox_derivative("uv", "v") == GroupRingElement.of_word("u")
    # d(u^-1 v^-1 u v)/du = -u^-1 + u^-1 v^-1; abelianized: t^-2 - t^-1,
    # i.e. 1 - t^-1 only up to a unit -t^-1
    d = fox_derivative(Word("UVuv"), "u")
    assert d == GroupRingElement({Word("U"): -1, Word("UV"): 1})
    ab = d.abelianized({"u": 1, "v": 1})
    assert ab == tpoly({-2: 1, -1: -1})


def test_fox_fundamental_identity():
    for text in (FIG8, TREFOIL, K52, K61):
        p = parse_presentation(text)
        assert not fox_identity_defect(p).coeffs


def test_alexander_trefoil():
    p = parse_presentation(TREFOIL)
    assert alexander_polynomial(p) == tpoly({2: 1, 1: -1, 0: 1})


def test_alexander_figure_eight():
    p = parse_presentation(FIG8)
    assert alexander_polynomial(p) == tpoly({2: 1, 1: -3, 0: 1})


def test_alexander_5_2():
    p = parse_presentation(K52)
    assert alexander_polynomial(p) == tpoly({2: 2, 1: -3, 0: 2})


def test_alexander_6_1():
    p = parse_presentation(K61)
    assert alexander_polynomial(p) == tpoly({2: 2, 1: -5, 0: 2})


def test_alexander_symmetry_and_value_at_one():
    for text in (FIG8, TREFOIL, K52, K61):
        p = parse_presentation(text)
        d = alexander_polynomial(p)
        assert is_symmetric(d)
        assert d.subs({"t": Fraction(1)}) in (Fraction(1), Fraction(-1))


def test_kth_alexander():
    for text in (FIG8, TREFOIL, K52):
        p = parse_presentation(text)
        assert kth_alexander_polynomial(p, 1) == alexander_polynomial(p)
        one = MultiPoly.const(QQ, ("t",), 1)
        assert kth_alexander_polynomial(p, 2) == one
        assert kth_alexander_polynomial(p, 5) == one


def test_alexander_root_order():
    fig8 = alexander_polynomial(parse_presentation(FIG8))
    Qs5 = NumberField([-5, 0, 1], gen_name="s5")
    lam_sq = (3 + Qs5.gen()) / 2
    assert alexander_root_order(fig8, lam_sq, Qs5) == 1
    assert alexander_root_order(fig8, Fraction(1)) == 0
    # constructed double root
    dbl = tpoly({2: 1, 1: -4, 0: 4})
    assert alexander_root_order(dbl, Fraction(2)) == 2
