"""Truncated series arithmetic and the determinant-valuation certificate."""

import random
from fractions import Fraction

import pytest

from torvar.algebra.numberfield import QQ
from torvar.algebra.series import TruncatedSeries, series_sqrt
from torvar.algebra.seriesmatrix import SeriesMatrix, det_series, det_valuation_series
from torvar.errors import InsufficientPrecisionError, ZeroDeterminantError


def T(order=16):
    return TruncatedSeries.gen(QQ, "t", order)


def test_geometric_inverse():
    t = T(10)
    s = 1 - t
    inv = s.inverse()
    expected = sum((t ** k for k in range(1, 10)),
                   TruncatedSeries.from_scalar(QQ, "t", 1, 10))
    assert (inv - expected).terms == {}


def test_valuation_and_errors():
    t = T(8)
    s = t ** 3 - t ** 5
    assert s.valuation() == 3
    zero_trunc = s - s
    with pytest.raises(InsufficientPrecisionError):
        zero_trunc.valuation()
    exact_zero = TruncatedSeries.zero(QQ, "t")
    with pytest.raises(ValueError):
        exact_zero.valuation()


def test_mul_truncation_tracking():
    a = TruncatedSeries(QQ, "t", {Fraction(2): Fraction(1), Fraction(3): Fraction(1)}, 6)
    s = a * a  # valuation 4; truncation order moves to 6 + 2
    assert s.order == 8
    assert s.terms[Fraction(4)] == 1


def test_laurent_inverse():
    # 1/(t(1-2t^2)) = t^-1 (1 + 2t^2 + 4t^4 + ...)
    t = T(10)
    s = t * (1 - 2 * t ** 2)
    inv = s.inverse()
    assert inv.terms[Fraction(-1)] == 1
    assert inv.terms[Fraction(1)] == 2
    assert inv.terms[Fraction(3)] == 4


def test_derivative_and_compose():
    t = T(12)
    s = 1 + t + 3 * t ** 2
    assert s.derivative().terms == {Fraction(0): Fraction(1), Fraction(1): Fraction(6)}
    inner = t + t ** 2
    comp = s.compose(inner)
    # 1 + (t+t^2) + 3(t+t^2)^2 = 1 + t + 4t^2 + 6t^3 + 3t^4
    assert comp.terms[Fraction(2)] == 4
    assert comp.terms[Fraction(3)] == 6


def test_reversion():
    t = T(10)
    s = t + t ** 2
    g = s.reversion()
    back = s.compose(g)
    assert back.terms == {Fraction(1): Fraction(1)}


def test_series_sqrt():
    t = T(12)
    s = 4 * t ** 2 * (1 + t)
    r = series_sqrt(s, 2)
    assert (r * r - s).terms == {}
    assert r.terms[Fraction(1)] == 2


def test_det_valuation_diag():
    t = T(12)
    m = SeriesMatrix(QQ, "t", [[t, 0], [0, 1]])
    v, cert = det_valuation_series(m)
    assert v == 1 and cert[:2] == [1, 0]


def test_det_valuation_jordan():
    t = T(12)
    m = SeriesMatrix(QQ, "t", [[t, 1], [0, t]])
    v, cert = det_valuation_series(m)
    assert v == 2
    assert cert[:2] == [1, 1]


def test_det_valuation_zero_matrix():
    t = TruncatedSeries.gen(QQ, "t")  # exact polynomial entries
    m = SeriesMatrix(QQ, "t", [[t ** 2, t], [t, 1]])
    with pytest.raises(ZeroDeterminantError):
        det_valuation_series(m)


def test_det_valuation_schur_correction():
    # det [[t^2 + t^3, t], [t, 1]] = t^3: the naive filtration without the
    # Schur correction would report 2
    t = T(14)
    m = SeriesMatrix(QQ, "t", [[t ** 2 + t ** 3, t], [t, 1]])
    v, cert = det_valuation_series(m)
    assert v == 3
    assert sum(cert) == 3


def random_series(rng, order, min_exp=0, max_exp=5, density=0.6):
    terms = {}
    for e in range(min_exp, max_exp):
        if rng.random() < density:
            terms[Fraction(e)] = Fraction(rng.randint(-3, 3))
    return TruncatedSeries(QQ, "t", terms, order)


def test_det_valuation_matches_bruteforce_100():
    rng = random.Random(20260808)
    checked = 0
    attempts = 0
    while checked < 100 and attempts < 400:
        attempts += 1
        m = SeriesMatrix(QQ, "t", [[random_series(rng, 12) for _ in range(3)]
                                   for _ in range(3)])
        d = det_series(m)
        try:
            expected = d.valuation()
        except (InsufficientPrecisionError, ValueError):
            continue
        v, cert = det_valuation_series(m)
        assert v == expected, f"filtration {v} vs direct {expected}"
        assert sum(cert) == v
        checked += 1
    assert checked == 100
