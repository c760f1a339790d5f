"""Rational-function reconstruction and exact evaluation."""

import random
from fractions import Fraction

import pytest

from treecensus import (
    FamilyId,
    FitError,
    PoleError,
    PowerSeries,
    QuadraticNumber,
    RationalFunction,
    TruncationError,
    bivariate_series,
    fit_rational,
)
from treecensus.ratfunc import poly_text


def test_fit_geometric():
    ones = PowerSeries([1] * 20)
    r = fit_rational(ones, 0, 1)
    assert r.numerator == (Fraction(1),)
    assert r.denominator == (Fraction(1), Fraction(-1))


def test_fit_motzkin_two_leaf_column():
    column = bivariate_series(FamilyId.MOTZKIN, 24, 4).coeff_y(2)
    r = fit_rational(column, 3, 3)
    assert str(r) == "x^3/(1-x)^3"


def test_fit_ordered_four_leaf_column():
    column = bivariate_series(FamilyId.ORDERED, 30, 6).coeff_y(4)
    r = fit_rational(column, 7, 7)
    assert str(r) == "(x^5 + 3*x^6 + x^7)/(1-x)^7"


def test_fit_polynomial_series():
    poly = PowerSeries.from_polynomial([0, 0, 5, 9, 1], 20)
    r = fit_rational(poly, 6, 0)
    assert r.is_polynomial()
    assert r.numerator == (Fraction(0), Fraction(0), Fraction(5), Fraction(9), Fraction(1))


def test_fit_zero_series():
    assert fit_rational(PowerSeries.zero(20), 2, 2).is_zero()


def test_fit_requires_margin():
    with pytest.raises(TruncationError):
        fit_rational(PowerSeries([1] * 10), 4, 4)


def test_fit_failure_when_degrees_too_small():
    # coefficients of 1/((1-x)(1-2x)) are not degree-(0,1) rational
    target = RationalFunction((1,), (1, -3, 2))
    with pytest.raises(FitError):
        fit_rational(target.expand(20), 0, 1)


def test_fit_reexpansion_roundtrip_random():
    rng = random.Random(17)
    for _ in range(25):
        num = [Fraction(rng.randint(-3, 3)) for _ in range(rng.randint(1, 4))]
        den = [Fraction(1)] + [Fraction(rng.randint(-2, 2)) for _ in range(rng.randint(0, 3))]
        target = RationalFunction(num, den)
        order = len(num) + len(den) + 12
        series = target.expand(order)
        fitted = fit_rational(series, len(num), len(den))
        assert fitted == target
        assert fitted.expand(order) == series


def test_reduction_to_lowest_terms():
    # (x - x^2)/(1 - x) reduces to x
    r = RationalFunction((0, 1, -1), (1, -1))
    assert r.is_polynomial()
    assert r.numerator == (Fraction(0), Fraction(1))


def test_eval_examples():
    third = QuadraticNumber(Fraction(1, 3))
    r = RationalFunction((0, 1), (1, -1))  # x/(1-x)
    assert r.eval(third) == QuadraticNumber(Fraction(1, 2))
    cube = RationalFunction((0, 0, 0, 1), (1, -3, 3, -1))  # x^3/(1-x)^3
    assert cube.eval(QuadraticNumber(Fraction(1, 4))) == QuadraticNumber(Fraction(1, 27))
    identity = RationalFunction((0, 1))
    b = QuadraticNumber(3, -2, 2)
    assert identity.eval(b) == b


def test_eval_pole():
    r = RationalFunction((1,), (1, -1))
    with pytest.raises(PoleError):
        r.eval(QuadraticNumber(1))


def test_expand_matches_series_division():
    r = RationalFunction((0, 1), (1, -2))
    x = PowerSeries.monomial(1, 1, 10)
    assert r.expand(10) == x.div(PowerSeries.from_polynomial([1, -2], 10))


def test_text_rendering():
    assert poly_text(()) == "0"
    assert poly_text((Fraction(0), Fraction(5))) == "5*x"
    assert str(RationalFunction.zero()) == "0"
    assert str(RationalFunction.monomial(21, 5)) == "21*x^5"
    assert str(RationalFunction((0, 0, 0, 0, 0, 0, 0, 5), (1, -1))) == "5*x^7/(1-x)"
    assert (
        str(RationalFunction((0, 0, 0, 0, 5, 9, 1)))
        == "5*x^4 + 9*x^5 + x^6"
    )
