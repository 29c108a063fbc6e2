from fractions import Fraction

import pytest
import sympy

import scalars
from errors import ScalarError

w1, w2, x = sympy.symbols("w1 w2 x")
t = scalars.T


def test_integers_become_fractions():
    assert scalars.normalize(3) == Fraction(3)
    assert isinstance(scalars.normalize(sympy.Rational(2, 6)), Fraction)
    assert scalars.normalize(sympy.Rational(2, 6)) == Fraction(1, 3)


@pytest.mark.parametrize("value", [0.5, True, sympy.sqrt(2), sympy.pi, sympy.Float("1.5") * w1])
def test_inexact_values_are_rejected(value):
    with pytest.raises(ScalarError):
        scalars.normalize(value)


def test_denominators_only_in_t():
    with pytest.raises(ScalarError):
        scalars.normalize(1 / w1)
    assert scalars.kind(w1 / t) == scalars.RATFUNC


def test_rational_functions_cancel():
    value = scalars.normalize((t ** 2 - 1) / (t - 1))
    assert scalars.equal(value, t + 1)
    assert scalars.kind(value) == scalars.POLYNOMIAL


def test_monic_denominator():
    num, den = scalars.numerator_denominator(x / (2 * t ** 2 + 4 * t))
    assert den == t ** 2 + 2 * t
    assert scalars.equal(num, x / 2)


def test_kinds():
    assert scalars.kind(Fraction(1, 2)) == scalars.RATIONAL
    assert scalars.kind(w1 * w2) == scalars.POLYNOMIAL
    assert scalars.kind(w1 / 2) == scalars.POLYNOMIAL


def test_printer_order():
    assert scalars.to_text(w2 - w1) == "w2 - w1"
    assert scalars.to_text(Fraction(1, 120)) == "1/120"
    assert scalars.to_text(-28) == "-28"
    assert scalars.to_text(0) == "0"


@pytest.mark.parametrize("text", ["w2 - w1", "1/720", "-14", "(w1 - 1)*(w2 - w1)", "w1^2 + 3*w2"])
def test_printed_text_parses_back(text):
    value = scalars.parse_scalar(text)
    assert scalars.equal(scalars.parse_scalar(scalars.to_text(value)), value)


def test_parse_scalar():
    assert scalars.parse_scalar("3/6") == Fraction(1, 2)
    assert scalars.equal(scalars.parse_scalar("w1^2"), w1 ** 2)
    with pytest.raises(ScalarError):
        scalars.parse_scalar("1/0")
    with pytest.raises(ScalarError):
        scalars.parse_scalar("")
    with pytest.raises(ScalarError):
        scalars.parse_scalar("w1 +* 2")


def test_calculus_helpers():
    assert scalars.equal(scalars.derivative(t ** 3 * w1), 3 * t ** 2 * w1)
    assert scalars.derivative(Fraction(5)) == 0
    assert scalars.equal(scalars.substitute(w1 + w2, {"w1": 1}), w2 + 1)
    assert scalars.inverse(Fraction(2, 3)) == Fraction(3, 2)
    with pytest.raises(ScalarError):
        scalars.inverse(0)
    assert scalars.indeterminates(w1 * t) == frozenset({w1, t})
