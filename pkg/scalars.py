"""Exact scalars: rationals, polynomials over Q and rational functions in t.

A scalar is either a ``fractions.Fraction`` or a sympy expression. Arithmetic
uses the ordinary operators (a Fraction promotes to sympy on contact with an
expression) followed by :func:`normalize`, which brings the value back to its
canonical form:

* exact rationals become ``Fraction`` (lowest terms, positive denominator);
* polynomials in named indeterminates are expanded;
* rational functions are cancelled and their denominator, which may only
  involve ``t``, is made monic.
"""
from __future__ import annotations

import logging
import re
from fractions import Fraction
from typing import Union

import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from errors import ScalarError

logger = logging.getLogger(__name__)

Scalar = Union[Fraction, sympy.Expr]

T = sympy.Symbol("t")
ZERO = Fraction(0)
ONE = Fraction(1)

RATIONAL = "rational"
POLYNOMIAL = "polynomial"
RATFUNC = "ratfunc"

_RATIONAL_RE = re.compile(r"[+-]?\d+(/\d+)?")
# unknown names become Symbols, so E, I, S, N, beta ... stay indeterminates
_PARSE_GLOBALS = {
    "Symbol": sympy.Symbol,
    "Integer": sympy.Integer,
    "Rational": sympy.Rational,
    "Float": sympy.Float,
}
_TRANSFORMS = standard_transformations + (convert_xor,)


def symbol(name):
    return sympy.Symbol(name)


def symbols(names):
    return tuple(sympy.Symbol(name) for name in names)


def _from_rational(value):
    return Fraction(int(value.p), int(value.q))


def normalize(value) -> Scalar:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ScalarError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise ScalarError(f"floating point scalar {value!r} is not exact")
    if isinstance(value, str):
        return parse_scalar(value)

    try:
        expr = sympy.sympify(value)
    except sympy.SympifyError as exc:
        raise ScalarError(f"cannot interpret {value!r} as a scalar") from exc

    if expr.is_Rational:
        return _from_rational(expr)
    if expr.has(sympy.Float):
        raise ScalarError(f"floating point coefficients in {expr} are not exact")
    if not expr.free_symbols:
        raise ScalarError(f"{expr} is not an exact rational")

    num, den = sympy.fraction(sympy.cancel(expr))
    gens = sorted(expr.free_symbols, key=lambda s: s.name)
    if not (num.is_polynomial(*gens) and den.is_polynomial(*gens)):
        raise ScalarError(f"{expr} is not a polynomial or a rational function")

    num = sympy.expand(num)
    den = sympy.expand(den)
    if den.is_number:
        expr = sympy.expand(num / den)
    else:
        if den.free_symbols - {T}:
            raise ScalarError(f"denominator {den} may only involve {T}")
        lead = sympy.Poly(den, T).LC()
        expr = sympy.expand(num / lead) / sympy.expand(den / lead)

    if expr.is_Rational:
        return _from_rational(expr)
    return expr


def parse_scalar(text) -> Scalar:
    text = str(text).strip()
    if not text:
        raise ScalarError("empty scalar")
    if _RATIONAL_RE.fullmatch(text):
        try:
            return Fraction(text)
        except ZeroDivisionError as exc:
            raise ScalarError(f"zero denominator in {text!r}") from exc
    try:
        expr = parse_expr(text, local_dict={}, global_dict=dict(_PARSE_GLOBALS),
                          transformations=_TRANSFORMS)
    except (SyntaxError, TypeError, AttributeError, sympy.SympifyError) as exc:
        raise ScalarError(f"cannot parse scalar {text!r}") from exc
    except Exception as exc:  # tokenizer errors surface under several names
        raise ScalarError(f"cannot parse scalar {text!r}: {exc}") from exc
    return normalize(expr)


def to_sympy(value):
    value = normalize(value)
    if isinstance(value, Fraction):
        return sympy.Rational(value.numerator, value.denominator)
    return value


def numerator_denominator(value):
    """Numerator and monic denominator in t; the denominator is 1 for polynomials."""
    value = normalize(value)
    if isinstance(value, Fraction):
        return to_sympy(value), sympy.Integer(1)
    num, den = sympy.fraction(sympy.cancel(value))
    if not den.free_symbols:
        return sympy.expand(value), sympy.Integer(1)
    lead = sympy.Poly(den, T).LC()
    return sympy.expand(num / lead), sympy.expand(den / lead)


def kind(value) -> str:
    value = normalize(value)
    if isinstance(value, Fraction):
        return RATIONAL
    _, den = numerator_denominator(value)
    return POLYNOMIAL if den == 1 else RATFUNC


def is_zero(value) -> bool:
    return normalize(value) == 0


def equal(a, b) -> bool:
    a = normalize(a)
    b = normalize(b)
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a == b
    return is_zero(to_sympy(a) - to_sympy(b))


def inverse(value) -> Scalar:
    value = normalize(value)
    if value == 0:
        raise ScalarError("division by zero")
    if isinstance(value, Fraction):
        return 1 / value
    return normalize(1 / value)


def derivative(value) -> Scalar:
    """d/dt of a scalar."""
    value = normalize(value)
    if isinstance(value, Fraction):
        return ZERO
    return normalize(sympy.diff(value, T))


def substitute(value, mapping) -> Scalar:
    value = normalize(value)
    if isinstance(value, Fraction):
        return value
    mapping = {symbol(k) if isinstance(k, str) else k: to_sympy(v) for k, v in mapping.items()}
    return normalize(value.subs(mapping, simultaneous=True))


def indeterminates(value):
    value = normalize(value)
    if isinstance(value, Fraction):
        return frozenset()
    return frozenset(value.free_symbols)


def _fraction_text(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _term_order(gens):
    # descending total degree, then descending exponents with names in reverse order
    reverse_positions = list(reversed(range(len(gens))))

    def key(item):
        monom = item[0]
        return (-sum(monom), tuple(-monom[j] for j in reverse_positions))

    return key


def _poly_text(expr) -> str:
    gens = sorted(expr.free_symbols, key=lambda s: s.name)
    if not gens:
        return _fraction_text(_from_rational(sympy.Rational(expr)))

    poly = sympy.Poly(expr, *gens)
    pieces = []
    for monom, coeff in sorted(poly.terms(), key=_term_order(gens)):
        coeff = _from_rational(sympy.Rational(coeff))
        factors = []
        for gen, power in zip(gens, monom):
            if power == 1:
                factors.append(gen.name)
            elif power > 1:
                factors.append(f"{gen.name}^{power}")
        magnitude = abs(coeff)
        if not factors:
            body = _fraction_text(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = f"{_fraction_text(magnitude)}*" + "*".join(factors)
        pieces.append((coeff < 0, body))

    negative, body = pieces[0]
    text = f"-{body}" if negative else body
    for negative, body in pieces[1:]:
        text += f" - {body}" if negative else f" + {body}"
    return text


def to_text(value) -> str:
    """Canonical, parseable text of a scalar (``w2 - w1``, ``1/120``, ``(x + 1)/t^2``)."""
    value = normalize(value)
    if isinstance(value, Fraction):
        return _fraction_text(value)

    num, den = numerator_denominator(value)
    num_text = _poly_text(num)
    if den == 1:
        return num_text
    den_text = _poly_text(den)
    if " " in num_text:
        num_text = f"({num_text})"
    if " " in den_text or "*" in den_text:
        den_text = f"({den_text})"
    return f"{num_text}/{den_text}"
