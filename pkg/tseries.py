"""Degree-truncated series in the completed tensor algebra.

Products follow the pattern of a Horner evaluation: when computing exp or log
up to degree N, the partial result at depth p only needs its first N - p
levels, so every intermediate product is truncated as early as possible.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Tuple

import scalars
from errors import AlphabetMismatchError, PreconditionError
from liealg import is_lie
from ncalg import EMPTY_WORD, NcPoly, homogeneous_part, shuffle_words, truncate, words_of_degree

logger = logging.getLogger(__name__)


class TruncSeries:
    """An NcPoly known only up to degree ``degree``; higher terms are dropped."""

    __slots__ = ("degree", "poly", "notes")

    def __init__(self, poly: NcPoly, degree: int, notes: Tuple[str, ...] = ()):
        if degree < 0:
            raise PreconditionError("truncation degree must be non-negative")
        self.degree = degree
        self.poly = truncate(poly, degree)
        self.notes = tuple(notes)

    @classmethod
    def one(cls, alphabet, degree):
        return cls(NcPoly.one(alphabet), degree)

    @property
    def alphabet(self):
        return self.poly.alphabet

    @property
    def constant(self):
        return self.poly.coefficient(EMPTY_WORD)

    def coefficient(self, word):
        return self.poly.coefficient(word)

    def part(self, k: int) -> NcPoly:
        return homogeneous_part(self.poly, k)

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return ts_mul(self, other)
        return TruncSeries(self.poly.scale(other), self.degree, self.notes)

    def __add__(self, other):
        degree, notes = _common_degree(self, other, "add")
        return TruncSeries(self.poly + other.poly, degree, notes)

    def __sub__(self, other):
        degree, notes = _common_degree(self, other, "subtract")
        return TruncSeries(self.poly - other.poly, degree, notes)

    def __neg__(self):
        return TruncSeries(-self.poly, self.degree, self.notes)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.degree == other.degree and self.poly == other.poly

    def __hash__(self):
        return hash((self.degree, self.poly))

    def to_text(self) -> str:
        return f"{self.poly.to_text()} + O({self.degree + 1})"

    def __repr__(self):
        return f"TruncSeries({self.to_text()!r})"


def _common_degree(a: TruncSeries, b: TruncSeries, operation: str):
    if a.alphabet != b.alphabet:
        raise AlphabetMismatchError(f"alphabets differ: {a.alphabet} vs {b.alphabet}")
    notes = a.notes + tuple(n for n in b.notes if n not in a.notes)
    if a.degree == b.degree:
        return a.degree, notes
    degree = min(a.degree, b.degree)
    note = f"{operation}: truncation degrees {a.degree} and {b.degree} mixed, kept {degree}"
    logger.warning(note)
    return degree, notes + (note,)


def _mul_truncated(p: NcPoly, q: NcPoly, n: int) -> NcPoly:
    out = {}
    for u, a in p.terms.items():
        for v, b in q.terms.items():
            if len(u) + len(v) > n:
                continue
            w = u + v
            out[w] = out[w] + a * b if w in out else a * b
    return NcPoly(p.alphabet, out)


def ts_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    degree, notes = _common_degree(a, b, "multiply")
    return TruncSeries(_mul_truncated(a.poly, b.poly, degree), degree, notes)


def _as_series(p, degree):
    if isinstance(p, TruncSeries):
        return p if degree is None else TruncSeries(p.poly, min(degree, p.degree), p.notes)
    if degree is None:
        raise PreconditionError("a truncation degree is needed for a plain polynomial")
    return TruncSeries(p, degree)


def ts_exp(p, degree: int = None) -> TruncSeries:
    """exp(p) = 1 + p(1 + p/2(1 + p/3(...))) for p without constant term."""
    series = _as_series(p, degree)
    n = series.degree
    x = series.poly
    if x.coefficient(EMPTY_WORD) != 0:
        raise PreconditionError("ts_exp needs a zero constant term")
    one = NcPoly.one(x.alphabet)
    s = one
    for depth in range(n, 0, -1):
        s = one + _mul_truncated(x.scale(Fraction(1, depth)), s, n - depth + 1)
    return TruncSeries(s, n, series.notes)


def ts_log(s: TruncSeries) -> TruncSeries:
    """log(1 + x) = x - x(x/2 - x(x/3 - ...)) for s = 1 + x."""
    if not scalars.equal(s.constant, 1):
        raise PreconditionError("ts_log needs constant term 1")
    n = s.degree
    x = s.poly - NcPoly.one(s.alphabet)
    acc = NcPoly.zero(s.alphabet)
    for depth in range(n, 0, -1):
        acc = x.scale(Fraction(1, depth)) - _mul_truncated(x, acc, n - depth + 1)
    return TruncSeries(acc, n, s.notes)


def ts_inv(s: TruncSeries) -> TruncSeries:
    """Geometric series: (1 + x)^-1 = 1 - x + x^2 - ..."""
    if not scalars.equal(s.constant, 1):
        raise PreconditionError("ts_inv needs constant term 1")
    n = s.degree
    x = s.poly - NcPoly.one(s.alphabet)
    one = NcPoly.one(s.alphabet)
    acc = one
    for _ in range(n):
        acc = one - _mul_truncated(x, acc, n)
    return TruncSeries(acc, n, s.notes)


def is_grouplike(s: TruncSeries) -> bool:
    """Shuffle relations <s,u><s,v> = <s,u*v> for all words with |u| + |v| <= N."""
    if not scalars.equal(s.constant, 1):
        raise PreconditionError("group-like series have constant term 1")
    alphabet = s.alphabet
    for total in range(2, s.degree + 1):
        for r in range(1, total // 2 + 1):
            for u in words_of_degree(alphabet, r):
                cu = s.coefficient(u)
                for v in words_of_degree(alphabet, total - r):
                    if r == total - r and v < u:
                        continue
                    rhs = scalars.ZERO
                    for w, count in shuffle_words(tuple(u), tuple(v)).items():
                        rhs = rhs + count * s.coefficient(w)
                    if not scalars.equal(cu * s.coefficient(v), rhs):
                        return False
    return True


def is_grouplike_via_log(s: TruncSeries) -> bool:
    return is_lie(ts_log(s).poly)
