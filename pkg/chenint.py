"""Iterated-integral models and the graded pairing.

A model assigns to every path generator a group-like series over the form
alphabet; the integral of a word along a path word is the coefficient of that
word in the product of the generators' series. Chen's axioms then hold by
construction: the unit, splitting along products, the inversion sign rule and
the shuffle relations.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, Mapping, Tuple

import sympy

import scalars
from errors import AlphabetMismatchError, DegreeMismatchError, DegreeOverflowError, ModelError
from freegrp import GroupWord, lcs_degree, magnus, nested_commutator, phi_inverse
from liealg import hall_basis, is_lie
from ncalg import EMPTY_WORD, Alphabet, NcPoly, inner, shuffle
from tseries import TruncSeries, is_grouplike, ts_exp, ts_inv, ts_mul

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PairingTable:
    """Values v[i, j] = integral of form j along path generator i."""

    path_alphabet: Alphabet
    form_alphabet: Alphabet
    values: Mapping[Tuple[int, int], object] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (i, j), value in dict(self.values).items():
            i = self.path_alphabet.index(i)
            j = self.form_alphabet.index(j)
            clean[(i, j)] = scalars.normalize(value)
        object.__setattr__(self, "values", clean)

    @classmethod
    def symbolic(cls, path_alphabet, form_alphabet=None, prefix="v"):
        form_alphabet = form_alphabet or path_alphabet
        values = {
            (i, j): scalars.symbol(f"{prefix}_{path}_{form}")
            for i, path in enumerate(path_alphabet.letters)
            for j, form in enumerate(form_alphabet.letters)
        }
        return cls(path_alphabet, form_alphabet, values)

    @classmethod
    def identity(cls, alphabet):
        values = {(i, i): scalars.ONE for i in range(len(alphabet))}
        return cls(alphabet, alphabet, values)

    @classmethod
    def from_document(cls, document: Mapping):
        """``{"alphabet": [...], "forms": [...], "table": [[...], ...]}``, one row per path letter."""
        try:
            paths = Alphabet.of(document["alphabet"])
            forms = Alphabet.of(document.get("forms", paths.letters))
            rows = document["table"]
        except (KeyError, TypeError) as exc:
            raise ModelError(f"pairing table document is missing {exc}") from exc
        if len(rows) != len(paths) or any(len(row) != len(forms) for row in rows):
            raise ModelError(f"pairing table must be {len(paths)}x{len(forms)}")
        values = {(i, j): scalars.normalize(rows[i][j])
                  for i in range(len(paths)) for j in range(len(forms))}
        return cls(paths, forms, values)

    def value(self, path, form):
        return self.values.get((self.path_alphabet.index(path), self.form_alphabet.index(form)),
                               scalars.ZERO)

    def rows(self):
        return [[self.value(i, j) for j in range(len(self.form_alphabet))]
                for i in range(len(self.path_alphabet))]


class IntegralModel:
    """Group-like series per path generator, truncated at ``degree``."""

    def __init__(self, path_alphabet: Alphabet, form_alphabet: Alphabet, degree: int,
                 series: Mapping[int, TruncSeries]):
        self.path_alphabet = path_alphabet
        self.form_alphabet = form_alphabet
        self.degree = degree
        checked: Dict[int, TruncSeries] = {}
        for letter, s in series.items():
            letter = path_alphabet.index(letter)
            if s.alphabet != form_alphabet:
                raise ModelError(f"series for {path_alphabet.name(letter)} is over {s.alphabet}, "
                                 f"expected {form_alphabet}")
            if s.degree != degree:
                raise ModelError(f"series for {path_alphabet.name(letter)} is truncated at "
                                 f"{s.degree}, expected {degree}")
            if not scalars.equal(s.constant, 1) or not is_grouplike(s):
                raise ModelError(f"series for {path_alphabet.name(letter)} is not group-like")
            checked[letter] = s
        missing = set(range(len(path_alphabet))) - set(checked)
        if missing:
            names = ", ".join(path_alphabet.name(i) for i in sorted(missing))
            raise ModelError(f"no series for path generators {names}")
        self.series = checked

    def path_series(self, delta: GroupWord) -> TruncSeries:
        if delta.alphabet != self.path_alphabet:
            raise AlphabetMismatchError(f"path word over {delta.alphabet}, model over {self.path_alphabet}")
        result = TruncSeries.one(self.form_alphabet, self.degree)
        for letter, exponent in delta.syllables:
            factor = self.series[letter] if exponent == 1 else ts_inv(self.series[letter])
            result = ts_mul(result, factor)
        return result

    def __repr__(self):
        return (f"IntegralModel(paths={self.path_alphabet}, forms={self.form_alphabet}, "
                f"degree={self.degree})")


def canonical_model(alphabet: Alphabet, degree: int) -> IntegralModel:
    """Generator j carries exp(x_j): the integral of w_j^n along it is 1/n!."""
    series = {j: ts_exp(NcPoly.letter(alphabet, j), degree) for j in range(len(alphabet))}
    return IntegralModel(alphabet, alphabet, degree, series)


def model_from_logs(path_alphabet: Alphabet, form_alphabet: Alphabet, degree: int,
                    logs: Mapping) -> IntegralModel:
    """Model with generator i carrying exp(logs[i]); every log must be a Lie polynomial."""
    series = {}
    for letter, log in logs.items():
        if not log.is_zero() and not is_lie(log):
            raise ModelError(f"{log.to_text()} is not a Lie polynomial")
        series[letter] = ts_exp(log, degree)
    return IntegralModel(path_alphabet, form_alphabet, degree, series)


def evaluate(model: IntegralModel, delta: GroupWord, omega: NcPoly):
    if omega.alphabet != model.form_alphabet:
        raise AlphabetMismatchError(f"forms over {omega.alphabet}, model over {model.form_alphabet}")
    if omega.degree > model.degree:
        raise DegreeOverflowError(f"form of degree {omega.degree} exceeds model degree {model.degree}")
    return inner(model.path_series(delta).poly, omega)


def _form_polynomial(table: PairingTable, omega) -> NcPoly:
    if isinstance(omega, NcPoly):
        if omega.alphabet != table.form_alphabet:
            raise AlphabetMismatchError(f"forms over {omega.alphabet}, table over {table.form_alphabet}")
        return omega
    return NcPoly.from_word(table.form_alphabet, table.form_alphabet.word(omega))


def pair_graded(table: PairingTable, delta: GroupWord, omega):
    """Sum of a(i1..ik) v[i1][j1]...v[ik][jk] over the terms of phi^-1(delta).

    ``omega`` is a word of forms (names or indices) or an NcPoly whose terms
    all have one degree k. A path deeper than k in the lower central series
    (the identity included) has no degree-k Lie element and pairs to zero.
    """
    if delta.alphabet != table.path_alphabet:
        raise AlphabetMismatchError(f"path word over {delta.alphabet}, table over {table.path_alphabet}")
    poly = _form_polynomial(table, omega)
    if poly.is_zero():
        return scalars.ZERO
    if not poly.is_homogeneous():
        raise DegreeMismatchError("pair_graded needs forms of a single degree")
    k = poly.degree
    found = lcs_degree(delta, k)
    if found is None:
        logger.debug("%s lies beyond degree %d, pairing is zero", delta.to_text(), k)
        return scalars.ZERO
    if found < k:
        raise DegreeMismatchError(f"{delta.to_text()} has degree {found}, forms have degree {k}")

    lie = phi_inverse(delta, k)
    total = scalars.ZERO
    for form_word, form_coeff in poly.items():
        for path_word, coeff in lie.items():
            term = scalars.to_sympy(coeff * form_coeff)
            for i, j in zip(path_word, form_word):
                term *= scalars.to_sympy(table.value(i, j))
            total = total + term
    return scalars.normalize(total)


def graded_pairing_matrix(alphabet: Alphabet, k: int, table: PairingTable = None):
    """Rows: Hall nested commutators as group words; columns: Hall expansions as forms."""
    table = table or PairingTable.identity(alphabet)
    basis = hall_basis(alphabet, k)
    forms = [NcPoly(table.form_alphabet, e.terms) for e in basis.expansions()]
    rows = []
    for tree in basis:
        delta = nested_commutator(alphabet, tree)
        rows.append([pair_graded(table, delta, form) for form in forms])
    logger.debug("graded pairing matrix in degree %d: %dx%d", k, len(rows), len(forms))
    return sympy.Matrix([[scalars.to_sympy(v) for v in row] for row in rows])


def is_nondegenerate(matrix) -> bool:
    matrix = sympy.Matrix(matrix)
    if matrix.rows != matrix.cols:
        return matrix.rank() == min(matrix.shape)
    return sympy.simplify(matrix.det()) != 0


def check_unit(model: IntegralModel, omega: NcPoly) -> bool:
    """The identity path pairs only with the constant term."""
    identity = GroupWord.identity(model.path_alphabet)
    return scalars.equal(evaluate(model, identity, omega), omega.coefficient(EMPTY_WORD))


def check_multiplicativity(model: IntegralModel, alpha: GroupWord, beta: GroupWord, word) -> bool:
    """Integral along alpha beta splits over the deconcatenations of the word."""
    word = tuple(word)
    forms = model.form_alphabet
    lhs = evaluate(model, alpha * beta, NcPoly.from_word(forms, word))
    rhs = scalars.ZERO
    for cut in range(len(word) + 1):
        left = evaluate(model, alpha, NcPoly.from_word(forms, word[:cut]))
        right = evaluate(model, beta, NcPoly.from_word(forms, word[cut:]))
        rhs = rhs + left * right
    return scalars.equal(lhs, rhs)


def check_inversion(model: IntegralModel, alpha: GroupWord, word) -> bool:
    word = tuple(word)
    forms = model.form_alphabet
    lhs = evaluate(model, ~alpha, NcPoly.from_word(forms, word))
    rhs = evaluate(model, alpha, NcPoly.from_word(forms, word[::-1]))
    return scalars.equal(lhs, rhs * (-1) ** len(word))


def check_shuffle_relation(model: IntegralModel, delta: GroupWord, u, v) -> bool:
    forms = model.form_alphabet
    pu = NcPoly.from_word(forms, tuple(u))
    pv = NcPoly.from_word(forms, tuple(v))
    lhs = evaluate(model, delta, pu) * evaluate(model, delta, pv)
    return scalars.equal(lhs, evaluate(model, delta, shuffle(pu, pv)))


def magnus_agrees(delta: GroupWord, degree: int) -> bool:
    """The canonical model's path series is the Magnus image of the path."""
    model = canonical_model(delta.alphabet, degree)
    return model.path_series(delta) == magnus(delta, degree)
