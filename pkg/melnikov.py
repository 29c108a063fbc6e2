"""Gauss-Manin derivation on words of forms and the Melnikov integrands.

A Connection gives the derivative of each form as (1/delta) * sum_j A[i][j] w_j.
Extended to words by the Leibniz rule (and to coefficients by d/dt) it turns
the nested integrand w (w (... (w)'...)')' into an explicit polynomial in the
forms, whose graded part is what the closed formulas P_k and C_k describe.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Mapping, NamedTuple, Tuple

import sympy

import scalars
from chenint import PairingTable, pair_graded
from errors import AlphabetMismatchError, ModelError, PreconditionError
from freegrp import GroupWord, commutator
from liealg import left_bracketing
from ncalg import Alphabet, NcPoly, inner, concat_mul

logger = logging.getLogger(__name__)

FORMS = Alphabet(("omega1", "omega2"))
ALPHAS = scalars.symbols(("alpha1", "alpha2"))
LOOPS = Alphabet(("a1", "a2"))
DERIVED_FORMS = Alphabet(tuple(f"omega{k}" for k in range(5)))


@dataclass(frozen=True)
class Connection:
    alphabet: Alphabet
    delta: object
    matrix: Tuple[Tuple[object, ...], ...]

    def __post_init__(self):
        delta = scalars.normalize(self.delta)
        if delta == 0:
            raise PreconditionError("the connection denominator must be nonzero")
        if scalars.kind(delta) == scalars.RATFUNC or scalars.indeterminates(delta) - {scalars.T}:
            raise PreconditionError(f"denominator {scalars.to_text(delta)} must be a polynomial in t")
        size = len(self.alphabet)
        rows = tuple(tuple(scalars.normalize(v) for v in row) for row in self.matrix)
        if len(rows) != size or any(len(row) != size for row in rows):
            raise PreconditionError(f"connection matrix must be {size}x{size}")
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "matrix", rows)

    @classmethod
    def diagonal(cls, alphabet: Alphabet, weights):
        """Quasi-homogeneous case: t w_i' = weight_i w_i."""
        weights = list(weights)
        if len(weights) != len(alphabet):
            raise PreconditionError(f"{len(weights)} weights for {len(alphabet)} forms")
        matrix = [[weights[i] if i == j else 0 for j in range(len(alphabet))]
                  for i in range(len(alphabet))]
        return cls(alphabet, scalars.T, matrix)

    @classmethod
    def shift(cls, alphabet: Alphabet = DERIVED_FORMS):
        """Formal derivatives: w^(j)' = w^(j+1), the last letter derives to zero."""
        size = len(alphabet)
        matrix = [[1 if j == i + 1 else 0 for j in range(size)] for i in range(size)]
        return cls(alphabet, 1, matrix)

    @classmethod
    def from_document(cls, document: Mapping):
        """``{"alphabet": [...], "delta_poly": "t", "matrix": [[...]]}`` or ``"weights"`` instead of a matrix."""
        try:
            alphabet = Alphabet.of(document["alphabet"])
        except (KeyError, TypeError) as exc:
            raise ModelError(f"connection document is missing {exc}") from exc
        if "weights" in document:
            return cls.diagonal(alphabet, [scalars.normalize(w) for w in document["weights"]])
        if "matrix" not in document:
            raise ModelError("connection document needs a matrix or weights")
        delta = document.get("delta_poly", "1")
        try:
            return cls(alphabet, scalars.normalize(delta), document["matrix"])
        except TypeError as exc:
            raise ModelError(f"malformed connection matrix: {exc}") from exc

    def image(self, letter: int) -> dict:
        """Derivative of one form as {letter: coefficient}."""
        out = {}
        for j, entry in enumerate(self.matrix[letter]):
            if entry != 0:
                out[j] = scalars.normalize(scalars.to_sympy(entry) / scalars.to_sympy(self.delta))
        return out


class WeightPair(NamedTuple):
    w1: object
    w2: object

    @classmethod
    def symbolic(cls):
        return cls(scalars.symbol("w1"), scalars.symbol("w2"))

    def weight(self, letter: int):
        return self[letter]


def derive(conn: Connection, p: NcPoly) -> NcPoly:
    if p.alphabet != conn.alphabet:
        raise AlphabetMismatchError(f"polynomial over {p.alphabet}, connection over {conn.alphabet}")
    images = [conn.image(i) for i in range(len(conn.alphabet))]
    out = {}

    def add(word, value):
        out[word] = out[word] + value if word in out else value

    for word, coeff in p.items():
        d_coeff = scalars.derivative(coeff)
        if d_coeff != 0:
            add(word, d_coeff)
        for position, letter in enumerate(word):
            for replacement, factor in images[letter].items():
                new_word = word[:position] + (replacement,) + word[position + 1:]
                add(new_word, scalars.to_sympy(coeff) * scalars.to_sympy(factor))
    return NcPoly(p.alphabet, out)


def melnikov_integrand(conn: Connection, omega: NcPoly, k: int) -> NcPoly:
    """R_1 = omega, R_{j+1} = omega * R_j'."""
    if k < 1:
        raise PreconditionError("k must be at least 1")
    if omega.is_zero() or omega.degrees() != [1]:
        raise PreconditionError("the perturbing form must be a nonzero combination of letters")
    result = omega
    for _ in range(k - 1):
        result = concat_mul(omega, derive(conn, result))
    logger.debug("integrand of order %d: %d words", k, len(result))
    return result


def generic_form(alphas=ALPHAS) -> NcPoly:
    return NcPoly(FORMS, {(0,): alphas[0], (1,): alphas[1]})


def arrangements(k: int, i: int):
    """Distinct words with i letters 0 and k - i letters 1."""
    for ones in itertools.combinations(range(k), i):
        chosen = set(ones)
        yield tuple(0 if position in chosen else 1 for position in range(k))


def _c_coefficient(weights: WeightPair, word):
    value = sympy.Integer(1)
    running = sympy.Integer(0)
    for j in range(1, len(word)):
        running += scalars.to_sympy(weights.weight(word[len(word) - j]))
        value *= running - (j - 1)
    return value


def pk_closed_form(weights: WeightPair, k: int, i: int) -> NcPoly:
    """Coefficient of alpha1^i alpha2^(k-i) in t^(k-1) M_k for the diagonal connection."""
    if k < 1:
        raise PreconditionError("k must be at least 1")
    if not 0 <= i <= k:
        raise PreconditionError(f"partition index {i} outside 0..{k}")
    return NcPoly(FORMS, {word: _c_coefficient(weights, word) for word in arrangements(k, i)})


def pk_polynomial(weights: WeightPair, k: int, alphas=ALPHAS) -> NcPoly:
    total = NcPoly.zero(FORMS)
    a1, a2 = (scalars.to_sympy(a) for a in alphas)
    for i in range(k + 1):
        total = total + pk_closed_form(weights, k, i).scale(a1 ** i * a2 ** (k - i))
    return total


def alpha_component(integrand: NcPoly, k: int, i: int, alphas=ALPHAS) -> NcPoly:
    """t^(k-1) times the alpha1^i alpha2^(k-i) part of an integrand."""
    a1, a2 = (scalars.to_sympy(a) for a in alphas)
    scale = scalars.T ** (k - 1)

    def pick(coeff):
        expr = sympy.expand(sympy.cancel(scalars.to_sympy(coeff) * scale))
        return sympy.Poly(expr, a1, a2).coeff_monomial(a1 ** i * a2 ** (k - i))

    return integrand.map_coefficients(pick)


def scalar_lie_element(k: int) -> NcPoly:
    """[[...[[w1, w2], w2], ...], w2] with k - 1 copies of w2."""
    return left_bracketing((0,) + (1,) * (k - 1), FORMS)


def ck(weights: WeightPair, k: int):
    if k < 2:
        raise PreconditionError("C_k starts at k = 2")
    return inner(pk_closed_form(weights, k, 1), scalar_lie_element(k))


def ck_closed_form(weights: WeightPair, k: int):
    if k < 2:
        raise PreconditionError("C_k starts at k = 2")
    w1, w2 = (scalars.to_sympy(w) for w in weights)
    value = w2 - w1
    for i in range(1, k - 1):
        value *= i - w1 - (i - 1) * w2
    return scalars.normalize(value)


def ck_recursive(weights: WeightPair, k: int):
    """C_k(w1, w2) = (w2 - w1) C_{k-1}(w1 + w2 - 1, w2)."""
    if k < 2:
        raise PreconditionError("C_k starts at k = 2")
    w1, w2 = (scalars.to_sympy(w) for w in weights)
    if k == 2:
        return scalars.normalize(w2 - w1)
    shifted = WeightPair(w1 + w2 - 1, w2)
    return scalars.normalize((w2 - w1) * scalars.to_sympy(ck_recursive(shifted, k - 1)))


def m5_loop() -> GroupWord:
    """(((a1, a2), a1), (a1, a2)), a basic commutator of degree 5."""
    a1 = GroupWord.generator(LOOPS, 0)
    a2 = GroupWord.generator(LOOPS, 1)
    inner_pair = commutator(a1, a2)
    return commutator(commutator(inner_pair, a1), inner_pair)


def m5_table() -> PairingTable:
    """Ten independent values: integral of w^(k) along a_i, i = 1, 2, k = 0..4."""
    return PairingTable.symbolic(LOOPS, DERIVED_FORMS, prefix="I")


def m5_integrand_terms():
    """The formal fifth integrand and its part free of w^(k), k >= 2.

    Those forms have no residues, so their integrals along the a_i vanish and
    only w w' w' w' w' survives.
    """
    integrand = melnikov_integrand(Connection.shift(), NcPoly.letter(DERIVED_FORMS, 0), 5)
    surviving = NcPoly(DERIVED_FORMS, {w: c for w, c in integrand.terms.items() if max(w) <= 1})
    return integrand, surviving


def example_ex_m5():
    _, surviving = m5_integrand_terms()
    return pair_graded(m5_table(), m5_loop(), surviving)


def m5_subterms() -> dict:
    """The two vanishing factors of the expansion of M_5."""
    a1 = GroupWord.generator(LOOPS, 0)
    a2 = GroupWord.generator(LOOPS, 1)
    pair = commutator(a1, a2)
    triple = commutator(pair, a1)
    table = m5_table()
    return {
        "(a1,a2) w'w'": pair_graded(table, pair, (1, 1)),
        "((a1,a2),a1) w'w'w'": pair_graded(table, triple, (1, 1, 1)),
    }
