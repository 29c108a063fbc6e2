"""Picard-Lefschetz action of a D4 configuration on H1 and on degree-2 brackets.

Cycles are integer vectors in the basis (d1, d2, d3, d4) of vanishing cycles.
h_i(v) = v - (v . d_i) d_i with the intersection form below. The classes
alpha1 = d1 + d3 and alpha2 = d1 + d4 are fixed by every h_i.

These are not the d1 - d3 and d1 - d4 of the usual written argument: under
this intersection form (d1 - d3) . d2 = 2, so h2 moves d1 - d3, while the
reduction needs classes that every h_i fixes. With the sums the same steps
go through, and h3 - h4 sends [d1, d2] to [d1, d4 - d3] = [d1, alpha2 - alpha1].

Degree-2 elements [u, v] are written in the basis
[d1,d2], [d1,alpha1], [d1,alpha2], [d2,alpha1], [d2,alpha2], [alpha1,alpha2],
so a general element reads [d1, a] + [d2, b] + m [d1, d2] + n [alpha1, alpha2]
with a, b combinations of the alphas.
"""
from __future__ import annotations

import logging
from functools import lru_cache
from typing import NamedTuple, Sequence, Tuple

import sympy

from errors import PreconditionError, ZeroElementError

logger = logging.getLogger(__name__)

INTERSECTION = sympy.Matrix([
    [0, 1, 0, 0],
    [-1, 0, 1, 1],
    [0, -1, 0, 0],
    [0, -1, 0, 0],
])

CYCLE_NAMES = ("d1", "d2", "d3", "d4")
ALPHA1 = (1, 0, 1, 0)
ALPHA2 = (1, 0, 0, 1)
# columns: d1, d2, alpha1, alpha2 in cycle coordinates
BRACKET_FRAME = sympy.Matrix([
    [1, 0, 1, 1],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
])
FRAME_NAMES = ("d1", "d2", "alpha1", "alpha2")
GRADE2_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
GRADE2_NAMES = tuple(f"[{FRAME_NAMES[p]},{FRAME_NAMES[q]}]" for p, q in GRADE2_PAIRS)
OPERATORS = ("h1", "h2", "h3", "h4", "id")

H1Vector = Tuple[int, int, int, int]
Grade2Element = Tuple[int, int, int, int, int, int]


def _operator_index(name) -> int:
    if isinstance(name, int) and 1 <= name <= 4:
        return name
    if name in OPERATORS[:4]:
        return int(name[1])
    raise PreconditionError(f"unknown monodromy operator {name!r}")


def intersection(u: Sequence, v: Sequence):
    return (sympy.Matrix([list(u)]) * INTERSECTION * sympy.Matrix(list(v)))[0, 0]


@lru_cache(maxsize=None)
def h1_matrix(name) -> sympy.Matrix:
    """Matrix of an operator on cycle coordinates, acting on column vectors."""
    if name == "id":
        return sympy.eye(4)
    i = _operator_index(name) - 1
    columns = []
    for k in range(4):
        # h_i(d_k) = d_k - (d_k . d_i) d_i
        image = sympy.zeros(4, 1)
        image[k] = 1
        image[i] -= INTERSECTION[k, i]
        columns.append(image)
    return sympy.Matrix.hstack(*columns)


def _vector(values, size):
    values = list(values)
    if len(values) != size:
        raise PreconditionError(f"expected {size} coordinates, got {len(values)}")
    return sympy.Matrix([sympy.sympify(v) for v in values])


def _plain(column) -> tuple:
    out = []
    for value in column:
        value = sympy.expand(value)
        out.append(int(value) if value.is_Integer else value)
    return tuple(out)


def picard_lefschetz(i, v: Sequence) -> H1Vector:
    return _plain(h1_matrix(i) * _vector(v, 4))


@lru_cache(maxsize=None)
def grade2_matrix(name) -> sympy.Matrix:
    """Second exterior power of the operator, written in the bracket basis."""
    local = BRACKET_FRAME.inv() * h1_matrix(name) * BRACKET_FRAME
    out = sympy.zeros(6, 6)
    for col, (p, q) in enumerate(GRADE2_PAIRS):
        for row, (r, s) in enumerate(GRADE2_PAIRS):
            out[row, col] = local[r, p] * local[s, q] - local[s, p] * local[r, q]
    return out


def pl_grade2(i, g: Sequence) -> Grade2Element:
    return _plain(grade2_matrix(i) * _vector(g, 6))


def grade2_from_parts(a=(0, 0), b=(0, 0), m=0, n=0) -> Grade2Element:
    """[d1, a] + [d2, b] + m [d1, d2] + n [alpha1, alpha2], a and b given on (alpha1, alpha2)."""
    return (m, a[0], a[1], b[0], b[1], n)


def bracket(u: Sequence, v: Sequence) -> Grade2Element:
    """[u, v] for cycles given in (d1, d2, d3, d4) coordinates."""
    cu = BRACKET_FRAME.inv() * _vector(u, 4)
    cv = BRACKET_FRAME.inv() * _vector(v, 4)
    return _plain(cu[p] * cv[q] - cu[q] * cv[p] for p, q in GRADE2_PAIRS)


def grade2_text(g: Sequence) -> str:
    pieces = []
    for coeff, name in zip(g, GRADE2_NAMES):
        coeff = sympy.expand(sympy.sympify(coeff))
        if coeff == 0:
            continue
        if coeff.is_Integer:
            negative = coeff < 0
            body = name if abs(coeff) == 1 else f"{abs(coeff)}{name}"
        else:
            negative = False
            body = f"({coeff}){name}"
        pieces.append((negative, body))
    if not pieces:
        return "0"
    negative, body = pieces[0]
    text = f"-{body}" if negative else body
    for negative, body in pieces[1:]:
        text += f" - {body}" if negative else f" + {body}"
    return text


class OperatorStep(NamedTuple):
    """Integer combination of monodromy operators, e.g. ((1, "h1"), (-1, "id"))."""

    terms: Tuple[Tuple[int, str], ...]

    @classmethod
    def of(cls, *terms):
        for coeff, name in terms:
            if name not in OPERATORS:
                raise PreconditionError(f"unknown monodromy operator {name!r}")
        return cls(tuple(terms))

    def matrix(self) -> sympy.Matrix:
        out = sympy.zeros(6, 6)
        for coeff, name in self.terms:
            out += coeff * grade2_matrix(name)
        return out

    def text(self) -> str:
        pieces = []
        for coeff, name in self.terms:
            body = name if abs(coeff) == 1 else f"{abs(coeff)}{name}"
            pieces.append((coeff < 0, body))
        negative, body = pieces[0]
        text = f"-{body}" if negative else body
        for negative, body in pieces[1:]:
            text += f" - {body}" if negative else f" + {body}"
        return text


H1_MINUS_ID = OperatorStep.of((1, "h1"), (-1, "id"))
H2_MINUS_ID = OperatorStep.of((1, "h2"), (-1, "id"))
H3_MINUS_H4 = OperatorStep.of((1, "h3"), (-1, "h4"))
H1_MINUS_H3 = OperatorStep.of((1, "h1"), (-1, "h3"))
H1_MINUS_H4 = OperatorStep.of((1, "h1"), (-1, "h4"))


def apply_step(step: OperatorStep, g: Sequence) -> Grade2Element:
    return _plain(step.matrix() * _vector(g, 6))


def apply_steps(steps: Sequence[OperatorStep], g: Sequence) -> Grade2Element:
    """Apply the steps in order, the first one first."""
    for step in steps:
        g = apply_step(step, g)
    return tuple(g)


def steps_text(steps: Sequence[OperatorStep]) -> str:
    """Operator word as a composition, written right to left."""
    if not steps:
        return "id"
    return "".join(f"({step.text()})" for step in reversed(steps))


def _choose_step(g) -> OperatorStep:
    m, a1, a2, b1, b2, _ = g
    a = (a1, a2) != (0, 0)
    b = (b1, b2) != (0, 0)
    if not a and not b:
        # m [d1, d2] -> [d1, d4 - d3]
        return H3_MINUS_H4
    if not b:
        # [d1, a] -> -[d2, a]
        return H2_MINUS_ID
    if m != 0 or a:
        # [d1, b] and then -[d2, b] on the next pass
        return H1_MINUS_ID
    # [d2, b] -> [alpha1, b] or [alpha2, b]
    return H1_MINUS_H3 if b2 != 0 else H1_MINUS_H4


def reduce_to_alpha(g: Sequence):
    """Operator word P and k != 0 with P(g) = k [alpha1, alpha2]."""
    g = tuple(int(v) for v in g)
    if len(g) != 6:
        raise PreconditionError(f"expected 6 coordinates, got {len(g)}")
    if not any(g):
        raise ZeroElementError("the zero element has no reduction")
    steps = []
    while any(g[:5]):
        if len(steps) >= 4:
            raise AssertionError(f"reduction did not terminate at {grade2_text(g)}")
        step = _choose_step(g)
        g = apply_step(step, g)
        steps.append(step)
    k = g[5]
    if k == 0:
        raise AssertionError("reduction reached zero")
    logger.debug("reduced in %d steps to %d[alpha1,alpha2]", len(steps), k)
    return tuple(steps), k
