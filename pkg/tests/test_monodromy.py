import random

import pytest
import sympy

from errors import PreconditionError, ZeroElementError
from monodromy import (ALPHA1, ALPHA2, H1_MINUS_H3, H1_MINUS_H4, H1_MINUS_ID, H2_MINUS_ID,
                       H3_MINUS_H4, OperatorStep, apply_step, apply_steps, bracket,
                       grade2_from_parts, grade2_text, intersection, picard_lefschetz, pl_grade2,
                       reduce_to_alpha, steps_text)

D1, D2, D3, D4 = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)
a1, a2, b1, b2, m, n = sympy.symbols("a1 a2 b1 b2 m n")
GENERIC = grade2_from_parts((a1, a2), (b1, b2), m, n)


def test_picard_lefschetz_on_vanishing_cycles():
    assert picard_lefschetz(1, D2) == (1, 1, 0, 0)
    assert picard_lefschetz(2, D1) == (1, -1, 0, 0)
    assert picard_lefschetz("h3", D2) == (0, 1, -1, 0)
    assert picard_lefschetz("h4", D4) == D4


@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_alphas_are_invariant(i):
    assert picard_lefschetz(i, ALPHA1) == ALPHA1
    assert picard_lefschetz(i, ALPHA2) == ALPHA2
    assert pl_grade2(i, grade2_from_parts(n=1)) == grade2_from_parts(n=1)


def test_differences_of_vanishing_cycles_are_not_invariant():
    difference = (1, 0, -1, 0)
    assert intersection(difference, D2) == 2
    assert picard_lefschetz(2, difference) != difference


def test_intersection_form_is_skew():
    cycles = [D1, D2, D3, D4]
    for u in cycles:
        for v in cycles:
            assert intersection(u, v) == -intersection(v, u)
    assert intersection(ALPHA1, D2) == 0


def test_unknown_operator():
    with pytest.raises(PreconditionError):
        picard_lefschetz("h5", D1)
    with pytest.raises(PreconditionError):
        OperatorStep.of((1, "h7"))
    with pytest.raises(PreconditionError):
        picard_lefschetz(1, (1, 0))


def test_grade2_action_is_the_bracket_of_images():
    rng = random.Random(7)
    for _ in range(20):
        u = tuple(rng.randint(-3, 3) for _ in range(4))
        v = tuple(rng.randint(-3, 3) for _ in range(4))
        for i in range(1, 5):
            expected = bracket(picard_lefschetz(i, u), picard_lefschetz(i, v))
            assert pl_grade2(i, bracket(u, v)) == expected


def test_h1_minus_identity():
    assert apply_step(H1_MINUS_ID, GENERIC) == grade2_from_parts(a=(b1, b2))


def test_h2_minus_identity():
    assert apply_step(H2_MINUS_ID, GENERIC) == grade2_from_parts(b=(-a1, -a2))


def test_h3_minus_identity_without_d1_d2_term():
    g = grade2_from_parts((a1, a2), (b1, b2), 0, n)
    b = tuple(b1 * x + b2 * y for x, y in zip(ALPHA1, ALPHA2))
    step = OperatorStep.of((1, "h3"), (-1, "id"))
    assert apply_step(step, g) == tuple(-c for c in bracket(D3, b))


def _expanded(g):
    return tuple(sympy.expand(v) for v in g)


def test_h4_minus_identity_without_d1_d2_term():
    g = grade2_from_parts((a1, a2), (b1, b2), 0, n)
    b = tuple(b1 * x + b2 * y for x, y in zip(ALPHA1, ALPHA2))
    step = OperatorStep.of((1, "h4"), (-1, "id"))
    assert _expanded(apply_step(step, g)) == _expanded(-c for c in bracket(D4, b))


@pytest.mark.parametrize("name, cycle", [("h3", D3), ("h4", D4)])
def test_d1_d2_bracket_moves_to_d1_and_a_vanishing_cycle(name, cycle):
    step = OperatorStep.of((1, name), (-1, "id"))
    result = apply_step(step, grade2_from_parts(m=m))
    assert _expanded(result) == _expanded(-m * c for c in bracket(D1, cycle))


def test_h3_minus_h4_on_d1_d2_bracket():
    alpha_difference = tuple(p - q for p, q in zip(ALPHA2, ALPHA1))
    assert tuple(p - q for p, q in zip(D4, D3)) == alpha_difference
    result = apply_step(H3_MINUS_H4, grade2_from_parts(m=m))
    assert _expanded(result) == _expanded(m * c for c in bracket(D1, alpha_difference))


def test_h3_minus_h4():
    expected = grade2_from_parts(a=(-m, m), n=-b1 - b2)
    assert apply_step(H3_MINUS_H4, GENERIC) == expected


def test_h1_minus_h3_and_h1_minus_h4():
    g = grade2_from_parts(b=(b1, b2))
    assert apply_step(H1_MINUS_H3, g) == grade2_from_parts(n=b2)
    assert apply_step(H1_MINUS_H4, g) == grade2_from_parts(n=-b1)


def test_step_texts():
    assert H1_MINUS_ID.text() == "h1 - id"
    assert OperatorStep.of((2, "h3"), (-1, "h4")).text() == "2h3 - h4"
    assert steps_text([H1_MINUS_ID, H2_MINUS_ID]) == "(h2 - id)(h1 - id)"
    assert steps_text([]) == "id"


def test_grade2_text():
    assert grade2_text((1, 0, 0, 0, 0, -2)) == "[d1,d2] - 2[alpha1,alpha2]"
    assert grade2_text((0,) * 6) == "0"
    assert grade2_text(grade2_from_parts(a=(m, 0))) == "(m)[d1,alpha1]"


def test_reduction_of_d1_d2():
    steps, k = reduce_to_alpha(grade2_from_parts(m=1))
    assert steps == (H3_MINUS_H4, H2_MINUS_ID, H1_MINUS_H3)
    assert k == -1


def test_reduction_of_alpha_bracket_needs_no_steps():
    assert reduce_to_alpha(grade2_from_parts(n=5)) == ((), 5)


def test_reduction_rejects_zero():
    with pytest.raises(ZeroElementError):
        reduce_to_alpha((0,) * 6)
    with pytest.raises(PreconditionError):
        reduce_to_alpha((1, 0))


def test_random_reductions_replay():
    rng = random.Random(2024)
    done = 0
    while done < 200:
        g = tuple(rng.randint(-4, 4) for _ in range(6))
        if not any(g):
            continue
        steps, k = reduce_to_alpha(g)
        assert k != 0
        assert len(steps) <= 3
        assert apply_steps(steps, g) == grade2_from_parts(n=k)
        done += 1
