import math
from fractions import Fraction

import pytest
import sympy

import scalars
from chenint import (IntegralModel, PairingTable, canonical_model, check_inversion,
                     check_multiplicativity, check_shuffle_relation, check_unit, evaluate,
                     graded_pairing_matrix, is_nondegenerate, magnus_agrees, model_from_logs,
                     pair_graded)
from errors import AlphabetMismatchError, DegreeMismatchError, DegreeOverflowError, ModelError
from freegrp import GroupWord, commutator, lcs_degree, nested_commutator, phi_inverse
from liealg import expand, random_tree
from ncalg import Alphabet, NcPoly, from_words, inner, shuffle, words_of_degree
from tseries import TruncSeries, ts_exp

XY = Alphabet.of("x,y")
x = GroupWord.generator(XY, "x")
y = GroupWord.generator(XY, "y")


@pytest.fixture(scope="module")
def canonical():
    return canonical_model(XY, 6)


def _random_group_word(rng, alphabet, length):
    return GroupWord(alphabet, [(rng.randrange(len(alphabet)), rng.choice((1, -1)))
                                for _ in range(length)])


def _random_word(rng, alphabet, degree):
    return tuple(rng.randrange(len(alphabet)) for _ in range(degree))


@pytest.mark.parametrize("n", range(1, 7))
def test_powers_of_one_form_along_its_path(canonical, n):
    omega = NcPoly.from_word(XY, (0,) * n)
    assert evaluate(canonical, x, omega) == Fraction(1, math.factorial(n))


def test_canonical_value_at_degree_six(canonical):
    assert evaluate(canonical, y, NcPoly.from_word(XY, "y y y y y y")) == Fraction(1, 720)
    assert evaluate(canonical, x, NcPoly.from_word(XY, "x y")) == 0


def test_axioms_on_random_inputs(canonical, rng):
    for _ in range(25):
        alpha = _random_group_word(rng, XY, rng.randint(0, 4))
        beta = _random_group_word(rng, XY, rng.randint(0, 4))
        word = _random_word(rng, XY, rng.randint(0, 5))
        u = _random_word(rng, XY, rng.randint(1, 3))
        v = _random_word(rng, XY, rng.randint(1, 2))
        assert check_unit(canonical, NcPoly.from_word(XY, word) + 3)
        assert check_multiplicativity(canonical, alpha, beta, word)
        assert check_inversion(canonical, alpha, word)
        assert check_shuffle_relation(canonical, alpha, u, v)


def test_axioms_hold_for_a_symbolic_model():
    a, b = sympy.symbols("a b")
    forms = Alphabet.of("p,q")
    paths = Alphabet.of("g")
    log = from_words(forms, [("p", a), ("q", b)])
    model = model_from_logs(paths, forms, 3, {0: log})
    g = GroupWord.generator(paths, "g")
    assert check_multiplicativity(model, g, g, forms.word("p q p"))
    assert check_inversion(model, g, forms.word("p q"))
    assert check_shuffle_relation(model, g, forms.word("p"), forms.word("q q"))
    assert scalars.equal(evaluate(model, g, NcPoly.from_word(forms, "p q")), a * b / 2)


def test_integrals_of_nested_commutators_follow_their_lie_element(canonical, rng):
    checked = 0
    while checked < 50:
        tree = random_tree(rng.randint(1, 4), 2, rng)
        if expand(tree, XY).is_zero():
            continue
        delta = nested_commutator(XY, tree)
        k = lcs_degree(delta, 4)
        lie = phi_inverse(delta, 4)
        for word in words_of_degree(XY, k):
            omega = NcPoly.from_word(XY, word)
            assert evaluate(canonical, delta, omega) == inner(omega, lie)
        for degree in range(1, k):
            for word in words_of_degree(XY, degree):
                assert evaluate(canonical, delta, NcPoly.from_word(XY, word)) == 0
        checked += 1


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_graded_pairing_is_nondegenerate(k):
    matrix = graded_pairing_matrix(XY, k)
    assert matrix.shape[0] == matrix.shape[1]
    assert is_nondegenerate(matrix)


def test_pair_graded_with_symbolic_table():
    table = PairingTable.symbolic(XY)
    value = pair_graded(table, commutator(x, y), "x y")
    vxx, vxy, vyx, vyy = sympy.symbols("v_x_x v_x_y v_y_x v_y_y")
    assert scalars.equal(value, vxx * vyy - vyx * vxy)


def test_pair_graded_with_identity_table_matches_canonical(canonical):
    delta = nested_commutator(XY, (1, (0, 1)))
    table = PairingTable.identity(XY)
    for word in words_of_degree(XY, 3):
        omega = NcPoly.from_word(XY, word)
        assert pair_graded(table, delta, omega) == evaluate(canonical, delta, omega)


def test_pair_graded_degree_checks():
    table = PairingTable.identity(XY)
    with pytest.raises(DegreeMismatchError):
        pair_graded(table, commutator(x, y), "x y x")
    with pytest.raises(DegreeMismatchError):
        pair_graded(table, x, from_words(XY, [("x", 1), ("x y", 1)]))
    assert pair_graded(table, x, NcPoly.zero(XY)) == 0


def test_paths_deeper_than_the_forms_pair_to_zero():
    symbolic = PairingTable.symbolic(XY)
    assert pair_graded(symbolic, commutator(x, y), "x") == 0
    assert pair_graded(symbolic, GroupWord.identity(XY), "x") == 0
    assert pair_graded(symbolic, GroupWord.identity(XY), "x y") == 0
    deep = nested_commutator(XY, (0, (0, 1)))
    assert pair_graded(PairingTable.identity(XY), deep, "x y") == 0


def test_table_documents():
    table = PairingTable.from_document({"alphabet": ["x", "y"], "table": [["1", "w"], [0, "1/2"]]})
    assert table.value("y", "y") == Fraction(1, 2)
    assert scalars.equal(table.value("x", "y"), sympy.Symbol("w"))
    with pytest.raises(ModelError):
        PairingTable.from_document({"alphabet": ["x", "y"], "table": [[1, 0]]})
    with pytest.raises(ModelError):
        PairingTable.from_document({"table": []})


def test_model_validation():
    with pytest.raises(ModelError):
        IntegralModel(XY, XY, 3, {0: ts_exp(NcPoly.letter(XY, "x"), 3)})
    not_grouplike = TruncSeries(from_words(XY, [("", 1), ("x y", 1)]), 3)
    with pytest.raises(ModelError):
        IntegralModel(XY, XY, 3, {0: not_grouplike, 1: not_grouplike})
    with pytest.raises(ModelError):
        model_from_logs(XY, XY, 3, {0: NcPoly.from_word(XY, "x y"), 1: NcPoly.letter(XY, "y")})
    canonical = canonical_model(XY, 3)
    with pytest.raises(ModelError):
        IntegralModel(XY, XY, 4, canonical.series)


def test_evaluate_errors(canonical):
    with pytest.raises(DegreeOverflowError):
        evaluate(canonical, x, NcPoly.from_word(XY, (0,) * 7))
    with pytest.raises(AlphabetMismatchError):
        evaluate(canonical, x, NcPoly.letter(Alphabet.of("a,b"), "a"))


def test_canonical_model_is_the_magnus_map(rng):
    for _ in range(5):
        assert magnus_agrees(_random_group_word(rng, XY, rng.randint(0, 5)), 4)


def _random_lie_log(rng, forms):
    log = NcPoly.zero(forms)
    for _ in range(3):
        tree = random_tree(rng.randint(1, 3), len(forms), rng)
        log = log + expand(tree, forms).scale(Fraction(rng.randint(-3, 3), rng.randint(1, 3)))
    return log


def test_axioms_hold_for_random_grouplike_models(rng):
    forms = Alphabet.of("p,q")
    for _ in range(4):
        model = model_from_logs(XY, forms, 4, {i: _random_lie_log(rng, forms) for i in range(2)})
        for _ in range(6):
            alpha = _random_group_word(rng, XY, rng.randint(0, 3))
            beta = _random_group_word(rng, XY, rng.randint(0, 3))
            word = _random_word(rng, forms, rng.randint(0, 4))
            u = _random_word(rng, forms, rng.randint(1, 2))
            v = _random_word(rng, forms, rng.randint(1, 2))
            assert check_unit(model, NcPoly.from_word(forms, word) + 2)
            assert check_multiplicativity(model, alpha, beta, word)
            assert check_inversion(model, alpha, word)
            assert check_shuffle_relation(model, alpha, u, v)


def test_shuffles_vanish_on_the_leading_degree(canonical, rng):
    checked = 0
    while checked < 20:
        tree = random_tree(rng.randint(2, 4), 2, rng)
        if expand(tree, XY).is_zero():
            continue
        delta = nested_commutator(XY, tree)
        k = lcs_degree(delta, 4)
        for r in range(1, k):
            u = _random_word(rng, XY, r)
            v = _random_word(rng, XY, k - r)
            pu, pv = NcPoly.from_word(XY, u), NcPoly.from_word(XY, v)
            assert evaluate(canonical, delta, shuffle(pu, pv)) == 0
        checked += 1
