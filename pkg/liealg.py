"""Bracket expressions, Hall bases and the Lie/shuffle decomposition.

A LieTree is either a letter index (a leaf) or a pair ``(left, right)`` standing
for the bracket ``[left, right] = left right - right left``.

Hall order: trees compare by degree and then recursively by (left, right);
``[a, b]`` is a basic commutator when ``a < b`` and either ``b`` is a letter or
``b.left <= a``. For two letters x < y this gives the right-nested elements
``[x,y]``, ``[x,[x,y]]``, ``[y,[x,y]]``, ``[[x,y],[x,[x,y]]]``, ...
"""
from __future__ import annotations

import logging
import random
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple, Union

from sympy.functions.combinatorial.numbers import mobius
from sympy.ntheory import divisors
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

import scalars
from errors import InvalidLetterError, PreconditionError
from ncalg import Alphabet, NcPoly, inner, lie_bracket, shuffle_words, words_of_degree

logger = logging.getLogger(__name__)

LieTree = Union[int, Tuple["LieTree", "LieTree"]]


def is_leaf(tree) -> bool:
    return isinstance(tree, int)


def tree_degree(tree: LieTree) -> int:
    if is_leaf(tree):
        return 1
    return tree_degree(tree[0]) + tree_degree(tree[1])


def foliage(tree: LieTree):
    if is_leaf(tree):
        return (tree,)
    return foliage(tree[0]) + foliage(tree[1])


def validate_tree(tree, alphabet: Alphabet):
    if is_leaf(tree):
        if isinstance(tree, bool) or not 0 <= tree < len(alphabet):
            raise InvalidLetterError(f"letter index {tree!r} outside alphabet {alphabet}")
        return
    if not isinstance(tree, tuple) or len(tree) != 2:
        raise PreconditionError(f"{tree!r} is neither a letter index nor a pair")
    validate_tree(tree[0], alphabet)
    validate_tree(tree[1], alphabet)


def tree_text(tree: LieTree, alphabet: Alphabet) -> str:
    if is_leaf(tree):
        return alphabet.name(tree)
    return f"[{tree_text(tree[0], alphabet)},{tree_text(tree[1], alphabet)}]"


def tree_key(tree: LieTree):
    if is_leaf(tree):
        return (1, tree)
    return (tree_degree(tree), tree_key(tree[0]), tree_key(tree[1]))


def mirror_tree(tree: LieTree) -> LieTree:
    if is_leaf(tree):
        return tree
    return (mirror_tree(tree[1]), mirror_tree(tree[0]))


def random_tree(degree: int, size: int, rng: random.Random) -> LieTree:
    """Random bracket expression with the given number of leaves over size letters."""
    if degree < 1:
        raise PreconditionError("a tree has at least one leaf")
    if degree == 1:
        return rng.randrange(size)
    split = rng.randint(1, degree - 1)
    return (random_tree(split, size, rng), random_tree(degree - split, size, rng))


@lru_cache(maxsize=4096)
def _expand(tree, alphabet):
    if is_leaf(tree):
        return NcPoly.letter(alphabet, tree)
    return lie_bracket(_expand(tree[0], alphabet), _expand(tree[1], alphabet))


def expand(tree: LieTree, alphabet: Alphabet) -> NcPoly:
    validate_tree(tree, alphabet)
    return _expand(tree, alphabet)


def witt_number(m: int, k: int) -> int:
    """Dimension of the degree-k part of the free Lie algebra on m letters."""
    if k < 1:
        raise PreconditionError("degree must be at least 1")
    return int(sum(int(mobius(d)) * m ** (k // d) for d in divisors(k))) // k


class HallBasis:
    """Basic commutators of one degree, in Hall order."""

    def __init__(self, alphabet: Alphabet, degree: int, elements):
        self.alphabet = alphabet
        self.degree = degree
        self.elements = tuple(elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, index):
        return self.elements[index]

    def expansions(self) -> List[NcPoly]:
        return [_expand(tree, self.alphabet) for tree in self.elements]

    def texts(self) -> List[str]:
        return [tree_text(tree, self.alphabet) for tree in self.elements]

    def __repr__(self):
        return f"HallBasis(degree={self.degree}, elements={self.texts()})"


@lru_cache(maxsize=64)
def _hall_levels(alphabet: Alphabet, k: int):
    levels = [tuple(range(len(alphabet)))]
    for d in range(2, k + 1):
        level = []
        for left_degree in range(1, d):
            for a in levels[left_degree - 1]:
                for b in levels[d - left_degree - 1]:
                    if tree_key(a) >= tree_key(b):
                        continue
                    if is_leaf(b) or tree_key(b[0]) <= tree_key(a):
                        level.append((a, b))
        level.sort(key=tree_key)
        levels.append(tuple(level))
        logger.debug("hall level %d over %s: %d elements", d, alphabet, len(level))
    return tuple(levels)


def hall_basis(alphabet: Alphabet, k: int) -> HallBasis:
    if k < 1:
        raise PreconditionError("Hall bases start in degree 1")
    return HallBasis(alphabet, k, _hall_levels(alphabet, k)[k - 1])


def _qq(value):
    value = scalars.normalize(value)
    if not isinstance(value, Fraction):
        raise PreconditionError(f"rank computations need rational coefficients, got {value}")
    return QQ(value.numerator, value.denominator)


def coefficient_rows(polys, alphabet: Alphabet, k: int):
    words = list(words_of_degree(alphabet, k))
    return [[_qq(p.coefficient(w)) for w in words] for p in polys]


def rank_of(polys, alphabet: Alphabet, k: int) -> int:
    rows = coefficient_rows(polys, alphabet, k)
    if not rows:
        return 0
    return DomainMatrix(rows, (len(rows), len(alphabet) ** k), QQ).rank()


def lie_rank(alphabet: Alphabet, k: int) -> int:
    return rank_of(hall_basis(alphabet, k).expansions(), alphabet, k)


def shuffle_spanning_set(alphabet: Alphabet, k: int):
    """Shuffles u * v of nonempty words with |u| + |v| = k, one per unordered pair."""
    out = []
    for r in range(1, k // 2 + 1):
        for u in words_of_degree(alphabet, r):
            for v in words_of_degree(alphabet, k - r):
                if r == k - r and v < u:
                    continue
                out.append(NcPoly(alphabet, shuffle_words(tuple(u), tuple(v))))
    return out


def shuffle_rank(alphabet: Alphabet, k: int) -> int:
    return rank_of(shuffle_spanning_set(alphabet, k), alphabet, k)


def _content(word):
    return tuple(sorted(word))


def _orthogonal_to_shuffles(p: NcPoly) -> bool:
    k = p.degree
    alphabet = p.alphabet
    contents = {_content(w) for w in p.words()}
    for r in range(1, k // 2 + 1):
        for u in words_of_degree(alphabet, r):
            for v in words_of_degree(alphabet, k - r):
                if r == k - r and v < u:
                    continue
                if _content(u + v) not in contents:
                    continue
                total = scalars.ZERO
                for w, count in shuffle_words(tuple(u), tuple(v)).items():
                    total = total + count * p.coefficient(w)
                if not scalars.is_zero(total):
                    return False
    return True


def is_lie(p: NcPoly) -> bool:
    """Ree's criterion: every homogeneous part is orthogonal to all shuffles."""
    for k, part in p.components().items():
        if k == 0:
            return False
        if k >= 2 and not _orthogonal_to_shuffles(part):
            return False
    return True


def left_bracketing(word, alphabet: Alphabet) -> NcPoly:
    result = NcPoly.letter(alphabet, word[0])
    for letter in word[1:]:
        result = lie_bracket(result, NcPoly.letter(alphabet, letter))
    return result


def dynkin(p: NcPoly) -> NcPoly:
    """Linear extension of w -> [[..[a1,a2],..],ak]."""
    out = NcPoly.zero(p.alphabet)
    for word, coeff in p.items():
        if not word:
            raise PreconditionError("the Dynkin operator is not defined on constants")
        out = out + left_bracketing(word, p.alphabet).scale(coeff)
    return out


def is_lie_dynkin(p: NcPoly) -> bool:
    """Dynkin-Specht-Wever: a homogeneous p of degree k is Lie iff D(p) = k p."""
    for k, part in p.components().items():
        if k == 0:
            return False
        if dynkin(part) != part.scale(k):
            return False
    return True


@lru_cache(maxsize=64)
def _gram_inverse(alphabet: Alphabet, k: int):
    basis = hall_basis(alphabet, k).expansions()
    n = len(basis)
    rows = [[_qq(inner(a, b)) for b in basis] for a in basis]
    inv = DomainMatrix(rows, (n, n), QQ).inv().to_Matrix()
    logger.debug("inverted %dx%d Gram matrix in degree %d", n, n, k)
    return tuple(tuple(scalars.normalize(inv[i, j]) for j in range(n)) for i in range(n))


def decompose(p: NcPoly):
    """Split a homogeneous p into (lie, shf) with lie in L and shf orthogonal to L.

    The Lie part is the orthogonal projection onto the span of the Hall
    expansions; the projection needs the inverse of a Witt-number sized Gram
    matrix, i.e. cubic work in that dimension.
    """
    zero = NcPoly.zero(p.alphabet)
    if p.is_zero():
        return zero, zero
    if not p.is_homogeneous():
        raise PreconditionError("decompose needs a homogeneous polynomial")
    k = p.degree
    if k == 0:
        raise PreconditionError("constants lie in neither L nor S")

    basis = hall_basis(p.alphabet, k).expansions()
    gram_inv = _gram_inverse(p.alphabet, k)
    rhs = [inner(e, p) for e in basis]
    lie = zero
    for i, e in enumerate(basis):
        coeff = scalars.ZERO
        for j, b in enumerate(rhs):
            coeff = coeff + gram_inv[i][j] * b
        coeff = scalars.normalize(coeff)
        if coeff != 0:
            lie = lie + e.scale(coeff)
    return lie, p - lie


def in_lie_span(p: NcPoly) -> bool:
    for k, part in p.components().items():
        if k == 0:
            return False
        if not decompose(part)[1].is_zero():
            return False
    return True
