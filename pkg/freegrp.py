"""Free groups, the lower central series and the Magnus map.

A GroupWord is a freely reduced sequence of syllables (letter, +1 | -1). The
Magnus map sends a letter x to exp(x) and its inverse to exp(-x) in the
truncated tensor algebra; the lowest nonzero homogeneous part of the image of
an element of the k-th lower central term is its Lie element in degree k.
"""
from __future__ import annotations

import logging
from functools import lru_cache
from typing import Optional, Tuple

from errors import AlphabetMismatchError, DegreeOverflowError, PreconditionError, IdentityWordError
from liealg import LieTree, is_leaf, validate_tree
from ncalg import Alphabet, NcPoly, homogeneous_part
from tseries import TruncSeries, ts_exp, ts_mul

logger = logging.getLogger(__name__)

Syllable = Tuple[int, int]


def _reduce(syllables):
    stack = []
    for letter, exponent in syllables:
        if stack and stack[-1][0] == letter and stack[-1][1] == -exponent:
            stack.pop()
        else:
            stack.append((letter, exponent))
    return tuple(stack)


class GroupWord:
    __slots__ = ("alphabet", "syllables")

    def __init__(self, alphabet: Alphabet, syllables=()):
        checked = []
        for letter, exponent in syllables:
            letter = alphabet.index(letter)
            if exponent not in (1, -1):
                raise PreconditionError(f"exponent {exponent!r} is not +1 or -1")
            checked.append((letter, exponent))
        self.alphabet = alphabet
        self.syllables = _reduce(checked)

    @classmethod
    def identity(cls, alphabet):
        return cls(alphabet)

    @classmethod
    def generator(cls, alphabet, letter, exponent=1):
        return cls(alphabet, [(letter, exponent)])

    @property
    def is_identity(self) -> bool:
        return not self.syllables

    def __len__(self):
        return len(self.syllables)

    def __mul__(self, other):
        return gw_mul(self, other)

    def __invert__(self):
        return gw_inv(self)

    def power(self, n: int) -> "GroupWord":
        base = self if n >= 0 else gw_inv(self)
        result = GroupWord.identity(self.alphabet)
        for _ in range(abs(n)):
            result = gw_mul(result, base)
        return result

    def __eq__(self, other):
        if not isinstance(other, GroupWord):
            return NotImplemented
        return self.alphabet == other.alphabet and self.syllables == other.syllables

    def __hash__(self):
        return hash((self.alphabet, self.syllables))

    def to_text(self) -> str:
        if not self.syllables:
            return "1"
        names = self.alphabet.letters
        return " ".join(names[l] if e == 1 else f"{names[l]}^-1" for l, e in self.syllables)

    def __repr__(self):
        return f"GroupWord({self.to_text()!r})"


def _check(a: GroupWord, b: GroupWord):
    if a.alphabet != b.alphabet:
        raise AlphabetMismatchError(f"alphabets differ: {a.alphabet} vs {b.alphabet}")


def gw_mul(a: GroupWord, b: GroupWord) -> GroupWord:
    _check(a, b)
    return GroupWord(a.alphabet, a.syllables + b.syllables)


def gw_inv(a: GroupWord) -> GroupWord:
    return GroupWord(a.alphabet, [(l, -e) for l, e in reversed(a.syllables)])


def commutator(a: GroupWord, b: GroupWord) -> GroupWord:
    """(a, b) = a b a^-1 b^-1"""
    _check(a, b)
    return GroupWord(a.alphabet, a.syllables + b.syllables
                     + gw_inv(a).syllables + gw_inv(b).syllables)


def nested_commutator(alphabet: Alphabet, tree: LieTree) -> GroupWord:
    """Group word obtained from a bracket expression by reading [a, b] as (a, b)."""
    validate_tree(tree, alphabet)
    if is_leaf(tree):
        return GroupWord.generator(alphabet, tree)
    return commutator(nested_commutator(alphabet, tree[0]), nested_commutator(alphabet, tree[1]))


@lru_cache(maxsize=256)
def _letter_series(alphabet: Alphabet, letter: int, exponent: int, n: int) -> TruncSeries:
    return ts_exp(NcPoly.letter(alphabet, letter).scale(exponent), n)


def magnus(delta: GroupWord, n: int) -> TruncSeries:
    if n < 1:
        raise PreconditionError("Magnus truncation degree must be at least 1")
    result = TruncSeries.one(delta.alphabet, n)
    for letter, exponent in delta.syllables:
        result = ts_mul(result, _letter_series(delta.alphabet, letter, exponent, n))
    logger.debug("magnus of %d syllables up to degree %d", len(delta), n)
    return result


def lcs_degree(delta: GroupWord, n_max: int) -> Optional[int]:
    """Lower central series degree, certified up to n_max.

    None means no homogeneous part of degrees 1..n_max is nonzero; this is the
    only answer for the identity, which callers tell apart by ``is_identity``.
    """
    if n_max < 1:
        raise PreconditionError("n_max must be at least 1")
    if delta.is_identity:
        return None
    series = magnus(delta, n_max)
    for k in range(1, n_max + 1):
        if not series.part(k).is_zero():
            return k
    return None


def phi_inverse(delta: GroupWord, max_degree: int = 6) -> NcPoly:
    """Lie element of delta in its graded piece: the degree-k part of magnus(delta, k)."""
    if delta.is_identity:
        raise IdentityWordError("the identity has no Lie element")
    k = lcs_degree(delta, max_degree)
    if k is None:
        raise DegreeOverflowError(f"{delta.to_text()} lies deeper than degree {max_degree}")
    return homogeneous_part(magnus(delta, k).poly, k)
