"""Words and noncommutative polynomials over a finite alphabet.

An NcPoly is a sparse map word -> scalar, words being tuples of letter indices.
The empty word is the unit. Besides the concatenation product this module
provides the shuffle product and the canonical scalar product in which the
words form an orthonormal basis.
"""
from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, Mapping, Tuple

import scalars
from errors import AlphabetMismatchError, InvalidLetterError, PreconditionError

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]
EMPTY_WORD: Word = ()


@dataclass(frozen=True)
class Alphabet:
    letters: Tuple[str, ...]

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        if not letters:
            raise PreconditionError("an alphabet needs at least one letter")
        if len(set(letters)) != len(letters):
            raise PreconditionError(f"duplicate letters in {letters}")
        for name in letters:
            if not isinstance(name, str) or not name.isidentifier():
                raise InvalidLetterError(f"{name!r} is not a valid letter name")

    @classmethod
    def of(cls, names) -> "Alphabet":
        """Alphabet from a sequence of names or a comma separated string."""
        if isinstance(names, str):
            names = [part.strip() for part in names.split(",") if part.strip()]
        return cls(tuple(names))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def index(self, letter) -> int:
        if isinstance(letter, int):
            if not 0 <= letter < len(self.letters):
                raise InvalidLetterError(f"letter index {letter} outside alphabet {self}")
            return letter
        try:
            return self.letters.index(letter)
        except ValueError:
            raise InvalidLetterError(f"unknown letter {letter!r} for alphabet {self}") from None

    def name(self, index: int) -> str:
        return self.letters[self.index(index)]

    def word(self, names) -> Word:
        """Word from letter names; a string is split on whitespace."""
        if isinstance(names, str):
            names = names.split()
        return tuple(self.index(name) for name in names)

    def word_text(self, word: Word) -> str:
        if not word:
            return "1"
        return " ".join(self.letters[i] for i in word)

    def __str__(self):
        return "{" + ", ".join(self.letters) + "}"


def word_key(word: Word):
    """Length-lexicographic order."""
    return (len(word), word)


def words_of_degree(alphabet: Alphabet, k: int) -> Iterator[Word]:
    if k < 0:
        raise PreconditionError("degree must be non-negative")
    return itertools.product(range(len(alphabet)), repeat=k)


@lru_cache(maxsize=65536)
def shuffle_words(u: Word, v: Word) -> Counter:
    """All interleavings of u and v, counted with multiplicity."""
    n = len(u) + len(v)
    out = Counter()
    for positions in itertools.combinations(range(n), len(u)):
        chosen = set(positions)
        left = iter(u)
        right = iter(v)
        out[tuple(next(left) if i in chosen else next(right) for i in range(n))] += 1
    return out


class NcPoly:
    """Element of the free associative algebra over an alphabet."""

    __slots__ = ("alphabet", "_terms")

    def __init__(self, alphabet: Alphabet, terms: Mapping[Word, object] = None):
        self.alphabet = alphabet
        clean: Dict[Word, scalars.Scalar] = {}
        size = len(alphabet)
        for word, coeff in (terms or {}).items():
            word = tuple(word)
            for letter in word:
                if not isinstance(letter, int) or not 0 <= letter < size:
                    raise InvalidLetterError(f"letter index {letter!r} outside alphabet {alphabet}")
            coeff = scalars.normalize(coeff)
            if coeff != 0:
                clean[word] = coeff
        self._terms = clean

    @classmethod
    def zero(cls, alphabet):
        return cls(alphabet)

    @classmethod
    def one(cls, alphabet):
        return cls(alphabet, {EMPTY_WORD: scalars.ONE})

    @classmethod
    def constant(cls, alphabet, value):
        return cls(alphabet, {EMPTY_WORD: value})

    @classmethod
    def letter(cls, alphabet, letter):
        return cls(alphabet, {(alphabet.index(letter),): scalars.ONE})

    @classmethod
    def from_word(cls, alphabet, word, coeff=1):
        if isinstance(word, str):
            word = alphabet.word(word)
        return cls(alphabet, {tuple(word): coeff})

    @property
    def terms(self) -> Mapping[Word, scalars.Scalar]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda item: word_key(item[0]))

    def words(self):
        return sorted(self._terms, key=word_key)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, word) -> scalars.Scalar:
        if isinstance(word, str):
            word = self.alphabet.word(word)
        return self._terms.get(tuple(word), scalars.ZERO)

    @property
    def degree(self) -> int:
        """Largest word length; -1 for the zero polynomial."""
        return max((len(w) for w in self._terms), default=-1)

    @property
    def low_degree(self) -> int:
        return min((len(w) for w in self._terms), default=-1)

    def degrees(self):
        return sorted({len(w) for w in self._terms})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def components(self) -> Dict[int, "NcPoly"]:
        return {k: homogeneous_part(self, k) for k in self.degrees()}

    def map_coefficients(self, fn) -> "NcPoly":
        return NcPoly(self.alphabet, {w: fn(c) for w, c in self._terms.items()})

    def scale(self, value) -> "NcPoly":
        value = scalars.normalize(value)
        if value == 0:
            return NcPoly(self.alphabet)
        return NcPoly(self.alphabet, {w: c * value for w, c in self._terms.items()})

    def _check(self, other):
        if not isinstance(other, NcPoly):
            raise TypeError(f"expected NcPoly, got {type(other).__name__}")
        if other.alphabet != self.alphabet:
            raise AlphabetMismatchError(f"alphabets differ: {self.alphabet} vs {other.alphabet}")

    def __add__(self, other):
        if not isinstance(other, NcPoly):
            other = NcPoly.constant(self.alphabet, other)
        self._check(other)
        out = dict(self._terms)
        for word, coeff in other._terms.items():
            out[word] = out[word] + coeff if word in out else coeff
        return NcPoly(self.alphabet, out)

    __radd__ = __add__

    def __neg__(self):
        return NcPoly(self.alphabet, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, NcPoly):
            other = NcPoly.constant(self.alphabet, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, NcPoly):
            return concat_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        if other.alphabet != self.alphabet or self._terms.keys() != other._terms.keys():
            return False
        return all(scalars.equal(c, other._terms[w]) for w, c in self._terms.items())

    def __hash__(self):
        return hash((self.alphabet, frozenset(self._terms)))

    def to_text(self) -> str:
        """Parseable text: ``x y - y x``, ``1/2 x y``, ``{w2 - w1} x y``."""
        if not self._terms:
            return "0"
        pieces = []
        for word, coeff in self.items():
            word_text = self.alphabet.word_text(word) if word else ""
            if isinstance(coeff, Fraction):
                negative = coeff < 0
                magnitude = abs(coeff)
                if not word:
                    body = scalars.to_text(magnitude)
                elif magnitude == 1:
                    body = word_text
                else:
                    body = f"{scalars.to_text(magnitude)} {word_text}"
            else:
                negative = False
                body = "{" + scalars.to_text(coeff) + "}"
                if word:
                    body += f" {word_text}"
            pieces.append((negative, body))
        negative, body = pieces[0]
        text = f"-{body}" if negative else body
        for negative, body in pieces[1:]:
            text += f" - {body}" if negative else f" + {body}"
        return text

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"NcPoly({self.to_text()!r})"


def _same_alphabet(p: NcPoly, q: NcPoly):
    p._check(q)


def concat_mul(p: NcPoly, q: NcPoly) -> NcPoly:
    _same_alphabet(p, q)
    out: Dict[Word, object] = {}
    for u, a in p._terms.items():
        for v, b in q._terms.items():
            w = u + v
            out[w] = out[w] + a * b if w in out else a * b
    return NcPoly(p.alphabet, out)


def lie_bracket(p: NcPoly, q: NcPoly) -> NcPoly:
    return concat_mul(p, q) - concat_mul(q, p)


def shuffle(p: NcPoly, q: NcPoly) -> NcPoly:
    _same_alphabet(p, q)
    out: Dict[Word, object] = {}
    for u, a in p._terms.items():
        for v, b in q._terms.items():
            prod = a * b
            for w, count in shuffle_words(u, v).items():
                out[w] = out[w] + count * prod if w in out else count * prod
    return NcPoly(p.alphabet, out)


def shuffle_many(polys: Iterable[NcPoly]) -> NcPoly:
    polys = list(polys)
    if not polys:
        raise PreconditionError("shuffle of an empty family")
    result = polys[0]
    for p in polys[1:]:
        result = shuffle(result, p)
    return result


def inner(p: NcPoly, q: NcPoly) -> scalars.Scalar:
    """The scalar product in which distinct words are orthonormal."""
    _same_alphabet(p, q)
    if len(q._terms) < len(p._terms):
        p, q = q, p
    total = scalars.ZERO
    for word, coeff in p._terms.items():
        other = q._terms.get(word)
        if other is not None:
            total = total + coeff * other
    return scalars.normalize(total)


def homogeneous_part(p: NcPoly, k: int) -> NcPoly:
    if k < 0:
        raise PreconditionError("degree must be non-negative")
    return NcPoly(p.alphabet, {w: c for w, c in p._terms.items() if len(w) == k})


def truncate(p: NcPoly, n: int) -> NcPoly:
    """Drop every term of degree above n."""
    return NcPoly(p.alphabet, {w: c for w, c in p._terms.items() if len(w) <= n})


def from_words(alphabet: Alphabet, pairs) -> NcPoly:
    """NcPoly from (word text, coefficient) pairs."""
    out: Dict[Word, object] = {}
    for word, coeff in pairs:
        w = alphabet.word(word) if isinstance(word, str) else tuple(word)
        out[w] = out[w] + coeff if w in out else coeff
    return NcPoly(alphabet, out)
