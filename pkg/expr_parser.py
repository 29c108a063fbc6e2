"""Text syntax for words, brackets, group words and polynomials.

    [a, b]      Lie bracket a b - b a
    (a, b)      group commutator a b a^-1 b^-1
    a b         concatenation (or product of group words)
    a # b       shuffle product
    a^-1        inverse of a group word
    2 x, 1/2 x, {w2 - w1} x    scalar multiples; braces hold symbolic scalars

Sums and differences bind loosest, then ``#``, then juxtaposition.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import pyparsing as pp

import scalars
from errors import ExpressionKindError, ExpressionSyntaxError, ScalarError
from freegrp import GroupWord, commutator, gw_inv, gw_mul
from ncalg import Alphabet, NcPoly, concat_mul, lie_bracket, shuffle

logger = logging.getLogger(__name__)

pp.ParserElement.enable_packrat()


@dataclass(frozen=True)
class Letter:
    name: str


@dataclass(frozen=True)
class Bracket:
    left: object
    right: object


@dataclass(frozen=True)
class Commutator:
    left: object
    right: object


@dataclass(frozen=True)
class Inverse:
    base: object


@dataclass(frozen=True)
class Concat:
    factors: Tuple[object, ...]


@dataclass(frozen=True)
class Shuffle:
    factors: Tuple[object, ...]


@dataclass(frozen=True)
class ScalarLit:
    value: object

    def __eq__(self, other):
        return isinstance(other, ScalarLit) and scalars.equal(self.value, other.value)

    def __hash__(self):
        return hash(scalars.to_text(self.value))


@dataclass(frozen=True)
class Scaled:
    scalar: ScalarLit
    body: object


@dataclass(frozen=True)
class Sum:
    """Signed summands: ((sign, node), ...) with sign "+" or "-"."""

    terms: Tuple[Tuple[str, object], ...]


def _build_scalar(text, loc, tokens):
    try:
        return ScalarLit(Fraction(tokens[0]))
    except ZeroDivisionError as exc:
        raise pp.ParseFatalException(text, loc, f"zero denominator in {tokens[0]}") from exc


def _build_symbolic(text, loc, tokens):
    try:
        return ScalarLit(scalars.parse_scalar(tokens[0]))
    except ScalarError as exc:
        raise pp.ParseFatalException(text, loc, str(exc)) from exc


def _build_postfix(tokens):
    node = tokens[0]
    for _ in tokens[1:]:
        node = Inverse(node)
    return node


def _build_term(tokens):
    tokens = list(tokens)
    # a leading scalar prefix arrives grouped, a parenthesized scalar factor does not
    scalar = tokens.pop(0)[0] if isinstance(tokens[0], pp.ParseResults) else None
    if len(tokens) == 1:
        body = tokens[0]
    else:
        body = Concat(tuple(tokens))
    return Scaled(scalar, body) if scalar is not None else body


def _build_shuffled(tokens):
    if len(tokens) == 1:
        return tokens[0]
    return Shuffle(tuple(tokens))


def _build_sum(tokens):
    tokens = list(tokens)
    if len(tokens) == 1 and not isinstance(tokens[0], str):
        return tokens[0]
    if not isinstance(tokens[0], str):
        tokens.insert(0, "+")
    return Sum(tuple((tokens[i], tokens[i + 1]) for i in range(0, len(tokens), 2)))


def _grammar():
    expr = pp.Forward()
    comma = pp.Suppress(",")

    letter = pp.Word(pp.alphas, pp.alphanums + "_").set_parse_action(lambda t: Letter(t[0]))
    rational = pp.Combine(pp.Word(pp.nums) + pp.Optional("/" + pp.Word(pp.nums)))
    rational.set_parse_action(_build_scalar)
    symbolic = pp.QuotedString("{", end_quote_char="}").set_parse_action(_build_symbolic)
    scalar = (rational | symbolic).set_name("scalar")

    bracket = (pp.Suppress("[") + expr + comma + expr + pp.Suppress("]"))
    bracket.set_parse_action(lambda t: Bracket(t[0], t[1]))
    group_commutator = (pp.Suppress("(") + expr + comma + expr + pp.Suppress(")"))
    group_commutator.set_parse_action(lambda t: Commutator(t[0], t[1]))
    parenthesized = pp.Suppress("(") + expr + pp.Suppress(")")

    primary = (letter | bracket | group_commutator | parenthesized).set_name("operand")
    postfix = (primary + pp.ZeroOrMore(pp.Literal("^-1"))).set_parse_action(_build_postfix)
    postfix.set_name("operand")
    term = (
        (pp.Group(scalar) + pp.Optional(pp.Suppress("*")) + pp.OneOrMore(postfix))
        | pp.OneOrMore(postfix)
        | scalar
    ).set_parse_action(_build_term).set_name("term")
    shuffled = (term + pp.ZeroOrMore(pp.Suppress("#") + term)).set_parse_action(_build_shuffled)
    shuffled.set_name("term")
    sign = pp.one_of("+ -").set_name("sign")
    expr <<= (pp.Optional(sign) + shuffled + pp.ZeroOrMore(sign + shuffled)).set_parse_action(_build_sum)
    return expr.set_name("expression")


_EXPR = _grammar()


def parse(text: str):
    try:
        return _EXPR.parse_string(text, parse_all=True)[0]
    except (pp.ParseException, pp.ParseFatalException) as exc:
        raise ExpressionSyntaxError(exc.msg, text, exc.lineno, exc.col) from None


def _is_primary(node) -> bool:
    return isinstance(node, (Letter, Bracket, Commutator, Inverse))


def _wrap(node) -> str:
    return f"({print_expression(node)})"


def print_expression(node) -> str:
    """Inverse of :func:`parse`: parentheses appear only where the grammar needs them."""
    if isinstance(node, Letter):
        return node.name
    if isinstance(node, Bracket):
        return f"[{print_expression(node.left)},{print_expression(node.right)}]"
    if isinstance(node, Commutator):
        return f"({print_expression(node.left)},{print_expression(node.right)})"
    if isinstance(node, Inverse):
        base = print_expression(node.base) if _is_primary(node.base) else _wrap(node.base)
        return f"{base}^-1"
    if isinstance(node, ScalarLit):
        value = scalars.normalize(node.value)
        if isinstance(value, Fraction) and value >= 0:
            return scalars.to_text(value)
        return "{" + scalars.to_text(value) + "}"
    if isinstance(node, Concat):
        return " ".join(print_expression(f) if _is_primary(f) else _wrap(f) for f in node.factors)
    if isinstance(node, Scaled):
        body = node.body
        if isinstance(body, Concat) or _is_primary(body):
            body_text = print_expression(body)
        else:
            body_text = _wrap(body)
        return f"{print_expression(node.scalar)} {body_text}"
    if isinstance(node, Shuffle):
        pieces = [_wrap(f) if isinstance(f, (Shuffle, Sum)) else print_expression(f) for f in node.factors]
        return " # ".join(pieces)
    if isinstance(node, Sum):
        pieces = []
        for index, (sign, summand) in enumerate(node.terms):
            body = _wrap(summand) if isinstance(summand, Sum) else print_expression(summand)
            if index == 0:
                pieces.append(f"-{body}" if sign == "-" else body)
            else:
                pieces.append(f"{sign} {body}")
        text = " ".join(pieces)
        # a leading "+" is implicit, so a single positive summand needs it spelled out
        if len(node.terms) == 1 and node.terms[0][0] == "+":
            text = "+" + text
        return text
    raise ExpressionKindError(f"cannot print {node!r}")


def letters(node) -> Tuple[str, ...]:
    """Letter names in order of first appearance."""
    seen = []

    def walk(n):
        if isinstance(n, Letter):
            if n.name not in seen:
                seen.append(n.name)
        elif isinstance(n, (Bracket, Commutator)):
            walk(n.left)
            walk(n.right)
        elif isinstance(n, Inverse):
            walk(n.base)
        elif isinstance(n, (Concat, Shuffle)):
            for f in n.factors:
                walk(f)
        elif isinstance(n, Scaled):
            walk(n.body)
        elif isinstance(n, Sum):
            for _, t in n.terms:
                walk(t)

    walk(node)
    return tuple(seen)


def to_lie_tree(node, alphabet: Alphabet):
    if isinstance(node, Letter):
        return alphabet.index(node.name)
    if isinstance(node, Bracket):
        return (to_lie_tree(node.left, alphabet), to_lie_tree(node.right, alphabet))
    raise ExpressionKindError(f"{print_expression(node)} is not a bracket of letters")


def to_group_word(node, alphabet: Alphabet) -> GroupWord:
    if isinstance(node, Letter):
        return GroupWord.generator(alphabet, node.name)
    if isinstance(node, Inverse):
        return gw_inv(to_group_word(node.base, alphabet))
    if isinstance(node, Commutator):
        return commutator(to_group_word(node.left, alphabet), to_group_word(node.right, alphabet))
    if isinstance(node, Concat):
        result = GroupWord.identity(alphabet)
        for factor in node.factors:
            result = gw_mul(result, to_group_word(factor, alphabet))
        return result
    if isinstance(node, ScalarLit) and scalars.equal(node.value, 1):
        return GroupWord.identity(alphabet)
    raise ExpressionKindError(f"{print_expression(node)} is not a group word")


def to_ncpoly(node, alphabet: Alphabet) -> NcPoly:
    if isinstance(node, Letter):
        return NcPoly.letter(alphabet, node.name)
    if isinstance(node, ScalarLit):
        return NcPoly.constant(alphabet, node.value)
    if isinstance(node, Bracket):
        return lie_bracket(to_ncpoly(node.left, alphabet), to_ncpoly(node.right, alphabet))
    if isinstance(node, Concat):
        result = NcPoly.one(alphabet)
        for factor in node.factors:
            result = concat_mul(result, to_ncpoly(factor, alphabet))
        return result
    if isinstance(node, Shuffle):
        result = to_ncpoly(node.factors[0], alphabet)
        for factor in node.factors[1:]:
            result = shuffle(result, to_ncpoly(factor, alphabet))
        return result
    if isinstance(node, Scaled):
        return to_ncpoly(node.body, alphabet).scale(node.scalar.value)
    if isinstance(node, Sum):
        result = NcPoly.zero(alphabet)
        for sign, summand in node.terms:
            part = to_ncpoly(summand, alphabet)
            result = result + part if sign == "+" else result - part
        return result
    raise ExpressionKindError(f"{print_expression(node)} is a group expression, not a polynomial")


def parse_word(text: str, alphabet: Alphabet):
    """A plain word of letters, e.g. ``omega1 omega2``."""
    node = parse(text)
    factors = node.factors if isinstance(node, Concat) else (node,)
    if not all(isinstance(f, Letter) for f in factors):
        raise ExpressionKindError(f"{text!r} is not a word of letters")
    return tuple(alphabet.index(f.name) for f in factors)
