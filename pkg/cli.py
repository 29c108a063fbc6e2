"""chenlab: command-line front end.

    python cli.py pair "[y,[x,z]]" "[z,[x,y]]"
    python cli.py --letters x,y hall -m 2 -k 5 --json
    python cli.py monodromy reduce 1,0,0,0,0,0

Every command prints human text by default and a JSON document with
``"schema": 1`` under ``--json``. Exact scalars are always written as strings.
"""
import json
import logging

import click

import scalars
from chenint import PairingTable, canonical_model, evaluate, pair_graded
from errors import ChenLabError, PreconditionError
from expr_parser import letters as expression_letters
from expr_parser import parse, parse_word, to_group_word, to_ncpoly
from freegrp import lcs_degree, magnus, phi_inverse
from liealg import decompose, hall_basis, is_lie, witt_number
from melnikov import Connection, WeightPair, ck, example_ex_m5, melnikov_integrand, pk_closed_form
from monodromy import GRADE2_NAMES, grade2_text, picard_lefschetz, pl_grade2, reduce_to_alpha, steps_text
from ncalg import Alphabet, inner, shuffle
from settings import configure_logging, load_settings

logger = logging.getLogger("chenlab")

SCHEMA = 1
LETTER_POOL = ("x", "y", "z", "u", "v", "w")


class ChenLabGroup(click.Group):
    """Turns library errors into clean click failures (exit code 1)."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except ChenLabError as exc:
            raise click.ClickException(str(exc)) from exc


def _read(text):
    if text == "-":
        return click.get_text_stream("stdin").read().strip()
    return text


def _alphabet(ctx, *nodes) -> Alphabet:
    if ctx.obj["letters"]:
        return Alphabet.of(ctx.obj["letters"])
    names = sorted({name for node in nodes for name in expression_letters(node)})
    return Alphabet.of(names or ctx.obj["settings"].letters)


def _alphabet_of_size(ctx, m: int) -> Alphabet:
    if m < 1:
        raise PreconditionError("m must be at least 1")
    if ctx.obj["letters"]:
        alphabet = Alphabet.of(ctx.obj["letters"])
        if len(alphabet) != m:
            raise PreconditionError(f"--letters names {len(alphabet)} letters, -m asks for {m}")
        return alphabet
    defaults = ctx.obj["settings"].letters
    if m <= len(defaults):
        return Alphabet.of(defaults[:m])
    if m <= len(LETTER_POOL):
        return Alphabet.of(LETTER_POOL[:m])
    return Alphabet.of([f"x{i}" for i in range(1, m + 1)])


def _weights(text) -> WeightPair:
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != 2 or not all(parts):
        raise PreconditionError(f"--weights needs two comma separated scalars, got {text!r}")
    return WeightPair(scalars.parse_scalar(parts[0]), scalars.parse_scalar(parts[1]))


def _emit(as_json, text, command, **payload):
    if as_json:
        payload.update(command=command, schema=SCHEMA)
        click.echo(json.dumps(payload, sort_keys=True, indent=2))
    else:
        click.echo(text)


json_option = click.option("--json", "as_json", is_flag=True, help="Emit a JSON document.")


@click.group(name="chenlab", cls=ChenLabGroup)
@click.option("--letters", default=None, help="Comma separated alphabet, in order (default: letters of the inputs).")
@click.option("--verbose", is_flag=True, help="Debug logging on stderr.")
@click.pass_context
def cli(ctx, letters, verbose):
    """Exact computations with free Lie algebras, iterated integrals and Melnikov functions."""
    settings = load_settings()
    configure_logging("DEBUG" if verbose else settings.log_level)
    ctx.obj = {"settings": settings, "letters": letters}


@cli.command()
@click.option("-m", "m", type=int, required=True, help="Number of letters.")
@click.option("-k", "k", type=int, required=True, help="Degree.")
@json_option
@click.pass_context
def hall(ctx, m, k, as_json):
    """Hall basis of the degree-k part of the free Lie algebra on m letters."""
    alphabet = _alphabet_of_size(ctx, m)
    basis = hall_basis(alphabet, k)
    texts = basis.texts()
    expansions = [p.to_text() for p in basis.expansions()]
    lines = [f"{t} = {e}" for t, e in zip(texts, expansions)]
    lines.append(f"dimension {len(basis)} (Witt number {witt_number(m, k)})")
    _emit(as_json, "\n".join(lines), "hall", letters=list(alphabet.letters), m=m, k=k,
          elements=texts, expansions=expansions, witt=witt_number(m, k))


@cli.command(name="expand")
@click.argument("expr")
@json_option
@click.pass_context
def expand_command(ctx, expr, as_json):
    """Expand brackets, shuffles and products into a polynomial."""
    text = _read(expr)
    node = parse(text)
    result = to_ncpoly(node, _alphabet(ctx, node)).to_text()
    _emit(as_json, result, "expand", input=text, result=result)


@cli.command(name="shuffle")
@click.argument("left")
@click.argument("right")
@json_option
@click.pass_context
def shuffle_command(ctx, left, right, as_json):
    """Shuffle product of two polynomials."""
    left, right = _read(left), _read(right)
    a, b = parse(left), parse(right)
    alphabet = _alphabet(ctx, a, b)
    result = shuffle(to_ncpoly(a, alphabet), to_ncpoly(b, alphabet)).to_text()
    _emit(as_json, result, "shuffle", left=left, right=right, result=result)


@cli.command()
@click.argument("left")
@click.argument("right")
@json_option
@click.pass_context
def pair(ctx, left, right, as_json):
    """Scalar product in which words are orthonormal."""
    left, right = _read(left), _read(right)
    a, b = parse(left), parse(right)
    alphabet = _alphabet(ctx, a, b)
    result = scalars.to_text(inner(to_ncpoly(a, alphabet), to_ncpoly(b, alphabet)))
    _emit(as_json, result, "pair", left=left, right=right, result=result)


@cli.command()
@click.argument("expr")
@json_option
@click.pass_context
def islie(ctx, expr, as_json):
    """Ree's test: is the polynomial a Lie element?"""
    text = _read(expr)
    node = parse(text)
    result = is_lie(to_ncpoly(node, _alphabet(ctx, node)))
    _emit(as_json, "true" if result else "false", "islie", input=text, result=result)


@cli.command()
@click.argument("expr")
@json_option
@click.pass_context
def project(ctx, expr, as_json):
    """Split a homogeneous polynomial into its Lie part and its shuffle part."""
    text = _read(expr)
    node = parse(text)
    lie, shf = decompose(to_ncpoly(node, _alphabet(ctx, node)))
    _emit(as_json, f"lie: {lie.to_text()}\nshuffle: {shf.to_text()}", "project",
          input=text, lie=lie.to_text(), shuffle=shf.to_text())


@cli.command(name="magnus")
@click.argument("gw")
@click.option("-N", "n", type=click.IntRange(min=1), default=None, help="Truncation degree (default CHENLAB_MAX_DEGREE).")
@json_option
@click.pass_context
def magnus_command(ctx, gw, n, as_json):
    """Magnus expansion of a group word, truncated at degree N."""
    text = _read(gw)
    node = parse(text)
    if n is None:
        n = ctx.obj["settings"].max_degree
    series = magnus(to_group_word(node, _alphabet(ctx, node)), n)
    _emit(as_json, series.to_text(), "magnus", input=text, degree=n, result=series.poly.to_text())


@cli.command()
@click.argument("gw")
@click.option("-N", "n", type=click.IntRange(min=1), default=None, help="Search bound (default CHENLAB_MAX_DEGREE).")
@json_option
@click.pass_context
def lcs(ctx, gw, n, as_json):
    """Lower central series degree of a group word and its Lie element."""
    text = _read(gw)
    node = parse(text)
    if n is None:
        n = ctx.obj["settings"].max_degree
    delta = to_group_word(node, _alphabet(ctx, node))
    if delta.is_identity:
        _emit(as_json, "identity", "lcs", input=text, degree="identity", bound=n)
        return
    k = lcs_degree(delta, n)
    if k is None:
        _emit(as_json, f"exceeds {n}", "lcs", input=text, degree=f"exceeds {n}", bound=n)
        return
    lie = phi_inverse(delta, n).to_text()
    _emit(as_json, f"{k}\n{lie}", "lcs", input=text, degree=k, bound=n, lie=lie)


@cli.command(name="eval")
@click.option("--model", type=click.Choice(["canonical"]), default="canonical", show_default=True)
@click.option("-N", "n", type=click.IntRange(min=1), default=None, help="Model truncation degree.")
@click.argument("gw")
@click.argument("poly")
@json_option
@click.pass_context
def eval_command(ctx, model, n, gw, poly, as_json):
    """Iterated integral of POLY along the group word GW."""
    gw_text, poly_text = _read(gw), _read(poly)
    gw_node, poly_node = parse(gw_text), parse(poly_text)
    alphabet = _alphabet(ctx, gw_node, poly_node)
    omega = to_ncpoly(poly_node, alphabet)
    if n is None:
        n = max(ctx.obj["settings"].max_degree, omega.degree)
    value = evaluate(canonical_model(alphabet, n), to_group_word(gw_node, alphabet), omega)
    result = scalars.to_text(value)
    _emit(as_json, result, "eval", model=model, path=gw_text, form=poly_text, result=result)


@cli.command()
@click.option("-k", "k", type=int, required=True)
@click.option("--weights", default="w1,w2", show_default=True, help="w1,w2 as scalars or symbols.")
@click.option("-i", "i", type=int, default=None, help="Only the alpha1^i alpha2^(k-i) part.")
@json_option
def pk(k, weights, i, as_json):
    """Closed form of t^(k-1) M_k for two forms with the given weights."""
    pair_of_weights = _weights(weights)
    indices = [i] if i is not None else list(range(k + 1))
    parts = {str(j): pk_closed_form(pair_of_weights, k, j).to_text() for j in indices}
    text = "\n".join(f"i={j}: {parts[str(j)]}" for j in indices)
    _emit(as_json, text, "pk", k=k, weights=weights, parts=parts)


@cli.command(name="ck")
@click.option("-k", "k", type=int, required=True)
@click.option("--weights", default="w1,w2", show_default=True)
@json_option
def ck_command(k, weights, as_json):
    """The scalar C_k(w1, w2)."""
    result = scalars.to_text(ck(_weights(weights), k))
    _emit(as_json, result, "ck", k=k, weights=weights, result=result)


@cli.command()
@json_option
def m5check(as_json):
    """Checks that the fifth Melnikov function of the degree-5 commutator vanishes."""
    value = example_ex_m5()
    result = scalars.to_text(value)
    holds = scalars.is_zero(value)
    text = f"{result} (identity holds)" if holds else f"{result} (identity fails)"
    _emit(as_json, text, "m5check", result=result, holds=holds)


@cli.command()
@click.argument("gw")
@click.argument("word")
@click.option("--table", "table_file", type=click.File("r"), default=None,
              help="JSON pairing table {alphabet, forms, table}.")
@json_option
@click.pass_context
def graded(ctx, gw, word, table_file, as_json):
    """Graded pairing of a word of forms with the Lie element of GW."""
    gw_text, word_text = _read(gw), _read(word)
    gw_node, word_node = parse(gw_text), parse(word_text)
    if table_file is not None:
        table = PairingTable.from_document(json.load(table_file))
    else:
        paths = _alphabet(ctx, gw_node)
        forms = Alphabet.of(sorted(expression_letters(word_node)))
        table = PairingTable.symbolic(paths, forms)
    delta = to_group_word(gw_node, table.path_alphabet)
    result = scalars.to_text(pair_graded(table, delta, parse_word(word_text, table.form_alphabet)))
    _emit(as_json, result, "graded", path=gw_text, word=word_text, result=result)


@cli.command()
@click.option("--connection", "connection_file", type=click.File("r"), required=True,
              help="JSON connection {alphabet, delta_poly, matrix | weights}.")
@click.option("-k", "k", type=int, required=True)
@click.option("--form", "form", required=True, help="Degree-1 polynomial in the connection's letters.")
@json_option
def integrand(connection_file, k, form, as_json):
    """The nested Melnikov integrand w (w (... w')')' of order k."""
    conn = Connection.from_document(json.load(connection_file))
    omega = to_ncpoly(parse(_read(form)), conn.alphabet)
    result = melnikov_integrand(conn, omega, k).to_text()
    _emit(as_json, result, "integrand", k=k, form=form, result=result)


@cli.group(cls=ChenLabGroup)
def monodromy():
    """Picard-Lefschetz action of the D4 configuration."""


def _integers(text, *sizes):
    parts = [part.strip() for part in _read(text).split(",")]
    try:
        values = [int(part) for part in parts]
    except ValueError:
        raise PreconditionError(f"expected comma separated integers, got {text!r}") from None
    if len(values) not in sizes:
        wanted = " or ".join(str(s) for s in sizes)
        raise PreconditionError(f"expected {wanted} coordinates, got {len(values)}")
    return values


@monodromy.command()
@click.argument("vec6")
@json_option
def reduce(vec6, as_json):
    """Operator word P with P(g) = k [alpha1, alpha2]; g is given on the bracket basis."""
    g = _integers(vec6, 6)
    steps, k = reduce_to_alpha(g)
    word = steps_text(steps)
    _emit(as_json, f"{word}\nk = {k}", "monodromy reduce", input=grade2_text(g),
          steps=[step.text() for step in steps], word=word, k=str(k))


@monodromy.command()
@click.option("-i", "i", type=click.IntRange(1, 4), required=True)
@click.argument("vec")
@json_option
def act(i, vec, as_json):
    """h_i on a cycle (4 coordinates) or on a degree-2 element (6 coordinates)."""
    values = _integers(vec, 4, 6)
    if len(values) == 6:
        image = pl_grade2(i, values)
        text = grade2_text(image)
        payload = dict(basis=list(GRADE2_NAMES))
    else:
        image = picard_lefschetz(i, values)
        text = ",".join(str(v) for v in image)
        payload = dict(basis=["d1", "d2", "d3", "d4"])
    _emit(as_json, text, "monodromy act", operator=f"h{i}", result=[str(v) for v in image], **payload)


if __name__ == "__main__":
    cli()
