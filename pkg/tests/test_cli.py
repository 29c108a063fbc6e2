import json

import pytest
from click.testing import CliRunner

from cli import cli


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for name in ("CHENLAB_MAX_DEGREE", "CHENLAB_LETTERS", "CHENLAB_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def runner():
    return CliRunner()


def _golden(document):
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def _run(runner, *args, **kwargs):
    result = runner.invoke(cli, list(args), **kwargs)
    assert result.exit_code == 0, result.output
    return result.stdout


def test_pair_golden(runner):
    out = _run(runner, "pair", "[y,[x,z]]", "[z,[x,y]]", "--json")
    assert out == _golden({"command": "pair", "left": "[y,[x,z]]", "right": "[z,[x,y]]",
                           "result": "2", "schema": 1})


def test_ck_golden(runner):
    out = _run(runner, "ck", "-k", "2", "--json")
    assert out == _golden({"command": "ck", "k": 2, "result": "w2 - w1", "schema": 1,
                           "weights": "w1,w2"})


def test_m5check_golden(runner):
    out = _run(runner, "m5check", "--json")
    assert out == _golden({"command": "m5check", "holds": True, "result": "0", "schema": 1})
    assert _run(runner, "m5check") == "0 (identity holds)\n"


def test_hall_golden(runner):
    out = _run(runner, "hall", "-m", "2", "-k", "3", "--json")
    assert out == _golden({
        "command": "hall", "schema": 1, "letters": ["x", "y"], "m": 2, "k": 3,
        "elements": ["[x,[x,y]]", "[y,[x,y]]"],
        "expansions": ["x x y - 2 x y x + y x x", "-x y y + 2 y x y - y y x"],
        "witt": 2,
    })


def test_expand_and_shuffle_golden(runner):
    assert _run(runner, "expand", "[x,y]", "--json") == _golden(
        {"command": "expand", "input": "[x,y]", "result": "x y - y x", "schema": 1})
    assert _run(runner, "shuffle", "x y", "z", "--json") == _golden(
        {"command": "shuffle", "left": "x y", "right": "z", "result": "x y z + x z y + z x y",
         "schema": 1})


def test_islie_golden(runner):
    assert _run(runner, "islie", "[x,[x,y]]", "--json") == _golden(
        {"command": "islie", "input": "[x,[x,y]]", "result": True, "schema": 1})
    assert _run(runner, "islie", "x # y") == "false\n"


def test_project_golden(runner):
    assert _run(runner, "project", "x y", "--json") == _golden(
        {"command": "project", "input": "x y", "lie": "1/2 x y - 1/2 y x",
         "shuffle": "1/2 x y + 1/2 y x", "schema": 1})


def test_magnus_golden(runner):
    assert _run(runner, "magnus", "x", "-N", "2", "--json") == _golden(
        {"command": "magnus", "input": "x", "degree": 2, "result": "1 + x + 1/2 x x", "schema": 1})
    assert _run(runner, "magnus", "x", "-N", "2") == "1 + x + 1/2 x x + O(3)\n"


def test_lcs_golden(runner):
    assert _run(runner, "lcs", "(x,y)", "-N", "3", "--json") == _golden(
        {"command": "lcs", "input": "(x,y)", "degree": 2, "bound": 3, "lie": "x y - y x",
         "schema": 1})
    assert _run(runner, "lcs", "x x^-1", "--json") == _golden(
        {"command": "lcs", "input": "x x^-1", "degree": "identity", "bound": 6, "schema": 1})
    assert _run(runner, "lcs", "((x,y),x)", "-N", "2") == "exceeds 2\n"


def test_eval_golden(runner):
    assert _run(runner, "eval", "--model", "canonical", "x", "x x", "--json") == _golden(
        {"command": "eval", "model": "canonical", "path": "x", "form": "x x", "result": "1/2",
         "schema": 1})


def test_pk_golden(runner):
    assert _run(runner, "pk", "-k", "2", "-i", "1", "--json") == _golden(
        {"command": "pk", "k": 2, "weights": "w1,w2",
         "parts": {"1": "{w2} omega1 omega2 + {w1} omega2 omega1"}, "schema": 1})


def test_graded_with_symbolic_table(runner):
    assert _run(runner, "graded", "(x,y)", "x y", "--json") == _golden(
        {"command": "graded", "path": "(x,y)", "word": "x y",
         "result": "v_x_x*v_y_y - v_x_y*v_y_x", "schema": 1})


def test_graded_of_a_deeper_path_is_zero(runner):
    assert _run(runner, "graded", "(x,y)", "x") == "0\n"
    assert _run(runner, "graded", "x x^-1", "x y") == "0\n"


def test_graded_with_table_file(runner, tmp_path):
    table = tmp_path / "table.json"
    table.write_text(json.dumps({"alphabet": ["a", "b"], "forms": ["p", "q"],
                                 "table": [[1, 2], [3, 4]]}))
    out = _run(runner, "graded", "(a,b)", "p q", "--table", str(table))
    assert out == "-2\n"


def test_integrand_golden(runner, tmp_path):
    connection = tmp_path / "connection.json"
    connection.write_text(json.dumps({"alphabet": ["p", "q"], "weights": ["w1", "w2"]}))
    out = _run(runner, "integrand", "--connection", str(connection), "-k", "2", "--form", "p",
               "--json")
    assert out == _golden({"command": "integrand", "k": 2, "form": "p",
                           "result": "{w1/t} p p", "schema": 1})


def test_monodromy_reduce_golden(runner):
    assert _run(runner, "monodromy", "reduce", "1,0,0,0,0,0", "--json") == _golden({
        "command": "monodromy reduce", "input": "[d1,d2]",
        "steps": ["h3 - h4", "h2 - id", "h1 - h3"],
        "word": "(h1 - h3)(h2 - id)(h3 - h4)", "k": "-1", "schema": 1,
    })


def test_monodromy_act_golden(runner):
    assert _run(runner, "monodromy", "act", "-i", "1", "0,1,0,0", "--json") == _golden({
        "command": "monodromy act", "operator": "h1", "result": ["1", "1", "0", "0"],
        "basis": ["d1", "d2", "d3", "d4"], "schema": 1,
    })


def test_reads_stdin(runner):
    assert _run(runner, "expand", "-", input="x # y\n") == "x y + y x\n"


def test_explicit_letters_fix_the_alphabet(runner):
    assert _run(runner, "--letters", "y,x", "expand", "x y + y x") == "y x + x y\n"


@pytest.mark.parametrize("args", [
    ["pair", "[x,", "y"],
    ["monodromy", "reduce", "0,0,0,0,0,0"],
    ["monodromy", "reduce", "1,2"],
    ["lcs", "[x,y]"],
    ["ck", "-k", "1"],
    ["--letters", "x,y", "hall", "-m", "3", "-k", "2"],
])
def test_failures_exit_with_one(runner, args):
    result = runner.invoke(cli, args)
    assert result.exit_code == 1
    assert "Error" in result.output


def test_usage_errors_exit_with_two(runner):
    assert runner.invoke(cli, ["hall", "-m", "2"]).exit_code == 2
    assert runner.invoke(cli, ["nosuchcommand"]).exit_code == 2


@pytest.mark.parametrize("args", [
    ["magnus", "x", "-N", "0"],
    ["lcs", "x x^-1", "-N", "0"],
    ["eval", "x", "x", "-N", "0"],
])
def test_degree_bounds_must_be_positive(runner, args):
    result = runner.invoke(cli, args)
    assert result.exit_code != 0
    assert "O(7)" not in result.output


def test_environment_sets_the_default_bound(runner, monkeypatch):
    monkeypatch.setenv("CHENLAB_MAX_DEGREE", "4")
    out = _run(runner, "lcs", "x x^-1", "--json")
    assert json.loads(out)["bound"] == 4
