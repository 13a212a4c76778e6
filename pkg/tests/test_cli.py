"""End-to-end command line behavior and exit codes."""

import io
import json

import pytest

from picard31.cli import main
from picard31.eisenstein import ONE, ZERO
from picard31.hermitian import (inversion, matrix_from_json_text,
                                matrix_to_json_text, translation_matrix,
                                unit_correction)
from picard31.words import evaluate, parse

N1_JSON = matrix_to_json_text(translation_matrix((ONE, ZERO), 1))
NON_MEMBER_JSON = json.dumps(
    {"matrix": [[[2, 0], [0, 0], [0, 0], [0, 0]],
                [[0, 0], [1, 0], [0, 0], [0, 0]],
                [[0, 0], [0, 0], [1, 0], [0, 0]],
                [[0, 0], [0, 0], [0, 0], [1, 0]]]})


def run(capsys, argv, stdin=""):
    import sys

    old = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        code = main(argv)
    finally:
        sys.stdin = old
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_member_stdin(capsys):
    code, out, err = run(capsys, ["verify"], stdin=N1_JSON)
    assert code == 0
    assert out.strip() == "member"


def test_verify_member_file(tmp_path, capsys):
    path = tmp_path / "m.json"
    path.write_text(N1_JSON)
    code, out, _ = run(capsys, ["verify", str(path), "--json"])
    assert code == 0
    assert json.loads(out) == {"member": True}


def test_verify_rejects_non_member(capsys):
    code, out, err = run(capsys, ["verify"], stdin=NON_MEMBER_JSON)
    assert code == 1
    assert "not a member" in err
    code, out, _ = run(capsys, ["verify", "--json"], stdin=NON_MEMBER_JSON)
    assert code == 1
    assert json.loads(out)["member"] is False


def test_verify_malformed_input(capsys):
    code, _, err = run(capsys, ["verify"], stdin="{nope")
    assert code == 2
    assert err


def test_missing_file(capsys):
    code, _, err = run(capsys, ["verify", "/nonexistent/path.json"])
    assert code == 2


def test_decompose_text(capsys):
    g = evaluate(parse("N^2 R B^-1 N"))
    code, out, _ = run(capsys, ["decompose"], stdin=matrix_to_json_text(g))
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("unit: ")
    assert lines[1].startswith("word: ")


def test_decompose_json_round_trip(capsys):
    g = evaluate(parse("N^2 R B^-1 N A N^-3 R"))
    code, out, _ = run(capsys, ["decompose", "--json"],
                       stdin=matrix_to_json_text(g))
    assert code == 0
    obj = json.loads(out)
    from picard31.eisenstein import EisensteinInt

    unit = EisensteinInt(obj["unit"][0], obj["unit"][1])
    assert unit_correction(unit) * evaluate(parse(obj["word"])) == g


def test_decompose_trace(capsys):
    g = evaluate(parse("R N^3 R"))
    code, out, _ = run(capsys, ["decompose", "--trace"],
                       stdin=matrix_to_json_text(g))
    assert code == 0
    assert "stabilizer:" in out
    code, out, _ = run(capsys, ["decompose", "--trace", "--json"],
                       stdin=matrix_to_json_text(g))
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    trace = json.loads(lines[1])
    assert "steps" in trace and "stabilizer" in trace


def test_decompose_rejects_non_member(capsys):
    code, _, err = run(capsys, ["decompose"], stdin=NON_MEMBER_JSON)
    assert code == 1


def test_evaluate(capsys):
    code, out, _ = run(capsys, ["evaluate", "--json"], stdin="N^2 A R")
    assert code == 0
    g = matrix_from_json_text(out)
    assert g == evaluate(parse("N^2 A R"))
    # Text mode prints a 4-row grid.
    code, out, _ = run(capsys, ["evaluate"], stdin="R")
    assert code == 0
    assert len(out.splitlines()) == 4


def test_evaluate_bad_word(capsys):
    code, _, err = run(capsys, ["evaluate"], stdin="N^2 Q")
    assert code == 2
    assert "byte" in err


def test_random_deterministic(capsys):
    code, out1, _ = run(capsys, ["random", "--seed", "12", "--json"])
    assert code == 0
    code, out2, _ = run(capsys, ["random", "--seed", "12", "--json"])
    assert out1 == out2
    obj = json.loads(out1)
    assert obj["seed"] == 12
    g = matrix_from_json_text(out1)
    assert g == evaluate(parse(obj["word"]))


def test_random_env_seed(capsys, monkeypatch):
    monkeypatch.setenv("PICARD_SEED", "99")
    code, out, _ = run(capsys, ["random", "--json"])
    assert code == 0
    assert json.loads(out)["seed"] == 99
    # Flag wins over the environment.
    code, out, _ = run(capsys, ["random", "--seed", "5", "--json"])
    assert json.loads(out)["seed"] == 5


def test_random_bad_env_seed(capsys, monkeypatch):
    monkeypatch.setenv("PICARD_SEED", "yes")
    code, _, err = run(capsys, ["random", "--json"])
    assert code == 2
    assert "PICARD_SEED" in err


def test_random_entropy_seed(capsys, monkeypatch):
    monkeypatch.delenv("PICARD_SEED", raising=False)
    code, out, _ = run(capsys, ["random", "--json"])
    assert code == 0
    assert "seed" in json.loads(out)


def test_random_pipes_into_decompose(capsys):
    code, out, _ = run(capsys, ["random", "--seed", "3", "--json"])
    code, out2, _ = run(capsys, ["decompose", "--json"], stdin=out)
    assert code == 0
    assert "word" in json.loads(out2)


def test_fuzz(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, out, _ = run(capsys, ["fuzz", "--seed", "20", "--iterations", "25",
                                "--max-len", "15", "--json"])
    assert code == 0
    obj = json.loads(out)
    assert obj["iterations"] == 25
    assert obj["max_steps"] >= 1
    assert sum(rec["count"] for rec in obj["contraction_histogram"]) > 0
    # No counterexample file on success.
    assert not list(tmp_path.iterdir())


def test_fuzz_text(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, out, _ = run(capsys, ["fuzz", "--seed", "20", "--iterations", "5"])
    assert code == 0
    assert "max steps:" in out
    assert "histogram" in out


def test_u2_table(capsys):
    code, out, _ = run(capsys, ["u2-table"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "72 elements"
    assert len(lines) == 73


def test_u2_table_json(capsys):
    from picard31.finite_unitary import FiniteUnitary, evaluate_uword, UGen

    code, out, _ = run(capsys, ["u2-table", "--json"])
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 72
    seen = set()
    for line in lines:
        obj = json.loads(line)
        u = FiniteUnitary.from_json(obj["rows"])
        seen.add(u)
        word = []
        for tok in obj["word"].split():
            name, _, exp = tok.partition("^")
            word.append((UGen[name], int(exp) if exp else 1))
        assert evaluate_uword(tuple(word)) == u
    assert len(seen) == 72
