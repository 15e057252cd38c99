import random
import subprocess
import sys

import pytest

from dichromatic import cli
from dichromatic.cli import densify, format_coloring, main, parse, parse_coloring, serialize
from dichromatic.digraph import Digraph
from dichromatic.errors import ParseError
from dichromatic.generators import named
from dichromatic.oracle import Coloring

from conftest import C3, C5


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# ---------------------------------------------------------------- formats

def test_parse_examples():
    assert parse("3 3\n0 1\n1 2\n2 0") == C3
    assert parse("1 0") == Digraph([0])


@pytest.mark.parametrize("text, line, fragment", [
    ("2 1\n0 0", 2, "loop"),
    ("", 1, "header"),
    ("3 x", 1, "integers"),
    ("3 2\n0 1\n0 1", 3, "duplicate"),
    ("3 1\n0 5", 2, "range"),
    ("3 2\n0 1", 2, "announces"),
    ("3 1\n0 1\n1 2", 3, "announces"),
    ("# comment\n2 1\n\n0 1 7", 4, "integers"),
])
def test_parse_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")
    assert fragment in str(info.value)


def test_serialize_emits_map_only_when_relabeling():
    assert "# map" not in serialize(C3)
    text = serialize(Digraph([3, 7], [(7, 3)]))
    assert "# map 3 0" in text and "# map 7 1" in text
    assert parse(text) == Digraph([0, 1], [(1, 0)])


def test_round_trip_random_digraphs():
    rng = random.Random(7)
    for _ in range(1000):
        ids = sorted(rng.sample(range(40), rng.randint(0, 9)))
        arcs = [(u, v) for u in ids for v in ids if u != v and rng.random() < 0.3]
        D = Digraph(ids, arcs)
        dense, mapping = densify(D)
        assert parse(serialize(D)) == dense
        assert set(dense.arcs()) == {(mapping[u], mapping[v]) for u, v in D.arcs()}


def test_coloring_documents():
    assert format_coloring(Coloring({1: 2, 0: 1}, 2)) == "0 1\n1 2\n"
    assert parse_coloring("0 1\n# x\n1 2\n") == {0: 1, 1: 2}
    with pytest.raises(ParseError):
        parse_coloring("0 1\n0 2")
    with pytest.raises(ParseError):
        parse_coloring("0 0")


# --------------------------------------------------------------- commands

def test_chi_on_triangle(tmp_path, capsys):
    code, out, _ = run(capsys, "chi", write(tmp_path, "c3.txt", serialize(C3)))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "chi 2"
    assert len(lines) == 4


def test_color_w3plus_on_c5_then_verify(tmp_path, capsys):
    g = write(tmp_path, "c5.txt", serialize(C5))
    code, out, _ = run(capsys, "color", "--algorithm", "w3plus", "--anchor", "0", g)
    assert code == 0
    colors = parse_coloring(out)
    assert len(set(colors.values())) == 2
    assert colors[0] == colors[1]
    code, out, _ = run(capsys, "verify", g, write(tmp_path, "c.txt", out))
    assert (code, out) == (0, "VALID\n")


def test_check_reports_witness(tmp_path, capsys):
    g = write(tmp_path, "w.txt", serialize(named("w+", 3)))
    code, out, _ = run(capsys, "check", "--class", "digon,s2+,w3+", g)
    assert code == 1
    assert out.splitlines() == ["NOT_IN_CLASS w3+", "0 1 2 3"]
    code, out, _ = run(capsys, "check", "--class", "digon,s2+,c3", write(tmp_path, "c5.txt", serialize(C5)))
    assert (code, out) == (0, "IN_CLASS\n")


def test_check_with_pattern_file(tmp_path, capsys):
    pat = write(tmp_path, "p.txt", "2 1\n0 1\n")
    code, out, _ = run(capsys, "check", "--pattern-file", pat, write(tmp_path, "c3.txt", serialize(C3)))
    assert code == 1
    assert out.startswith(f"NOT_IN_CLASS {pat}")


def test_verify_reports_cycle(tmp_path, capsys):
    g = write(tmp_path, "c3.txt", serialize(C3))
    code, out, _ = run(capsys, "verify", g, write(tmp_path, "c.txt", "0 1\n1 1\n2 1\n"))
    assert code == 1
    assert out.startswith("INVALID color 1 cycle")
    code, out, _ = run(capsys, "verify", g, write(tmp_path, "p.txt", "0 1\n"))
    assert code == 1 and out.startswith("INVALID")


@pytest.mark.parametrize("algorithm, extra", [
    ("w3minus", ["--arc", "0,1"]),
    ("w3minus", []),
    ("p111", []),
    ("addsink", []),
    ("addsink", ["--hero", "tt2"]),
    ("locally-complete", []),
])
def test_every_algorithm_on_c5(tmp_path, capsys, algorithm, extra):
    g = write(tmp_path, "c5.txt", serialize(C5))
    code, out, _ = run(capsys, "color", "--algorithm", algorithm, *extra, g)
    assert code == 0
    assert sorted(parse_coloring(out)) == list(range(5))


def test_exit_code_class_violation(tmp_path, capsys):
    g = write(tmp_path, "w.txt", serialize(named("w+", 3)))
    code, out, err = run(capsys, "color", "--algorithm", "w3plus", g)
    assert code == 2 and out == "" and "w3+" in err


def test_exit_code_parse_error(tmp_path, capsys):
    code, out, err = run(capsys, "chi", write(tmp_path, "bad.txt", "2 1\n0 0\n"))
    assert code == 3 and "line 2" in err
    code, _, _ = run(capsys, "chi", str(tmp_path / "missing.txt"))
    assert code == 3


def test_exit_code_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["color", "--algorithm", "nope", "x"])
    assert info.value.code == 3


def test_exit_code_size_limit(tmp_path, capsys, monkeypatch):
    g = write(tmp_path, "c5.txt", serialize(C5))
    code, _, _ = run(capsys, "chi", "--limit", "4", g)
    assert code == 4
    monkeypatch.setenv("DICHROMATIC_CHI_LIMIT", "3")
    code, _, _ = run(capsys, "chi", g)
    assert code == 4


def test_precondition_errors(tmp_path, capsys):
    g = write(tmp_path, "c5.txt", serialize(C5))
    assert run(capsys, "color", "--algorithm", "w3minus", "--arc", "0,2", g)[0] == 2
    assert run(capsys, "color", "--algorithm", "addsink", "--hero", "c3x", g)[0] == 2
    assert run(capsys, "color", "--algorithm", "addsink", "--hero", "k4s", g)[0] == 2
    assert run(capsys, "gen", "--random")[0] == 2


def test_fault_injection_never_prints_invalid(tmp_path, capsys, monkeypatch):
    g = write(tmp_path, "c3.txt", serialize(C3))
    monkeypatch.setitem(cli.ALGORITHMS, "w3plus", lambda D, args: Coloring.constant(D.vertices))
    code, out, err = run(capsys, "color", "--algorithm", "w3plus", g)
    assert code == 5 and out == "" and "monochromatic" in err
    monkeypatch.setitem(cli.ALGORITHMS, "w3plus", lambda D, args: {0: 1})
    code, out, _ = run(capsys, "color", "--algorithm", "w3plus", g)
    assert code == 5 and out == ""


def test_gen_named_and_random(capsys):
    code, out, _ = run(capsys, "gen", "--name", "cycle", "--k", "5")
    assert code == 0 and parse(out) == C5
    code, out, _ = run(capsys, "gen", "--random", "--n", "9", "--seed", "3", "--class", "digon,s2+,w3+")
    assert code == 0
    again = run(capsys, "gen", "--random", "--n", "9", "--seed", "3", "--class", "digon,s2+,w3+")[1]
    assert out == again
    assert len(parse(out)) <= 9


def test_module_entry_point(tmp_path):
    g = write(tmp_path, "c3.txt", serialize(C3))
    proc = subprocess.run([sys.executable, "-m", "dichromatic", "chi", g], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("chi 2")
