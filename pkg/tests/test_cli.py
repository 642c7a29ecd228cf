import json

import pytest

import hopfmon.__main__ as cli
from hopfmon.__main__ import main
from hopfmon.lib.formal_sum import FormalSum


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out.strip()


def test_antipode_of_a_partition(capsys):
    code, out = run(capsys, "antipode", "--monoid", "pi", "--element", "[[1,2],[3]]", "--method", "takeuchi")
    assert code == 0
    assert out == '{"[[1,2],[3]]": 1}'


def test_antipode_of_an_order(capsys):
    assert run(capsys, "antipode", "--monoid", "l", "--element", "[2,1]") == (0, '{"[1,2]": 1}')


def test_antipode_of_two_triangles(capsys):
    code, out = run(capsys, "antipode", "--monoid", "hg", "--element", "1,2,4/2,3,4", "--method", "orientations")
    assert code == 0
    assert json.loads(out) == {"[[1,2,4],[2,3,4]]": -1, "[[1,2,4]]": 2, "[[2,3,4]]": 2, "[]": -2}


def test_antipode_verify(capsys):
    code, _ = run(capsys, "antipode", "--monoid", "hg", "--element", "1,2,4/2,3,4", "--verify")
    assert code == 0
    code, out = run(capsys, "antipode", "--monoid", "lxh", "--inner", "l", "--element", "12|12", "--verify")
    assert code == 0
    assert json.loads(out) == {"[[2,1],[2,1]]": 1}
    code, out = run(capsys, "antipode", "--monoid", "kl", "--element", "21", "--method", "pr")
    assert json.loads(out) == {"[1,2]": 2, "[2,1]": -1}


def test_text_output(capsys):
    code, out = run(capsys, "antipode", "--monoid", "g", "--element", "1-2", "--format", "text")
    assert code == 0
    assert "coefficient" in out


def test_exit_codes(capsys):
    assert run(capsys, "antipode", "--monoid", "l", "--element", "113")[0] == 2
    assert run(capsys, "antipode", "--monoid", "l", "--element", "21", "--limit", "1")[0] == 3
    assert run(capsys, "antipode", "--monoid", "l", "--element", "21", "--method", "orientations")[0] == 4
    assert run(capsys, "antipode", "--monoid", "lxh", "--element", "12|12")[0] == 2
    with pytest.raises(SystemExit):
        main(["antipode", "--monoid", "xx", "--element", "1"])


def test_disagreeing_methods_exit_5(capsys, monkeypatch):
    monkeypatch.setattr(cli, "flats_antipode", lambda x, jobs=1: FormalSum())
    assert run(capsys, "antipode", "--monoid", "g", "--element", "1-2", "--verify")[0] == 5


def test_cgraph(capsys):
    assert run(capsys, "cgraph", "--m", "6", "--arcs", "2-4,3-5,5-6") == (0, "0")
    assert run(capsys, "cgraph", "--m", "3", "--arcs", "1-3", "--method", "bruteforce") == (0, "1")
    assert run(capsys, "cgraph", "--m", "1", "--method", "fixed-points") == (0, "-1")
    assert run(capsys, "cgraph", "--m", "4", "--arcs", "1-4,2-3")[0] == 2


def test_orientations(capsys):
    assert run(capsys, "orientations", "--hyperedges", "1,2,4/2,3,4") == (0, "20")
    assert run(capsys, "orientations", "--hyperedges", "1,2,4/2,3,4", "--sum") == (0, "-2")
    code, out = run(capsys, "orientations", "--hyperedges", "1,2,4/2,3,4", "--list")
    rows = json.loads(out)
    assert len(rows) == 20
    assert rows[0]["composition"] == "(4,3,2,1)"
    assert sum(1 for r in rows if r["length"] % 2 == 0) == 9


def test_chromatic(capsys):
    assert run(capsys, "chromatic", "--permutation", "2143", "--eval", "-1") == (0, "4")
    code, out = run(capsys, "chromatic", "--graph", "1-2,2-3", "--poly")
    assert json.loads(out)["binomial"] == [0, 0, 2, 6]
    code, out = run(capsys, "chromatic", "--graph", "1-2,2-3", "--format", "text")
    assert out == "t**3 - 2*t**2 + t"
    code, out = run(capsys, "chromatic", "--permutation", "2143", "--character", "21", "--table")
    assert json.loads(out) == [{"composition": "(2,2)", "coefficient": 2}, {"composition": "(4)", "coefficient": 1}]


def test_verify(capsys):
    code, out = run(capsys, "verify", "--suite", "worked-examples")
    assert code == 0
    results = json.loads(out)
    assert len(results) == 9
    assert all(r["passed"] for r in results)
    assert run(capsys, "verify", "--identity", "psi21", "--n", "4")[0] == 0
    assert run(capsys, "verify", "--identity", "psi21")[0] == 2


def test_verify_accepts_the_acceptance_suite_alias(capsys):
    code, out = run(capsys, "verify", "--suite", "paper-examples")
    assert code == 0
    results = json.loads(out)
    assert len(results) == 9
    assert {r["suite"] for r in results} == {"worked-examples"}


def test_malformed_element_json_exits_2(capsys):
    assert main(["antipode", "--monoid", "pi", "--element", "[[1,2],3]"]) == 2
    assert capsys.readouterr().err.startswith("hopfmon: ")


def test_raised_limit_is_reported(capsys):
    assert main(["antipode", "--monoid", "l", "--element", "21", "--limit", "20"]) == 0
    assert "enumeration guard raised from 16 to 20" in capsys.readouterr().err
