import json
import subprocess
import sys
from pathlib import Path

import pytest

from graphcats import cli, laws
from graphcats.laws import LawReport
from graphcats.quiver import Quiver, hom_quivers, path1
from graphcats.serialization import parse

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def run(capsys, *argv):
    try:
        code = cli.main([str(a) for a in argv])
    except SystemExit as exc:  # argparse rejections
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def files(tmp_path, capsys):
    made = {}
    for name, argv in {
        "p1": ["make", "-c", "Q", "path1"],
        "b1": ["make", "-c", "Q", "terminal"],
        "istar2": ["make", "-c", "R", "i_star", "--set", "1", "2"],
        "h1": ["make", "-c", "H", "k_edge", "--set", "v", "w"],
    }.items():
        code, out, _ = run(capsys, *argv)
        assert code == 0
        made[name] = tmp_path / f"{name}.json"
        made[name].write_text(out)
    return made


def test_checked_in_fixtures_match_make(files):
    assert (FIXTURES / "p1.json").read_text() == files["p1"].read_text()
    assert (FIXTURES / "i_star2.json").read_text() == files["istar2"].read_text()


def test_upsilon_diamond_of_i_star(capsys, files):
    code, out, _ = run(capsys, "functor", "upsilon-diamond", files["istar2"])
    Q = parse(out)
    assert code == 0 and isinstance(Q, Quiver)
    assert Q.sizes() == (2, 2)
    assert {(Q.src(e)[0], Q.tgt(e)[0]) for e in Q.E} == {(0, 1)}


def test_quiver_exponential_of_paths(capsys, files):
    code, out, _ = run(capsys, "exponential", "-c", "Q", files["p1"], files["p1"])
    assert code == 0 and parse(out).sizes() == (4, 4)


def test_topos_fail_counterexample(capsys):
    code, out, _ = run(capsys, "check", "counterexample", "topos_fail")
    assert code == 0
    assert json.loads(out)["verdict"] == "witness_found"


def test_limits_and_colimits(capsys, files):
    code, out, _ = run(capsys, "limit", "-c", "Q", "product", files["p1"], files["p1"])
    assert code == 0 and parse(out).sizes() == (4, 1)
    code, out, _ = run(capsys, "limit", "-c", "H", "product", files["h1"], files["h1"])
    assert code == 0 and len(parse(out).E) == 7
    code, out, _ = run(capsys, "colimit", "-c", "R", "coproduct", files["istar2"], files["istar2"])
    assert code == 0 and parse(out).sizes() == (2, 2, 4)


def test_hom_count_and_list(capsys, files):
    code, out, _ = run(capsys, "hom", "--count", files["p1"], files["p1"])
    assert code == 0 and out == f"{hom_quivers(path1(), path1(), 'count')}\n"
    code, out, _ = run(capsys, "hom", files["p1"], files["b1"])
    docs = json.loads(out)
    assert code == 0 and len(docs) == 1 and docs[0]["kind"] == "morphism"


def test_iso_exit_codes(capsys, files):
    code, out, _ = run(capsys, "iso", files["p1"], files["p1"])
    assert code == 0 and parse(out).is_iso()
    code, out, err = run(capsys, "iso", files["p1"], files["b1"])
    assert code == 1 and out == "" and "not isomorphic" in err


def test_law_checks(capsys, files):
    code, out, _ = run(capsys, "check", "law", "phi_I", files["istar2"], "--set", "1", "2")
    assert code == 0 and json.loads(out)["verdict"] == "witness_found"
    code, out, _ = run(capsys, "check", "law", "updiaup", files["p1"])
    assert code == 0 and json.loads(out)["verdict"] == "holds"
    code, out, _ = run(capsys, "check", "law", "terminal", files["p1"])
    assert code == 0


def test_failing_report_exits_one(capsys, monkeypatch):
    monkeypatch.setattr(laws, "run_counterexample", lambda name: LawReport(name, "stub", "fails", ["no witness"]))
    code, out, _ = run(capsys, "check", "counterexample", "Fworse")
    assert code == 1 and json.loads(out)["verdict"] == "fails"


def test_usage_errors_exit_two(capsys, files, tmp_path):
    assert run(capsys, "make", "path1")[0] == 2
    assert run(capsys, "functor", "nonsense", files["p1"])[0] == 2
    assert run(capsys, "check", "counterexample", "nope")[0] == 2
    assert run(capsys, "exponential", "-c", "H", files["h1"], files["h1"])[0] == 2
    assert run(capsys, "functor", "upsilon", files["h1"])[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"kind": "quiver", "vertices": [1], "edges": ["a"], "endpoints": [["a", 1, 9]]}')
    code, _, err = run(capsys, "dot", bad)
    assert code == 2 and "unknown vertex 9" in err
    assert run(capsys, "dot", tmp_path / "missing.json")[0] == 2
    code, _, err = run(capsys, "make", "-c", "H", "vertex_star", "--set", *map(str, range(5)), "--bound", "4")
    assert code == 2 and err


def test_dot_views(capsys, files):
    code, out, _ = run(capsys, "dot", files["istar2"], "--view", "bipartite")
    assert code == 0 and out.count("rank=same") == 2


def test_reruns_are_byte_identical(capsys, files):
    for argv in (
        ["exponential", "-c", "Q", files["p1"], files["p1"]],
        ["check", "counterexample", "Ibad_product"],
        ["functor", "upsilon-star", files["istar2"]],
        ["dot", files["istar2"], "--view", "incidence_matrix"],
    ):
        assert run(capsys, *argv) == run(capsys, *argv)


def test_console_entry_point(files):
    cmd = [sys.executable, "-m", "graphcats.cli", "functor", "upsilon-diamond", str(files["istar2"])]
    a = subprocess.run(cmd, capture_output=True, check=True)
    b = subprocess.run(cmd, capture_output=True, check=True)
    assert a.stdout == b.stdout and a.stdout.startswith(b"{")
