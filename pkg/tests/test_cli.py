from __future__ import annotations

import json
import subprocess
import sys

import pytest

from multipath.cli import main, parse_graph_file
from multipath.families import linear


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cohomology_polygon(capsys):
    code, out, _ = run(capsys, "cohomology", "--family", "polygon:3")
    assert code == 0
    rows = dict(line.split() for line in out.splitlines()[2:-1])
    assert rows == {"0": "0", "1": "0", "2": "0", "3": "1"}


def test_cohomology_formats(capsys):
    code, out, _ = run(capsys, "cohomology", "--family", "dandelion:2,2", "--format", "json")
    assert code == 0 and json.loads(out)["betti"] == {"2": 1}
    code, out, _ = run(capsys, "cohomology", "--word", "RLRLR", "--format", "csv", "--field", "F_2")
    assert out == "degree,dimension\n0,0\n1,0\n2,1\n3,0\n"
    code, out, _ = run(capsys, "cohomology", "--word", "RR", "--algebra", "dual-numbers",
                       "--format", "json")
    assert json.loads(out)["betti"] == {"0": 2}


def test_verify_linalt(capsys):
    code, out, _ = run(capsys, "verify", "linalt", "--max", "10")
    assert code == 0 and out.startswith("suite linalt: PASS")


def test_euler_alternating(capsys):
    code, out, _ = run(capsys, "euler", "--family", "alternating:4", "--algebra", "dual-numbers")
    assert code == 0
    assert "factored  = α^3*(α - 3)*(α - 1)" in out
    assert "chi_gr(α) = 3*α^3 - 4*α^4 + α^5" in out


def test_poset_and_simplicial(capsys):
    code, out, _ = run(capsys, "poset", "--family", "linear:2", "--format", "dot")
    assert code == 0 and out.count(" -> ") == 4
    code, out, _ = run(capsys, "poset", "--family", "polygon:2")
    assert out.startswith("level counts: [1, 3, 3]")
    code, out, _ = run(capsys, "simplicial", "--family", "dandelion:2,2", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["shift_ok"] and len(doc["facets"]) == 4


def test_family_verb(capsys, tmp_path):
    code, out, _ = run(capsys, "family", "linear:2")
    path = tmp_path / "g.json"
    path.write_text(out)
    assert parse_graph_file(path) == linear(2)


def test_graph_files(capsys, tmp_path):
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"vertices": 3, "edges": [[0, 1], [1, 2]]}))
    assert parse_graph_file(good) == linear(2)
    loop = tmp_path / "loop.json"
    loop.write_text(json.dumps({"vertices": 2, "edges": [[0, 0]]}))
    code, _, err = run(capsys, "cohomology", "--graph", str(loop))
    assert code == 2 and "SelfLoop" in err
    multi = tmp_path / "multi.json"
    multi.write_text(json.dumps({"vertices": 2, "edges": [[0, 1], [0, 1]], "mode": "multigraph"}))
    code, out, _ = run(capsys, "cohomology", "--graph", str(multi), "--format", "json")
    assert code == 0 and json.loads(out)["betti"] == {"1": 1}
    broken = tmp_path / "broken.json"
    broken.write_text('{"vertices": 2,\n "edges": [[0, 1],]}')
    code, _, err = run(capsys, "cohomology", "--graph", str(broken))
    assert code == 2 and "line 2" in err


def test_input_errors(capsys):
    assert run(capsys, "cohomology")[0] == 2
    assert run(capsys, "cohomology", "--family", "linear:1", "--word", "R")[0] == 2
    assert run(capsys, "cohomology", "--family", "bogus:1")[0] == 2
    assert run(capsys, "cohomology", "--word", "RXL")[0] == 2
    assert run(capsys, "cohomology", "--word", "R", "--field", "F_4")[0] == 2


def test_size_cap(capsys, monkeypatch):
    assert run(capsys, "cohomology", "--family", "polygon:6", "--size-cap", "10")[0] == 3
    assert run(capsys, "simplicial", "--family", "polygon:6", "--size-cap", "10")[0] == 3
    monkeypatch.setenv("MULTIPATH_SIZE_CAP", "10")
    assert run(capsys, "euler", "--family", "polygon:6")[0] == 3


def test_deterministic_output():
    cmd = [sys.executable, "-m", "multipath", "verify", "shift", "--seed", "3", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)[0]["ok"]


def test_verify_failure_exit_code(capsys, monkeypatch):
    from multipath import suites

    def broken():
        res = suites.SuiteResult("broken")
        res.add("always fails", False, "by construction")
        return res

    monkeypatch.setitem(suites.SUITES, "named", broken)
    code, out, _ = run(capsys, "verify", "named")
    assert code == 1 and "FAIL" in out


@pytest.mark.parametrize("argv", [["--help"], ["verify", "--help"]])
def test_help(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 0
