import json

import pytest

from moyclock import cli
from moyclock.errors import TheoremViolation


def run(capsys, *argv):
    code = cli.run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate_ok(capsys, digon_path):
    code, out, _ = run(capsys, "validate", digon_path)
    assert code == 0
    assert out.strip() == "OK"


def test_validate_missing_file(capsys):
    code, _, err = run(capsys, "validate", "no-such-file.graph")
    assert code == 1


def test_validate_bad_json(capsys, tmp_path):
    bad = tmp_path / "bad.graph"
    bad.write_text("{not json")
    code, *_ = run(capsys, "validate", str(bad))
    assert code == 1


def test_alexander_all(capsys, theta_path):
    code, out, _ = run(capsys, "alexander", theta_path, "--method", "all")
    assert code == 0
    assert out.strip() == "1 + 2*t + 3*t^2 + 3*t^3 + 2*t^4 + t^5"


@pytest.mark.parametrize("method", ["statesum", "spanning", "matrixtree"])
def test_alexander_each_method(capsys, theta_path, method):
    code, out, _ = run(capsys, "alexander", theta_path, "--method", method)
    assert code == 0
    assert out.strip() == "1 + 2*t + 3*t^2 + 3*t^3 + 2*t^4 + t^5"


def test_alexander_json(capsys, digon_path):
    code, out, _ = run(capsys, "alexander", digon_path, "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["delta"] == "1"


def test_trees_output(capsys, theta_v2_path):
    code, out, _ = run(capsys, "trees", theta_v2_path)
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 12
    assert lines[0] == "1,1 |2|"
    for line in lines:
        coords, norm = line.split(" ")
        xs = [int(x) for x in coords.split(",")]
        assert norm == f"|{sum(xs)}|"


def test_clock_graph_dot(capsys, theta_v2_path):
    code, out, _ = run(capsys, "clock-graph", theta_v2_path, "--dot")
    assert code == 0
    assert out.startswith("graph clock {")
    assert "color=red, style=solid" in out
    assert "color=blue, style=dashed" in out
    assert '"(1,1)"' in out


def test_rectangles(capsys, theta_v2_path):
    code, out, _ = run(capsys, "rectangles", theta_v2_path)
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    assert all("A=9/2" in line for line in lines)
    assert any("contribution=t^4 + t^5" in line for line in lines)


def test_crowell(capsys, trefoil_path):
    code, out, _ = run(capsys, "crowell", trefoil_path, "--root", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert "trees: 3" in lines
    assert lines[-1] == "1 + t + t^2"


def test_compare(capsys, trefoil_path, fig8_path):
    code, out, _ = run(capsys, "compare", trefoil_path)
    assert code == 0
    assert out.splitlines()[0] == "UNEQUAL"
    code, out, _ = run(capsys, "compare", fig8_path)
    assert code == 0
    assert out.splitlines()[0] == "EQUAL"


def test_reduce(capsys, theta_path):
    code, out, _ = run(capsys, "reduce", theta_path)
    assert code == 0
    data = json.loads(out)
    assert all(e["color"] == 1 for e in data["edges"])


def test_gen_deterministic(capsys):
    code, out1, _ = run(capsys, "gen", "--seed", "42", "--size", "10")
    assert code == 0
    code, out2, _ = run(capsys, "gen", "--seed", "42", "--size", "10")
    assert out1 == out2
    json.loads(out1)


def test_gen_roundtrips_through_validate(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "--seed", "7", "--size", "9")
    path = tmp_path / "gen.graph"
    path.write_text(out)
    code, out, _ = run(capsys, "validate", str(path))
    assert code == 0
    assert out.strip() == "OK"


def test_bad_pd_exits_one(capsys, tmp_path):
    bad = tmp_path / "bad.pd"
    bad.write_text("X 1 2 3 4\norient 2->4\n")
    code, _, err = run(capsys, "compare", str(bad))
    assert code == 1
    assert "error" in err


def test_theorem_violation_exits_two_with_witness(
    capsys, monkeypatch, tmp_path, digon_path
):
    def boom(g):
        raise TheoremViolation("synthetic failure", {"graph": g.to_json_dict()})

    monkeypatch.setattr(cli, "alexander_statesum", boom)
    monkeypatch.chdir(tmp_path)
    code, _, err = run(capsys, "alexander", digon_path, "--method", "statesum")
    assert code == 2
    assert "theorem violation: synthetic failure" in err
    witnesses = list(tmp_path.glob("moyclock-witness-*.json"))
    assert len(witnesses) == 1
    payload = json.loads(witnesses[0].read_text())
    assert payload["check"] == "synthetic failure"
    assert "graph" in payload["witness"]


def test_json_round_trip_trees(capsys, theta_v2_path):
    code, out, _ = run(capsys, "trees", theta_v2_path, "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["trees"]) == 12
