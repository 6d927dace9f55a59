import json
import subprocess
import sys

import pytest

from bowbruhat.cli import main
from bowbruhat.curves import curve_digraph
from bowbruhat.enumeration import enumerate_bcts
from bowbruhat.export import render, to_csv, to_dot
from bowbruhat.orders import hasse, secondary_relation
from bowbruhat.sweep import SweepConfig, run_sweep

DIAMOND = ["-r", "2,1,2", "-c", "2,1,2"]
PENCIL = ["-r", "1,1,1,1", "-c", "2,2"]
M1 = "100000\n101110\n111110\n000110\n000100\n000111\n"
M2 = "000100\n110110\n101111\n100100\n000010\n001110\n"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# exporters ---------------------------------------------------------------

def test_hasse_dot():
    dot = to_dot(hasse(secondary_relation(enumerate_bcts(((2, 1, 2), (2, 1, 2))))))
    assert dot.count("[label=") == 5
    assert dot.count("->") == 4
    assert 'n2 [label="101010101"];' in dot


def test_curve_dot_labels():
    g = curve_digraph(enumerate_bcts(((1, 1, 1, 1), (2, 2))))
    dot = to_dot(g)
    assert dot.count("->") == 7
    assert 'n0 -> n5 [label="a2/a1 h^0"];' in dot


def test_empty_family_renders():
    fam = enumerate_bcts(((3,), (1, 1)))
    assert to_dot(fam) == "graph family {\n}\n"
    assert to_csv(fam) == "index,bits\n"
    assert json.loads(render(fam, "json"))["members"] == []


def test_unknown_format():
    with pytest.raises(ValueError):
        render(enumerate_bcts(((1,), (1,))), "svg")


def test_json_curve_export_has_components():
    g = curve_digraph(enumerate_bcts(((1, 1, 1, 1), (2, 2))), with_moves=True)
    data = json.loads(render(g, "json"))
    assert data["sigma"] == [1, 2]
    assert len(data["arcs"]) == 7
    assert any(len(mv["components"]) == 2 for mv in data["moves"])


# sweeps ------------------------------------------------------------------

def test_sweep_config_validation():
    with pytest.raises(ValueError):
        SweepConfig(0)
    with pytest.raises(ValueError):
        SweepConfig(3, report_limit=0)
    with pytest.raises(ValueError):
        SweepConfig(3, kinds=("weak",))


def test_sweep_small():
    report = run_sweep(SweepConfig(5, ("bruhat", "secondary", "geometric")))
    assert report.all_equal
    data = report.to_json(timing=False)
    assert data["pair_count"] == 233
    assert list(data["pairs"][0]) == ["r", "c", "size", "relation_sizes", "equal", "discrepancies"]


# command line ------------------------------------------------------------

def test_count_and_feasible(capsys):
    assert run(capsys, "count", *DIAMOND)[:2] == (0, "5\n")
    assert run(capsys, "feasible", *DIAMOND)[:2] == (0, "feasible\n")
    assert run(capsys, "feasible", "-r", "3", "-c", "1,1")[:2] == (1, "infeasible\n")


def test_invalid_input_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "-r", "1,x", "-c", "1"])
    assert exc.value.code == 2
    assert "expected comma-separated integers" in capsys.readouterr().err
    code, _, err = run(capsys, "brane", "charges", "/2//")
    assert code == 2 and err.startswith("error:")
    code, _, _ = run(capsys, "curves", *DIAMOND, "--sigma", "2,1")
    assert code == 2


def test_hasse_command_is_deterministic(capsys):
    first = run(capsys, "hasse", *DIAMOND)
    second = run(capsys, "hasse", *DIAMOND)
    assert first[0] == 0 and first[1] == second[1]
    assert first[1].count("->") == 4
    assert "family size 5" in first[2]
    direct = run(capsys, "hasse", *DIAMOND, "--direct")
    assert direct[1] == first[1]


def test_order_and_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", *DIAMOND)
    assert code == 0 and len(json.loads(out)["members"]) == 5
    code, out, _ = run(capsys, "order", *DIAMOND, "--kind", "bruhat", "--format", "csv")
    assert out.splitlines()[0] == "upper,lower"
    code, out, _ = run(capsys, "export", "curves", *PENCIL)
    assert out.count("->") == 7


def test_compare_command(capsys, tmp_path):
    code, out, _ = run(capsys, "compare", *PENCIL, "--kinds", "secondary,geometric")
    assert code == 0 and json.loads(out)["equal"]
    code, out, _ = run(capsys, "compare", "-r", "1,4,5,2,1,3", "-c", "3,1,2,5,4,1",
                       "--kinds", "bruhat,secondary")
    assert code == 1 and json.loads(out)["count_only_first"] > 0


def test_verify_sweep(capsys):
    code, out, err = run(capsys, "verify", "--max-total", "5")
    data = json.loads(out)
    assert code == 0 and data["all_equal"] and data["kinds"] == ["secondary", "geometric"]
    assert "margin pairs" in err
    code, out, _ = run(capsys, "verify", "--max-total", "5", "--kinds", "bruhat,secondary")
    assert code == 0 and json.loads(out)["all_equal"]


def test_verify_pair(capsys, tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    a.write_text(M1)
    b.write_text(M2)
    code, out, _ = run(capsys, "verify", "--pair", str(a), str(b), "--kinds", "bruhat,secondary")
    assert code == 1
    assert json.loads(out)["leq"] == {"bruhat": True, "secondary": False}
    code, _, _ = run(capsys, "verify", "--pair", str(a), str(tmp_path / "missing.txt"))
    assert code == 2


def test_brane_commands(capsys, tmp_path):
    diagram = "/2\\2/2\\4/3/3/4\\3/2\\2\\"
    code, out, _ = run(capsys, "brane", "charges", diagram)
    assert json.loads(out) == {"r": [2, 1, 1, 2, 3, 2], "c": [5, 2, 2, 0, 2]}
    assert run(capsys, "brane", "ties", diagram)[1] == "123\n"
    assert len(json.loads(run(capsys, "brane", "ties", diagram, "--list")[1])) == 123
    assert run(capsys, "brane", "separated", *DIAMOND)[1] == "/2/3/5\\3\\2\\\n"
    assert run(capsys, "brane", "hw", "/1\\2/1\\", "--pos", "2", "--dir", "bwd")[1] == "/1/1\\1\\\n"
    ties = tmp_path / "t.json"
    ties.write_text(json.dumps({"ties": [[1, 1], [5, 3], [1, 5], [4, 5], [3, 2], [4, 2], [6, 1]]}))
    code, out, _ = run(capsys, "brane", "tie2bct", diagram, "--ties", str(ties))
    assert out == "10001\n10000\n10000\n10001\n11100\n01100\n"
    mat = tmp_path / "m.txt"
    mat.write_text(out)
    code, out, _ = run(capsys, "brane", "bct2tie", diagram, "--matrix", str(mat))
    assert json.loads(out)["ties"] == sorted(json.loads(ties.read_text())["ties"])


def test_resolve_command(capsys, tmp_path):
    mat = tmp_path / "m.json"
    mat.write_text(json.dumps({"rows": [[0, 1, 0], [0, 0, 1], [1, 1, 0], [0, 1, 1]]}))
    code, out, _ = run(capsys, "resolve", "--matrix", str(mat), "--column", "2", "--split", "2,1")
    assert code == 0 and out.split("\n\n")[0] == "0100\n0001\n1100\n0011"
    code, out, _ = run(capsys, "resolve", "--matrix", str(mat), "--maximal", "--format", "json")
    assert len(json.loads(out)["matrices"]) == 1 * 6 * 2
    code, _, _ = run(capsys, "resolve", "--matrix", str(mat), "--column", "1", "--split", "1,1")
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bowbruhat", "count", *DIAMOND],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "5\n"
