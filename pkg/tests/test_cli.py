import csv
import io
import json
import subprocess
import sys


from hadwigerlab.cli import main
from hadwigerlab.families import g3, hypercube, wheel
from hadwigerlab.graphcore import to_graph6


def run(argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv, out)
    return code, out.getvalue()


def test_family_wheel_pinned():
    # hand encoding: bits 1|01|001|1001|11111 padded to 18 -> 41, 39, 56 -> "hfw"
    code, out = run(["family", "wheel", "5"])
    assert code == 0 and out.strip() == "Ehfw"


def test_family_others():
    assert run(["family", "hypercube", "3"])[1].strip() == to_graph6(hypercube(3))
    assert run(["family", "truncate", "3", "0"])[1].strip() == to_graph6(g3())
    code, out = run(["family", "split-wheel", "5", "hajos_spoke", "--dot"])
    assert code == 0 and "graph split_wheel {" in out
    assert run(["family", "higher-wheel", "3"])[1].strip() == to_graph6(g3())


def test_critical_k4():
    code, out = run(["critical", "C~", "--k", "4"])
    assert code == 0 and out.startswith("verdict=critical")


def test_color():
    assert run(["color", "Dhc"])[1].startswith("chi=3")
    assert run(["color", "C~", "--k", "3"])[1].strip() == "3-colorable=false"


def test_classify_truncated_cube():
    code, out = run(["classify", to_graph6(g3())])
    header, row = out.strip().splitlines()
    cols = dict(zip(header.split(","), next(csv.reader([row]))))
    assert cols["free_hadwiger4"] == "False"
    assert cols["bracket_clique"] == "K5-,K5"
    assert cols["bracket_bipartite"] == "K33-,K33"
    assert cols["hadwiger_number"] == "4"


def test_minor_and_bracket():
    code, out = run(["minor", to_graph6(wheel(5)), "--pattern", "K5-"])
    assert out.strip() == "K5- minor=false"
    code, out = run(["minor", "C~", "--pattern", "K3"])
    assert "minor=true" in out and "branch_sets=" in out
    assert run(["bracket", to_graph6(wheel(7))])[1].strip() == "<W4,K5->"
    assert run(["bracket", to_graph6(wheel(7)), "--chain", "bipartite"])[1].strip() == "<C6+,K33->"
    assert run(["bracket", "C~"])[1].startswith("out-of-range")


def test_batch_preserves_lines(monkeypatch):
    code, out = run(["color", "-"], stdin="C~\nDhc\n\nBw\n", monkeypatch=monkeypatch)
    lines = out.split("\n")[:-1]
    assert code == 0 and len(lines) == 4
    assert lines[0].startswith("chi=4") and lines[2] == "" and lines[3].startswith("chi=3")


def test_exit_codes(monkeypatch):
    assert run(["color", "C~x"])[0] == 3
    assert run(["color"])[0] == 2
    assert run(["color", "C~", "--bogus"])[0] == 2
    assert run(["minor", "C~", "--pattern", "K9^(1,2)"])[0] == 2
    assert run(["family", "wheel", "two"])[0] == 2
    assert run(["scan", "critical", "--n-max", "12"])[0] == 4
    assert run(["scan", "corners", "--d", "5"])[0] == 4
    assert run(["family", "higher-wheel", "9", "--store", "/nonexistent/x.g6"])[0] == 4


def test_scan_json_and_csv(tmp_path):
    out_file = tmp_path / "r.json"
    code, out = run(["scan", "question1", "--n-max", "6", "--out", str(out_file)])
    assert code == 0 and "wrote" in out
    data = json.loads(out_file.read_text())
    assert data["counts"] == {"i": 2, "ii": 0, "iii": 0}
    code, out = run(["scan", "critical", "--n-max", "7", "--k", "3", "--csv"])
    assert out.splitlines()[0].startswith("graph6,n,m,chi")
    code, out = run(["scan", "corners", "--d", "3", "--max-cut", "2"])
    assert json.loads(out)["scan"] == "corners"


def test_scan_identify_writes_store(tmp_path):
    store = tmp_path / "store.g6"
    code, out = run(["scan", "identify", "--i", "5", "--store-out", str(store)])
    assert code == 0 and json.loads(out)["counts"]["G5"] > 0
    assert store.read_text().startswith("# i=5")
    code, out = run(["family", "higher-wheel", "5", "--store", str(store), "--verify"])
    assert "# critical: True" in out


def test_console_script_entry():
    proc = subprocess.run([sys.executable, "-m", "hadwigerlab.cli", "family", "wheel", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "C~"
