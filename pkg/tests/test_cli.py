import io
import json
import subprocess
import sys

import pytest

from reflr import refined
from reflr.cli import run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_compute_all_engines():
    code, text = call("compute", "--n", "3", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1",
                      "--w", "3,2,1", "--engine", "all")
    data = json.loads(text)
    assert code == 0 and data["value"] == 2 and data["agreement"] is True
    assert data["values"] == {"crystal": 2, "demazure": 2, "hive": 2}


def test_compute_identity_delta():
    code, text = call("compute", "--n", "3", "--lambda", "2,1", "--mu", "2,1", "--nu", "4,2", "--w", "123")
    assert code == 0 and json.loads(text)["value"] == 1


def test_compute_is_byte_stable():
    argv = ("compute", "--n", "3", "--lambda", "2,1", "--mu", "1", "--nu", "3,1", "--w", "213",
            "--engine", "all", "--dump-poly")
    first, second = call(*argv), call(*argv)
    assert first == second
    data = json.loads(first[1])
    assert data["key_polynomial"] == [[[0, 1, 0], 1], [[1, 0, 0], 1]]
    assert list(data) == sorted(data)


def test_compute_size_mismatch_reports_zero():
    code, text = call("compute", "--n", "3", "--lambda", "2,1", "--mu", "2,1", "--nu", "4,2,1", "--w", "123")
    data = json.loads(text)
    assert code == 0 and data["value"] == 0 and "note" in data


@pytest.mark.parametrize("argv", [
    ("compute", "--n", "3", "--lambda", "1,2", "--mu", "1", "--nu", "3", "--w", "123"),
    ("compute", "--n", "3", "--lambda", "2,1", "--mu", "1", "--nu", "3,1", "--w", "1,1,3"),
    ("compute", "--n", "3", "--lambda", "2,1", "--mu", "1", "--nu", "3,1", "--w", "2134"),
    ("compute", "--n", "2", "--lambda", "2,1,1", "--mu", "1", "--nu", "3,1", "--w", "12"),
    ("compute", "--n", "3", "--lambda", "a", "--mu", "1", "--nu", "3,1", "--w", "123"),
    ("no-such-command",),
])
def test_usage_errors_exit_2(argv, capsys):
    code, _ = call(*argv)
    assert code == 2
    assert capsys.readouterr().err


def test_compute_disagreement_exits_1(monkeypatch):
    real = refined._engine
    monkeypatch.setattr(refined, "_engine", lambda name: (lambda *a: 7) if name == "hive" else real(name))
    code, text = call("compute", "--n", "3", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1",
                      "--w", "321", "--engine", "all")
    data = json.loads(text)
    assert code == 1 and data["agreement"] is False and "reproducer" in data


def test_bruhat_table_formats():
    base = ("bruhat-table", "--n", "4", "--lambda", "13,7,4", "--mu", "13,7,2", "--nu", "21,12,9,4")
    code, text = call(*base)
    data = json.loads(text)
    assert code == 0 and len(data["values"]) == 24 and data["monotone"]
    assert data["values"][-1] == {"w": "4321", "c": 35}
    code, dot = call(*base, "--format", "dot")
    assert code == 0 and dot.startswith("digraph") and '"4321" [label="4321 : 35"];' in dot
    code, csv_text = call(*base, "--format", "csv")
    rows = csv_text.strip().splitlines()
    assert rows[0] == "w,length,c" and len(rows) == 25 and rows[-1] == "4321,6,35"


def test_saturation_scan_command():
    code, text = call("saturation-scan", "--n", "3", "--max-part", "1", "--kmax", "2")
    data = json.loads(text)
    assert code == 0 and data["violations"] == [] and data["triples_examined"] > 0
    code, text = call("saturation-scan", "--n", "3", "--max-part", "1", "--kmax", "2", "--format", "ndjson")
    lines = text.strip().splitlines()
    assert code == 0 and json.loads(lines[-1])["violation_count"] == 0


def test_saturation_scan_violation_exits_1(monkeypatch):
    fake = refined.SaturationReport(params={}, violations=[refined.Violation("21", (1, 0), (1, 0), (1, 1), 2, 1, 0)])
    monkeypatch.setattr(refined, "saturation_scan", lambda *a, **k: fake)
    code, text = call("saturation-scan", "--n", "2", "--max-part", "1")
    assert code == 1 and json.loads(text)["violations"][0]["k"] == 2


def test_hive_points():
    code, text = call("hive-points", "--n", "3", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1")
    lines = text.strip().splitlines()
    assert code == 0 and len(lines) == 2
    assert json.loads(lines[0])[0] == [0]
    code, text = call("hive-points", "--n", "3", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1",
                      "--w", "123")
    assert code == 0 and text == ""
    code, text = call("hive-points", "--n", "3", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1",
                      "--face", "2,1", "--limit", "1")
    assert code == 0 and len(text.strip().splitlines()) == 1
    code, _ = call("hive-points", "--n", "3", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1",
                   "--face", "3,3")
    assert code == 2


def test_crystal_dump():
    code, text = call("crystal-dump", "--n", "3", "--mu", "2,1", "--w", "213")
    rows = [json.loads(line) for line in text.strip().splitlines()]
    assert code == 0 and [r["word"] for r in rows] == ["112", "212"]
    assert rows[1]["tableau"] == [[1, 2], [2]] and rows[1]["weight"] == [1, 2, 0]
    code, text = call("crystal-dump", "--n", "2", "--mu", "1", "--w", "12", "--opposite")
    assert json.loads(text)["tableau"] == [[2]]


def test_symmetry_check_command():
    code, text = call("symmetry-check", "--n", "3", "--lambda", "2,1", "--mu", "1,1", "--nu", "2,2,1",
                      "--w", "231")
    assert code == 0 and json.loads(text)["bijective"] is True


def test_verify_command():
    code, text = call("verify", "--n", "2", "--max-part", "2")
    data = json.loads(text)
    assert code == 0 and data["mismatches"] == 0 and data["instances"] > 0


def test_output_file(tmp_path):
    target = tmp_path / "out.json"
    code = run(["compute", "--n", "2", "--lambda", "1", "--mu", "1", "--nu", "1,1", "--w", "21",
                "-o", str(target)])
    assert code == 0 and json.loads(target.read_text())["value"] == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "reflr", "compute", "--n", "2", "--lambda", "1",
                           "--mu", "1", "--nu", "2", "--w", "12"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["value"] == 1
    proc = subprocess.run([sys.executable, "-m", "reflr", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0 and "u(v(i))" in proc.stdout
