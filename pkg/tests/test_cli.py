import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from inversive_ccc import report
from inversive_ccc.cli import main

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


def scene(name):
    return str(DATA / f"{name}.json")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve(capsys):
    code, out, _ = run(capsys, "solve", scene("pinned"))
    assert code == 0
    data = json.loads(out)
    assert data["command"] == "solve"
    assert len(data["solutions"]) == 8
    assert report.dumps(data) == out


def test_construct_json_and_svg(tmp_path, capsys):
    js, svg = tmp_path / "c.json", tmp_path / "c.svg"
    code, _, _ = run(capsys, "construct", scene("pinned"), "--json", str(js), "--svg", str(svg))
    assert code == 0
    data = json.loads(js.read_text())
    assert data["construct"]["m_squared"] == 0.75
    assert data["construct"]["A"]["x"] == pytest.approx(1.3, abs=1e-12)
    assert [s["step_id"] for s in data["trace"]] == list(range(1, len(data["trace"]) + 1))
    assert svg.read_text().startswith("<?xml")


def test_compare_matches_golden(capsys):
    code, out, _ = run(capsys, "compare", scene("pinned"))
    assert code == 0
    assert out == (GOLDEN / "pinned_compare.json").read_text()


def test_round_trip_is_byte_identical(capsys):
    _, out, _ = run(capsys, "compare", scene("pinned"))
    assert report.dumps(json.loads(out)) == out


def test_m2_scan_recorded(capsys):
    code, out, _ = run(capsys, "construct", scene("pinned"), "--m2", "0.5")
    assert code == 0
    c = json.loads(out)["construct"]
    assert (c["m_squared_requested"], c["m_squared"]) == (0.5, 0.7)
    assert c["scan_diagnostics"]


def test_no_scan_infeasible(capsys):
    code, out, err = run(capsys, "construct", scene("pinned"), "--m2", "0.5", "--no-scan")
    assert code == 3
    assert json.loads(out)["error"]["type"] == "InfeasibleShrink"
    assert "infeasible" in err


@pytest.mark.parametrize("name, code", [
    ("concentric", 4), ("nested", 4), ("collinear_equal", 3), ("no_feasible", 3),
])
def test_exit_codes(capsys, name, code):
    assert run(capsys, "construct", scene(name))[0] == code


def test_collinear_ok(capsys):
    code, out, _ = run(capsys, "construct", scene("collinear"))
    assert code == 0
    assert json.loads(out)["construct"]["c4"]["type"] == "line"


@pytest.mark.parametrize("content", [
    "not json",
    '{"circles": [{"cx": 0, "cy": 0, "r": 1}]}',
    '{"circles": [{"cx": 0, "cy": 0, "r": -1}, {"cx": 5, "cy": 0, "r": 1}, {"cx": 0, "cy": 5, "r": 1}]}',
    '{"circles": [{"cx": 0, "cy": 0}, {"cx": 5, "cy": 0, "r": 1}, {"cx": 0, "cy": 5, "r": 1}]}',
    '{"circles": [{"cx": 0, "cy": 0, "r": 1}, {"cx": 5, "cy": 0, "r": 1}, {"cx": 0, "cy": 5, "r": 1}], "x": 1}',
])
def test_invalid_input(tmp_path, capsys, content):
    p = tmp_path / "bad.json"
    p.write_text(content)
    code, _, err = run(capsys, "solve", str(p))
    assert code == 2
    assert err.startswith("inversive-ccc:")


def test_missing_file(capsys):
    assert run(capsys, "solve", "/nonexistent/scene.json")[0] == 2


@pytest.mark.parametrize("flags", [["--tol", "0.5"], ["--m2", "1.5"], ["--k2", "-1"]])
def test_invalid_options(capsys, flags):
    assert run(capsys, "construct", scene("pinned"), *flags)[0] == 2


def test_unwritable_output(capsys):
    code = run(capsys, "solve", scene("pinned"), "--json", "/nonexistent/dir/out.json")[0]
    assert code == 5


def test_render_layers(tmp_path, capsys):
    out = tmp_path / "r.svg"
    code, _, _ = run(capsys, "render", scene("pinned"), "--layers", "scene,oracle", "--out", str(out))
    assert code == 0
    text = out.read_text()
    assert 'id="oracle-8"' in text and 'id="candidate"' not in text
    assert run(capsys, "render", scene("pinned"), "--layers", "bogus")[0] == 2


def test_render_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    for p in (a, b):
        run(capsys, "render", scene("pinned"), "--layers", ",".join(
            ["scene", "equal_circles", "loci", "inverted", "candidate", "oracle", "labels"]),
            "--out", str(p))
    assert a.read_bytes() == b.read_bytes()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "inversive_ccc", "solve", scene("pinned")],
                          capture_output=True, text=True, env={**os.environ})
    assert proc.returncode == 0
    assert len(json.loads(proc.stdout)["solutions"]) == 8
