import json
import os
import subprocess
import sys

import pytest

from brauer_dessins.cli import main
from brauer_dessins.dessin import example_3, polygon
from brauer_dessins.permutation import Permutation
from brauer_dessins.workbench import format_dessin, parse_dessin


@pytest.fixture
def files(tmp_path):
    d = example_3()
    g = Permutation.from_cycles(12, [(1, 7, 3), (2, 12), (5, 9, 10, 11)])
    paths = {
        "ex3": tmp_path / "ex3.dessin",
        "ex3_relabelled": tmp_path / "ex3b.dessin",
        "polygon": tmp_path / "polygon.dessin",
        "bad": tmp_path / "bad.dessin",
    }
    paths["ex3"].write_text(format_dessin(d, name="example 3"))
    paths["ex3_relabelled"].write_text(format_dessin(d.relabel(g)))
    paths["polygon"].write_text(format_dessin(polygon(3)))
    paths["bad"].write_text("n = 3\nsigma = (1 2)(2 3)\nalpha =\n")
    return {k: str(v) for k, v in paths.items()}


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_validate(files, capsys):
    code, out, _ = run(["validate", files["ex3"]], capsys)
    assert code == 0
    assert out.startswith("ok: n=12")


def test_validate_bad_input(files, capsys):
    code, _, err = run(["validate", files["bad"]], capsys)
    assert code == 2
    assert "line 2, column 15" in err
    code, _, err = run(["validate", files["bad"] + ".missing"], capsys)
    assert code == 2


def test_report_json(files, capsys):
    code, out, _ = run(["report", files["ex3"], "--json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["basis_count"] == data["dim_formula"] == 34
    assert data["centre"]["formula_dim"] == 7
    code2, out2, _ = run(["report", files["ex3"], "--json"], capsys)
    assert out2 == out


def test_report_text(files, capsys):
    code, out, _ = run(["report", files["polygon"]], capsys)
    assert code == 0 and "dim algebra: 12" in out


def test_max_dim_env(files, capsys, monkeypatch):
    monkeypatch.setenv("DESSIN_MAX_DIM", "10")
    code, out, _ = run(["report", files["ex3"], "--json"], capsys)
    assert code == 0
    assert json.loads(out)["centre"]["bruteforce_available"] is False


def test_dual(files, capsys):
    code, out, _ = run(["dual", files["polygon"]], capsys)
    assert code == 0 and "faces=[2, 2, 2]" in out
    code, out, _ = run(["dual", files["ex3"], "--oriented", "--emit"], capsys)
    assert code == 0
    e = parse_dessin(out)
    assert e.sigma == example_3().phi


def test_invariants(files, capsys):
    code, out, _ = run(["invariants", files["ex3"]], capsys)
    data = json.loads(out)
    assert code == 0
    assert data["fingerprint"]["dim_algebra"] == 34 and data["fingerprint"]["loop_count"] == 1
    assert data["passport"]["genus"] == 0


def test_enumerate(capsys):
    code, out, _ = run(["enumerate", "--n", "2"], capsys)
    assert code == 0
    assert out.strip().splitlines()[-1] == "3 dessins with n = 2"
    assert len(out.strip().splitlines()) == 4
    code, out, _ = run(["enumerate", "--n", "3", "--passports"], capsys)
    assert code == 0 and out.strip().endswith("7 dessins with n = 3")
    code, out, _ = run(["enumerate", "--n", "3", "--verify"], capsys)
    assert code == 0 and '"ok": true' in out
    code, _, err = run(["enumerate", "--n", "9"], capsys)
    assert code == 2 and "--n" in err


def test_compare(files, capsys):
    code, out, _ = run(["compare", files["ex3"], files["ex3_relabelled"]], capsys)
    data = json.loads(out)
    assert code == 0 and data["isomorphic"] and data["fingerprints_equal"]
    code, out, _ = run(["compare", files["ex3"], files["polygon"]], capsys)
    data = json.loads(out)
    assert code == 1 and not data["isomorphic"]
    assert data["fingerprint_diff"]["dim_algebra"] == [34, 12]


def test_usage_errors(capsys):
    assert main(["frobnicate"]) == 2
    assert main([]) == 2
    assert "usage" in capsys.readouterr().err
    assert main(["--help"]) == 0


def test_console_script(files):
    env = dict(os.environ, DESSIN_MAX_DIM="512")
    proc = subprocess.run(
        [sys.executable, "-m", "brauer_dessins.cli", "report", files["ex3"], "--json"],
        capture_output=True, text=True, env=env, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["centre"]["bruteforce_dim"] == 7
