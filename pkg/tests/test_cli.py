import json
import math
import os
import subprocess
import sys

import pytest

from chromaplane.cli import main

PKG_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def run_cli(*args, env_extra=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    proc = subprocess.run(
        [sys.executable, "-m", "chromaplane.cli", *args],
        capture_output=True,
        text=True,
        env=env,
        cwd=PKG_ROOT,
        timeout=300,
    )
    return proc


def test_annulus_upper_csv():
    proc = run_cli("annulus-upper", "--k", "3")
    assert proc.returncode == 0
    assert proc.stdout == "k,s,b_max,binding\n3,9,1.28557522,gap\n"


def test_annulus_upper_json():
    proc = run_cli("annulus-upper", "--k", "8", "--format", "json")
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["s"] == 16
    assert payload["b_max"] == pytest.approx(math.sqrt(2 + math.sqrt(2)), abs=1e-9)


def test_annulus_upper_no_valid_b():
    proc = run_cli("annulus-upper", "--k", "2")
    assert proc.returncode == 0
    assert "no_valid_b" in proc.stdout


def test_annulus_lower_desk_scale():
    proc = run_cli("annulus-lower", "--case", "1", "--b", "1.35", "--k", "4", "--n", "65")
    assert proc.returncode == 0
    lines = proc.stdout.strip().splitlines()
    assert lines[0] == "case,b,points,k,eps,verdict,annulus_lower_bound,plane_lower_bound"
    fields = lines[1].split(",")
    assert fields[5] == "not_colorable"
    assert fields[7] == "7"


def test_annulus_lower_budget_exhausted_exit_code():
    proc = run_cli(
        "annulus-lower", "--case", "2", "--b", "1.48", "--k", "5", "--n", "95",
        "--budget", "0.05",
    )
    assert proc.returncode == 3
    assert "budget_exhausted" in proc.stderr
    assert proc.stdout == ""


def test_threshold_command():
    proc = run_cli(
        "threshold", "--case", "1", "--k", "4", "--n", "65",
        "--b-lo", "1.25", "--b-hi", "1.4", "--tol", "1e-3",
    )
    assert proc.returncode == 0
    lines = proc.stdout.strip().splitlines()
    assert lines[0] == "case,k,n_override,tol,b_star"
    b_star = float(lines[1].split(",")[-1])
    assert 1.25 < b_star < 1.4


def test_threshold_bracket_invalid():
    proc = run_cli(
        "threshold", "--case", "1", "--k", "4", "--n", "65",
        "--b-lo", "1.05", "--b-hi", "1.1", "--tol", "1e-3",
    )
    assert proc.returncode == 2
    assert "bracket_invalid" in proc.stderr


def test_hex_table_small():
    proc = run_cli("hex-table", "--p-max", "2", "--q-max", "2")
    assert proc.returncode == 0
    assert proc.stdout == "b,n_colors,p,q\n1.32287566,7,1,2\n2,12,2,2\n"


def test_hex_table_respects_chroma_threads():
    serial = run_cli("hex-table", "--p-max", "3", "--q-max", "3")
    parallel = run_cli("hex-table", "--p-max", "3", "--q-max", "3", env_extra={"CHROMA_THREADS": "2"})
    assert parallel.returncode == 0
    assert parallel.stdout == serial.stdout

    bad = run_cli("hex-table", env_extra={"CHROMA_THREADS": "zero"})
    assert bad.returncode == 2


def test_min_colors_points():
    proc = run_cli("min-colors", "--b-lo", "2.0", "--b-hi", "2.0", "--step", "0.1")
    assert proc.returncode == 0
    assert proc.stdout == "b,min_colors\n2,12\n"

    proc = run_cli("min-colors", "--b-lo", "1.01", "--b-hi", "1.01", "--step", "0.1")
    assert proc.stdout == "b,min_colors\n1.01,7\n"


def test_eight_opt_json():
    proc = run_cli("eight-opt", "--tol", "1e-6")
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["b"] == pytest.approx(1.37542, abs=1e-4)
    assert payload["x"] == pytest.approx(0.108194, abs=1e-2)
    assert payload["y"] == pytest.approx(0.514884, abs=1e-2)
    assert 1 in payload["active_constraints"] and 3 in payload["active_constraints"]
    assert payload["slacks"][1] >= 0.29


def test_eight_opt_bad_tol():
    proc = run_cli("eight-opt", "--tol", "0")
    assert proc.returncode == 2


def test_export_dimacs_and_out_file(tmp_path):
    out = tmp_path / "g.dimacs"
    proc = run_cli(
        "export", "--what", "dimacs", "--case", "1", "--b", "1.3", "--n", "6",
        "--out", str(out),
    )
    assert proc.returncode == 0
    assert proc.stdout == ""
    text = out.read_text()
    assert text.startswith("p edge 12 ")


def test_export_cnf_requires_k():
    proc = run_cli("export", "--what", "cnf", "--case", "1", "--b", "1.3", "--n", "6")
    assert proc.returncode == 2


def test_export_lp_from_config_json(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({
        "circles": [{"n": 4, "r": 1.0001}, {"n": 4, "r": 1.2}],
        "b": 1.25,
        "eps": 0.0001,
    }))
    proc = run_cli("export", "--what", "lp", "--config", str(cfg), "--k", "3")
    assert proc.returncode == 0
    assert proc.stdout.startswith("Minimize")
    assert proc.stdout.rstrip().endswith("End")


def test_usage_errors():
    proc = run_cli("annulus-lower", "--case", "9", "--b", "1.3", "--k", "4")
    assert proc.returncode == 2
    proc = run_cli("no-such-command")
    assert proc.returncode == 2
    proc = run_cli("min-colors", "--b-lo", "1.2", "--b-hi", "1.1")
    assert proc.returncode == 2


def test_main_callable_in_process(capsys):
    rc = main(["annulus-upper", "--k", "4"])
    assert rc == 0
    out = capsys.readouterr().out
    assert out.splitlines()[1].startswith("4,12,1.41421356")


DETERMINISM_CASES = [
    ("annulus-upper", "--k", "5"),
    ("annulus-lower", "--case", "1", "--b", "1.35", "--k", "4", "--n", "65"),
    ("threshold", "--case", "1", "--k", "4", "--n", "65",
     "--b-lo", "1.25", "--b-hi", "1.4", "--tol", "1e-3"),
    ("hex-table", "--p-max", "4", "--q-max", "4"),
    ("min-colors", "--b-lo", "1.3", "--b-hi", "2.5", "--step", "0.25"),
    ("eight-opt", "--tol", "1e-6"),
    ("export", "--what", "lp", "--case", "1", "--b", "1.3", "--n", "6", "--k", "3"),
    ("export", "--what", "cnf", "--case", "2", "--b", "1.48", "--n", "10", "--k", "4"),
    ("export", "--what", "dimacs", "--case", "1", "--b", "1.3", "--n", "8"),
]


@pytest.mark.parametrize("args", DETERMINISM_CASES, ids=lambda a: a[0] + "-" + a[-1])
def test_cli_byte_identical_across_runs(args):
    first = run_cli(*args)
    second = run_cli(*args)
    assert first.returncode == 0
    assert second.returncode == 0
    assert first.stdout.encode() == second.stdout.encode()
