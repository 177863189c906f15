import json
import subprocess
import sys

import pytest

from liechar.cli import main
from liechar.verify import run_catalog_suite

CLI = [sys.executable, "-m", "liechar.cli"]


def run_main(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_catalog_suite_all_pass():
    rows = run_catalog_suite()
    assert rows and all(r.passed for r in rows)
    names = {r.name for r in rows}
    assert len(names) == len(rows)
    for prefix in ("sl2R", "su21", "sp4R", "su2", "su3", "so5"):
        assert any(n.startswith(prefix + "/") for n in names)


def test_catalog_suite_full_extends_and_passes():
    rows = run_catalog_suite(full=True)
    assert all(r.passed for r in rows)
    assert len(rows) > len(run_catalog_suite())
    names = {r.name for r in rows}
    assert "sl2/orbital-closure" in names
    assert "sl2/coefficient-oracle" in names


def test_suite_is_deterministic():
    assert run_catalog_suite() == run_catalog_suite()


def test_cli_dschar_example():
    proc = subprocess.run(
        CLI + ["dschar", "eval", "--datum", "sl2R", "--lambda", "2",
               "--theta", "1.5707963"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert abs(doc["value"]["re"]) < 1e-6
    assert abs(doc["value"]["im"] + 0.5) < 1e-6
    assert doc["q"] == "1"


def test_cli_outputs_are_byte_identical():
    first = subprocess.run(CLI + ["verify", "--catalog"], capture_output=True)
    second = subprocess.run(CLI + ["verify", "--catalog"], capture_output=True)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout


def test_cli_singular_theta_is_input_error(capsys):
    code, out, err = run_main(
        capsys, "dschar", "eval", "--datum", "sl2R", "--lambda", "2", "--theta", "0"
    )
    assert code == 2
    assert out == ""
    assert "SingularElement" in err


def test_cli_usage_errors(capsys):
    assert run_main(capsys, "nosuch")[0] == 2
    assert run_main(capsys, "verify")[0] == 2
    assert run_main(capsys, "dschar", "eval", "--datum", "sl2R", "--theta", "1")[0] == 2
    code, _, err = run_main(
        capsys, "char", "--datum", "su3", "--lambda", "1,1", "--lambda2", "2,2"
    )
    assert code == 2 and "not both" in err


def test_cli_rank_mismatch_rejected(capsys):
    code, _, err = run_main(
        capsys, "dschar", "eval", "--datum", "su21", "--lambda", "2", "--theta", "0.5,0.9"
    )
    assert code == 2


def test_cli_not_converged_witness(capsys):
    code, out, _ = run_main(capsys, "sl2", "degree", "--n", "2", "--t-max", "1.0")
    assert code == 1
    doc = json.loads(out)
    assert doc["error"] == "NotConverged"


def test_cli_verify_catalog(capsys):
    code, out, _ = run_main(capsys, "verify", "--catalog")
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True
    assert doc["failed"] == "0"
    assert all(row["passed"] for row in doc["checks"])


def test_cli_datum_report(capsys):
    code, out, _ = run_main(capsys, "datum", "--datum", "sp4R")
    assert code == 0
    doc = json.loads(out)
    assert doc["rank"] == "2"
    assert doc["q"] == "3"
    assert doc["weyl_order"] == "8"
    assert doc["compact_weyl_order"] == "2"
    assert doc["rho_n2"] == [0, 3]
    gradings = [r["grading"] for r in doc["positive_roots"]]
    assert gradings.count("noncompact") == 3


def test_cli_char_terms_lead_with_highest_weight(capsys):
    code, out, _ = run_main(capsys, "char", "--datum", "su2", "--lambda", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["dimension"] == "2"
    assert doc["terms"][0] == {"coords2": [2], "coefficient": "1"}


def test_cli_weight_flags_are_equivalent(capsys):
    a = run_main(capsys, "char", "--datum", "su3", "--lambda", "1,1")
    b = run_main(capsys, "char", "--datum", "su3", "--lambda2", "2,2")
    assert a == b


def test_cli_weyl_listing(capsys):
    code, out, _ = run_main(capsys, "weyl", "--datum", "su21", "--which", "compact")
    doc = json.loads(out)
    assert code == 0 and doc["order"] == "2"
    assert doc["elements"][0]["word"] == []
    assert doc["elements"][0]["sign"] == "1"


def test_cli_spin_and_ktype_and_fixedpoint(capsys):
    code, out, _ = run_main(capsys, "spin", "--datum", "su21", "--lambda2", "2,2")
    doc = json.loads(out)
    assert code == 0 and doc["lemma_passed"] and doc["alternating_identity"]

    code, out, _ = run_main(capsys, "ktype", "--datum", "sp4R", "--lambda2", "2,2")
    doc = json.loads(out)
    assert code == 0 and doc["induction"]["passed"]

    code, out, _ = run_main(
        capsys, "fixedpoint", "--datum", "su21", "--lambda2", "2,2",
        "--theta", "0.9,0.4",
    )
    doc = json.loads(out)
    assert code == 0 and doc["passed"] and doc["deviation"] <= 1e-9

    code, out, _ = run_main(
        capsys, "fixedpoint", "--datum", "su2", "--lambda", "1",
        "--theta", "1.0471975511965976", "--assembly",
    )
    doc = json.loads(out)
    assert code == 0 and doc["passed"]
    assert abs(doc["quotient_value"]["re"] - 1.0) < 1e-9


def test_cli_sl2_coeff_and_orbital(capsys):
    code, out, _ = run_main(capsys, "sl2", "coeff", "--n", "2", "--boost", "1.0")
    doc = json.loads(out)
    assert code == 0 and doc["difference"] < 1e-6

    code, out, _ = run_main(
        capsys, "sl2", "orbital", "--n", "3", "--theta", "1.0471975511965976",
        "--radial-nodes", "160", "--angular-nodes", "32",
    )
    doc = json.loads(out)
    assert code == 0 and doc["deviation"] < 1e-3


def test_cli_fgoi_report(capsys):
    code, out, _ = run_main(
        capsys, "sl2", "fgoi", "--mode", "elliptic_fgoi", "--theta", "1.5707963"
    )
    doc = json.loads(out)
    assert code == 0 and doc["converged"]
    assert doc["tail_bounds"][-1] < 1e-6
    assert doc["diam_k"] == pytest.approx(3.141592653589793)


def test_cli_env_grid_override():
    proc = subprocess.run(
        CLI + ["sl2", "degree", "--n", "2"],
        capture_output=True,
        text=True,
        env={"PATH": "", "LIECHAR_T_MAX": "1.0"},
    )
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["error"] == "NotConverged"


def test_cli_json_indent_trailing_position(capsys):
    code, out, _ = run_main(capsys, "datum", "--datum", "su2", "--json-indent", "2")
    assert code == 0
    assert out.startswith("{\n  ")
