import json

import numpy as np
import pytest

from findim import exactla as la
from findim.algebra import algebra_to_json, preset
from findim.cli import main
from findim.complexes import complex_to_json, resolution_complex
from findim.modules import simple_module


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_pd_text_and_json(capsys):
    code, out, _ = run(capsys, "pd", "--algebra", "A2", "--module", "S1")
    assert code == 0 and out.startswith("pd(S1) = 1")
    code, js = run_json(capsys, "pd", "--algebra", "A2", "--module", "S1")
    assert js["command"] == "pd" and js["result"]["value"] == 1
    assert js["result"]["witnesses"] == ["P1", "P2"]


def test_injdim_of_dual_numbers_is_infinite(capsys):
    code, js = run_json(capsys, "injdim", "--algebra", "dual", "--module", "S1")
    assert code == 0 and js["result"]["display"] == "inf"


def test_resolve_reports_periodicity(capsys):
    code, js = run_json(capsys, "resolve", "--algebra", "nak3", "--module", "S1")
    assert code == 0 and js["result"]["status"].startswith("periodic")


@pytest.mark.parametrize("cmd,module,expected", [("width", "S1", 2), ("cowidth", "S1", 0), ("cowidth", "S3", 2)])
def test_width_and_cowidth_of_a_module(capsys, cmd, module, expected):
    code, js = run_json(capsys, cmd, "--algebra", "A3-rad2", "--module", module)
    assert code == 0 and js["result"]["value"] == expected


def test_width_of_a_complex_file(capsys, tmp_path):
    a = preset("A3")
    f = tmp_path / "c.json"
    f.write_text(json.dumps(complex_to_json(resolution_complex(simple_module(a, 0)), "A3")))
    code, js = run_json(capsys, "width", "--algebra", "A3", "--complex", str(f))
    assert code == 0 and js["result"]["value"] == 1


def test_tor_and_ext(capsys):
    code, js = run_json(capsys, "tor", "--algebra", "A2", "--right", "S2", "--left", "S1", "--max-i", "2")
    assert code == 0 and js["result"]["dims"] == [0, 1, 0]
    code, js = run_json(capsys, "ext", "--algebra", "A2", "--module", "S1", "--target", "S2", "--max-i", "2")
    assert code == 0 and js["result"]["dims"] == [0, 1, 0]


def test_findim_and_gldim(capsys):
    code, js = run_json(capsys, "findim", "--algebra", "nak32")
    assert code == 0 and js["result"]["value"] == {"lo": 2, "hi": 2}
    code, js = run_json(capsys, "gldim", "--algebra", "cyc2")
    assert code == 0 and js["result"]["display"] == "inf"


def test_verify_instance_mode(capsys):
    code, js = run_json(capsys, "verify", "triangular", "--S", "k", "--T", "k", "--M", "k")
    assert code == 0
    r = js["result"]
    assert r["verdict"] == "verified" and r["lhs"] == {"lo": 1, "hi": 1} and r["rhs"] == {"lo": 1, "hi": 1}


def test_verify_rejected_exits_zero(capsys):
    code, js = run_json(capsys, "verify", "homo_ring", "--R", "nak3", "--rad-power", "2")
    assert code == 0 and js["result"]["verdict"] == "rejected"


def test_verify_formula_mode(capsys):
    code, js = run_json(capsys, "verify", "triangular", "--input", "fd_S=1", "--input", "fd_T=>=0", "--input", "fd_B=1")
    assert code == 0 and js["result"]["verdict"] == "verified"
    code, js = run_json(capsys, "verify", "triangular", "--input", "fd_S=0", "--input", "fd_T=0", "--input", "fd_B=[2,3]")
    assert code == 2 and js["result"]["verdict"] == "violated"


def test_verify_instance_file(capsys, tmp_path):
    f = tmp_path / "inst.json"
    f.write_text(json.dumps({"R": "ut2", "e": [2]}))
    code, js = run_json(capsys, "verify", "stratifying", "--instance", str(f))
    assert code == 0 and js["result"]["verdict"] == "verified"


def test_validate_algebra_file_and_bad_table(capsys, tmp_path):
    good = tmp_path / "a.json"
    good.write_text(json.dumps(algebra_to_json(preset("kronecker-trunc"))))
    code, js = run_json(capsys, "validate", "--algebra", str(good))
    assert code == 0 and js["valid"] and js["result"]["dim"] == 4
    c = np.zeros((3, 3, 3), dtype=int)
    for i in range(3):
        c[0, i, i] = c[i, 0, i] = 1
    c[1, 1, 2] = c[1, 2, 1] = 1
    bad = tmp_path / "bad.json"
    entries = [[int(i), int(j), int(k), "1"] for i, j, k in zip(*np.nonzero(c))]
    bad.write_text(json.dumps({"dim": 3, "unit": ["1", "0", "0"], "mult": entries}))
    code, _, err = run(capsys, "validate", "--algebra", str(bad))
    assert code == 1 and "triple" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["pd", "--algebra", "nope", "--module", "S1"],
        ["pd", "--algebra", "A2", "--module", "S7"],
        ["pd", "--algebra", "A2"],
        ["verify", "no_such_bound"],
        ["verify", "triangular", "--input", "fd_S"],
        ["frobnicate"],
        ["width", "--algebra", "A2"],
    ],
)
def test_errors_exit_one(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and "findim:" in err


def test_report_suite_low_cap_has_no_violations(capsys):
    code, js = run_json(capsys, "report-suite", "--cap", "2")
    assert code == 0
    counts = js["result"]["counts"]
    assert counts.get("violated", 0) == 0 and counts["verified"] > 200
    row = js["result"]["rows"][0]
    assert {"index", "bound_id", "instance", "lhs", "rhs", "verdict"} <= set(row)
