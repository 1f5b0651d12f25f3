import json

import pytest

from jordeg.algebra import serialize_algebra
from jordeg.catalog import catalog
from jordeg.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check(capsys):
    code, out, _ = run(capsys, "check", "T01")
    assert code == EXIT_OK and "PASS" in out
    code, out, _ = run(capsys, "check", "nonjordan")
    assert code == EXIT_FAIL
    assert "(1, 1, 1, 1), value 6*e2" in out


def test_check_file(capsys, tmp_path):
    p = tmp_path / "a.json"
    p.write_text(serialize_algebra(catalog("T17")), encoding="utf-8")
    assert run(capsys, "check", str(p))[0] == EXIT_OK
    p.write_text('{"dim": 2, "products": {"e1*e3": "e1"}}', encoding="utf-8")
    code, _, err = run(capsys, "check", str(p))
    assert code == EXIT_USAGE and "e1*e3" in err


def test_usage_errors(capsys):
    assert run(capsys, "check", "T99")[0] == EXIT_USAGE
    assert run(capsys, "frobnicate")[0] == EXIT_USAGE
    assert run(capsys, "verify-all", "dim7")[0] == EXIT_USAGE
    assert run(capsys, "verify-all", "marginal", "1..3")[0] == EXIT_USAGE
    assert run(capsys, "verify-deg", "T01")[0] == EXIT_USAGE


def test_unicode_labels(capsys):
    code, out, _ = run(capsys, "invariants", "𝕋₁₇")
    assert code == EXIT_OK and "der: 3" in out
    assert run(capsys, "verify-deg", "𝕋₀₁→𝕋₀₃")[0] == EXIT_OK


def test_verify_deg(capsys):
    code, out, _ = run(capsys, "verify-deg", "T03->T15")
    assert code == EXIT_FAIL
    assert "[corrected]" in out and "poles at c[2][2]^3" in out
    assert run(capsys, "verify-deg", "T12->C3")[0] == EXIT_OK
    assert run(capsys, "verify-deg", "B4->B1")[0] == EXIT_OK


def test_verify_deg_file(capsys, tmp_path):
    p = tmp_path / "w.json"
    p.write_text(json.dumps({"source": "T03", "target": "T09",
                             "basis": [["1", "0", "0"], ["0", "0", "1"], ["0", "t", "0"]]}))
    code, out, _ = run(capsys, "verify-deg", str(p))
    assert code == EXIT_OK and "det = -t" in out
    p.write_text("{")
    assert run(capsys, "verify-deg", str(p))[0] == EXIT_USAGE


def test_verify_nondeg(capsys):
    code, out, _ = run(capsys, "verify-nondeg", "T06->T07")
    assert code == EXIT_OK
    code, out, _ = run(capsys, "verify-nondeg", "T13->T17")
    assert code == EXIT_FAIL
    assert "Borel stability: fail" in out and "[power-identity]" in out
    assert run(capsys, "verify-nondeg", "T12->T11")[0] == EXIT_OK
    assert run(capsys, "verify-nondeg", "T01->T07")[0] == EXIT_FAIL


def test_graph_and_dot(capsys):
    code, out, _ = run(capsys, "graph", "dim2")
    assert code == EXIT_OK and "rigid: B2, B4" in out
    code, out, _ = run(capsys, "graph", "dim3", "--dot")
    assert code == EXIT_OK and "digraph" in out


def test_cohomology(capsys):
    code, out, _ = run(capsys, "cohomology", "J4")
    assert code == EXIT_OK and "dim H^2 = 0" in out
    assert run(capsys, "cohomology", "nonjordan")[0] == EXIT_USAGE


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog", "list", "--dim", "2")
    assert code == EXIT_OK and "B5" in out and "T01" not in out
    code, out, _ = run(capsys, "catalog", "show", "T19")
    assert code == EXIT_OK and "T19" in out


def test_json_is_deterministic(capsys):
    first = run(capsys, "--format", "json", "verify-all", "dim2")
    second = run(capsys, "--format", "json", "verify-all", "dim2")
    assert first == second and first[0] == EXIT_OK
    doc = json.loads(first[1])
    assert doc["status"] == EXIT_OK and all(r["passed"] for r in doc["records"])


def test_verify_all_dim3_reports_known_failures(capsys):
    code, out, _ = run(capsys, "--format", "json", "verify-all", "dim3")
    assert code == EXIT_FAIL
    failed = [r["name"] for r in json.loads(out)["records"] if r["passed"] is False]
    assert len(failed) == 9
    assert sum("missing" in r["detail"] for r in json.loads(out)["records"]
               if r["passed"] is False) == 2


@pytest.mark.parametrize("scope", ["marginal", "marginal 2..5"])
def test_verify_all_marginal(capsys, scope):
    assert run(capsys, "verify-all", *scope.split())[0] == EXIT_OK


def test_check_data(capsys):
    assert run(capsys, "--check-data", "catalog", "list")[0] == EXIT_OK
