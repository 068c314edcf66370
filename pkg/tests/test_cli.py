import io
import json
import subprocess
import sys

import pytest

from nilpair.catalog import entries
from nilpair.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_multiplier_heisenberg():
    assert call("multiplier", "--algebra", "H", "--params", "r=2") == (0, "5\n", "")


def test_pair_s():
    code, out, _ = call("pair", "--n", "L_{5,8}", "--k", "A", "--params", "k=6", "--invariant", "s")
    assert (code, out) == (0, "7\n")


def test_missing_file():
    code, out, err = call("multiplier", "--algebra", "file:missing.json")
    assert code == 2 and out == ""
    assert err.count("\n") == 1 and "missing.json" in err


@pytest.mark.parametrize("argv", [
    ["multiplier", "--algebra", "L_{9,9}"],
    ["classify", "--s", "8"],
    ["verify", "--s", "-1"],
    ["multiplier", "--algebra", "H"],
    ["multiplier", "--algebra", "H", "--params", "r"],
    ["invariants", "--algebra", "L_{6,22}", "--eps", "x"],
    ["multiplier", "--algebra", "H(1)", "--bogus"],
    ["frobnicate"],
    [],
])
def test_input_errors_exit_2(argv):
    code, out, err = call(*argv)
    assert code == 2 and out == ""
    assert err.startswith("nilpair: error:") and err.count("\n") == 1


def test_malformed_file(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"dim": 3, "brackets": [{"i": 2, "j": 1, "coeffs": {"3": "1"}}]}))
    code, _, err = call("invariants", "--algebra", f"file:{p}")
    assert code == 2 and "i < j" in err


def test_invariants_json_sorted():
    code, out, _ = call("invariants", "--algebra", "L5_8", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data == {"name": "L_{5,8}", "dim": 5, "dim_L2": 2, "dim_Z": 2, "dim_M": 6, "s": 1, "t": 4}
    assert list(data) == sorted(data)


def test_debug_matrices_canonical():
    code, out, _ = call("multiplier", "--algebra", "H(1)", "--debug-matrices", "--format", "json")
    data = json.loads(out)
    assert data["d2"] == {"cols": 3, "entries": [[2, 0, "1"]], "rows": 3}
    assert data["d3"]["entries"] == []


def test_catalog_table_and_json():
    code, out, _ = call("catalog")
    assert code == 0 and out.splitlines()[0].split() == ["name", "dim", "dim_L2", "dim_Z", "dim_M", "s", "t"]
    code, out, _ = call("catalog", "--format", "json")
    rows = json.loads(out)
    assert len(rows) == len(entries())
    by_name = {r["name"]: r for r in rows}
    assert by_name["S_1"]["s"] == 7 and by_name["L_{6,10}∔H(1)"]["dim"] == 8


def test_catalog_s_listing():
    code, out, _ = call("catalog", "--s", "1")
    assert (code, out) == (0, "L_{5,8}\n")
    code, out, _ = call("catalog", "--s", "5", "--amended", "--format", "json")
    assert "37C" in json.loads(out)["families"]


def test_export_round_trip(tmp_path):
    code, out, _ = call("catalog", "--format", "json", "--export", str(tmp_path))
    assert code == 0
    rows = {r["name"]: r for r in json.loads(out)}
    files = sorted(tmp_path.glob("*.json"))
    assert len(files) == len(rows)
    for f in files:
        code, text, _ = call("invariants", "--algebra", f"file:{f}", "--format", "json")
        again = json.loads(text)
        assert code == 0 and again == rows[again["name"]]


def test_classify_output():
    code, out, _ = call("classify", "--s", "0")
    assert code == 0 and out == "(H(1)⊕A(n-3), H(1)⊕A(n-3)⊕A(m)) [any m >= 0]\n"
    code, first, _ = call("classify", "--s", "7", "--format", "json")
    _, second, _ = call("classify", "--s", "7", "--format", "json")
    assert first == second and json.loads(first)["s"] == 7
    _, out, _ = call("classify", "--s", "4", "--allow-trivial-k", "--format", "json")
    assert json.loads(out)["allow_trivial_K"] is True


def test_verify_all_exits_zero():
    code, out, _ = call("verify", "--all")
    assert code == 0
    assert out.count(": ok") == 8 and "UNEXPLAINED" not in out


def test_verify_json():
    code, out, _ = call("verify", "--s", "7", "--format", "json")
    (data,) = json.loads(out)
    assert code == 0 and data["ok"] and len(data["diff"]) == 2


def test_verify_mismatch_exits_one(monkeypatch):
    from nilpair import statements

    monkeypatch.setattr(statements, "ERRATA", [e for e in statements.ERRATA if e.sigma != 7])
    code, out, _ = call("verify", "--s", "7")
    assert code == 1 and "UNEXPLAINED" in out


def test_selfcheck():
    code, out, _ = call("selfcheck", "--max-dim", "9")
    assert code == 0 and "0 mismatches" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nilpair", "multiplier", "--algebra", "H(3)"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "14\n"
