import json
import os
import subprocess
import sys

import pytest

from liecoh import catalog
from liecoh.fileformat import (
    FileFormatError,
    algebra_from_dict,
    algebra_to_dict,
    module_from_dict,
    module_to_dict,
)
from liecoh.rep import adjoint_module

SRC = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src")


def run_cli(*args, expect: int = 0):
    env = dict(os.environ)
    env["PYTHONPATH"] = SRC + os.pathsep + env.get("PYTHONPATH", "")
    proc = subprocess.run([sys.executable, "-m", "liecoh", *args],
                          capture_output=True, text=True, env=env)
    assert proc.returncode == expect, (args, proc.returncode, proc.stderr)
    return proc


def payload_of(proc):
    return json.loads(proc.stdout)


# --- file format ----------------------------------------------------------

def test_emit_parse_roundtrip_on_catalog():
    for name in catalog.names():
        L = catalog.get(name)
        again = algebra_from_dict(algebra_to_dict(L))
        assert again == L, name


def test_module_file_roundtrip():
    L = catalog.heisenberg3()
    M = adjoint_module(L)
    again = module_from_dict(module_to_dict(M), L)
    assert again == M


def test_rejects_badly_ordered_bracket_pairs():
    d = algebra_to_dict(catalog.example_a())
    d["brackets"][0]["left"], d["brackets"][0]["right"] = (
        d["brackets"][0]["right"], d["brackets"][0]["left"])
    with pytest.raises(FileFormatError):
        algebra_from_dict(d)


def test_rejects_bad_coefficients():
    d = algebra_to_dict(catalog.example_a())
    d["brackets"][0]["result"][0][0] = "not-a-number"
    with pytest.raises(FileFormatError):
        algebra_from_dict(d)


# --- commands -------------------------------------------------------------

def test_validate_catalog_name():
    proc = run_cli("validate", "exampleA")
    payload = payload_of(proc)
    assert payload["schema"] == 1
    assert payload["ok"] is True


def test_validate_algebra_file(tmp_path):
    path = tmp_path / "algebra.json"
    path.write_text(json.dumps(algebra_to_dict(catalog.example_a())))
    proc = run_cli("validate", str(path))
    assert payload_of(proc)["ok"] is True


def test_validate_jacobi_violation_names_triple(tmp_path):
    broken = {
        "schema": 1,
        "dim": 3,
        "basis": ["x", "y", "z"],
        "brackets": [
            {"left": 0, "right": 1, "result": [["1", 2]]},
            {"left": 0, "right": 2, "result": [["1", 0]]},
            {"left": 1, "right": 2, "result": [["1", 1]]},
        ],
    }
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(broken))
    proc = run_cli("validate", str(path), expect=1)
    payload = payload_of(proc)
    assert payload["ok"] is False
    assert payload["violation"]["kind"] == "jacobi"
    assert payload["violation"]["labels"] == ["x", "y", "z"]
    assert "x, y, z" in proc.stderr


def test_unknown_example_name():
    run_cli("check", "no-such-algebra", expect=2)


def test_series_command():
    proc = run_cli("series", "exampleA")
    payload = payload_of(proc)
    assert payload["lower_central"]["dims"] == [2, 1]
    assert payload["is_nilpotent"] is False
    assert payload["is_solvable"] is True
    assert payload["stable_term_dim"] == 1


def test_check_command_example_a():
    proc = run_cli("check", "exampleA")
    payload = payload_of(proc)
    report = payload["report"]
    assert report["condition2"] is True
    assert report["condition3"] is True
    assert report["rees_noetherian"] is False
    assert payload["derived_equivalence"]["verdict"] is True


def test_check_command_prop_c():
    proc = run_cli("check", "propC")
    report = payload_of(proc)["report"]
    assert report["condition2"] is False
    assert report["condition3"] is False


def test_cohomology_command_with_degree_window():
    proc = run_cli("cohomology", "heisenberg3", "--degrees", "1..2")
    payload = payload_of(proc)
    assert payload["dims"] == [1, 2, 2, 1]
    assert sorted(payload["representatives"]) == ["1", "2"]
    assert payload["euler_characteristic"] == 0


def test_cohomology_adjoint_coefficients():
    proc = run_cli("cohomology", "sl2", "--module", "adjoint")
    payload = payload_of(proc)
    assert payload["module"] == "adjoint"
    assert payload["dims"] == [0, 0, 0, 0]   # Whitehead vanishing


def test_cohomology_module_file(tmp_path):
    L = catalog.heisenberg3()
    path = tmp_path / "module.json"
    path.write_text(json.dumps(module_to_dict(adjoint_module(L))))
    proc = run_cli("cohomology", "heisenberg3", "--module", str(path))
    payload = payload_of(proc)
    assert len(payload["dims"]) == 4
    assert payload["dims"][0] == 1       # adjoint invariants = the center


def test_cohomology_guard_refuses_oversized_input(tmp_path):
    big = {"schema": 1, "dim": 13, "basis": [f"e{i}" for i in range(13)],
           "brackets": []}
    path = tmp_path / "big.json"
    path.write_text(json.dumps(big))
    proc = run_cli("cohomology", str(path), expect=2)
    assert "cap" in proc.stderr


def test_rees_command_heisenberg():
    proc = run_cli("rees", "heisenberg3", "--max-filtration", "4",
                   "--max-weight", "4", "--verify-pbw")
    payload = payload_of(proc)
    assert payload["nilpotent"] is True
    assert payload["rees_noetherian"] is True
    assert payload["table"][1][2] == 1
    assert payload["lcs_dims_match"] is True
    assert payload["monoid_generated"] is True
    assert payload["pbw_verified"]["all_equal"] is True
    assert "predicted == brute-force: yes" in proc.stderr


def test_rees_command_non_nilpotent():
    proc = run_cli("rees", "exampleA", "--max-filtration", "3",
                   "--max-weight", "3")
    payload = payload_of(proc)
    assert payload["nilpotent"] is False
    assert payload["rees_noetherian"] is False
    assert payload["table"] is None


def test_e2_command_sl2():
    proc = run_cli("e2", "sl2")
    payload = payload_of(proc)
    assert payload["table"] == [[1, 0, 0, 1]]
    assert payload["h_total"] == [1, 0, 0, 1]
    assert payload["antidiagonal_bound_ok"] is True


def test_e2_command_example_a():
    proc = run_cli("e2", "exampleA")
    payload = payload_of(proc)
    assert payload["bottom_row"] == [1, 1]
    assert payload["bottom_row_equals_h_total"] is True


def test_example_emit_matches_library_and_cli_roundtrip(tmp_path):
    proc = run_cli("example", "amazing-L", "--emit")
    payload = payload_of(proc)
    assert algebra_from_dict(payload) == catalog.amazing_l()
    # emitted file is accepted by every command
    path = tmp_path / "amazing.json"
    path.write_text(proc.stdout)
    proc2 = run_cli("check", str(path))
    assert payload_of(proc2)["report"]["condition3"] is True


def test_example_summary():
    proc = run_cli("example", "sl2")
    payload = payload_of(proc)
    assert payload["dim"] == 3
    assert payload["is_nilpotent"] is False


def test_catalog_contains_required_entries():
    required = {"abelian1", "abelian2", "abelian3", "abelian4", "heisenberg3",
                "exampleA", "ut3", "strict-ut3", "propC", "amazing-L", "sl2"}
    assert required <= set(catalog.names())


def test_byte_identical_output():
    a = run_cli("check", "propC").stdout
    b = run_cli("check", "propC").stdout
    assert a == b
    c = run_cli("rees", "heisenberg3", "--max-filtration", "3",
                "--max-weight", "3", "--verify-pbw").stdout
    d = run_cli("rees", "heisenberg3", "--max-filtration", "3",
                "--max-weight", "3", "--verify-pbw").stdout
    assert c == d
