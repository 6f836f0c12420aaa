"""Serialization formats and the command-line interface."""

import json

import pytest

from dts_ldpc.cli import main
from dts_ldpc.code import build_base_matrix
from dts_ldpc.formats import (
    from_alist,
    matrix_from_json_dict,
    matrix_to_json_dict,
    render_pretty,
    to_alist,
)
from dts_ldpc.gf import GaloisField
from dts_ldpc.code import ExponentMatrix

EXAMPLE_B_PRETTY = """\
  a    0 1
a^2  a^4 0
  0  a^6 0
  0    0 0
  0 a^10 0
a^6    0 0"""

ALIST_A_J1 = """\
6 2 32
2 5
2 2 1 1 1 1
3 5
1 2 2 3
1 3 2 5
1 1
2 2
2 3
2 1
1 2 2 3 3 1
1 3 2 5 4 2 5 3 6 1
"""


# ---------------------------------------------------------------------------
# formats
# ---------------------------------------------------------------------------

def test_json_round_trip(dts_126_124, gf32):
    matrix = build_base_matrix(dts_126_124, gf32, 3)
    data = matrix_to_json_dict(matrix)
    assert data["schema"] == "exponent-matrix/v1"
    assert data["entries"] == sorted(data["entries"])
    again = matrix_from_json_dict(data)
    assert again == matrix


def test_json_schema_guard():
    with pytest.raises(ValueError):
        matrix_from_json_dict({"schema": "something-else"})


def test_alist_golden_and_round_trip(ref_spec_a):
    matrix = ref_spec_a.sliding_matrix(1)
    text = to_alist(matrix)
    assert text == ALIST_A_J1
    again = from_alist(text)
    assert again == matrix


def test_alist_value_mapping(ref_spec_a):
    # alpha^e is stored as e+1 so 0 can stay "absent"
    matrix = ref_spec_a.sliding_matrix(1)
    lines = to_alist(matrix).splitlines()
    assert lines[4] == "1 2 2 3"  # column 1: alpha at row 1, alpha^2 at row 2


@pytest.mark.parametrize("text", [
    "6 2\n",
    "6 2 32\n2 5\n2 2 1 1 1 1\n3 5\n",
    "1 1 6\n1 1\n1\n1\n1 1\n1 1\n",
    "1 1 2\n1 1\n1\n1\n1 0\n1 1\n",
    "2 1 2\n1 1\n1\n1\n1 1\n\n",
])
def test_alist_rejects_malformed(text):
    with pytest.raises(ValueError):
        from_alist(text)


def test_render_pretty_reference_base(dts_126_235, gf32):
    matrix = build_base_matrix(dts_126_235, gf32, 3)
    assert render_pretty(matrix) == EXAMPLE_B_PRETTY


def test_render_pretty_tokens_and_zero_flag(gf32):
    row = ExponentMatrix(1, 2, {(1, 1): 1, (1, 2): 0}, gf32)
    assert render_pretty(row) == "a 1"
    dotted = ExponentMatrix(2, 2, {(1, 1): 5}, gf32)
    assert render_pretty(dotted, zero=".") == "a^5 .\n  . ."


def test_render_pretty_empty(gf32):
    assert render_pretty(ExponentMatrix(0, 0, {}, gf32)) == ""


# ---------------------------------------------------------------------------
# CLI
# ---------------------------------------------------------------------------

def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cli_construct_pretty(capsys):
    code, out, err = run_cli(capsys, "construct", "--dts", "1,2,6;2,3,5",
                             "--n", "3", "--field", "2^5")
    assert code == 0 and err == ""
    assert out == EXAMPLE_B_PRETTY + "\n"


def test_cli_construct_sliding_json(capsys):
    code, out, _ = run_cli(capsys, "construct", "--dts", "1,2,6;1,2,4",
                           "--n", "3", "--field", "2^5", "--j", "0", "--out", "json")
    assert code == 0
    data = json.loads(out)
    assert data["rows"] == 1 and data["cols"] == 3
    assert data["entries"] == [[1, 1, 1], [1, 2, 2], [1, 3, 0]]


def test_cli_construct_alist(capsys):
    code, out, _ = run_cli(capsys, "construct", "--dts", "1,2,6;1,2,4",
                           "--n", "3", "--field", "2^5", "--j", "1", "--out", "alist")
    assert code == 0 and out == ALIST_A_J1


def test_cli_construct_from_file(capsys, tmp_path):
    path = tmp_path / "dts.json"
    path.write_text(json.dumps({"sets": [[1, 2, 6], [2, 3, 5]]}))
    code, out, _ = run_cli(capsys, "construct", "--dts-file", str(path),
                           "--n", "3", "--field", "2^5")
    assert code == 0 and out == EXAMPLE_B_PRETTY + "\n"


def test_cli_output_is_deterministic(capsys):
    args = ("verify", "--dts", "1,2,6;2,3,5", "--n", "3", "--field", "2^5", "--json")
    first = run_cli(capsys, *args)
    second = run_cli(capsys, *args)
    assert first == second


def test_cli_verify_reports_failures_with_exit_1(capsys):
    code, out, _ = run_cli(capsys, "verify", "--dts", "1,2,6;2,3,5",
                           "--n", "3", "--field", "2^5",
                           "--minors", "2,3", "--cycles", "4,6")
    assert code == 1
    assert "minors size=2: checked=324 failures=0" in out
    assert "minors size=3: checked=1754 failures=3" in out
    assert "result: FAIL (6 failures)" in out


def test_cli_verify_clean_subset_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--dts", "1,2,6;2,3,5",
                           "--n", "3", "--field", "2^5",
                           "--minors", "2", "--cycles", "4")
    assert code == 0
    assert "result: PASS" in out
    assert "girth=4" in out


def test_cli_verify_json_shape(capsys):
    code, out, _ = run_cli(capsys, "verify", "--dts", "1,2,6;1,2,4",
                           "--n", "3", "--field", "2^5", "--json")
    assert code == 1
    data = json.loads(out)
    assert data["schema"] == "verify-report/v1"
    assert data["failures"] == 10
    assert data["ok"] is False
    assert [m["minor_size"] for m in data["minors"]] == [2, 3]
    assert [c["length"] for c in data["cycles"]] == [4, 6]
    assert data["cycles"][1]["frc_failures"][0] == {"rows": [2, 3, 4], "cols": [2, 5, 8]}


def test_cli_distance_profile(capsys):
    code, out, _ = run_cli(capsys, "distance", "--dts", "1,2,6;2,3,5",
                           "--n", "3", "--field", "2^5")
    assert code == 0
    assert "column_distances: 1 2 3 3 3 4" in out
    assert "free_distance: 4 (exact, upper bound 4)" in out
    assert "assumption_holds: yes" in out


def test_cli_distance_restricted_horizon(capsys):
    code, out, _ = run_cli(capsys, "distance", "--dts", "1,2,6;1,2,4",
                           "--n", "3", "--field", "2^5", "--horizon", "2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["free_distance_lower_bound"] == 3
    assert data["free_distance_upper_bound"] == 4


def test_cli_search_and_exhaustion(capsys):
    code, out, _ = run_cli(capsys, "search", "--sets", "1", "--size", "3")
    assert code == 0
    assert "scope: 4" in out and "sets: 1,2,4" in out
    code, _, err = run_cli(capsys, "search", "--sets", "2", "--size", "3",
                           "--mode", "strict", "--budget", "7")
    assert code == 1
    assert "exhausted" in err


def test_cli_search_json(capsys):
    code, out, _ = run_cli(capsys, "search", "--sets", "2", "--size", "3",
                           "--mode", "strict", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["scope"] == 8
    assert data["sets"] == [[1, 2, 5], [1, 3, 8]]
    assert data["exhausted_scopes"] == [3, 4, 5, 6, 7]


def test_cli_density(capsys):
    code, out, _ = run_cli(capsys, "density", "--n", "3", "--w", "3",
                           "--mu", "5", "--len", "18")
    assert code == 0 and out == "7/33\n"
    code, out, _ = run_cli(capsys, "density", "--n", "3", "--w", "3",
                           "--mu", "5", "--len", "18", "--json")
    assert json.loads(out) == {"schema": "density/v1", "density": "7/33",
                               "numerator": 7, "denominator": 33}


def test_cli_suggest_field(capsys):
    code, out, _ = run_cli(capsys, "suggest-field", "--n", "3",
                           "--scope", "6", "--w", "3")
    assert code == 0
    assert out == "q_2x2=12\nN_3x3=5\ncase_ii_q=8\nsuggested=2^5\n"


@pytest.mark.parametrize("argv", [
    ("construct", "--dts", "1,2,6", "--n", "3", "--field", "2^5"),
    ("construct", "--dts", "1,2,3;1,2,4", "--n", "3", "--field", "2^5"),
    ("construct", "--dts", "1,2,6;1,2,4", "--n", "3", "--field", "6"),
    ("construct", "--dts", "1,2,6;1,2,4", "--n", "3", "--field", "2^5^3"),
    ("verify", "--dts", "1,2,6;1,2,4", "--n", "3", "--field", "2^5", "--minors", "5"),
    ("density", "--n", "3", "--w", "3", "--mu", "5", "--len", "17"),
    ("search", "--sets", "0", "--size", "3"),
])
def test_cli_usage_errors_exit_2(capsys, argv):
    code, _, err = run_cli(capsys, *argv)
    assert code == 2
    assert "error" in err


def test_cli_unknown_command_exits_2(capsys):
    assert main(["nonsense"]) == 2
    capsys.readouterr()


def test_cli_budget_env_and_flag(capsys, monkeypatch):
    monkeypatch.setenv("DTS_LDPC_BUDGET", "10")
    code, _, err = run_cli(capsys, "verify", "--dts", "1,2,6;1,2,4",
                           "--n", "3", "--field", "2^5", "--minors", "2",
                           "--cycles", "4")
    assert code == 2 and "budget" in err
    code, _, _ = run_cli(capsys, "verify", "--dts", "1,2,6;1,2,4",
                         "--n", "3", "--field", "2^5", "--minors", "2",
                         "--cycles", "4", "--budget", "1000000")
    assert code == 0
