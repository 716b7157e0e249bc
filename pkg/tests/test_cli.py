import json
import subprocess
import sys

import pytest


def run_cli(*args, **kwargs):
    return subprocess.run(
        [sys.executable, "-m", "polytnn", *args],
        capture_output=True,
        text=True,
        **kwargs,
    )


class TestMatrixCommand:
    def test_path_matrix_csv(self):
        res = run_cli("matrix", "--n", "4", "--format", "csv")
        assert res.returncode == 0
        assert res.stdout == "1,4,6,4\n0,1,3,2\n"

    def test_smallest_transfer_matrix(self):
        res = run_cli("matrix", "--d", "1")
        assert res.returncode == 0
        assert res.stdout == "2\n"

    def test_text_alignment(self):
        res = run_cli("matrix", "--d", "3")
        assert res.stdout == "4 6 4\n1 3 2\n"

    def test_json(self):
        res = run_cli("matrix", "--d", "2", "--format", "json")
        assert json.loads(res.stdout) == {"d": 2, "rows": [[3, 3], [1, 1]]}

    def test_augmented(self):
        res = run_cli("matrix", "--d", "3", "--augmented", "--format", "csv")
        assert res.returncode == 0
        assert res.stdout == "1,4,6,4\n0,1,3,2\n"

    def test_augmented_text_carries_label(self):
        res = run_cli("matrix", "--d", "3", "--augmented")
        assert res.stdout.startswith("#")
        assert "n=4" in res.stdout.splitlines()[0]

    def test_no_flags_is_usage_error(self):
        res = run_cli("matrix")
        assert res.returncode == 2

    def test_both_flags_is_usage_error(self):
        res = run_cli("matrix", "--d", "2", "--n", "4")
        assert res.returncode == 2

    def test_augmented_with_n_is_usage_error(self):
        res = run_cli("matrix", "--n", "4", "--augmented")
        assert res.returncode == 2

    def test_domain_error(self):
        res = run_cli("matrix", "--d", "0")
        assert res.returncode == 1
        assert "error" in res.stderr


class TestTnnCommand:
    def test_transfer_matrix_passes(self):
        res = run_cli("tnn", "--d", "6")
        assert res.returncode == 0
        assert "is_tnn: true" in res.stdout

    def test_counterexample_file(self, tmp_path):
        f = tmp_path / "counter.csv"
        f.write_text("1,2\n3,4\n")
        res = run_cli("tnn", "--file", str(f))
        assert res.returncode == 3
        assert "witness: rows={0,1} cols={0,1} value=-2" in res.stdout

    def test_json_file_input(self, tmp_path):
        f = tmp_path / "m.json"
        f.write_text(json.dumps({"rows": [[1, 1], [0, 1]]}))
        res = run_cli("tnn", "--file", str(f))
        assert res.returncode == 0

    def test_missing_file(self):
        res = run_cli("tnn", "--file", "/nonexistent/matrix.csv")
        assert res.returncode == 1
        assert "error" in res.stderr

    def test_jobs_byte_identical(self):
        outputs = {
            run_cli("tnn", "--d", "8", "--jobs", str(k), "--format", "json").stdout
            for k in (1, 2, 8)
        }
        assert len(outputs) == 1

    def test_max_order(self):
        res = run_cli("tnn", "--file", "/dev/stdin", "--max-order", "1", input="1,2\n3,4\n")
        assert res.returncode == 0

    def test_json_schema(self):
        res = run_cli("tnn", "--n", "5", "--format", "json")
        obj = json.loads(res.stdout)
        assert set(obj) == {"is_tnn", "minors_checked", "min_minor", "witness"}
        assert obj["is_tnn"] is True


class TestVectorCommands:
    def test_g2f_octahedron(self):
        res = run_cli("g2f", "--g", "1,2", "--d", "3")
        assert res.returncode == 0
        assert res.stdout == "6,12,8\n"

    def test_f2g_simplex(self):
        res = run_cli("f2g", "--f", "4,6,4", "--d", "3")
        assert res.stdout == "1,0\n"

    def test_feasible_fail(self):
        res = run_cli("feasible", "--f", "4,6,5", "--d", "3")
        assert res.returncode == 0
        assert res.stdout == "fail, condition=euler\n"

    def test_feasible_pass(self):
        res = run_cli("feasible", "--f", "6,12,8", "--d", "3")
        assert res.stdout == "pass\n"

    def test_feasible_json(self):
        res = run_cli("feasible", "--f", "6,12,8", "--d", "3", "--format", "json")
        obj = json.loads(res.stdout)
        assert obj["pass"] is True
        assert obj["g"] == [1, 2]

    def test_euler(self):
        assert run_cli("euler", "--f", "4,6,4", "--d", "3").stdout == "true\n"
        assert run_cli("euler", "--f", "4,6,5", "--d", "3").stdout == "false\n"

    def test_length_mismatch_names_expected_length(self):
        res = run_cli("f2g", "--f", "4,6", "--d", "3")
        assert res.returncode == 1
        assert "3" in res.stderr

    def test_malformed_vector_is_usage_error(self):
        res = run_cli("f2g", "--f", "4,six,4", "--d", "3")
        assert res.returncode == 2

    def test_json_vector_output(self):
        res = run_cli("f2g", "--f", "6,12,8", "--d", "3", "--format", "json")
        assert json.loads(res.stdout) == {"d": 3, "g": [1, 2]}


class TestMsequenceCommand:
    def test_true_case(self):
        res = run_cli("msequence", "--seq", "1,4,10,20")
        assert res.returncode == 0
        assert res.stdout == "true\n"

    def test_false_case_names_index(self):
        res = run_cli("msequence", "--seq", "1,2,4")
        assert res.returncode == 0
        assert res.stdout.startswith("false, k=2")

    def test_wrong_head(self):
        res = run_cli("msequence", "--seq", "2,1")
        assert res.stdout == "false, k=0\n"

    def test_oracle_flag_agrees(self):
        res = run_cli("msequence", "--seq", "1,3,5", "--oracle")
        assert res.returncode == 0
        assert res.stdout == "true\n"

    def test_oracle_budget_exceeded(self):
        res = run_cli("msequence", "--seq", "1,5,12,22", "--oracle")
        assert res.returncode == 1
        assert "budget" in res.stderr

    def test_json_schema(self):
        res = run_cli("msequence", "--seq", "1,2,4", "--format", "json")
        assert json.loads(res.stdout) == {
            "is_m_sequence": False,
            "witness_k": 2,
            "boundary_value": 3,
        }


class TestLgvCommand:
    def test_verify_known_minor(self):
        res = run_cli("lgv", "--n", "4", "--verify", "--rows", "0,1", "--cols", "1,2")
        assert res.returncode == 0
        assert res.stdout == "det=6, lgv=6, equal\n"

    def test_verify_requires_indices(self):
        res = run_cli("lgv", "--n", "4", "--verify")
        assert res.returncode == 2

    def test_dot_file(self, tmp_path):
        out = tmp_path / "t8.dot"
        res = run_cli("lgv", "--n", "8", "--dot", str(out))
        assert res.returncode == 0
        text = out.read_text()
        assert text.startswith("digraph lattice8 {")
        assert text.count("->") == 28

    def test_dot_stdout(self):
        res = run_cli("lgv", "--n", "2", "--format", "dot")
        assert res.stdout == (
            "digraph lattice2 {\n"
            '  "(0,0)";\n'
            '  "(0,1)";\n'
            '  "(0,0)" -> "(0,1)" [label="2"];\n'
            "}\n"
        )

    def test_too_small_order(self):
        res = run_cli("lgv", "--n", "1")
        assert res.returncode == 1

    def test_budget_exceeded(self):
        res = run_cli("lgv", "--n", "8", "--verify", "--rows", "0,1,2,3", "--cols", "0,1,2,3")
        assert res.returncode == 1
        assert "budget" in res.stderr

    def test_json_graph(self):
        res = run_cli("lgv", "--n", "4", "--format", "json")
        obj = json.loads(res.stdout)
        assert obj["n"] == 4
        assert len(obj["vertices"]) == 6


class TestGlobalBehavior:
    def test_no_subcommand_is_usage_error(self):
        res = run_cli()
        assert res.returncode == 2

    def test_unknown_subcommand(self):
        res = run_cli("frobnicate")
        assert res.returncode == 2

    def test_determinism_across_runs(self):
        a = run_cli("lgv", "--n", "7", "--format", "json").stdout
        b = run_cli("lgv", "--n", "7", "--format", "json").stdout
        assert a == b

    def test_console_script_installed(self):
        res = subprocess.run(
            ["polytnn", "matrix", "--d", "1"], capture_output=True, text=True
        )
        assert res.returncode == 0
        assert res.stdout == "2\n"
