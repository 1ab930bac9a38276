import json

import pytest

from finsym.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSubcommands:
    def test_partition(self, capsys):
        code, out, _ = run(capsys, "partition", "--target", "B2:Z2",
                           "--manifold", "torus:5")
        assert code == 0
        assert json.loads(out)["value"] == "64/1"

    def test_partition_nonabelian_surface(self, capsys):
        code, out, _ = run(capsys, "partition", "--target", "B1:S3",
                           "--manifold", "surface:1")
        assert code == 0
        assert json.loads(out)["value"] == "3/1"

    def test_partition_bare_b_means_degree_one(self, capsys):
        code, out, _ = run(capsys, "partition", "--target", "B:S3",
                           "--manifold", "surface:0")
        assert code == 0
        assert json.loads(out)["value"] == "1/6"

    def test_bad_target_rejected(self, capsys):
        for target in ("B0:Z2", "Z2", "C2:Z2"):
            code, _, _ = run(capsys, "partition", "--target", target,
                             "--manifold", "sphere:2")
            assert code == 2

    def test_cohomology(self, capsys):
        code, out, _ = run(capsys, "cohomology", "--manifold", "rp:2",
                           "--coefficients", "Z2", "--degree", "2")
        assert code == 0
        doc = json.loads(out)
        assert doc["group"] == "Z2" and doc["order"] == 2

    def test_bordism_pants(self, capsys):
        code, out, _ = run(capsys, "bordism", "--group", "Z2", "--shape", "pants")
        assert code == 0
        doc = json.loads(out)
        assert doc["matrix"] == [["1/1", "0/1", "0/1", "1/1"],
                                 ["0/1", "1/1", "1/1", "0/1"]]

    def test_fusion_report(self, capsys):
        code, out, _ = run(capsys, "fusion", "--ty", "Z2",
                           "--report", "dims,obstructions,table")
        assert code == 0
        doc = json.loads(out)
        assert doc["fiber_functor"]["verdict"] == "impossible"
        assert doc["dual"] == [0, 1, 2]

    def test_lines(self, capsys):
        code, out, _ = run(capsys, "lines", "--A", "Z2", "--Aprime", "full",
                           "--q", "1/4")
        assert code == 0
        assert json.loads(out)["pairs"] == [[[0], [0]], [[1], [1]]]

    def test_lines_trivial_subgroup(self, capsys):
        code, out, _ = run(capsys, "lines", "--A", "Z2", "--Aprime", "0", "--q", "")
        assert code == 0
        assert json.loads(out)["pairs"] == [[[0], [0]], [[0], [1]]]

    def test_lines_subgroup_named_like_the_group(self, capsys):
        code, out, _ = run(capsys, "lines", "--A", "Z2", "--Aprime", "Z2",
                           "--q", "1/4")
        assert code == 0
        assert json.loads(out)["pairs"] == [[[0], [0]], [[1], [1]]]

    def test_lines_generator_list(self, capsys):
        code, out, _ = run(capsys, "lines", "--A", "Z2xZ4", "--Aprime", "0,2",
                           "--q", "1/4")
        assert code == 0
        doc = json.loads(out)
        assert doc["count"] == 8

    def test_anyons(self, capsys):
        code, out, _ = run(capsys, "anyons", "--N", "2", "--p", "1")
        assert code == 0
        doc = json.loads(out)
        assert doc["anyons"][1]["spin"] == "1/4"

    def test_anomaly_even(self, capsys):
        code, out, _ = run(capsys, "anomaly", "--ym-theta-pi", "4")
        assert code == 0
        assert json.loads(out) == {"verdict": "anomalous"}

    def test_anomaly_odd_and_instanton(self, capsys):
        code, out, _ = run(capsys, "anomaly", "--ym-theta-pi", "5",
                           "--fractional-instanton", "2", "1")
        assert code == 0
        doc = json.loads(out)
        assert doc["verdict"] == "counterterm" and doc["k"] == 2
        assert doc["fractional_instanton"] == "3/4"

    def test_gauss(self, capsys):
        code, out, _ = run(capsys, "gauss", "--N", "5", "--p", "2")
        assert code == 0
        doc = json.loads(out)
        assert doc["value"] == "5/1"
        assert abs(float(doc["direct_real"]) - 5) <= 1e-9

    def test_ising_sectors_and_gauge(self, capsys):
        code, out, _ = run(capsys, "ising", "--L", "2", "--T", "2",
                           "--beta", "0.44068679", "--sectors", "all", "--gauge")
        assert code == 0
        doc = json.loads(out)
        assert set(doc) == {"L", "T", "beta", "Z00", "Z01", "Z10", "Z11", "gauged"}
        total = sum(float(doc[f"Z{s[0]}{s[1]}"]) for s in
                    ((0, 0), (0, 1), (1, 0), (1, 1)))
        assert float(doc["gauged"]) == pytest.approx(0.5 * total, rel=1e-12)

    def test_problem1(self, capsys):
        code, out, _ = run(capsys, "problem1", "--group", "Z2")
        assert code == 0
        doc = json.loads(out)
        assert doc["state_space_dim"] == 2
        assert doc["cylinder_is_identity"] is True
        assert doc["trace_check"]["passed"] is True
        assert doc["pants"]["matrix"] == [["1/1", "0/1", "0/1", "1/1"],
                                          ["0/1", "1/1", "1/1", "0/1"]]


class TestFormats:
    def test_plain(self, capsys):
        code, out, _ = run(capsys, "gauss", "--N", "3", "--p", "2",
                           "--format", "plain")
        assert code == 0
        assert "value = 3/1" in out

    def test_csv_sweep(self, capsys):
        code, out, _ = run(capsys, "ising", "--L", "2", "--T", "2",
                           "--sweep", "0.2", "1.0", "3", "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].startswith("beta,Z00")
        assert len(lines) == 4

    def test_csv_rejected_elsewhere(self, capsys):
        code, _, err = run(capsys, "gauss", "--N", "3", "--p", "1",
                           "--format", "csv")
        assert code == 2
        assert "CSV" in err

    def test_json_reparses(self, capsys):
        for argv in (
            ["partition", "--target", "B2:Z2", "--manifold", "sphere:2"],
            ["anyons", "--N", "3", "--p", "2"],
            ["problem1"],
        ):
            code, out, _ = run(capsys, *argv)
            assert code == 0
            json.loads(out)


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ("partition", "--target", "B2:Z2", "--manifold", "torus:4"),
            ("bordism", "--group", "Z2xZ2", "--shape", "copants"),
            ("ising", "--L", "3", "--T", "2", "--beta", "0.3", "--gauge"),
            ("problem1", "--group", "Z3"),
        ],
    )
    def test_byte_identical_runs(self, capsys, argv):
        code1, out1, _ = run(capsys, *argv)
        code2, out2, _ = run(capsys, *argv)
        assert code1 == code2 == 0
        assert out1 == out2


class TestSubprocess:
    def test_installed_entry_point_matches_in_process(self, capsys):
        import subprocess
        import sys

        argv = ["anyons", "--N", "4", "--p", "3"]
        _, in_process, _ = run(capsys, *argv)
        completed = subprocess.run(
            [sys.executable, "-m", "finsym.cli", *argv],
            capture_output=True,
            text=True,
            check=True,
        )
        assert completed.stdout == in_process


class TestExitCodes:
    def test_unknown_preset_is_input_error(self, capsys):
        code, _, err = run(capsys, "partition", "--target", "B2:Z2",
                           "--manifold", "nosuch:1")
        assert code == 2 and "nosuch" in err

    def test_unknown_flag_is_input_error(self, capsys):
        code, _, _ = run(capsys, "gauss", "--N", "3", "--p", "1", "--bogus")
        assert code == 2

    def test_guard_exceeded_is_exit_3(self, capsys):
        code, _, err = run(capsys, "partition", "--target", "B1:S3",
                           "--manifold", "surface:2", "--max-enum", "100")
        assert code == 3 and "guard" in err

    def test_bad_threads(self, capsys):
        code, _, _ = run(capsys, "gauss", "--N", "3", "--p", "1",
                         "--threads", "0")
        assert code == 2
