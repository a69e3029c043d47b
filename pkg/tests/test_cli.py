"""End-to-end tests of the command-line interface.

Exit-code contract: 0 success/pass, 1 verification failure, 2 usage or
configuration error (argparse errors also exit 2 via SystemExit).
"""

import json
import math

import pytest

from klx.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def csv_rows(out):
    lines = out.strip().splitlines()
    header = lines[0].split(",")
    return [dict(zip(header, line.split(","))) for line in lines[1:]]


class TestVerify:
    def test_single_proof_csv(self, capsys):
        code, out, _ = run(capsys, "verify", "--proof", "2", "--J", "10,100,1000",
                           "--format", "csv")
        assert code == 0
        rows = csv_rows(out)
        assert len(rows) == 3
        estimates = [float(r["estimate"]) for r in rows]
        assert estimates == sorted(estimates)
        for r in rows:
            assert float(r["abs_error"]) <= float(r["tail_bound"])

    def test_all_proofs_close_to_target(self, capsys):
        code, out, _ = run(capsys, "verify", "--proof", "all", "--J", "1000",
                           "--format", "csv")
        assert code == 0
        rows = csv_rows(out)
        assert len(rows) == 3
        assert {r["proof_id"] for r in rows} == {"Proof1", "Proof2", "Proof3"}
        for r in rows:
            assert abs(float(r["estimate"]) - math.pi**2 / 6.0) <= 1e-3

    def test_invalid_proof_exits_2(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["verify", "--proof", "4", "--J", "10"])
        assert excinfo.value.code == 2

    def test_empty_j_list_exits_2(self, capsys):
        code, _, err = run(capsys, "verify", "--proof", "1", "--J", ",")
        assert code == 2
        assert "error" in err

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "verify", "--proof", "1", "--J", "10",
                           "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["passed"] is True
        assert len(doc["rows"]) == 1
        assert doc["rows"][0]["proof_id"] == "Proof1"


class TestEigen:
    def test_wiener_table(self, capsys):
        code, out, _ = run(capsys, "eigen", "--kind", "wiener", "--j-max", "3",
                           "--format", "csv")
        assert code == 0
        rows = csv_rows(out)
        expected = [math.pi**2 / 4.0, 9.0 * math.pi**2 / 4.0, 25.0 * math.pi**2 / 4.0]
        for row, lam in zip(rows, expected):
            assert float(row["lambda"]) == pytest.approx(lam, rel=1e-15)

    def test_detrended_branch_labels(self, capsys):
        code, out, _ = run(capsys, "eigen", "--kind", "detrended", "--j-max", "4",
                           "--format", "csv")
        assert code == 0
        rows = csv_rows(out)
        assert [r["branch"] for r in rows] == ["odd", "even", "odd", "even"]
        assert float(rows[1]["lambda"]) == pytest.approx(80.76291422570652, rel=1e-12)

    def test_bridge_first_eigenvalue(self, capsys):
        code, out, _ = run(capsys, "eigen", "--kind", "bridge", "--j-max", "1",
                           "--format", "csv")
        assert code == 0
        assert float(csv_rows(out)[0]["lambda"]) == pytest.approx(math.pi**2, rel=1e-15)

    def test_unknown_kind_exits_2(self, capsys):
        code, _, err = run(capsys, "eigen", "--kind", "poisson", "--j-max", "2")
        assert code == 2
        assert "unknown kernel kind" in err


class TestOracle:
    def test_pass_at_moderate_nodes(self, capsys):
        code, out, _ = run(capsys, "oracle", "--kind", "demeaned", "--nodes", "200",
                           "--eigs", "3", "--format", "csv")
        assert code == 0
        rows = csv_rows(out)
        assert len(rows) == 3
        for r in rows:
            assert float(r["rel_error"]) <= 1e-3

    def test_too_many_eigs_exits_2(self, capsys):
        code, _, err = run(capsys, "oracle", "--kind", "detrended", "--nodes", "16",
                           "--eigs", "20")
        assert code == 2
        assert "cannot exceed" in err


class TestSimulate:
    def test_deterministic_output_files(self, capsys, tmp_path):
        out_a = tmp_path / "a.klx"
        out_b = tmp_path / "b.klx"
        args = ["simulate", "--kind", "wiener", "--J", "50", "--M", "400",
                "--grid-points", "5", "--seed", "7", "--pairs", "10"]
        code_a, _, _ = run(capsys, *args, "--out", str(out_a))
        code_b, _, _ = run(capsys, *args, "--out", str(out_b))
        assert code_a == 0 and code_b == 0
        assert out_a.read_bytes() == out_b.read_bytes()

    def test_csv_output_by_extension(self, capsys, tmp_path):
        out = tmp_path / "paths.csv"
        code, _, _ = run(capsys, "simulate", "--kind", "bridge", "--J", "20",
                         "--M", "64", "--grid-points", "5", "--seed", "1",
                         "--pairs", "5", "--out", str(out))
        assert code == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 65
        assert [float(x) for x in lines[0].split(",")] == [0.0, 0.25, 0.5, 0.75, 1.0]

    def test_two_point_bridge_grid_skips_with_warning(self, capsys):
        code, _, err = run(capsys, "simulate", "--kind", "bridge", "--J", "10",
                           "--M", "16", "--grid-points", "2", "--seed", "0")
        assert code == 0
        assert "skipped" in err

    def test_json_summary(self, capsys):
        code, out, _ = run(capsys, "simulate", "--kind", "demeaned", "--J", "20",
                           "--M", "200", "--grid-points", "5", "--seed", "3",
                           "--pairs", "8", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["passed"] is True
        assert len(doc["rows"]) == 8

    def test_bad_grid_points_exits_2(self, capsys):
        code, _, _ = run(capsys, "simulate", "--kind", "wiener", "--J", "10",
                         "--M", "16", "--grid-points", "1")
        assert code == 2

    def test_unwritable_out_path_exits_2(self, capsys, tmp_path):
        code, _, err = run(capsys, "simulate", "--kind", "wiener", "--J", "10",
                           "--M", "16", "--grid-points", "3",
                           "--out", str(tmp_path / "missing" / "x.klx"))
        assert code == 2
        assert "cannot write" in err


class TestSeries:
    def test_triangular_closed_form_row(self, capsys):
        code, out, _ = run(capsys, "series", "--which", "triangular", "--N", "3",
                           "--format", "csv")
        assert code == 0
        assert float(csv_rows(out)[0]["value"]) == pytest.approx(1.5, abs=1e-15)

    def test_estermann_residuals_decrease(self, capsys):
        code, out, _ = run(capsys, "series", "--which", "estermann",
                           "--N", "10,100,1000", "--format", "csv")
        assert code == 0
        values = [abs(float(r["value"])) for r in csv_rows(out)]
        assert values[0] > values[1] > values[2]

    def test_zeta_rejects_zero(self, capsys):
        code, _, err = run(capsys, "series", "--which", "zeta", "--N", "0")
        assert code == 2
        assert "error" in err

    def test_unknown_series_exits_2(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["series", "--which", "fibonacci", "--N", "3"])
        assert excinfo.value.code == 2

    def test_reference_limits(self, capsys):
        code, out, _ = run(capsys, "series", "--which", "bernoulli", "--N", "1000",
                           "--format", "csv")
        assert code == 0
        row = csv_rows(out)[0]
        assert float(row["reference_limit"]) == pytest.approx(math.pi**2 / 16.0, rel=1e-15)
        assert abs(float(row["distance"])) < 0.01
