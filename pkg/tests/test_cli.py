"""Command-line surface: output shapes, exit codes, determinism."""

import csv
import io
import json


from thetares.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCompute:
    def test_delta_family_entry_4(self, capsys):
        code, out, _ = run_cli(
            capsys, "compute", "--family", "mult:2,8,8", "--m-max", "4",
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["family"] == "mult:2,8,8"
        assert payload["entries"][4]["den"] == [[2, 9], [4, 5], [6, 1]]

    def test_theta2_initial_entry(self, capsys):
        code, out, _ = run_cli(
            capsys, "compute", "--family", "mult:0,0,2", "--m-max", "0",
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["entries"][0] == {"m": 0, "num": ["1"], "den": []}

    def test_malformed_family(self, capsys):
        code, _, err = run_cli(capsys, "compute", "--family", "mult:zzz", "--m-max", "1")
        assert code == 2
        assert "error" in err

    def test_missing_family(self, capsys):
        code, _, err = run_cli(capsys, "compute", "--m-max", "1")
        assert code == 2

    def test_csv_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "compute", "--family", "mult:0,0,2", "--m-max", "1",
            "--format", "csv",
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["m", "num", "den"]
        assert json.loads(rows[2][1]) == ["0", "0", "-1/4"]


class TestResidues:
    def test_theta2_recovers_r2(self, capsys):
        code, out, _ = run_cli(
            capsys, "residues", "--family", "mult:0,0,2", "--m-max", "5",
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["all_match"] is True
        assert [row["recovered"] for row in payload["rows"]] == ["4", "4", "0", "4", "8"]

    def test_csv_columns(self, capsys):
        code, out, _ = run_cli(
            capsys, "residues", "--family", "mult:0,0,2", "--m-max", "3",
            "--format", "csv",
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["m", "pole", "order", "residue", "recovered", "oracle", "match"]
        assert rows[1] == ["1", "1", "1", "1/4", "4", "4", "true"]

    def test_normalize_delta(self, capsys):
        code, out, _ = run_cli(
            capsys, "residues", "--family", "mult:2,8,8", "--m-max", "4",
            "--normalize-delta", "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["rows"][3]["oracle"] == "252"
        assert payload["rows"][3]["recovered"] == "252"

    def test_normalize_delta_rejected_elsewhere(self, capsys):
        code, _, err = run_cli(
            capsys, "residues", "--family", "mult:0,0,2", "--m-max", "2",
            "--normalize-delta",
        )
        assert code == 2

    def test_truncation_must_cover_poles(self, capsys):
        code, _, err = run_cli(
            capsys, "residues", "--family", "mult:2,8,8", "--m-max", "4",
            "--trunc", "5",
        )
        assert code == 2
        assert "trunc" in err

    def test_theta_family_square_rows(self, capsys):
        # mult:0,0,1 is the single theta constant (c = 1/4): nonzero rows
        # exactly at the squares
        code, out, _ = run_cli(
            capsys, "residues", "--family", "mult:0,0,1", "--m-max", "10",
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        nonzero = [row["m"] for row in payload["rows"] if row["recovered"] != "0"]
        assert nonzero == [1, 4, 9]


class TestScan:
    def test_two_squares(self, capsys):
        code, out, _ = run_cli(
            capsys, "scan", "--kind", "two-squares", "--m-max", "12",
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["found"] == [1, 2, 4, 5, 8, 9, 10]
        assert payload["passed"] is True

    def test_squares(self, capsys):
        code, out, _ = run_cli(
            capsys, "scan", "--kind", "squares", "--m-max", "16", "--format", "json",
        )
        payload = json.loads(out)
        assert code == 0 and payload["found"] == [1, 4, 9, 16]

    def test_lehmer(self, capsys):
        code, out, _ = run_cli(
            capsys, "scan", "--kind", "lehmer", "--m-max", "2", "--format", "json",
        )
        payload = json.loads(out)
        assert code == 0 and payload["violations"] == []

    def test_perfect_odd(self, capsys):
        code, out, _ = run_cli(
            capsys, "scan", "--kind", "perfect-odd", "--m-max", "15",
            "--format", "json",
        )
        payload = json.loads(out)
        assert code == 0 and payload["perfect"] == []

    def test_unknown_kind_is_usage_error(self, capsys):
        code, _, _ = run_cli(capsys, "scan", "--kind", "nonsense", "--m-max", "3")
        assert code == 2


class TestVerify:
    def test_golden(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "golden", "--format", "json")
        payload = json.loads(out)
        assert code == 0 and payload["passed"] is True

    def test_identities(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "identities")
        assert code == 0
        assert "PASS" in out and "FAIL" not in out

    def test_resum(self, capsys):
        code, _, _ = run_cli(capsys, "verify", "--suite", "resum")
        assert code == 0

    def test_residues_small(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--suite", "residues", "--m-max", "6",
            "--format", "json",
        )
        payload = json.loads(out)
        assert code == 0 and payload["passed"] is True


class TestQSeriesDump:
    def test_x_series(self, capsys):
        code, out, _ = run_cli(
            capsys, "qseries-dump", "--series", "x", "--trunc", "4",
        )
        assert code == 0
        assert json.loads(out) == {"trunc": 4, "coeffs": ["-1", "8", "-24", "32", "-24"]}

    def test_family_series(self, capsys):
        code, out, _ = run_cli(
            capsys, "qseries-dump", "--family", "mult:0,0,2", "--trunc", "5",
        )
        assert code == 0
        assert json.loads(out)["coeffs"] == ["1", "4", "4", "0", "4", "8"]

    def test_unknown_series(self, capsys):
        code, _, _ = run_cli(capsys, "qseries-dump", "--series", "zeta", "--trunc", "4")
        assert code == 2

    def test_deterministic_output(self, capsys):
        _, first, _ = run_cli(capsys, "qseries-dump", "--series", "delta", "--trunc", "16")
        _, second, _ = run_cli(capsys, "qseries-dump", "--series", "delta", "--trunc", "16")
        assert first == second


def test_compute_deterministic(capsys):
    args = ("compute", "--family", "mult:2,8,8", "--m-max", "3", "--format", "json")
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second
