import json
import subprocess
import sys

import pytest

from heckepoly.cli import main


def run_cli(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_bernoulli(capsys):
    status, out, _ = run_cli(capsys, "bernoulli", "--n", "12")
    assert status == 0
    assert out.strip() == "-691/2730"


def test_period_poly_json(capsys):
    status, out, _ = run_cli(capsys, "period-poly", "--level", "2", "--w", "6", "--n", "2", "--sign", "minus")
    assert status == 0
    payload = json.loads(out)
    assert payload["bound"] == 6
    assert payload["coeffs"] == ["0", "-1/15", "0", "1/3", "0", "-4/15", "0"]


def test_period_poly_parity_error(capsys):
    status, out, err = run_cli(capsys, "period-poly", "--level", "2", "--w", "6", "--n", "2", "--sign", "plus")
    assert status == 1
    assert out == ""
    assert json.loads(err)["error"]["code"] == "UnsupportedParity"


def test_hecke_matrix_golden(capsys):
    status, out, _ = run_cli(capsys, "hecke-matrix", "--level", "2", "--w", "10", "--m", "2")
    assert status == 0
    payload = json.loads(out)
    assert payload["T"] == [["-208", "36"], ["-1120", "184"]]
    assert payload["charpoly"] == ["2048", "24", "1"]
    assert payload["S1"][0][0] == "169538/2025"


def test_hecke_matrix_dimension_zero(capsys):
    status, out, err = run_cli(capsys, "hecke-matrix", "--level", "2", "--w", "4", "--m", "2")
    assert status == 1
    assert json.loads(err)["error"]["code"] == "EmptySpace"


def test_hecke_matrix_basis_deficient(capsys):
    status, _, err = run_cli(capsys, "hecke-matrix", "--level", "5", "--w", "6", "--m", "2")
    assert status == 1
    assert json.loads(err)["error"]["code"] == "BasisDeficient"


def test_charpoly_subcommand(capsys):
    status, out, _ = run_cli(capsys, "charpoly", "--level", "4", "--w", "8", "--m", "3")
    assert status == 0
    assert json.loads(out)["charpoly"] == ["-5548608", "-46800", "84", "1"]


def test_hecke_sum_raw_vs_corrected(capsys):
    args = ["hecke-sum", "--level", "2", "--w", "10", "--n", "2", "--m", "2"]
    status, corrected_out, _ = run_cli(capsys, *args)
    assert status == 0
    status, raw_out, _ = run_cli(capsys, *args, "--raw")
    assert status == 0
    corrected = json.loads(corrected_out)
    raw = json.loads(raw_out)
    assert corrected["corrected"] is True and raw["corrected"] is False
    assert corrected["coeffs"] != raw["coeffs"]


def test_hecke_sum_list_matrices(capsys):
    status, out, _ = run_cli(capsys, "hecke-sum", "--level", "4", "--w", "6", "--n", "2", "--m", "8", "--list-matrices")
    assert status == 0
    assert json.loads(out) == [[-1, -1, 4, -4], [-1, 1, -4, -4], [1, -1, 4, 4], [1, 1, -4, 4]]


def test_hankel(capsys):
    status, out, _ = run_cli(capsys, "hankel", "--which", "1", "--n", "1")
    assert status == 0
    payload = json.loads(out)
    assert payload["det"] == payload["closed_form"] == "1/12"
    assert payload["equal"] is True


def test_qexp_eta(capsys):
    status, out, _ = run_cli(capsys, "qexp", "--form", "eta:1^8,2^8", "--prec", "5")
    assert status == 0
    payload = json.loads(out)
    assert payload["weight"] == 8
    assert payload["coeffs"] == ["0", "1", "-8", "12", "64", "-210"]


def test_qexp_eisenstein(capsys):
    status, out, _ = run_cli(capsys, "qexp", "--form", "Einf:4", "--prec", "4")
    assert status == 0
    payload = json.loads(out)
    assert payload["coeffs"][0] == "1"
    status, out, _ = run_cli(capsys, "qexp", "--form", "E0:4", "--prec", "4")
    assert json.loads(out)["coeffs"][0] == "0"
    status, _, err = run_cli(capsys, "qexp", "--form", "nonsense:4")
    assert status == 1
    assert json.loads(err)["error"]["code"] == "PreconditionViolated"


def test_oracle_matrix(capsys):
    status, out, _ = run_cli(capsys, "oracle-matrix", "--weight", "12", "--m", "2")
    assert status == 0
    payload = json.loads(out)
    assert payload["charpoly"] == ["2048", "24", "1"]


def test_verify_suite(capsys):
    status, out, _ = run_cli(capsys, "verify", "--suite", "hankel")
    assert status == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "suite hankel: 24/24 checks passed"
    assert all(line.startswith("ok") for line in lines[:-1])


def test_verify_paper_examples(capsys):
    status, out, _ = run_cli(capsys, "verify", "--suite", "paper-examples")
    assert status == 0
    assert out.strip().splitlines()[-1] == "suite paper-examples: 12/12 checks passed"


def test_verify_unknown_suite(capsys):
    status, _, err = run_cli(capsys, "verify", "--suite", "bogus")
    assert status == 1
    assert json.loads(err)["error"]["code"] == "PreconditionViolated"


def test_unknown_flag_rejected(capsys):
    with pytest.raises(SystemExit) as info:
        main(["bernoulli", "--n", "3", "--wat"])
    assert info.value.code == 1


def test_json_output_determinism():
    cmd = [sys.executable, "-m", "heckepoly", "hecke-matrix", "--level", "2", "--w", "14", "--m", "3"]
    first = subprocess.run(cmd, capture_output=True, check=True)
    second = subprocess.run(cmd, capture_output=True, check=True)
    assert first.stdout == second.stdout
    assert first.stdout.strip()


def test_console_entrypoint_runs():
    result = subprocess.run(
        [sys.executable, "-m", "heckepoly", "bernoulli", "--n", "0"], capture_output=True, text=True
    )
    assert result.returncode == 0
    assert result.stdout.strip() == "1"
