import subprocess
import sys

import pytest

from kstates import closed_forms
from kstates import verify
from kstates.cli import main
from kstates.polynomial import IntPolynomial


@pytest.fixture(autouse=True)
def fewer_law_pairs(monkeypatch):
    # the full 200-pair suite runs in test_acceptance
    monkeypatch.setattr(verify, "LAW_PAIRS", 10)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["poly", "2", "2", "--method", "closed", "--format", "coeffs"], "0 5 8 3\n"),
        (["poly", "0", "0"], "0 1\n"),
        (["poly", "3", "inf", "--method", "closed"], "0 3 4 1\n"),
        (["poly", "inf", "3"], "0 3 4 1\n"),
        (["poly", "2", "2", "--format", "human"], "5x + 8x^2 + 3x^3\n"),
        (["poly", "4", "3", "--method", "recurrence"], IntPolynomial(closed_forms.b_nr_closed(4, 3)).coeff_string() + "\n"),
        (["poly", "3", "inf", "--method", "recurrence"], "0 3 4 1\n"),
        (["poly", "inf", "3", "--method", "recurrence"], "0 3 4 1\n"),
        (["poly", "4", "3", "--method", "classes"], closed_forms.b_nr_closed(4, 3).coeff_string() + "\n"),
        (["poly", "4", "3", "--method", "enumerate"], closed_forms.b_nr_closed(4, 3).coeff_string() + "\n"),
        (["coeff", "7", "7", "1"], "50\n"),
        (["coeff", "2", "2", "9"], "0\n"),
        (["coeff", "6", "6", "5"], "952\n"),
        (["coeff", "2", "inf", "1"], "2\n"),
        (["enumerate", "2", "2"], "0 5 8 3\n"),
        (["enumerate", "1", "1", "--histogram"], "1 2\n2 2\n"),
        (["enumerate", "0", "0"], "0 1\n"),
        (["seq", "bnr1", "--terms", "4", "--order", "by-antidiagonals"], "0 1\n1 1\n2 1\n3 1\n"),
        (["seq", "leading", "--terms", "1", "--order", "by-rows"], "0 1\n"),
        (["seq", "degree", "--terms", "2", "--order", "by-rows"], "0 1\n1 2\n"),
        (["seq", "degree", "--terms", "2", "--offset", "1"], "1 1\n2 2\n"),
        (["table", "bn0k", "--rows", "1"], "0,1\n"),
    ],
)
def test_outputs(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == expected


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "bnr1", "--rows", "8", "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 8
    assert lines[0] == "1,1,1,1,1,1,1,1"
    _, out, _ = run(capsys, "table", "degree", "--rows", "8")
    assert out.splitlines()[-1] == "8,8,8,9,10,11,12,13"


def test_table_tsv_and_markdown(capsys):
    _, out, _ = run(capsys, "table", "bn2k", "--rows", "2", "--format", "tsv")
    assert out == "0\t1\t2\t1\n0\t3\t4\t1\n"
    _, out, _ = run(capsys, "table", "bn0k", "--rows", "2", "--format", "markdown")
    assert out == (
        "| n \\\\ k | 0 | 1 | 2 |\n"
        "|---|---:|---:|---:|\n"
        "| 0 | 0 | 1 | |\n"
        "| 1 | 0 | 1 | 1 |\n"
    )
    _, out, _ = run(capsys, "table", "bnr2", "--rows", "1", "--cols", "3", "--format", "markdown")
    assert out.splitlines()[0] == "| n \\\\ r | 0 | 1 | 2 |"


def test_no_trailing_whitespace(capsys):
    for argv in (["table", "bnnk", "--format", "markdown"], ["table", "bnnk", "--format", "tsv"],
                 ["verify", "--max-n", "1", "--max-r", "1"], ["enumerate", "3", "2", "--histogram"]):
        _, out, _ = run(capsys, *argv)
        assert out.endswith("\n")
        assert all(line == line.rstrip() for line in out.split("\n"))


def test_coeffs_round_trip(capsys):
    _, out, _ = run(capsys, "poly", "5", "3")
    text = out.strip()
    assert IntPolynomial.parse(text).coeff_string() == text


@pytest.mark.parametrize(
    "argv",
    [
        ["poly", "inf", "inf"],
        ["poly", "-1", "2"],
        ["poly", "x", "2"],
        ["poly", "2", "inf", "--method", "enumerate"],
        ["poly", "2", "inf", "--method", "classes"],
        ["coeff", "inf", "inf", "1"],
        ["enumerate", "inf", "2"],
        ["table", "bogus"],
        ["seq", "bogus"],
        ["seq", "bnr1", "--order", "spiral"],
        ["table", "bnr1", "--rows", "0"],
        [],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err


def test_inf_inf_message(capsys):
    _, _, err = run(capsys, "poly", "inf", "inf")
    assert "not defined" in err


def test_cap_exit_3(capsys, monkeypatch):
    monkeypatch.setenv("KSTATES_MAX_CROSSINGS", "5")
    code, out, err = run(capsys, "enumerate", "3", "3")
    assert code == 3 and "too many crossings" in err
    code, _, _ = run(capsys, "poly", "3", "3", "--method", "enumerate")
    assert code == 3
    code, _, _ = run(capsys, "verify", "--max-n", "3", "--max-r", "3")
    assert code == 3
    code, out, _ = run(capsys, "enumerate", "3", "2")
    assert code == 0


def test_verify_degenerate_grid(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "0", "--max-r", "0")
    assert code == 0
    assert out.splitlines()[-1] == "all suites passed"


def test_verify_strict_tables_fails_on_misprint(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "0", "--max-r", "0", "--strict-tables")
    assert code == 1
    assert "FAIL tables-golden: n=2 r=7 expected=1 got=2" in out


def test_verify_is_deterministic(capsys):
    first = run(capsys, "verify", "--max-n", "2", "--max-r", "1", "--seed", "5")
    second = run(capsys, "verify", "--max-n", "2", "--max-r", "1", "--seed", "5")
    assert first == second


def test_fault_injection_reports_counterexample(capsys, monkeypatch):
    real = closed_forms.b_nr_closed

    def corrupted(n, r):
        p = real(n, r)
        if (n, r) == (1, 2):
            c = list(p.coeffs)
            c[2] += 1
            return IntPolynomial(c)
        return p

    monkeypatch.setattr(closed_forms, "b_nr_closed", corrupted)
    code, out, _ = run(capsys, "verify", "--max-n", "2", "--max-r", "2")
    assert code == 1
    assert "FAIL grand-equivalence: n=1 r=2 k=2 expected=4 got=5" in out
    assert out.splitlines()[-1] == "verification FAILED"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "kstates", "poly", "2", "2"],
        capture_output=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == b"0 5 8 3\n"
