import csv
import json

import pytest

from dupcodes.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_sphere_pal_dup_example(capsys):
    code, out, _ = run_cli(
        capsys, "sphere", "--word", "11110220", "--q", "3", "--kind", "pal-dup", "--l", "2", "--t", "1"
    )
    assert code == 0
    assert "enumerated size: 5" in out
    assert "formula size:    5" in out
    assert out.count("\n  ") == 5  # five members listed


def test_sphere_empty_deletion(capsys):
    code, out, _ = run_cli(
        capsys, "sphere", "--word", "01", "--q", "2", "--kind", "tandem-del", "--l", "1", "--t", "1"
    )
    assert code == 0
    assert "enumerated size: 0" in out
    assert "(empty sphere)" in out


def test_sphere_pal_del_length3_example(capsys):
    code, out, _ = run_cli(
        capsys, "sphere", "--word", "21011012210", "--q", "3", "--kind", "pal-del", "--l", "3"
    )
    assert code == 0
    assert "enumerated size: 2" in out
    assert "upper bound:     2" in out
    assert "21012210" in out and "21011012" in out


def test_sphere_machine_output_roundtrip(tmp_path, capsys):
    out_path = tmp_path / "sphere.json"
    code, _, _ = run_cli(
        capsys, "sphere", "--word", "11110220", "--q", "3", "--kind", "pal-dup", "--l", "2",
        "--out", str(out_path),
    )
    assert code == 0
    rows = json.load(open(out_path))
    assert rows[0]["size"] == 5 and rows[0]["formula"] == 5
    assert len(rows[0]["members"]) == 5


def test_sphere_parse_failure(capsys):
    code, _, err = run_cli(capsys, "sphere", "--word", "0121", "--q", "2", "--kind", "pal-dup", "--l", "2")
    assert code == 2
    assert "error" in err


def test_sphere_dna_alias(capsys):
    code, out, _ = run_cli(capsys, "sphere", "--word", "GATC", "--q", "4", "--kind", "tandem-dup", "--l", "1")
    assert code == 0
    assert "word 2031 (q=4)" in out


def test_bound_rows_and_csv(tmp_path, capsys):
    out_path = tmp_path / "bounds.csv"
    code, out, _ = run_cli(
        capsys, "bound", "--n", "2..10", "--l", "2", "--q", "2", "--out", str(out_path)
    )
    assert code == 0
    with open(out_path) as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 9
    assert rows[0]["n"] == "2"
    assert "." in rows[-1]["redundancy_lb_bits"]  # plain decimal point formatting


def test_bound_single_rational(capsys):
    code, out, _ = run_cli(capsys, "bound", "--n", "2", "--l", "1", "--q", "2")
    assert code == 0
    assert "4/1" in out  # transversal weight on the degenerate instance


def test_bound_guard_refusal(capsys):
    code, _, err = run_cli(capsys, "bound", "--n", "30", "--l", "1", "--q", "4")
    assert code == 2
    assert "refused" in err and "guard" in err


def test_bound_json_roundtrip(tmp_path, capsys):
    out_path = tmp_path / "bounds.json"
    code, _, _ = run_cli(
        capsys, "bound", "--n", "4,6", "--l", "2", "--q", "2", "--out", str(out_path), "--format", "json"
    )
    assert code == 0
    rows = json.load(open(out_path))
    assert [r["n"] for r in rows] == [4, 6]
    for row in rows:
        assert {"bound_numerator", "bound_denominator", "redundancy_lb_bits", "histogram"} <= set(row)


def test_verify_c1(capsys):
    code, out, _ = run_cli(capsys, "verify", "--code", "c1", "--n", "6", "--l", "2", "--q", "2")
    assert code == 0
    assert "PASS" in out


def test_verify_c2(capsys):
    code, out, _ = run_cli(capsys, "verify", "--code", "c2", "--n", "6", "--q", "2")
    assert code == 0
    assert "PASS" in out
    assert "best cardinality" in out


def test_verify_cpf(capsys):
    code, out, _ = run_cli(capsys, "verify", "--code", "cpf", "--n", "6", "--q", "2")
    assert code == 0
    assert "PASS" in out
    assert "count 26" in out


def test_rates_table(capsys):
    code, out, _ = run_cli(capsys, "rates", "--q", "2,3", "--n", "2,4,8,inf")
    assert code == 0
    assert "0.896" in out  # (2, 4)
    assert "0.973" in out  # (3, 4)
    assert "0.551" in out  # asymptotic rate for q = 2 (3-decimal print)


def test_rates_machine_output(tmp_path, capsys):
    out_path = tmp_path / "rates.json"
    code, _, _ = run_cli(capsys, "rates", "--q", "2", "--n", "4,inf", "--out", str(out_path))
    assert code == 0
    rows = json.load(open(out_path))
    assert rows[0] == {"q": 2, "n": 4, "rate": pytest.approx(0.896241, abs=1e-5)}
    assert rows[1]["n"] == "inf"


@pytest.mark.parametrize(
    "args,expected",
    [
        (("--code", "c1", "--n", "8", "--l", "1", "--q", "2", "--trials", "60"), "60/60"),
        (("--code", "c2", "--n", "9", "--q", "2", "--trials", "60"), "60/60"),
        (("--code", "cpf", "--n", "8", "--q", "3", "--trials", "60"), "60/60"),
    ],
)
def test_simulate(capsys, args, expected):
    code, out, _ = run_cli(capsys, "simulate", *args, "--seed", "7")
    assert code == 0
    assert expected in out


def test_simulate_deterministic_output(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    for path in (a, b):
        code, _, _ = run_cli(
            capsys, "simulate", "--code", "c2", "--n", "8", "--q", "2", "--trials", "40", "--seed", "3",
            "--out", str(path),
        )
        assert code == 0
    assert a.read_bytes() == b.read_bytes()
