"""Command-line interface: exit codes, report text, and determinism."""
import json

import pytest

from quasicode.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out + captured.err


def z5_spec_file(tmp_path):
    add = [[(i + j) % 5 for j in range(5)] for i in range(5)]
    mul = [[0] * 5 for _ in range(5)]
    for i in range(1, 5):
        for j in range(1, 5):
            mul[i][j] = ((i - 1) + (j - 1)) % 4 + 1
    path = tmp_path / "z5.json"
    path.write_text(json.dumps({"kind": "cayley-table", "add": add, "mul": mul, "label": "z5-shift"}))
    return str(path)


# -- happy paths -------------------------------------------------------------------------


def test_columns_frozen_order(capsys):
    code, out = run(capsys, "columns", "--algebra", "f3", "--m", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[-4:] == ["(1,0)", "(1,1)", "(1,2)", "(0,1)"]


def test_columns_respects_pivots(capsys):
    code, out = run(capsys, "columns", "--algebra", "f3", "--m", "2", "--pivots", "2,1")
    assert code == 0
    assert out.splitlines()[-4:] == ["(2,0)", "(2,1)", "(2,2)", "(0,1)"]


def test_audit_field(capsys):
    code, out = run(capsys, "audit", "--algebra", "f5")
    assert code == 0
    assert "law associative: holds" in out


def test_audit_isotope_flags(capsys):
    code, out = run(capsys, "audit", "--algebra", "gf9-isotope")
    assert code == 0
    assert "law left_unit: fails witness=(1,t)" in out
    assert "law right_unit: holds" in out


def test_syndrome_of_codeword(capsys, tmp_path):
    f = tmp_path / "w.txt"
    f.write_text("(1,0,0) := 1\n(0,1,0) := 1\n(1,1,0) := 1\n")
    code, out = run(capsys, "syndrome", "--algebra", "f2", "--m", "3", "--in", str(f))
    assert code == 0
    assert "syndrome: (0,0,0)" in out
    assert "in code: true" in out


def test_decode_then_syndrome_round_trip(capsys, tmp_path):
    noisy = tmp_path / "noisy.txt"
    noisy.write_text("(1,0,0) := 1\n(0,1,0) := 1\n")
    decoded = tmp_path / "decoded.txt"
    code, _ = run(
        capsys, "decode", "--algebra", "f2", "--m", "3", "--in", str(noisy), "--out", str(decoded)
    )
    assert code == 0
    text = decoded.read_text()
    assert "# changed: true" in text
    code2, out2 = run(capsys, "syndrome", "--algebra", "f2", "--m", "3", "--in", str(decoded))
    assert code2 == 0
    assert "in code: true" in out2


def test_decode_zero_vector(capsys, tmp_path):
    f = tmp_path / "zero.txt"
    f.write_text("")
    code, out = run(capsys, "decode", "--algebra", "f3", "--m", "2", "--in", str(f))
    assert code == 0
    assert "# zero vector" in out
    assert "# changed: false" in out


def test_verify_perfect_field(capsys):
    code, out = run(capsys, "verify-perfect", "--algebra", "f3", "--m", "2")
    assert code == 0
    assert "verdict: perfect" in out
    assert "code size: 9" in out


def test_verify_perfect_sampled(capsys):
    code, out = run(
        capsys, "verify-perfect", "--algebra", "quaternions", "--m", "2",
        "--trials", "100", "--seed", "3",
    )
    assert code == 0
    assert "verdict: perfect" in out


def test_generators_lists_weight3_codewords(capsys):
    code, out = run(capsys, "generators", "--algebra", "f2", "--m", "3")
    assert code == 0
    payload = [ln for ln in out.splitlines() if ln.startswith("FinVec")]
    assert len(payload) == 7


def test_reconstruct_check_field(capsys):
    code, out = run(capsys, "reconstruct-check", "--algebra", "f3", "--m", "2")
    assert code == 0
    assert "verdict: module axioms hold" in out


def test_reconstruct_check_octonions_violation(capsys):
    code, out = run(
        capsys, "reconstruct-check", "--algebra", "octonions", "--m", "2",
        "--trials", "150", "--seed", "0",
    )
    assert code == 1
    assert "scalar_distributes_over_pairs: VIOLATED" in out


def test_membership_reduce(capsys, tmp_path):
    f = tmp_path / "w.txt"
    f.write_text("(1,0) := 1\n(0,1) := 1\n(1,1) := 2\n")
    code, out = run(capsys, "membership-reduce", "--algebra", "f3", "--m", "2", "--in", str(f))
    assert code == 0
    assert "membership by reduction: true" in out
    assert "agreement: true" in out


def test_choice_iso_frozen(capsys):
    code, out = run(capsys, "choice-iso", "--algebra", "f3", "--m", "2", "--e2", "(0,1)=2")
    assert code == 0
    assert "pi: identity" in out
    assert "alpha (0,1): 2" in out
    assert "verdict: generators map into the target code" in out


def test_basis_iso_ops(capsys):
    code, out = run(capsys, "basis-iso", "--algebra", "f3", "--m", "2", "--ops", "shear:0,1,1")
    assert code == 0
    assert "matrix: [1, 1; 0, 1]" in out
    assert "pi (1,0) -> (1,1)" in out


def test_support_witness_found(capsys, tmp_path):
    f = tmp_path / "cols.txt"
    f.write_text("(1,0)\n(1,1)\n(1,2)\n")
    code, out = run(capsys, "support-witness", "--algebra", "f3", "--m", "2", "--columns-file", str(f))
    assert code == 0
    assert "witness: FinVec[(1,0):1, (1,1):1, (1,2):1]" in out


def test_support_witness_independent(capsys, tmp_path):
    f = tmp_path / "cols.txt"
    f.write_text("(1,0)\n(0,1)\n")
    code, out = run(capsys, "support-witness", "--algebra", "f3", "--m", "2", "--columns-file", str(f))
    assert code == 0
    assert "witness: none (columns are independent)" in out


def test_distinguish(capsys):
    code, out = run(capsys, "distinguish", "--algebra", "f2", "--m", "2", "--m2", "3")
    assert code == 0
    assert "verdict: codes distinguished" in out


def test_nonassoc_witness_isotope(capsys):
    code, out = run(capsys, "nonassoc-witness", "--algebra", "gf9-isotope", "--m", "2")
    assert code == 0
    assert "triple: a=1 b=1 c=t" in out
    assert "verdict: left scaling escapes the code" in out


def test_nonassoc_witness_field(capsys):
    code, out = run(capsys, "nonassoc-witness", "--algebra", "f5", "--m", "2")
    assert code == 0
    assert "associative: no witness" in out


def test_right_linearity_quaternions(capsys):
    code, out = run(capsys, "right-linearity", "--algebra", "quaternions", "--m", "2")
    assert code == 0
    assert "verdict: right scaling escapes the code" in out


def test_conjugate_check(capsys):
    code, out = run(capsys, "conjugate-check", "--algebra", "quaternions", "--m", "2", "--samples", "50")
    assert code == 0
    assert "conjugate images in the right code: 50/50" in out


def test_jobs_flag_accepted(capsys):
    code, out = run(capsys, "verify-perfect", "--algebra", "f3", "--m", "2", "--jobs", "4")
    assert code == 0
    assert "verdict: perfect" in out


# -- violation exit ----------------------------------------------------------------------


def test_nondistributive_table_fails_verification(capsys, tmp_path):
    spec = z5_spec_file(tmp_path)
    code, out = run(
        capsys, "verify-perfect", "--algebra", spec, "--m", "2",
        "--mode", "exhaustive", "--pivots", "1,1",
    )
    assert code == 1
    assert "min distance >= 3: VIOLATED" in out
    assert "verdict: NOT VERIFIED" in out


# -- usage errors ------------------------------------------------------------------------


def test_unknown_algebra(capsys):
    code, out = run(capsys, "columns", "--algebra", "nope", "--m", "2")
    assert code == 2
    assert "unknown algebra" in out


def test_missing_m(capsys):
    code, out = run(capsys, "columns", "--algebra", "f3")
    assert code == 2
    assert "--m" in out


def test_missing_input_file(capsys):
    code, out = run(capsys, "decode", "--algebra", "f2", "--m", "3", "--in", "/no/such/file")
    assert code == 2


def test_unknown_subcommand(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2


def test_exhaustive_audit_of_infinite_algebra(capsys):
    code, out = run(capsys, "audit", "--algebra", "rationals", "--mode", "exhaustive")
    assert code == 2
    assert "error:" in out


def test_bad_pivot_literal(capsys):
    code, out = run(capsys, "columns", "--algebra", "f3", "--m", "2", "--pivots", "1,zz")
    assert code == 2


# -- determinism -------------------------------------------------------------------------


def test_sampled_reports_are_byte_identical(tmp_path, capsys):
    out1, out2 = tmp_path / "a.txt", tmp_path / "b.txt"
    argv = ["verify-perfect", "--algebra", "quaternions", "--m", "2",
            "--trials", "200", "--seed", "7"]
    assert main(argv + ["--out", str(out1)]) == 0
    assert main(argv + ["--out", str(out2)]) == 0
    capsys.readouterr()
    assert out1.read_bytes() == out2.read_bytes()


def test_distinguish_rerun_identical(tmp_path, capsys):
    out1, out2 = tmp_path / "a.txt", tmp_path / "b.txt"
    argv = ["distinguish", "--algebra", "quaternions", "--m", "2", "--m2", "3",
            "--samples", "25", "--seed", "9"]
    assert main(argv + ["--out", str(out1)]) == 0
    assert main(argv + ["--out", str(out2)]) == 0
    capsys.readouterr()
    assert out1.read_bytes() == out2.read_bytes()


def test_report_embeds_run_parameters(capsys):
    code, out = run(capsys, "verify-perfect", "--algebra", "f3", "--m", "2", "--seed", "4")
    assert code == 0
    assert "command: verify-perfect" in out
    assert "seed: 4" in out
    assert "algebra: f3 (digest " in out
