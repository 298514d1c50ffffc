import json
import subprocess
import sys

import pytest

from jacinv.cli import VERIFIERS, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_legendre(capsys):
    assert run(capsys, "eval", "--family", "jacobi", "--n", "2", "--alpha", "0", "--beta", "0")[:2] == (0, "3/2*x^2 - 1/2\n")


def test_eval_laguerre_zero(capsys):
    assert run(capsys, "eval", "--family", "laguerre", "--n", "0", "--alpha", "1/2")[:2] == (0, "1\n")


@pytest.mark.parametrize("fam, extra", [
    ("charlier", ["--a", "2"]),
    ("gen-jacobi", ["--alpha", "1/2", "--beta", "1/3", "--M", "1", "--N", "2"]),
    ("sobolev-laguerre", ["--alpha", "0", "--M", "1", "--N", "1"]),
    ("sym-ultra", ["--alpha", "1/2", "--M", "1", "--variant", "Q"]),
    ("jacobi", ["--alpha", "1/2", "--beta", "1/3", "--variant", "Def3"]),
])
def test_eval_families(capsys, fam, extra):
    code, out, _ = run(capsys, "eval", "--family", fam, "--n", "3", *extra)
    assert code == 0 and "x^3" in out


@pytest.mark.parametrize("argv", [
    ["eval", "--family", "gen-jacobi", "--n", "1", "--alpha", "0", "--beta", "-1"],
    ["eval", "--family", "gen-jacobi", "--n", "1", "--alpha", "-1/2", "--beta", "-1/2", "--M", "1"],
    ["eval", "--family", "jacobi", "--n", "2", "--alpha", "0"],
    ["eval", "--family", "laguerre", "--n", "-1", "--alpha", "0"],
    ["verify", "--identity", "no-such-identity"],
    ["solve", "--family", "jacobi", "--order", "2", "--alpha", "-1", "--beta", "-1", "--rhs", "random", "--seed", "1"],
    ["solve", "--family", "jacobi", "--order", "0", "--alpha", "0", "--beta", "0"],
    ["solve", "--family", "laguerre", "--order", "2", "--alpha", "0", "--rhs", "file"],
])
def test_config_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("jacinv: error:")


def test_bad_rational_flag_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["eval", "--family", "laguerre", "--n", "1", "--alpha", "0.5"])
    assert exc.value.code == 2


def test_verify_inv_jacobi(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "inv-jacobi", "--order-max", "12", "--grid", "10", "--seed", "7")
    lines = [json.loads(s) for s in out.splitlines()]
    assert code == 0 and len(lines) == 10
    assert all(r["passed"] and r["identity"] == "inv-jacobi" for r in lines)


def test_verify_nulalg(capsys):
    assert run(capsys, "verify", "--identity", "nulalg", "--order-max", "20", "--grid", "10", "--seed", "1")[0] == 0


def test_verify_pole_point_skipped(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "inv-jacobi", "--order-max", "3", "--grid", "1",
                       "--seed", "0", "--alpha", "-1", "--beta", "-1")
    (rec,) = [json.loads(s) for s in out.splitlines()]
    assert code == 0
    assert rec["skipped"] and "pole" in rec["skipped"]
    assert rec["params"] == {"alpha": "-1", "beta": "-1"}


@pytest.mark.parametrize("identity", sorted(VERIFIERS))
def test_every_identity_passes_small(capsys, identity):
    code, out, _ = run(capsys, "verify", "--identity", identity, "--order-max", "3", "--grid", "2", "--seed", "5")
    assert code == 0, out


def test_verify_is_byte_identical(capsys):
    argv = ("verify", "--identity", "master-jacobi", "--order-max", "4", "--grid", "3", "--seed", "11")
    first = run(capsys, *argv)[1]
    assert first and run(capsys, *argv)[1] == first


def test_verify_writes_out_file(capsys, tmp_path):
    path = tmp_path / "report.jsonl"
    code, out, _ = run(capsys, "verify", "--identity", "vandermonde", "--order-max", "5", "--grid", "2",
                       "--out", str(path))
    assert code == 0 and out == ""
    assert len(path.read_text().splitlines()) == 2


def test_solve_examples(capsys):
    code, out, _ = run(capsys, "solve", "--family", "jacobi", "--order", "8", "--alpha", "1/2", "--beta", "1/3",
                       "--rhs", "random", "--seed", "42")
    assert code == 0
    again = run(capsys, "solve", "--family", "jacobi", "--order", "8", "--alpha", "1/2", "--beta", "1/3",
                "--rhs", "random", "--seed", "42")[1]
    assert again == out
    code, _, _ = run(capsys, "solve", "--family", "laguerre", "--order", "6", "--shift", "2", "--alpha", "1/4",
                     "--rhs", "random", "--seed", "9")
    assert code == 0


@pytest.mark.parametrize("content", ['["x + 1", "1/2*x^2 - x"]', "x + 1\n1/2*x^2 - x\n"])
def test_solve_rhs_file(capsys, tmp_path, content):
    path = tmp_path / "rhs.txt"
    path.write_text(content)
    code, out, _ = run(capsys, "solve", "--family", "laguerre", "--order", "2", "--shift", "1", "--alpha", "1/3",
                       "--rhs", "file", "--rhs-file", str(path))
    assert code == 0 and json.loads(out)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "jacinv", "eval", "--family", "jacobi", "--n", "1",
                           "--alpha", "0", "--beta", "0"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "x\n"
