"""Command-line entry points, exercised in-process through main()."""

import json

import pytest

from superw.cli import main


def test_dims_table(capsys):
    assert main(["dims", "--n", "3"]) == 0
    out = capsys.readouterr().out
    assert "degree -1: 3" in out
    assert "total    : 24" in out


def test_dims_rank_out_of_range(capsys):
    assert main(["dims", "--n", "13"]) == 2
    assert "error:" in capsys.readouterr().err


def test_check_passes(capsys):
    assert main(["check", "--n", "2", "--samples", "40", "--seed", "3"]) == 0
    out = capsys.readouterr().out
    assert "jacobi" in out and "FAIL" not in out


def test_check_detects_injected_sign_bug(capsys):
    rc = main(["check", "--n", "2", "--samples", "40", "--seed", "3",
               "--inject-sign-bug"])
    assert rc == 1
    assert "FAIL" in capsys.readouterr().out


def test_socle_report(capsys):
    assert main(["socle", "-l", "2,1", "-m", "1", "--n", "5"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "layer 1" in out


def test_kac_exceptional_case(capsys):
    assert main(["kac", "--kind", "plus", "-l", "", "-m", "1", "--n", "2"]) == 0
    out = capsys.readouterr().out
    assert "atypical" in out
    assert "simple: False" in out
    assert "primitive at layer 1" in out


def test_kac_minus_truncation(capsys):
    assert main(["kac", "--kind", "minus", "-l", "", "-m", "", "--n", "2",
                 "-D", "2"]) == 0
    out = capsys.readouterr().out
    assert "K-" in out


def test_tensorfield_roundtrip(capsys):
    assert main(["tensorfield", "-l", "1", "-m", "", "--n", "3"]) == 0
    out = capsys.readouterr().out
    assert "submodule dim 7 (proper)" in out
    assert "invariants round-trip: True" in out


def test_stabilize_family(capsys):
    rc = main(["stabilize", "--object", "K+", "-l", "", "-m", "",
               "--n-from", "2", "--n-to", "4"])
    assert rc == 0
    assert "stabilized: True" in capsys.readouterr().out


def test_out_files_are_byte_stable(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    assert main(["dims", "--n", "4", "--out", str(a)]) == 0
    assert main(["dims", "--n", "4", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    data = json.loads(a.read_text())
    assert data["n"] == 4 and data["total"] == 64


def test_usage_errors_exit_two():
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["dims"])
    assert e.value.code == 2
