"""Command-line smoke tests (everything runs on warm caches)."""

import pytest

from onanmoon.cli import main


def test_dims_headline(capsys):
    assert main(["dims", "--dmax", "4"]) == 0
    out = capsys.readouterr().out
    assert "3\t26752" in out
    assert "4\t143376" in out


def test_coeff_principal_part_only(capsys):
    assert main(["coeff", "--order", "1A", "--dmax", "0"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines == ["-4\t-1", "0\t2"]


def test_classnum(capsys):
    assert main(["classnum", "--level", "1", "--dmax", "8"]) == 0
    out = dict(
        line.split("\t") for line in capsys.readouterr().out.strip().splitlines()
    )
    assert out["0"] == "-1/12"
    assert out["3"] == "1/3"
    assert out["4"] == "1/2"
    assert out["7"] == "1"
    assert out["8"] == "1"


def test_traces_cmd(capsys):
    assert main(["traces", "--level", "1", "--dmax", "4"]) == 0
    out = capsys.readouterr().out
    assert "3\t26752" in out


def test_mult_cmd(capsys):
    assert main(["mult", "--mmax", "4"]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert out[0].startswith("m\tV1")
    assert len(out) == 3  # header + m=3 + m=4


def test_tables_cmd(capsys):
    assert main(["tables", "--which", "7", "--format", "csv"]) == 0
    assert "276" in capsys.readouterr().out


def test_verify_characterization(capsys):
    assert main(["verify", "characterization"]) == 0
    out = capsys.readouterr().out
    assert "self-certified" in out
    assert "all 30 classes" in out


def test_verify_positivity_small(capsys):
    assert main(["verify", "positivity", "--mmax", "24"]) == 0


def test_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_missing_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
