import json
import subprocess
import sys

import pytest

from primexp.cli import main


def test_exp_json(capsys):
    assert main(["exp", "--n", "12", "--class", "1,0", "--y", "000010100", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["formula"] == out["oracle"] == out["power"] == 6
    assert out["rule"] == "T42-2b"
    assert out["struct"]["se"] == 2


def test_exp_row_format(capsys):
    assert main(["exp", "--row", "0000001", "--loop"]) == 0
    assert "formula=14" in capsys.readouterr().out


def test_exp_imprimitive(capsys):
    assert main(["exp", "--n", "10", "--class", "1,0", "--y", "0101010"]) == 0
    assert "primitive=False" in capsys.readouterr().out


def test_exp_bad_input(capsys):
    assert main(["exp", "--n", "6", "--class", "1,0", "--y", "01"]) == 2
    assert "error" in capsys.readouterr().err


def test_census_formats(capsys, tmp_path):
    main(["census", "--n", "6", "--class", "0,0", "--format", "csv"])
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "n,alpha,eps,exponent,count"
    assert lines[1:] == ["6,0,0,4,4", "6,0,0,6,6", "6,0,0,8,2"]
    out = tmp_path / "c.json"
    main(["census", "--n", "6", "--class", "0,0", "--format", "json", "--out", str(out)])
    assert json.loads(out.read_text())["histogram"] == {"4": 4, "6": 6, "8": 2}
    main(["census", "--n", "5"])
    assert len(capsys.readouterr().out.splitlines()) == 5


def test_census_cap(capsys):
    assert main(["census", "--n", "17", "--class", "1,1"]) == 2
    assert "cap" in capsys.readouterr().err


def test_table1_check_exit_code(capsys):
    assert main(["table1", "--from", "3", "--to", "7", "--check"]) == 0
    assert main(["table1", "--from", "3", "--to", "10", "--check"]) == 1
    assert "MISMATCH table1 n=9" in capsys.readouterr().err


def test_verify(capsys):
    assert main(["verify", "--from", "4", "--to", "8", "--jobs", "1"]) == 0
    assert capsys.readouterr().out.count(" ok") == 20


def test_sets(capsys):
    main(["sets", "--n", "9"])
    out = capsys.readouterr().out
    assert "MISMATCH" not in out and "class 1,0: census [2, 4, 6, 8]" in out
    main(["sets", "--n", "8", "--k", "4"])
    out = capsys.readouterr().out
    assert "clause 5b: [6]  (applied)" in out and "clause 5a: []\n" in out


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["comb", "f", "--n", "6", "--q", "4", "--k", "2"], "6"),
        (["comb", "t", "--r", "2", "--n", "3"], "5"),
        (["comb", "count", "--class", "0,1", "--n", "7", "--b", "6"], "10"),
        (["comb", "count", "--class", "1,0", "--n", "9", "--b", "8"], "22"),
        (["comb", "count", "--class", "0,0", "--n", "8", "--b", "4"], "6..12"),
    ],
)
def test_comb(capsys, argv, expected):
    assert main(argv) == 0
    assert capsys.readouterr().out.strip() == expected


def test_comb_not_covered(capsys):
    assert main(["comb", "count", "--class", "1,0", "--n", "9", "--b", "4"]) == 2


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "primexp", "comb", "t", "--r", "2", "--n", "10"],
        capture_output=True, text=True, check=True,
    )
    assert res.stdout.strip() == "144"
