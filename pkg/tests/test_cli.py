from __future__ import annotations

import json

import pytest

from periodic_atlas.cli import main


def run_cli(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_element_report(capsys):
    code, out, _ = run_cli(capsys, "element", "57")
    assert code == 0
    assert "Z=57" in out and "La" in out
    assert "n=4 l=3 (4f)" in out
    assert "j=5/2" in out and "m=-5/2" in out
    assert "inner-transition" in out
    assert "light sub-block" in out
    assert "status:  named" in out


def test_address_report_matches_element(capsys):
    code, out, _ = run_cli(capsys, "address", "4", "3", "5", "-5")
    assert code == 0
    assert "Z=57" in out


def test_address_rejects_invalid_quartet(capsys):
    code, _, err = run_cli(capsys, "address", "1", "0", "3", "1")
    assert code == 1
    assert "InvalidAddressError" in err


def test_family_listing(capsys):
    code, out, _ = run_cli(capsys, "family", "alkali", "--count", "4")
    assert code == 0
    assert [line.split()[0] for line in out.splitlines()[1:]] == ["Z=1", "Z=3", "Z=11", "Z=19"]


def test_family_by_column_triple(capsys):
    code, out, _ = run_cli(capsys, "family", "1,3,3", "--count", "3")
    assert code == 0
    assert "Z=10" in out and "Z=18" in out and "Z=36" in out


def test_walk_prints_each_stop(capsys):
    code, out, _ = run_cli(capsys, "walk", "1", "0", "1", "-1", "n+", "n+", "m+")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("start: Z=1")
    assert "Z=3" in lines[1]
    assert "Z=11" in lines[2]
    assert "Z=12" in lines[3]


def test_walk_taxi_token(capsys):
    code, out, _ = run_cli(capsys, "walk", "1", "0", "1", "-1", "taxi:4,3,5,-5")
    assert code == 0
    assert "Z=57" in out


def test_walk_reports_typed_error_and_fails(capsys):
    code, out, _ = run_cli(capsys, "walk", "1", "0", "1", "1", "m+")
    assert code == 1
    assert "OutOfBlock" in out


def test_walk_rejects_unknown_token(capsys):
    code, _, err = run_cli(capsys, "walk", "1", "0", "1", "1", "zz")
    assert code == 1
    assert "unknown move" in err


def test_verify_agrees(capsys):
    code, out, _ = run_cli(capsys, "verify", "--max-sum", "12")
    assert code == 0
    assert out.strip() == "all 364 houses with n+l <= 12 agree"


def test_config_plain_and_core(capsys):
    code, out, _ = run_cli(capsys, "config", "21")
    assert code == 0
    assert out.strip() == "1s2 2s2 2p6 3s2 3p6 4s2 3d1"
    code, out, _ = run_cli(capsys, "config", "21", "--core")
    assert code == 0
    assert out.strip() == "[Ar] 4s2 3d1"


def test_table_json_byte_identical_across_runs(capsys):
    code, first, _ = run_cli(capsys, "table", "--rows", "4", "--format", "json")
    assert code == 0
    code, second, _ = run_cli(capsys, "table", "--rows", "4", "--format", "json")
    assert code == 0
    assert first == second
    assert len(json.loads(first)) == 60


def test_table_output_file(capsys, tmp_path):
    out_path = tmp_path / "table.csv"
    code, out, _ = run_cli(
        capsys, "table", "--rows", "2", "--format", "csv", "--output", str(out_path)
    )
    assert code == 0
    assert out == ""
    assert out_path.read_text(encoding="utf-8").startswith("z,n,l,two_j,two_m,symbol")


def test_table_with_figure(capsys, tmp_path):
    fig_path = tmp_path / "city.png"
    code, out, err = run_cli(
        capsys,
        "table",
        "--rows",
        "3",
        "--format",
        "csv",
        "--annotate",
        "families,series",
        "--figure",
        str(fig_path),
    )
    assert code == 0
    assert out.startswith("z,n,l,two_j,two_m,symbol,family,series")
    assert fig_path.exists() and fig_path.stat().st_size > 0
    assert "figure written" in err


def test_custom_dataset_flag(capsys, tmp_path):
    path = tmp_path / "modern.csv"
    path.write_text(
        "#! named_max=118\n#! observed_max=118\n111,Rg,roentgenium\n",
        encoding="utf-8",
    )
    code, out, _ = run_cli(capsys, "element", "111", "--dataset", str(path))
    assert code == 0
    assert "Rg" in out
    assert "status:  named" in out


def test_dataset_parse_error_surfaces(capsys, tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("not-a-row\n", encoding="utf-8")
    code, _, err = run_cli(capsys, "element", "1", "--dataset", str(path))
    assert code == 1
    assert "ParseError" in err


def test_missing_dataset_file(capsys, tmp_path):
    code, _, err = run_cli(capsys, "element", "1", "--dataset", str(tmp_path / "nope.csv"))
    assert code == 1
    assert "FileNotFoundError" in err


def test_element_rejects_nonpositive_z(capsys):
    code, _, err = run_cli(capsys, "element", "0")
    assert code == 1
    assert "ValueError" in err


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["table", "--format", "xml"])
    assert exc.value.code == 2
