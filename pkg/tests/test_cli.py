"""
Test the painleve-tau command line
"""
import csv
import json
from pathlib import Path
from typing import List

import pytest

from painleve_tau.__main__ import main
from painleve_tau.commands import COMMANDS


@pytest.fixture(autouse=True)
def fixture_isolated_cwd(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    """Run every command away from a painleve_tau.config.json of the checkout"""
    monkeypatch.chdir(tmp_path)


def _rows(path: Path) -> List[List[str]]:
    with open(path, encoding="utf8", newline="") as file_desc:
        return list(csv.reader(file_desc))


def _exit_code(argv: List[str]) -> int:
    with pytest.raises(SystemExit) as exit_info:
        main(argv)
    return int(exit_info.value.code)


def test_tau_at_gamma_zero(tmp_path: Path) -> None:
    """tau is exactly one at gamma = 0"""
    out = tmp_path / "out"
    main(
        ["tau", "--gamma", "0", "--n", "10", "--s-min", "-1", "--s-max", "1", "--step", "0.5"]
        + ["--export-dir", str(out)]
    )
    rows = _rows(out / "tau.csv")
    assert rows[0] == ["s", "tau", "atan_tau", "log_abs_tau"]
    assert len(rows) == 6
    assert all(row[1] == "1.000000000000e+00" for row in rows[1:])
    assert all(row[2] == "7.853981633974e-01" for row in rows[1:])
    assert all(row[3] == "0.000000000000e+00" for row in rows[1:])
    with open(out / "tau.zeros.json", encoding="utf8") as file_desc:
        sidecar = json.load(file_desc)
    assert sidecar["brackets"] == [] and sidecar["zeros"] == []
    assert sidecar["s0"] == pytest.approx(-0.7701449782, abs=1e-9)


def test_tau_is_deterministic(tmp_path: Path) -> None:
    """Two runs write byte-identical files"""
    for name in ("first", "second"):
        main(
            ["tau", "--gamma", "0.3", "--n", "10", "--s-min", "-2", "--s-max", "2"]
            + ["--step", "0.25", "--export-dir", str(tmp_path / name)]
        )
    for file_name in ("tau.csv", "tau.zeros.json"):
        first = (tmp_path / "first" / file_name).read_bytes()
        assert first == (tmp_path / "second" / file_name).read_bytes()


def test_config_file(tmp_path: Path) -> None:
    """Values of painleve_tau.config.json replace the defaults, unknown keys are ignored"""
    (tmp_path / "painleve_tau.config.json").write_text(
        json.dumps({"n": 12, "gamma": 0.0, "colour": "blue"}), encoding="utf8"
    )
    main(["tau", "--s-min", "0", "--s-max", "1", "--step", "0.5", "--export-dir", "out"])
    with open(tmp_path / "out" / "tau.zeros.json", encoding="utf8") as file_desc:
        sidecar = json.load(file_desc)
    assert sidecar["n"] == 12
    assert sidecar["gamma"] == 0.0


def test_exit_codes(tmp_path: Path) -> None:
    """Invalid parameters exit with 2, an empty command line with 1"""
    assert _exit_code(["tau", "--gamma", "1.0", "--export-dir", str(tmp_path)]) == 2
    assert _exit_code(["zeros", "--k", "4", "--export-dir", str(tmp_path)]) == 2
    assert _exit_code(["verify", "--only", "no-such-check", "--export-dir", str(tmp_path)]) == 2
    assert _exit_code(["tau", "--n", "ten"]) == 2
    assert _exit_code([]) == 1


def test_verify_single_check(tmp_path: Path) -> None:
    """verify writes verify.json with one entry per check"""
    main(["verify", "--only", "s0", "--export-dir", str(tmp_path)])
    with open(tmp_path / "verify.json", encoding="utf8") as file_desc:
        report = json.load(file_desc)
    assert report["passed"] is True
    assert [check["name"] for check in report["checks"]] == ["s0"]


def test_curve_szego(tmp_path: Path) -> None:
    """The Szego curve is written with its density and metadata"""
    main(["curve", "--szego", "-M", "64", "--export-dir", str(tmp_path)])
    rows = _rows(tmp_path / "szego.csv")
    assert rows[0] == ["re", "im", "residual", "density_re", "density_im"]
    assert len(rows) == 65
    with open(tmp_path / "szego.meta.json", encoding="utf8") as file_desc:
        metadata = json.load(file_desc)
    assert metadata["closed"] is True
    assert metadata["points"] == 64


def test_zeros_with_unfolding(tmp_path: Path) -> None:
    """Roots of pi_6 at d = 3, z0 = 1 with their lambda-plane images"""
    main(
        ["zeros", "--d", "3", "--ell", "0", "--k", "6", "--critical", "--unfold"]
        + ["-M", "64", "--export-dir", str(tmp_path)]
    )
    assert len(_rows(tmp_path / "gamma1_z01.csv")) == 65
    assert len(_rows(tmp_path / "zeros_k6.csv")) == 7
    assert len(_rows(tmp_path / "zeros_lambda_k6.csv")) == 19
    assert (tmp_path / "c_hat_d3.csv").exists()
    with open(tmp_path / "zeros_k6.meta.json", encoding="utf8") as file_desc:
        statistics = json.load(file_desc)
    assert statistics["k"] == 6
    assert statistics["gamma"] == pytest.approx(2.0 / 3.0)
    assert statistics["precision"] == 30
    assert "corrected" not in statistics


def test_floating_point_failure_exit_code(monkeypatch: pytest.MonkeyPatch) -> None:
    """An overflow escaping a command exits with the numerical breakdown code"""

    def overflowing(_config: object) -> List[str]:
        raise OverflowError("math range error")

    monkeypatch.setitem(COMMANDS, "tau", overflowing)
    assert _exit_code(["tau", "--gamma", "0.1"]) == 3
