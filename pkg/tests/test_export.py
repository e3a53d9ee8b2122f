"""
Test the CSV and JSON exporters
"""
import json
import math
from pathlib import Path

import numpy as np
import pytest

from painleve_tau.export import EXPORT_FORMATS, Table
from painleve_tau.export.table import format_cell, to_jsonable
from painleve_tau.utils.naming import EXPORT_DIR_ENV, export_path, format_number, stem_with_suffix


def _demo_table() -> Table:
    return Table(
        "demo",
        ["x", "flag", "z"],
        [[0.5, True, None], [1, np.bool_(False), math.nan]],
        {"k": 3, "root": 1 + 2j},
    )


def test_format_cell() -> None:
    """Floats use %.12e, booleans are lower case, missing values are empty"""
    assert format_cell(0.1) == "1.000000000000e-01"
    assert format_cell(np.float64(-2.5)) == "-2.500000000000e+00"
    assert format_cell(np.int64(7)) == "7"
    assert format_cell(True) == "true"
    assert format_cell(None) == ""
    assert format_cell(math.nan) == "nan"


def test_to_jsonable() -> None:
    """Complex values become [re, im] pairs, numpy scalars become Python ones"""
    content = to_jsonable({"z": np.complex128(1 - 1j), "values": np.arange(2), 3: np.float32(0.5)})
    assert content == {"z": [1.0, -1.0], "values": [0, 1], "3": 0.5}
    assert isinstance(content["values"][0], int)


def test_csv_export(tmp_path: Path) -> None:
    """The CSV has a header row and a metadata sidecar"""
    generated = EXPORT_FORMATS["csv"](_demo_table(), export_dir=str(tmp_path))
    assert generated == [str(tmp_path / "demo.csv"), str(tmp_path / "demo.meta.json")]
    text = (tmp_path / "demo.csv").read_text(encoding="utf8")
    assert text == "x,flag,z\n5.000000000000e-01,true,\n1,false,nan\n"
    with open(tmp_path / "demo.meta.json", encoding="utf8") as file_desc:
        assert json.load(file_desc) == {"k": 3, "root": [1.0, 2.0]}


def test_csv_without_metadata(tmp_path: Path) -> None:
    """No sidecar is written for an empty metadata dictionary"""
    table = Table.from_columns("plain", {"a": [1.0, 2.0], "b": [3.0, 4.0]})
    generated = EXPORT_FORMATS["csv"](table, export_dir=str(tmp_path))
    assert generated == [str(tmp_path / "plain.csv")]
    assert table.column("b") == [3.0, 4.0]
    with pytest.raises(ValueError):
        Table.from_columns("bad", {"a": [1.0], "b": []})


def test_json_export(tmp_path: Path) -> None:
    """The JSON document carries the columns, rows and metadata with sorted keys"""
    EXPORT_FORMATS["json"](_demo_table(), export_dir=str(tmp_path))
    text = (tmp_path / "demo.json").read_text(encoding="utf8")
    content = json.loads(text)
    assert list(content) == ["columns", "metadata", "name", "rows"]
    assert content["rows"][0] == [0.5, True, None]
    assert math.isnan(content["rows"][1][2])


def test_export_dir_from_environment(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    """The export directory defaults to $PAINLEVE_TAU_EXPORT_DIR and is created"""
    target = tmp_path / "from-env"
    monkeypatch.setenv(EXPORT_DIR_ENV, str(target))
    assert export_path("a", "csv") == target / "a.csv"
    assert target.is_dir()
    assert export_path("a", "csv", export_dir=str(tmp_path)) == tmp_path / "a.csv"


def test_file_naming() -> None:
    """Parameters are written compactly inside file names"""
    assert format_number(0.5) == "0.5"
    assert format_number(-1.0) == "m1"
    assert stem_with_suffix("tau", None) == "tau"
    assert stem_with_suffix("tau", "n30") == "tau_n30"
