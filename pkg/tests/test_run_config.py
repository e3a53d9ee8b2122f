"""
Test the validation and the file form of the run configuration
"""
from pathlib import Path
from typing import Any, Dict

import pytest

from painleve_tau.exceptions import InvalidParameters
from painleve_tau.run_config import RunConfig, _split
from painleve_tau.types import DeformForm

TAU_PARAMETERS: Dict[str, Any] = {
    "gamma": 0.1,
    "n": 10,
    "s_min": -2.0,
    "s_max": 2.0,
    "step": 0.5,
    "epsilon": None,
}

ZEROS_PARAMETERS: Dict[str, Any] = {
    "d": 3,
    "ell": 0,
    "k": "10,20",
    "z0": None,
    "t": None,
    "T": None,
    "critical": True,
    "unfold": False,
    "deform_form": "real_part",
    "precision": None,
}


def test_split() -> None:
    """Comma-separated lists, including negative values"""
    assert _split("40,60,70", int, "k") == [40, 60, 70]
    assert _split("-1,0,1", float, "scaling") == [-1.0, 0.0, 1.0]
    assert _split([3, 4], int, "k") == [3, 4]
    assert _split("5,", int, "k") == [5]
    with pytest.raises(InvalidParameters):
        _split("4,x", int, "k")


def test_tau_config() -> None:
    """A valid tau configuration"""
    config = RunConfig("tau", dict(TAU_PARAMETERS))
    config.validate()
    assert config.export_kwargs == {"export_dir": None}


@pytest.mark.parametrize(
    "key, value", [("gamma", 1.0), ("n", 0), ("step", 0.0), ("s_max", -3.0), ("epsilon", -1.0)]
)
def test_invalid_tau_config(key: str, value: Any) -> None:
    """Every tau parameter is checked before the scan starts"""
    parameters = dict(TAU_PARAMETERS)
    parameters[key] = value
    with pytest.raises(InvalidParameters):
        RunConfig("tau", parameters).validate()


def test_invalid_settings() -> None:
    """Format, points, workers and subcommand are validated"""
    with pytest.raises(InvalidParameters):
        RunConfig("tau", dict(TAU_PARAMETERS), export_format="xml").validate()
    with pytest.raises(InvalidParameters):
        RunConfig("tau", dict(TAU_PARAMETERS), points=8).validate()
    with pytest.raises(InvalidParameters):
        RunConfig("tau", dict(TAU_PARAMETERS), workers=0).validate()
    with pytest.raises(InvalidParameters):
        RunConfig("plot", {}).validate()


def test_zeros_model() -> None:
    """--critical sets z0 = 1, --t and --T give z0 = t_c^2/t^2"""
    config = RunConfig("zeros", dict(ZEROS_PARAMETERS))
    config.validate()
    assert config.degrees() == [10, 20]
    assert config.model_params(10).z0 == pytest.approx(1.0)
    assert config.deform_form() == DeformForm.REAL_PART

    explicit = dict(ZEROS_PARAMETERS, critical=False, t=2.0, T=1.0)
    params = RunConfig("zeros", explicit).model_params(10)
    assert params.z0 == pytest.approx(params.t_c**2 / 4.0)

    underdetermined = dict(ZEROS_PARAMETERS, critical=False)
    with pytest.raises(InvalidParameters):
        RunConfig("zeros", underdetermined).validate()


@pytest.mark.parametrize(
    "key, value",
    [("k", "0"), ("k", ""), ("precision", 10), ("ell", 3), ("deform_form", "imaginary")],
)
def test_invalid_zeros_config(key: str, value: Any) -> None:
    """Degrees, precision, residue class and form names are validated"""
    parameters = dict(ZEROS_PARAMETERS)
    parameters[key] = value
    with pytest.raises(InvalidParameters):
        RunConfig("zeros", parameters).validate()


def test_extract_scalings() -> None:
    """Scalings are parsed in the given order and must keep z0 positive"""
    parameters = {
        "d": 3,
        "ell": 0,
        "k": "16",
        "scaling": "-1,0,1",
        "zu_exponent": None,
        "precision": None,
    }
    config = RunConfig("extract", parameters)
    config.validate()
    assert config.scalings() == [-1.0, 0.0, 1.0]
    with pytest.raises(InvalidParameters):
        RunConfig("extract", dict(parameters, scaling="-4")).validate()


@pytest.mark.parametrize(
    "parameters",
    [
        {"kind": "spiral", "d": 3, "tc": 1.0},
        {"kind": "hat", "d": 0, "tc": 1.0},
        {"kind": "szego", "d": 3, "tc": 0.0},
        {"kind": "lemniscate", "d": 3, "tc": 1.0, "t": None},
        {"kind": "gamma_r", "d": 3, "tc": 1.0, "gamma_r": 1.5, "z0": None},
    ],
)
def test_invalid_curve_config(parameters: Dict[str, Any]) -> None:
    """Curve kinds and their parameters are validated"""
    with pytest.raises(InvalidParameters):
        RunConfig("curve", parameters).validate()


def test_verify_checks() -> None:
    """--only gives the check names, nothing means the default battery"""
    assert RunConfig("verify", {"only": None}).checks() is None
    assert RunConfig("verify", {"only": "s0, tau-limit"}).checks() == ["s0", "tau-limit"]


def test_save_and_load(tmp_path: Path) -> None:
    """A saved configuration loads back identical"""
    config = RunConfig("zeros", dict(ZEROS_PARAMETERS), output="run", points=64)
    path = str(tmp_path / "run.json")
    config.save(path)
    assert RunConfig.load(path) == config

    broken = tmp_path / "broken.json"
    broken.write_text("{", encoding="utf8")
    with pytest.raises(InvalidParameters):
        RunConfig.load(str(broken))
    with pytest.raises(InvalidParameters):
        RunConfig.from_json({"subcommand": "tau", "unknown": 1})
