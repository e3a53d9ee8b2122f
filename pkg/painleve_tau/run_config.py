"""
Validated parameter pack of one command line run
"""
import json
from argparse import Namespace
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from painleve_tau.exceptions import InvalidParameters
from painleve_tau.export.all_export import EXPORT_FORMATS
from painleve_tau.geometry.model import ModelParams
from painleve_tau.tau_fredholm import TauParams, scan_grid
from painleve_tau.types import DeformForm
from painleve_tau.utils.precision import resolve_digits

# Flags of each subcommand that end up in RunConfig.parameters
SUBCOMMAND_KEYS: Dict[str, Tuple[str, ...]] = {
    "tau": ("gamma", "n", "s_min", "s_max", "step", "epsilon"),
    "zeros": ("d", "ell", "k", "z0", "t", "T", "critical", "unfold", "deform_form", "precision"),
    "curve": ("kind", "gamma_r", "d", "t", "tc", "z0"),
    "verify": ("only",),
    "extract": ("d", "ell", "k", "scaling", "zu_exponent", "precision"),
}

CURVE_KINDS = ("szego", "hat", "lemniscate", "gamma_r")
MIN_POINTS = 16


def _split(text: Any, convert: Any, name: str) -> List[Any]:
    if isinstance(text, (list, tuple)):
        items = list(text)
    else:
        items = [item for item in str(text).split(",") if item.strip()]
    try:
        return [convert(item) for item in items]
    except ValueError as exception:
        raise InvalidParameters(f"Invalid --{name} list {text!r}: {exception}") from exception


# pylint: disable=too-many-instance-attributes
@dataclass
class RunConfig:
    """
    Subcommand, its parameters, and the output and resolution settings
    """

    subcommand: str
    parameters: Dict[str, Any] = field(default_factory=dict)
    output: Optional[str] = None
    export_format: str = "csv"
    export_dir: Optional[str] = None
    points: int = 512
    workers: int = 1

    @classmethod
    def from_args(cls, args: Namespace) -> "RunConfig":
        """Collect the parsed arguments of a subcommand

        Args:
            args (Namespace): parsed arguments

        Raises:
            InvalidParameters: if the subcommand is missing or unknown

        Returns:
            RunConfig: the validated configuration
        """
        subcommand = getattr(args, "subcommand", None)
        if subcommand not in SUBCOMMAND_KEYS:
            raise InvalidParameters(f"Unknown subcommand {subcommand!r}")
        values = vars(args)
        if subcommand == "curve":
            values = dict(values, kind=cls._curve_kind(args))
        parameters = {key: values.get(key) for key in SUBCOMMAND_KEYS[subcommand]}
        config = cls(
            subcommand=subcommand,
            parameters=parameters,
            output=getattr(args, "output", None),
            export_format=getattr(args, "format", "csv"),
            export_dir=getattr(args, "export_dir", None),
            points=getattr(args, "points", 512),
            workers=getattr(args, "workers", 1),
        )
        config.validate()
        return config

    @staticmethod
    def _curve_kind(args: Namespace) -> str:
        if getattr(args, "gamma_r", None) is not None:
            return "gamma_r"
        for kind in ("szego", "hat", "lemniscate"):
            if getattr(args, kind, False):
                return kind
        raise InvalidParameters("curve needs one of --szego, --hat, --lemniscate, --gamma-r")

    # region Derived values
    ###################################################################################
    ###################################################################################

    @property
    def export_kwargs(self) -> Dict[str, Any]:
        """Keyword arguments of the export functions

        Returns:
            Dict[str, Any]: export_dir
        """
        return {"export_dir": self.export_dir}

    def degrees(self) -> List[int]:
        """Reduced degrees of the --k list

        Returns:
            List[int]: degrees, in the given order
        """
        return _split(self.parameters.get("k", ""), int, "k")

    def scalings(self) -> List[float]:
        """Double-scaling parameters of the --scaling list

        Returns:
            List[float]: the values, in the given order
        """
        return _split(self.parameters.get("scaling", "0"), float, "scaling")

    def checks(self) -> Optional[List[str]]:
        """Check names of --only

        Returns:
            Optional[List[str]]: names, None for the default battery
        """
        only = self.parameters.get("only")
        if not only:
            return None
        return _split(only, lambda item: item.strip(), "only")

    def deform_form(self) -> DeformForm:
        """Reading of the corrected curve

        Raises:
            InvalidParameters: if the name is unknown

        Returns:
            DeformForm: the form
        """
        try:
            return DeformForm.from_name(self.parameters.get("deform_form") or "real_part")
        except ValueError as exception:
            raise InvalidParameters(str(exception)) from exception

    def model_params(self, k: int, scaling: Optional[float] = None) -> ModelParams:
        """Model parameters at degree k

        extract uses the double-scaling parameter S; zeros uses --critical, --z0, or --t and --T.

        Args:
            k (int): reduced degree
            scaling (Optional[float]): double-scaling parameter S

        Raises:
            InvalidParameters: if the model is underdetermined

        Returns:
            ModelParams: the parameters
        """
        p = self.parameters
        d, ell = int(p["d"]), int(p["ell"])
        if scaling is not None:
            return ModelParams.double_scaling(d, ell, k, scaling)
        time = p.get("t")
        if p.get("critical"):
            return ModelParams.from_z0(d, ell, k, 1.0, time or 1.0)
        if p.get("z0") is not None:
            return ModelParams.from_z0(d, ell, k, float(p["z0"]), time or 1.0)
        if time is not None and p.get("T") is not None:
            return ModelParams(d=d, ell=ell, t=float(time), T=float(p["T"]), k=k)
        raise InvalidParameters("zeros needs --critical, --z0, or both --t and --T")

    # endregion
    ###################################################################################
    ###################################################################################
    # region Validation
    ###################################################################################
    ###################################################################################

    def validate(self) -> None:
        """Check every parameter against the preconditions of the modules it reaches

        Raises:
            InvalidParameters: if a parameter is invalid
        """
        if self.subcommand not in SUBCOMMAND_KEYS:
            raise InvalidParameters(f"Unknown subcommand {self.subcommand!r}")
        if self.export_format not in EXPORT_FORMATS:
            raise InvalidParameters(f"Unknown format {self.export_format!r}")
        if self.points < MIN_POINTS:
            raise InvalidParameters(f"At least {MIN_POINTS} points are needed, got {self.points}")
        if self.workers < 1:
            raise InvalidParameters(f"workers must be at least 1, got {self.workers}")
        getattr(self, f"_validate_{self.subcommand}")()

    def _validate_tau(self) -> None:
        p = self.parameters
        TauParams.default(float(p["s_min"]), float(p["gamma"]), int(p["n"]), p.get("epsilon"))
        scan_grid(float(p["s_min"]), float(p["s_max"]), float(p["step"]))

    def _validate_degrees(self) -> List[int]:
        degrees = self.degrees()
        if not degrees:
            raise InvalidParameters("At least one degree is needed")
        for k in degrees:
            if k < 1:
                raise InvalidParameters(f"Degrees must be positive, got {k}")
            resolve_digits(k, self.parameters.get("precision"))
        return degrees

    def _validate_zeros(self) -> None:
        for k in self._validate_degrees():
            self.model_params(k)
        self.deform_form()

    def _validate_extract(self) -> None:
        scalings = self.scalings()
        if not scalings:
            raise InvalidParameters("At least one scaling is needed")
        for k in self._validate_degrees():
            for scaling in scalings:
                self.model_params(k, scaling)

    def _validate_curve(self) -> None:
        p = self.parameters
        if p.get("kind") not in CURVE_KINDS:
            raise InvalidParameters(f"Unknown curve {p.get('kind')!r}")
        if int(p.get("d") or 0) < 1:
            raise InvalidParameters(f"d must be positive, got {p.get('d')}")
        if not float(p.get("tc") or 0.0) > 0:
            raise InvalidParameters(f"t_c must be positive, got {p.get('tc')}")
        if p["kind"] == "lemniscate" and not float(p.get("t") or 0.0) > 0:
            raise InvalidParameters("--lemniscate needs a positive --t")
        if p["kind"] == "gamma_r":
            z0 = float(p.get("z0") or 1.0)
            if not 0 < float(p["gamma_r"]) <= z0:
                raise InvalidParameters(f"r must be in (0, z0], got {p['gamma_r']}")

    def _validate_verify(self) -> None:
        # names are resolved against the registry at run time
        self.checks()

    # endregion
    ###################################################################################
    ###################################################################################
    # region File form
    ###################################################################################
    ###################################################################################

    def to_json(self) -> Dict[str, Any]:
        """Serializable form of the configuration

        Returns:
            Dict[str, Any]: the fields
        """
        content = asdict(self)
        content["parameters"] = dict(sorted(self.parameters.items()))
        return content

    @classmethod
    def from_json(cls, content: Dict[str, Any]) -> "RunConfig":
        """Rebuild a configuration from its serializable form

        Args:
            content (Dict[str, Any]): output of to_json

        Raises:
            InvalidParameters: if a field is missing or unknown

        Returns:
            RunConfig: the validated configuration
        """
        try:
            config = cls(**content)
        except TypeError as exception:
            raise InvalidParameters(f"Invalid configuration: {exception}") from exception
        config.validate()
        return config

    def save(self, path: str) -> None:
        """Write the configuration as JSON

        Args:
            path (str): destination
        """
        with open(path, "w", encoding="utf8") as file_desc:
            json.dump(self.to_json(), file_desc, sort_keys=True, indent=2)
            file_desc.write("\n")

    @classmethod
    def load(cls, path: str) -> "RunConfig":
        """Read a configuration written by save

        Args:
            path (str): source

        Raises:
            InvalidParameters: if the file is not valid JSON

        Returns:
            RunConfig: the validated configuration
        """
        try:
            with open(path, encoding="utf8") as file_desc:
                content = json.load(file_desc)
        except json.decoder.JSONDecodeError as exception:
            raise InvalidParameters(f"Impossible to read {path}: {exception}") from exception
        return cls.from_json(content)

    # endregion
