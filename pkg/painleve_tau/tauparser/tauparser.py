"""
Module handling the cli arguments

Call tauparser.init(parser) to add the painleve-tau subcommands to an ArgumentParser
"""
from argparse import ArgumentParser, _SubParsersAction

from painleve_tau.tauparser import DEFAULTS_FLAG_IN_CONFIG
from painleve_tau.types import DeformForm

SUBCOMMANDS = ("tau", "zeros", "curve", "verify", "extract")


def init(parser: ArgumentParser) -> None:
    """Add the painleve-tau subcommands and their arguments to the parser

    Args:
        parser (ArgumentParser): argparser where the subcommands are added
    """
    subparsers = parser.add_subparsers(dest="subcommand")

    tau_parser = _add_subcommand(subparsers, "tau", "Scan the tau function over a grid of s")
    _init_tau(tau_parser)
    _init_resolution(tau_parser)
    _init_output(tau_parser)

    zeros_parser = _add_subcommand(subparsers, "zeros", "Zeros of pi_k and their limit curve")
    _init_model(zeros_parser)
    _init_zeros(zeros_parser)
    _init_resolution(zeros_parser)
    _init_output(zeros_parser)

    curve_parser = _add_subcommand(subparsers, "curve", "Sample one of the critical curves")
    _init_curve(curve_parser)
    _init_resolution(curve_parser)
    _init_output(curve_parser)

    verify_parser = _add_subcommand(subparsers, "verify", "Run the verification battery")
    verify_parser.add_argument(
        "--only",
        help="Comma-separated list of checks (default: every check that is not slow)",
        action="store",
        default=DEFAULTS_FLAG_IN_CONFIG["only"],
    )
    _init_output(verify_parser)

    extract_parser = _add_subcommand(subparsers, "extract", "Extract H and Z/U over k and S")
    _init_model(extract_parser)
    _init_extract(extract_parser)
    _init_resolution(extract_parser)
    _init_output(extract_parser)


def _add_subcommand(
    subparsers: "_SubParsersAction[ArgumentParser]", name: str, description: str
) -> ArgumentParser:
    return subparsers.add_parser(name, help=description, description=description)


def _init_tau(parser: ArgumentParser) -> None:
    group_tau = parser.add_argument_group("Tau options")
    group_tau.add_argument(
        "--gamma",
        help=f"Exponent in [0, 1) (default {DEFAULTS_FLAG_IN_CONFIG['gamma']})",
        action="store",
        type=float,
        default=DEFAULTS_FLAG_IN_CONFIG["gamma"],
    )
    group_tau.add_argument(
        "--n",
        help=f"Number of negative quadrature nodes (default {DEFAULTS_FLAG_IN_CONFIG['n']})",
        action="store",
        type=int,
        default=DEFAULTS_FLAG_IN_CONFIG["n"],
    )
    group_tau.add_argument(
        "--s-min",
        help="First point of the grid",
        action="store",
        type=float,
        dest="s_min",
        default=DEFAULTS_FLAG_IN_CONFIG["s_min"],
    )
    group_tau.add_argument(
        "--s-max",
        help="Last point of the grid",
        action="store",
        type=float,
        dest="s_max",
        default=DEFAULTS_FLAG_IN_CONFIG["s_max"],
    )
    group_tau.add_argument(
        "--step",
        help="Grid spacing",
        action="store",
        type=float,
        default=DEFAULTS_FLAG_IN_CONFIG["step"],
    )
    group_tau.add_argument(
        "--epsilon",
        help="Contour shift (default max(1/2, -s))",
        action="store",
        type=float,
        default=DEFAULTS_FLAG_IN_CONFIG["epsilon"],
    )


def _init_model(parser: ArgumentParser) -> None:
    group_model = parser.add_argument_group("Model options")
    group_model.add_argument(
        "--d",
        help="Symmetry order d >= 2",
        action="store",
        type=int,
        default=DEFAULTS_FLAG_IN_CONFIG["d"],
    )
    group_model.add_argument(
        "--ell",
        help="Residue class of the degree, 0 <= ell < d",
        action="store",
        type=int,
        default=DEFAULTS_FLAG_IN_CONFIG["ell"],
    )
    group_model.add_argument(
        "--k",
        help="Comma-separated list of reduced degrees",
        action="store",
        default=DEFAULTS_FLAG_IN_CONFIG["k"],
    )
    group_model.add_argument(
        "--precision",
        help="Decimal digits of the moment pipeline (default max(30, 3k); 15 is double)",
        action="store",
        type=int,
        default=DEFAULTS_FLAG_IN_CONFIG["precision"],
    )


def _init_zeros(parser: ArgumentParser) -> None:
    group_zeros = parser.add_argument_group("Zeros options")
    group_zeros.add_argument(
        "--z0",
        help="Ratio t_c^2/t^2",
        action="store",
        type=float,
        default=DEFAULTS_FLAG_IN_CONFIG["z0"],
    )
    group_zeros.add_argument(
        "--t",
        help="Time parameter",
        action="store",
        type=float,
        default=DEFAULTS_FLAG_IN_CONFIG["t"],
    )
    group_zeros.add_argument(
        "--T",
        help="Total charge",
        action="store",
        type=float,
        dest="T",
        default=DEFAULTS_FLAG_IN_CONFIG["T"],
    )
    group_zeros.add_argument(
        "--critical",
        help="Use t = t_c (z0 = 1)",
        action="store_true",
        default=DEFAULTS_FLAG_IN_CONFIG["critical"],
    )
    group_zeros.add_argument(
        "--unfold",
        help="Also export the roots of p_n in the lambda-plane",
        action="store_true",
        default=DEFAULTS_FLAG_IN_CONFIG["unfold"],
    )
    group_zeros.add_argument(
        "--deform-form",
        help=f"Reading of the corrected curve ({', '.join(str(f) for f in DeformForm)})",
        action="store",
        dest="deform_form",
        default=DEFAULTS_FLAG_IN_CONFIG["deform_form"],
    )


def _init_curve(parser: ArgumentParser) -> None:
    group_curve = parser.add_argument_group("Curve options")
    kind = group_curve.add_mutually_exclusive_group(required=True)
    kind.add_argument("--szego", help="Szego curve in the z-plane", action="store_true")
    kind.add_argument("--hat", help="Szego curve unfolded in the lambda-plane", action="store_true")
    kind.add_argument("--lemniscate", help="Boundary |lambda^d - t| = t_c", action="store_true")
    kind.add_argument(
        "--gamma-r", help="Level curve Gamma_r", action="store", type=float, dest="gamma_r"
    )
    group_curve.add_argument(
        "--d",
        help="Symmetry order",
        action="store",
        type=int,
        default=DEFAULTS_FLAG_IN_CONFIG["d"],
    )
    group_curve.add_argument(
        "--t",
        help="Time parameter of the lemniscate",
        action="store",
        type=float,
        default=DEFAULTS_FLAG_IN_CONFIG["t"],
    )
    group_curve.add_argument(
        "--tc",
        help="Critical time",
        action="store",
        type=float,
        default=DEFAULTS_FLAG_IN_CONFIG["tc"],
    )
    group_curve.add_argument(
        "--z0",
        help="Ratio t_c^2/t^2 of Gamma_r (default 1)",
        action="store",
        type=float,
        default=DEFAULTS_FLAG_IN_CONFIG["z0"],
    )


def _init_extract(parser: ArgumentParser) -> None:
    group_extract = parser.add_argument_group("Extraction options")
    group_extract.add_argument(
        "--scaling",
        help="Comma-separated list of double-scaling parameters S (use --scaling=-1,0,1)",
        action="store",
        default=DEFAULTS_FLAG_IN_CONFIG["scaling"],
    )
    group_extract.add_argument(
        "--zu-exponent",
        help="Power of k normalizing Z/U (default 1/2 + gamma, (1 + gamma)/2 near Gamma_1)",
        action="store",
        type=float,
        dest="zu_exponent",
        default=DEFAULTS_FLAG_IN_CONFIG["zu_exponent"],
    )


def _init_resolution(parser: ArgumentParser) -> None:
    group_resolution = parser.add_argument_group("Resolution options")
    group_resolution.add_argument(
        "-M",
        "--points",
        help=f"Points per curve (default {DEFAULTS_FLAG_IN_CONFIG['points']})",
        action="store",
        type=int,
        dest="points",
        default=DEFAULTS_FLAG_IN_CONFIG["points"],
    )
    group_resolution.add_argument(
        "--workers",
        help="Worker processes (default 1); the output does not depend on it",
        action="store",
        type=int,
        default=DEFAULTS_FLAG_IN_CONFIG["workers"],
    )


def _init_output(parser: ArgumentParser) -> None:
    group_output = parser.add_argument_group("Output options")
    group_output.add_argument(
        "--export-dir",
        help="Export directory (default: $PAINLEVE_TAU_EXPORT_DIR or painleve-export)",
        action="store",
        dest="export_dir",
        default=DEFAULTS_FLAG_IN_CONFIG["export_dir"],
    )
    group_output.add_argument(
        "--output",
        help="Stem of the main output file",
        action="store",
        default=DEFAULTS_FLAG_IN_CONFIG["output"],
    )
    group_output.add_argument(
        "--format",
        help="Output format, csv or json (default csv)",
        action="store",
        choices=("csv", "json"),
        default=DEFAULTS_FLAG_IN_CONFIG["format"],
    )
