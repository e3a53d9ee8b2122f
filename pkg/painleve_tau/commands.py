"""
Subcommands of the command line tool

Each cmd_* function takes a validated RunConfig, writes its files and returns their paths.
"""
import logging
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from painleve_tau.exceptions import NumericalBreakdown, PainleveTauError, VerificationFailure
from painleve_tau.export.all_export import EXPORT_FORMATS
from painleve_tau.export.json_export import write_json
from painleve_tau.export.table import Table
from painleve_tau.geometry.curves import (
    CurveSample,
    curve_gamma_r,
    lemniscate_boundary,
    nu_hat_density,
    nu_hat_mass,
    szego_curve_z,
    unfold_curve,
    zero_attractor_curve,
)
from painleve_tau.geometry.model import ModelParams
from painleve_tau.orthopoly.orthogonal import monic_orthogonal
from painleve_tau.orthopoly.polynomial import MonicPolynomial
from painleve_tau.run_config import RunConfig
from painleve_tau.tau_fredholm import pole_free_threshold, refine_tau_zero, tau_scan
from painleve_tau.types import DeformForm
from painleve_tau.utils.naming import export_path, format_number, stem_with_suffix
from painleve_tau.verify.battery import run_checks
from painleve_tau.zeros.distance import (
    MIN_CORRECTED_K,
    compare_deform_forms,
    corrected_zero_curve,
    zero_curve_distance,
)
from painleve_tau.zeros.extraction import (
    convergence_gaps,
    extract_H,
    extract_ZU,
    omega1_zu_exponent,
)
from painleve_tau.zeros.roots import ZeroSet, polynomial_roots, unfold_roots

LOGGER = logging.getLogger("PainleveTau")


def _export(config: RunConfig, table: Table) -> List[str]:
    return EXPORT_FORMATS[config.export_format](table, **config.export_kwargs)


def curve_table(
    name: str, sample: CurveSample, metadata: Optional[Dict[str, Any]] = None
) -> Table:
    """Table re, im, residual, density_re, density_im of a curve sample

    Args:
        name (str): file stem
        sample (CurveSample): the curve
        metadata (Optional[Dict[str, Any]]): extra sidecar entries

    Returns:
        Table: the table, density cells empty when the sample carries none
    """
    if sample.density is None:
        density_re: List[Any] = [None] * len(sample)
        density_im: List[Any] = [None] * len(sample)
    else:
        density_re = sample.density.real.tolist()
        density_im = sample.density.imag.tolist()
    info: Dict[str, Any] = {
        "label": sample.label,
        "closed": sample.closed,
        "components": sample.components,
        "plane": str(sample.plane),
        "points": len(sample),
        "max_residual": float(np.max(sample.residuals)) if len(sample) else 0.0,
    }
    info.update(metadata or {})
    return Table.from_columns(
        name,
        {
            "re": sample.points.real.tolist(),
            "im": sample.points.imag.tolist(),
            "residual": sample.residuals.tolist(),
            "density_re": density_re,
            "density_im": density_im,
        },
        info,
    )


def zeros_table(name: str, zeros: ZeroSet, distances: Optional[np.ndarray] = None) -> Table:
    """Table re, im, residual (and distance) of a zero set

    Args:
        name (str): file stem
        zeros (ZeroSet): the roots
        distances (Optional[np.ndarray]): per-root distance to the limit curve

    Returns:
        Table: the table
    """
    columns: Dict[str, List[Any]] = {
        "re": zeros.roots.real.tolist(),
        "im": zeros.roots.imag.tolist(),
        "residual": zeros.residuals.tolist(),
    }
    if distances is not None:
        columns["distance"] = distances.tolist()
    return Table.from_columns(name, columns, {"k": zeros.k, "plane": str(zeros.plane)})


# region tau
###################################################################################
###################################################################################


def cmd_tau(config: RunConfig) -> List[str]:
    """Scan tau, refine its sign changes and write tau.csv with the tau.zeros.json sidecar

    Args:
        config (RunConfig): tau configuration

    Returns:
        List[str]: List of files generated
    """
    p = config.parameters
    gamma, n, epsilon = float(p["gamma"]), int(p["n"]), p.get("epsilon")
    series = tau_scan(
        gamma, n, float(p["s_min"]), float(p["s_max"]), float(p["step"]), config.workers, epsilon
    )
    refined = [refine_tau_zero(gamma, n, bracket, epsilon) for bracket in series.brackets]
    name = config.output or "tau"
    table = Table.from_columns(
        name,
        {
            "s": series.s.tolist(),
            "tau": series.tau.tolist(),
            "atan_tau": series.atan_tau.tolist(),
            "log_abs_tau": series.log_abs.tolist(),
        },
    )
    generated = _export(config, table)
    sidecar = {
        "gamma": gamma,
        "n": n,
        "epsilon": epsilon,
        "brackets": [list(bracket) for bracket in series.brackets],
        "zeros": refined,
        "s0": pole_free_threshold(),
    }
    path = export_path(f"{name}.zeros", "json", **config.export_kwargs)
    generated.append(write_json(path, sidecar))
    print(f"tau: {len(series.s)} points, {len(refined)} sign changes (gamma={gamma:g}, n={n})")
    return generated


# endregion
###################################################################################
###################################################################################
# region zeros
###################################################################################
###################################################################################


def _orthogonal_polynomial(k: int, z0: float, gamma: float, precision: Any) -> MonicPolynomial:
    try:
        return monic_orthogonal(k, z0, gamma, precision)
    except PainleveTauError:
        LOGGER.error("pi_%d could not be built; retry with a larger --precision", k)
        raise


# pylint: disable=too-many-arguments
def _corrected_curve(
    config: RunConfig,
    poly: MonicPolynomial,
    zeros: ZeroSet,
    gamma: float,
    z0: float,
    form: DeformForm,
) -> Optional[Tuple[Optional[Table], Dict[str, Any]]]:
    """Corrected curve from the extracted Z/U with the residual of each reading at the roots

    None when Z/U cannot be extracted at this k; the table is None when the chosen reading has
    no level set, which is the usual outcome of the modulus reading.
    """
    k = zeros.k
    if k < MIN_CORRECTED_K:
        return None
    try:
        zu = extract_ZU(poly, k, gamma, z0, zu_exponent=omega1_zu_exponent(gamma)).zu
        if zu is None:
            return None
        comparison = compare_deform_forms(zeros, zu)
    except PainleveTauError as exception:
        LOGGER.warning("No corrected curve at k=%d: %s", k, exception)
        return None
    info: Dict[str, Any] = {"zu_ratio": zu, "form": str(form), "deform_residuals": comparison}
    try:
        sample = corrected_zero_curve(k, gamma, zu, config.points, z0, form)
    except NumericalBreakdown as exception:
        LOGGER.warning("The %s reading has no level set at k=%d: %s", form, k, exception)
        info["traced"] = False
        return None, info
    info["traced"] = True
    name = stem_with_suffix(config.output or "zeros", f"corrected_k{k}")
    return curve_table(name, sample, info), info


def _export_unfolded(
    config: RunConfig, zeros: ZeroSet, curve: CurveSample, params: ModelParams
) -> List[str]:
    """lambda-plane roots of p_n, with the unfolded curve when z0 = 1"""
    base = config.output or "zeros"
    d = params.d
    unfolded = unfold_roots(zeros, params.t, d, params.ell)
    generated = _export(config, zeros_table(f"{base}_lambda_k{zeros.k}", unfolded))
    if abs(zeros.z0 - 1.0) < 1e-12:
        sample = unfold_curve(curve, params.t_c, d)
        generated += _export(config, curve_table(f"c_hat_d{d}", sample))
    else:
        LOGGER.info("The unfolded curve is only drawn at z0 = 1 (got %g)", zeros.z0)
    return generated


def cmd_zeros(config: RunConfig) -> List[str]:
    """Roots of pi_k, Gamma_1, the corrected curve and the distance statistics for each k

    Args:
        config (RunConfig): zeros configuration

    Returns:
        List[str]: List of files generated
    """
    p = config.parameters
    form = config.deform_form()
    base = config.output or "zeros"
    generated: List[str] = []
    written_curves = set()
    for k in config.degrees():
        params = config.model_params(k)
        poly = _orthogonal_polynomial(k, params.z0, params.gamma, p.get("precision"))
        zeros = polynomial_roots(poly)
        curve = zero_attractor_curve(params.z0, config.points)
        stats = zero_curve_distance(zeros, curve)
        curve_name = f"gamma1_z0{format_number(params.z0)}"
        if curve_name not in written_curves:
            generated += _export(config, curve_table(curve_name, curve))
            written_curves.add(curve_name)
        statistics: Dict[str, Any] = {
            "k": k,
            "d": params.d,
            "ell": params.ell,
            "t": params.t,
            "T": params.T,
            "z0": params.z0,
            "gamma": params.gamma,
            "precision": poly.digits,
            "max_root_residual": zeros.max_residual,
            "clusters": [[center, count] for center, count in zeros.multiplicities],
            "distance": stats.to_json(),
        }
        corrected = _corrected_curve(config, poly, zeros, params.gamma, params.z0, form)
        if corrected is not None:
            if corrected[0] is not None:
                generated += _export(config, corrected[0])
            statistics["corrected"] = corrected[1]
        table = zeros_table(f"{base}_k{k}", zeros, stats.distances)
        table.metadata = statistics
        generated += _export(config, table)
        if p.get("unfold"):
            generated += _export_unfolded(config, zeros, curve, params)
        print(
            f"zeros k={k}: {len(zeros)} roots, max distance to Gamma_1 "
            f"{stats.max_distance:.3e} ({stats.excluded} near z = 1 excluded)"
        )
    return generated


# endregion
###################################################################################
###################################################################################
# region curve
###################################################################################
###################################################################################


def cmd_curve(config: RunConfig) -> List[str]:
    """Sample the Szego curve, C-hat, the lemniscate or Gamma_r

    Args:
        config (RunConfig): curve configuration

    Returns:
        List[str]: List of files generated
    """
    p = config.parameters
    kind, d, t_c = p["kind"], int(p["d"]), float(p["tc"])
    metadata: Dict[str, Any] = {}
    if kind == "szego":
        sample = szego_curve_z(config.points)
        sample = sample.with_density(nu_hat_density(sample))
        metadata["mass"] = nu_hat_mass(sample)
        name = "szego"
    elif kind == "hat":
        sample = unfold_curve(szego_curve_z(config.points), t_c, d)
        metadata["mass"] = nu_hat_mass(sample, d, t_c)
        name = f"c_hat_d{d}"
    elif kind == "lemniscate":
        t = float(p["t"])
        sample = lemniscate_boundary(t, t_c, d, config.points)
        name = f"lemniscate_d{d}_t{format_number(t)}_tc{format_number(t_c)}"
    else:
        r, z0 = float(p["gamma_r"]), float(p.get("z0") or 1.0)
        sample = curve_gamma_r(r, z0, config.points)
        sample = sample.with_density(nu_hat_density(sample, z0))
        name = f"gamma_r{format_number(r)}_z0{format_number(z0)}"
    table = curve_table(config.output or name, sample, metadata)
    generated = _export(config, table)
    print(f"curve {kind}: {len(sample)} points in the {sample.plane}-plane")
    return generated


# endregion
###################################################################################
###################################################################################
# region verify
###################################################################################
###################################################################################


def cmd_verify(config: RunConfig) -> List[str]:
    """Run the verification battery and write verify.json

    Args:
        config (RunConfig): verify configuration

    Raises:
        VerificationFailure: if a check failed, after the report is written

    Returns:
        List[str]: List of files generated
    """
    results = run_checks(config.checks())
    passed = all(result.passed for result in results)
    report = {"passed": passed, "checks": [result.to_json() for result in results]}
    path = export_path(config.output or "verify", "json", **config.export_kwargs)
    generated = [write_json(path, report)]
    for result in results:
        print(f"{'PASS' if result.passed else 'FAIL'} {result.name}: {result.message}")
    if not passed:
        failed = [result.name for result in results if not result.passed]
        raise VerificationFailure(f"Failed checks: {', '.join(failed)}")
    return generated


# endregion
###################################################################################
###################################################################################
# region extract
###################################################################################
###################################################################################


def cmd_extract(config: RunConfig) -> List[str]:
    """Table of H and Z/U estimates with dispersions and k-convergence gaps

    Args:
        config (RunConfig): extract configuration

    Returns:
        List[str]: List of files generated
    """
    p = config.parameters
    rows = []
    for scaling in config.scalings():
        extracts = []
        for k in config.degrees():
            params = config.model_params(k, scaling)
            poly = _orthogonal_polynomial(k, params.z0, params.gamma, p.get("precision"))
            h_part = extract_H(poly, k, params.gamma, params.z0, scaling=scaling)
            zu_part = extract_ZU(
                poly, k, params.gamma, params.z0, scaling=scaling, zu_exponent=p.get("zu_exponent")
            )
            extracts.append(h_part.merge(zu_part))
        for extract in convergence_gaps(extracts):
            rows.append(extract.to_row())
            print(f"extract k={extract.k} S={scaling:g}: H={extract.h}, Z/U={extract.zu}")
    columns = list(rows[0]) if rows else []
    table = Table(
        config.output or "extract",
        columns,
        [[row[column] for column in columns] for row in rows],
        {"d": p["d"], "ell": p["ell"], "zu_exponent": p.get("zu_exponent")},
    )
    return _export(config, table)


# endregion
###################################################################################
###################################################################################
# region seed figures
###################################################################################
###################################################################################

# Pinned resolutions of the figure datasets
SEED_RUNS: Tuple[Tuple[str, Dict[str, Any], Dict[str, Any]], ...] = (
    (
        "tau",
        {"gamma": 0.1, "n": 30, "s_min": -8.0, "s_max": 8.0, "step": 0.02, "epsilon": None},
        {"output": "tau_gamma0.1_n30"},
    ),
    (
        "tau",
        {"gamma": 0.1, "n": 80, "s_min": -8.0, "s_max": 8.0, "step": 0.02, "epsilon": None},
        {"output": "tau_gamma0.1_n80"},
    ),
    (
        "tau",
        {"gamma": 0.1, "n": 150, "s_min": -5.0, "s_max": 30.0, "step": 0.05, "epsilon": None},
        {"output": "tau_gamma0.1_n150_extended"},
    ),
    ("curve", {"kind": "szego", "gamma_r": None, "d": 1, "t": None, "tc": 1.0, "z0": 1.0}, {}),
    ("curve", {"kind": "hat", "gamma_r": None, "d": 5, "t": None, "tc": 1.0, "z0": None}, {}),
    ("curve", {"kind": "lemniscate", "gamma_r": None, "d": 5, "t": 1.0, "tc": 1.0, "z0": None}, {}),
    ("curve", {"kind": "lemniscate", "gamma_r": None, "d": 5, "t": 0.7, "tc": 1.0, "z0": None}, {}),
    ("curve", {"kind": "lemniscate", "gamma_r": None, "d": 5, "t": 1.3, "tc": 1.0, "z0": None}, {}),
    ("curve", {"kind": "gamma_r", "gamma_r": 0.25, "d": 1, "t": None, "tc": 1.0, "z0": 1.0}, {}),
    ("curve", {"kind": "gamma_r", "gamma_r": 0.5, "d": 1, "t": None, "tc": 1.0, "z0": 1.0}, {}),
    ("curve", {"kind": "gamma_r", "gamma_r": 0.75, "d": 1, "t": None, "tc": 1.0, "z0": 1.0}, {}),
    ("curve", {"kind": "gamma_r", "gamma_r": 1.0, "d": 1, "t": None, "tc": 1.0, "z0": 1.0}, {}),
    (
        "zeros",
        {
            "d": 3,
            "ell": 0,
            "k": "40,60,70",
            "z0": 1.0,
            "t": 2.0,
            "T": None,
            "critical": False,
            "unfold": True,
            "deform_form": "real_part",
            "precision": None,
        },
        {},
    ),
    (
        "extract",
        {"d": 3, "ell": 0, "k": "40,60,70", "scaling": "0", "zu_exponent": None, "precision": None},
        {},
    ),
)

COMMANDS = {
    "tau": cmd_tau,
    "zeros": cmd_zeros,
    "curve": cmd_curve,
    "verify": cmd_verify,
    "extract": cmd_extract,
}


def seed_figures(export_dir: Optional[str] = None, workers: int = 1) -> List[str]:
    """Regenerate every figure dataset with the pinned resolutions

    Args:
        export_dir (Optional[str]): export directory
        workers (int): worker processes of the tau scans

    Returns:
        List[str]: List of files generated
    """
    generated: List[str] = []
    for subcommand, parameters, extra in SEED_RUNS:
        config = RunConfig(
            subcommand=subcommand,
            parameters=dict(parameters),
            output=extra.get("output"),
            export_dir=export_dir,
            points=1024,
            workers=workers,
        )
        config.validate()
        generated += COMMANDS[subcommand](config)
    return generated
