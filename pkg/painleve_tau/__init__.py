"""
.. include:: ../README.md
"""
from .exceptions import InvalidParameters, NumericalBreakdown, PainleveTauError, QuadratureError
from .geometry import CurveSample, ModelParams
from .orthopoly import MonicPolynomial, monic_orthogonal
from .quadrature import QuadratureRule, gauss_hermite, integrate
from .run_config import RunConfig
from .tau_fredholm import TauParams, TauSeries, pole_free_threshold, tau, tau_scan
from .zeros import AsymptoticExtract, ZeroSet, extract_H, extract_ZU, polynomial_roots
