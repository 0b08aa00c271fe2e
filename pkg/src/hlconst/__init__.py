"""Optimal Hardy-Littlewood constants for 2-homogeneous polynomials on l_p(R^2)."""

from .polynomial import QuadForm, evaluate, coeff_norm
from .lp_geometry import SpaceParams, sphere_point, sup_norm, sup_norm_many, sup_norm_oracle
from .extremals import (
    Family,
    ExtremePoly,
    diagonal_extreme,
    offdiagonal_extreme,
    validate_extreme,
)
from .constants import (
    ConstantResult,
    Method,
    Mode,
    constant,
    critical_exponent,
    diagonal_objective,
    offdiag_objective,
    g_function,
    g_derivative,
    g_derivative_root,
    positivity_776_check,
)
from .verify import VerificationReport, check_hl_inequality, check_sharpness, random_quadform
from .verdict import Verdict

__version__ = "0.1.0"
