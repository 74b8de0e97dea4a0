"""Exact symbolic workbench for the deformed Euclidean quantum group E_l(2)."""

from .scalar import GaussianRational, ParamScalar, PoleAtZeroError
from .funalg import FElement, a1, a2, th
from .envalg import E, J, P1, P2, UElement, ell_action, lambda_action, named_element, u_f_pairing
from .qplane import PlaneElement, chi, chibar, plane_from_f, plane_lambda, plane_to_f
from .schrodinger import AngularSpec, PlaneWaveSpec, angular_state, plane_wave_state
from .classical import classical_oracle, limit_compare, z0_limit
from .report import EigenReport, LimitReport, VerificationReport

__all__ = [
    "GaussianRational", "ParamScalar", "PoleAtZeroError",
    "FElement", "a1", "a2", "th",
    "E", "J", "P1", "P2", "UElement", "ell_action", "lambda_action", "named_element", "u_f_pairing",
    "PlaneElement", "chi", "chibar", "plane_from_f", "plane_lambda", "plane_to_f",
    "AngularSpec", "PlaneWaveSpec", "angular_state", "plane_wave_state",
    "classical_oracle", "limit_compare", "z0_limit",
    "EigenReport", "LimitReport", "VerificationReport",
]
