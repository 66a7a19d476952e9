"""Exact diagram calculus for the LMO invariant in low degree and the
Casson-Walker-Lescop invariant of surgery on algebraically split links."""

from .diagrams import Character, CharCombo, canonicalize, disjoint_union
from .generators import LegBudget, exp_truncated, hbar, strut, theta, tripod, wheel2
from .lescop import lambda_b2, lambda_connected_sum, lambda_surgery
from .lmo import b_coefficient, c_of_l, h_n, iota1_check, log_character, u_constant, z1, zn_b2
from .pairing import PairingContext, big_j, iota_n, little_j, theta_power_coefficient
from .surgery import SurgeryPresentation, derived_stats, normalize_b2, parse_presentation

__version__ = "0.1.0"

__all__ = [
    "Character", "CharCombo", "canonicalize", "disjoint_union",
    "LegBudget", "exp_truncated", "hbar", "strut", "theta", "tripod", "wheel2",
    "lambda_b2", "lambda_connected_sum", "lambda_surgery",
    "b_coefficient", "c_of_l", "h_n", "iota1_check", "log_character", "u_constant", "z1", "zn_b2",
    "PairingContext", "big_j", "iota_n", "little_j", "theta_power_coefficient",
    "SurgeryPresentation", "derived_stats", "normalize_b2", "parse_presentation",
]
