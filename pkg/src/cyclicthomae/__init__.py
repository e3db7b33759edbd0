"""Cyclic covers of the projective line: periods, theta values, Thomae-type identities."""

from .curve import CurveSpec, RamificationData, CurveError, validate_curve
from .divisors import BetaVector, tau_profile, enumerate_admissible

__all__ = [
    "CurveSpec",
    "RamificationData",
    "CurveError",
    "validate_curve",
    "BetaVector",
    "tau_profile",
    "enumerate_admissible",
]

__version__ = "0.1.0"
