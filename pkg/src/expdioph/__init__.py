"""Exact certification of A^x + B^y = C^z for A = r*ell*m^2 - 1, B = (ell - r)*ell*m^2 + 1, C = ell*m."""
from .family import (
    FamilyParams,
    Instance,
    ParamsError,
    Solution,
    build_instance,
    map_corollary,
    theorem_applicable,
    validate_params,
)
from .certifier import Certificate, Verdict, brute_force_solutions, certify_grid, replay_proof

__version__ = "0.1.0"
