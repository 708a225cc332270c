"""Hopf invariant of simplicial maps S^(2n-1) -> S^n given by vertex labelings."""

__version__ = "0.1.0"

from .complex import (
    AbstractComplex,
    FundamentalCycle,
    build_complex,
    canonical_sign,
    compute_fundamental_cycle,
    enumerate_faces,
)
from .cochains import Chain, Cochain, SparseRationalMatrix, coboundary, coboundary_matrix, cup, pair
from .pullback import Labeling, OmegaChoice, TargetSphere, make_omega, pullback_omega, validate_labeling
from .linsolve import LinearSystem, assemble_system, kernel_perturbation, rank, solve_particular
from .engine import HopfOptions, HopfResult, compute_hopf, consistency_suite
from .instance import emit_instance, parse_instance
