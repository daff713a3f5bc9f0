"""Exact synthesis of rational motions with a prescribed plane trajectory.

The moving plane of a rational rigid-body motion sweeps a torse (a
developable surface).  This package decides which rational torses arise in
this way, computes the minimal motion degree, and constructs the motions
exactly over the rationals with dual-quaternion polynomials.
"""

from .dq import (
    DualQuat,
    DualQuatPoly,
    PlanePoly,
    PointPoly,
    Quat,
    QuatPoly,
    act_on_plane,
    act_on_point,
    dq_norm,
    involutions,
    is_motion_polynomial,
    mobius_reparametrize,
    plane_trajectory,
    qpoly_divrem,
    reduce,
    rgcd,
)
from .ring import CPoly, RPoly
from .synthesis import (
    SplitResult,
    SynthesisResult,
    complex_cofactor,
    compose_family,
    dual_solve,
    essential_equivalence,
    lambda_reduce,
    primal_solve,
    split_even_power,
    split_quadratic,
    synthesize_minimal,
    synthesize_with_cofactor,
    verify_trajectory,
)
from .torse import TorseAnalysis, analyze, canonical_representative, equalize_degrees, is_kinematic, saturation

__all__ = [
    "CPoly",
    "DualQuat",
    "DualQuatPoly",
    "PlanePoly",
    "PointPoly",
    "Quat",
    "QuatPoly",
    "RPoly",
    "SplitResult",
    "SynthesisResult",
    "TorseAnalysis",
    "act_on_plane",
    "act_on_point",
    "analyze",
    "canonical_representative",
    "complex_cofactor",
    "compose_family",
    "dq_norm",
    "dual_solve",
    "equalize_degrees",
    "essential_equivalence",
    "involutions",
    "is_kinematic",
    "is_motion_polynomial",
    "lambda_reduce",
    "mobius_reparametrize",
    "plane_trajectory",
    "primal_solve",
    "qpoly_divrem",
    "reduce",
    "rgcd",
    "saturation",
    "split_even_power",
    "split_quadratic",
    "synthesize_minimal",
    "synthesize_with_cofactor",
    "verify_trajectory",
]
