"""Exact invariants of toric hyperkaehler quotients Y(A,0).

A d x n integer weight matrix A defines a Hamiltonian action of (C*)^d on
C^{2n}; this package validates A, studies the zero fiber of the moment map
pattern by pattern, computes the invariant ring generators, the GIT chambers,
and checks the dimension and fundamental-group chain for the quotient.
"""
from .chambers import (
    Chamber,
    ChamberDecomposition,
    CoordinateSubspace,
    WeightedProjectiveSpace,
    chambers,
    distinguish,
    exceptional_fiber,
    is_semistable,
    unstable_locus,
)
from .invariants import (
    CapExceeded,
    GradingInfo,
    InvariantMonomial,
    footnote_relation,
    grading,
    hilbert_basis,
    verify_family_generators,
)
from .lattice import (
    IntMatrix,
    SignSystem,
    SNFDecomposition,
    in_rational_cone,
    kernel_basis,
    minor_dets,
    smith_normal_form,
    strict_feasible,
)
from .moment import (
    MomentMap,
    PointCoords,
    evaluate,
    jacobian_rank_at,
    sample_point,
    singular_strata,
)
from .orbits import (
    OnePS,
    OrbitType,
    StabilizerStructure,
    classify,
    origin_in_orbit_closure,
    stabilizer,
)
from .patterns import Support, SupportPattern, all_patterns
from .report import AnalysisReport, ParseError, analyze, pi1_certificate
from .torus import (
    Canonicalization,
    ValidationFailed,
    ValidationVerdict,
    WeightData,
    build,
    canonicalize_tuple,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "all_patterns",
    "AnalysisReport",
    "analyze",
    "build",
    "Canonicalization",
    "canonicalize_tuple",
    "CapExceeded",
    "Chamber",
    "ChamberDecomposition",
    "chambers",
    "classify",
    "CoordinateSubspace",
    "distinguish",
    "evaluate",
    "exceptional_fiber",
    "footnote_relation",
    "grading",
    "GradingInfo",
    "hilbert_basis",
    "in_rational_cone",
    "IntMatrix",
    "InvariantMonomial",
    "is_semistable",
    "jacobian_rank_at",
    "kernel_basis",
    "minor_dets",
    "MomentMap",
    "OnePS",
    "OrbitType",
    "origin_in_orbit_closure",
    "ParseError",
    "pi1_certificate",
    "PointCoords",
    "sample_point",
    "SignSystem",
    "singular_strata",
    "smith_normal_form",
    "SNFDecomposition",
    "stabilizer",
    "StabilizerStructure",
    "strict_feasible",
    "Support",
    "SupportPattern",
    "unstable_locus",
    "validate",
    "ValidationFailed",
    "ValidationVerdict",
    "verify_family_generators",
    "WeightData",
    "WeightedProjectiveSpace",
]
