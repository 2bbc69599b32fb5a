"""Exact Schubert calculus on Grassmannians.

Chow rings with their Schubert bases, characteristic classes,
Hirzebruch-Riemann-Roch, and the numerical classification of rank-two Fano
bundles on the Grassmannian of lines in P^4.  All arithmetic is exact
rational; no floating point anywhere.
"""

from .partitions import (
    Box,
    Partition,
    complement,
    conjugate,
    enumerate_partitions,
    is_horizontal_strip,
    is_vertical_strip,
    lr_coefficient,
    partition,
)
from .chow import ChowClass, GrassmannRing, dual_partition, duality_pairing
from .charclass import (
    ChernVector,
    PowerSumVector,
    RankTwoData,
    chern_from_character,
    line_bundle,
    rank_two_chern,
    tangent_bundle,
    tautological_quotient,
    tautological_subbundle,
    todd_log_coefficients,
)
from .hrr import EulerPolynomial, chi_p3, euler_characteristic, euler_polynomial
from .classify import (
    BundleType,
    CandidateRecord,
    ClassificationReport,
    FilterContext,
    G14,
    ReplayMismatch,
    SectionConstraints,
    SplittingType,
    Verdict,
    enumerate_candidates,
    fano_splitting_types,
    griffiths_filter,
    positivity_filter,
    replay_proof,
    restriction_to_p3,
    schur_filter,
    schwarzenberger_filter,
    section_constraints,
    split_detect,
    split_fano_bundles,
)

__version__ = "0.1.0"

__all__ = [
    "Box",
    "BundleType",
    "CandidateRecord",
    "ChernVector",
    "ChowClass",
    "ClassificationReport",
    "EulerPolynomial",
    "FilterContext",
    "G14",
    "GrassmannRing",
    "Partition",
    "PowerSumVector",
    "RankTwoData",
    "ReplayMismatch",
    "SectionConstraints",
    "SplittingType",
    "Verdict",
    "chern_from_character",
    "chi_p3",
    "complement",
    "conjugate",
    "dual_partition",
    "duality_pairing",
    "enumerate_candidates",
    "enumerate_partitions",
    "euler_characteristic",
    "euler_polynomial",
    "fano_splitting_types",
    "griffiths_filter",
    "is_horizontal_strip",
    "is_vertical_strip",
    "line_bundle",
    "lr_coefficient",
    "partition",
    "positivity_filter",
    "rank_two_chern",
    "replay_proof",
    "restriction_to_p3",
    "schur_filter",
    "schwarzenberger_filter",
    "section_constraints",
    "split_detect",
    "split_fano_bundles",
    "tangent_bundle",
    "tautological_quotient",
    "tautological_subbundle",
    "todd_log_coefficients",
]
