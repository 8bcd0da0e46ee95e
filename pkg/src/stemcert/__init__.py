"""Exact-arithmetic certificates for the first three stable homotopy stems.

The package computes, with integer and rational arithmetic wherever the
mathematics is exact, the invariants that pin down the stable homotopy
groups in degrees one to three: Adams operations on small projective
spaces and spheres, e-invariants of two-cell complexes, J-order bounds by
three independent methods, stable equivalences of stunted projective
spaces, and floating-point geometric witnesses (Hopf fiber linking,
rotation-loop monodromy) with explicit tolerances.
"""

from .derivation import (
    DerivationStep,
    StemReport,
    StepStatus,
    replay_step,
    report_from_json,
    report_to_json,
)
from .einv import (
    ObstructionCertificate,
    TwoCellModel,
    Verdict,
    conjugacy_witness,
    e_invariant,
    order_lower_bound,
    splitting_verdict,
    two_cell_from,
)
from .errors import ResamplePole, VerificationError
from .exact import BigInt, BigRational, PrimeValuation, padic_valuation, rational_reduce
from .hopf import (
    BallPoint,
    Quaternion,
    Rotation3,
    ball_to_rotation,
    fiber_curve,
    fiber_linking,
    gauss_linking,
    homotopy_H,
    hopf_map,
    lift_loop,
    loop_matrices,
    loop_point,
    matrix_path,
    qmul,
    quat_from_rot,
    rot_from_quat,
    stereographic,
)
from .jorder import (
    KOClassS2,
    KOClassS4,
    StuntedSpace,
    bernoulli,
    eta_order_chain,
    feder_gitler_equivalent,
    ko_s2_realify,
    ko_s4_relation_check,
    m_closed_form,
    m_via_bernoulli,
    nu_order_bound,
    stabilized_gcd,
    thom_space,
)
from .kring import (
    AdamsMatrix,
    RingElement,
    RingModel,
    adams,
    adams_matrix,
    laurent_to_phi,
    make_ring,
    mul,
    parse_space,
)
from .reports import build_stem_report

__version__ = "0.1.0"

__all__ = [
    "AdamsMatrix",
    "BallPoint",
    "BigInt",
    "BigRational",
    "DerivationStep",
    "KOClassS2",
    "KOClassS4",
    "ObstructionCertificate",
    "PrimeValuation",
    "Quaternion",
    "ResamplePole",
    "RingElement",
    "RingModel",
    "Rotation3",
    "StemReport",
    "StepStatus",
    "StuntedSpace",
    "TwoCellModel",
    "Verdict",
    "VerificationError",
    "adams",
    "adams_matrix",
    "ball_to_rotation",
    "bernoulli",
    "build_stem_report",
    "conjugacy_witness",
    "e_invariant",
    "eta_order_chain",
    "feder_gitler_equivalent",
    "fiber_curve",
    "fiber_linking",
    "gauss_linking",
    "homotopy_H",
    "hopf_map",
    "ko_s2_realify",
    "ko_s4_relation_check",
    "laurent_to_phi",
    "lift_loop",
    "loop_matrices",
    "loop_point",
    "m_closed_form",
    "m_via_bernoulli",
    "make_ring",
    "matrix_path",
    "mul",
    "nu_order_bound",
    "order_lower_bound",
    "padic_valuation",
    "parse_space",
    "qmul",
    "quat_from_rot",
    "rational_reduce",
    "replay_step",
    "report_from_json",
    "report_to_json",
    "rot_from_quat",
    "splitting_verdict",
    "stabilized_gcd",
    "stereographic",
    "thom_space",
    "two_cell_from",
]
