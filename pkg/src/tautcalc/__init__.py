"""Exact calculators for twist actions on surface homology, norm-ball
polytope duality, sutured Euler characteristics, and interval holonomy."""

from .matrices import IntMatrix, det_exact
from .homology import (
    Family,
    HomologyClass,
    ImageCheck,
    SymplecticSpace,
    TwistGenerator,
    TwistWord,
    algebraic_intersection,
    extended_action_matrix,
    fixed_homology_trivial,
    genus3_action_matrix,
    image_check,
    mapping_torus_b2,
    transvection_matrix,
    word_action,
)
from .penner import (
    CurveSystem,
    FillingStatus,
    PennerReport,
    Region,
    extend_to_genus,
    filling_check,
    genus3_marked_classes,
    genus3_system,
    validate_word,
)
from .polytope import (
    CandidatePoint,
    Location,
    NormSpec,
    RatPolytope,
    Realizability,
    candidate_points,
    classify_realizability,
    covering_pullback,
    dual_norm_value,
    integral_boundary_points,
    locate,
    norm_ball_from_values,
    parity_filter,
    polar_dual,
)
from .sutured import (
    CorneredSurface,
    NovikovWitness,
    SuturedSolidTorus,
    Tangency,
    TangencyKind,
    WitnessStep,
    core_disk,
    disjoint_union,
    euler_pairing,
    is_fully_marked,
    novikov_witness,
    poincare_hopf_chi,
    sutured_chi,
)
from .holonomy import (
    Concatenation,
    ConjugacyWitness,
    PLHomeo,
    TilePattern,
    TiledHomeo,
    TileShiftMap,
    bundled_shifts,
    compose,
    is_shift,
    solve_conjugacy,
    witness_samples,
)

__version__ = "0.1.0"
