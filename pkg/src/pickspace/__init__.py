"""Model spaces among finite dimensional complete Pick spaces."""

from .errors import *  # noqa: F401,F403
from .gram import (
    DEFAULT_TOL,
    RescalingWitness,
    Tolerances,
    are_rescalings,
    as_gram,
    delta_matrix,
    delta_pair,
    delta_via_projections,
    dual_gram,
    regular_subspace,
    rescale,
)
from .hyperbolic import (
    BallAutomorphism,
    automorphism_to_origin,
    congruent_sets,
    in_single_geodesic,
    pseudohyperbolic,
    pseudohyperbolic_matrix,
    triples_in_geodesics,
)
from .pick import (
    PickRealization,
    blaschke_derivative_at_zero,
    blaschke_eval,
    conjugate_zeros,
    da_gram,
    is_complete_pick,
    model_conjugation_matrix,
    model_gram,
    realize_in_ball,
)
from .multipliers import (
    ExtremalSolution,
    extremal_value_bisection_oracle,
    extremal_vanishing_multiplier,
    gleason_delta,
    idempotent_norm,
    multiplier_norm,
)
from .conjugation import (
    OrthogonalityReport,
    conjugation_from_orthogonal,
    dual_gram_of_subspace,
    is_orthogonal_gram,
    orthogonality_hereditary_check,
    r_orthogonality_witness,
    rescale_to_orthogonal,
)
from .classify import ClassificationReport, classify_gram, classify_points, dual_membership_probe

__version__ = "0.1.0"
