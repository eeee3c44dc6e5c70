"""Projection-forcing multisets of weight changes over finite fields."""

from .codes import (
    GeneratorMatrix,
    LinearMapSpec,
    MultiplicityVector,
    hamming_weight,
    is_projection,
    is_projection_by_matching,
    multiplicities,
    projective_weights,
    rank,
    weight_change_vector,
    weight_changes,
)
from .errors import (
    BudgetExhausted,
    DivisionByZero,
    LengthMismatch,
    NonIntegral,
    NotPrimePower,
    Overflow,
    ProjForceError,
    RankDeficient,
    SizeMismatch,
    TooLarge,
    UnsupportedOrder,
)
from .forcing import (
    DifferenceVector,
    ForcingVerdict,
    Reason,
    SearchBudget,
    SearchStats,
    Status,
    Witness,
    construct_map,
    decide,
    integral_differences,
    min_entry_bound,
    realizable,
    split_difference,
    split_difference_forcing,
)
from .gf import FieldSpec, dot, field_new
from .projgeom import (
    IncidenceSystem,
    apply_inverse,
    build_incidence,
    enumerate_points,
    num_points,
    simplex_codewords,
)
from .survey import SurveyReport, SurveySpec, enumerate_multisets, survey

__version__ = "0.1.0"
