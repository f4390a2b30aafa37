"""Tropical (max-times) linear algebra and pairwise-comparison decision engine."""

from .core import (
    DimensionMismatchError,
    NoPositiveSolutionError,
    Tolerance,
    TrExceedsOneError,
    as_matrix,
    as_vector,
    conjugate,
    conjugate_transpose,
    identity,
    kleene_star,
    oplus,
    otimes,
    quad_form,
    scalar_eq,
    spectral_radius,
    tr_sum,
    trop_matmul,
    trop_power,
    trop_trace,
)
from .geometry import (
    SectionPlot,
    hilbert_seminorm,
    is_collinear,
    reduce_generators,
    section_at_unit_last_coord,
    tropical_segment,
)
from .optimize import (
    SolutionCone,
    max_hilbert_over_span,
    max_ratio,
    min_hilbert_constrained,
    min_hilbert_over_kleene_cone,
    min_pseudo_quadratic,
    min_weighted_pseudo_quadratic,
    solve_subeigen,
)
from .ahp import (
    DecisionProblem,
    FixedWeightSolution,
    Ranking,
    SolveReport,
    ValidationResult,
    WeightCone,
    assemble_combined,
    classic_ahp_baseline,
    combine_rankings,
    consistency_index,
    derive_weight_cone,
    rank,
    solve,
    solve_fixed_weights,
    validate_reciprocal,
)
from .documents import (
    DocumentError,
    ProblemDocument,
    emit_problem,
    emit_report,
    load_matrix,
    load_problem,
    load_problem_document,
    render_report_text,
    report_geometry,
    report_to_document,
)

__version__ = "0.1.0"
