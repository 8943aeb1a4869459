"""Hyperplane sections of the simplex, cross-polytope and cube."""

from .bodies import (
    Body,
    Canonical,
    ConstantsTable,
    Direction,
    Functional,
    Kind,
    Regime,
    RegimeTag,
    SectionQuery,
    canonical_direction,
    face_lattice,
    make_direction,
    regime_check,
    sample_direction,
    thresholds,
)
from .closed_form import (
    SectionValue,
    analytic_A_integral,
    analytic_P_integral,
    closed_A,
    closed_P,
    extremal_value,
    maximizer_direction,
)
from .errors import (
    DimensionMismatch,
    DimensionOutOfRange,
    DomainError,
    InsufficientHits,
    NoFlipFound,
    NotCritical,
    NotIntegrable,
    PolysectError,
    QuadratureFailure,
    RegimeViolation,
    ResourceLimit,
    UnknownId,
    UnknownSuite,
    Unsupported,
    ZeroVector,
)
from .extrema import (
    Classification,
    CriticalPoint,
    ThresholdReport,
    canonical_form,
    classify,
    crosspoly_phi,
    second_order_coefficient,
    sphere_maximize,
    structured_critical_points,
    threshold_scan,
)
from .oracle import (
    Estimate,
    SectionPolytope,
    cap_volume,
    perimeter_exact,
    rational_product_integral,
    section_vertices,
    section_volume_exact,
    section_volume_mc,
    sinc_product_integral,
)
from .report import (
    COUNTEREXAMPLE_IDS,
    SUITE_IDS,
    CaseRecord,
    Report,
    SuiteConfig,
    counterexample,
    emit,
    render_plot,
    run_suite,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
