"""Benchmark library for subset selection on many-objective point sets.

Candidate sets live in [0, 1]^m with every objective minimized.  The
package covers sampling synthetic fronts, exact and direction-sampled
hypervolume, coverage indicators, ten subset selectors, and a benchmark
harness with rank aggregation.
"""
from .core import (
    Deadline,
    PointSet,
    Seed,
    SelectionResult,
    dominates,
    ideal_nadir,
    nondominated_filter,
    reference_point,
)
from .sampler import GENERATOR_NAME, FrontKind, FrontSpec, generate_front, surface_residual
from .hypervolume import (
    DirectionVectorSet,
    exclusive_hv,
    generate_directions,
    hv_contribution,
    hv_contribution_approx,
    hv_exact,
)
from .indicators import eps_plus, igd, igd_plus, uniformity
from .refvectors import (
    ReferenceVectorSet,
    das_dennis,
    default_k,
    default_reference_vectors,
    two_layer,
)
from .greedy import ApproxHypervolumeGain, CoverageGain, HypervolumeGain, lazy_greedy
from .selectors import (
    RANDOMIZED_METHODS,
    SELECTORS,
    run_selector,
    select_css_means,
    select_css_medoids,
    select_dss,
    select_gahss,
    select_ghss,
    select_gigdpss,
    select_gigdss,
    select_idss,
    select_rvss,
)

__version__ = "0.1.0"

__all__ = [
    "ApproxHypervolumeGain",
    "CoverageGain",
    "Deadline",
    "DirectionVectorSet",
    "FrontKind",
    "FrontSpec",
    "GENERATOR_NAME",
    "HypervolumeGain",
    "PointSet",
    "RANDOMIZED_METHODS",
    "ReferenceVectorSet",
    "SELECTORS",
    "Seed",
    "SelectionResult",
    "das_dennis",
    "default_k",
    "default_reference_vectors",
    "dominates",
    "eps_plus",
    "exclusive_hv",
    "generate_directions",
    "generate_front",
    "hv_contribution",
    "hv_contribution_approx",
    "hv_exact",
    "ideal_nadir",
    "igd",
    "igd_plus",
    "lazy_greedy",
    "nondominated_filter",
    "reference_point",
    "run_selector",
    "select_css_means",
    "select_css_medoids",
    "select_dss",
    "select_gahss",
    "select_ghss",
    "select_gigdpss",
    "select_gigdss",
    "select_idss",
    "select_rvss",
    "surface_residual",
    "two_layer",
    "uniformity",
    "__version__",
]
