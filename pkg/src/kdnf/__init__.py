"""kdnf: exact two-level minimization of k-valued logic functions as DNFs."""

from .core import (
    CapacityError,
    Dnf,
    ElementaryConjunction,
    Interval,
    KFunction,
    PartialKFunction,
    Point,
    ValueSet,
    all_points,
    functions_equal,
    j_value,
)
from .decompose import LevelDecomposition, MaxRepresentation, decompose, max_representation, recompose
from .minimize import (
    METRIC_RANK,
    METRIC_TERMS,
    CoverInstance,
    MinimizationResult,
    RemoveStep,
    absorbs,
    absorbs_zero_free,
    absorption_witness,
    cover_instance,
    dead_end_dnfs,
    minimize_dnf,
    points_nonzero_at,
    remove_step,
    widen_nonzero,
)
from .monotone import (
    ChainShapeReport,
    ContiguousShapeReport,
    PsiEstimate,
    ValueOrder,
    chain_shape_report,
    contiguous_shape_report,
    count_monotone_exact,
    is_monotone,
    iter_monotone_functions,
    monotone_witness,
    psi_estimate,
    star_order,
    total_order,
)
from .reduce import (
    CarrierSet,
    ReducedDnf,
    is_maximal_in,
    maximal_intervals,
    reduced_dnf,
    reduced_dnf_partial,
)
from .textio import ParseError, format_term, parse_dnf, parse_function, parse_term, print_dnf, print_function

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "CarrierSet",
    "ChainShapeReport",
    "ContiguousShapeReport",
    "CoverInstance",
    "Dnf",
    "ElementaryConjunction",
    "Interval",
    "KFunction",
    "LevelDecomposition",
    "MaxRepresentation",
    "METRIC_RANK",
    "METRIC_TERMS",
    "MinimizationResult",
    "ParseError",
    "PartialKFunction",
    "Point",
    "PsiEstimate",
    "ReducedDnf",
    "RemoveStep",
    "ValueOrder",
    "ValueSet",
    "absorbs",
    "absorbs_zero_free",
    "absorption_witness",
    "all_points",
    "chain_shape_report",
    "contiguous_shape_report",
    "count_monotone_exact",
    "cover_instance",
    "dead_end_dnfs",
    "decompose",
    "format_term",
    "functions_equal",
    "is_maximal_in",
    "is_monotone",
    "iter_monotone_functions",
    "j_value",
    "max_representation",
    "maximal_intervals",
    "minimize_dnf",
    "monotone_witness",
    "parse_dnf",
    "parse_function",
    "parse_term",
    "points_nonzero_at",
    "print_dnf",
    "print_function",
    "psi_estimate",
    "recompose",
    "reduced_dnf",
    "reduced_dnf_partial",
    "remove_step",
    "star_order",
    "total_order",
    "widen_nonzero",
]
