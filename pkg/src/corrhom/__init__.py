"""Correspondence homomorphisms: classification, exact and polynomial solvers."""

from .classifier import Classification, ShapeCase, classify, detect_shape
from .engines import ENGINES, solve_auto
from .errors import (
    CorrHomError,
    DomainMismatch,
    InternalError,
    NonAffineList,
    NotApplicable,
    ParseError,
    RetriesExhausted,
    ShapeMismatch,
    TargetMismatch,
    ValidationError,
)
from .model import (
    Edge,
    Instance,
    Permutation,
    TargetGraph,
    build_auxiliary,
    check_assignment,
    is_accepted,
    load_instance,
    load_target,
    make_instance,
    permutation_compose,
    permutation_invert,
)
from .oracle import SearchLimits, Verdict, count_solutions, solve_exact

__all__ = [
    "ENGINES",
    "Classification",
    "CorrHomError",
    "DomainMismatch",
    "Edge",
    "Instance",
    "InternalError",
    "NonAffineList",
    "NotApplicable",
    "ParseError",
    "Permutation",
    "RetriesExhausted",
    "SearchLimits",
    "ShapeCase",
    "ShapeMismatch",
    "TargetGraph",
    "TargetMismatch",
    "ValidationError",
    "Verdict",
    "build_auxiliary",
    "check_assignment",
    "classify",
    "count_solutions",
    "detect_shape",
    "is_accepted",
    "load_instance",
    "load_target",
    "make_instance",
    "permutation_compose",
    "permutation_invert",
    "solve_auto",
    "solve_exact",
]
