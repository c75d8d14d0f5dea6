"""Graded attribute implications over finite residuated chains.

Bases of fuzzy attribute implications: least-model closure, entailment,
redundancy, the witnessing transform, pseudo-intent systems of formal
L-contexts and a graph-based baseline for computing them.
"""

from __future__ import annotations

from .algebra import Chain, Degree, ValidationReport, parse_algebra, validate
from .basebuild import (
    BaseResult,
    PseudoIntentSystem,
    TransformResult,
    WitnessReport,
    base_from_context,
    find_order,
    is_saturated,
    normalize,
    saturate,
    verify_system,
    witness_check,
    witness_transform,
)
from .context import FormalContext, density, intent_closure, is_complete, truth_in_context
from .errors import (
    CapacityError,
    ChainMismatchError,
    FuzzyImplError,
    InvalidHedgeError,
    ParseError,
    PreconditionError,
    UniverseMismatchError,
)
from .fuzzyset import FuzzySet, Universe, format_set, intersect, parse_set, scalar_tensor, subsethood, union
from .graphmethod import PseudoGraph, build_graph, enumerate_systems, pred
from .implications import (
    Implication,
    Theory,
    close,
    entail_degree,
    entails,
    equivalent,
    is_model,
    is_nonredundant,
    is_redundant,
    parse_implication,
    remove_redundancy,
    truth_in_model,
)

__all__ = [
    "BaseResult",
    "CapacityError",
    "Chain",
    "ChainMismatchError",
    "Degree",
    "FormalContext",
    "FuzzyImplError",
    "FuzzySet",
    "Implication",
    "InvalidHedgeError",
    "ParseError",
    "PreconditionError",
    "PseudoGraph",
    "PseudoIntentSystem",
    "Theory",
    "TransformResult",
    "Universe",
    "UniverseMismatchError",
    "ValidationReport",
    "WitnessReport",
    "base_from_context",
    "build_graph",
    "close",
    "density",
    "entail_degree",
    "entails",
    "enumerate_systems",
    "equivalent",
    "find_order",
    "format_set",
    "intent_closure",
    "intersect",
    "is_complete",
    "is_model",
    "is_nonredundant",
    "is_redundant",
    "is_saturated",
    "normalize",
    "parse_algebra",
    "parse_implication",
    "parse_set",
    "pred",
    "remove_redundancy",
    "saturate",
    "scalar_tensor",
    "subsethood",
    "truth_in_context",
    "truth_in_model",
    "union",
    "validate",
    "verify_system",
    "witness_check",
    "witness_transform",
]
