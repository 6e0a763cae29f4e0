"""Exact desk-scale engine for graceful-labeling invariants of functional graphs."""

__version__ = "0.1.0"

from .transform import (  # noqa: E402
    FunctionalGraph,
    PermutationGroup,
    Transformation,
    adjacency_algebra_check,
    automorphism_group,
    compose,
    enumerate_semigroup,
    is_semigroup_member,
    iterate,
    left_coset_representatives,
    parse_function_literal,
)
from .labeling import beta, cycle_union, edge_label_set, fixed_point_swap, grl, is_graceful  # noqa: E402

__all__ = [
    "FunctionalGraph", "PermutationGroup", "Transformation", "adjacency_algebra_check",
    "automorphism_group", "compose", "enumerate_semigroup", "is_semigroup_member", "iterate",
    "left_coset_representatives", "parse_function_literal", "beta", "cycle_union",
    "edge_label_set", "fixed_point_swap", "grl", "is_graceful",
]
