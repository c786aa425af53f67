"""Exact enumeration, counting, and asymptotics of nonisomorphic
leaf-induced subtrees of rooted trees."""

from .asymptotics import (
    FloorMatch,
    FloorThresholdNotFound,
    GrowthStep,
    KappaBound,
    KappaResult,
    PolyRecurrence,
    complete_dary_recurrence,
    floor_formula,
    floor_match_table,
    floor_threshold,
    growth_certificate,
    growth_constant,
    kappa,
    kappa_bounds,
    log_closed_form,
)
from .enumeration import count, induced_set
from .errors import PrecisionExhaustedError, ResourceLimitError
from .extremal import (
    MinimumReport,
    ProofWitnessError,
    TreeCorpus,
    WitnessReport,
    distinguishing_witnesses,
    generate_topological,
    series_reduced_leaf_counts,
    verify_minimum,
)
from .formulas import (
    big_binomial,
    binary_caterpillar_count,
    caterpillar_count,
    complete_dary_count,
    complete_dary_sequence,
    family_count,
    star_count,
)
from .induction import InducedSet, brute_force_set, induce, leaf_subsets
from .newick import (
    NewickError,
    NewickSyntaxError,
    NewickUnsupportedError,
    parse_newick,
    to_newick,
)
from .trees import (
    CanonicalCode,
    RootedTree,
    binary_caterpillar,
    canonical_code,
    complete_dary,
    dary_caterpillar,
    join_codes,
    leaf,
    node,
    star,
    tree_from_code,
)

__version__ = "0.1.0"

__all__ = [
    "CanonicalCode",
    "FloorMatch",
    "FloorThresholdNotFound",
    "GrowthStep",
    "InducedSet",
    "KappaBound",
    "KappaResult",
    "MinimumReport",
    "NewickError",
    "NewickSyntaxError",
    "NewickUnsupportedError",
    "PolyRecurrence",
    "PrecisionExhaustedError",
    "ProofWitnessError",
    "ResourceLimitError",
    "RootedTree",
    "TreeCorpus",
    "WitnessReport",
    "big_binomial",
    "binary_caterpillar",
    "binary_caterpillar_count",
    "brute_force_set",
    "canonical_code",
    "caterpillar_count",
    "complete_dary",
    "complete_dary_count",
    "complete_dary_recurrence",
    "complete_dary_sequence",
    "count",
    "dary_caterpillar",
    "distinguishing_witnesses",
    "family_count",
    "floor_formula",
    "floor_match_table",
    "floor_threshold",
    "generate_topological",
    "growth_certificate",
    "growth_constant",
    "induce",
    "induced_set",
    "join_codes",
    "kappa",
    "kappa_bounds",
    "leaf",
    "leaf_subsets",
    "log_closed_form",
    "node",
    "parse_newick",
    "series_reduced_leaf_counts",
    "star",
    "star_count",
    "to_newick",
    "tree_from_code",
    "verify_minimum",
]
