"""Status sequences of trees: computation, realization and partitions."""

from .errors import (
    CapExceeded,
    GraphError,
    InstanceError,
    NotInjectiveError,
    NotRealizable,
    StructureError,
)
from .graph import (
    Graph,
    Tree,
    TreeMetrics,
    all_pairs_distances,
    distinct_status_count,
    edge_split,
    is_status_injective,
    median_path_is_increasing,
    metrics,
    status,
    status_sequence,
    statuses,
    tree_statuses,
)
from .oracle import canonical_form, enumerate_free_trees, realize_exhaustive, status_unique_in_trees
from .realize import Realization, realize_injective, verify_realization

__all__ = [
    "CapExceeded",
    "Graph",
    "GraphError",
    "InstanceError",
    "NotInjectiveError",
    "NotRealizable",
    "Realization",
    "StructureError",
    "Tree",
    "TreeMetrics",
    "all_pairs_distances",
    "canonical_form",
    "distinct_status_count",
    "edge_split",
    "enumerate_free_trees",
    "is_status_injective",
    "median_path_is_increasing",
    "metrics",
    "realize_exhaustive",
    "realize_injective",
    "status",
    "status_sequence",
    "status_unique_in_trees",
    "statuses",
    "tree_statuses",
    "verify_realization",
]
