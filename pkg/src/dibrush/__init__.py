"""Directed-graph brushing: exact solving, strategies, bounds, and tooling."""

from .bounds import (
    BoundReport,
    best_cut_lower_bound,
    bound_report,
    degree_bounds,
    pn_lower_bound,
    tree_duality_bound,
)
from .engine import BrushPlan, CleaningTrace, firing_threshold, run
from .errors import BrushingError
from .graphs import (
    Digraph,
    FamilySpec,
    build,
    classify,
    complete_digraph,
    export_dot,
    parse,
    random_dag,
    random_digraph,
    random_rooted_tree,
    rooted_tree,
    rotational_tournament,
    serialize,
    topological_order,
    transitive_tournament,
    transpose,
)
from .solver import (
    SolveResult,
    brushing_number_bruteforce,
    brushing_number_exact,
    conjecture_explorer,
)
from .strategies import (
    PathDecomposition,
    perfect_decomposition,
    plan_from_paths,
    strategy_complete,
    strategy_dag_recursive,
    strategy_rooted_tree,
    strategy_rotational,
    strategy_transitive,
    strategy_tt_minus_arc,
    transpose_plan,
    tree_leaf_count,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "BrushPlan",
    "BrushingError",
    "CleaningTrace",
    "Digraph",
    "FamilySpec",
    "PathDecomposition",
    "SolveResult",
    "best_cut_lower_bound",
    "bound_report",
    "brushing_number_bruteforce",
    "brushing_number_exact",
    "build",
    "classify",
    "complete_digraph",
    "conjecture_explorer",
    "degree_bounds",
    "export_dot",
    "firing_threshold",
    "parse",
    "perfect_decomposition",
    "plan_from_paths",
    "pn_lower_bound",
    "random_dag",
    "random_digraph",
    "random_rooted_tree",
    "rooted_tree",
    "rotational_tournament",
    "run",
    "serialize",
    "strategy_complete",
    "strategy_dag_recursive",
    "strategy_rooted_tree",
    "strategy_rotational",
    "strategy_transitive",
    "strategy_tt_minus_arc",
    "topological_order",
    "transitive_tournament",
    "transpose",
    "transpose_plan",
    "tree_duality_bound",
    "tree_leaf_count",
]
