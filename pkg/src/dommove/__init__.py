"""Dominance move (DoM) and companion quality indicators for solution sets.

Objectives are minimised. The main entry points are :func:`dominance_move`
(exact, fast for two objectives, enumeration oracle otherwise),
:func:`compare_sets`, the epsilon indicators and the 2-D hypervolume.
"""

__version__ = "0.1.0"

from .biobjective import compute_dom_2d
from .compare import UnsupportedDimension, compare_sets, dominance_move
from .core import ideal_point, move_point_to_group, move_point_to_point
from .data import fixture_path
from .generators import (
    GENERATORS,
    gen_cardinality_count_pair,
    gen_cardinality_pair,
    gen_convergence_shift,
    gen_extensity_pair,
    gen_uniformity_pair,
)
from .indicators import (
    HvConfig,
    epsilon_additive,
    epsilon_multiplicative,
    hypervolume_2d,
    hypervolume_grid_oracle,
)
from .io import ParseError, parse_points, read_points, write_points
from .model import (
    ComparisonReport,
    DimensionError,
    DomResult,
    Group,
    MergeEvent,
    MergeTrace,
    Partition,
    SolutionSet,
    ValidationError,
    make_set,
)
from .oracle import BudgetExceeded, dom_brute_force
from .pareto import (
    SetRelation,
    classify_relation,
    dominates,
    nondominated_filter,
    reduce_pair,
    weakly_dominates,
)

__all__ = [
    "BudgetExceeded",
    "ComparisonReport",
    "DimensionError",
    "DomResult",
    "GENERATORS",
    "Group",
    "HvConfig",
    "MergeEvent",
    "MergeTrace",
    "ParseError",
    "Partition",
    "SetRelation",
    "SolutionSet",
    "UnsupportedDimension",
    "ValidationError",
    "classify_relation",
    "compare_sets",
    "compute_dom_2d",
    "dom_brute_force",
    "dominance_move",
    "dominates",
    "epsilon_additive",
    "epsilon_multiplicative",
    "fixture_path",
    "gen_cardinality_count_pair",
    "gen_cardinality_pair",
    "gen_convergence_shift",
    "gen_extensity_pair",
    "gen_uniformity_pair",
    "hypervolume_2d",
    "hypervolume_grid_oracle",
    "ideal_point",
    "make_set",
    "move_point_to_group",
    "move_point_to_point",
    "nondominated_filter",
    "parse_points",
    "read_points",
    "reduce_pair",
    "weakly_dominates",
    "write_points",
]
