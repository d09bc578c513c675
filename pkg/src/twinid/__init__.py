"""Twin-aware identifying colorings: twin quotients, checkers, exact solvers."""

from .bounds import (
    BoundsReport,
    extend_to_quotient,
    lift_identifying,
    lift_lid,
    verify_bounds,
    verify_idcode_equality,
    verify_weighted_equivalence,
)
from .coloring import (
    Coloring,
    SetColoring,
    Violation,
    is_identifying,
    is_identifying_code,
    is_lid,
    is_rlid,
    is_weighted_identifying,
    signature,
)
from .constructions import canonical_coloring, gen_Hext, gen_HTt, gen_Hp, gen_random, random_twin_graph
from .graph import Graph, GraphError, build_graph, closed_neighborhood, parse_edge_list, write_edge_list
from .search import InstanceTooLarge, SearchLimits, SolveReport, chi, lower_bound, min_identifying_code, weighted_optimum
from .twins import QuotientResult, TwinPartition, add_twins, is_twin_free, quotient, twin_partition

__version__ = "0.1.0"
