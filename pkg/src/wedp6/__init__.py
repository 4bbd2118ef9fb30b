"""Minimum-weight efficient dominating sets in P6-free graphs."""

from .errors import ClassViolation, Infeasible, InstanceFormatError
from .graph import (
    INF,
    Contact,
    DistanceLevels,
    Graph,
    Instance,
    Solution,
    Verdict,
    bits,
    connected_components,
    distance_levels,
    is_clique,
    members,
    set_adjacency,
    universal_vertices,
    verify_ed,
    vset,
)
from .oracle import brute_force_wed, enumerate_eds, gen_instance, unipolar_instance
from .recognition import check_unipolar, find_induced_p6, is_p6_free
from .reduction import UnipolarInstance
from .solver import SolverReport, solve_branch, solve_connected, solve_wed
from .unipolar import build_overtake_graph, good_vertex, solve_unipolar

__version__ = "0.1.0"
