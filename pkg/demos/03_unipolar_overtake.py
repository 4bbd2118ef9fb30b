"""
The unipolar residual problem and its overtake graph.
"""

from wedp6 import (
    UnipolarInstance,
    bits,
    brute_force_wed,
    build_overtake_graph,
    good_vertex,
    solve_unipolar,
    unipolar_instance,
)
from wedp6.unipolar import UnipolarStats

## A random unipolar graph
# B is a clique of infinite-weight vertices; A is a disjoint union of cliques.
inst, cliques, b = unipolar_instance(14, 0.3, seed=7, weight_range=(1, 50), n_b=4)
print("B =", list(bits(b)))
print("cliques:", [list(bits(c)) for c in cliques])
u = UnipolarInstance.from_partition(inst, cliques, b)

## Overtake graph
# b1 -> b2 when b2 splits what b1 leaves of at least three cliques.
h = build_overtake_graph(u)
print("edges:", h.edges)
print("acyclic:", h.is_acyclic(), " good vertex:", good_vertex(h))

## Solve and compare with exhaustive exact cover
stats = UnipolarStats()
sol = solve_unipolar(u, stats)
ref = brute_force_wed(u.weighted())
print("solver:", None if sol is None else sol.total_weight,
      " oracle:", None if ref is None else ref.total_weight)
print("anchor branches", stats.anchor_branches,
      " distinguished cliques per accepted branch", stats.accepted_distinguished)
