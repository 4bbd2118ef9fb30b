"""
One root branch of the solver, step by step.

The solver guesses a vertex v of the e.d., excludes its first two distance
levels, trims the third and fourth levels with join reduction and hands
what is left to the unipolar solver.
"""

from wedp6 import Graph, Instance, bits, brute_force_wed, is_p6_free, solve_branch, solve_wed
from wedp6.reduction import ComponentSet, find_b_star, join_reduction
from wedp6.solver import branch_context

# 0 - 1 - {2, 3}; vertex 2 sees all of the triangle {4, 5, 6} and also 7;
# 3 sees 8 and the pendant edge 9 - 10
edges = [(0, 1), (1, 2), (1, 3), (2, 3), (2, 4), (2, 5), (2, 6), (4, 5), (4, 6), (5, 6),
         (2, 7), (7, 8), (3, 8), (3, 9), (9, 10)]
inst = Instance(Graph(11, edges), (1, 1, 1, 1, 5, 2, 3, 1, 1, 1, 1))
g = inst.graph
print("P6-free:", is_p6_free(g), " n =", g.n, " m =", g.m)

## Distance levels from a root
v = 0
ctx = branch_context(inst, v)
for i, level in enumerate(ctx.levels.levels):
    print(f"N{i}({v}) =", list(bits(level)))

## N1 and N2 are excluded; N2 becomes the constraint side B
b = ctx.levels[2]
a = ctx.levels[3] | ctx.levels[4]
winst = Instance(g, ctx.weights)
comps = ComponentSet.from_subgraph(g, a)
print("components of N3 u N4:", [list(bits(c)) for c in comps])

## Join reduction
# A B-vertex adjacent to a whole component must be dominated there, by a
# universal vertex of that component; everything else it sees is excluded.
jr = join_reduction(winst, b, comps)
print("status:", jr.status, " surviving B:", list(bits(jr.surviving_b)))
print("newly excluded:", sorted(jr.weight_overlay))

## The anchor b*
active = [c for c in jr.components.non_cliques
          if any(g.neighbors(x) & c for x in bits(jr.surviving_b))]
if active:
    b_star, missed = find_b_star(g, jr.surviving_b, active)
    print("b* =", b_star, " misses", len(missed), "components")
else:
    print("all remaining components are cliques, so no anchor is needed")

## The whole branch at once
sol = solve_branch(inst, v)
print("best e.d. through", v, ":", sol.vertices, "weight", sol.total_weight)
print("whole instance:", solve_wed(inst).solution.vertices,
      " oracle:", brute_force_wed(inst).vertices)
