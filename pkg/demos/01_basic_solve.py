"""
Solving a few small weighted instances and checking the answers.
"""

from wedp6 import INF, Graph, Instance, solve_wed, verify_ed

## A path on four vertices
# The only efficient dominating set takes both endpoints.
p4 = Instance.unit(Graph(4, [(0, 1), (1, 2), (2, 3)]))
report = solve_wed(p4)
print(report.status, report.solution.vertices, report.weight)

## Weights change the answer
# On a 6-cycle every e.d. is a pair of opposite vertices.  With weights
# 1..6 the cheapest pair is {0, 3}.
c6 = Graph(6, [(i, (i + 1) % 6) for i in range(6)])
report = solve_wed(Instance(c6, (1, 2, 3, 4, 5, 6)))
print("C6 weighted:", report.solution.vertices, report.weight)

## Infinite weight excludes a vertex
# Forbid vertex 0 and the solver moves to the next pair.
report = solve_wed(Instance(c6, (INF, 2, 3, 4, 5, 6)))
print("C6 without 0:", report.solution.vertices, report.weight)

## Graphs without an e.d.
# Every vertex of C4 would need to be dominated exactly once, which no
# subset manages.
c4 = Instance.unit(Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))
print("C4:", solve_wed(c4).status)

## Every answer carries a checkable certificate
v = verify_ed(p4, 0b0110)
print("is {1,2} an e.d. of P4?", v.valid, "witness", v.witness, "dominated", v.count, "times")

## Solver counters
print(report.stats.as_dict())
