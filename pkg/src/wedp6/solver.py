"""Minimum-weight efficient domination on P6-free graphs.

For a connected graph, pick ``v0`` of minimum degree.  Some vertex ``v`` of
``N[v0]`` is in every e.d., so each such ``v`` opens a branch in which
``N_1(v)`` and ``N_2(v)`` are excluded and the remaining choices live in
``N_3(v) ∪ N_4(v)``.  Join-reduction and component-reduction turn each
branch into unipolar residual instances, one per vertex ``q*`` that may
dominate a chosen contact vertex ``b*`` of ``N_2(v)``.

Every assembled set is verified against the input before it is kept, so a
``solved`` answer is always an e.d. regardless of the input class.  A
``no_ed`` answer is only guaranteed for P6-free inputs.
"""

from __future__ import annotations

import time
from concurrent.futures import Executor, ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .errors import ClassViolation, Infeasible
from .graph import (
    INF,
    DistanceLevels,
    Instance,
    Solution,
    bits,
    connected_components,
    distance_levels,
    verify_ed,
)
from .reduction import (
    ComponentSet,
    component_reduction,
    decoupled_components,
    find_b_star,
    join_reduction,
    unipolar_from_components,
)
from .unipolar import UnipolarStats, solve_unipolar

MAX_LEVEL = 4


@dataclass
class SolverStats:
    min_degree: int = 0
    branches: int = 0
    anchor_branches: int = 0
    reductions: int = 0
    rejected_branches: int = 0
    class_violations: int = 0
    wall_ms: float = 0.0

    def merge(self, other: SolverStats) -> None:
        self.branches += other.branches
        self.anchor_branches += other.anchor_branches
        self.reductions += other.reductions
        self.rejected_branches += other.rejected_branches
        self.class_violations += other.class_violations

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class BranchContext:
    root: int
    levels: DistanceLevels
    forced: int
    weights: tuple


@dataclass(frozen=True)
class SolverReport:
    """``status`` is ``"solved"``, ``"no_ed"`` or ``"class_violation"``."""

    status: str
    solution: Solution | None = None
    stats: SolverStats = field(default_factory=SolverStats)
    detail: str | None = None

    @property
    def weight(self) -> int | None:
        return None if self.solution is None else self.solution.total_weight


def _better(a: Solution | None, b: Solution | None) -> Solution | None:
    if b is None:
        return a
    if a is None or b.total_weight < a.total_weight:
        return b
    return a


def _unipolar(uinst, stats: SolverStats) -> Solution | None:
    ustats = UnipolarStats()
    try:
        return solve_unipolar(uinst, ustats)
    finally:
        stats.anchor_branches += ustats.anchor_branches
        stats.rejected_branches += ustats.rejected


def branch_context(inst: Instance, v: int, within: int | None = None) -> BranchContext:
    """Distance levels of ``v`` and the weights with ``N_1(v) ∪ N_2(v)`` excluded."""
    levels = distance_levels(inst.graph, v, within)
    if len(levels) > MAX_LEVEL + 1:
        raise ClassViolation(f"vertex {v} has a nonempty distance level {len(levels) - 1}")
    w = list(inst.weights)
    for x in bits(levels[1] | levels[2]):
        w[x] = INF
    return BranchContext(v, levels, 1 << v, tuple(w))


def solve_branch(
    inst: Instance, v: int, within: int | None = None, stats: SolverStats | None = None
) -> Solution | None:
    """Cheapest e.d. of ``G[within]`` containing ``v``, or ``None``."""
    if stats is None:
        stats = SolverStats()
    g = inst.graph
    universe = g.vertices if within is None else within
    stats.branches += 1
    if inst.weights[v] == INF:
        return None
    ctx = branch_context(inst, v, universe)
    levels = ctx.levels
    b = levels[2]
    a = levels[3] | levels[4]

    def accept(d: int) -> Solution | None:
        verdict = verify_ed(inst, d, within=universe)
        return Solution(d, verdict.total_weight) if verdict else None

    if not b:
        return accept(ctx.forced)

    winst = Instance(g, ctx.weights)
    stats.reductions += 1
    jr = join_reduction(winst, b, ComponentSet.from_subgraph(g, a))
    if not jr.feasible:
        return None
    winst = jr.apply(winst)
    b = jr.surviving_b
    comps = jr.components
    candidates = winst.finite(comps.union)
    for x in bits(b):
        if not g.neighbors(x) & candidates:
            return None

    active, uncontacted = [], []
    for c in comps.non_cliques:
        contacted = any(g.neighbors(x) & c for x in bits(b))
        (active if contacted else uncontacted).append(c)

    found = ctx.forced
    for sub in decoupled_components(winst, uncontacted):
        part = solve_connected(sub.instance, sub.vertices, stats)
        if part is None:
            return None
        found |= part.mask

    rest = ComponentSet.of(g, [c for c in comps if c not in uncontacted])
    if not active:
        try:
            uinst = unipolar_from_components(winst, b, rest, root=v)
        except Infeasible:
            return None
        sol = _unipolar(uinst, stats)
        return None if sol is None else accept(found | sol.mask)

    b_star, missed = find_b_star(g, b, active)
    if missed:
        raise ClassViolation(f"no vertex of N_2({v}) contacts every non-clique component")
    best = None
    for q_star in bits(g.neighbors(b_star) & candidates):
        stats.reductions += 1
        try:
            uinst = component_reduction(winst, v, b_star, q_star, rest, b)
        except Infeasible:
            continue
        sol = _unipolar(uinst, stats)
        if sol is not None:
            best = _better(best, accept(found | sol.mask))
    return best


def _branch_job(inst: Instance, v: int, within: int):
    stats = SolverStats()
    try:
        return solve_branch(inst, v, within, stats), stats, None
    except ClassViolation as exc:
        return None, stats, str(exc)


def solve_connected(
    inst: Instance,
    within: int | None = None,
    stats: SolverStats | None = None,
    executor: Executor | None = None,
) -> Solution | None:
    """Cheapest e.d. of the connected graph ``G[within]``, or ``None``.

    Raises :class:`ClassViolation` when no branch succeeded and at least one
    branch met a structure that cannot occur in a P6-free graph.
    """
    if stats is None:
        stats = SolverStats()
    g = inst.graph
    universe = g.vertices if within is None else within
    v0 = min(bits(universe), key=lambda u: (g.degree(u, universe), u))
    roots = list(bits(g.closed(v0) & universe))
    if executor is None:
        results = [_branch_job(inst, v, universe) for v in roots]
    else:
        results = list(executor.map(_branch_job, *zip(*((inst, v, universe) for v in roots))))
    best, violation = None, None
    for sol, branch_stats, err in results:
        stats.merge(branch_stats)
        if err is not None:
            stats.class_violations += 1
            violation = violation or err
        best = _better(best, sol)
    if best is None and violation is not None:
        raise ClassViolation(violation)
    return best


def solve_wed(inst: Instance, workers: int | None = None) -> SolverReport:
    """Minimum finite-weight efficient dominating set of ``inst``.

    Each connected component is solved on its own.  ``workers > 1`` spreads
    the root branches over a process pool; the result is identical to the
    sequential run.
    """
    start = time.perf_counter()
    g = inst.graph
    stats = SolverStats(min_degree=min((g.degree(v) for v in range(g.n)), default=0))
    executor = ProcessPoolExecutor(workers) if workers and workers > 1 else None
    total_mask, status, detail = 0, "solved", None
    try:
        for comp in connected_components(g, g.vertices):
            try:
                sol = solve_connected(inst, comp, stats, executor)
            except ClassViolation as exc:
                status, detail = "class_violation", str(exc)
                break
            if sol is None:
                status = "no_ed"
                break
            total_mask |= sol.mask
    finally:
        if executor is not None:
            executor.shutdown()
    solution = None
    if status == "solved":
        verdict = verify_ed(inst, total_mask)
        if not verdict:
            raise AssertionError(f"assembled solution failed verification: {verdict}")
        solution = Solution(total_mask, verdict.total_weight)
    stats.wall_ms = (time.perf_counter() - start) * 1000.0
    return SolverReport(status, solution, stats, detail)
