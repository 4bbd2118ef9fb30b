"""Minimum-weight e.d. on unipolar residual instances.

The instance is a set ``B`` of infinite-weight vertices and a family of
pairwise non-adjacent cliques.  An e.d. avoiding ``B`` takes exactly one
vertex per clique (which then dominates the clique once), so what remains
is to make every B-vertex see exactly one chosen vertex.

A good vertex ``b*`` of the overtake graph must be dominated by some
neighbor ``a*``; fixing ``a*`` removes ``N(b*)`` from all other cliques and
leaves at most three cliques that any B-vertex can still tell apart.  Those
are enumerated; every other clique takes its cheapest vertex.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter

from .errors import ClassViolation
from .graph import INF, Graph, Instance, Solution, bits, verify_ed
from .reduction import UnipolarInstance

OVERTAKE_THRESHOLD = 3
MAX_DISTINGUISHED = 3


@dataclass(frozen=True)
class OvertakeGraph:
    nodes: int
    succ: dict = field(default_factory=dict)  # vertex -> mask of out-neighbors

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in bits(self.nodes) for v in bits(self.succ.get(u, 0))]

    def out_degree(self, v: int) -> int:
        return self.succ.get(v, 0).bit_count()

    def is_acyclic(self) -> bool:
        ts = TopologicalSorter({u: set(bits(self.succ.get(u, 0))) for u in bits(self.nodes)})
        try:
            ts.prepare()
        except CycleError:
            return False
        return True


def _overtakes(g: Graph, b1: int, b2: int, clique: int) -> bool:
    rest = clique & ~g.neighbors(b1)
    if rest.bit_count() < 2:
        return False
    nb2 = g.neighbors(b2)
    return bool(rest & nb2) and bool(rest & ~nb2)


def overtake_graph(g: Graph, b: int, cliques) -> OvertakeGraph:
    nontrivial = [c for c in cliques if c.bit_count() >= 2]
    succ = {}
    for b1 in bits(b):
        out = 0
        for b2 in bits(b & ~(1 << b1)):
            hits = 0
            for c in nontrivial:
                if _overtakes(g, b1, b2, c):
                    hits += 1
                    if hits >= OVERTAKE_THRESHOLD:
                        out |= 1 << b2
                        break
        succ[b1] = out
    return OvertakeGraph(b, succ)


def build_overtake_graph(inst: UnipolarInstance) -> OvertakeGraph:
    """Edge ``b1 -> b2`` when ``b2`` overtakes ``b1`` on at least three cliques.

    ``b2`` overtakes ``b1`` for a clique ``K`` when it has both a neighbor and
    a non-neighbor in ``K - N(b1)``; inside a clique that is an edge
    distinguished by ``b2``.
    """
    return overtake_graph(inst.graph, inst.b, inst.cliques)


def good_vertex(h: OvertakeGraph) -> int | None:
    """Smallest vertex of out-degree zero; ``None`` for an empty graph."""
    if not h.nodes:
        return None
    for v in bits(h.nodes):
        if not h.succ.get(v, 0):
            return v
    raise ClassViolation("overtake graph has no sink, so it contains a cycle")


def classify_components(g: Graph, cliques, b: int) -> tuple[list[int], list[int]]:
    """Split cliques into those no B-vertex distinguishes and the rest."""
    c1, c2 = [], []
    adj = g.adjacency
    for c in cliques:
        split = any(adj[x] & c and c & ~adj[x] for x in bits(b))
        (c2 if split else c1).append(c)
    return c1, c2


def _settle(g: Graph, b: int, cliques: list[int], forced: int):
    """Propagate forced vertices and joins until stable.

    Returns the surviving ``(b, cliques, forced)`` or ``None`` if some
    B-vertex can no longer be dominated exactly once.
    """
    adj = g.adjacency
    while True:
        changed = False
        kept = []
        for c in cliques:
            if not c:
                return None
            if c & (c - 1):
                kept.append(c)
            else:
                forced |= c
                changed = True
        cliques = kept
        for x in bits(b):
            nb = adj[x]
            seen = (nb & forced).bit_count()
            if seen > 1:
                return None
            if seen == 1:
                cliques = [c & ~nb for c in cliques]
            else:
                joined = [i for i, c in enumerate(cliques) if not c & ~nb]
                if len(joined) > 1:
                    return None
                if not joined:
                    if not any(nb & c for c in cliques):
                        return None
                    continue
                i = joined[0]
                cliques = [c if j == i else c & ~nb for j, c in enumerate(cliques)]
            b &= ~(1 << x)
            changed = True
        if not changed:
            return b, cliques, forced


def _cheapest(w, c: int) -> int:
    return min(bits(c), key=lambda v: (w[v], v))


@dataclass
class UnipolarStats:
    anchor_branches: int = 0
    rejected: int = 0
    max_distinguished: int = 0
    accepted_distinguished: list = field(default_factory=list)


def solve_unipolar(inst: UnipolarInstance, stats: UnipolarStats | None = None) -> Solution | None:
    """Minimum finite-weight e.d. of the residual graph avoiding ``B``.

    Returns ``None`` when there is none.  Raises :class:`ClassViolation` if
    the overtake graph has no sink.
    """
    if stats is None:
        stats = UnipolarStats()
    g = inst.graph
    w = inst.weights
    adj = g.adjacency
    if any(w[v] == INF for v in bits(inst.forced)):
        return None
    cliques = []
    for c in inst.cliques:
        cand = c & ~inst.b
        cand = sum(1 << v for v in bits(cand) if w[v] != INF)
        cliques.append(cand)
    settled = _settle(g, inst.b, cliques, inst.forced)
    if settled is None:
        return None
    b, cliques, forced = settled

    best_mask, best_weight = None, INF
    if not b:
        best_mask = forced
        for c in cliques:
            best_mask |= 1 << _cheapest(w, c)
        best_weight = sum(w[v] for v in bits(best_mask))
    else:
        b_star = good_vertex(overtake_graph(g, b, cliques))
        star_nb = adj[b_star]
        for a_star in bits(star_nb & sum(cliques)):
            stats.anchor_branches += 1
            branch = [1 << a_star if c >> a_star & 1 else c & ~star_nb for c in cliques]
            settled = _settle(g, b, branch, forced)
            if settled is None:
                continue
            b2, cl2, f2 = settled
            c1, c2 = classify_components(g, cl2, b2)
            stats.max_distinguished = max(stats.max_distinguished, len(c2))
            if len(c2) > MAX_DISTINGUISHED:
                stats.rejected += 1
                continue
            stats.accepted_distinguished.append(len(c2))
            fixed = f2
            for c in c1:
                fixed |= 1 << _cheapest(w, c)
            fixed_weight = sum(w[v] for v in bits(fixed))
            checks = [adj[x] for x in bits(b2)]
            for combo in itertools.product(*(list(bits(c)) for c in c2)):
                d = fixed
                total = fixed_weight
                for v in combo:
                    d |= 1 << v
                    total += w[v]
                if total >= best_weight:
                    continue
                if all((nb & d).bit_count() == 1 for nb in checks):
                    best_mask, best_weight = d, total
    if best_mask is None:
        return None
    verdict = verify_ed(Instance(g, w), best_mask, within=inst.residual)
    if not verdict:
        raise AssertionError(f"residual solution failed verification: {verdict}")
    return Solution(best_mask, int(best_weight))
