"""Join-reduction and component-reduction.

Both work on a split of the live vertices into a constraint side ``B``
(infinite weight, so never in the e.d.) and a candidate side ``A`` given as
a list of pairwise non-adjacent vertex sets.  Nothing is copied from the
base graph: a reduced instance is a handful of masks plus a weight tuple.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ClassViolation, Infeasible
from .graph import (
    INF,
    Graph,
    Instance,
    bits,
    connected_components,
    is_clique,
    universal_vertices,
)


@dataclass(frozen=True)
class ComponentSet:
    """Disjoint vertex sets on the candidate side, ordered by smallest vertex."""

    components: tuple[int, ...]
    clique_flags: tuple[bool, ...]

    @classmethod
    def of(cls, g: Graph, components) -> ComponentSet:
        comps = tuple(sorted((c for c in components), key=lambda c: c & -c))
        return cls(comps, tuple(is_clique(g, c) for c in comps))

    @classmethod
    def from_subgraph(cls, g: Graph, s: int) -> ComponentSet:
        return cls.of(g, connected_components(g, s))

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    @property
    def union(self) -> int:
        out = 0
        for c in self.components:
            out |= c
        return out

    @property
    def cliques(self) -> list[int]:
        return [c for c, f in zip(self.components, self.clique_flags) if f]

    @property
    def non_cliques(self) -> list[int]:
        return [c for c, f in zip(self.components, self.clique_flags) if not f]


@dataclass(frozen=True)
class JoinReductionResult:
    status: str  # "reduced" or "infeasible"
    surviving_b: int = 0
    components: ComponentSet | None = None
    weight_overlay: dict = field(default_factory=dict)
    removed: int = 0
    reason: str | None = None

    @property
    def feasible(self) -> bool:
        return self.status == "reduced"

    def apply(self, inst: Instance) -> Instance:
        return inst.with_weights(self.weight_overlay) if self.weight_overlay else inst


def join_reduction(inst: Instance, b: int, comps: ComponentSet) -> JoinReductionResult:
    """Remove every B-vertex that has a join to some component.

    A vertex joining two components is dominated twice by any e.d. (each
    component holds at least one e.d. vertex), so the instance is infeasible.
    A vertex joining exactly one component forces that component to hold
    exactly one e.d. vertex, which must then be universal for it; the
    component shrinks to its universal vertices, the vertex's neighbors in
    other components are excluded, and the vertex leaves ``B``.  Shrinking
    can create new joins, so the pass repeats until nothing changes.
    """
    g = inst.graph
    for x in bits(b):
        if inst.weights[x] != INF:
            raise ValueError(f"B-vertex {x} must have infinite weight")
    parts = list(comps.components)
    overlay: dict[int, float] = {}
    removed = 0
    left = b
    changed = True
    while changed:
        changed = False
        for x in bits(left):
            nb = g.neighbors(x)
            joined = [i for i, c in enumerate(parts) if c and not c & ~nb]
            if not joined:
                continue
            if len(joined) > 1:
                return JoinReductionResult(
                    "infeasible", reason=f"vertex {x} joins two components"
                )
            i = joined[0]
            uni = universal_vertices(g, parts[i])
            if not uni:
                return JoinReductionResult(
                    "infeasible", reason=f"component joined by {x} has no universal vertex"
                )
            removed |= parts[i] & ~uni
            parts[i] = uni
            for j, c in enumerate(parts):
                if j != i:
                    for y in bits(nb & c):
                        overlay[y] = INF
            left &= ~(1 << x)
            changed = True
    return JoinReductionResult(
        "reduced", left, ComponentSet.of(g, parts), overlay, removed
    )


def find_b_star(g: Graph, b: int, non_clique_comps) -> tuple[int | None, list[int]]:
    """B-vertex contacting the most non-clique components, and those it misses.

    On P6-free inputs the contact sets form a chain, so the returned vertex
    contacts every component that is contacted at all.
    """
    comps = list(non_clique_comps)
    best, best_hits = None, -1
    for x in bits(b):
        nb = g.neighbors(x)
        hits = sum(1 for c in comps if nb & c)
        if hits > best_hits:
            best, best_hits = x, hits
    if best is None:
        return None, comps
    nb = g.neighbors(best)
    return best, [c for c in comps if not nb & c]


@dataclass(frozen=True)
class ZWYPartition:
    z: int
    w: int
    y: int
    q_star: int
    b_star: int


def zwy_partition(g: Graph, q1: int, q_star: int, b_star: int) -> ZWYPartition:
    """Split ``q1`` into ``N[q*]``, the rest of ``N(b*)``, and the remainder."""
    if not q1 >> q_star & 1:
        raise ValueError(f"{q_star} is not in the component")
    if not g.has_edge(q_star, b_star):
        raise ValueError(f"{b_star} is not adjacent to {q_star}")
    z = g.closed(q_star) & q1
    w = q1 & g.neighbors(b_star) & ~z
    return ZWYPartition(z, w, q1 & ~(z | w), q_star, b_star)


@dataclass(frozen=True)
class UnipolarInstance:
    """Residual problem: pick one vertex per clique so every B-vertex sees one.

    ``cliques`` are pairwise non-adjacent cliques of ``base.graph``; ``b``
    holds constraint vertices of infinite weight; ``forced`` vertices are
    already committed to the e.d.  ``weights`` is the base weight vector with
    every reduction's exclusions applied.
    """

    base: Instance
    b: int
    cliques: tuple[int, ...]
    weights: tuple
    forced: int = 0
    root: int | None = None

    @classmethod
    def from_partition(cls, inst: Instance, cliques, b: int) -> UnipolarInstance:
        """Wrap a unipolar graph, excluding all of ``B`` from the e.d."""
        w = list(inst.weights)
        for x in bits(b):
            w[x] = INF
        return cls(inst, b, tuple(cliques), tuple(w))

    @property
    def graph(self) -> Graph:
        return self.base.graph

    @property
    def residual(self) -> int:
        out = self.b | self.forced
        for c in self.cliques:
            out |= c
        return out

    def weighted(self) -> Instance:
        return Instance(self.base.graph, self.weights)


def _finite(w, mask: int) -> int:
    out = 0
    for v in bits(mask):
        if w[v] != INF:
            out |= 1 << v
    return out


def _candidate_cliques(g: Graph, w, s: int) -> list[int]:
    """Universal vertices of finite weight of each component of ``g[s]``."""
    out = []
    for k in connected_components(g, s):
        cand = _finite(w, universal_vertices(g, k))
        if not cand:
            raise Infeasible("component without a finite-weight universal vertex")
        out.append(cand)
    return out


def _commit_forced(g: Graph, w: list, b: int, forced: int, cliques: list[int]):
    """Drop B-vertices seen by a forced vertex after excluding their other neighbors."""
    for x in bits(b):
        nb = g.neighbors(x)
        hits = (nb & forced).bit_count()
        if hits > 1:
            raise Infeasible(f"vertex {x} sees two forced vertices")
        if hits == 1:
            for y in bits(nb & ~forced):
                w[y] = INF
            cliques = [c & ~nb for c in cliques]
            b &= ~(1 << x)
    for c in cliques:
        if not c:
            raise Infeasible("a clique lost all its candidates")
    return b, cliques


def unipolar_from_components(
    inst: Instance, b: int, comps: ComponentSet, root: int | None = None
) -> UnipolarInstance:
    """Residual instance when every remaining component is a clique."""
    g = inst.graph
    w = list(inst.weights)
    forced = 0
    cliques = []
    for c in comps:
        cand = _finite(w, c)
        if not cand:
            raise Infeasible("clique component without a finite-weight vertex")
        if c.bit_count() == 1:
            forced |= c
        else:
            cliques.append(cand)
    b, cliques = _commit_forced(g, w, b, forced, cliques)
    return UnipolarInstance(inst, b, tuple(cliques), tuple(w), forced, root)


def component_reduction(
    inst: Instance,
    v: int,
    b_star: int,
    q_star: int,
    comps: ComponentSet,
    b: int,
) -> UnipolarInstance:
    """Reduce to a unipolar instance assuming ``q_star`` dominates ``b_star``.

    ``comps`` are the candidate-side components after join-reduction (no
    B-vertex has a join to any of them) and ``b`` the surviving B-vertices.
    Raises :class:`Infeasible` when no e.d. contains both ``v`` and
    ``q_star``.
    """
    g = inst.graph
    w = list(inst.weights)
    if w[q_star] == INF:
        raise Infeasible(f"vertex {q_star} has infinite weight")
    forced = 1 << q_star
    cliques: list[int] = []
    b_nb = g.neighbors(b_star)
    for comp, clique in zip(comps.components, comps.clique_flags):
        if comp >> q_star & 1:
            if clique:
                continue  # the rest of the clique is dominated by q_star
            part = zwy_partition(g, comp, q_star, b_star)
            if any(g.neighbors(z) & part.y for z in bits(part.z)):
                # with an e.d. through q_star every Y-component needs its own
                # e.d. vertex; a Z-Y edge rules that out on P6-free graphs
                raise Infeasible("edge between N[q*] and the far side of the component")
            for y in bits((part.z & ~forced) | part.w):
                w[y] = INF
            cliques.extend(_candidate_cliques(g, w, part.y))
        elif clique:
            cand = _finite(w, comp)
            if not cand:
                raise Infeasible("clique component without a finite-weight vertex")
            if comp.bit_count() == 1:
                forced |= comp
            else:
                cliques.append(cand)
        else:
            plus = comp & b_nb
            if not plus:
                raise ClassViolation(f"vertex {b_star} misses a non-clique component")
            for y in bits(plus):
                w[y] = INF
            cliques.extend(_candidate_cliques(g, w, comp & ~plus))
    b, cliques = _commit_forced(g, w, b, forced, cliques)
    cliques.sort(key=lambda c: c & -c)
    return UnipolarInstance(inst, b, tuple(cliques), tuple(w), forced, v)


@dataclass(frozen=True)
class SubInstance:
    """A weighted instance restricted to the vertex set ``vertices``."""

    instance: Instance
    vertices: int


def decoupled_components(inst: Instance, uncontacted) -> list[SubInstance]:
    """Independent sub-problems for non-clique components no B-vertex contacts."""
    return [SubInstance(inst, c) for c in uncontacted]
