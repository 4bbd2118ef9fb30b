"""Bit-set graph representation, vertex weights and the structural queries
shared by every stage of the solver.

Vertex sets are plain ``int`` bitmasks: bit ``i`` set means vertex ``i`` is a
member.  Intersections, unions and subset tests are therefore single integer
operations, which is what the reduction pipeline spends most of its time on.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from enum import Enum

INF = math.inf
"""Weight of a vertex that may not belong to any efficient dominating set."""


def bits(mask: int) -> Iterator[int]:
    """Yield the members of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vset(vertices: Iterable[int]) -> int:
    """Build a bitmask from an iterable of vertex ids."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> list[int]:
    return list(bits(mask))


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : iterable of (int, int)
        Undirected edges.  Self-loops and repeated edges are rejected.
    """

    __slots__ = ("_adj", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj = [0] * n
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if adj[u] >> v & 1:
                raise ValueError(f"duplicate edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            m += 1
        self._adj = tuple(adj)
        self._m = m

    @classmethod
    def from_adjacency(cls, adjacency: Sequence[int]) -> Graph:
        """Build a graph from per-vertex neighbor bitmasks."""
        n = len(adjacency)
        full = (1 << n) - 1
        for v, nb in enumerate(adjacency):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbor out of range")
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(nb):
                if not adjacency[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        g = cls.__new__(cls)
        g._adj = tuple(int(nb) for nb in adjacency)
        g._m = sum(nb.bit_count() for nb in g._adj) // 2
        return g

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    @property
    def vertices(self) -> int:
        """Mask of all vertices."""
        return (1 << len(self._adj)) - 1

    @property
    def adjacency(self) -> tuple[int, ...]:
        return self._adj

    def neighbors(self, v: int) -> int:
        return self._adj[v]

    def closed(self, v: int) -> int:
        """Closed neighborhood N[v] as a mask."""
        return self._adj[v] | (1 << v)

    def degree(self, v: int, within: int | None = None) -> int:
        nb = self._adj[v] if within is None else self._adj[v] & within
        return nb.bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nb in enumerate(self._adj):
            for v in bits(nb >> (u + 1)):
                yield u, u + 1 + v

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _check_weight(v: int, w) -> int | float:
    if w == INF:
        return INF
    if isinstance(w, bool) or int(w) != w:
        raise ValueError(f"weight of vertex {v} must be an integer or INF, got {w!r}")
    if w < 0:
        raise ValueError(f"weight of vertex {v} is negative")
    return int(w)


@dataclass(frozen=True)
class Instance:
    """A graph together with a weight in ``N ∪ {INF}`` for every vertex."""

    graph: Graph
    weights: tuple

    def __post_init__(self) -> None:
        if len(self.weights) != self.graph.n:
            raise ValueError(
                f"{len(self.weights)} weights given for {self.graph.n} vertices"
            )
        object.__setattr__(
            self, "weights", tuple(_check_weight(v, w) for v, w in enumerate(self.weights))
        )

    @classmethod
    def unit(cls, graph: Graph) -> Instance:
        return cls(graph, (1,) * graph.n)

    @property
    def n(self) -> int:
        return self.graph.n

    def weight_of(self, mask: int):
        return sum((self.weights[v] for v in bits(mask)), 0)

    def finite(self, mask: int) -> int:
        """Members of ``mask`` with finite weight."""
        w = self.weights
        out = 0
        for v in bits(mask):
            if w[v] != INF:
                out |= 1 << v
        return out

    def with_weights(self, updates: dict[int, int | float]) -> Instance:
        w = list(self.weights)
        for v, x in updates.items():
            w[v] = x
        return Instance(self.graph, tuple(w))


@dataclass(frozen=True)
class Solution:
    """An efficient dominating set and its total (finite) weight."""

    mask: int
    total_weight: int

    @property
    def vertices(self) -> list[int]:
        return members(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()


@dataclass(frozen=True)
class DistanceLevels:
    """BFS layers ``N_0(root), N_1(root), ...`` and the unreachable remainder."""

    root: int
    levels: tuple[int, ...]
    unreachable: int = 0

    def __getitem__(self, i: int) -> int:
        return self.levels[i] if i < len(self.levels) else 0

    def __len__(self) -> int:
        return len(self.levels)

    @property
    def depth(self) -> int:
        return len(self.levels) - 1


def _neighborhood(g: Graph, mask: int) -> int:
    adj = g.adjacency
    out = 0
    for v in bits(mask):
        out |= adj[v]
    return out


def distance_levels(g: Graph, v: int, within: int | None = None) -> DistanceLevels:
    """Distance levels of ``v`` in ``g`` (or in the subgraph induced by ``within``)."""
    if not 0 <= v < g.n:
        raise ValueError(f"invalid vertex {v}")
    universe = g.vertices if within is None else within
    if not universe >> v & 1:
        raise ValueError(f"vertex {v} is outside the given vertex set")
    seen = frontier = 1 << v
    levels = [frontier]
    while True:
        frontier = _neighborhood(g, frontier) & universe & ~seen
        if not frontier:
            break
        seen |= frontier
        levels.append(frontier)
    return DistanceLevels(v, tuple(levels), universe & ~seen)


def connected_components(g: Graph, s: int) -> list[int]:
    """Components of the subgraph induced by ``s``, ordered by smallest vertex."""
    comps = []
    rest = s
    while rest:
        comp = frontier = rest & -rest
        while frontier:
            frontier = _neighborhood(g, frontier) & rest & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def is_connected(g: Graph, s: int | None = None) -> bool:
    s = g.vertices if s is None else s
    return len(connected_components(g, s)) <= 1


def universal_vertices(g: Graph, s: int) -> int:
    """Vertices of ``s`` adjacent to every other vertex of ``s``."""
    out = 0
    for u in bits(s):
        if not s & ~g.closed(u):
            out |= 1 << u
    return out


def is_clique(g: Graph, s: int) -> bool:
    return all(not s & ~g.closed(u) for u in bits(s))


class Contact(Enum):
    NO_CONTACT = "no-contact"
    JOINS = "joins"
    DISTINGUISHES = "distinguishes"


def set_adjacency(g: Graph, x: int, s: int) -> Contact:
    """How vertex ``x`` (not in ``s``) sees the vertex set ``s``."""
    if s >> x & 1:
        raise ValueError(f"vertex {x} belongs to the set")
    nb = g.neighbors(x)
    if not nb & s:
        return Contact.NO_CONTACT
    if not s & ~nb:
        return Contact.JOINS
    return Contact.DISTINGUISHES


@dataclass(frozen=True)
class Verdict:
    """Outcome of :func:`verify_ed`.

    ``witness`` is the first offending vertex; ``count`` its number of
    dominators in the candidate set.  ``reason`` is one of ``"undominated"``,
    ``"overdominated"``, ``"infinite_weight"`` or ``"outside"``.
    """

    valid: bool
    total_weight: int | None = None
    witness: int | None = None
    count: int | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.valid


def verify_ed(inst: Instance, d: int, within: int | None = None) -> Verdict:
    """Check that ``d`` is a finite-weight efficient dominating set.

    With ``within`` the check is made on the induced subgraph ``G[within]``.
    """
    g = inst.graph
    universe = g.vertices if within is None else within
    stray = d & ~universe
    if stray:
        return Verdict(False, witness=lowest(stray), count=None, reason="outside")
    for u in bits(universe):
        c = (g.closed(u) & d).bit_count()
        if c != 1:
            return Verdict(
                False, witness=u, count=c, reason="undominated" if c == 0 else "overdominated"
            )
    for u in bits(d):
        if inst.weights[u] == INF:
            return Verdict(False, witness=u, count=1, reason="infinite_weight")
    return Verdict(True, total_weight=inst.weight_of(d))
