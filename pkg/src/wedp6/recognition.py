"""Induced-P6 detection and unipolar partition checks."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits, connected_components, lowest

P6_LENGTH = 6


def find_induced_p6(g: Graph) -> tuple[int, ...] | None:
    """Return six vertices inducing a path, in path order, or ``None``.

    Induced paths are grown one endpoint at a time; a new endpoint must be
    adjacent to the current end and to no earlier path vertex.
    """
    adj = g.adjacency

    def extend(path: list[int], inner: int) -> tuple[int, ...] | None:
        # inner: path vertices other than the current end
        if len(path) == P6_LENGTH:
            return tuple(path)
        end = path[-1]
        blocked = inner | (1 << end)
        for x in bits(adj[end] & ~blocked):
            if adj[x] & inner:
                continue
            path.append(x)
            found = extend(path, blocked)
            if found:
                return found
            path.pop()
        return None

    for s in range(g.n):
        found = extend([s], 0)
        if found:
            return found
    return None


def is_p6_free(g: Graph) -> bool:
    return find_induced_p6(g) is None


@dataclass(frozen=True)
class UnipolarVerdict:
    valid: bool
    witness: tuple[int, ...] = ()
    kind: str | None = None  # "p3" or "non-edge"

    def __bool__(self) -> bool:
        return self.valid


def check_unipolar(g: Graph, a: int, b: int) -> UnipolarVerdict:
    """Check that ``g[a]`` is a disjoint union of cliques and ``g[b]`` complete.

    ``a`` and ``b`` must partition the vertex set.  On failure the witness is
    an induced P3 of ``g[a]`` in path order or a missing
    edge ``(u, v)`` inside ``b``.
    """
    if a & b or (a | b) != g.vertices:
        raise ValueError("a and b must partition the vertex set")
    for comp in connected_components(g, a):
        for y in bits(comp):
            miss = comp & ~g.closed(y)
            if miss:
                # some non-neighbor of y sits at distance two inside the component
                for x in bits(g.neighbors(y) & comp):
                    z_set = g.neighbors(x) & miss
                    if z_set:
                        return UnipolarVerdict(False, (y, x, lowest(z_set)), "p3")
    for u in bits(b):
        miss = b & ~g.closed(u)
        if miss:
            return UnipolarVerdict(False, (u, lowest(miss)), "non-edge")
    return UnipolarVerdict(True)
