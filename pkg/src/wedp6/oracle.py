"""Ground truth by exhaustive search, plus seeded instance generators.

An efficient dominating set is an exact cover of the vertex set by closed
neighborhoods, so both :func:`brute_force_wed` and :func:`enumerate_eds`
are plain exact-cover backtracking searches.  They share nothing with the
reduction pipeline.
"""

from __future__ import annotations

import itertools

import numpy as np

from .graph import INF, Graph, Instance, Solution, bits, lowest
from .recognition import find_induced_p6, is_p6_free

ORACLE_SIZE_HINT = 25
ENUMERATE_LIMIT = 16
MAX_RESAMPLES = 5000
FILTER_TRIES = 100


def _cover_tables(inst: Instance, universe: int):
    g = inst.graph
    w = inst.weights
    closed = [g.closed(v) & universe for v in range(g.n)]
    cands = [
        [d for d in bits(closed[u]) if w[d] != INF] if universe >> u & 1 else []
        for u in range(g.n)
    ]
    return closed, cands


def brute_force_wed(
    inst: Instance, order: str = "lowest", within: int | None = None
) -> Solution | None:
    """Minimum finite-weight e.d. by exact-cover backtracking.

    ``order`` selects the uncovered vertex to branch on: ``"lowest"`` takes
    the smallest id, ``"fewest"`` the one with the fewest usable candidates.
    Returns ``None`` when no finite-weight e.d. exists.
    """
    if order not in ("lowest", "fewest"):
        raise ValueError(f"unknown branching order {order!r}")
    universe = inst.graph.vertices if within is None else within
    closed, cands = _cover_tables(inst, universe)
    w = inst.weights
    best_weight = INF
    best_mask = None

    def pick(covered: int) -> tuple[int, list[int]]:
        open_ = universe & ~covered
        if order == "lowest":
            u = lowest(open_)
            return u, cands[u]
        best_u, best_c = -1, None
        for u in bits(open_):
            usable = [d for d in cands[u] if not closed[d] & covered]
            if best_c is None or len(usable) < len(best_c):
                best_u, best_c = u, usable
                if not usable:
                    break
        return best_u, best_c

    def search(covered: int, chosen: int, total) -> None:
        nonlocal best_weight, best_mask
        if covered == universe:
            if total < best_weight:
                best_weight, best_mask = total, chosen
            return
        _, options = pick(covered)
        for d in options:
            if closed[d] & covered:
                continue
            t = total + w[d]
            if t >= best_weight and best_mask is not None:
                continue
            search(covered | closed[d], chosen | (1 << d), t)

    search(0, 0, 0)
    if best_mask is None:
        return None
    return Solution(best_mask, int(best_weight))


def enumerate_eds(inst: Instance) -> list[int]:
    """Every e.d. made of finite-weight vertices, as sorted bitmasks."""
    if inst.n > ENUMERATE_LIMIT:
        raise ValueError(f"enumeration is limited to n <= {ENUMERATE_LIMIT}")
    universe = inst.graph.vertices
    closed, cands = _cover_tables(inst, universe)
    found = []

    def search(covered: int, chosen: int) -> None:
        if covered == universe:
            found.append(chosen)
            return
        u = lowest(universe & ~covered)
        for d in cands[u]:
            if not closed[d] & covered:
                search(covered | closed[d], chosen | (1 << d))

    search(0, 0)
    return sorted(found, key=lambda m: sorted(bits(m)))


# -- generators -------------------------------------------------------------

KINDS = ("gnp", "gnp-filtered", "unipolar", "cograph")


def _weights(rng, n: int, weight_range, inf_fraction: float) -> tuple:
    lo, hi = weight_range
    w = rng.integers(lo, hi + 1, size=n)
    inf = rng.random(n) < inf_fraction
    return tuple(INF if inf[i] else int(w[i]) for i in range(n))


def _gnp_edges(rng, n: int, p: float) -> list[tuple[int, int]]:
    coins = rng.random((n, n)) < p
    return [(i, j) for i, j in itertools.combinations(range(n), 2) if coins[i, j]]


def _repair_p6(rng, n: int, edges: list[tuple[int, int]]) -> Graph:
    """Add random chords to induced P6s until none is left."""
    edges = list(edges)
    while True:
        g = Graph(n, edges)
        path = find_induced_p6(g)
        if path is None:
            return g
        gaps = [(i, j) for i in range(len(path)) for j in range(i + 2, len(path))]
        i, j = gaps[int(rng.integers(len(gaps)))]
        u, v = path[i], path[j]
        edges.append((min(u, v), max(u, v)))


def _cograph_edges(rng, n: int, p: float) -> list[tuple[int, int]]:
    # p is the probability that a merge is a join rather than a disjoint union
    parts = [[v] for v in rng.permutation(n).tolist()]
    edges = []
    while len(parts) > 1:
        i, j = sorted(rng.choice(len(parts), size=2, replace=False).tolist())
        right = parts.pop(j)
        left = parts[i]
        if rng.random() < p:
            edges.extend((min(x, y), max(x, y)) for x in left for y in right)
        left.extend(right)
    return edges


def unipolar_graph(
    n_b: int, clique_sizes, p: float, rng
) -> tuple[Graph, list[int], int]:
    """A clique ``B`` on the first ``n_b`` vertices plus disjoint cliques ``A``.

    Each B-A pair is an edge with probability ``p``.  Returns the graph, the
    A-cliques as masks and the mask of ``B``.
    """
    edges = list(itertools.combinations(range(n_b), 2))
    cliques = []
    start = n_b
    for size in clique_sizes:
        members_ = range(start, start + size)
        edges.extend(itertools.combinations(members_, 2))
        cliques.append(((1 << size) - 1) << start)
        start += size
    n = start
    coins = rng.random((n_b, n - n_b)) < p
    for b in range(n_b):
        for j in range(n - n_b):
            if coins[b, j]:
                edges.append((b, n_b + j))
    return Graph(n, edges), cliques, (1 << n_b) - 1


def _random_unipolar_shape(rng, n: int) -> tuple[int, list[int]]:
    n_b = int(rng.integers(1, max(1, n // 3) + 1)) if n > 1 else 0
    sizes = []
    left = n - n_b
    while left:
        s = int(min(left, rng.integers(1, 5)))
        sizes.append(s)
        left -= s
    return n_b, sizes


def unipolar_instance(
    n: int,
    p: float,
    seed: int,
    weight_range=(1, 100),
    inf_fraction: float = 0.0,
    p6_free: bool = False,
    n_b: int | None = None,
    clique_sizes=None,
) -> tuple[Instance, list[int], int]:
    """Seeded unipolar instance with its declared partition ``(cliques, B)``.

    With ``p6_free`` the edge sampling is repeated until the graph has no
    induced P6.
    """
    rng = np.random.default_rng(seed)
    for _ in range(MAX_RESAMPLES):
        if n_b is None or clique_sizes is None:
            nb, sizes = _random_unipolar_shape(rng, n)
        else:
            nb, sizes = n_b, list(clique_sizes)
        g, cliques, b = unipolar_graph(nb, sizes, p, rng)
        if not p6_free or is_p6_free(g):
            return Instance(g, _weights(rng, g.n, weight_range, inf_fraction)), cliques, b
    raise RuntimeError(f"no P6-free unipolar sample after {MAX_RESAMPLES} tries")


def gen_instance(
    kind: str,
    n: int,
    p: float = 0.5,
    seed: int = 0,
    weight_range=(1, 100),
    inf_fraction: float = 0.0,
    p6_free: bool = False,
) -> Instance:
    """Deterministic random instance.

    Parameters
    ----------
    kind : {"gnp", "gnp-filtered", "unipolar", "cograph"}
        ``gnp-filtered`` resamples G(n, p) until the graph is P6-free and,
        if a bounded number of draws all fail, adds random chords to the
        last draw's induced P6s until none remain;
        ``cograph`` merges singletons by random joins (probability ``p``) and
        disjoint unions, so the result is P4-free.
    n : int
        Number of vertices, at least 1.
    p : float
        Edge probability (join probability for cographs).
    seed : int
        Seed for ``numpy.random.default_rng``.
    weight_range : (int, int)
        Inclusive range of finite weights.
    inf_fraction : float
        Expected fraction of vertices given weight ``INF``.
    p6_free : bool
        Make any kind P6-free (resampling; chord repair for ``gnp``).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    if kind == "unipolar":
        return unipolar_instance(n, p, seed, weight_range, inf_fraction, p6_free)[0]
    rng = np.random.default_rng(seed)
    if kind == "cograph":
        g = Graph(n, _cograph_edges(rng, n, p))
    elif kind in ("gnp", "gnp-filtered"):
        filtered = p6_free or kind == "gnp-filtered"
        for _ in range(FILTER_TRIES if filtered else 1):
            edges = _gnp_edges(rng, n, p)
            g = Graph(n, edges)
            if not filtered or is_p6_free(g):
                break
        else:
            g = _repair_p6(rng, n, edges)
    else:
        raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
    return Instance(g, _weights(rng, n, weight_range, inf_fraction))
