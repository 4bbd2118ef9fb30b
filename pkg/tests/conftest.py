import itertools

import pytest
from hypothesis import strategies as st

from wedp6 import INF, Graph, Instance


def graph1(n, edges):
    """Graph from 1-based edge pairs."""
    return Graph(n, [(u - 1, v - 1) for u, v in edges])


def mask1(*vertices):
    """Bitmask from 1-based vertex ids."""
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def path(n):
    return graph1(n, [(i, i + 1) for i in range(1, n)])


def cycle(n):
    return graph1(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def complete(n):
    return Graph(n, itertools.combinations(range(n), 2))


def star(leaves):
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def subset_oracle(inst):
    """Minimum e.d. weight by trying every vertex subset, or None.

    Deliberately naive: shares no code with the exact-cover oracle.
    """
    g = inst.graph
    n = g.n
    best = None
    for mask in range(1 << n):
        if any(mask >> v & 1 and inst.weights[v] == INF for v in range(n)):
            continue
        ok = all(
            sum(1 for d in range(n) if mask >> d & 1 and (d == u or g.has_edge(u, d))) == 1
            for u in range(n)
        )
        if ok:
            w = sum(inst.weights[v] for v in range(n) if mask >> v & 1)
            if best is None or w < best:
                best = w
    return best


@st.composite
def instances(draw, min_n=1, max_n=9, inf=True):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = Graph(n, [e for e, keep in zip(pairs, chosen) if keep])
    weight = st.integers(0, 20) | st.just(INF) if inf else st.integers(0, 20)
    w = draw(st.lists(weight, min_size=n, max_size=n))
    return Instance(g, tuple(w))


@pytest.fixture
def p4_unit():
    return Instance.unit(path(4))
