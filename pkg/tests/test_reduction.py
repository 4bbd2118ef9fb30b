import pytest

from conftest import cycle, graph1, mask1
from wedp6 import (
    INF,
    Graph,
    Instance,
    bits,
    brute_force_wed,
    check_unipolar,
    enumerate_eds,
    gen_instance,
    solve_branch,
    solve_connected,
)
from wedp6.errors import Infeasible
from wedp6.reduction import (
    ComponentSet,
    component_reduction,
    decoupled_components,
    find_b_star,
    join_reduction,
    zwy_partition,
)
from wedp6.solver import branch_context


def with_b_infinite(g, b, weights=None):
    w = list(weights or [1] * g.n)
    for x in bits(b):
        w[x] = INF
    return Instance(g, tuple(w))


# b=1, triangle {2,3,4}, edge {5,6}; b adjacent to 2,3,4,5
JR_JOIN = graph1(6, [(2, 3), (2, 4), (3, 4), (5, 6), (1, 2), (1, 3), (1, 4), (1, 5)])


def test_join_reduction_single_join():
    g = JR_JOIN
    inst = with_b_infinite(g, mask1(1))
    comps = ComponentSet.from_subgraph(g, mask1(2, 3, 4, 5, 6))
    jr = join_reduction(inst, mask1(1), comps)
    assert jr.feasible
    assert jr.surviving_b == 0
    assert jr.components.components == (mask1(2, 3, 4), mask1(5, 6))
    assert jr.weight_overlay == {4: INF}
    # every minimum e.d. now takes vertex 6 from the second component
    reduced = jr.apply(inst)
    eds = enumerate_eds(reduced)
    assert eds and all(d & mask1(5, 6) == mask1(6) for d in eds)
    assert brute_force_wed(reduced).total_weight == brute_force_wed(inst).total_weight == 2


def test_join_reduction_two_joins_infeasible():
    g = graph1(5, [(2, 3), (4, 5), (1, 2), (1, 3), (1, 4), (1, 5)])
    inst = with_b_infinite(g, mask1(1))
    jr = join_reduction(inst, mask1(1), ComponentSet.from_subgraph(g, mask1(2, 3, 4, 5)))
    assert jr.status == "infeasible"
    assert brute_force_wed(inst) is None


def test_join_reduction_identity():
    g = graph1(5, [(2, 3), (3, 4), (4, 5), (1, 2)])
    inst = with_b_infinite(g, mask1(1))
    comps = ComponentSet.from_subgraph(g, mask1(2, 3, 4, 5))
    jr = join_reduction(inst, mask1(1), comps)
    assert jr.feasible and jr.surviving_b == mask1(1)
    assert jr.components == comps and jr.weight_overlay == {} and jr.removed == 0


def test_join_reduction_no_universal_vertex():
    # b joins a C4 component, which has no universal vertex
    g = graph1(5, [(2, 3), (3, 4), (4, 5), (5, 2)] + [(1, x) for x in (2, 3, 4, 5)])
    inst = with_b_infinite(g, mask1(1))
    jr = join_reduction(inst, mask1(1), ComponentSet.from_subgraph(g, mask1(2, 3, 4, 5)))
    assert jr.status == "infeasible"


def test_join_reduction_iterates_to_fixpoint():
    # b1 joins the star {2,3,4} (centre 2), leaving {2}; then b5 joins {2}
    # and its neighbor 6 in the other component becomes excluded
    g = graph1(7, [(2, 3), (2, 4), (6, 7)] + [(1, x) for x in (2, 3, 4)] + [(5, 2), (5, 6)])
    b = mask1(1, 5)
    inst = with_b_infinite(g, b)
    jr = join_reduction(inst, b, ComponentSet.from_subgraph(g, mask1(2, 3, 4, 6, 7)))
    assert jr.feasible and jr.surviving_b == 0
    assert jr.components.components == (mask1(2), mask1(6, 7))
    assert jr.weight_overlay == {5: INF}
    assert jr.removed == mask1(3, 4)


def test_join_reduction_requires_infinite_b():
    g = JR_JOIN
    with pytest.raises(ValueError):
        join_reduction(Instance.unit(g), mask1(1), ComponentSet.from_subgraph(g, mask1(2)))


@pytest.mark.parametrize("seed", range(200))
def test_join_reduction_preserves_optimum(seed):
    inst0 = gen_instance("gnp", 6 + seed % 7, 0.35, seed, inf_fraction=0.1)
    g = inst0.graph
    b = sum(1 << v for v in range(g.n) if (seed >> (v % 8)) & 1 and v % 3 == 0)
    inst = with_b_infinite(g, b, inst0.weights)
    comps = ComponentSet.from_subgraph(g, g.vertices & ~b)
    jr = join_reduction(inst, b, comps)
    before = brute_force_wed(inst)
    if not jr.feasible:
        assert before is None
        return
    # postcondition: no surviving B-vertex joins a surviving component
    for x in bits(jr.surviving_b):
        assert all(c & ~g.neighbors(x) for c in jr.components)
    after = brute_force_wed(jr.apply(inst).with_weights({v: INF for v in bits(jr.removed)}))
    assert (before is None) == (after is None)
    if before is not None:
        assert before.total_weight == after.total_weight


def test_find_b_star_examples():
    # Q1 = {3,4,5} path, Q2 = {6,7,8} path; b1 contacts both, b2 only Q2
    g = graph1(8, [(3, 4), (4, 5), (6, 7), (7, 8), (1, 4), (1, 7), (2, 6)])
    q1, q2 = mask1(3, 4, 5), mask1(6, 7, 8)
    assert find_b_star(g, mask1(1, 2), [q1, q2]) == (0, [])
    assert find_b_star(g, mask1(2), [q2]) == (1, [])
    assert find_b_star(g, mask1(2), [q1, q2]) == (1, [q1])
    assert find_b_star(g, 0, [q1]) == (None, [q1])


def test_zwy_partition_examples():
    # star p1-p2-p3 with q* = p2 and b* adjacent to p2 only
    g = graph1(4, [(1, 2), (2, 3), (4, 2)])
    part = zwy_partition(g, mask1(1, 2, 3), 1, 3)
    assert (part.z, part.w, part.y) == (mask1(1, 2, 3), 0, 0)
    # vertices q*=1, z1=2, w1=3, y1=4, b*=5
    g = graph1(5, [(1, 2), (3, 2), (3, 4), (5, 3), (5, 1)])
    part = zwy_partition(g, mask1(1, 2, 3, 4), 0, 4)
    assert (part.z, part.w, part.y) == (mask1(1, 2), mask1(3), mask1(4))
    with pytest.raises(ValueError):
        zwy_partition(g, mask1(1, 2, 3, 4), 1, 4)


# v=1, u=2, b=3, path p1-p2-p3 = 4-5-6 with b-p2
CR_BASE = [(1, 2), (2, 3), (3, 5), (4, 5), (5, 6)]


def _prepared(inst, v):
    g = inst.graph
    ctx = branch_context(inst, v)
    winst = Instance(g, ctx.weights)
    jr = join_reduction(winst, ctx.levels[2], ComponentSet.from_subgraph(g, ctx.levels[3] | ctx.levels[4]))
    return jr.apply(winst), jr


def test_component_reduction_single_component():
    inst = Instance.unit(graph1(6, CR_BASE))
    winst, jr = _prepared(inst, 0)
    u = component_reduction(winst, 0, 2, 4, jr.components, jr.surviving_b)
    assert u.forced == mask1(5) and u.cliques == () and u.b == 0
    assert solve_branch(inst, 0).mask == mask1(1, 5)
    assert brute_force_wed(inst).mask == mask1(1, 5)


def test_component_reduction_second_component():
    g = graph1(9, CR_BASE + [(7, 8), (8, 9), (3, 8)])
    inst = Instance.unit(g)
    winst, jr = _prepared(inst, 0)
    u = component_reduction(winst, 0, 2, 4, jr.components, jr.surviving_b)
    assert u.weights[7] == INF
    assert set(u.cliques) == {mask1(7), mask1(9)}
    assert solve_branch(inst, 0) is None
    assert brute_force_wed(inst) is None


def test_component_reduction_y_component_without_universal_vertex():
    # b*=1, q*=2, z1=3, w1=4, Y = induced P4 5-6-7-8 hanging off w1
    g = graph1(8, [(1, 2), (1, 4), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)])
    inst = with_b_infinite(g, mask1(1))
    comps = ComponentSet.from_subgraph(g, g.vertices & ~mask1(1))
    with pytest.raises(Infeasible):
        component_reduction(inst, None, 0, 1, comps, mask1(1))


def test_component_reduction_z_y_edge_is_infeasible():
    # same shape plus a chord between z1 and the Y side
    g = graph1(6, [(1, 2), (1, 4), (2, 3), (3, 4), (4, 5), (3, 6), (5, 6)])
    inst = with_b_infinite(g, mask1(1))
    comps = ComponentSet.from_subgraph(g, g.vertices & ~mask1(1))
    with pytest.raises(Infeasible):
        component_reduction(inst, None, 0, 1, comps, mask1(1))


def test_decoupled_examples():
    inst = Instance.unit(Graph(7, [(0, 1), (1, 2), (3, 4), (4, 5), (5, 6), (6, 3)]))
    assert decoupled_components(inst, []) == []
    (p3,) = decoupled_components(inst, [mask1(1, 2, 3)])
    sol = solve_connected(p3.instance, p3.vertices)
    assert sol.mask == mask1(2) and sol.total_weight == 1
    (c4,) = decoupled_components(inst, [mask1(4, 5, 6, 7)])
    assert solve_connected(c4.instance, c4.vertices) is None
    assert brute_force_wed(Instance.unit(cycle(4))) is None


def _completed_b(g, b):
    adj = list(g.adjacency)
    for x in bits(b):
        adj[x] |= b & ~(1 << x)
    return Graph.from_adjacency(adj)


def _induced(g, s):
    adj = [g.neighbors(v) & s if s >> v & 1 else 0 for v in range(g.n)]
    return Graph.from_adjacency(adj)


@pytest.mark.parametrize("seed", range(60))
def test_pipeline_invariants_on_p6_free_corpus(seed):
    kind, p = [("gnp-filtered", 0.3), ("gnp-filtered", 0.5), ("unipolar", 0.3)][seed % 3]
    inst = gen_instance(kind, 8 + seed % 6, p, seed, p6_free=True)
    g = inst.graph
    eds = enumerate_eds(inst)
    for d in eds:
        for v in bits(d):
            levels = branch_context(inst, v).levels
            # every component of G[N3 ∪ N4] holds an e.d. vertex
            for comp in ComponentSet.from_subgraph(g, levels[3] | levels[4]):
                assert comp & d
    for v in range(g.n):
        if not branch_context(inst, v).levels[2]:
            continue
        winst, jr = _prepared(inst, v)
        if not jr.feasible:
            assert not any(d >> v & 1 for d in eds)
            continue
        b = jr.surviving_b
        for x in bits(b):
            assert all(c & ~g.neighbors(x) for c in jr.components)
        active = [c for c in jr.components.non_cliques if any(g.neighbors(x) & c for x in bits(b))]
        if not active:
            continue
        b_star, missed = find_b_star(g, b, active)
        assert missed == []
        rest = ComponentSet.of(g, [c for c in jr.components
                                   if c in active or c in jr.components.cliques])
        for q in bits(g.neighbors(b_star) & winst.finite(rest.union)):
            try:
                u = component_reduction(winst, v, b_star, q, rest, b)
            except Infeasible:
                assert not any(d >> v & 1 and d >> q & 1 for d in eds)
                continue
            res = u.residual
            sub = _induced(_completed_b(g, u.b), res)
            a_side = res & ~u.b
            full = Graph.from_adjacency([sub.neighbors(x) if res >> x & 1 else 0 for x in range(g.n)])
            # vertices outside the residual are isolated; move them to the A side
            assert check_unipolar(full, a_side | (g.vertices & ~res), u.b)
            for x in bits(u.b):
                assert u.weights[x] == INF
