from fractions import Fraction

import pytest

from isect.arcs import (
    ArcModel,
    CIParams,
    _ci_raw,
    apsp_circular_arc,
    arc_contains_point,
    arcs_intersect,
    arcs_to_intervals_with_sentinel,
    build_circular_arc_graph,
    canonicalize,
    delete_closed_neighborhood,
    generate_ci,
    is_proper,
    mwis_circular_arc,
    split_at_cut,
    straighten_at_gap,
)
from isect.errors import (
    BadParams,
    DisconnectedGraph,
    EmptyGraph,
    MalformedModel,
    SharedEndpoint,
)
from isect.graph import Graph, bfs_apsp
from isect.intervals import build_interval_graph, overlaps
from isect.oracles import brute_solve, is_interval_bruteforce
from isect.rng import SplitMix64

# three arcs pairwise overlapping across the standard cut
K3_ARCS = [(1, 4), (2, 6), (5, 3)]
# four arcs closing a ring around the circle
RING4 = [(1, 4), (3, 6), (5, 8), (7, 2)]
RING5 = [(1, 4), (3, 6), (5, 8), (7, 10), (9, 2)]
# a path of three arcs leaving the gap after 6 uncovered
PATH3 = [(1, 3), (2, 5), (4, 6)]


def random_arc_model(rng: SplitMix64, n: int) -> ArcModel:
    pool = list(range(1, 2 * n + 1))
    rng.shuffle(pool)
    model, _ = canonicalize([(pool[2 * k], pool[2 * k + 1]) for k in range(n)])
    return model


def connected_arc_models(seed: int, count: int, lo: int, hi: int) -> list[ArcModel]:
    rng = SplitMix64(seed)
    out: list[ArcModel] = []
    guard = 0
    while len(out) < count:
        guard += 1
        assert guard < 80 * count, "rejection sampling stalled"
        m = random_arc_model(rng, rng.randint(lo, hi))
        if build_circular_arc_graph(m).is_connected():
            out.append(m)
    return out


# -- model construction ------------------------------------------------------

def test_build_flags():
    k3 = ArcModel.build(K3_ARCS)
    assert k3.canonical and k3.covers_circle and k3.n == 3
    path = ArcModel.build(PATH3)
    assert path.canonical and not path.covers_circle
    raw = ArcModel.build([(Fraction(1, 2), 7), (3, Fraction(9, 4))])
    assert not raw.canonical


def test_build_rejects_shared_endpoints():
    with pytest.raises(SharedEndpoint):
        ArcModel.build([(1, 4), (4, 2)])
    with pytest.raises(SharedEndpoint):
        ArcModel.build([(3, 3)])
    with pytest.raises(MalformedModel):
        ArcModel.build([(1, "x")])


def test_contains_and_intersects_fixtures():
    assert arc_contains_point((1, 4), 2)
    assert not arc_contains_point((1, 4), 5)
    assert arc_contains_point((7, 2), 8)
    assert arcs_intersect((1, 4), (3, 6))
    assert not arcs_intersect((1, 4), (5, 8))
    assert arcs_intersect((1, 4), (2, 3))


def test_build_graph_fixtures():
    assert build_circular_arc_graph(ArcModel.build(K3_ARCS)).sorted_edges() == [
        (1, 2), (1, 3), (2, 3)]
    ring = build_circular_arc_graph(ArcModel.build(RING4))
    assert ring.sorted_edges() == [(1, 2), (1, 4), (2, 3), (3, 4)]


def test_gap_model_equals_straightened_intervals():
    rng = SplitMix64(901)
    seen_gap = 0
    for _ in range(40):
        m = random_arc_model(rng, rng.randint(1, 9))
        if m.covers_circle:
            continue
        seen_gap += 1
        g = build_circular_arc_graph(m)
        h = build_interval_graph(straighten_at_gap(m))
        assert g.edges == h.edges
    assert seen_gap >= 5


def test_intervals_reencode_as_arcs():
    # an interval family placed on the circle with the wrap left empty
    # keeps its intersection graph
    rng = SplitMix64(907)
    for _ in range(30):
        n = rng.randint(1, 9)
        pool = list(range(1, 2 * n + 1))
        rng.shuffle(pool)
        pairs = [tuple(sorted((pool[2 * k], pool[2 * k + 1]))) for k in range(n)]
        from isect.intervals import IntervalModel
        im = IntervalModel.build(pairs)
        am = ArcModel.build(pairs)
        assert not am.covers_circle
        assert build_interval_graph(im).edges == build_circular_arc_graph(am).edges


# -- canonical form ----------------------------------------------------------

def test_canonicalize_fixture():
    model, order = canonicalize([(10, 2), (1, 6), (5, 12)])
    assert model.arcs == ((Fraction(1), Fraction(4)),
                          (Fraction(3), Fraction(6)),
                          (Fraction(5), Fraction(2)))
    assert order == (2, 3, 1)


def test_canonicalize_preserves_graph():
    rng = SplitMix64(911)
    for _ in range(25):
        n = rng.randint(1, 10)
        pool = [Fraction(rng.randint(-300, 300), rng.randint(1, 9)) for _ in range(4 * n)]
        vals = sorted(set(pool))
        if len(vals) < 2 * n:
            continue
        rng.shuffle(vals)
        raw = [(vals[2 * k], vals[2 * k + 1]) for k in range(n)]
        g0 = build_circular_arc_graph(ArcModel.build(raw))
        model, order = canonicalize(raw)
        g1 = build_circular_arc_graph(model)
        mapped = {tuple(sorted((order[u - 1], order[v - 1]))) for u, v in g1.edges}
        assert mapped == {tuple(sorted((u, v))) for u, v in g0.edges}
        assert sorted(order) == list(range(1, n + 1))


# -- cut splits --------------------------------------------------------------

def test_split_fixtures():
    spread = split_at_cut(ArcModel.build([(1, 2), (3, 4), (5, 6), (7, 8)]))
    assert spread.backward == frozenset({4})
    assert spread.forward == frozenset({1, 2, 3})
    assert spread.cut_point == 8
    assert split_at_cut(ArcModel.build(K3_ARCS)).backward == frozenset({1, 2, 3})
    assert split_at_cut(ArcModel.build(RING4)).backward == frozenset({1, 4})
    with pytest.raises(MalformedModel):
        split_at_cut(ArcModel.build([(Fraction(1, 2), 7), (3, 9)]))


def test_split_backward_is_clique():
    for m in connected_arc_models(919, 30, 1, 10):
        g = build_circular_arc_graph(m)
        back = sorted(split_at_cut(m).backward)
        for a in back:
            for b in back:
                if a < b:
                    assert g.has_edge(a, b)


def test_delete_closed_neighborhood_fixtures():
    ring = ArcModel.build(RING4)
    sub, ids = delete_closed_neighborhood(ring, 1)
    assert ids == (3,)
    assert sub.intervals == ((Fraction(4), Fraction(7)),)
    k3 = ArcModel.build(K3_ARCS)
    empty, none = delete_closed_neighborhood(k3, 2)
    assert empty.n == 0 and none == ()
    with pytest.raises(MalformedModel):
        delete_closed_neighborhood(ring, 5)


def test_delete_closed_neighborhood_matches_induced_subgraph():
    rng = SplitMix64(929)
    for _ in range(30):
        m = random_arc_model(rng, rng.randint(1, 9))
        g = build_circular_arc_graph(m)
        i = rng.randint(1, m.n)
        sub, ids = delete_closed_neighborhood(m, i)
        keep = [v for v in g.vertices() if v != i and not g.has_edge(v, i)]
        assert list(ids) == keep
        induced, _ = g.induced(keep)
        assert build_interval_graph(sub).edges == induced.edges
        assert is_interval_bruteforce(induced)


# -- sentinel transfer -------------------------------------------------------

def test_sentinel_isolated_for_gap_model():
    model = arcs_to_intervals_with_sentinel(ArcModel.build(PATH3))
    assert model.n == 4
    s = model.n
    assert not any(overlaps(model, s, r) for r in range(1, s))


def test_sentinel_meets_exactly_the_crossing_arcs():
    model = arcs_to_intervals_with_sentinel(ArcModel.build(K3_ARCS))
    assert model.n == 4
    assert overlaps(model, 4, 1)
    assert overlaps(model, 4, 2)
    assert not overlaps(model, 4, 3)
    # straightening can drop wrap-side adjacencies but never adds one
    g = build_circular_arc_graph(ArcModel.build(K3_ARCS))
    for u in range(1, 4):
        for v in range(u + 1, 4):
            assert g.has_edge(u, v) or not overlaps(model, u, v)


def test_sentinel_transfer_rejects():
    with pytest.raises(MalformedModel):
        arcs_to_intervals_with_sentinel(ArcModel.build([(2, 4), (3, 6), (5, 8), (7, 10)]))
    with pytest.raises(EmptyGraph):
        arcs_to_intervals_with_sentinel(ArcModel.build([]))


# -- independent sets --------------------------------------------------------

def test_mwis_fixtures():
    k3 = ArcModel.build(K3_ARCS)
    assert mwis_circular_arc(k3, [1, 5, 2]) == (2,)
    assert mwis_circular_arc(ArcModel.build(RING4)) == (1, 3)
    assert mwis_circular_arc(ArcModel.build(PATH3)) == (1, 3)
    assert mwis_circular_arc(k3, [0, 0, 0]) == ()
    with pytest.raises(BadParams):
        mwis_circular_arc(k3, [1, 2])


def test_mwis_can_avoid_every_backward_arc():
    # around a five-ring the backward side holds arcs 1 and 5 only, yet
    # the heavy pair {2, 4} beats every set through the cut
    m = ArcModel.build(RING5)
    assert split_at_cut(m).backward == frozenset({1, 5})
    assert mwis_circular_arc(m, [1, 10, 1, 10, 1]) == (2, 4)


def test_mwis_matches_oracle():
    rng = SplitMix64(937)
    for _ in range(30):
        m = random_arc_model(rng, rng.randint(1, 11))
        weights = [rng.randint(0, 6) for _ in range(m.n)]
        got = mwis_circular_arc(m, weights)
        g = build_circular_arc_graph(m)
        for a in got:
            for b in got:
                if a < b:
                    assert not g.has_edge(a, b)
        gw = Graph.build(g.n, g.sorted_edges(),
                         {v: weights[v - 1] for v in g.vertices()})
        want = brute_solve(gw, "mwis", max_n=16)
        assert sum(weights[v - 1] for v in got) == want.value


def test_mwis_on_raw_models():
    rng = SplitMix64(941)
    for _ in range(10):
        n = rng.randint(1, 8)
        vals = list(range(1, 4 * n + 1))
        rng.shuffle(vals)
        raw = [(Fraction(vals[2 * k], 2), Fraction(vals[2 * k + 1], 2))
               for k in range(n)]
        m = ArcModel.build(raw)
        weights = [rng.randint(0, 5) for _ in range(n)]
        got = mwis_circular_arc(m, weights)
        g = build_circular_arc_graph(m)
        gw = Graph.build(g.n, g.sorted_edges(),
                         {v: weights[v - 1] for v in g.vertices()})
        want = brute_solve(gw, "mwis", max_n=16)
        assert sum(weights[v - 1] for v in got) == want.value


# -- distances ---------------------------------------------------------------

def test_apsp_fixtures():
    assert apsp_circular_arc(ArcModel.build(K3_ARCS)) == [
        [0, 1, 1], [1, 0, 1], [1, 1, 0]]
    assert apsp_circular_arc(ArcModel.build(RING4)) == [
        [0, 1, 2, 1], [1, 0, 1, 2], [2, 1, 0, 1], [1, 2, 1, 0]]
    assert apsp_circular_arc(ArcModel.build([(1, 2)])) == [[0]]


def test_apsp_rejects():
    with pytest.raises(DisconnectedGraph):
        apsp_circular_arc(ArcModel.build([(1, 2), (3, 4), (5, 6), (7, 8)]))
    with pytest.raises(EmptyGraph):
        apsp_circular_arc(ArcModel.build([]))


def test_apsp_matches_bfs_small():
    for m in connected_arc_models(947, 60, 2, 12):
        assert apsp_circular_arc(m) == bfs_apsp(build_circular_arc_graph(m))


def test_apsp_matches_bfs_larger():
    for m in connected_arc_models(953, 10, 20, 40):
        assert apsp_circular_arc(m) == bfs_apsp(build_circular_arc_graph(m))


def test_apsp_on_raw_model():
    model = ArcModel.build([(10, 2), (1, 6), (5, 12)])
    assert apsp_circular_arc(model) == [[0, 1, 1], [1, 0, 1], [1, 1, 0]]


# -- properness and the rotated construction ---------------------------------

def test_is_proper_fixtures():
    assert not is_proper(ArcModel.build([(1, 6), (2, 3)]))
    assert is_proper(ArcModel.build(RING4))
    assert is_proper(ArcModel.build([(1, 2)]))
    # a wrapping arc swallowing a short one
    assert not is_proper(ArcModel.build([(7, 4), (1, 3), (5, 6)]))


def test_ci_params_rejects():
    with pytest.raises(BadParams):
        CIParams.build(3, 3, Fraction(1, 4))
    with pytest.raises(BadParams):
        CIParams.build(4, 0, Fraction(1, 4))
    with pytest.raises(BadParams):
        CIParams.build(4, 1, Fraction(1, 2))
    with pytest.raises(BadParams):
        CIParams.build(4, 1, 0)
    with pytest.raises(BadParams):
        CIParams.build(4, 1, Fraction(7, 8))


def test_ci_raw_layout():
    p = CIParams.build(4, 1, Fraction(1, 5))
    raw = _ci_raw(p)
    assert len(raw) == 8
    assert raw[0] == (0, 2 + Fraction(1, 5))
    assert raw[4] == (1, 3 - Fraction(1, 5))


def test_generate_ci_shape():
    model = generate_ci(CIParams.build(4, 1, Fraction(1, 5)))
    assert model.n == 8
    assert model.canonical
    assert model.covers_circle
    assert is_proper(model)
    g = build_circular_arc_graph(model)
    degs = sorted(g.degree(v) for v in g.vertices())
    # one degree per family of equally long arcs
    assert len(set(degs)) <= 2
    assert degs.count(degs[0]) in (model.n // 2, model.n)


def test_generate_ci_long_arcs_stay_proper():
    # arcs longer than half the circle still avoid containment
    model = generate_ci(CIParams.build(5, 3, Fraction(1, 3)))
    assert model.n == 10
    assert is_proper(model)
    assert build_circular_arc_graph(model).is_connected()


def test_generate_ci_degrees_split_by_family():
    rng = SplitMix64(967)
    for _ in range(6):
        n = rng.randint(3, 9)
        k = rng.randint(1, n - 1)
        p = CIParams.build(n, k, Fraction(1, rng.randint(3, 9)))
        raw = _ci_raw(p)
        model, order = canonicalize(raw)
        g = build_circular_arc_graph(model)
        # order[j - 1] is the raw arc behind canonical vertex j; the two
        # families are rotation-invariant, so degrees agree within each
        first = {j for j in g.vertices() if order[j - 1] <= n}
        degs_a = {g.degree(j) for j in first}
        degs_b = {g.degree(j) for j in g.vertices() if j not in first}
        assert len(degs_a) == 1 and len(degs_b) == 1
