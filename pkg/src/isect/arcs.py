"""Circular-arc models and the algorithms that exploit their geometry.

An arc is a pair (h, t) of rational circle positions; the arc runs
clockwise from its head h to its tail t, wrapping past the largest
coordinate when h > t.  All 2n endpoints of a model are pairwise
distinct, so containment tests never need to break ties.

A canonical model has endpoints that are exactly the integers 1..2n,
with arc 1 starting at position 1 and heads increasing with the index.
Any valid model can be rewritten into canonical form without changing
its intersection graph, because only the cyclic order of the endpoints
matters.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import (
    BadParams,
    DisconnectedGraph,
    EmptyGraph,
    InfeasibleProblem,
    MalformedModel,
    SharedEndpoint,
)
from .graph import Graph, bfs_apsp, coerce_weights
from .intervals import (
    IntervalModel,
    Weights,
    apsp_interval,
    build_interval_graph,
    mwis_interval,
    normalize,
    overlaps,
)

ArcPair = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class ArcModel:
    """A family of circular arcs with pairwise distinct endpoints."""

    arcs: tuple[ArcPair, ...]
    canonical: bool
    covers_circle: bool

    @staticmethod
    def build(arcs: Iterable[tuple[object, object]]) -> "ArcModel":
        pairs: list[ArcPair] = []
        for k, arc in enumerate(arcs, start=1):
            h, t = arc
            try:
                h, t = Fraction(h), Fraction(t)
            except (TypeError, ValueError) as exc:
                raise MalformedModel(f"arc {k} has non-rational endpoints") from exc
            if h == t:
                raise SharedEndpoint(f"arc {k} has coinciding endpoints")
            pairs.append((h, t))
        seen: dict[Fraction, int] = {}
        for k, (h, t) in enumerate(pairs, start=1):
            for x in (h, t):
                if x in seen:
                    raise SharedEndpoint(
                        f"arcs {seen[x]} and {k} share the endpoint {x}")
                seen[x] = k
        return ArcModel(tuple(pairs), _is_canonical(pairs), _covers(pairs))

    @property
    def n(self) -> int:
        return len(self.arcs)

    def head(self, r: int) -> Fraction:
        return self.arcs[r - 1][0]

    def tail(self, r: int) -> Fraction:
        return self.arcs[r - 1][1]


def _is_canonical(pairs: Sequence[ArcPair]) -> bool:
    if not pairs:
        return True
    values = sorted(x for pair in pairs for x in pair)
    if any(x.denominator != 1 for x in values):
        return False
    if [int(x) for x in values] != list(range(1, 2 * len(pairs) + 1)):
        return False
    heads = [h for h, _ in pairs]
    return heads[0] == 1 and all(a < b for a, b in zip(heads, heads[1:]))


def _rank_map(pairs: Sequence[ArcPair]) -> dict[Fraction, int]:
    ordered = sorted(x for pair in pairs for x in pair)
    return {x: k for k, x in enumerate(ordered, start=1)}


def _covers(pairs: Sequence[ArcPair]) -> bool:
    # the circle is covered iff every gap between cyclically consecutive
    # endpoints lies inside some arc; gaps hold no endpoints, so an arc
    # covers the gap after the point ranked p exactly when its walk from
    # head to tail crosses a seam placed inside that gap
    if not pairs:
        return False
    ranks = _rank_map(pairs)
    two_n = len(ranks)
    spans = [(ranks[h], ranks[t]) for h, t in pairs]
    for p in range(1, two_n + 1):
        def across(h: int, t: int) -> bool:
            return (h - p - 1) % two_n > (t - p - 1) % two_n
        if not any(across(h, t) for h, t in spans):
            return False
    return True


def arc_contains_point(arc: tuple[object, object], p: object) -> bool:
    """True when the point p lies strictly inside the arc.

    pre: p differs from both endpoints of the arc.
    """
    h, t = Fraction(arc[0]), Fraction(arc[1])
    p = Fraction(p)
    if h < t:
        return h < p < t
    return p > h or p < t


def _closed_contains(arc: ArcPair, p: Fraction) -> bool:
    h, t = arc
    if h < t:
        return h <= p <= t
    return p >= h or p <= t


def arcs_intersect(a: tuple[object, object], b: tuple[object, object]) -> bool:
    """True when two arcs with all-distinct endpoints share a point."""
    return (arc_contains_point(a, b[0]) or arc_contains_point(a, b[1])
            or arc_contains_point(b, a[0]) or arc_contains_point(b, a[1]))


def build_circular_arc_graph(m: ArcModel) -> Graph:
    """Intersection graph of the arcs, vertex r for arc r."""
    n = m.n
    edges = [(i, j)
             for i in range(1, n + 1)
             for j in range(i + 1, n + 1)
             if arcs_intersect(m.arcs[i - 1], m.arcs[j - 1])]
    return Graph.build(n, edges)


def canonicalize(
    arcs: Union[ArcModel, Iterable[tuple[object, object]]],
) -> tuple[ArcModel, tuple[int, ...]]:
    """Rewrite a model onto the endpoints 1..2n, heads increasing.

    Returns the canonical model and ``order`` with ``order[k - 1]`` the
    input arc that became arc k.  Ranking the endpoints and rotating the
    circle preserve cyclic order, hence the intersection graph.
    """
    m0 = arcs if isinstance(arcs, ArcModel) else ArcModel.build(arcs)
    if m0.n == 0:
        return m0, ()
    ranks = _rank_map(m0.arcs)
    two_n = 2 * m0.n
    spans = [(ranks[h], ranks[t]) for h, t in m0.arcs]
    base = min(h for h, _ in spans)
    rotated = [(Fraction((h - base) % two_n + 1), Fraction((t - base) % two_n + 1))
               for h, t in spans]
    order = sorted(range(1, m0.n + 1), key=lambda j: rotated[j - 1][0])
    model = ArcModel.build([rotated[j - 1] for j in order])
    if not model.canonical:
        raise MalformedModel("canonicalization left a non-canonical model")
    g0 = build_circular_arc_graph(m0)
    g1 = build_circular_arc_graph(model)
    mapped = {tuple(sorted((order[u - 1], order[v - 1]))) for u, v in g1.edges}
    if mapped != set(g0.edges):
        raise MalformedModel("canonicalization changed the intersection graph")
    return model, tuple(order)


@dataclass(frozen=True)
class CutSplit:
    """Arc ids on either side of a cut placed just past ``cut_point``."""

    cut_point: Fraction
    backward: frozenset[int]
    forward: frozenset[int]


def split_at_cut(m: ArcModel) -> CutSplit:
    """Split a canonical model at the tail of its last arc.

    The backward side holds every arc whose closed span contains that
    tail; those arcs pairwise overlap there, so the backward side is a
    clique.  Forward arcs avoid the whole gap just past the cut point,
    so they straighten into intervals without losing adjacencies.
    """
    if not m.canonical:
        raise MalformedModel("cut splits need a canonical model")
    if m.n == 0:
        raise EmptyGraph("cannot split an empty model")
    cut = m.arcs[-1][1]
    back = frozenset(r for r in range(1, m.n + 1)
                     if _closed_contains(m.arcs[r - 1], cut))
    fwd = frozenset(range(1, m.n + 1)) - back
    return CutSplit(cut, back, fwd)


def delete_closed_neighborhood(
    m: ArcModel, i: int,
) -> tuple[IntervalModel, tuple[int, ...]]:
    """Remove arc i and everything it intersects; straighten the rest.

    The survivors avoid the span of arc i entirely, so cutting the
    circle at the head of arc i turns them into intervals with the same
    pairwise intersections.  Returns the interval model and the original
    arc id of each of its vertices, in increasing id order.
    """
    if not 1 <= i <= m.n:
        raise MalformedModel(f"arc {i} is out of range")
    target = m.arcs[i - 1]
    survivors = [r for r in range(1, m.n + 1)
                 if r != i and not arcs_intersect(target, m.arcs[r - 1])]
    ranks = _rank_map(m.arcs)
    two_n = 2 * m.n
    h0 = ranks[target[0]]
    def straight(x: Fraction) -> int:
        return (ranks[x] - h0) % two_n
    pairs = [(straight(m.arcs[r - 1][0]), straight(m.arcs[r - 1][1]))
             for r in survivors]
    return IntervalModel.build(pairs), tuple(survivors)


def _uncovered_gap_point(m: ArcModel) -> Fraction:
    ranks = _rank_map(m.arcs)
    two_n = len(ranks)
    spans = [(ranks[h], ranks[t]) for h, t in m.arcs]
    by_rank = {k: x for x, k in ranks.items()}
    for p in range(1, two_n + 1):
        if not any((h - p - 1) % two_n > (t - p - 1) % two_n for h, t in spans):
            return by_rank[p]
    raise InfeasibleProblem("every gap of the circle is covered")


def _straighten(m: ArcModel, cut_point: Fraction) -> list[tuple[int, int]]:
    # unroll the circle at a seam just past cut_point; arcs that cross
    # the seam keep their exit position but extend to the left of it
    ranks = _rank_map(m.arcs)
    two_n = len(ranks)
    c = ranks[cut_point]
    out: list[tuple[int, int]] = []
    for h, t in m.arcs:
        lh = (ranks[h] - c - 1) % two_n + 1
        lt = (ranks[t] - c - 1) % two_n + 1
        out.append((lh, lt) if lh < lt else (lh - two_n, lt))
    return out


def straighten_at_gap(m: ArcModel) -> IntervalModel:
    """Intervals with the same graph as a model that misses some gap.

    Cutting inside an uncovered gap crosses no arc, so vertex r of the
    result is arc r and every adjacency is preserved exactly.
    """
    if m.n == 0:
        return IntervalModel.build([])
    cut = _uncovered_gap_point(m)
    return IntervalModel.build(_straighten(m, cut))


def arcs_to_intervals_with_sentinel(m: ArcModel) -> IntervalModel:
    """Unroll a canonical model at its standard cut, plus one sentinel.

    Vertex r <= n is arc r; arcs crossing the seam just past the last
    tail become intervals reaching left of the origin.  Vertex n + 1 is
    a sentinel interval that ends at the origin, placed so it meets
    exactly the seam-crossing intervals; that invariant is checked here.
    """
    if not m.canonical:
        raise MalformedModel("the sentinel transfer needs a canonical model")
    if m.n == 0:
        raise EmptyGraph("cannot transfer an empty model")
    two_n = 2 * m.n
    cut = m.arcs[-1][1]
    pairs = _straighten(m, cut)
    h_last = pairs[-1][0]
    sentinel = (h_last - two_n, 0)
    model = IntervalModel.build(pairs + [sentinel])
    s = m.n + 1
    for r in range(1, m.n + 1):
        crosses = pairs[r - 1][0] <= 0
        if overlaps(model, s, r) != crosses:
            raise MalformedModel("sentinel interval meets a non-crossing arc")
    return model


def mwis_circular_arc(m: ArcModel, weights: Weights = None) -> tuple[int, ...]:
    """Maximum-weight independent set of the arc intersection graph.

    Any independent set uses at most one arc of the backward clique at
    the standard cut, so trying each backward arc (with that arc's
    closed neighborhood deleted) and the all-forward case covers every
    candidate.  Each case reduces to intervals.  Ties between equal
    weights go to the lexicographically smallest vertex set.
    """
    if m.n == 0:
        return ()
    if not m.canonical:
        canon, order = canonicalize(m)
        w0 = coerce_weights(m.n, weights)
        sub = mwis_circular_arc(canon, [w0[order[k - 1] - 1] for k in range(1, canon.n + 1)])
        return tuple(sorted(order[v - 1] for v in sub))
    w = coerce_weights(m.n, weights)
    if not m.covers_circle:
        return mwis_interval(straighten_at_gap(m), w)
    split = split_at_cut(m)
    best: Optional[tuple[Fraction, tuple[int, ...]]] = None

    def offer(total: Fraction, chosen: tuple[int, ...]) -> None:
        nonlocal best
        if best is None or total > best[0] or (total == best[0] and chosen < best[1]):
            best = (total, chosen)

    fwd = sorted(split.forward)
    if fwd:
        pairs = _straighten(m, split.cut_point)
        sub = IntervalModel.build([pairs[r - 1] for r in fwd])
        pick = mwis_interval(sub, [w[r - 1] for r in fwd])
        chosen = tuple(fwd[k - 1] for k in pick)
        offer(sum((w[v - 1] for v in chosen), Fraction(0)), chosen)
    else:
        offer(Fraction(0), ())
    for i in sorted(split.backward):
        sub, ids = delete_closed_neighborhood(m, i)
        pick = mwis_interval(sub, [w[r - 1] for r in ids])
        chosen = tuple(sorted((i,) + tuple(ids[k - 1] for k in pick)))
        offer(sum((w[v - 1] for v in chosen), Fraction(0)), chosen)
    assert best is not None
    return best[1]


def _cut_distance_matrix(m: ArcModel, cut_point: Fraction) -> list[list[int]]:
    # distances of the straightened model: an upper bound on the arc
    # graph distances, because straightening only removes adjacencies
    n = m.n
    inf = n + 1
    im = IntervalModel.build(_straighten(m, cut_point))
    strict, order = normalize(im)
    dist = [[inf] * n for _ in range(n)]
    ig = build_interval_graph(strict)
    if ig.is_connected() and n > 0:
        d = apsp_interval(strict)
        for x in range(n):
            ox = order[x] - 1
            row = dist[ox]
            for y in range(n):
                row[order[y] - 1] = d[x][y]
    else:
        d2 = bfs_apsp(ig)
        for x in range(n):
            ox = order[x] - 1
            row = dist[ox]
            for y in range(n):
                val = d2[x][y]
                row[order[y] - 1] = inf if val is None else val
    return dist


def _distance_violations(g: Graph, dist: list[list[int]]) -> bool:
    # an entrywise upper bound on the true distances is exact as soon as
    # every entry is locally consistent: d(u, v) <= 1 + min over
    # neighbors w of v of d(u, w)
    n = g.n
    for u in range(n):
        row = dist[u]
        for v in range(1, n + 1):
            if v - 1 == u:
                continue
            if row[v - 1] > 1 + min(row[w - 1] for w in g.adj[v]):
                return True
    return False


def _relax_to_fixpoint(g: Graph, dist: list[list[int]]) -> None:
    # monotone relaxation keeps every entry an upper bound and stops at
    # the locally consistent matrix, which equals the true distances
    n = g.n
    changed = True
    while changed:
        changed = False
        for u in range(n):
            row = dist[u]
            for v in range(1, n + 1):
                if v - 1 == u:
                    continue
                cand = 1 + min(row[w - 1] for w in g.adj[v])
                if cand < row[v - 1]:
                    row[v - 1] = cand
                    changed = True


def apsp_circular_arc(m: ArcModel) -> list[list[int]]:
    """All-pairs distances of a connected arc intersection graph.

    A model missing a gap is an interval model in disguise and is solved
    there exactly.  Otherwise the model is cut just past two tails on
    roughly opposite sides; each cut yields straightened distances that
    bound the truth from above, and their entrywise minimum is checked
    for local consistency.  While any entry is inconsistent, further
    tail cuts are folded in, and any remaining slack is relaxed away on
    the graph itself, so the result is always exact.
    """
    if m.n == 0:
        raise EmptyGraph("no distances in an empty model")
    if not m.canonical:
        canon, order = canonicalize(m)
        sub = apsp_circular_arc(canon)
        n = m.n
        out = [[0] * n for _ in range(n)]
        for x in range(n):
            ox = order[x] - 1
            for y in range(n):
                out[ox][order[y] - 1] = sub[x][y]
        return out
    g = build_circular_arc_graph(m)
    if not g.is_connected():
        raise DisconnectedGraph("distances need a connected model")
    n = m.n
    if n == 1:
        return [[0]]
    if not m.covers_circle:
        strict, order = normalize(straighten_at_gap(m))
        d = apsp_interval(strict)
        out = [[0] * n for _ in range(n)]
        for x in range(n):
            ox = order[x] - 1
            for y in range(n):
                out[ox][order[y] - 1] = d[x][y]
        return out
    dist = [[n + 1] * n for _ in range(n)]
    for u in range(1, n + 1):
        dist[u - 1][u - 1] = 0
        for v in g.adj[u]:
            dist[u - 1][v - 1] = 1
    first = m.arcs[-1][1]
    second = m.arcs[(n + 1) // 2 - 1][1]
    used = {first, second}
    for cut in (first, second):
        folded = _cut_distance_matrix(m, cut)
        for u in range(n):
            row, frow = dist[u], folded[u]
            for v in range(n):
                if frow[v] < row[v]:
                    row[v] = frow[v]
    if _distance_violations(g, dist):
        for r in range(1, n + 1):
            cut = m.arcs[r - 1][1]
            if cut in used:
                continue
            used.add(cut)
            folded = _cut_distance_matrix(m, cut)
            for u in range(n):
                row, frow = dist[u], folded[u]
                for v in range(n):
                    if frow[v] < row[v]:
                        row[v] = frow[v]
            if not _distance_violations(g, dist):
                break
    _relax_to_fixpoint(g, dist)
    return dist


def is_proper(m: ArcModel) -> bool:
    """True when no arc's span properly contains another arc's span."""
    n = m.n
    if n <= 1:
        return True
    ranks = _rank_map(m.arcs)
    two_n = 2 * n
    spans = [(ranks[h], ranks[t]) for h, t in m.arcs]
    for ho, to in spans:
        end = (to - ho) % two_n
        for hi, ti in spans:
            if (hi, ti) == (ho, to):
                continue
            oh = (hi - ho) % two_n
            ot = (ti - ho) % two_n
            if oh <= end and ot <= end and oh <= ot:
                return False
    return True


@dataclass(frozen=True)
class CIParams:
    """Parameters of the evenly spaced two-family arc construction.

    The circle is scaled so the 2n head positions sit at the integers
    0..2n-1; ``eps`` is the tail offset measured in those lattice steps.
    Offsets of 1/2 or more make endpoints collide or nest one family
    inside the other, so the open interval (0, 1/2) is the whole domain.
    """

    n: int
    k: int
    eps: Fraction

    @staticmethod
    def build(n: int, k: int, eps: object) -> "CIParams":
        if not isinstance(n, int) or not isinstance(k, int):
            raise BadParams("n and k must be integers")
        if not n > k >= 1:
            raise BadParams(f"need n > k >= 1, got n={n}, k={k}")
        try:
            e = Fraction(eps)
        except (TypeError, ValueError) as exc:
            raise BadParams("eps must be rational") from exc
        if not 0 < e < Fraction(1, 2):
            raise BadParams(f"eps must lie strictly between 0 and 1/2, got {e}")
        return CIParams(n, k, e)


def _ci_raw(p: CIParams) -> list[ArcPair]:
    two_n = 2 * p.n
    arcs: list[ArcPair] = []
    for i in range(p.n):
        arcs.append((Fraction(2 * i), (2 * (i + p.k) + p.eps) % two_n))
    for i in range(p.n):
        arcs.append((Fraction(2 * i + 1), (2 * (i + p.k) + 1 - p.eps) % two_n))
    return arcs


def generate_ci(p: CIParams) -> ArcModel:
    """Canonical model of 2n arcs in two evenly rotated families.

    Family one runs from each even position across k vertex spacings
    plus the offset; family two starts half a spacing later and stops
    the offset short.  With the offset below half a lattice step the
    model is proper.
    """
    model, _ = canonicalize(_ci_raw(p))
    return model
