"""Interval models and the algorithms that exploit their structure.

An interval model is a list of closed intervals [a_r, b_r] with exact
rational endpoints, one per vertex r in 1..n.  A strict model has all 2n
endpoints pairwise distinct and is indexed by increasing right endpoint;
the tree, distance, spanner and clique routines all lean on that order.
"""

from __future__ import annotations

import heapq
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Mapping, Optional, Sequence, Union

import numpy as np

from .errors import (
    BadParams,
    DisconnectedGraph,
    EmptyGraph,
    InstanceTooLarge,
    MalformedModel,
    NotStrict,
)
from .graph import Graph, coerce_weights


@dataclass(frozen=True)
class IntervalModel:
    """Closed rational intervals indexed by the vertices 1..n."""

    intervals: tuple[tuple[Fraction, Fraction], ...]
    strict: bool = False

    @staticmethod
    def build(intervals: Iterable[tuple[object, object]],
              strict: bool = False) -> "IntervalModel":
        pairs = []
        for r, pair in enumerate(intervals, start=1):
            try:
                raw_a, raw_b = pair
                a, b = Fraction(raw_a), Fraction(raw_b)
            except (TypeError, ValueError, ZeroDivisionError) as exc:
                raise MalformedModel(
                    f"interval {r}: {pair!r} is not a pair of rationals") from exc
            if a >= b:
                raise MalformedModel(
                    f"interval {r}: [{a}, {b}] has no interior; points are rejected")
            pairs.append((a, b))
        model = IntervalModel(tuple(pairs), strict)
        if strict:
            model._check_strict()
        return model

    def _check_strict(self) -> None:
        pts = [x for ab in self.intervals for x in ab]
        if len(set(pts)) != len(pts):
            raise NotStrict("strict models need pairwise distinct endpoints")
        rights = [b for _, b in self.intervals]
        if any(x >= y for x, y in zip(rights, rights[1:])):
            raise NotStrict("strict models are indexed by increasing right endpoint")

    @property
    def n(self) -> int:
        return len(self.intervals)

    def left(self, r: int) -> Fraction:
        return self.intervals[r - 1][0]

    def right(self, r: int) -> Fraction:
        return self.intervals[r - 1][1]


def overlaps(m: IntervalModel, i: int, j: int) -> bool:
    """Closed-interval intersection test; touching endpoints count."""
    ai, bi = m.intervals[i - 1]
    aj, bj = m.intervals[j - 1]
    return max(ai, aj) <= min(bi, bj)


def build_interval_graph(m: IntervalModel) -> Graph:
    """Intersection graph of the model: edge (i,j) iff the intervals meet."""
    edges = []
    iv = m.intervals
    for i in range(len(iv)):
        ai, bi = iv[i]
        for j in range(i + 1, len(iv)):
            aj, bj = iv[j]
            if max(ai, aj) <= min(bi, bj):
                edges.append((i + 1, j + 1))
    return Graph.build(m.n, edges)


def _events(m: IntervalModel) -> list[tuple[Fraction, int, int]]:
    # left endpoints sort before right endpoints at equal coordinates, so
    # touching intervals are simultaneously active at the shared point
    ev = []
    for r, (a, b) in enumerate(m.intervals, start=1):
        ev.append((a, 0, r))
        ev.append((b, 1, r))
    ev.sort()
    return ev


def normalize(m: IntervalModel) -> tuple[IntervalModel, tuple[int, ...]]:
    """Rewrite a model onto the endpoints 1..2n and re-index it strictly.

    Coordinate ties are broken left-endpoint-first, which keeps touching
    intervals adjacent.  Because re-indexing permutes the vertices, the
    second return value gives, for each new vertex, the original index it
    represents.  The relabeled graph is checked against the input's.
    """
    lo: dict[int, int] = {}
    hi: dict[int, int] = {}
    for pos, (_, side, r) in enumerate(_events(m), start=1):
        if side == 0:
            lo[r] = pos
        else:
            hi[r] = pos
    order = sorted(range(1, m.n + 1), key=lambda r: hi[r])
    strict = IntervalModel.build([(lo[r], hi[r]) for r in order], strict=True)
    old_edges = build_interval_graph(m).edges
    relabeled = set()
    for u, v in build_interval_graph(strict).edges:
        x, y = order[u - 1], order[v - 1]
        relabeled.add((x, y) if x < y else (y, x))
    if relabeled != old_edges:
        raise MalformedModel("normalization changed the intersection graph")
    return strict, tuple(order)


@dataclass(frozen=True)
class IntervalTree:
    """Rooted spanning tree of a connected strict model, parent(u) = H(u).

    H(u) and L(u) are the highest and lowest indexed vertices whose
    intervals meet u's (u itself when no neighbour is higher or lower).
    level(u) is the tree depth below the root n; the level sets partition
    1..n into blocks of consecutive integers.
    """

    n: int
    parent: Mapping[int, int]
    highest: tuple[int, ...]
    lowest: tuple[int, ...]
    level: tuple[int, ...]
    levels: tuple[frozenset[int], ...]
    height: int
    main_path: tuple[int, ...]

    @property
    def root(self) -> int:
        return self.n

    def H(self, u: int) -> int:
        return self.highest[u - 1]

    def L(self, u: int) -> int:
        return self.lowest[u - 1]

    def tree_graph(self) -> Graph:
        return Graph.build(self.n, [(u, p) for u, p in self.parent.items()])


def _highest_lowest(m: IntervalModel) -> tuple[list[int], list[int]]:
    # H(u) = max{w : a_w <= b_u}; L(u) = min{w : b_w >= a_u}; both tests
    # coincide with adjacency for strict models because b is increasing
    n = m.n
    a: list = [p[0] for p in m.intervals]
    b: list = [p[1] for p in m.intervals]
    if all(x.denominator == 1 for x in a) and all(x.denominator == 1 for x in b):
        # integer endpoints compare natively, which large models feel
        a = [x.numerator for x in a]
        b = [x.numerator for x in b]
    by_a = sorted(range(n), key=a.__getitem__)
    high = [0] * (n + 1)
    p = 0
    seen = 0
    for u in range(1, n + 1):
        while p < n and a[by_a[p]] <= b[u - 1]:
            seen = max(seen, by_a[p] + 1)
            p += 1
        high[u] = seen
    # sweeping u by increasing a makes the bisection a shared pointer
    low = [0] * (n + 1)
    q = 0
    for i in by_a:
        while q < n and b[q] < a[i]:
            q += 1
        low[i + 1] = q + 1
    return high, low


def build_interval_tree(m: IntervalModel) -> IntervalTree:
    """Tree with parent(u) = H(u), plus levels, height and the main path."""
    if not m.strict:
        raise NotStrict("the interval tree needs a strict model")
    n = m.n
    if n == 0:
        raise EmptyGraph("no tree on an empty model")
    high, low = _highest_lowest(m)
    for u in range(1, n):
        if high[u] == u:
            raise DisconnectedGraph(f"vertex {u} meets no later interval")
    parent = {u: high[u] for u in range(1, n)}
    level = [0] * (n + 1)
    for u in range(n - 1, 0, -1):
        level[u] = level[high[u]] + 1
    height = level[1]
    buckets: list[set[int]] = [set() for _ in range(height + 1)]
    for u in range(1, n + 1):
        buckets[level[u]].add(u)
    main = [1]
    while main[-1] != n:
        main.append(high[main[-1]])
    return IntervalTree(
        n=n,
        parent=parent,
        highest=tuple(high[1:]),
        lowest=tuple(low[1:]),
        level=tuple(level[1:]),
        levels=tuple(frozenset(s) for s in buckets),
        height=height,
        main_path=tuple(main),
    )


def distance_query(t: IntervalTree, g: Graph, u: int, v: int) -> int:
    """Exact distance between u and v from the level structure.

    Same-level vertices are at distance 1 or 2.  Otherwise the lower
    indexed vertex is the deeper one; it climbs its parent chain to the
    vertex z1 one level below the target's level, and the answer is the
    climb length plus 1, 2 or 3 according to whether z1, its parent, or
    neither is adjacent to the target.
    """
    if not (1 <= u <= t.n and 1 <= v <= t.n):
        raise MalformedModel(f"vertices {u}, {v} outside 1..{t.n}")
    if u == v:
        return 0
    if u > v:
        u, v = v, u
    if g.has_edge(u, v):
        return 1
    lu, lv = t.level[u - 1], t.level[v - 1]
    if lu == lv:
        return 2
    z1 = u
    while t.level[z1 - 1] > lv + 1:
        z1 = t.highest[z1 - 1]
    climbed = lu - lv - 1
    if g.has_edge(z1, v):
        return climbed + 1
    z2 = t.highest[z1 - 1]
    if g.has_edge(z2, v):
        return climbed + 2
    return climbed + 3


def apsp_interval(m: IntervalModel) -> list[list[int]]:
    """All-pairs distances of a connected strict model in quadratic work.

    For u < v the distance is 1 + k where k counts the parent-chain hops
    from u needed before the chain's right endpoint reaches a_v; each row
    is therefore a single sorted search of the chain's right endpoints.
    """
    if not m.strict:
        raise NotStrict("the distance recurrence needs a strict model")
    n = m.n
    if n == 0:
        raise EmptyGraph("no distances on an empty model")
    high, _ = _highest_lowest(m)
    for u in range(1, n):
        if high[u] == u:
            raise DisconnectedGraph(f"vertex {u} meets no later interval")
    # rank-compress the endpoints so searches run on machine integers
    pts = sorted(x for ab in m.intervals for x in ab)
    rank = {x: i for i, x in enumerate(pts)}
    a = np.array([rank[p[0]] for p in m.intervals], dtype=np.int64)
    b = [rank[p[1]] for p in m.intervals]
    out = np.zeros((n, n), dtype=np.int64)
    for u in range(1, n):
        chain = []
        x = u
        while True:
            chain.append(b[x - 1])
            if x == n:
                break
            x = high[x]
        ks = np.searchsorted(np.array(chain, dtype=np.int64), a[u:], side="left")
        out[u - 1, u:] = ks + 1
    out = out + out.T
    return out.tolist()


def diameter_and_center(m: IntervalModel) -> tuple[int, frozenset[int]]:
    """Diameter by the level rule, center by eccentricity scan.

    The diameter is the tree height h unless some deepest-but-one level
    vertex misses the main-path vertex at level 1, in which case it is
    h + 1.
    """
    t = build_interval_tree(m)
    if t.n == 1:
        return 0, frozenset({1})
    w1 = t.main_path[-2]
    tight = all(v == w1 or overlaps(m, v, w1) for v in t.levels[1])
    diam = t.height if tight else t.height + 1
    dist = apsp_interval(m)
    ecc = [max(row) for row in dist]
    radius = min(ecc)
    center = frozenset(i + 1 for i, e in enumerate(ecc) if e == radius)
    return diam, center


@dataclass(frozen=True)
class SpannerTree:
    """Spanning tree with stretch at most 3 and its per-level anchors.

    main_vertices[l] is the main-path vertex at level l; every other
    vertex hangs directly off the anchor just above it.
    """

    tree: Graph
    stretch: Fraction
    main_vertices: tuple[int, ...]


def tree_3_spanner(m: IntervalModel) -> SpannerTree:
    """Spanning tree whose distances stretch the graph's by at most 3.

    Main-path vertices keep their chain edges; a vertex strictly between
    consecutive main-path vertices is reparented onto the higher of the
    two, an edge the chain edge above it guarantees to exist.
    """
    t = build_interval_tree(m)
    n = t.n
    mp = list(t.main_path)
    edges = [(mp[i], mp[i + 1]) for i in range(len(mp) - 1)]
    on_path = set(mp)
    for u in range(1, n + 1):
        if u in on_path:
            continue
        j = bisect_left(mp, u)
        edges.append((u, mp[j]))
    return SpannerTree(
        tree=Graph.build(n, edges),
        stretch=Fraction(3),
        main_vertices=tuple(reversed(mp)),
    )


def greedy_color(m: IntervalModel) -> dict[int, int]:
    """Proper coloring by a left-to-right sweep with the lowest free color.

    Colors are 1-based.  The number used equals the deepest point
    overlap, which is also the largest clique size, so the count is
    optimal.
    """
    color: dict[int, int] = {}
    free: list[int] = []
    next_color = 1
    for _, side, r in _events(m):
        if side == 0:
            if free:
                color[r] = heapq.heappop(free)
            else:
                color[r] = next_color
                next_color += 1
        else:
            heapq.heappush(free, color[r])
    return color


Weights = Union[None, Mapping[int, object], Sequence[object]]


def _best_weight(m: IntervalModel, w: list[Fraction], cands: Iterable[int]) -> Fraction:
    # max total weight of a pairwise disjoint subfamily of cands
    order = sorted(cands, key=lambda r: m.intervals[r - 1][1])
    rights = [m.intervals[r - 1][1] for r in order]
    best = [Fraction(0)] * (len(order) + 1)
    for k, r in enumerate(order, start=1):
        a = m.intervals[r - 1][0]
        j = bisect_left(rights, a)  # entries before j end strictly left of a
        best[k] = max(best[k - 1], best[j] + w[r - 1])
    return best[-1]


def mwis_interval(m: IntervalModel, weights: Weights = None) -> tuple[int, ...]:
    """Maximum-weight independent set, lexicographically smallest witness.

    Weights default to 1 and must be non-negative rationals.  Vertices
    are admitted in index order whenever the optimum stays reachable;
    once the remaining target hits zero the set is complete, so zero
    weight vertices are never padded on.
    """
    w = coerce_weights(m.n, weights)
    n = m.n
    total = _best_weight(m, w, range(1, n + 1))
    chosen: list[int] = []
    rem = total
    for v in range(1, n + 1):
        if rem == 0:
            break
        if any(overlaps(m, v, s) for s in chosen):
            continue
        cands = [x for x in range(v + 1, n + 1)
                 if not overlaps(m, x, v)
                 and all(not overlaps(m, x, s) for s in chosen)]
        if w[v - 1] + _best_weight(m, w, cands) == rem:
            chosen.append(v)
            rem -= w[v - 1]
    return tuple(chosen)


def maximal_cliques_interval(m: IntervalModel) -> tuple[tuple[int, ...], ...]:
    """Maximal cliques of a strict model, left to right.

    The active set is snapshotted whenever it is about to shrink right
    after having grown; scanning by coordinate makes each vertex's
    cliques consecutive in the returned order and caps the count at n.
    """
    if not m.strict:
        raise NotStrict("the clique sweep needs pairwise distinct endpoints")
    active: set[int] = set()
    grew = False
    out: list[tuple[int, ...]] = []
    for _, side, r in _events(m):
        if side == 0:
            active.add(r)
            grew = True
        else:
            if grew:
                out.append(tuple(sorted(active)))
            active.discard(r)
            grew = False
    return tuple(out)


def has_consecutive_ones(matrix: Sequence[Sequence[int]]) -> Optional[tuple[int, ...]]:
    """Row order making every column's 1s contiguous, or None.

    Rows are indexed 0-based in the witness.  The search tries all row
    permutations in lexicographic order, so inputs are capped at 8 rows.
    """
    rows = [tuple(row) for row in matrix]
    if len(rows) > 8:
        raise InstanceTooLarge(f"{len(rows)} rows; the permutation search caps at 8")
    if not rows:
        return ()
    width = len(rows[0])
    for row in rows:
        if len(row) != width:
            raise BadParams("matrix rows have unequal lengths")
        if any(x not in (0, 1) for x in row):
            raise BadParams("matrix entries must be 0 or 1")
    cols = [[i for i, row in enumerate(rows) if row[c]] for c in range(width)]
    for perm in permutations(range(len(rows))):
        pos = {r: k for k, r in enumerate(perm)}
        ok = True
        for ones in cols:
            if not ones:
                continue
            ps = [pos[r] for r in ones]
            if max(ps) - min(ps) + 1 != len(ps):
                ok = False
                break
        if ok:
            return perm
    return None
