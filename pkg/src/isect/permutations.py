"""Permutation models: crossing diagrams, point dominance, and the MIS tree.

Vertex i is a segment from position i on the upper line to the position
of i in the sequence on the lower line; two vertices are adjacent when
their segments cross.  Mapping vertex i to the plane point (i, position
of i) turns independent sets into chains that increase in both
coordinates, which drives every algorithm here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .errors import MalformedModel, NodeBudgetExceeded, NotAPermutation
from .graph import Graph, WeightsArg, coerce_weights

Point = tuple[int, int]
ORIGIN: Point = (0, 0)


@dataclass(frozen=True)
class Permutation:
    """A bijection on 1..n, stored with its inverse."""

    pi: tuple[int, ...]
    inv: tuple[int, ...]

    @staticmethod
    def build(seq: Iterable[object]) -> "Permutation":
        pi = tuple(seq)
        n = len(pi)
        if any(not isinstance(x, int) for x in pi):
            raise NotAPermutation(f"sequence entries must be integers, got {pi!r}")
        if sorted(pi) != list(range(1, n + 1)):
            raise NotAPermutation(f"{pi!r} is not a permutation of 1..{n}")
        inv = [0] * n
        for pos, v in enumerate(pi, start=1):
            inv[v - 1] = pos
        return Permutation(pi, tuple(inv))

    @property
    def n(self) -> int:
        return len(self.pi)

    def position(self, v: int) -> int:
        """The lower-line position of vertex v."""
        return self.inv[v - 1]


@dataclass(frozen=True)
class PointRep:
    """One plane point (i, position of i) per vertex, plus the origin."""

    points: tuple[Point, ...]

    @staticmethod
    def from_permutation(p: Permutation) -> "PointRep":
        return PointRep(tuple((v, p.position(v)) for v in range(1, p.n + 1)))

    @property
    def origin(self) -> Point:
        return ORIGIN

    def point(self, v: int) -> Point:
        return self.points[v - 1]


@dataclass(frozen=True)
class PointRelation:
    connected: bool
    directly_non_connected: bool


def _non_connected(p: Point, q: Point) -> bool:
    return (p[0] < q[0] and p[1] < q[1]) or (p[0] > q[0] and p[1] > q[1])


def point_relation(rep: PointRep, p: Point, q: Point) -> PointRelation:
    """How two points of the representation relate.

    Points whose coordinates agree in order are non-connected, and
    directly so when no third point chains strictly between them in both
    coordinates; otherwise the segments behind them cross.
    """
    known = set(rep.points) | {ORIGIN}
    if p not in known or q not in known:
        raise MalformedModel("relation queries need points of the representation")
    if p == q:
        raise MalformedModel("relation queries need two distinct points")
    if not _non_connected(p, q):
        return PointRelation(True, False)
    lo, hi = (p, q) if p[0] < q[0] else (q, p)
    direct = not any(
        lo[0] < r[0] < hi[0] and lo[1] < r[1] < hi[1]
        and _non_connected(lo, r) and _non_connected(r, hi)
        for r in rep.points)
    return PointRelation(False, direct)


def build_permutation_graph(p: Permutation) -> Graph:
    """Edge (i, j) iff the segments of i and j cross."""
    n = p.n
    edges = [(i, j)
             for i in range(1, n + 1)
             for j in range(i + 1, n + 1)
             if p.position(i) > p.position(j)]
    return Graph.build(n, edges)


def complement_permutation(p: Permutation) -> Permutation:
    """Reverse the sequence; the new graph is the old one's complement.

    Reversal flips every lower-line position, so each pair of segments
    swaps between crossing and parallel.
    """
    return Permutation.build(tuple(reversed(p.pi)))


def _direct_children(points: Sequence[Point], base: Point) -> tuple[Point, ...]:
    # the immediate dominance successors: above and right of base with an
    # empty open box in between
    out = []
    for q in points:
        if not (q[0] > base[0] and q[1] > base[1]):
            continue
        if any(base[0] < r[0] < q[0] and base[1] < r[1] < q[1] for r in points):
            continue
        out.append(q)
    return tuple(sorted(out))


@dataclass(frozen=True)
class MISTree:
    """The chain tree of the point representation, kept in folded form.

    Children depend only on the point, so the map below describes the
    whole unfolded tree; ``node_count`` is the size that unfolded tree
    would have, which the budget bounds.
    """

    root: Point
    children: Mapping[Point, tuple[Point, ...]]
    node_count: int
    cap: int


def build_mis_tree(p: Permutation, cap: Optional[int] = None) -> MISTree:
    """Root at the origin; children are the direct dominance successors.

    Walking root to leaf visits a strictly increasing chain of points,
    so paths never repeat a vertex.  The unfolded node count can blow up
    combinatorially, hence the budget with its explicit error.
    """
    n = p.n
    if cap is None:
        cap = 10 * n * n if n else 1
    rep = PointRep.from_permutation(p)
    pts = rep.points
    children: dict[Point, tuple[Point, ...]] = {ORIGIN: _direct_children(pts, ORIGIN)}
    for q in pts:
        children[q] = _direct_children(pts, q)
    # points sorted by decreasing first coordinate see their children first
    counts: dict[Point, int] = {}
    for q in sorted(pts, reverse=True):
        counts[q] = 1 + sum(counts[c] for c in children[q])
    total = 1 + sum(counts[c] for c in children[ORIGIN])
    if total > cap:
        raise NodeBudgetExceeded(f"chain tree has {total} nodes, cap is {cap}")
    return MISTree(ORIGIN, children, total, cap)


def enumerate_mis(p: Permutation, cap: Optional[int] = None) -> tuple[tuple[int, ...], ...]:
    """All maximal independent sets, one per root-to-leaf chain.

    Every leaf chain is a maximal independent set and every maximal
    independent set shows up as one; the family is deduplicated and
    sorted.
    """
    tree = build_mis_tree(p, cap)
    found: set[tuple[int, ...]] = set()
    path: list[int] = []

    def walk(node: Point) -> None:
        kids = tree.children[node]
        if not kids:
            found.add(tuple(path))
            return
        for c in kids:
            path.append(c[0])
            walk(c)
            path.pop()

    walk(ORIGIN)
    return tuple(sorted(found))


def _chain_dp(p: Permutation, w: list[Fraction]) -> list[Fraction]:
    # best[v - 1]: heaviest increasing chain that starts at vertex v
    n = p.n
    best = [Fraction(0)] * n
    for v in range(n, 0, -1):
        tail = Fraction(0)
        for u in range(v + 1, n + 1):
            if p.position(u) > p.position(v) and best[u - 1] > tail:
                tail = best[u - 1]
        best[v - 1] = w[v - 1] + tail
    return best


def mwis_permutation(p: Permutation, weights: WeightsArg = None) -> tuple[int, ...]:
    """Maximum-weight independent set, lexicographically smallest witness.

    The heaviest chain is computed twice: once along the folded chain
    tree and once as a heaviest increasing subsequence of the points;
    the two totals must agree.  The witness then admits vertices in
    index order whenever the optimum stays reachable, and stops as soon
    as the remaining target is zero.
    """
    n = p.n
    w = coerce_weights(n, weights)
    best = _chain_dp(p, w)
    total = max(best, default=Fraction(0))
    if total < 0:
        total = Fraction(0)
    # same maximum along direct-successor steps only: refining a chain
    # into direct steps never loses weight
    rep = PointRep.from_permutation(p)
    pts = rep.points
    tree_best: dict[Point, Fraction] = {}
    for q in sorted(pts, reverse=True):
        kids = _direct_children(pts, q)
        tail = max((tree_best[c] for c in kids), default=Fraction(0))
        tree_best[q] = w[q[0] - 1] + tail
    start = _direct_children(pts, ORIGIN)
    tree_total = max((tree_best[c] for c in start), default=Fraction(0))
    assert tree_total == total, "chain tree and subsequence DP disagree"
    chosen: list[int] = []
    rem = total
    last_pos = 0
    for v in range(1, n + 1):
        if rem == 0:
            break
        if p.position(v) > last_pos and best[v - 1] == rem:
            chosen.append(v)
            rem -= w[v - 1]
            last_pos = p.position(v)
    return tuple(chosen)


def max_clique_permutation(p: Permutation) -> tuple[int, ...]:
    """Vertices of a longest decreasing subsequence of the sequence.

    Reading the chosen positions left to right, the values decrease;
    those values pairwise cross, so they form a clique of maximum size.
    The earliest viable position is taken at every step.
    """
    n = p.n
    if n == 0:
        return ()
    longest = [0] * (n + 1)
    for k in range(n, 0, -1):
        tail = 0
        for m in range(k + 1, n + 1):
            if p.pi[m - 1] < p.pi[k - 1] and longest[m] > tail:
                tail = longest[m]
        longest[k] = 1 + tail
    size = max(longest)
    out: list[int] = []
    need, prev_pos = size, 0
    while need > 0:
        k = prev_pos + 1
        while longest[k] != need or (prev_pos and p.pi[k - 1] >= p.pi[prev_pos - 1]):
            k += 1
        out.append(p.pi[k - 1])
        prev_pos, need = k, need - 1
    return tuple(sorted(out))
