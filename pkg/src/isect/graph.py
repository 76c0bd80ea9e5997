"""Undirected graph value type and exact structural utilities.

Vertices are the integers 1..n.  Edges are unordered pairs stored as
(min, max) tuples.  Optional vertex weights are exact rationals; nothing
in this module ever goes through floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Optional

from .errors import BadParams, DisconnectedGraph, MalformedModel, NotSubgraph

# weight arguments accepted by the solvers: none, a vertex-keyed mapping
# with default 1, or a dense length-n sequence
WeightsArg = Optional[object]


def coerce_weights(n: int, weights: WeightsArg) -> list[Fraction]:
    """Turn a weight argument into a dense list of non-negative rationals."""
    if weights is None:
        vals = [Fraction(1)] * n
    elif isinstance(weights, Mapping):
        vals = [Fraction(weights.get(r, 1)) for r in range(1, n + 1)]
    else:
        seq = list(weights)  # type: ignore[call-overload]
        if len(seq) != n:
            raise BadParams(f"expected {n} weights, got {len(seq)}")
        vals = [Fraction(x) for x in seq]
    for r, w in enumerate(vals, start=1):
        if w < 0:
            raise BadParams(f"negative weight {w} at vertex {r}")
    return vals


def _normalize_edge(u: int, v: int, n: int) -> tuple[int, int]:
    if not (isinstance(u, int) and isinstance(v, int)):
        raise MalformedModel(f"edge endpoints must be integers, got ({u!r}, {v!r})")
    if u == v:
        raise MalformedModel(f"self-loop at vertex {u}")
    if not (1 <= u <= n and 1 <= v <= n):
        raise MalformedModel(f"edge ({u}, {v}) outside vertex range 1..{n}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable undirected graph on vertices 1..n."""

    n: int
    edges: frozenset[tuple[int, int]]
    weights: Optional[Mapping[int, Fraction]] = None

    @staticmethod
    def build(n: int, edges: Iterable[tuple[int, int]],
              weights: Optional[Mapping[int, object]] = None) -> "Graph":
        if n < 0:
            raise MalformedModel(f"vertex count must be non-negative, got {n}")
        normalized = frozenset(_normalize_edge(u, v, n) for u, v in edges)
        wmap = None
        if weights is not None:
            wmap = {}
            for v, w in weights.items():
                if not 1 <= v <= n:
                    raise MalformedModel(f"weight for unknown vertex {v}")
                wf = Fraction(w)
                if wf < 0:
                    raise MalformedModel(f"negative weight {wf} at vertex {v}")
                wmap[v] = wf
        return Graph(n, normalized, wmap)

    def __post_init__(self):
        for u, v in self.edges:
            if not (1 <= u < v <= self.n):
                raise MalformedModel(f"edge ({u}, {v}) is not normalized for n={self.n}")

    @cached_property
    def adj(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}

    @cached_property
    def adj_bits(self) -> list[int]:
        """Adjacency as bitmasks; bit v-1 of entry u set iff (u,v) is an edge."""
        bits = [0] * (self.n + 1)
        for u, v in self.edges:
            bits[u] |= 1 << (v - 1)
            bits[v] |= 1 << (u - 1)
        return bits

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def weight(self, v: int) -> Fraction:
        if self.weights is None:
            return Fraction(1)
        return self.weights.get(v, Fraction(1))

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def complement(self) -> "Graph":
        comp = [(u, v) for u in range(1, self.n + 1) for v in range(u + 1, self.n + 1)
                if (u, v) not in self.edges]
        return Graph.build(self.n, comp, self.weights)

    def induced(self, keep: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Induced subgraph on `keep`, relabeled 1..k; returns (graph, new->old map)."""
        old = sorted(set(keep))
        for v in old:
            if not 1 <= v <= self.n:
                raise MalformedModel(f"vertex {v} outside 1..{self.n}")
        pos = {v: i + 1 for i, v in enumerate(old)}
        edges = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        weights = None
        if self.weights is not None:
            weights = {pos[v]: self.weights[v] for v in old if v in self.weights}
        return Graph.build(len(old), edges, weights), {i + 1: v for i, v in enumerate(old)}

    def components(self) -> list[frozenset[int]]:
        seen: set[int] = set()
        comps = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            stack = [start]
            comp = {start}
            seen.add(start)
            while stack:
                x = stack.pop()
                for y in self.adj[x]:
                    if y not in comp:
                        comp.add(y)
                        seen.add(y)
                        stack.append(y)
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1


@dataclass(frozen=True)
class Metrics:
    """Eccentricities and the derived distance invariants of a connected graph."""

    ecc: dict[int, int] = field(compare=False)
    radius: int = 0
    diameter: int = 0
    center: frozenset[int] = frozenset()
    mean_distance: Fraction = Fraction(0)


def bfs_distances(g: Graph, source: int) -> list[Optional[int]]:
    """Distances from source to every vertex; None marks unreachable.

    Index 0 of the result is unused padding.  Uses bitmask frontiers so
    that dense oracle sweeps stay cheap.
    """
    dist: list[Optional[int]] = [None] * (g.n + 1)
    dist[source] = 0
    adj = g.adj_bits
    visited = 1 << (source - 1)
    frontier = visited
    d = 0
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            v = low.bit_length()
            nxt |= adj[v]
            f ^= low
        nxt &= ~visited
        if not nxt:
            break
        d += 1
        visited |= nxt
        f = nxt
        while f:
            low = f & -f
            dist[low.bit_length()] = d
            f ^= low
        frontier = nxt
    return dist


def bfs_apsp(g: Graph) -> list[list[Optional[int]]]:
    """All-pairs distances by repeated BFS, as an n x n matrix.

    Row i, column j holds the distance between vertices i+1 and j+1;
    unreachable pairs hold None, never a large stand-in value.
    """
    return [bfs_distances(g, s)[1:] for s in g.vertices()]


def metrics(g: Graph) -> Metrics:
    """Eccentricity, radius, diameter, center and mean distance.

    Mean distance is the average over ordered distinct pairs, kept exact.
    """
    if g.n == 0:
        raise MalformedModel("metrics undefined on the empty graph")
    if not g.is_connected():
        raise DisconnectedGraph("metrics need a connected graph")
    if g.n == 1:
        return Metrics({1: 0}, 0, 0, frozenset({1}), Fraction(0))
    ecc: dict[int, int] = {}
    total = 0
    for v in g.vertices():
        row = bfs_distances(g, v)[1:]
        ecc[v] = max(row)  # type: ignore[type-var]
        total += sum(row)  # type: ignore[arg-type]
    radius = min(ecc.values())
    diameter = max(ecc.values())
    center = frozenset(v for v, e in ecc.items() if e == radius)
    mean = Fraction(total, g.n * (g.n - 1))
    return Metrics(ecc, radius, diameter, center, mean)


def hinge_vertices(g: Graph) -> frozenset[int]:
    """Vertices whose removal increases some remaining pairwise distance."""
    if not g.is_connected():
        raise DisconnectedGraph("hinge vertices are defined on connected graphs")
    base = bfs_apsp(g)
    hinges = set()
    for x in g.vertices():
        rest = [v for v in g.vertices() if v != x]
        sub, back = g.induced(rest)
        sub_d = bfs_apsp(sub)
        for i in range(sub.n):
            for j in range(i + 1, sub.n):
                old = base[back[i + 1] - 1][back[j + 1] - 1]
                new = sub_d[i][j]
                if new is None or new > old:  # type: ignore[operator]
                    hinges.add(x)
                    break
            if x in hinges:
                break
    return frozenset(hinges)


def cut_vertices_and_blocks(g: Graph) -> tuple[frozenset[int], list[frozenset[int]]]:
    """Articulation vertices and biconnected blocks (as vertex sets).

    Blocks cover every edge; an isolated vertex forms a trivial block of
    its own so that the block list always covers the vertex set.
    """
    n = g.n
    disc = [0] * (n + 1)
    low = [0] * (n + 1)
    timer = [1]
    cuts: set[int] = set()
    blocks: list[frozenset[int]] = []
    edge_stack: list[tuple[int, int]] = []

    def emit_block(until: tuple[int, int]) -> None:
        members: set[int] = set()
        while True:
            e = edge_stack.pop()
            members.add(e[0])
            members.add(e[1])
            if e == until:
                break
        blocks.append(frozenset(members))

    for root in g.vertices():
        if disc[root]:
            continue
        if not g.adj[root]:
            blocks.append(frozenset({root}))
            disc[root] = timer[0]
            timer[0] += 1
            continue
        # iterative DFS; stack entries are (vertex, parent, neighbor iterator)
        stack = [(root, 0, iter(sorted(g.adj[root])))]
        disc[root] = low[root] = timer[0]
        timer[0] += 1
        root_children = 0
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if not disc[w]:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer[0]
                    timer[0] += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(sorted(g.adj[w]))))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                pv = stack[-1][0]
                low[pv] = min(low[pv], low[v])
                if low[v] >= disc[pv]:
                    emit_block((pv, v))
                    if pv != root:
                        cuts.add(pv)
        if root_children > 1:
            cuts.add(root)
    return frozenset(cuts), blocks


def is_tree_t_spanner(g: Graph, h: Graph, t) -> bool:
    """Check that h is a spanning tree of g with stretch factor at most t.

    t may be an int or Fraction.  Raises NotSubgraph when h has an edge
    g lacks, DisconnectedGraph when g itself is not connected.
    """
    stretch = Fraction(t)
    if h.n != g.n:
        raise NotSubgraph(f"spanning subgraph must keep n={g.n}, got {h.n}")
    for e in h.edges:
        if e not in g.edges:
            raise NotSubgraph(f"edge {e} of the claimed spanner is not in the graph")
    if not g.is_connected():
        raise DisconnectedGraph("stretch is undefined for a disconnected graph")
    if len(h.edges) != g.n - 1 or not h.is_connected():
        return False
    dg = bfs_apsp(g)
    dh = bfs_apsp(h)
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if dh[i][j] > stretch * dg[i][j]:  # type: ignore[operator]
                return False
    return True
