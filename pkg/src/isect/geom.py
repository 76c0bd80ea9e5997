"""Further model families: dotted intervals, tolerance representations,
chords of a circle, disk points, boxes, and the line-graph operator.

Arithmetic is exact throughout: progressions meet via modular reasoning,
disk adjacency compares squared rational distances, and infinite
tolerance is the symbolic math.inf, never a large stand-in number.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .errors import (
    BadParams,
    DimensionMismatch,
    EmptyGraph,
    MalformedModel,
    SharedEndpoint,
    SizeBudgetExceeded,
)
from .graph import Graph

INFINITE_TOLERANCE = math.inf


def _frac(x: object, what: str) -> Fraction:
    try:
        return Fraction(x)  # type: ignore[arg-type]
    except (TypeError, ValueError) as exc:
        raise MalformedModel(f"{what} is not rational: {x!r}") from exc


@dataclass(frozen=True)
class DottedInterval:
    """The arithmetic progression s, s+d, ..., t."""

    s: int
    t: int
    d: int

    @staticmethod
    def build(s: int, t: int, d: int) -> "DottedInterval":
        if not all(isinstance(x, int) for x in (s, t, d)):
            raise MalformedModel("dotted interval needs integer s, t, d")
        if s < 1 or t < 1 or d < 1:
            raise MalformedModel("dotted interval needs positive s, t, d")
        if s > t:
            raise MalformedModel(f"start {s} exceeds end {t}")
        if (t - s) % d:
            raise MalformedModel(f"end {t} is not on the jump grid of {s} mod {d}")
        return DottedInterval(s, t, d)

    def points(self) -> range:
        return range(self.s, self.t + 1, self.d)


def dotted_intersect(x: DottedInterval, y: DottedInterval) -> bool:
    """Do the two progressions share an integer?

    Solved as a congruence system: a common value needs the starts to
    agree modulo gcd of the jumps, and the smallest aligned value must
    fall before both ends.
    """
    lo = max(x.s, y.s)
    hi = min(x.t, y.t)
    if lo > hi:
        return False
    g = math.gcd(x.d, y.d)
    if (y.s - x.s) % g:
        return False
    step = x.d // g * y.d
    # one simultaneous solution, then the first of them at or past lo
    k = (y.s - x.s) // g * pow(x.d // g, -1, y.d // g) % (y.d // g)
    z = x.s + k * x.d
    z += -((z - lo) // step) * step
    return z <= hi


def build_ddig(items: Sequence[DottedInterval]) -> tuple[Graph, int]:
    n = len(items)
    edges = [(i, j)
             for i in range(1, n + 1)
             for j in range(i + 1, n + 1)
             if dotted_intersect(items[i - 1], items[j - 1])]
    return Graph.build(n, edges), max((it.d for it in items), default=0)


@dataclass(frozen=True)
class ToleranceRep:
    """Closed intervals with per-vertex tolerances; points allowed."""

    intervals: tuple[tuple[Fraction, Fraction], ...]
    tolerances: tuple[object, ...]

    @staticmethod
    def build(intervals: Iterable[Sequence[object]],
              tolerances: object) -> "ToleranceRep":
        ivs = []
        for k, iv in enumerate(intervals, start=1):
            lo, hi = iv
            lo, hi = _frac(lo, f"interval {k} left"), _frac(hi, f"interval {k} right")
            if lo > hi:
                raise MalformedModel(f"interval {k} is reversed")
            ivs.append((lo, hi))
        n = len(ivs)
        if isinstance(tolerances, Mapping):
            extra = set(tolerances) - set(range(1, n + 1))
            if extra:
                raise MalformedModel(f"tolerances name unknown vertices {sorted(extra)}")
            raw = [tolerances.get(v, 1) for v in range(1, n + 1)]
        else:
            raw = list(tolerances)  # type: ignore[call-overload]
            if len(raw) != n:
                raise MalformedModel(f"expected {n} tolerances, got {len(raw)}")
        tols: list[object] = []
        for k, t in enumerate(raw, start=1):
            val = t if t == INFINITE_TOLERANCE else _frac(t, f"tolerance {k}")
            if val <= 0:
                raise MalformedModel(f"tolerance {k} must be positive, got {t!r}")
            tols.append(val)
        return ToleranceRep(tuple(ivs), tuple(tols))

    @property
    def n(self) -> int:
        return len(self.intervals)

    def length(self, v: int) -> Fraction:
        lo, hi = self.intervals[v - 1]
        return hi - lo


def build_tolerance_graph(rep: ToleranceRep) -> Graph:
    """Edge iff the overlap length reaches the smaller tolerance.

    Length is measure, not point count, so touching intervals overlap
    with length zero and point intervals are always isolated.
    """
    n = rep.n
    edges = []
    for i in range(1, n + 1):
        lo_i, hi_i = rep.intervals[i - 1]
        for j in range(i + 1, n + 1):
            lo_j, hi_j = rep.intervals[j - 1]
            lo, hi = max(lo_i, lo_j), min(hi_i, hi_j)
            if lo > hi:
                continue
            if hi - lo >= min(rep.tolerances[i - 1], rep.tolerances[j - 1]):
                edges.append((i, j))
    return Graph.build(n, edges)


def classify_tolerance_rep(rep: ToleranceRep) -> dict[str, bool]:
    bounded = all(rep.tolerances[v - 1] <= rep.length(v)
                  for v in range(1, rep.n + 1))
    capped = all(rep.tolerances[v - 1] == INFINITE_TOLERANCE
                 for v in range(1, rep.n + 1)
                 if rep.tolerances[v - 1] > rep.length(v))
    distinct = len(set(rep.tolerances)) == rep.n
    ends = [set(rep.intervals[v - 1]) for v in range(1, rep.n + 1)]
    separated = all(not (ends[i] & ends[j])
                    for i in range(rep.n) for j in range(i + 1, rep.n))
    return {"bounded": bounded, "regular": capped and distinct and separated}


@dataclass(frozen=True)
class ChordModel:
    """Chords of a circle, named by their two positions on the rim."""

    chords: tuple[tuple[int, int], ...]

    @staticmethod
    def build(chords: Iterable[Sequence[int]]) -> "ChordModel":
        out = []
        seen: set[int] = set()
        for k, ch in enumerate(chords, start=1):
            x, y = ch
            if not (isinstance(x, int) and isinstance(y, int)):
                raise MalformedModel(f"chord {k} has non-integer positions")
            if x == y:
                raise SharedEndpoint(f"chord {k} has coinciding endpoints")
            for p in (x, y):
                if p in seen:
                    raise SharedEndpoint(f"position {p} used twice")
                seen.add(p)
            out.append((min(x, y), max(x, y)))
        return ChordModel(tuple(out))

    @property
    def n(self) -> int:
        return len(self.chords)


def chords_cross(a: tuple[int, int], b: tuple[int, int]) -> bool:
    """Endpoints interleave around the circle."""
    (x1, y1), (x2, y2) = sorted((tuple(sorted(a)), tuple(sorted(b))))
    return x1 < x2 < y1 < y2


def build_circle_graph(m: ChordModel) -> Graph:
    n = m.n
    edges = [(i, j)
             for i in range(1, n + 1)
             for j in range(i + 1, n + 1)
             if chords_cross(m.chords[i - 1], m.chords[j - 1])]
    return Graph.build(n, edges)


@dataclass(frozen=True)
class DiskPoints:
    """Plane points adjacent within rational distance threshold r."""

    points: tuple[tuple[Fraction, Fraction], ...]
    r: Fraction

    @staticmethod
    def build(points: Iterable[Sequence[object]], r: object = 1) -> "DiskPoints":
        pts = []
        for k, p in enumerate(points, start=1):
            x, y = p
            pts.append((_frac(x, f"point {k} x"), _frac(y, f"point {k} y")))
        radius = _frac(r, "radius")
        if radius <= 0:
            raise BadParams(f"radius must be positive, got {r!r}")
        return DiskPoints(tuple(pts), radius)

    @property
    def n(self) -> int:
        return len(self.points)


def build_unit_disk_graph(p: DiskPoints) -> Graph:
    """Closed threshold on exact squared distances."""
    n = p.n
    rr = p.r * p.r
    edges = []
    for i in range(1, n + 1):
        xi, yi = p.points[i - 1]
        for j in range(i + 1, n + 1):
            xj, yj = p.points[j - 1]
            if (xi - xj) ** 2 + (yi - yj) ** 2 <= rr:
                edges.append((i, j))
    return Graph.build(n, edges)


@dataclass(frozen=True)
class KBoxModel:
    """Per vertex, a product of k closed intervals."""

    k: int
    boxes: tuple[tuple[tuple[Fraction, Fraction], ...], ...]

    @staticmethod
    def build(k: int, boxes: Iterable[Sequence[Sequence[object]]]) -> "KBoxModel":
        if not isinstance(k, int) or k < 1:
            raise BadParams(f"dimension must be a positive integer, got {k!r}")
        out = []
        for v, box in enumerate(boxes, start=1):
            sides = []
            for c, side in enumerate(box, start=1):
                lo, hi = side
                lo = _frac(lo, f"box {v} side {c} low")
                hi = _frac(hi, f"box {v} side {c} high")
                if lo > hi:
                    raise MalformedModel(f"box {v} side {c} is reversed")
                sides.append((lo, hi))
            if len(sides) != k:
                raise DimensionMismatch(
                    f"box {v} has {len(sides)} sides, expected {k}")
            out.append(tuple(sides))
        return KBoxModel(k, tuple(out))

    @property
    def n(self) -> int:
        return len(self.boxes)


def _coordinate_graph(m: KBoxModel, c: int) -> Graph:
    n = m.n
    edges = []
    for i in range(1, n + 1):
        lo_i, hi_i = m.boxes[i - 1][c]
        for j in range(i + 1, n + 1):
            lo_j, hi_j = m.boxes[j - 1][c]
            if max(lo_i, lo_j) <= min(hi_i, hi_j):
                edges.append((i, j))
    return Graph.build(n, edges)


def build_box_graph(m: KBoxModel) -> Graph:
    """Edge iff the boxes meet, i.e. they overlap in every coordinate."""
    n = m.n
    edges = [(i, j)
             for i in range(1, n + 1)
             for j in range(i + 1, n + 1)
             if all(max(m.boxes[i - 1][c][0], m.boxes[j - 1][c][0])
                    <= min(m.boxes[i - 1][c][1], m.boxes[j - 1][c][1])
                    for c in range(m.k))]
    return Graph.build(n, edges)


def verify_box_representation(g: Graph, m: KBoxModel) -> bool:
    """Is m a box representation of g?

    Also re-derives the built graph as the edge-intersection of the k
    per-coordinate interval graphs and insists the two agree.
    """
    built = build_box_graph(m)
    common = set(_coordinate_graph(m, 0).edges)
    for c in range(1, m.k):
        common &= _coordinate_graph(m, c).edges
    assert built.edges == frozenset(common)
    return g.n == built.n and g.edges == built.edges


def line_graph(g: Graph) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    """One vertex per edge; adjacency is sharing an endpoint.

    Edge labels are assigned in lexicographic endpoint order, so the
    vertex names of the result are reproducible.
    """
    labels = tuple(g.sorted_edges())
    if not labels:
        raise EmptyGraph("the graph has no edges, so its line graph is empty")
    n = len(labels)
    edges = [(i, j)
             for i in range(1, n + 1)
             for j in range(i + 1, n + 1)
             if set(labels[i - 1]) & set(labels[j - 1])]
    return Graph.build(n, edges), labels


def iterate_line_graph(g: Graph, steps: int, *, max_size: int = 20000) -> list[Graph]:
    """Apply the line-graph operator repeatedly.

    Stops early once the sequence reaches a graph with at most one
    vertex, since everything beyond is empty.
    """
    if steps < 1:
        raise BadParams(f"steps must be at least 1, got {steps}")
    out: list[Graph] = []
    cur = g
    for _ in range(steps):
        if len(cur.edges) > max_size:
            raise SizeBudgetExceeded(
                f"line graph would have {len(cur.edges)} vertices, cap {max_size}")
        if cur.edges:
            cur = line_graph(cur)[0]
        else:
            cur = Graph.build(0, [])
        out.append(cur)
        if cur.n <= 1:
            break
    return out
