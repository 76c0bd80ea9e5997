"""JSON model files: one tagged document per geometric model.

A file is an object {"kind": ..., "items": [...]} with optional
"weights" and kind-specific extras.  Exact rationals travel as strings
like "3/4" (or decimal strings); floats are rejected outright so no
value is ever silently rounded.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .arcs import ArcModel
from .errors import IsectError, SchemaError, ValidationError
from .geom import (
    INFINITE_TOLERANCE,
    ChordModel,
    DiskPoints,
    DottedInterval,
    KBoxModel,
    ToleranceRep,
)
from .graph import Graph
from .intervals import IntervalModel
from .permutations import Permutation
from .trapezoids import TrapezoidModel

KINDS = ("interval", "arcs", "permutation", "trapezoid", "dotted",
         "tolerance", "chords", "disks", "boxes", "graph")


@dataclass(frozen=True)
class ModelFile:
    """A parsed model document: the tag, the typed model, the extras."""

    kind: str
    model: object
    weights: Optional[tuple[Fraction, ...]] = None


def _number(raw: object, path: str) -> Fraction:
    if isinstance(raw, bool) or isinstance(raw, float):
        raise SchemaError(f"expected an integer or rational string, got {raw!r}",
                          path)
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, str):
        try:
            return Fraction(raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"bad rational literal {raw!r}", path) from exc
    raise SchemaError(f"expected an integer or rational string, got {raw!r}", path)


def _integer(raw: object, path: str) -> int:
    if isinstance(raw, bool) or not isinstance(raw, int):
        raise SchemaError(f"expected an integer, got {raw!r}", path)
    return raw


def _record(raw: object, path: str) -> Mapping[str, object]:
    if not isinstance(raw, dict):
        raise SchemaError(f"expected an object, got {type(raw).__name__}", path)
    return raw


def _field(rec: Mapping[str, object], name: str, path: str) -> object:
    if name not in rec:
        raise SchemaError(f"missing field {name!r}", path)
    return rec[name]


def _by_id(items: Sequence[object], path: str, fields: tuple[str, ...],
           parse=_number) -> list[tuple]:
    """Collect per-item field tuples, ordered by the mandatory id 1..n."""
    rows: dict[int, tuple] = {}
    for k, raw in enumerate(items):
        here = f"{path}[{k}]"
        rec = _record(raw, here)
        ident = _integer(_field(rec, "id", here), f"{here}.id")
        if ident in rows:
            raise SchemaError(f"duplicate id {ident}", here)
        rows[ident] = tuple(parse(_field(rec, f, here), f"{here}.{f}")
                            for f in fields)
    n = len(items)
    if sorted(rows) != list(range(1, n + 1)):
        raise SchemaError(f"ids must cover 1..{n} exactly", path)
    return [rows[i] for i in range(1, n + 1)]


def _single_record(items: Sequence[object], path: str) -> Mapping[str, object]:
    if len(items) != 1:
        raise SchemaError(f"expected exactly one record, got {len(items)}", path)
    return _record(items[0], f"{path}[0]")


def _weights(doc: Mapping[str, object], n: int) -> Optional[tuple[Fraction, ...]]:
    raw = doc.get("weights")
    if raw is None:
        return None
    path = "$.weights"
    if isinstance(raw, dict):
        vals = [Fraction(1)] * n
        for key, val in raw.items():
            try:
                ident = int(key)
            except ValueError as exc:
                raise SchemaError(f"weight key {key!r} is not a vertex id",
                                  path) from exc
            if not 1 <= ident <= n:
                raise SchemaError(f"weight names unknown vertex {ident}", path)
            vals[ident - 1] = _number(val, f"{path}.{key}")
        return tuple(vals)
    if isinstance(raw, list):
        if len(raw) != n:
            raise SchemaError(f"expected {n} weights, got {len(raw)}", path)
        return tuple(_number(v, f"{path}[{k}]") for k, v in enumerate(raw))
    raise SchemaError("weights must be a list or an id-keyed object", path)


def _intp(x: Fraction, path: str) -> int:
    if x.denominator != 1:
        raise SchemaError(f"expected an integer, got {x}", path)
    return int(x)


def parse_model_file(text: str) -> ModelFile:
    """Parse and validate one model document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}", "$") from exc
    doc = _record(doc, "$")
    kind = _field(doc, "kind", "$")
    if kind not in KINDS:
        raise SchemaError(f"unknown kind {kind!r}", "$.kind")
    items = _field(doc, "items", "$")
    if not isinstance(items, list):
        raise SchemaError("items must be a list", "$.items")
    model = _PARSERS[kind](doc, items)
    n = getattr(model, "n", len(items))
    return ModelFile(kind, model, _weights(doc, n))


def _wrap(build, *args):
    try:
        return build(*args)
    except (SchemaError, ValidationError):
        raise
    except IsectError as exc:
        raise ValidationError(str(exc)) from exc


def _parse_interval(doc, items):
    rows = _by_id(items, "$.items", ("a", "b"))
    return _wrap(IntervalModel.build, rows)


def _parse_arcs(doc, items):
    rows = _by_id(items, "$.items", ("h", "t"))
    return _wrap(ArcModel.build, rows)


def _parse_permutation(doc, items):
    rec = _single_record(items, "$.items")
    seq = _field(rec, "pi", "$.items[0]")
    if not isinstance(seq, list):
        raise SchemaError("pi must be a list", "$.items[0].pi")
    vals = [_integer(x, f"$.items[0].pi[{k}]") for k, x in enumerate(seq)]
    return _wrap(Permutation.build, vals)


def _parse_trapezoid(doc, items):
    rows = _by_id(items, "$.items", ("a", "b", "c", "d"))
    cells = [tuple(_intp(x, "$.items") for x in row) for row in rows]
    return _wrap(TrapezoidModel.build, cells)


def _parse_dotted(doc, items):
    rows = _by_id(items, "$.items", ("s", "t", "d"))
    return tuple(_wrap(DottedInterval.build,
                       *(_intp(x, "$.items") for x in row))
                 for row in rows)


def _parse_tolerance(doc, items):
    rows: dict[int, tuple] = {}
    for k, raw in enumerate(items):
        here = f"$.items[{k}]"
        rec = _record(raw, here)
        ident = _integer(_field(rec, "id", here), f"{here}.id")
        if ident in rows:
            raise SchemaError(f"duplicate id {ident}", here)
        a = _number(_field(rec, "a", here), f"{here}.a")
        b = _number(_field(rec, "b", here), f"{here}.b")
        tol_raw = _field(rec, "tol", here)
        tol = (INFINITE_TOLERANCE if tol_raw == "inf"
               else _number(tol_raw, f"{here}.tol"))
        rows[ident] = (a, b, tol)
    n = len(items)
    if sorted(rows) != list(range(1, n + 1)):
        raise SchemaError(f"ids must cover 1..{n} exactly", "$.items")
    ordered = [rows[i] for i in range(1, n + 1)]
    return _wrap(ToleranceRep.build,
                 [(a, b) for a, b, _ in ordered], [t for _, _, t in ordered])


def _parse_chords(doc, items):
    rows = _by_id(items, "$.items", ("x", "y"))
    cells = [tuple(_intp(x, "$.items") for x in row) for row in rows]
    return _wrap(ChordModel.build, cells)


def _parse_disks(doc, items):
    rows = _by_id(items, "$.items", ("x", "y"))
    r = _number(_field(doc, "r", "$"), "$.r")
    return _wrap(DiskPoints.build, rows, r)


def _parse_boxes(doc, items):
    rows: dict[int, tuple] = {}
    for k, raw in enumerate(items):
        here = f"$.items[{k}]"
        rec = _record(raw, here)
        ident = _integer(_field(rec, "id", here), f"{here}.id")
        if ident in rows:
            raise SchemaError(f"duplicate id {ident}", here)
        sides = _field(rec, "intervals", here)
        if not isinstance(sides, list) or not sides:
            raise SchemaError("intervals must be a non-empty list",
                              f"{here}.intervals")
        box = []
        for c, side in enumerate(sides):
            spath = f"{here}.intervals[{c}]"
            if not isinstance(side, list) or len(side) != 2:
                raise SchemaError("each side must be a [low, high] pair", spath)
            box.append((_number(side[0], spath), _number(side[1], spath)))
        rows[ident] = tuple(box)
    n = len(items)
    if sorted(rows) != list(range(1, n + 1)):
        raise SchemaError(f"ids must cover 1..{n} exactly", "$.items")
    ordered = [rows[i] for i in range(1, n + 1)]
    k = len(ordered[0]) if ordered else 1
    return _wrap(KBoxModel.build, k, ordered)


def _parse_graph(doc, items):
    rec = _single_record(items, "$.items")
    n = _integer(_field(rec, "n", "$.items[0]"), "$.items[0].n")
    raw_edges = _field(rec, "edges", "$.items[0]")
    if not isinstance(raw_edges, list):
        raise SchemaError("edges must be a list", "$.items[0].edges")
    edges = []
    for k, e in enumerate(raw_edges):
        path = f"$.items[0].edges[{k}]"
        if not isinstance(e, list) or len(e) != 2:
            raise SchemaError("each edge must be a [u, v] pair", path)
        edges.append((_integer(e[0], path), _integer(e[1], path)))
    return _wrap(Graph.build, n, edges)


_PARSERS = {
    "interval": _parse_interval,
    "arcs": _parse_arcs,
    "permutation": _parse_permutation,
    "trapezoid": _parse_trapezoid,
    "dotted": _parse_dotted,
    "tolerance": _parse_tolerance,
    "chords": _parse_chords,
    "disks": _parse_disks,
    "boxes": _parse_boxes,
    "graph": _parse_graph,
}


def _num_out(x) -> object:
    f = Fraction(x)
    return int(f) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _emit_items(mf: ModelFile) -> list:
    kind, m = mf.kind, mf.model
    if kind == "interval":
        return [{"id": i, "a": _num_out(a), "b": _num_out(b)}
                for i, (a, b) in enumerate(m.intervals, start=1)]
    if kind == "arcs":
        return [{"id": i, "h": _num_out(h), "t": _num_out(t)}
                for i, (h, t) in enumerate(m.arcs, start=1)]
    if kind == "permutation":
        return [{"pi": list(m.pi)}]
    if kind == "trapezoid":
        return [{"id": i, "a": a, "b": b, "c": c, "d": d}
                for i, (a, b, c, d) in enumerate(m.items, start=1)]
    if kind == "dotted":
        return [{"id": i, "s": it.s, "t": it.t, "d": it.d}
                for i, it in enumerate(m, start=1)]
    if kind == "tolerance":
        return [{"id": i, "a": _num_out(a), "b": _num_out(b),
                 "tol": "inf" if t == INFINITE_TOLERANCE else _num_out(t)}
                for i, ((a, b), t)
                in enumerate(zip(m.intervals, m.tolerances), start=1)]
    if kind == "chords":
        return [{"id": i, "x": x, "y": y}
                for i, (x, y) in enumerate(m.chords, start=1)]
    if kind == "disks":
        return [{"id": i, "x": _num_out(x), "y": _num_out(y)}
                for i, (x, y) in enumerate(m.points, start=1)]
    if kind == "boxes":
        return [{"id": i,
                 "intervals": [[_num_out(lo), _num_out(hi)] for lo, hi in box]}
                for i, box in enumerate(m.boxes, start=1)]
    if kind == "graph":
        return [{"n": m.n, "edges": [[u, v] for u, v in m.sorted_edges()]}]
    raise SchemaError(f"unknown kind {kind!r}", "$.kind")


def emit_model_file(mf: ModelFile) -> str:
    """Serialize a model document in canonical form.

    The output is stable: fixed key order, sorted structures, rationals
    as "p/q" strings, a trailing newline.  Parsing and re-emitting any
    emitted text reproduces it byte for byte.
    """
    doc: dict[str, object] = {"kind": mf.kind}
    if mf.kind == "disks":
        doc["r"] = _num_out(mf.model.r)
    doc["items"] = _emit_items(mf)
    if mf.weights is not None:
        doc["weights"] = [_num_out(w) for w in mf.weights]
    return json.dumps(doc, indent=2) + "\n"
