"""Command-line front door: build graphs, solve, cross-check, generate.

Exit codes: 0 success, 1 domain error (bad model, failed check), 2
usage error.  Edge lists print as one "u v" pair per line, u < v,
lexicographically sorted, so output diffs cleanly across runs.
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction
from typing import Optional, Sequence

from .arcs import apsp_circular_arc, build_circular_arc_graph, mwis_circular_arc
from .chordal import is_chordal
from .errors import BadParams, IsectError
from .generators import GeneratorSpec, generate_model
from .geom import (
    DottedInterval,
    build_box_graph,
    build_circle_graph,
    build_ddig,
    build_tolerance_graph,
    build_unit_disk_graph,
    dotted_intersect,
)
from .graph import Graph, bfs_apsp, coerce_weights, is_tree_t_spanner
from .intervals import (
    apsp_interval,
    build_interval_graph,
    greedy_color,
    maximal_cliques_interval,
    mwis_interval,
    normalize,
    tree_3_spanner,
)
from .modelfile import ModelFile, parse_model_file, emit_model_file
from .oracles import brute_solve, find_hole
from .permutations import (
    build_permutation_graph,
    max_clique_permutation,
    mwis_permutation,
)
from .rng import SplitMix64
from .trapezoids import (
    boxes_incomparable,
    build_trapezoid_graph,
    check_cocomparability_order,
    diagram_adjacent,
    segments_joint,
    to_box_rep,
    to_permutation_diagram,
    to_segment_rep,
    trapezoids_adjacent,
)

_BUILDERS = {
    "interval": build_interval_graph,
    "arcs": build_circular_arc_graph,
    "permutation": build_permutation_graph,
    "trapezoid": build_trapezoid_graph,
    "dotted": lambda items: build_ddig(items)[0],
    "tolerance": build_tolerance_graph,
    "chords": build_circle_graph,
    "disks": build_unit_disk_graph,
    "boxes": build_box_graph,
    "graph": lambda g: g,
}


def _fmt(x: object) -> str:
    f = Fraction(x)
    return str(int(f)) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _graph_of(mf: ModelFile) -> Graph:
    g = _BUILDERS[mf.kind](mf.model)
    if mf.weights is None:
        return g
    return Graph.build(g.n, g.edges,
                       dict(enumerate(mf.weights, start=1)))


def _read_model(path: str) -> ModelFile:
    with open(path, encoding="utf-8") as fh:
        return parse_model_file(fh.read())


# -- build -------------------------------------------------------------------

def _cmd_build(args) -> int:
    g = _graph_of(_read_model(args.model))
    for u, v in g.sorted_edges():
        print(u, v)
    return 0


# -- solve / oracle ----------------------------------------------------------

def _structured_is(mf: ModelFile, weights) -> tuple[int, ...]:
    kind, m = mf.kind, mf.model
    if kind == "interval":
        return mwis_interval(m, weights)
    if kind == "arcs":
        return mwis_circular_arc(m, weights)
    if kind == "permutation":
        return mwis_permutation(m, weights)
    raise BadParams(f"no structured independent-set solver for kind {kind!r}")


def _cmd_solve(args) -> int:
    mf = _read_model(args.model)
    problem = args.problem
    if problem == "mis":
        picked = _structured_is(mf, None)
        print("value", len(picked))
        print("witness", *picked)
    elif problem == "mwis":
        picked = _structured_is(mf, mf.weights)
        wl = coerce_weights(getattr(mf.model, "n", 0), mf.weights)
        print("value", _fmt(sum((wl[v - 1] for v in picked), Fraction(0))))
        print("witness", *picked)
    elif problem == "max_clique":
        if mf.kind == "interval":
            strict, order = normalize(mf.model)
            picked = max(maximal_cliques_interval(strict), key=len)
            best = [order[v - 1] for v in picked]
        elif mf.kind == "permutation":
            best = max_clique_permutation(mf.model)
        else:
            raise BadParams(f"no structured clique solver for kind {mf.kind!r}")
        print("value", len(best))
        print("witness", *sorted(best))
    elif problem == "coloring":
        if mf.kind != "interval":
            raise BadParams(f"no structured coloring for kind {mf.kind!r}")
        colors = greedy_color(mf.model)
        print("value", len(set(colors.values())) if colors else 0)
        print("colors", *(colors[v] for v in sorted(colors)))
    else:
        raise BadParams(f"unknown problem {problem!r}")
    return 0


def _cmd_oracle(args) -> int:
    mf = _read_model(args.model)
    g = _graph_of(mf)
    name = "chromatic_number" if args.problem == "coloring" else args.problem
    sol = brute_solve(g, name, k=args.k)
    print("value", _fmt(sol.value) if name == "mwis" else sol.value)
    if name == "chromatic_number":
        print("colors", *sol.witness)
    elif isinstance(sol.witness, tuple):
        print("witness", *sorted(sol.witness))
    return 0


# -- check -------------------------------------------------------------------

class _SuiteFailure(Exception):
    pass


def _seeds(seed: int, count: int):
    rng = SplitMix64(seed)
    for _ in range(count):
        yield rng.next_u64() >> 1, rng


def _require_kind(kind: Optional[str], allowed: tuple[str, ...], suite: str) -> str:
    got = kind or allowed[0]
    if got not in allowed:
        raise BadParams(f"suite {suite!r} supports kinds {allowed}, got {got!r}")
    return got


def _connected_model(kind: str, n: int, rng: SplitMix64, params=None):
    # redraw seeds until the built graph is connected
    while True:
        mf = generate_model(GeneratorSpec(kind, n, rng.next_u64() >> 1,
                                          params or {}))
        if _BUILDERS[kind](mf.model).is_connected():
            return mf


def _check_umbrella(kind, count, seed) -> int:
    _require_kind(kind, ("interval",), "umbrella")
    for i, (s, rng) in enumerate(_seeds(seed, count)):
        n = 2 + rng.below(30)
        strict, _ = normalize(generate_model(GeneratorSpec("interval", n, s)).model)
        g = build_interval_graph(strict)
        for u, w in g.edges:
            for v in range(u + 1, w):
                if not g.has_edge(v, w):
                    raise _SuiteFailure(
                        f"instance {i}: edge ({u},{w}) but ({v},{w}) missing")
    return count


def _check_spanner(kind, count, seed) -> int:
    _require_kind(kind, ("interval",), "spanner")
    params = {"strict": True, "connected": True}
    for i, (s, rng) in enumerate(_seeds(seed, count)):
        n = 2 + rng.below(60)
        m = generate_model(GeneratorSpec("interval", n, s, params)).model
        g = build_interval_graph(m)
        if not is_tree_t_spanner(g, tree_3_spanner(m).tree, 3):
            raise _SuiteFailure(f"instance {i}: stretch above 3 at n={n}")
    return count


def _check_coloring(kind, count, seed) -> int:
    _require_kind(kind, ("interval",), "coloring")
    for i, (s, rng) in enumerate(_seeds(seed, count)):
        n = 1 + rng.below(8)
        m = generate_model(GeneratorSpec("interval", n, s, {"strict": True})).model
        used = len(set(greedy_color(m).values()))
        omega = max(len(c) for c in maximal_cliques_interval(m))
        if used != omega:
            raise _SuiteFailure(f"instance {i}: {used} colors but omega={omega}")
        chi = brute_solve(build_interval_graph(m), "chromatic_number").value
        if used != chi:
            raise _SuiteFailure(f"instance {i}: {used} colors but chi={chi}")
    return count


def _check_mwis(kind, count, seed) -> int:
    got = _require_kind(kind, ("arcs", "interval", "permutation"), "mwis")
    for i, (s, rng) in enumerate(_seeds(seed, count)):
        n = 2 + rng.below(10)
        mf = generate_model(GeneratorSpec(got, n, s, {"weights": True}))
        picked = _structured_is(mf, mf.weights)
        wl = coerce_weights(getattr(mf.model, "n", n), mf.weights)
        value = sum((wl[v - 1] for v in picked), Fraction(0))
        best = brute_solve(_graph_of(mf), "mwis").value
        if value != best:
            raise _SuiteFailure(f"instance {i}: structured {value}, brute {best}")
    return count


def _check_apsp(kind, count, seed) -> int:
    got = _require_kind(kind, ("interval", "arcs"), "apsp")
    for i, (s, rng) in enumerate(_seeds(seed, count)):
        if got == "interval":
            n = 2 + rng.below(40)
            mf = _connected_model("interval", n, rng,
                                  {"strict": True, "connected": True})
            dist = apsp_interval(mf.model)
        else:
            n = 2 + rng.below(30)
            mf = _connected_model("arcs", n, rng)
            dist = apsp_circular_arc(mf.model)
        if dist != bfs_apsp(_BUILDERS[got](mf.model)):
            raise _SuiteFailure(f"instance {i}: distance matrix mismatch at n={n}")
    return count


def _check_fourway(kind, count, seed) -> int:
    _require_kind(kind, ("trapezoid",), "fourway")
    for i, (s, rng) in enumerate(_seeds(seed, count)):
        n = 1 + rng.below(25)
        m = generate_model(GeneratorSpec("trapezoid", n, s)).model
        g = build_trapezoid_graph(m)
        segs = to_segment_rep(m).segments
        boxes = to_box_rep(m).boxes
        q, pairing = to_permutation_diagram(m)
        if not check_cocomparability_order(g, range(1, n + 1)):
            raise _SuiteFailure(f"instance {i}: index order jumps a gap")
        for a in range(1, n + 1):
            for b in range(a + 1, n + 1):
                votes = {
                    trapezoids_adjacent(m.items[a - 1], m.items[b - 1]),
                    g.has_edge(a, b),
                    segments_joint(segs[a - 1], segs[b - 1]),
                    boxes_incomparable(boxes[a - 1], boxes[b - 1]),
                    diagram_adjacent(q, pairing, a, b),
                }
                if len(votes) != 1:
                    raise _SuiteFailure(
                        f"instance {i}: representations split on ({a},{b})")
    return count


def _check_chordal(kind, count, seed) -> int:
    got = _require_kind(kind, ("graph", "interval"), "chordal")
    for i, (s, rng) in enumerate(_seeds(seed, count)):
        if got == "graph":
            g = generate_model(GeneratorSpec("graph", 1 + rng.below(8), s)).model
            if is_chordal(g) != (find_hole(g) is None):
                raise _SuiteFailure(f"instance {i}: recognizer and holes disagree")
        else:
            m = generate_model(GeneratorSpec("interval", 1 + rng.below(20), s)).model
            if not is_chordal(build_interval_graph(m)):
                raise _SuiteFailure(f"instance {i}: interval graph not chordal")
    return count


def _check_crt(kind, count, seed) -> int:
    _require_kind(kind, ("dotted",), "crt")
    rng = SplitMix64(seed)
    for i in range(count):
        pair = []
        for _ in range(2):
            s = rng.randint(1, 400)
            d = rng.randint(1, 12)
            pair.append(DottedInterval.build(s, s + d * rng.randint(0, 40), d))
        x, y = pair
        if dotted_intersect(x, y) != bool(set(x.points()) & set(y.points())):
            raise _SuiteFailure(f"pair {i}: {x} vs {y}")
    return count


_SUITES = {
    "umbrella": _check_umbrella,
    "spanner": _check_spanner,
    "coloring": _check_coloring,
    "mwis": _check_mwis,
    "apsp": _check_apsp,
    "fourway": _check_fourway,
    "chordal": _check_chordal,
    "crt": _check_crt,
}


def _cmd_check(args) -> int:
    try:
        checked = _SUITES[args.suite](args.kind, args.count, args.seed)
    except _SuiteFailure as exc:
        print(f"FAIL {args.suite}: {exc}", file=sys.stderr)
        return 1
    print(f"ok {args.suite}: checked {checked} instances")
    return 0


# -- gen ---------------------------------------------------------------------

def _cmd_gen(args) -> int:
    params = {}
    if args.k is not None:
        params["k"] = args.k
    text = emit_model_file(generate_model(
        GeneratorSpec(args.kind, args.n, args.seed, params)))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


# -- bench -------------------------------------------------------------------

def _timed(fn) -> tuple[float, object]:
    t0 = time.perf_counter()
    out = fn()
    return time.perf_counter() - t0, out


def _cmd_bench(args) -> int:
    kind = args.kind or "interval"
    rows = []
    for rep in range(max(1, args.count)):
        seed = args.seed + rep
        if kind == "interval":
            m = generate_model(GeneratorSpec(
                "interval", 14, seed, {"strict": True, "connected": True})).model
            g = build_interval_graph(m)
            fast, picked = _timed(lambda: mwis_interval(m))
            slow, sol = _timed(lambda: brute_solve(g, "mis"))
            assert len(picked) == sol.value
            rows.append(("mwis", m.n, fast, slow))
            big = generate_model(GeneratorSpec(
                "interval", 60, seed, {"strict": True, "connected": True})).model
            fast, dist = _timed(lambda: apsp_interval(big))
            slow, oracle = _timed(lambda: bfs_apsp(build_interval_graph(big)))
            assert dist == oracle
            rows.append(("apsp", big.n, fast, slow))
        elif kind == "arcs":
            rng = SplitMix64(seed)
            mf = _connected_model("arcs", 12, rng)
            g = build_circular_arc_graph(mf.model)
            fast, picked = _timed(lambda: mwis_circular_arc(mf.model))
            slow, sol = _timed(lambda: brute_solve(g, "mis"))
            assert len(picked) == sol.value
            rows.append(("mwis", 12, fast, slow))
        elif kind == "permutation":
            p = generate_model(GeneratorSpec("permutation", 14, seed)).model
            g = build_permutation_graph(p)
            fast, picked = _timed(lambda: mwis_permutation(p))
            slow, sol = _timed(lambda: brute_solve(g, "mis"))
            assert len(picked) == sol.value
            rows.append(("mwis", 14, fast, slow))
            fast, clique = _timed(lambda: max_clique_permutation(p))
            slow, sol = _timed(lambda: brute_solve(g, "max_clique"))
            assert len(clique) == sol.value
            rows.append(("max_clique", 14, fast, slow))
        else:
            raise BadParams(f"no bench lane for kind {kind!r}")
    print(f"{'problem':<12}{'n':>5}  {'structured':>12}  {'oracle':>12}")
    for name, n, fast, slow in rows:
        print(f"{name:<12}{n:>5}  {fast:>11.6f}s  {slow:>11.6f}s")
    return 0


# -- entry point -------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isect",
        description="Geometric intersection graphs: build, solve, verify.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="print a model's edge list")
    p.add_argument("--model", required=True, help="model file to read")

    p = sub.add_parser("solve", help="run a structured solver on a model")
    p.add_argument("--model", required=True)
    p.add_argument("--problem", required=True,
                   help="mis, mwis, max_clique, or coloring")

    p = sub.add_parser("oracle", help="run the brute-force solver on a model")
    p.add_argument("--model", required=True)
    p.add_argument("--problem", required=True)
    p.add_argument("--k", type=int, default=None,
                   help="parameter for k-indexed problems")

    p = sub.add_parser("check", help="run an invariant suite on random models")
    p.add_argument("suite", choices=sorted(_SUITES))
    p.add_argument("--kind", default=None, help="model kind, suite default if absent")
    p.add_argument("--count", type=int, default=100, help="instances to draw")
    p.add_argument("--seed", type=int, default=1)

    p = sub.add_parser("gen", help="emit a seeded random model file")
    p.add_argument("--kind", required=True)
    p.add_argument("--n", type=int, required=True, help="model size")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--k", type=int, default=None, help="box dimension")
    p.add_argument("--out", default=None, help="write here instead of stdout")

    p = sub.add_parser("bench", help="time structured solvers against oracles")
    p.add_argument("--kind", default=None)
    p.add_argument("--count", type=int, default=1, help="repetitions per row")
    p.add_argument("--seed", type=int, default=1)
    return parser


_COMMANDS = {
    "build": _cmd_build,
    "solve": _cmd_solve,
    "oracle": _cmd_oracle,
    "check": _cmd_check,
    "gen": _cmd_gen,
    "bench": _cmd_bench,
}


def execute(argv: Sequence[str]) -> int:
    """Run one command line; return the process exit code."""
    try:
        args = _build_parser().parse_args(list(argv))
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return _COMMANDS[args.command](args)
    except IsectError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(execute(sys.argv[1:]))


if __name__ == "__main__":
    main()
