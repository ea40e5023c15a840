"""Constructive cleaning plans for the structured graph families.

Each function returns a BrushPlan that is meant to be validated by actually
running it through the engine; nothing here is trusted on faith.
"""

from __future__ import annotations

from dataclasses import dataclass

from .engine import BrushPlan, CleaningTrace, run
from .errors import (
    BadSize,
    IncompleteTrace,
    InvalidFamilySpec,
    NotAcyclic,
    NotADecomposition,
    NotAnArc,
    NotRootedTree,
)
from .graphs import Digraph, topological_order, transpose, validate_rotational

Arc = tuple[int, int]


def strategy_transitive(n: int) -> BrushPlan:
    """Front-load the transitive tournament: vertex k (1-indexed) starts with
    n-(2k-1) brushes for k up to floor(n/2); total floor(n^2/4)."""
    if n < 3:
        raise BadSize(f"transitive tournament strategy needs n >= 3, got {n}")
    half = n // 2
    initial = [0] * n
    for k in range(1, half + 1):
        initial[k - 1] = n - (2 * k - 1)
    return BrushPlan(tuple(initial), tuple(range(n)))


def strategy_tt_minus_arc(n: int, e: Arc) -> BrushPlan:
    """Plan for TT_n minus one arc, never using more than floor(n^2/4).

    The initial configuration is the transitive strategy's, adjusted by one
    of eight cases keyed on where the arc's endpoints sit relative to the
    midpoint; four of the cases save a brush outright.
    """
    a0, b0 = e
    if not (0 <= a0 < b0 < n):
        raise NotAnArc(f"({a0}, {b0}) is not an arc of TT_{n}")
    if n < 3:
        raise BadSize(f"needs n >= 3, got {n}")
    base = list(strategy_transitive(n).initial)
    case = classify_tt_arc_case(n, e)
    if case in ("I", "II", "VII", "VIII"):
        base[a0] -= 1
    elif case in ("III", "IV", "VI"):
        base[a0] -= 1
        base[b0] += 1
    # case V: unchanged
    return BrushPlan(tuple(base), tuple(range(n)))


def classify_tt_arc_case(n: int, e: Arc) -> str:
    """Which of the eight arc-deletion cases applies to arc e of TT_n."""
    a, b = e[0] + 1, e[1] + 1
    if not 1 <= a < b <= n:
        raise NotAnArc(f"({e[0]}, {e[1]}) is not an arc of TT_{n}")
    half = n // 2
    if a < half:
        if b <= half:
            return "IV"
        if b == half + 1:
            return "II" if n % 2 == 0 else "III"
        return "I"
    if a == half:
        if b == half + 1:
            return "VII" if n % 2 == 0 else "VI"
        return "VIII"
    return "V"


def tt_case_saves_brush(case: str) -> bool:
    return case in ("I", "II", "VII", "VIII")


def strategy_complete(n: int) -> BrushPlan:
    """Complete digraph: n-i brushes on the i-th vertex; total n(n-1)/2.

    A lone vertex is isolated and needs one brush despite the formula."""
    if n < 1:
        raise BadSize("needs n >= 1")
    if n == 1:
        return BrushPlan((1,), (0,))
    initial = tuple(n - 1 - i for i in range(n))
    return BrushPlan(initial, tuple(range(n)))


def strategy_rooted_tree(t: Digraph) -> BrushPlan:
    """k brushes at the root, one routed along each root-to-leaf path."""
    root = _tree_root(t)
    if t.n == 1:
        return BrushPlan((1,), (0,))
    # leaves under each vertex; arc flow = leaves under its head
    leaves_below = [0] * t.n
    order = []
    stack = [root]
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(t.out_neighbors[v])
    for v in reversed(order):
        kids = t.out_neighbors[v]
        leaves_below[v] = sum(leaves_below[c] for c in kids) if kids else 1
    flows = {(v, c): leaves_below[c] for v, c in t.arcs}
    initial = [0] * t.n
    initial[root] = leaves_below[root]
    return BrushPlan(tuple(initial), tuple(order), flows)


def _tree_root(t: Digraph) -> int:
    roots = [v for v in range(t.n) if t.in_deg(v) == 0]
    if len(roots) != 1 or t.arc_count != t.n - 1:
        raise NotRootedTree("not a tree with all arcs oriented away from one root")
    if any(t.in_deg(v) != 1 for v in range(t.n) if v != roots[0]):
        raise NotRootedTree("some vertex has in-degree != 1")
    # arcs away from a single root with n-1 arcs and in-degree 1 elsewhere
    # implies reachability, but check anyway
    seen = {roots[0]}
    stack = [roots[0]]
    while stack:
        v = stack.pop()
        for w in t.out_neighbors[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != t.n:
        raise NotRootedTree("root does not reach every vertex")
    return roots[0]


def tree_leaf_count(t: Digraph) -> int:
    root = _tree_root(t)
    if t.n == 1:
        return 1
    return sum(1 for v in range(t.n) if t.out_deg(v) == 0)


def strategy_rotational(n: int, symbols) -> BrushPlan:
    """Deficit-filling configuration for a rotational tournament.

    For the consecutive symbol set {1..(n-1)/2} this is the triangular
    configuration with total (n^2-1)/8; for other symbol sets it still
    cleans the graph but may use more brushes.
    """
    s = frozenset(int(x) for x in symbols)
    validate_rotational(n, s)
    m = (n - 1) // 2
    initial = tuple(
        max(0, m - sum(1 for x in s if x < k)) for k in range(1, n + 1)
    )
    return BrushPlan(initial, tuple(range(n)))


# ---------------------------------------------------------------------------
# path decompositions


@dataclass(frozen=True)
class PathDecomposition:
    paths: tuple[tuple[int, ...], ...]  # vertex sequences, length >= 2
    excess: tuple[int, ...]  # d_v = deg+ - deg- per vertex

    @property
    def size(self) -> int:
        return len(self.paths)

    def to_json(self) -> dict:
        return {"paths": [list(p) for p in self.paths], "excess": list(self.excess)}


def perfect_decomposition(g: Digraph) -> PathDecomposition:
    """Arc-disjoint path cover of size exactly half the total degree excess.

    At every vertex the i-th smallest in-arc is chained to the i-th
    smallest out-arc; in a DAG the resulting trails are simple paths and
    their number is (1/2) * sum |deg+ - deg-|.
    """
    if topological_order(g) is None:
        raise NotAcyclic("perfect decomposition requires an acyclic graph")
    succ: dict[Arc, Arc] = {}
    continued: set[Arc] = set()
    for v in range(g.n):
        ins = sorted((u, v) for u in g.in_neighbors[v])
        outs = sorted((v, w) for w in g.out_neighbors[v])
        for a, b in zip(ins, outs):
            succ[a] = b
            continued.add(b)
    paths = []
    for start in g.arcs:
        if start in continued:
            continue
        path = [start[0], start[1]]
        arc = start
        while arc in succ:
            arc = succ[arc]
            path.append(arc[1])
        paths.append(tuple(path))
    excess = tuple(g.out_deg(v) - g.in_deg(v) for v in range(g.n))
    expected = sum(abs(d) for d in excess) // 2
    assert len(paths) == expected, "pairing did not yield a perfect decomposition"
    return PathDecomposition(tuple(paths), excess)


def _check_decomposition(g: Digraph, m: PathDecomposition) -> None:
    seen: set[Arc] = set()
    for path in m.paths:
        if len(path) < 2:
            raise NotADecomposition("path of length zero")
        for a, b in zip(path, path[1:]):
            if not g.has_arc(a, b):
                raise NotADecomposition(f"({a}, {b}) is not an arc")
            if (a, b) in seen:
                raise NotADecomposition(f"arc ({a}, {b}) used twice")
            seen.add((a, b))
    if len(seen) != g.arc_count:
        raise NotADecomposition("some arcs are not covered")


def _levels(g: Digraph) -> list[int]:
    """Longest-path distance from the sources, per vertex."""
    topo = topological_order(g)
    if topo is None:
        raise NotAcyclic("level firing needs an acyclic graph")
    level = [0] * g.n
    for v in topo:
        for w in g.out_neighbors[v]:
            level[w] = max(level[w], level[v] + 1)
    return level


def plan_from_paths(g: Digraph, m: PathDecomposition) -> BrushPlan:
    """One brush per path, fired level by level (compiled to a sequential
    order).  Isolated vertices get one extra brush each: no path can reach
    them but the model still requires a brush there."""
    _check_decomposition(g, m)
    level = _levels(g)
    order = tuple(sorted(range(g.n), key=lambda v: (level[v], v)))
    initial = [0] * g.n
    for path in m.paths:
        initial[path[0]] += 1
    for v in range(g.n):
        if g.is_isolated(v):
            initial[v] += 1
    flows = {arc: 1 for arc in g.arcs}
    return BrushPlan(tuple(initial), order, flows)


def strategy_dag_recursive(g: Digraph) -> BrushPlan:
    """Source/sink peeling construction for DAGs; total <= floor(n^2/4).

    Small graphs are handed to the exact solver; larger ones peel off the
    lowest-index source u and sink v, recurse, and route extra brushes from
    u through the shared neighborhood toward v.
    """
    if topological_order(g) is None:
        raise NotAcyclic("recursive construction requires an acyclic graph")
    if g.n <= 5:
        from .solver import brushing_number_exact

        return brushing_number_exact(g).witness

    u = min(v for v in range(g.n) if g.in_deg(v) == 0)
    v = min(w for w in range(g.n) if g.out_deg(w) == 0 and w != u)
    rest = [w for w in range(g.n) if w not in (u, v)]
    sub, relabel = g.induced(rest)
    unlabel = {new: old for old, new in relabel.items()}
    rec = strategy_dag_recursive(sub)

    initial = [0] * g.n
    for new, cnt in enumerate(rec.initial):
        initial[unlabel[new]] = cnt
    flows: dict[Arc, int] = {}
    if rec.flows is not None:
        for (a, b), f in rec.flows.items():
            flows[(unlabel[a], unlabel[b])] = f
    else:
        # the recursive base always carries flows, but be safe: replay it
        trace = run(sub, rec)
        for (a, b), f in trace.arc_flows().items():
            flows[(unlabel[a], unlabel[b])] = f

    out_u = set(g.out_neighbors[u]) - {v}
    in_v = set(g.in_neighbors[v]) - {u}
    shared = out_u & in_v
    y1 = out_u - shared
    y2 = in_v - shared
    has_uv = g.has_arc(u, v)

    initial[u] += len(shared) + len(y1) + (1 if has_uv else 0)
    for y in sorted(y2):
        initial[y] += 1
    if g.is_isolated(u):
        initial[u] += 1
    if g.is_isolated(v):
        initial[v] += 1

    for x in sorted(shared):
        flows[(u, x)] = 1
        flows[(x, v)] = 1
    for y in sorted(y1):
        flows[(u, y)] = 1
    for y in sorted(y2):
        flows[(y, v)] = 1
    if has_uv:
        flows[(u, v)] = 1

    order = (u,) + tuple(unlabel[w] for w in rec.order) + (v,)
    return BrushPlan(tuple(initial), order, flows)


def transpose_plan(g: Digraph, trace: CleaningTrace) -> BrushPlan:
    """Turn a finished cleaning of g into a plan for the transpose.

    The final brush positions become the initial configuration, each
    brush's traversed path is reversed, and the vertices fire in a
    topological order of the transpose; the totals match.
    """
    if not trace.is_complete(g):
        raise IncompleteTrace("trace did not clean every vertex and arc")
    gt = transpose(g)
    order = topological_order(gt)
    if order is None:
        raise NotAcyclic("transpose plan needs an acyclic graph")
    initial = tuple(trace.final_brushes)
    flows: dict[Arc, int] = {}
    for path in trace.brush_paths:
        for a, b in zip(path, path[1:]):
            flows[(b, a)] = flows.get((b, a), 0) + 1
    return BrushPlan(initial, order, flows or None)
