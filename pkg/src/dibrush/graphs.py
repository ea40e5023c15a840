"""Immutable simple digraphs, family generators, transforms, and serialization.

Vertices are the integers 0..n-1.  Arcs are ordered (tail, head) pairs kept
in sorted (canonical) order, so equal graphs serialize identically.  Loops
and parallel arcs are rejected; antiparallel pairs (u,v)/(v,u) are allowed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import IndexOutOfRange, InvalidFamilySpec, ParseError


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: tuple[tuple[int, int], ...]
    # adjacency caches, derived in __post_init__
    out_neighbors: tuple[tuple[int, ...], ...] = field(
        init=False, repr=False, compare=False
    )
    in_neighbors: tuple[tuple[int, ...], ...] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        arcs = tuple(sorted((int(u), int(v)) for u, v in self.arcs))
        if len(set(arcs)) != len(arcs):
            raise InvalidFamilySpec("duplicate arc")
        if arcs != tuple(self.arcs):
            object.__setattr__(self, "arcs", arcs)
        for u, v in arcs:
            if u == v:
                raise InvalidFamilySpec(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise IndexOutOfRange(f"arc ({u}, {v}) outside 0..{self.n - 1}")
        outs = [[] for _ in range(self.n)]
        ins = [[] for _ in range(self.n)]
        for u, v in arcs:
            outs[u].append(v)
            ins[v].append(u)
        object.__setattr__(self, "out_neighbors", tuple(tuple(a) for a in outs))
        object.__setattr__(self, "in_neighbors", tuple(tuple(sorted(a)) for a in ins))

    def out_deg(self, v: int) -> int:
        return len(self.out_neighbors[v])

    def in_deg(self, v: int) -> int:
        return len(self.in_neighbors[v])

    def is_isolated(self, v: int) -> bool:
        return self.out_deg(v) == 0 and self.in_deg(v) == 0

    def has_arc(self, u: int, v: int) -> bool:
        return v in self.out_neighbors[u]

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def remove_arc(self, u: int, v: int) -> "Digraph":
        if not self.has_arc(u, v):
            raise IndexOutOfRange(f"({u}, {v}) is not an arc")
        return Digraph(self.n, tuple(a for a in self.arcs if a != (u, v)))

    def induced(self, vertices: list[int]) -> tuple["Digraph", dict[int, int]]:
        """Subgraph induced by `vertices`; also returns old->new label map."""
        keep = sorted(vertices)
        relabel = {v: i for i, v in enumerate(keep)}
        arcs = tuple(
            (relabel[u], relabel[v])
            for u, v in self.arcs
            if u in relabel and v in relabel
        )
        return Digraph(len(keep), arcs), relabel


@dataclass(frozen=True)
class FamilySpec:
    """Parameters for a named graph family."""

    family: str  # transitive-tournament | complete | rotational | rooted-tree | random-dag
    n: int = 0
    symbols: frozenset[int] = frozenset()
    children: tuple[tuple[int, ...], ...] = ()  # rooted-tree: children[v]
    p: float = 0.5
    seed: int = 0


def transitive_tournament(n: int) -> Digraph:
    """TT_n: vertex i (0-indexed) beats every vertex j > i, so deg+ = n-1-i."""
    return Digraph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_digraph(n: int) -> Digraph:
    return Digraph(n, tuple((i, j) for i in range(n) for j in range(n) if i != j))


def rotational_tournament(n: int, symbols) -> Digraph:
    """Tournament on Z_n with arc (x, y) iff (y - x) mod n is in the symbol set."""
    s = frozenset(int(x) for x in symbols)
    validate_rotational(n, s)
    return Digraph(
        n, tuple((x, (x + d) % n) for x in range(n) for d in s)
    )


def validate_rotational(n: int, s: frozenset[int]) -> None:
    if n < 3 or n % 2 == 0:
        raise InvalidFamilySpec(f"rotational tournament needs odd n >= 3, got {n}")
    if len(s) != (n - 1) // 2:
        raise InvalidFamilySpec(f"symbol set must have {(n - 1) // 2} elements")
    for x in s:
        if not 1 <= x <= n - 1:
            raise InvalidFamilySpec(f"symbol {x} outside 1..{n - 1}")
        if (n - x) % n in s:
            raise InvalidFamilySpec(f"symbols {x} and {n - x} are complementary mod {n}")


def rooted_tree(children: tuple[tuple[int, ...], ...]) -> Digraph:
    """Tree rooted at vertex 0 from per-vertex child lists, arcs away from 0."""
    n = len(children)
    arcs = []
    seen = {0}
    queue = [0]
    while queue:
        v = queue.pop()
        for c in children[v]:
            if c in seen or not 0 <= c < n:
                raise InvalidFamilySpec(f"child list is not a tree at vertex {c}")
            seen.add(c)
            arcs.append((v, c))
            queue.append(c)
    if len(seen) != n:
        raise InvalidFamilySpec("child lists do not reach every vertex")
    return Digraph(n, tuple(arcs))


def random_dag(n: int, p: float, seed: int) -> Digraph:
    """Seeded DAG: each forward arc (i, j), i < j, kept with probability p."""
    rng = random.Random(seed)
    arcs = tuple(
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    )
    return Digraph(n, arcs)


def random_digraph(n: int, p: float, seed: int) -> Digraph:
    """Seeded digraph (cycles allowed): each ordered pair kept with probability p."""
    rng = random.Random(seed)
    arcs = tuple(
        (i, j) for i in range(n) for j in range(n) if i != j and rng.random() < p
    )
    return Digraph(n, arcs)


def random_rooted_tree(n: int, seed: int) -> Digraph:
    """Seeded rooted tree on n >= 1 vertices: parent of v is uniform in 0..v-1."""
    rng = random.Random(seed)
    return Digraph(n, tuple((rng.randrange(i), i) for i in range(1, n)))


def build(spec: FamilySpec) -> Digraph:
    if spec.family == "transitive-tournament":
        return transitive_tournament(spec.n)
    if spec.family == "complete":
        return complete_digraph(spec.n)
    if spec.family == "rotational":
        return rotational_tournament(spec.n, spec.symbols)
    if spec.family == "rooted-tree":
        return rooted_tree(spec.children)
    if spec.family == "random-dag":
        return random_dag(spec.n, spec.p, spec.seed)
    raise InvalidFamilySpec(f"unknown family {spec.family!r}")


def transpose(g: Digraph) -> Digraph:
    return Digraph(g.n, tuple((v, u) for u, v in g.arcs))


@dataclass(frozen=True)
class StructureReport:
    is_dag: bool
    sources: frozenset[int]
    sinks: frozenset[int]
    isolated: frozenset[int]
    topo_order: tuple[int, ...] | None


def topological_order(g: Digraph) -> tuple[int, ...] | None:
    """Lexicographically smallest topological order, or None if cyclic."""
    import heapq

    indeg = [g.in_deg(v) for v in range(g.n)]
    ready = [v for v in range(g.n) if indeg[v] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for w in g.out_neighbors[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(ready, w)
    return tuple(order) if len(order) == g.n else None


def classify(g: Digraph) -> StructureReport:
    topo = topological_order(g)
    return StructureReport(
        is_dag=topo is not None,
        sources=frozenset(
            v for v in range(g.n) if g.in_deg(v) == 0 and g.out_deg(v) > 0
        ),
        sinks=frozenset(
            v for v in range(g.n) if g.out_deg(v) == 0 and g.in_deg(v) > 0
        ),
        isolated=frozenset(v for v in range(g.n) if g.is_isolated(v)),
        topo_order=topo,
    )


def parse(text: str) -> Digraph:
    """Parse the edge-list format: "n m" header then m lines "u v".

    Blank lines and lines starting with '#' are ignored.
    """
    header = None
    arcs = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(line_no, f"expected two integers, got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(line_no, f"expected two integers, got {line!r}") from None
        if header is None:
            header = (a, b)
        else:
            arcs.append((a, b))
    if header is None:
        raise ParseError(0, "empty input")
    n, m = header
    if n < 0 or m < 0:
        raise ParseError(1, "negative header values")
    if len(arcs) != m:
        raise ParseError(0, f"header promises {m} arcs, found {len(arcs)}")
    for u, v in arcs:
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"arc ({u}, {v}) outside 0..{n - 1}")
    return Digraph(n, tuple(arcs))


def serialize(g: Digraph) -> str:
    lines = [f"{g.n} {g.arc_count}"]
    lines.extend(f"{u} {v}" for u, v in g.arcs)
    return "\n".join(lines) + "\n"


# DOT styling is fixed so regenerated figures are bit-stable.
_DOT_CLEAN_NODE = 'style=filled, fillcolor=white'
_DOT_DIRTY_NODE = 'style=filled, fillcolor=black, fontcolor=white'
_DOT_CLEAN_ARC = 'style=dashed'
_DOT_DIRTY_ARC = 'style=solid'


def export_dot(g: Digraph, step=None) -> str:
    """Graphviz source; with a trace step, clean elements are drawn dashed/white."""
    clean_v = set(step.clean_vertices) if step is not None else set()
    clean_a = set(step.clean_arcs) if step is not None else set()
    lines = ["digraph brushing {"]
    for v in range(g.n):
        style = _DOT_CLEAN_NODE if v in clean_v else _DOT_DIRTY_NODE
        label = str(v)
        if step is not None and step.brushes[v]:
            label = f"{v} ({step.brushes[v]})"
        lines.append(f'  {v} [label="{label}", {style}];')
    for u, v in g.arcs:
        style = _DOT_CLEAN_ARC if (u, v) in clean_a else _DOT_DIRTY_ARC
        lines.append(f"  {u} -> {v} [{style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
