"""Step-by-step execution of a brushing plan.

A plan fixes the initial brush counts and the firing order, and optionally
pins per-arc brush flows.  Firing vertex v requires deg+(v) brushes on hand
(one brush if v is isolated); every out-arc of v is then traversed by at
least one brush.  Brushes arriving at an already-fired vertex are stranded
but still clean the arc they traversed.  Brushes are distinguishable
tokens: when v fires, lower-numbered brushes are assigned to lower-index
out-arcs, which makes traces fully deterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import IllegalFlow, InsufficientBrushes
from .graphs import Digraph

Arc = tuple[int, int]


@dataclass(frozen=True)
class BrushPlan:
    initial: tuple[int, ...]
    order: tuple[int, ...]
    flows: dict[Arc, int] | None = None

    def __post_init__(self):
        object.__setattr__(self, "initial", tuple(int(x) for x in self.initial))
        object.__setattr__(self, "order", tuple(int(x) for x in self.order))
        if any(x < 0 for x in self.initial):
            raise ValueError("negative initial brush count")

    @property
    def total(self) -> int:
        return sum(self.initial)

    def to_json(self) -> dict:
        out = {"initial": list(self.initial), "order": list(self.order)}
        if self.flows is not None:
            out["flows"] = [
                {"u": u, "v": v, "f": f} for (u, v), f in sorted(self.flows.items())
            ]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "BrushPlan":
        flows = None
        if data.get("flows") is not None:
            flows = {(e["u"], e["v"]): e["f"] for e in data["flows"]}
        return cls(tuple(data["initial"]), tuple(data["order"]), flows)


@dataclass(frozen=True)
class TraceStep:
    t: int
    brushes: tuple[int, ...]
    clean_vertices: frozenset[int]
    clean_arcs: frozenset[Arc]


@dataclass(frozen=True)
class CleaningTrace:
    steps: tuple[TraceStep, ...]
    total: int
    order: tuple[int, ...]
    # brush_paths[i] is the vertex sequence visited by brush i (length 1 if
    # the brush never moved)
    brush_paths: tuple[tuple[int, ...], ...] = field(compare=False)

    @property
    def final_brushes(self) -> tuple[int, ...]:
        return self.steps[-1].brushes

    @property
    def n(self) -> int:
        return len(self.steps[0].brushes)

    def is_complete(self, g: Digraph) -> bool:
        last = self.steps[-1]
        return len(last.clean_vertices) == g.n and len(last.clean_arcs) == g.arc_count

    def arc_flows(self) -> dict[Arc, int]:
        """Number of brushes that traversed each arc."""
        flows: dict[Arc, int] = {}
        for path in self.brush_paths:
            for a, b in zip(path, path[1:]):
                flows[(a, b)] = flows.get((a, b), 0) + 1
        return flows

    def to_json(self) -> dict:
        return {
            "steps": [
                {
                    "t": s.t,
                    "brushes": list(s.brushes),
                    "clean_vertices": sorted(s.clean_vertices),
                    "clean_arcs": [list(a) for a in sorted(s.clean_arcs)],
                }
                for s in self.steps
            ],
            "total": self.total,
        }


def firing_threshold(g: Digraph, v: int) -> int:
    """Brushes needed for v to fire: deg+(v), or 1 for an isolated vertex."""
    if g.is_isolated(v):
        return 1
    return g.out_deg(v)


def default_dispersal(
    g: Digraph, v: int, available: int, fired: set[int]
) -> list[int]:
    """Per-arc flows when the plan does not pin them.

    One brush per out-arc, then the surplus goes one brush at a time,
    round-robin, to out-neighbors that have not fired yet (lowest vertex
    index first).  With no unfired out-neighbor the surplus stays at v.
    """
    outs = g.out_neighbors[v]
    flows = [1] * len(outs)
    surplus = available - len(outs)
    live = [i for i, w in enumerate(outs) if w not in fired]
    if live:
        k = 0
        while surplus > 0:
            flows[live[k % len(live)]] += 1
            k += 1
            surplus -= 1
    return flows


def validate_plan_shape(g: Digraph, plan: BrushPlan) -> None:
    if len(plan.initial) != g.n:
        raise ValueError(f"initial has {len(plan.initial)} entries, graph has {g.n}")
    if sorted(plan.order) != list(range(g.n)):
        raise ValueError("order is not a permutation of the vertices")
    if plan.flows is not None:
        for arc in g.arcs:
            f = plan.flows.get(arc, 0)
            if f < 1:
                raise IllegalFlow(arc, "every arc needs flow >= 1")
        for arc in plan.flows:
            if not g.has_arc(*arc):
                raise IllegalFlow(arc, "not an arc of the graph")


def run(g: Digraph, plan: BrushPlan) -> CleaningTrace:
    """Simulate the plan; raises if some vertex cannot fire."""
    validate_plan_shape(g, plan)

    # brush ids are dense: vertex 0's initial brushes first, then vertex 1's, ...
    at: list[list[int]] = [[] for _ in range(g.n)]
    paths: list[list[int]] = []
    for v in range(g.n):
        for _ in range(plan.initial[v]):
            at[v].append(len(paths))
            paths.append([v])

    fired: set[int] = set()
    clean_arcs: set[Arc] = set()
    steps = [
        TraceStep(0, tuple(plan.initial), frozenset(), frozenset())
    ]

    for t, v in enumerate(plan.order, start=1):
        available = len(at[v])
        need = firing_threshold(g, v)
        if available < need:
            raise InsufficientBrushes(v, available, need)

        outs = g.out_neighbors[v]  # already sorted by head index
        if plan.flows is not None:
            flows = [plan.flows[(v, w)] for w in outs]
            if sum(flows) > available:
                raise IllegalFlow(
                    (v, outs[0]) if outs else (v, v),
                    f"out-flows sum to {sum(flows)}, only {available} brushes present",
                )
        else:
            flows = default_dispersal(g, v, available, fired)

        movers = sorted(at[v])
        idx = 0
        for w, f in zip(outs, flows):
            for _ in range(f):
                b = movers[idx]
                idx += 1
                paths[b].append(w)
                at[w].append(b)
            clean_arcs.add((v, w))
        at[v] = movers[idx:]  # retained surplus (or the isolated vertex's brush)
        fired.add(v)

        steps.append(
            TraceStep(
                t,
                tuple(len(at[u]) for u in range(g.n)),
                frozenset(fired),
                frozenset(clean_arcs),
            )
        )

    return CleaningTrace(
        steps=tuple(steps),
        total=plan.total,
        order=plan.order,
        brush_paths=tuple(tuple(p) for p in paths),
    )


def plan_to_json_str(plan: BrushPlan) -> str:
    return json.dumps(plan.to_json(), indent=2, sort_keys=True)


def trace_to_json_str(trace: CleaningTrace) -> str:
    return json.dumps(trace.to_json(), indent=2, sort_keys=True)
