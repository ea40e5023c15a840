"""Minimum initial configuration for a fixed firing order.

The firing order turns each graph arc into either a forward arc (tail fires
first; the brush is usable downstream) or a stranded arc (head already
fired; the brush is mandatory but lost).  Feasibility of a configuration is
then pure flow conservation: initial brushes enter from a super-source s,
every arc carries at least one brush, and whatever remains drains to a
super-sink t.  Minimizing the brushes out of s is a min-flow problem with
lower bounds, solved by the usual two-phase reduction (feasibility via an
auxiliary max-flow, then reduction along residual paths from t to s).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .engine import BrushPlan
from .errors import InfeasibleNetwork
from .graphs import Digraph

Arc = tuple[int, int]


class _Residual:
    """Edge-list residual network for BFS (Edmonds-Karp) max-flow."""

    def __init__(self, n: int):
        self.n = n
        self.adj: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, cap: int) -> int:
        eid = len(self.to)
        self.adj[u].append(eid)
        self.to.append(v)
        self.cap.append(cap)
        self.adj[v].append(eid + 1)
        self.to.append(u)
        self.cap.append(0)
        return eid

    def bfs_path(self, s: int, t: int, banned=()) -> list[int] | None:
        parent = [-1] * self.n
        parent_edge = [-1] * self.n
        parent[s] = s
        q = deque([s])
        while q:
            u = q.popleft()
            if u == t:
                break
            for eid in self.adj[u]:
                if self.cap[eid] <= 0 or eid in banned:
                    continue
                v = self.to[eid]
                if parent[v] == -1:
                    parent[v] = u
                    parent_edge[v] = eid
                    q.append(v)
        if parent[t] == -1:
            return None
        path = []
        v = t
        while v != s:
            path.append(parent_edge[v])
            v = self.to[parent_edge[v] ^ 1]
        path.reverse()
        return path

    def augment(self, path: list[int], amount: int | None = None) -> int:
        flow = min(self.cap[eid] for eid in path)
        if amount is not None:
            flow = min(flow, amount)
        for eid in path:
            self.cap[eid] -= flow
            self.cap[eid ^ 1] += flow
        return flow

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        while (path := self.bfs_path(s, t)) is not None:
            total += self.augment(path)
        return total


@dataclass(frozen=True)
class FlowNetwork:
    """Min-flow instance: minimize total flow out of `source`."""

    num_nodes: int
    source: int
    sink: int
    arcs: tuple[tuple[int, int, int, int], ...]  # (u, v, lower, upper)


def solve_min_flow(net: FlowNetwork) -> tuple[int, list[int]]:
    """Integral flow meeting all lower bounds with minimum source outflow.

    Returns (source outflow, per-arc flow aligned with net.arcs).
    """
    return _solve_on(net, _Residual(net.num_nodes + 2))


def build_network(g: Digraph, order) -> tuple[FlowNetwork, dict]:
    """Reduce (graph, firing order) to a min-flow instance.

    Returns the network and an index map {("arc", a) | ("init", v) |
    ("retain", v) -> position in net.arcs}.
    """
    pos = {v: i for i, v in enumerate(order)}
    return _network_for_backward(
        g, frozenset(a for a in g.arcs if pos[a[0]] > pos[a[1]])
    )


def _network_for_backward(g: Digraph, backward: frozenset[Arc]):
    s, t = g.n, g.n + 1
    ub = g.arc_count + g.n
    arcs = []
    index = {}
    for a in g.arcs:
        index[("arc", a)] = len(arcs)
        if a in backward:
            arcs.append((a[0], t, 1, ub))  # mandatory but stranded
        else:
            arcs.append((a[0], a[1], 1, ub))
    for v in range(g.n):
        index[("init", v)] = len(arcs)
        arcs.append((s, v, 0, ub))
    for v in range(g.n):
        index[("retain", v)] = len(arcs)
        arcs.append((v, t, 1 if g.is_isolated(v) else 0, ub))
    return FlowNetwork(g.n + 2, s, t, tuple(arcs)), index


def min_total_for_backward(g: Digraph, backward: frozenset[Arc]) -> int:
    """Cost of an order depends only on which arcs it makes backward."""
    net, _ = _network_for_backward(g, backward)
    total, _ = solve_min_flow(net)
    return total


def min_initial_for_order(
    g: Digraph, order
) -> tuple[int, tuple[int, ...], BrushPlan]:
    """Minimum-total initial configuration that cleans g under this order.

    Among optima, brushes are shifted onto the earliest-firing vertices
    (lexicographic by firing position) so witnesses are reproducible.
    Returns (total, initial, plan-with-explicit-flows).
    """
    order = tuple(order)
    net, index = build_network(g, order)
    s = net.source

    r = _Residual(net.num_nodes + 2)
    # re-solve on a residual we keep, so the tie-break can keep augmenting
    total, flows = _solve_on(net, r)

    init_eid = {v: None for v in range(g.n)}
    for v in range(g.n):
        init_eid[v] = _eid_of(r, net, index[("init", v)])

    # lexicographic tie-break: for each position k, reroute initial brushes
    # from later-firing vertices onto order[k] while the total stays fixed
    for k, v in enumerate(order):
        # entering s is only allowed by draining initial brushes off
        # vertices that fire after position k
        banned = frozenset(init_eid[order[i]] ^ 1 for i in range(k + 1))
        while True:
            path = r.bfs_path(v, s, banned=banned)
            if path is None:
                break
            moved = r.augment(path)
            # matching increase on s -> v
            eid = init_eid[v]
            r.cap[eid] -= moved
            r.cap[eid ^ 1] += moved

    initial = tuple(
        r.cap[init_eid[v] ^ 1] for v in range(g.n)
    )
    arc_flows = {}
    for a in g.arcs:
        eid = _eid_of(r, net, index[("arc", a)])
        lb = net.arcs[index[("arc", a)]][2]
        arc_flows[a] = lb + r.cap[eid ^ 1]
    plan = BrushPlan(initial, order, arc_flows)
    assert sum(initial) == total
    return total, initial, plan


def _solve_on(net: FlowNetwork, r: _Residual) -> tuple[int, list[int]]:
    """Same as solve_min_flow but on a caller-owned residual structure."""
    s, t = net.source, net.sink
    ss, tt = net.num_nodes, net.num_nodes + 1
    excess = [0] * net.num_nodes
    arc_eids = []
    for u, v, lb, ub in net.arcs:
        arc_eids.append(r.add_edge(u, v, ub - lb))
        excess[v] += lb
        excess[u] -= lb
    inf = sum(ub for _, _, _, ub in net.arcs) + 1
    loop_eid = r.add_edge(t, s, inf)
    demand = 0
    for v in range(net.num_nodes):
        if excess[v] > 0:
            r.add_edge(ss, v, excess[v])
            demand += excess[v]
        elif excess[v] < 0:
            r.add_edge(v, tt, -excess[v])
    if r.max_flow(ss, tt) != demand:
        raise InfeasibleNetwork("lower bounds cannot be met")
    value = r.cap[loop_eid ^ 1]
    r.cap[loop_eid] = 0
    r.cap[loop_eid ^ 1] = 0
    value -= r.max_flow(t, s)
    flows = [lb + r.cap[eid ^ 1] for (_, _, lb, _), eid in zip(net.arcs, arc_eids)]
    r._arc_eids = arc_eids  # type: ignore[attr-defined]
    return value, flows


def _eid_of(r: _Residual, net: FlowNetwork, arc_index: int) -> int:
    return r._arc_eids[arc_index]  # type: ignore[attr-defined]
