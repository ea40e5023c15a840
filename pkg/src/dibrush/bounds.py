"""Lower (and easy upper) bounds on the brushing number.

None of these requires the exact solver; they are usable standalone and as
sanity rails around it.  Every `*_lower_*` value is a true lower bound;
`degree_bounds` also reports the generic upper bound |A| plus one brush per
isolated vertex.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .engine import firing_threshold
from .errors import NotATree, TooLarge
from .graphs import Digraph, topological_order

Arc = tuple[int, int]

DEFAULT_SUBSET_CAP = 20


@dataclass(frozen=True)
class BoundReport:
    max_outdeg: int
    arc_count: int
    lower: int
    upper: int
    cut_bound: int
    cut_witness: frozenset[int]
    tree_duality: int | None  # only when the underlying graph is a tree
    pn_lower: int | None  # only for DAGs; bounds the path number

    def to_json(self) -> dict:
        return {
            "max_outdeg": self.max_outdeg,
            "arc_count": self.arc_count,
            "lower": self.lower,
            "upper": self.upper,
            "cut_bound": self.cut_bound,
            "cut_witness": sorted(self.cut_witness),
            "tree_duality": self.tree_duality,
            "pn_lower": self.pn_lower,
        }


def degree_bounds(g: Digraph) -> tuple[int, int]:
    """(lower, upper): max firing threshold vs. |A| plus isolated vertices.

    Isolated vertices refine both ends: each needs a private brush that can
    never serve anything else, so the lower bound is at least their count
    and the upper bound gains one per isolated vertex.
    """
    isolated = sum(1 for v in range(g.n) if g.is_isolated(v))
    lower = max(
        (firing_threshold(g, v) for v in range(g.n)), default=0
    )
    if isolated:
        lower = max(lower, isolated)
    upper = g.arc_count + isolated
    return lower, upper


def best_cut_lower_bound(
    g: Digraph, subset_cap: int = DEFAULT_SUBSET_CAP
) -> tuple[int, frozenset[int]]:
    """Largest |[S, S-bar]| over non-trivial S with no arcs entering S.

    When no arc re-enters S, every brush crossing the cut is gone for good,
    so each cut arc needs its own brush.  Exhaustive over all 2^n - 2
    subsets; returns (0, empty set) when every subset has a back arc.
    """
    if g.n > subset_cap:
        raise TooLarge(g.n, subset_cap)
    best = 0
    witness: frozenset[int] = frozenset()
    arcs = g.arcs
    for mask in range(1, (1 << g.n) - 1):
        value = 0
        ok = True
        for u, v in arcs:
            u_in = mask >> u & 1
            v_in = mask >> v & 1
            if u_in and not v_in:
                value += 1
            elif v_in and not u_in:
                ok = False
                break
        if ok and value > best:
            best = value
            witness = frozenset(v for v in range(g.n) if mask >> v & 1)
    return best, witness


def tree_duality_bound(t: Digraph) -> int:
    """max(sum of out-degrees over sources, sum of in-degrees over sinks)
    for an orientation of a tree."""
    _require_tree(t)
    src = sum(t.out_deg(v) for v in range(t.n) if t.in_deg(v) == 0)
    snk = sum(t.in_deg(v) for v in range(t.n) if t.out_deg(v) == 0)
    return max(src, snk)


def _require_tree(t: Digraph) -> None:
    """Underlying undirected graph must be a tree."""
    if t.arc_count != t.n - 1:
        raise NotATree(f"{t.arc_count} arcs on {t.n} vertices")
    undirected = set()
    for u, v in t.arcs:
        e = (min(u, v), max(u, v))
        if e in undirected:
            raise NotATree(f"antiparallel pair between {u} and {v}")
        undirected.add(e)
    if t.n == 0:
        raise NotATree("empty graph")
    adj: list[list[int]] = [[] for _ in range(t.n)]
    for u, v in undirected:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != t.n:
        raise NotATree("underlying graph is disconnected")


def pn_lower_bound(g: Digraph) -> int:
    """Half the summed degree imbalance: a lower bound on the path number."""
    return sum(abs(g.out_deg(v) - g.in_deg(v)) for v in range(g.n)) // 2


def bound_report(g: Digraph, subset_cap: int = DEFAULT_SUBSET_CAP) -> BoundReport:
    lower, upper = degree_bounds(g)
    cut, witness = best_cut_lower_bound(g, subset_cap)
    try:
        duality: int | None = tree_duality_bound(g)
    except NotATree:
        duality = None
    pn = pn_lower_bound(g) if topological_order(g) is not None else None
    return BoundReport(
        max_outdeg=max((g.out_deg(v) for v in range(g.n)), default=0),
        arc_count=g.arc_count,
        lower=max(lower, cut),
        upper=upper,
        cut_bound=cut,
        cut_witness=witness,
        tree_duality=duality,
        pn_lower=pn,
    )


def bound_report_to_json_str(report: BoundReport) -> str:
    return json.dumps(report.to_json(), indent=2, sort_keys=True)
