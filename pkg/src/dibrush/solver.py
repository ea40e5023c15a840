"""Exact brushing number by branch-and-bound over firing orders.

Each complete order is scored with the min-flow module.  The score of an
order depends only on which arcs it makes backward, so leaf evaluations
are cached on that arc set.  A prefix is pruned when the brushes already
sunk (stranded arcs and isolated vertices inside the prefix) plus the
largest firing threshold still in the suffix cannot beat the incumbent.

An independent brute-force oracle (pure simulation, no flow machinery)
is provided for cross-validation on tiny graphs.
"""

from __future__ import annotations

import itertools
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import floworder
from .engine import BrushPlan, firing_threshold, run
from .errors import InvalidFamilySpec, TooLarge, TopoOnlyOnCyclic
from .graphs import Digraph, topological_order

DEFAULT_CAP = 9
HARD_CAP = 12


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: BrushPlan
    orders_explored: int
    pruned: int
    lower_bound_used: int

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "witness": self.witness.to_json(),
            "stats": {
                "orders_explored": self.orders_explored,
                "pruned": self.pruned,
                "lower_bound_used": self.lower_bound_used,
            },
        }


class _Shared:
    """Incumbent shared between search workers."""

    def __init__(self, value: int):
        self.value = value
        self.lock = threading.Lock()

    def offer(self, value: int) -> None:
        with self.lock:
            if value < self.value:
                self.value = value


def _seed_plans(g: Digraph) -> list[BrushPlan]:
    """Cheap valid plans used to seed the incumbent."""
    from . import strategies  # deferred: strategies' base case uses this module

    plans = [_trivial_plan(g)]
    if topological_order(g) is not None:
        try:
            decomp = strategies.perfect_decomposition(g)
            plans.append(strategies.plan_from_paths(g, decomp))
        except Exception:
            pass
    sset = rotational_symbols(g)
    if sset is not None:
        plans.append(strategies.strategy_rotational(g.n, sset))
    return plans


def _trivial_plan(g: Digraph) -> BrushPlan:
    # every vertex pays its own threshold; always valid
    initial = tuple(firing_threshold(g, v) for v in range(g.n))
    return BrushPlan(initial, tuple(range(g.n)))


def rotational_symbols(g: Digraph):
    if g.n < 3 or g.n % 2 == 0:
        return None
    s = frozenset(w for w in g.out_neighbors[0])
    if len(s) != (g.n - 1) // 2:
        return None
    expected = tuple(
        sorted((x, (x + d) % g.n) for x in range(g.n) for d in s)
    )
    if expected != g.arcs:
        return None
    try:
        from .graphs import validate_rotational

        validate_rotational(g.n, s)
    except InvalidFamilySpec:
        return None
    return s


def brushing_number_exact(
    g: Digraph,
    topo_only: bool = False,
    worker_count: int = 1,
    cap: int = DEFAULT_CAP,
    order_cap: int | None = None,
) -> SolveResult:
    if g.n > min(cap, HARD_CAP):
        raise TooLarge(g.n, min(cap, HARD_CAP))
    if topo_only and topological_order(g) is None:
        raise TopoOnlyOnCyclic("topo_only requires an acyclic graph")
    if g.n == 0:
        return SolveResult(0, BrushPlan((), ()), 0, 0, 0)

    thresholds = [firing_threshold(g, v) for v in range(g.n)]
    global_lb = max(thresholds)

    incumbent = None
    for plan in _seed_plans(g):
        try:
            run(g, plan)
        except Exception:
            continue
        if incumbent is None or plan.total < incumbent:
            incumbent = plan.total
    assert incumbent is not None

    shared = _Shared(incumbent)
    cache: dict[frozenset, int] = {}
    stats = {"explored": 0, "pruned": 0}
    stats_lock = threading.Lock()

    # children explored by descending out-degree: good incumbents early
    child_rank = sorted(range(g.n), key=lambda v: (-g.out_deg(v), v))

    def search(prefix, remaining, stranded, sunk_isolated, backward):
        local_explored = 0
        local_pruned = 0
        budget = order_cap

        def rec(prefix, remaining, stranded, sunk_isolated, backward):
            nonlocal local_explored, local_pruned, budget
            if budget is not None and local_explored >= budget:
                return
            if not remaining:
                if stranded + sunk_isolated >= shared.value:
                    local_pruned += 1
                    return
                key = frozenset(backward)
                total = cache.get(key)
                if total is None:
                    total = floworder.min_total_for_backward(g, key)
                    cache[key] = total
                local_explored += 1
                shared.offer(total)
                return
            suffix_lb = max(thresholds[v] for v in remaining)
            if stranded + sunk_isolated + suffix_lb >= shared.value:
                local_pruned += 1
                return
            for v in child_rank:
                if v not in remaining:
                    continue
                if topo_only and any(
                    u in remaining for u in g.in_neighbors[v]
                ):
                    continue
                new_back = [a for a in backward]
                added = 0
                for w in g.out_neighbors[v]:
                    if w not in remaining and w != v:
                        new_back.append((v, w))
                        added += 1
                rec(
                    prefix + [v],
                    remaining - {v},
                    stranded + added,
                    sunk_isolated + (1 if g.is_isolated(v) else 0),
                    new_back,
                )

        rec(prefix, remaining, stranded, sunk_isolated, backward)
        with stats_lock:
            stats["explored"] += local_explored
            stats["pruned"] += local_pruned

    if topo_only:
        first_choices = [v for v in child_rank if g.in_deg(v) == 0]
    else:
        first_choices = list(child_rank)

    all_vertices = frozenset(range(g.n))
    if worker_count <= 1 or g.n <= 2:
        for v in first_choices:
            search(
                [v],
                all_vertices - {v},
                0,
                1 if g.is_isolated(v) else 0,
                [],
            )
    else:
        with ThreadPoolExecutor(max_workers=worker_count) as pool:
            futures = [
                pool.submit(
                    search,
                    [v],
                    all_vertices - {v},
                    0,
                    1 if g.is_isolated(v) else 0,
                    [],
                )
                for v in first_choices
            ]
            for f in futures:
                f.result()

    value = shared.value
    witness_order = _lex_least_optimal_order(
        g, value, thresholds, cache, topo_only
    )
    if witness_order is None:
        # only reachable when order_cap truncated the search; fall back to
        # the best seed plan
        witness = min(
            (p for p in _seed_plans(g) if _plan_ok(g, p)),
            key=lambda p: p.total,
        )
    else:
        total, _, witness = floworder.min_initial_for_order(g, witness_order)
        assert total == value
    run(g, witness)  # invariant: the witness always validates
    return SolveResult(
        value=value,
        witness=witness,
        orders_explored=stats["explored"],
        pruned=stats["pruned"],
        lower_bound_used=global_lb,
    )


def _plan_ok(g, plan):
    try:
        run(g, plan)
        return True
    except Exception:
        return False


def _lex_least_optimal_order(g, value, thresholds, cache, topo_only):
    """First order in lexicographic DFS whose min-flow cost equals value."""

    def rec(prefix, remaining, stranded, sunk_isolated, backward):
        if not remaining:
            key = frozenset(backward)
            total = cache.get(key)
            if total is None:
                total = floworder.min_total_for_backward(g, key)
                cache[key] = total
            return tuple(prefix) if total == value else None
        if remaining:
            suffix_lb = max(thresholds[v] for v in remaining)
            if stranded + sunk_isolated + suffix_lb > value:
                return None
        for v in sorted(remaining):
            if topo_only and any(u in remaining for u in g.in_neighbors[v]):
                continue
            added = [
                (v, w) for w in g.out_neighbors[v] if w not in remaining
            ]
            found = rec(
                prefix + [v],
                remaining - {v},
                stranded + len(added),
                sunk_isolated + (1 if g.is_isolated(v) else 0),
                backward + added,
            )
            if found is not None:
                return found
        return None

    return rec([], frozenset(range(g.n)), 0, 0, [])


# ---------------------------------------------------------------------------
# independent brute-force oracle (no flow machinery)


def brushing_number_bruteforce(g: Digraph, cap: int = 5) -> int:
    """Exhaustive minimum over firing orders and brush dispatch choices.

    Pure forward simulation: brushes are topped up at a vertex exactly when
    it would otherwise fail to fire, and every way of pushing the surplus
    to not-yet-fired out-neighbors is enumerated.  Used only to
    cross-validate the flow-based solver.
    """
    if g.n > cap:
        raise TooLarge(g.n, cap)
    if g.n == 0:
        return 0

    best = sum(firing_threshold(g, v) for v in range(g.n))  # always feasible

    def explore(order, i, counts, spent):
        nonlocal best
        if spent >= best:
            return
        if i == len(order):
            best = spent
            return
        v = order[i]
        need = firing_threshold(g, v)
        have = counts[v]
        topup = max(0, need - have)
        total_here = have + topup
        outs = g.out_neighbors[v]
        fired = set(order[:i])
        live = [w for w in outs if w not in fired]
        surplus = total_here - len(outs)
        base = list(counts)
        base[v] = 0
        for w in outs:
            if w not in fired:
                base[w] += 1
        if not live or surplus == 0:
            explore(order, i + 1, base, spent + topup)
            return
        for split in _compositions(surplus, len(live)):
            nxt = list(base)
            for w, extra in zip(live, split):
                nxt[w] += extra
            explore(order, i + 1, nxt, spent + topup)

    for order in itertools.permutations(range(g.n)):
        explore(order, 0, [0] * g.n, 0)
    return best


def _compositions(total, parts):
    """All ways to split `total` into `parts` non-negative summands, allowing
    a remainder (brushes retained at the fired vertex)."""
    if parts == 0:
        yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# regular-tournament conjecture explorer


@dataclass(frozen=True)
class ConjectureReport:
    n: int
    bound: int
    tournaments: tuple[tuple[tuple[tuple[int, int], ...], int], ...]
    max_value: int
    holds: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "bound": self.bound,
            "count": len(self.tournaments),
            "max_value": self.max_value,
            "holds": self.holds,
            "tournaments": [
                {"arcs": [list(a) for a in arcs], "value": value}
                for arcs, value in self.tournaments
            ],
        }


def regular_tournaments(n: int):
    """All tournaments on n labeled vertices with constant out-degree."""
    if n % 2 == 0:
        raise InvalidFamilySpec(f"no regular tournament on even n={n}")
    pairs = list(itertools.combinations(range(n), 2))
    target = (n - 1) // 2
    for mask in range(1 << len(pairs)):
        outdeg = [0] * n
        arcs = []
        for k, (i, j) in enumerate(pairs):
            if mask >> k & 1:
                arcs.append((i, j))
                outdeg[i] += 1
            else:
                arcs.append((j, i))
                outdeg[j] += 1
        if all(d == target for d in outdeg):
            yield Digraph(n, tuple(arcs))


def conjecture_explorer(n: int = 5, cap: int = 5) -> ConjectureReport:
    """Max exact brushing number over regular tournaments vs. the
    conjectured (n^2 - 4n + 7)/4; reported, never asserted."""
    if n > cap:
        raise TooLarge(n, cap)
    bound = (n * n - 4 * n + 7) // 4
    rows = []
    for t in regular_tournaments(n):
        rows.append((t.arcs, brushing_number_exact(t).value))
    max_value = max(v for _, v in rows)
    return ConjectureReport(
        n=n,
        bound=bound,
        tournaments=tuple(rows),
        max_value=max_value,
        holds=max_value <= bound,
    )
