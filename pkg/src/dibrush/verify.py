"""Self-check suites: expected values vs. freshly computed ones.

Each suite returns rows {"name", "expected", "computed", "ok"} so the CLI
can print a table and the test suite can assert on the same data.  The
named sample graphs here are the small worked instances used throughout
the checks.
"""

from __future__ import annotations

from . import bounds, solver, strategies
from .engine import run
from .graphs import (
    Digraph,
    random_dag,
    random_digraph,
    random_rooted_tree,
    rotational_tournament,
    transitive_tournament,
    transpose,
)

Row = dict


def funnel_graph() -> Digraph:
    """Three sources feeding a bottleneck that fans out to three sinks."""
    return Digraph(
        8, ((0, 3), (1, 3), (2, 3), (3, 4), (4, 5), (4, 6), (4, 7))
    )


def kite_graph() -> Digraph:
    """Four vertices, one shared sink; cleans with three brushes."""
    return Digraph(4, ((0, 1), (0, 2), (1, 2), (3, 2)))


def bridge_graph() -> Digraph:
    """Two clusters joined by a bridge arc and a long chord."""
    return Digraph(
        6, ((0, 1), (0, 2), (0, 5), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5))
    )


BRIDGE_ARC = (2, 3)


def _row(name: str, expected, computed) -> Row:
    return {
        "name": name,
        "expected": expected,
        "computed": computed,
        "ok": expected == computed,
    }


def suite_theorems(max_n: int = 7) -> list[Row]:
    rows: list[Row] = []

    for n in range(3, min(max_n, 8) + 1):
        value = solver.brushing_number_exact(transitive_tournament(n)).value
        rows.append(_row(f"tt-{n}-exact", n * n // 4, value))
        plan = strategies.strategy_transitive(n)
        trace = run(transitive_tournament(n), plan)
        rows.append(
            _row(
                f"tt-{n}-strategy",
                (n * n // 4, True),
                (plan.total, trace.is_complete(transitive_tournament(n))),
            )
        )

    from .graphs import complete_digraph

    for n in range(2, min(max_n, 5) + 1):
        value = solver.brushing_number_exact(complete_digraph(n)).value
        rows.append(_row(f"complete-{n}-exact", n * (n - 1) // 2, value))

    for n in (3, 5, 7):
        if n > max_n:
            continue
        s = frozenset(range(1, (n - 1) // 2 + 1))
        value = solver.brushing_number_exact(rotational_tournament(n, s)).value
        rows.append(_row(f"rotational-{n}-consecutive", (n * n - 1) // 8, value))
    if max_n >= 7:
        g = rotational_tournament(7, {1, 2, 4})
        value = solver.brushing_number_exact(g).value
        # reported as a finding, not asserted: the triangular total is only
        # proved for consecutive symbol sets
        rows.append(
            {
                "name": "rotational-7-{1,2,4}-equals-6",
                "expected": "reported",
                "computed": f"value={value}, equals_6={value == 6}",
                "ok": True,
            }
        )

    if max_n >= 6:
        rows.append(
            _row(
                "funnel-exact",
                3,
                solver.brushing_number_exact(funnel_graph()).value,
            )
        )
        rows.append(
            _row("kite-exact", 3, solver.brushing_number_exact(kite_graph()).value)
        )
        g = bridge_graph()
        rows.append(_row("bridge-exact", 3, solver.brushing_number_exact(g).value))
        rows.append(
            _row(
                "bridge-minus-arc-exact",
                5,
                solver.brushing_number_exact(g.remove_arc(*BRIDGE_ARC)).value,
            )
        )

    for seed in range(5):
        n = 3 + seed % min(max_n - 2, 6)
        t = random_rooted_tree(n, seed)
        k = strategies.tree_leaf_count(t)
        rows.append(
            _row(
                f"tree-seed{seed}-leafcount",
                k,
                solver.brushing_number_exact(t).value,
            )
        )
        rows.append(
            _row(f"tree-seed{seed}-duality", k, bounds.tree_duality_bound(t))
        )

    for n in range(3, min(max_n, 6) + 1):
        cut, _ = bounds.best_cut_lower_bound(transitive_tournament(n))
        rows.append(_row(f"tt-{n}-cut-bound", n * n // 4, cut))

    return rows


def suite_oracle(max_n: int = 4, count: int = 40) -> list[Row]:
    """Exact solver vs. the flow-free brute-force oracle on random digraphs."""
    rows = []
    for seed in range(count):
        n = 2 + seed % (max_n - 1)
        g = random_digraph(n, 0.45, seed)
        exact = solver.brushing_number_exact(g).value
        oracle = solver.brushing_number_bruteforce(g)
        rows.append(_row(f"oracle-n{n}-seed{seed}", oracle, exact))
    return rows


def suite_transpose(max_n: int = 6, count: int = 30) -> list[Row]:
    """Brushing number is invariant under arc reversal on DAGs."""
    rows = []
    for seed in range(count):
        n = 3 + seed % (max_n - 2)
        g = random_dag(n, 0.5, seed)
        a = solver.brushing_number_exact(g).value
        b = solver.brushing_number_exact(transpose(g)).value
        rows.append(_row(f"transpose-n{n}-seed{seed}", a, b))
    return rows


SUITES = {
    "theorems": suite_theorems,
    "oracle": suite_oracle,
    "transpose": suite_transpose,
}


def run_suite(name: str, max_n: int) -> list[Row]:
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](max_n)
