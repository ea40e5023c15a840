"""End-to-end acceptance checks.

Each test prints exactly one PASS/FAIL line for its criterion so the whole
battery reads as a checklist under `pytest -v -s tests/test_acceptance.py`.
"""

import time

from dibrush import bounds, solver, strategies
from dibrush.engine import run
from dibrush.graphs import (
    complete_digraph,
    random_dag,
    random_digraph,
    random_rooted_tree,
    rotational_tournament,
    transitive_tournament,
    transpose,
)
from dibrush.verify import BRIDGE_ARC, bridge_graph, funnel_graph, kite_graph


def check(num: int, desc: str, ok: bool) -> None:
    print(f"{'PASS' if ok else 'FAIL'} criterion {num:2d}: {desc}")
    assert ok, f"criterion {num}: {desc}"


def test_criterion_01_transitive_tournaments():
    start = time.time()
    ok = True
    for n in range(3, 9):
        g = transitive_tournament(n)
        expected = n * n // 4
        ok = ok and solver.brushing_number_exact(g).value == expected
        plan = strategies.strategy_transitive(n)
        ok = ok and plan.total == expected and run(g, plan).is_complete(g)
    elapsed = time.time() - start
    ok = ok and elapsed < 60
    check(1, f"TT_n exact and strategy = floor(n^2/4), n=3..8 ({elapsed:.1f}s)", ok)


def test_criterion_02_complete_digraphs():
    ok = all(
        solver.brushing_number_exact(complete_digraph(n)).value == n * (n - 1) // 2
        for n in range(2, 6)
    )
    check(2, "complete digraph exact = n(n-1)/2, n=2..5", ok)


def test_criterion_03_rotational_tournaments(capsys=None):
    ok = True
    for n in (3, 5, 7):
        s = frozenset(range(1, (n - 1) // 2 + 1))
        g = rotational_tournament(n, s)
        ok = ok and solver.brushing_number_exact(g).value == (n * n - 1) // 8
    odd = solver.brushing_number_exact(rotational_tournament(7, {1, 2, 4})).value
    finding = f"n=7 S={{1,2,4}} value={odd}, equals 6: {odd == 6}"
    check(3, f"rotational consecutive = (n^2-1)/8; finding: {finding}", ok)


def test_criterion_04_rooted_trees():
    ok = True
    for seed in range(25):
        t = random_rooted_tree(2 + seed % 7, seed)  # n <= 8
        ok = ok and solver.brushing_number_exact(t).value == strategies.tree_leaf_count(t)
    for seed in range(25):
        t = random_rooted_tree(2 + seed % 13, 1000 + seed)  # n <= 14
        k = strategies.tree_leaf_count(t)
        plan = strategies.strategy_rooted_tree(t)
        ok = ok and plan.total == k and run(t, plan).is_complete(t)
        ok = ok and bounds.tree_duality_bound(t) == k
    check(4, "rooted trees: exact = strategy total = duality bound = leaf count", ok)


def test_criterion_05_figure_instances():
    ok = solver.brushing_number_exact(funnel_graph()).value == 3
    ok = ok and solver.brushing_number_exact(kite_graph()).value == 3
    g = bridge_graph()
    ok = ok and solver.brushing_number_exact(g).value == 3
    ok = ok and solver.brushing_number_exact(g.remove_arc(*BRIDGE_ARC)).value == 5
    check(5, "sample instances: funnel 3, kite 3, bridge 3, bridge minus arc 5", ok)


def test_criterion_06_tt_arc_deletion():
    ok = True
    for n in range(4, 7):
        g = transitive_tournament(n)
        full = solver.brushing_number_exact(g).value
        for e in g.arcs:
            h = g.remove_arc(*e)
            value = solver.brushing_number_exact(h).value
            case = strategies.classify_tt_arc_case(n, e)
            saves = strategies.tt_case_saves_brush(case)
            ok = ok and value <= full
            ok = ok and (value < full) == saves
            plan = strategies.strategy_tt_minus_arc(n, e)
            ok = ok and plan.total == full - (1 if saves else 0)
            ok = ok and run(h, plan).is_complete(h)
    check(6, "TT_n minus arc: monotone, strict drop exactly in cases I/II/VII/VIII", ok)


def test_criterion_07_transpose_equality():
    ok = True
    for seed in range(100):
        n = 3 + seed % 4  # n <= 6
        g = random_dag(n, 0.5, seed)
        ok = ok and (
            solver.brushing_number_exact(g).value
            == solver.brushing_number_exact(transpose(g)).value
        )
    check(7, "B(G) = B(G^T) on 100 seeded DAGs, n <= 6", ok)


def test_criterion_08_decomposition_chain():
    ok = True
    for seed in range(100):
        n = 3 + seed % 8  # n <= 10
        g = random_dag(n, 0.5, seed)
        decomp = strategies.perfect_decomposition(g)
        r = sum(abs(g.out_deg(v) - g.in_deg(v)) for v in range(g.n)) // 2
        ok = ok and decomp.size == r
        iso = sum(1 for v in range(g.n) if g.is_isolated(v))
        plan = strategies.plan_from_paths(g, decomp)
        # isolated vertices force one brush beyond the paths themselves
        ok = ok and plan.total == r + iso and run(g, plan).is_complete(g)
        if n <= 6:
            ok = ok and solver.brushing_number_exact(g).value <= r + iso
    check(8, "perfect decomposition: size = half degree excess, exact <= size", ok)


def test_criterion_09_recursive_dag_bound():
    ok = True
    for seed in range(100):
        n = 4 + seed % 9  # 4 <= n <= 12
        g = random_dag(n, 0.5, seed)
        plan = strategies.strategy_dag_recursive(g)
        ok = ok and plan.total <= n * n // 4 and run(g, plan).is_complete(g)
    check(9, "recursive DAG strategy validates with total <= floor(n^2/4)", ok)


def test_criterion_10_oracle_agreement():
    start = time.time()
    family = [transitive_tournament(n) for n in (3, 4, 5)]
    family += [complete_digraph(n) for n in (2, 3, 4, 5)]
    family += [rotational_tournament(3, {1}), rotational_tournament(5, {1, 2})]
    family += [funnel_graph(), kite_graph()]
    ok = True
    for g in family:
        if g.n > 5:
            continue
        ok = ok and (
            solver.brushing_number_exact(g).value
            == solver.brushing_number_bruteforce(g)
        )
    for seed in range(200):
        n = 2 + seed % 3  # n <= 4
        g = random_digraph(n, 0.45, seed)
        ok = ok and (
            solver.brushing_number_exact(g).value
            == solver.brushing_number_bruteforce(g)
        )
    elapsed = time.time() - start
    ok = ok and elapsed < 300
    check(10, f"exact = brute-force oracle on family + 200 random graphs ({elapsed:.1f}s)", ok)


def test_criterion_11_hamiltonian_brush():
    ok = True
    for n in range(3, 9):
        g = transitive_tournament(n)
        trace = run(g, strategies.strategy_transitive(n))
        ok = ok and any(
            len(path) == n and set(path) == set(range(n))
            for path in trace.brush_paths
        )
    check(11, "some brush in the TT strategy travels a Hamiltonian path", ok)


def test_criterion_12_conjecture_explorer():
    ok = True
    for n, expected_bound in ((3, 1), (5, 3)):
        rep = solver.conjecture_explorer(n)
        ok = ok and rep.bound == expected_bound and rep.holds
        if not rep.holds:
            print(
                f"*** CONJECTURE VIOLATED at n={n}: "
                f"max {rep.max_value} > bound {rep.bound} ***"
            )
    check(12, "regular tournament max B <= (n^2-4n+7)/4 for n in {3, 5}", ok)
