import pytest

from dibrush import solver
from dibrush.engine import run
from dibrush.errors import TooLarge, TopoOnlyOnCyclic
from dibrush.graphs import (
    Digraph,
    complete_digraph,
    random_digraph,
    rotational_tournament,
    transitive_tournament,
)


def test_exact_tt_small():
    for n, expected in ((3, 2), (4, 4), (5, 6)):
        res = solver.brushing_number_exact(transitive_tournament(n))
        assert res.value == expected
        trace = run(transitive_tournament(n), res.witness)
        assert trace.is_complete(transitive_tournament(n))
        assert res.witness.total == expected


def test_exact_vs_bruteforce_on_cyclic_graphs():
    for seed in range(25):
        g = random_digraph(4, 0.5, seed)
        assert (
            solver.brushing_number_exact(g).value
            == solver.brushing_number_bruteforce(g)
        )


def test_cap_enforced():
    with pytest.raises(TooLarge):
        solver.brushing_number_exact(transitive_tournament(10))
    with pytest.raises(TooLarge):
        solver.brushing_number_exact(transitive_tournament(13), cap=13)  # hard cap
    with pytest.raises(TooLarge):
        solver.brushing_number_bruteforce(transitive_tournament(6))


def test_topo_only_agrees_on_dags_and_rejects_cycles():
    g = transitive_tournament(5)
    assert (
        solver.brushing_number_exact(g, topo_only=True).value
        == solver.brushing_number_exact(g).value
    )
    cyc = Digraph(3, ((0, 1), (1, 2), (2, 0)))
    with pytest.raises(TopoOnlyOnCyclic):
        solver.brushing_number_exact(cyc, topo_only=True)


def test_worker_count_does_not_change_value():
    g = rotational_tournament(5, {1, 2})
    assert (
        solver.brushing_number_exact(g, worker_count=4).value
        == solver.brushing_number_exact(g).value
        == 3
    )


def test_empty_and_tiny_graphs():
    assert solver.brushing_number_exact(Digraph(0, ())).value == 0
    assert solver.brushing_number_exact(Digraph(1, ())).value == 1
    assert solver.brushing_number_exact(Digraph(2, ((0, 1),))).value == 1


def test_edgeless_needs_one_brush_per_vertex():
    assert solver.brushing_number_exact(Digraph(4, ())).value == 4
    assert solver.brushing_number_bruteforce(Digraph(4, ())) == 4


def test_witness_is_deterministic():
    g = complete_digraph(4)
    a = solver.brushing_number_exact(g)
    b = solver.brushing_number_exact(g, worker_count=3)
    assert a.witness == b.witness


def test_value_respects_sandwich_bounds():
    for seed in range(10):
        g = random_digraph(5, 0.4, seed)
        res = solver.brushing_number_exact(g)
        assert res.lower_bound_used <= res.value
        iso = sum(1 for v in range(g.n) if g.is_isolated(v))
        assert res.value <= g.arc_count + iso


def test_regular_tournament_enumeration():
    ts = list(solver.regular_tournaments(3))
    assert len(ts) == 2  # the two directed triangles
    assert all(all(t.out_deg(v) == 1 for v in range(3)) for t in ts)


def test_conjecture_explorer_n3():
    rep = solver.conjecture_explorer(3)
    assert rep.bound == 1
    assert rep.max_value == 1
    assert rep.holds
