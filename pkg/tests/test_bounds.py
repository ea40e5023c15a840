import pytest

from dibrush import bounds, solver
from dibrush.errors import NotATree, TooLarge
from dibrush.graphs import (
    Digraph,
    random_digraph,
    random_rooted_tree,
    transitive_tournament,
)
from dibrush.verify import funnel_graph, kite_graph


def test_degree_bounds_examples():
    assert bounds.degree_bounds(transitive_tournament(4)) == (3, 6)
    assert bounds.degree_bounds(Digraph(3, ())) == (3, 3)
    assert bounds.degree_bounds(funnel_graph()) == (3, 7)


def test_cut_bound_tt():
    for n in range(3, 7):
        value, witness = bounds.best_cut_lower_bound(transitive_tournament(n))
        assert value == n * n // 4
        assert witness == frozenset(range(n // 2))


def test_cut_bound_kite_and_cycle():
    value, witness = bounds.best_cut_lower_bound(kite_graph())
    assert value == 3
    assert witness == {0, 3}
    value, witness = bounds.best_cut_lower_bound(Digraph(3, ((0, 1), (1, 2), (2, 0))))
    assert value == 0
    assert witness == frozenset()


def test_cut_bound_cap():
    with pytest.raises(TooLarge):
        bounds.best_cut_lower_bound(Digraph(25, ()), subset_cap=20)


def test_tree_duality_examples():
    out_star = Digraph(4, ((0, 1), (0, 2), (0, 3)))
    assert bounds.tree_duality_bound(out_star) == 3
    path = Digraph(3, ((0, 1), (1, 2)))
    assert bounds.tree_duality_bound(path) == 1
    # sources contributing 2 + 1 out-arcs vs. sinks totaling 2 in-arcs
    t = Digraph(5, ((0, 1), (0, 2), (3, 2), (2, 4)))
    assert bounds.tree_duality_bound(t) == 3
    with pytest.raises(NotATree):
        bounds.tree_duality_bound(transitive_tournament(3))
    with pytest.raises(NotATree):
        bounds.tree_duality_bound(Digraph(4, ((0, 1), (2, 3), (3, 2))))


def test_pn_lower_examples():
    assert bounds.pn_lower_bound(transitive_tournament(3)) == 2
    balanced = Digraph(3, ((0, 1), (1, 2), (2, 0)))
    assert bounds.pn_lower_bound(balanced) == 0
    out_star = Digraph(4, ((0, 1), (0, 2), (0, 3)))
    assert bounds.pn_lower_bound(out_star) == 3


def test_tree_duality_equals_leaf_count_on_rooted_trees():
    from dibrush.strategies import tree_leaf_count

    for seed in range(10):
        t = random_rooted_tree(2 + seed, seed)
        assert bounds.tree_duality_bound(t) == tree_leaf_count(t)


def test_bounds_sandwich_exact_value():
    for seed in range(15):
        g = random_digraph(5, 0.4, seed)
        report = bounds.bound_report(g)
        value = solver.brushing_number_exact(g).value
        assert report.lower <= value <= report.upper
        assert report.cut_bound <= value
        assert report.max_outdeg <= value or g.arc_count == 0


def test_bound_report_json():
    report = bounds.bound_report(transitive_tournament(3))
    data = report.to_json()
    assert data["lower"] == 2 and data["upper"] == 3
    assert data["cut_witness"] == [0]
    assert data["pn_lower"] == 2
    assert data["tree_duality"] is None
