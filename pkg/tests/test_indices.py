from math import comb

import pytest

from cactuspaths.census import connected_graphs
from cactuspaths.counting import BudgetExceededError
from cactuspaths.families import (
    complete_graph,
    cycle_graph,
    path_graph,
    pseudo_friendship,
)
from cactuspaths.graphs import DisconnectedError, Graph
from cactuspaths.indices import invariant_triple, subtree_count, wiener


def test_wiener_examples():
    assert wiener(path_graph(3)) == 4
    assert wiener(cycle_graph(5)) == 15
    assert wiener(Graph.from_edges(1, [])) == 0
    assert wiener(complete_graph(5)) == 10


def test_wiener_rejects_disconnected():
    with pytest.raises(DisconnectedError):
        wiener(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_subtree_examples():
    assert subtree_count(path_graph(3)) == 6
    assert subtree_count(cycle_graph(3)) == 9
    assert subtree_count(Graph.from_edges(1, [])) == 1
    # every subgraph tree of the 5-cycle: 5 vertices plus 5 paths of each
    # length 1..4 (the spanning paths drop one cycle edge each)
    assert subtree_count(cycle_graph(5)) == 25


def test_subtree_paths_are_segments():
    for n in range(1, 11):
        assert subtree_count(path_graph(n)) == comb(n + 1, 2)


def test_subtree_works_per_component():
    g = Graph.from_edges(5, [(0, 1), (2, 3), (3, 4)])
    assert subtree_count(g) == 3 + 6


def test_subtree_budget_guard():
    with pytest.raises(BudgetExceededError):
        subtree_count(complete_graph(7), budget=20)


def pfg_wiener_by_hand(n, k):
    # hub at distance 1 from everyone, triangle mates adjacent, rest at 2
    return (n - 1) + 2 * comb(n - 1, 2) - k


def pfg_subtrees_by_hand(n, k):
    # per triangle, six hub-containing shapes; pendants double the count
    p = n - 2 * k - 1
    return 6**k * 2**p + 3 * k + p


def test_pfg_indices_match_hand_formulas():
    for n, k in [(3, 1), (5, 2), (7, 3), (8, 2), (9, 3), (10, 3), (11, 4)]:
        g = pseudo_friendship(n, k)
        assert wiener(g) == pfg_wiener_by_hand(n, k)
        assert subtree_count(g) == pfg_subtrees_by_hand(n, k)


def test_adding_an_edge_strictly_decreases_wiener():
    for n in range(2, 8):
        for g in connected_graphs(n):
            base = wiener(g)
            for u in range(n):
                for v in range(u + 1, n):
                    if not g.has_edge(u, v):
                        assert wiener(g.add_edge(u, v)) < base


def test_invariant_triple():
    t = invariant_triple(pseudo_friendship(10, 3))
    assert (t.pn, t.wiener, t.subtrees) == (118, 78, 1740)
    c5 = invariant_triple(cycle_graph(5))
    assert (c5.pn, c5.wiener, c5.subtrees) == (25, 15, 25)
    k4 = invariant_triple(complete_graph(4))
    assert k4.pn == 34  # falls back to brute force off the cactus class
    with pytest.raises(DisconnectedError):
        invariant_triple(Graph.from_edges(3, [(0, 1)]))


def test_triple_json_uses_decimal_strings():
    data = invariant_triple(path_graph(4)).to_json()
    assert data == {"pn": "10", "wiener": "10", "subtrees": "10"}
