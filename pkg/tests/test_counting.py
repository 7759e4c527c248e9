import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cactuspaths.census import connected_graphs, enumerate_cacti, random_cactus
from cactuspaths.counting import (
    BudgetExceededError,
    cactus_count_between,
    cactus_path_count,
    count_paths,
    count_paths_between,
    cycles_on_route,
    work_budget,
)
from cactuspaths.families import (
    complete_graph,
    cycle_graph,
    path_graph,
    pseudo_friendship,
    pseudo_triangle_chain,
    star_graph,
)
from cactuspaths.formulas import connected_graph_bounds, tree_path_count
from cactuspaths.graphs import Graph, validate_cactus


# ---------------------------------------------------------------- oracle values


@pytest.mark.parametrize(
    "g,expected",
    [
        (cycle_graph(5), 25),
        (path_graph(4), 10),
        (complete_graph(4), 34),
        (Graph.from_edges(1, []), 1),
        (complete_graph(5), 165),
    ],
)
def test_count_paths_examples(g, expected):
    assert count_paths(g) == expected


def test_count_paths_per_component():
    two_triangles = Graph.from_edges(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
    )
    assert count_paths(two_triangles) == 18


def test_pair_counts():
    assert count_paths_between(path_graph(5), 0, 4) == 1
    assert count_paths_between(star_graph(5), 1, 2) == 1
    c6 = cycle_graph(6)
    for x in range(6):
        for y in range(x + 1, 6):
            assert count_paths_between(c6, x, y) == 2
    assert count_paths_between(complete_graph(4), 0, 1) == 5


def test_pair_rejects_equal_endpoints():
    with pytest.raises(ValueError):
        count_paths_between(cycle_graph(4), 2, 2)


# ---------------------------------------------------------------- budget guard


def test_budget_guard_total():
    with pytest.raises(BudgetExceededError):
        count_paths(complete_graph(6), budget=10)


def test_budget_guard_pair():
    with pytest.raises(BudgetExceededError):
        count_paths_between(complete_graph(6), 0, 1, budget=5)


def test_budget_env_default(monkeypatch):
    monkeypatch.setenv("CACTUSPATHS_BUDGET", "7")
    assert work_budget() == 7
    with pytest.raises(BudgetExceededError):
        count_paths(complete_graph(5))
    monkeypatch.delenv("CACTUSPATHS_BUDGET")
    assert work_budget() == 10**9
    assert work_budget(123) == 123
    with pytest.raises(ValueError):
        work_budget(0)


# ---------------------------------------------------------------- cycles on the route


def test_cycles_on_route_examples():
    shared = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    p = validate_cactus(shared)
    assert cycles_on_route(p, 2, 0).c == 1  # cut vertex to a triangle vertex
    assert cycles_on_route(p, 0, 3).c == 2

    ptc = validate_cactus(pseudo_triangle_chain(9, 3))
    # end-cycle interiors: vertex 0 on the first cycle, vertex 7 on the last
    assert cycles_on_route(ptc, 0, 7).c == 3

    tree = validate_cactus(path_graph(6))
    assert cycles_on_route(tree, 0, 5).c == 0


def test_pair_count_cactus_examples():
    tree = validate_cactus(star_graph(6))
    assert cactus_count_between(tree, 1, 2) == 1
    ring = validate_cactus(cycle_graph(7))
    assert cactus_count_between(ring, 0, 3) == 2
    pfg = validate_cactus(pseudo_friendship(10, 3))
    assert cactus_count_between(pfg, 1, 3) == 4  # degree-2 rims of two triangles
    assert cactus_count_between(pfg, 1, 2) == 2  # same triangle
    assert cactus_count_between(pfg, 7, 8) == 1  # two pendants


def test_cactus_total_examples():
    for n in range(3, 13):
        assert cactus_path_count(validate_cactus(cycle_graph(n))) == n * n
    assert cactus_path_count(validate_cactus(pseudo_triangle_chain(7, 2))) == 67
    assert cactus_path_count(validate_cactus(pseudo_friendship(10, 3))) == 118
    assert cactus_path_count(validate_cactus(Graph.from_edges(1, []))) == 1


# ---------------------------------------------------------------- identities


def test_tree_identity():
    for n in range(1, 9):
        for g in enumerate_cacti(n, 0):
            assert count_paths(g) == comb(n + 1, 2)
    assert count_paths(path_graph(10)) == 55
    assert count_paths(star_graph(10)) == 55


def test_unicyclic_identity_small():
    from cactuspaths.formulas import unicyclic_path_count
    from cactuspaths.graphs import connected_components

    for n in range(3, 8):
        for g in enumerate_cacti(n, 1):
            p = validate_cactus(g)
            blk = next(p.tree.blocks[i] for i in p.cycle_blocks)
            stripped = g
            for e in blk.edges:
                stripped = stripped.remove_edge(*e)
            parts = [len(c) for c in connected_components(stripped)]
            assert count_paths(g) == unicyclic_path_count(n, parts)


def test_global_bounds_small():
    for n in range(1, 7):
        lo, hi = connected_graph_bounds(n)
        for g in connected_graphs(n):
            value = count_paths(g)
            assert lo <= value <= hi
            if value == lo:
                assert g.m == n - 1  # trees exactly
            if value == hi:
                assert g.m == comb(n, 2)  # the complete graph


def test_edge_removal_strictly_decreases_small():
    for n in range(2, 6):
        for g in connected_graphs(n):
            base = count_paths(g)
            for e in g.sorted_edges:
                assert count_paths(g.remove_edge(*e)) < base


# ---------------------------------------------------------------- oracle equivalence


def test_fast_counter_matches_oracle_on_census():
    for n in range(1, 8):
        for k in range((n - 1) // 2 + 1):
            for g in enumerate_cacti(n, k):
                assert cactus_path_count(validate_cactus(g)) == count_paths(g)


@given(st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_fast_counter_matches_oracle_random(seed):
    rng = random.Random(seed)
    n = rng.randrange(2, 12)
    k = rng.randrange(0, (n - 1) // 2 + 1)
    g = random_cactus(n, k, rng)
    p = validate_cactus(g)
    assert cactus_path_count(p) == count_paths(g)
    x = rng.randrange(n)
    y = rng.randrange(n)
    if x != y:
        assert cactus_count_between(p, x, y) == count_paths_between(g, x, y)


@given(st.integers(0, 10**6))
@settings(max_examples=30, deadline=None)
def test_tree_pairs_unique_random(seed):
    rng = random.Random(seed)
    g = random_cactus(rng.randrange(2, 10), 0, rng)
    x, y = rng.sample(range(g.n), 2)
    assert count_paths_between(g, x, y) == 1
    assert count_paths(g) == tree_path_count(g.n)
