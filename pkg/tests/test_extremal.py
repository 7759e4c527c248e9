import pytest

from cactuspaths.census import canonical_key
from cactuspaths.counting import count_paths
from cactuspaths.extremal import (
    SWEEP_COLUMNS,
    extremal_sweep,
    is_end_triangle_cactus,
    sweep_rows,
    verify_theorems,
)
from cactuspaths.families import (
    cycle_chain,
    cycle_graph,
    pseudo_friendship,
)
from cactuspaths.formulas import min_cactus_path_count, ptc_summation, tree_path_count
from cactuspaths.graphs import Graph, validate_cactus


def test_sweep_k1():
    rep = extremal_sweep(6, 1, "pn")
    assert rep.argmax_keys == {canonical_key(cycle_graph(6))}
    assert rep.max_value == 36
    tp = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    rep4 = extremal_sweep(4, 1, "pn")
    assert rep4.census_size == 2
    assert rep4.argmin_keys == {canonical_key(tp)}
    assert (rep4.min_value, rep4.max_value) == (15, 16)


def test_sweep_values_reproduced_by_oracle():
    rep = extremal_sweep(7, 2, "pn")
    assert rep.max_value == ptc_summation(7, 2) == 67
    assert rep.min_value == min_cactus_path_count(7, 2)
    for entry in (rep.argmin + rep.argmax)[:10]:
        value = count_paths(entry.graph)
        assert value in (rep.min_value, rep.max_value)


def test_sweep_trees_constant():
    rep = extremal_sweep(6, 0, "pn")
    assert rep.min_value == rep.max_value == tree_path_count(6)
    assert len(rep.argmin) == rep.census_size == 6


def test_sweep_rows_shape():
    rep = extremal_sweep(5, 2, "pn")
    rows = sweep_rows(rep)
    assert len(rows) == 1
    assert tuple(rows[0]) == SWEEP_COLUMNS
    assert rows[0]["is_argmin"] == rows[0]["is_argmax"] == "true"
    assert rows[0]["value"] == "33"


def test_sweep_rejects_unknown_invariant():
    with pytest.raises(ValueError):
        extremal_sweep(6, 2, "girth")


def test_parallel_sweep_matches_sequential():
    seq = extremal_sweep(7, 2, "pn", jobs=1)
    par = extremal_sweep(7, 2, "pn", jobs=2)
    assert (seq.min_value, seq.max_value) == (par.min_value, par.max_value)
    assert seq.argmin_keys == par.argmin_keys
    assert seq.argmax_keys == par.argmax_keys


def test_end_triangle_predicate():
    assert is_end_triangle_cactus(validate_cactus(pseudo_friendship(10, 3)))
    assert is_end_triangle_cactus(validate_cactus(cycle_graph(3)))
    assert not is_end_triangle_cactus(validate_cactus(cycle_graph(4)))
    assert not is_end_triangle_cactus(validate_cactus(cycle_chain([3, 3, 3])))


def test_verify_small_all_pass():
    report = verify_theorems(6, 2)
    assert report.all_passed
    names = {c.name for c in report.checks}
    assert {
        "pn_max_is_ptc",
        "pn_min_is_end_triangle_family",
        "wiener_min_is_pfg",
        "wiener_max_is_bsg",
        "subtrees_max_is_pfg",
        "subtrees_min_is_bsg",
        "pn_max_differs_from_wiener_max",
        "pn_min_strictly_contains_wiener_min",
    } <= names


def test_verify_k1():
    report = verify_theorems(6, 1, invariants=("pn",))
    assert report.all_passed
    assert any(c.name == "pn_max_is_cycle" and c.passed for c in report.checks)


def test_verify_k0():
    report = verify_theorems(5, 0, invariants=("pn",))
    assert report.all_passed
    assert any(c.name == "pn_trees_constant" for c in report.checks)


def test_verify_smallest_class_unique_max():
    report = verify_theorems(5, 2, invariants=("pn",))
    assert report.all_passed


def test_verify_bsg_checks_skipped_when_undefined():
    report = verify_theorems(7, 3)  # n = 2k + 1, no BSG
    bsg_checks = [c for c in report.checks if "bsg" in c.name]
    assert bsg_checks and all(not c.applicable for c in bsg_checks)
    assert report.all_passed


def test_verify_json_shape():
    data = verify_theorems(5, 2, invariants=("pn",)).to_json()
    assert data["n"] == 5 and data["k"] == 2
    assert isinstance(data["all_passed"], bool)
    assert all({"name", "applicable", "passed", "detail"} == set(c) for c in data["checks"])
