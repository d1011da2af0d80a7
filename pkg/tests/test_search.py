from collections import Counter

import networkx as nx
import pytest

from oracles import brute_saturated, labeled_graphs, wheel_edges
from wheelsat.canon import canonical_key, is_isomorphic
from wheelsat.detect import C4, K4, W4, parse_target
from wheelsat.families import c4_extremal_rhs, h_star, theorem_rhs
from wheelsat.graph import Graph, complete_split
from wheelsat.search import NO_PRUNE, PruneOptions, TargetFree, enumerate_levels, search_min_saturated

# unlabeled graphs on n vertices, by edge count
KNOWN_TOTALS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


def _atlas_counts(n):
    counts = Counter()
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() == n:
            counts[h.number_of_edges()] += 1
    return counts


@pytest.mark.parametrize("n", range(1, 8))
def test_levels_match_atlas(n):
    atlas = _atlas_counts(n)
    total = 0
    for m, level in enumerate_levels(n):
        assert len(level) == atlas[m], (n, m)
        total += len(level)
    assert total == KNOWN_TOTALS[n]


@pytest.mark.parametrize("n", [4, 5, 6])
def test_levels_match_brute_dedup(n):
    by_edges = {}
    for _, g in labeled_graphs(n):
        by_edges.setdefault(g.num_edges, set()).add(canonical_key(g))
    for m, level in enumerate_levels(n):
        keys = [k for k, _ in level]
        assert len(keys) == len(set(keys))
        assert set(keys) == by_edges[m]
        assert all(canonical_key(g) == k for k, g in level)


def test_keep_predicate_restricts_levels():
    keep = TargetFree(C4)
    for m, level in enumerate_levels(6, keep=keep):
        assert all(keep(g) for _, g in level)
    all_free = sum(len(lv) for _, lv in enumerate_levels(6, keep=keep))
    expected = sum(1 for _, lv in enumerate_levels(6) for _, g in lv if keep(g))
    assert all_free == expected


def test_workers_do_not_change_levels():
    one = [(m, [k for k, _ in lv]) for m, lv in enumerate_levels(7, max_edges=9)]
    two = [(m, [k for k, _ in lv]) for m, lv in enumerate_levels(7, max_edges=9, workers=2)]
    assert one == two


def test_n5_w4():
    report = search_min_saturated(5, W4)
    assert report.sat_value == 8
    assert len(report.extremal) == 1
    assert is_isomorphic(report.graphs[0], h_star())
    assert report.status == "ok"


def test_n5_k4():
    report = search_min_saturated(5, K4)
    assert report.sat_value == 7
    assert len(report.graphs) == 1
    assert is_isomorphic(report.graphs[0], complete_split(2, 5))


def test_n6_w4_equals_families():
    report = search_min_saturated(6, W4)
    assert report.sat_value == 10
    assert report.keys == [k for k, _ in theorem_rhs(6)]
    assert len(report.keys) == 2


def test_n7_c4():
    report = search_min_saturated(7, C4)
    assert report.sat_value == 8
    assert report.keys == [k for k, _ in c4_extremal_rhs(7)]


@pytest.mark.parametrize("target", [W4, C4, K4, parse_target("K3"), parse_target("W5")])
@pytest.mark.parametrize("n", [5, 6, 7])
def test_prunes_are_sound(target, n):
    full = search_min_saturated(n, target, prune=NO_PRUNE)
    default = search_min_saturated(n, target)
    heredity_only = search_min_saturated(n, target, prune=PruneOptions(hereditary=True, common_neighbor=False))
    assert full.sat_value == default.sat_value == heredity_only.sat_value
    assert full.keys == default.keys == heredity_only.keys


def test_search_against_brute_force_n5():
    # minimum W4-saturated edge count over all labeled 5-vertex graphs
    best = min(g.num_edges for _, g in labeled_graphs(5) if brute_saturated(g, wheel_edges(4), 5))
    assert search_min_saturated(5, W4, prune=NO_PRUNE).sat_value == best


def test_edge_cap():
    report = search_min_saturated(6, W4, edge_cap=9)
    assert report.status == "edge_cap" and report.sat_value is None and report.extremal == []
    report = search_min_saturated(6, W4, edge_cap=10)
    assert report.status == "ok" and report.sat_value == 10


def test_report_json_is_key_sorted():
    text = search_min_saturated(5, W4).to_json()
    assert text.index('"extremal"') < text.index('"graphs_examined"') < text.index('"n"')
    assert '"DN{"' in text


def test_range_guard():
    with pytest.raises(ValueError):
        search_min_saturated(13, W4)
    with pytest.raises(ValueError):
        search_min_saturated(0, W4)


def test_extremal_graphs_are_canonical():
    for key, g in search_min_saturated(7, W4).extremal:
        assert canonical_key(g) == key
        assert isinstance(g, Graph)
