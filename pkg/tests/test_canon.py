from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, relabeled
from oracles import brute_canonical, brute_isomorphic, labeled_graphs
from wheelsat.canon import canonical_form, canonical_graph, canonical_key, refine
from wheelsat.graph import Graph, complete, cycle, empty, path


def test_relabeled_cycle_same_key():
    a = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    b = Graph.from_edges(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)])
    assert canonical_key(a) == canonical_key(b)


def test_triangle_plus_isolated_differs_from_paths():
    k3_k1 = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2)])
    p4 = path(4)
    for other in (p4, p4.remove_edge(0, 1), p4.remove_edge(1, 2)):
        assert not brute_isomorphic(k3_k1, other)
        assert canonical_key(k3_k1) != canonical_key(other)


def test_eleven_classes_on_four_vertices():
    keys = {canonical_key(g) for _, g in labeled_graphs(4)}
    assert len(keys) == 11


@pytest.mark.parametrize("n", [4, 5])
def test_key_agrees_with_brute_force_isomorphism(n):
    gs = [g for _, g in labeled_graphs(n)]
    keys = [canonical_key(g) for g in gs]
    brute = [brute_canonical(g) for g in gs]
    for i in range(len(gs)):
        for j in range(i, len(gs)):
            assert (keys[i] == keys[j]) == (brute[i] == brute[j])


def test_atlas_graphs_have_distinct_keys():
    # the atlas lists every graph on <= 7 vertices exactly once up to isomorphism
    seen = {}
    for h in nx.graph_atlas_g()[1:]:
        g = Graph.from_edges(h.number_of_nodes(), h.edges())
        key = canonical_key(g)
        assert key not in seen
        seen[key] = g
    assert len(seen) == 1252


@settings(max_examples=300, deadline=None)
@given(relabeled(max_n=12))
def test_key_invariant_under_relabeling(pair):
    g, h = pair
    assert canonical_key(g) == canonical_key(h)
    assert canonical_graph(g) == canonical_graph(h)


@settings(max_examples=50, deadline=None)
@given(relabeled(min_n=20, max_n=40))
def test_key_invariant_larger_graphs(pair):
    g, h = pair
    assert canonical_key(g) == canonical_key(h)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=12))
def test_canonical_graph_is_fixed_point(g):
    c = canonical_graph(g)
    assert canonical_graph(c) == c
    assert canonical_key(c) == canonical_key(g)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=6), graphs(max_n=6))
def test_key_equality_matches_brute_force_n6(g, h):
    assert (canonical_key(g) == canonical_key(h)) == brute_isomorphic(g, h)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=10))
def test_automorphisms_are_automorphisms(g):
    edges = set(g.edges())
    for a in canonical_form(g).automorphisms:
        assert {tuple(sorted((a[u], a[v]))) for u, v in edges} == edges


@pytest.mark.parametrize("g", [empty(12), complete(12), cycle(12), empty(40)])
def test_symmetric_graphs_finish(g):
    # large automorphism groups must be pruned, not enumerated
    assert canonical_key(g) == canonical_key(g.relabel(list(reversed(range(g.n)))))


def test_refine_is_equitable():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4)])
    cells = refine(g.adj, [g.full_mask])
    for cell in cells:
        for splitter in cells:
            counts = {(g.adj[v] & splitter).bit_count() for v in range(6) if cell >> v & 1}
            assert len(counts) == 1


def test_distinct_degree_sequences_distinct_keys():
    a = Graph.from_edges(5, combinations(range(4), 2))
    b = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    assert canonical_key(a) != canonical_key(b)
