import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from oracles import (
    C4_EDGES,
    brute_contains,
    clique_edges,
    contains_by_embedding,
    pattern_copies,
    wheel_edges,
)
from wheelsat.detect import (
    C4,
    K4,
    W4,
    c4_in_neighborhood_witness,
    contains_c4,
    contains_clique,
    contains_w4,
    contains_wheel,
    parse_target,
)
from wheelsat.families import build_f1, h_star
from wheelsat.graph import complete, cycle, empty, wheel


def test_small_cases():
    assert contains_c4(cycle(4))
    assert not contains_c4(complete(3))
    assert contains_clique(complete(4), 4)
    assert not contains_clique(cycle(5), 3)
    assert contains_w4(wheel(4))
    assert contains_w4(complete(5))
    assert not contains_w4(h_star())


def test_hstar_contains_k4():
    assert contains_clique(h_star(), 4)
    assert brute_contains(h_star(), clique_edges(4), 4)


@pytest.mark.parametrize("pairs", [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
def test_f1_members_are_c4_free(pairs):
    assert not contains_c4(build_f1(8, pairs))


def test_wheels():
    assert contains_wheel(complete(4), 3)
    w5 = wheel(5)
    assert contains_wheel(w5, 5)
    assert not contains_wheel(w5, 4)
    assert brute_contains(w5, wheel_edges(5), 6)
    assert not brute_contains(w5, wheel_edges(4), 5)
    for m in range(3, 9):
        assert not contains_wheel(empty(10), m)


def test_witness():
    w4 = wheel(4)
    rim = c4_in_neighborhood_witness(w4, 4)
    assert rim is not None and set(rim) == {0, 1, 2, 3}
    for v in range(5):
        assert c4_in_neighborhood_witness(h_star(), v) is None
    k5 = complete(5)
    for v in range(5):
        assert set(c4_in_neighborhood_witness(k5, v)) == set(range(5)) - {v}


def test_exhaustive_six_vertex_oracle(labeled_6):
    patterns = {
        "c4": pattern_copies(C4_EDGES, 4, 6),
        "k3": pattern_copies(clique_edges(3), 3, 6),
        "k4": pattern_copies(clique_edges(4), 4, 6),
        "k5": pattern_copies(clique_edges(5), 5, 6),
        "w4": pattern_copies(wheel_edges(4), 5, 6),
        "w5": pattern_copies(wheel_edges(5), 6, 6),
    }
    assert len(patterns["w4"]) == 90
    for mask, g in labeled_6:
        assert contains_c4(g) == contains_by_embedding(mask, patterns["c4"])
        for k in (3, 4, 5):
            assert contains_clique(g, k) == contains_by_embedding(mask, patterns[f"k{k}"])
        w4 = contains_by_embedding(mask, patterns["w4"])
        assert contains_w4(g) == w4
        assert contains_wheel(g, 4) == w4
        assert contains_wheel(g, 3) == contains_by_embedding(mask, patterns["k4"])
        assert contains_wheel(g, 5) == contains_by_embedding(mask, patterns["w5"])


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=6, max_n=7), st.integers(5, 6))
def test_general_wheel_against_brute_force(g, m):
    assert contains_wheel(g, m) == brute_contains(g, wheel_edges(m), m + 1)


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=2, max_n=14), st.randoms(use_true_random=False))
def test_monotone_under_edge_addition(g, rnd):
    missing = g.non_edges()
    if not missing:
        return
    h = g.add_edge(*rnd.choice(missing))
    for check in (contains_c4, contains_w4, lambda x: contains_clique(x, 4), lambda x: contains_wheel(x, 5)):
        if check(g):
            assert check(h)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=14))
def test_wheel3_is_k4(g):
    assert contains_wheel(g, 3) == contains_clique(g, 4)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=14))
def test_witness_soundness(g):
    for v in range(g.n):
        rim = c4_in_neighborhood_witness(g, v)
        if rim is None:
            continue
        assert len(set(rim)) == 4 and v not in rim
        assert all(g.has_edge(v, r) for r in rim)
        assert all(g.has_edge(rim[i], rim[(i + 1) % 4]) for i in range(4))
    assert contains_w4(g) == any(c4_in_neighborhood_witness(g, v) for v in range(g.n))


def test_parse_target():
    assert parse_target("W4") == W4
    assert parse_target("c4") == C4
    assert parse_target("K4") == K4
    assert parse_target("W7").size == 7
    assert W4.num_edges == 8 and K4.num_edges == 6
    assert W4.triangle_edged and K4.triangle_edged and not C4.triangle_edged
    for bad in ("W2", "X4", "K", "C5", "K1"):
        with pytest.raises(ValueError):
            parse_target(bad)


def test_random_dense_graphs_contain_everything():
    rnd = random.Random(7)
    for _ in range(20):
        n = rnd.randint(8, 12)
        g = complete(n).remove_edge(0, 1)
        assert contains_w4(g) and contains_c4(g) and contains_clique(g, 5)
