import numpy as np
import pytest
from hypothesis import given, settings

from ndarc.colouring import is_nd, is_proper
from ndarc.constructions import knstar
from ndarc.digraph import Digraph, SimpleGraph, classify, degrees, underlying_graph
from ndarc.generators import directed_cycle, gnp, random_bipartite
from ndarc.layered import (
    bipartite_layers, colour_bipartite, colour_bipartite_traced, colour_layered, colour_layered_traced,
    greedy_vertex_colour, layer_count,
)
from ndarc.proper import NotApplicable

from conftest import digraphs

TRIANGLE = SimpleGraph(3, ((0, 1), (1, 2), (0, 2)))
P4 = SimpleGraph(4, ((0, 1), (1, 2), (2, 3)))
C5 = SimpleGraph(5, tuple((i, (i + 1) % 5) for i in range(5)))


@pytest.mark.parametrize("G, k", [(TRIANGLE, 3), (P4, 2), (C5, 3)])
def test_greedy_counts(G, k):
    c = greedy_vertex_colour(G)
    assert max(c) + 1 == k
    assert all(c[u] != c[v] for u, v in G.edges)


def test_layers_triangle():
    L = bipartite_layers(TRIANGLE, [0, 1, 2])
    assert len(L.layers) == 2
    assert set(L.layers[0].edges) == {(0, 1), (1, 2)}
    assert L.layers[1].edges == ((0, 2),)


def test_layers_bipartite_single():
    L = bipartite_layers(P4, [0, 1, 0, 1])
    assert len(L.layers) == 1 and len(L.layers[0].edges) == 3


def test_layers_k4():
    assert layer_count(4) == 2
    G = underlying_graph(knstar(4))
    assert len(bipartite_layers(G, [0, 1, 2, 3]).layers) == 2


def test_layers_reject_improper():
    with pytest.raises(ValueError):
        bipartite_layers(P4, [0, 0, 1, 0])


@settings(max_examples=60)
@given(digraphs(max_n=10))
def test_layering_partitions_edges(D):
    G = underlying_graph(D)
    L = bipartite_layers(G, greedy_vertex_colour(G))
    edges = [e for layer in L.layers for e in layer.edges]
    assert sorted(edges) == sorted(G.edges)
    for layer in L.layers:
        for u, v in layer.edges:
            assert (u in layer.X) != (v in layer.X)


def test_bipartite_four_cycle():
    D = directed_cycle(4)
    g, trace = colour_bipartite_traced(D)
    assert [D.arcs[i] for i in trace.m1] == [(0, 1), (2, 3)]
    assert g.colours == (2, 1, 2, 1)
    assert is_nd(D, g)


def test_bipartite_pendant_pair(pendant_pair):
    g = colour_bipartite(pendant_pair)
    assert is_nd(pendant_pair, g) and g.used <= 4


def test_bipartite_single_arc_untouched():
    g, trace = colour_bipartite_traced(Digraph(2, ((0, 1),)))
    assert g.colours == (1,) and trace.stopped == "base"


def test_bipartite_rejects_inner_arc():
    with pytest.raises(NotApplicable):
        colour_bipartite(Digraph(3, ((0, 1), (1, 2))), (frozenset({0, 1}), frozenset({2})))


def test_bipartite_rejects_odd():
    with pytest.raises(NotApplicable):
        colour_bipartite(knstar(3))


def test_bipartite_random_invariants():
    rng = np.random.default_rng(21)
    for _ in range(150):
        D = random_bipartite(int(rng.integers(1, 12)), int(rng.integers(1, 12)), float(rng.random()), rng, max_delta=4)
        if D.m == 0:
            continue
        X, Y = classify(D).bipartition
        g, trace = colour_bipartite_traced(D)
        assert is_nd(D, g) and g.used <= degrees(D).delta_star + 2
        for i in trace.conflicts_after_m1 or []:
            u, v = D.arcs[i]
            assert u in Y and v in X


def test_layered_bipartite_one_layer():
    D = directed_cycle(4)
    r = colour_layered_traced(D)
    assert r.layers == 1 and r.colouring.used <= degrees(D).delta_star + 2


def test_layered_k3star():
    D = knstar(3)
    r = colour_layered_traced(D)
    assert r.k == 3 and r.layers == 2
    assert is_nd(D, r.colouring) and r.colouring.used <= 6


def test_layered_oriented_c5():
    D = directed_cycle(5)
    g = colour_layered(D)
    assert is_nd(D, g) and g.used <= degrees(D).delta_star + 4


def test_layered_random_bound_and_monotone():
    rng = np.random.default_rng(13)
    for _ in range(150):
        D = gnp(int(rng.integers(3, 18)), float(rng.random()), rng)
        if D.m == 0:
            continue
        r = colour_layered_traced(D)
        assert is_nd(D, r.colouring)
        assert r.colouring.used <= degrees(D).delta_star + 2 * layer_count(r.k)
        assert is_proper(D, r.colouring)
