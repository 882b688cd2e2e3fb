import numpy as np
import pytest
from hypothesis import given, settings

from ndarc.colouring import ArcColouring, is_nd, palettes
from ndarc.constructions import knstar
from ndarc.digraph import Digraph, degrees
from ndarc.factorization import (
    OneFactor, _doubling_completion, colour_general, colour_one_factor, one_factorize, regularize,
)
from ndarc.generators import directed_cycle, gnp, random_cycle_union
from ndarc.proper import NotApplicable

from conftest import digraphs


def check_embedding(D, emb):
    k = degrees(D).delta_star
    prof = degrees(emb.host)
    assert set(prof.out_deg) == {k} and set(prof.in_deg) == {k}
    assert emb.host.arcs[: D.m] == D.arcs
    assert sum(emb.original) == D.m


def test_regularize_single_arc():
    D = Digraph(2, ((0, 1),))
    emb = regularize(D)
    check_embedding(D, emb)
    assert emb.host.n == 2 and set(emb.host.arcs) == {(0, 1), (1, 0)}


def test_regularize_regular_is_identity():
    D = directed_cycle(3)
    assert regularize(D).host == D


def test_regularize_k3star_minus_arc():
    arcs = tuple(a for a in knstar(3).arcs if a != (0, 1))
    D = Digraph(3, arcs)
    emb = regularize(D)
    assert emb.host.n == 3 and set(emb.host.arcs) == set(knstar(3).arcs)


def test_regularize_needs_fresh_vertex():
    # an isolated vertex cannot gain an in- and out-arc from the 2-cycle vertices
    D = Digraph(3, ((0, 1), (1, 0)))
    emb = regularize(D)
    check_embedding(D, emb)
    assert emb.host.n == 4 and emb.strategy == "flow"


def test_doubling_fallback_regular():
    D = Digraph(4, ((0, 1), (0, 2), (0, 3)))
    H = _doubling_completion(D, 3)
    prof = degrees(H)
    assert set(prof.out_deg) == {3} == set(prof.in_deg)
    assert H.arcs[: D.m] == D.arcs


@given(digraphs(max_n=9, min_arcs=1))
def test_regularize_invariants(D):
    emb = regularize(D)
    check_embedding(D, emb)
    if emb.strategy == "flow":
        assert emb.host.n <= D.n + degrees(D).delta_star + 1


def check_factors(H, factors, k):
    assert len(factors) == k
    arcs = [a for F in factors for a in F.arcs()]
    assert len(arcs) == len(set(arcs)) == H.m
    assert set(arcs) == set(H.arcs)


def test_factorize_two_cycle():
    F = one_factorize(directed_cycle(2), 1)
    assert F == [OneFactor((1, 0))]


def test_factorize_k3star_rotations():
    factors = one_factorize(knstar(3), 2)
    check_factors(knstar(3), factors, 2)
    assert {F.successor for F in factors} == {(1, 2, 0), (2, 0, 1)}


def test_factorize_cycle_with_chords():
    D = Digraph(4, ((0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3), (2, 0), (3, 1)))
    check_factors(D, one_factorize(D, 2), 2)


def test_factorize_rejects_irregular():
    with pytest.raises(NotApplicable):
        one_factorize(Digraph(3, ((0, 1),)), 1)


def test_one_factor_rejects_fixed_point():
    with pytest.raises(ValueError):
        OneFactor((0, 2, 1))


def test_colour_c4():
    F = OneFactor((1, 2, 3, 0))
    assert [colour_one_factor(F, (1, 2))[a] for a in F.arcs()] == [1, 2, 1, 2]


def test_colour_c3():
    F = OneFactor((1, 2, 0))
    assert [colour_one_factor(F, (1, 2))[a] for a in F.arcs()] == [2, 2, 1]


def test_colour_c2_distinguished():
    F = OneFactor((1, 0))
    col = colour_one_factor(F, (1, 2))
    assert [col[a] for a in F.arcs()] == [1, 2]
    D = directed_cycle(2)
    assert palettes(D, ArcColouring.of([col[a] for a in D.arcs])) == [({1}, {2}), ({2}, {1})]


def test_one_factor_colouring_no_three_in_a_row():
    rng = np.random.default_rng(3)
    for _ in range(100):
        D = random_cycle_union(int(rng.integers(2, 40)), rng)
        F = OneFactor(tuple(v for _, v in sorted(D.arcs)))
        col = colour_one_factor(F, (5, 6))
        succ = F.successor
        for u in range(F.n):
            v = succ[u]
            w = succ[v]
            assert not (col[(u, v)] == col[(v, w)] == col[(w, succ[w])])
            if w == u:
                assert col[(u, v)] != col[(v, u)]
        gamma = ArcColouring.of([col[a] for a in D.arcs])
        assert is_nd(D, gamma)


def test_general_cycle():
    for n in range(2, 9):
        D = directed_cycle(n)
        g = colour_general(D)
        assert is_nd(D, g) and g.used == 2


def test_general_k3star():
    g = colour_general(knstar(3))
    assert is_nd(knstar(3), g) and g.used <= 4


def test_general_pendant_pair(pendant_pair):
    g = colour_general(pendant_pair)
    assert is_nd(pendant_pair, g) and g.used <= 4


@settings(max_examples=60)
@given(digraphs(max_n=10, min_arcs=1))
def test_general_bound(D):
    g = colour_general(D)
    assert is_nd(D, g) and g.used <= 2 * degrees(D).delta_star


def test_general_dense_random():
    rng = np.random.default_rng(8)
    for _ in range(40):
        D = gnp(int(rng.integers(5, 25)), 0.5, rng, max_delta=5)
        if D.m:
            assert is_nd(D, colour_general(D))
