import numpy as np
import pytest

from ndarc.colouring import is_nd, palettes
from ndarc.constructions import colour_knstar, colour_tree, knstar, round_robin, tree_removal_order
from ndarc.digraph import Digraph, degrees
from ndarc.generators import directed_cycle, directed_path, random_tree_orientation
from ndarc.proper import NotApplicable


@pytest.mark.parametrize("n, m", [(2, 2), (3, 6), (4, 12)])
def test_knstar_sizes(n, m):
    assert knstar(n).m == m


def test_knstar_n2_arcs():
    assert set(knstar(2).arcs) == {(0, 1), (1, 0)}


def test_knstar_rejects_small():
    with pytest.raises(ValueError):
        knstar(1)


def test_round_robin_3():
    rr = round_robin(3)
    assert rr.matchings == (frozenset({(1, 2)}), frozenset({(0, 2)}), frozenset({(0, 1)}))


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11])
def test_round_robin_invariants(n):
    rr = round_robin(n)
    for k, M in enumerate(rr.matchings):
        assert len(M) == (n - 1) // 2
        assert k not in {v for e in M for v in e}
    edges = [e for M in rr.matchings for e in M]
    assert len(edges) == len(set(edges)) == n * (n - 1) // 2


@pytest.mark.parametrize("n", [2, 4, 6])
def test_round_robin_rejects_even(n):
    with pytest.raises(ValueError):
        round_robin(n)


def test_knstar_3_palettes():
    pal = palettes(knstar(3), colour_knstar(3))
    assert [(set(o), set(i)) for o, i in pal] == [({2, 3}, {2, 3}), ({1, 3}, {1, 3}), ({1, 2}, {1, 2})]


@pytest.mark.parametrize("n", range(2, 12))
def test_knstar_nd_exactly_n(n):
    D, g = knstar(n), colour_knstar(n)
    assert is_nd(D, g) and g.used == n


@pytest.mark.parametrize("n", range(3, 12))
def test_knstar_missing_colour_bijection(n):
    pal = palettes(knstar(n), colour_knstar(n))
    missing = []
    for out, inn in pal:
        gone = set(range(1, n + 1)) - out
        assert len(gone) == 1 and gone == set(range(1, n + 1)) - inn
        missing.append(gone.pop())
    assert sorted(missing) == list(range(1, n + 1))


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_knstar_even_new_colour_placement(n):
    pal = palettes(knstar(n), colour_knstar(n))
    for v in range(n - 1):
        assert n in pal[v][0] and n in pal[v][1]
    assert n not in pal[n - 1][0] | pal[n - 1][1]


def test_tree_directed_path():
    D = directed_path(3)
    g = colour_tree(D)
    assert is_nd(D, g) and g.used == 1


def test_tree_pendant_pair(pendant_pair):
    g = colour_tree(pendant_pair)
    assert is_nd(pendant_pair, g) and g.used <= 3


def test_tree_out_star():
    D = Digraph(4, ((0, 1), (0, 2), (0, 3)))
    g = colour_tree(D)
    assert is_nd(D, g) and g.used == 3


def test_tree_star_with_opposite_arcs():
    D = Digraph(4, ((0, 1), (1, 0), (0, 2), (2, 0), (3, 0), (0, 3)))
    g = colour_tree(D)
    assert is_nd(D, g) and g.used <= degrees(D).delta_star + 1


def test_tree_two_cycle():
    g = colour_tree(directed_cycle(2))
    assert g.colours == (1, 2)


def test_tree_rejects_cycle():
    with pytest.raises(NotApplicable):
        colour_tree(directed_cycle(3))


def test_removal_order_peels_leaves():
    rng = np.random.default_rng(0)
    for _ in range(50):
        n = int(rng.integers(3, 30))
        D = random_tree_orientation(n, 0.3, rng)
        order = tree_removal_order(D)
        assert len(order) == n - 2
        assert len({leaf for leaf, _ in order}) == n - 2


def test_tree_random_bound():
    rng = np.random.default_rng(4)
    for _ in range(200):
        D = random_tree_orientation(int(rng.integers(2, 40)), float(rng.random()), rng)
        g = colour_tree(D)
        assert is_nd(D, g) and g.used <= degrees(D).delta_star + 1
