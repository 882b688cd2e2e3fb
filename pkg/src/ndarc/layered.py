"""Bipartite two-matching repair and its extension through bipartite layers."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .colouring import ArcColouring, conflicts, is_nd, is_proper
from .digraph import Digraph, SimpleGraph, degrees, two_colour, underlying_graph
from .proper import NotApplicable, TheoremViolation, proper_arc_colour


def greedy_vertex_colour(G: SimpleGraph) -> list[int]:
    """Largest-degree-first greedy colouring; colours are 0-based."""
    order = sorted(range(G.n), key=lambda v: (-G.degree(v), v))
    colour = [-1] * G.n
    for v in order:
        taken = {colour[w] for w in G.adj[v]}
        c = 0
        while c in taken:
            c += 1
        colour[v] = c
    return colour


@dataclass(frozen=True)
class Layer:
    X: frozenset
    Y: frozenset
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Layering:
    k: int
    layers: tuple[Layer, ...]

    def layer_of(self) -> dict[tuple[int, int], int]:
        return {e: j for j, layer in enumerate(self.layers) for e in layer.edges}


def layer_count(k: int) -> int:
    return math.ceil(math.log2(k)) if k > 1 else 0


def bipartite_layers(G: SimpleGraph, c: Sequence[int]) -> Layering:
    """Put edge uv in the layer of the lowest bit where c(u) and c(v) differ."""
    for u, v in G.edges:
        if c[u] == c[v]:
            raise ValueError(f"vertex colouring is improper on edge ({u}, {v})")
    k = max(c, default=-1) + 1
    nl = layer_count(k)
    edges: list[list[tuple[int, int]]] = [[] for _ in range(nl)]
    for u, v in G.edges:
        diff = c[u] ^ c[v]
        edges[(diff & -diff).bit_length() - 1].append((u, v))
    layers = []
    for j in range(nl):
        X = frozenset(v for v in range(G.n) if not (c[v] >> j) & 1)
        layers.append(Layer(X, frozenset(range(G.n)) - X, tuple(edges[j])))
    return Layering(k, tuple(layers))


def _greedy_matching(D: Digraph, candidates: Iterable[int], blocked: Optional[set] = None) -> list[int]:
    used = set() if blocked is None else set(blocked)
    M = []
    for i in candidates:
        u, v = D.arcs[i]
        if u not in used and v not in used:
            M.append(i)
            used.update((u, v))
    return M


@dataclass
class RepairTrace:
    """What one two-matching pass did; ``m1``/``m2`` hold arc indices."""

    m1: list[int] = field(default_factory=list)
    m2: list[int] = field(default_factory=list)
    conflicts_after_m1: Optional[list[int]] = None
    stopped: str = ""


def _repair(D, colours, arcs, X, Y, c1, c2, trace, cover_all=False):
    """Two-matching pass over ``arcs`` (indices) with fresh colours c1, c2.

    Mutates ``colours``. Conflicts are judged on the whole colouring.
    """
    forward = [i for i in arcs if D.arcs[i][0] in X and D.arcs[i][1] in Y]
    backward = [i for i in arcs if D.arcs[i][0] in Y and D.arcs[i][1] in X]
    trace.m1 = _greedy_matching(D, forward)
    for i in trace.m1:
        colours[i] = c1
    bad = conflicts(D, ArcColouring.of(colours))
    trace.conflicts_after_m1 = bad
    if not bad:
        trace.stopped = "m1"
        return
    bad_set = set(bad)
    cand = [i for i in backward if i in bad_set]
    if cover_all:
        covered = {v for i in trace.m1 for v in D.arcs[i]}
        cand += [i for i in backward if i not in bad_set and not covered & set(D.arcs[i])]
    trace.m2 = _greedy_matching(D, cand)
    for i in trace.m2:
        colours[i] = c2


def colour_bipartite_traced(D: Digraph, parts=None) -> tuple[ArcColouring, RepairTrace]:
    """:func:`colour_bipartite` that also returns the repair trace."""
    if D.m == 0:
        raise NotApplicable("nothing to colour: digraph has no arcs")
    if parts is None:
        parts = two_colour(underlying_graph(D))
        if parts is None:
            raise NotApplicable("not bipartite")
    X, Y = frozenset(parts[0]), frozenset(parts[1])
    for u, v in D.arcs:
        if (u in X) == (v in X) or (u in Y) == (v in Y):
            raise NotApplicable(f"not bipartite: arc ({u}, {v}) stays inside one part")
    ds = degrees(D).delta_star
    base = proper_arc_colour(D)
    trace = RepairTrace()
    if is_nd(D, base):
        trace.stopped = "base"
        return base, trace
    colours = list(base.colours)
    _repair(D, colours, range(D.m), X, Y, ds + 1, ds + 2, trace)
    gamma = ArcColouring(tuple(colours), ds + 2)
    verdict = is_nd(D, gamma)
    if not verdict:
        raise TheoremViolation(f"theorem violation: bipartite repair left a conflict ({verdict.reason})")
    return gamma, trace


def colour_bipartite(D: Digraph, parts=None) -> ArcColouring:
    """nd-colouring of a bipartite digraph with at most Delta*+2 colours.

    Starts from a proper Delta*-colouring. A maximal matching of X->Y arcs
    takes colour Delta*+1; a maximal matching of the still-conflicting Y->X
    arcs takes Delta*+2. Each stage is skipped once the colouring is nd.
    """
    return colour_bipartite_traced(D, parts)[0]


@dataclass
class LayeredResult:
    colouring: ArcColouring
    k: int
    layers: int
    traces: list[RepairTrace]

    @property
    def bound(self) -> int:
        return self.colouring.k


def colour_layered_traced(D: Digraph) -> LayeredResult:
    if D.m == 0:
        raise NotApplicable("nothing to colour: digraph has no arcs")
    G = underlying_graph(D)
    vc = greedy_vertex_colour(G)
    layering = bipartite_layers(G, vc)
    ds = degrees(D).delta_star
    nl = len(layering.layers)
    budget = ds + 2 * nl
    colours = list(proper_arc_colour(D).colours)
    edge_layer = layering.layer_of()
    traces = []
    for j, layer in enumerate(layering.layers):
        if is_nd(D, ArcColouring.of(colours)):
            break
        arcs = [i for i, (u, v) in enumerate(D.arcs) if edge_layer[(min(u, v), max(u, v))] == j]
        trace = RepairTrace()
        _repair(D, colours, arcs, layer.X, layer.Y, ds + 2 * j + 1, ds + 2 * j + 2, trace, cover_all=True)
        traces.append(trace)
    gamma = ArcColouring(tuple(colours), max(budget, ds))
    verdict = is_nd(D, gamma)
    if not verdict:
        raise TheoremViolation(f"layered repair left a conflict ({verdict.reason})")
    return LayeredResult(gamma, layering.k, nl, traces)


def colour_layered(D: Digraph) -> ArcColouring:
    """nd-colouring with at most Delta* + 2*ceil(log2 k) colours.

    ``k`` is the number of colours of a greedy vertex colouring of und(D).
    Each bipartite layer gets its own pair of fresh colours and a
    two-matching pass restricted to its arcs.
    """
    return colour_layered_traced(D).colouring
