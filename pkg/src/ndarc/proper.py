"""Proper arc colourings with Delta* colours, Vizing edge colouring and the
oriented-graph shortcut."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .colouring import ArcColouring, is_nd
from .digraph import Digraph, SimpleGraph, degrees, is_oriented, two_colour, underlying_graph


class NotApplicable(ValueError):
    """The instance violates an algorithm's precondition."""


class TheoremViolation(RuntimeError):
    """A construction produced output its guarantee rules out (a bug)."""


@dataclass(frozen=True)
class BipartiteSplit:
    """Out-copies on the left, in-copies on the right, one edge per arc.

    Edge ``i`` is ``(tail, head)`` of arc ``i`` so the back-map is the identity.
    """

    n_left: int
    n_right: int
    edges: tuple[tuple[int, int], ...]

    @property
    def max_degree(self) -> int:
        ld = [0] * self.n_left
        rd = [0] * self.n_right
        for x, y in self.edges:
            ld[x] += 1
            rd[y] += 1
        return max(ld + rd, default=0)


def split_bipartite(D: Digraph) -> BipartiteSplit:
    return BipartiteSplit(D.n, D.n, D.arcs)


def _konig(n_left: int, n_right: int, edges: Sequence[tuple[int, int]], budget: int) -> list[int]:
    # at_left[x][c] / at_right[y][c]: edge of colour c at that vertex
    at_left: list[dict[int, int]] = [{} for _ in range(n_left)]
    at_right: list[dict[int, int]] = [{} for _ in range(n_right)]
    colour = [0] * len(edges)

    def lowest_free(used: dict[int, int]) -> int:
        c = 1
        while c in used:
            c += 1
        return c

    for e, (x, y) in enumerate(edges):
        a = lowest_free(at_left[x])
        b = lowest_free(at_right[y])
        if a > budget or b > budget:
            raise ValueError(f"degree exceeds colour budget {budget}")
        if a in at_right[y]:
            # a is busy at y, b is free at y: flip the a/b path leaving y
            path = []
            side, v, want = 1, y, a
            while True:
                table = at_right[v] if side else at_left[v]
                f = table.get(want)
                if f is None:
                    break
                path.append(f)
                v = edges[f][0] if side else edges[f][1]
                side ^= 1
                want = b if want == a else a
            for f in path:
                fx, fy = edges[f]
                del at_left[fx][colour[f]]
                del at_right[fy][colour[f]]
            for f in path:
                fx, fy = edges[f]
                colour[f] = b if colour[f] == a else a
                at_left[fx][colour[f]] = f
                at_right[fy][colour[f]] = f
        colour[e] = a
        at_left[x][a] = e
        at_right[y][a] = e
    return colour


def bipartite_edge_colour(B: Union[BipartiteSplit, SimpleGraph], budget: Optional[int] = None) -> list[int]:
    """Proper edge colouring of a bipartite graph with at most ``budget`` colours.

    Edges are inserted in order; a clash is resolved by swapping the two
    colours along an alternating path (constructive König). ``budget``
    defaults to the maximum degree. Returns one colour per edge, 1-based.
    """
    if isinstance(B, SimpleGraph):
        parts = two_colour(B)
        if parts is None:
            raise NotApplicable("graph is not bipartite")
        X = parts[0]
        edges = [(u, v) if u in X else (v, u) for u, v in B.edges]
        n_left = n_right = B.n
        max_deg = B.max_degree
    else:
        edges = list(B.edges)
        n_left, n_right = B.n_left, B.n_right
        max_deg = B.max_degree
    if budget is None:
        budget = max_deg
    if max_deg > budget:
        raise ValueError(f"maximum degree {max_deg} exceeds budget {budget}")
    return _konig(n_left, n_right, edges, budget)


def proper_arc_colour(D: Digraph) -> ArcColouring:
    """Proper arc colouring with exactly Delta* colours."""
    if D.m == 0:
        raise NotApplicable("nothing to colour: digraph has no arcs")
    ds = degrees(D).delta_star
    colours = bipartite_edge_colour(split_bipartite(D), ds)
    gamma = ArcColouring(tuple(colours), ds)
    if gamma.used != ds:
        raise TheoremViolation(f"proper colouring used {gamma.used} colours, expected {ds}")
    return gamma


def vizing_edge_colour(G: SimpleGraph) -> list[int]:
    """Proper edge colouring with at most Delta(G)+1 colours (Misra-Gries).

    Returns one colour per edge of ``G.edges``, 1-based.
    """
    palette = G.max_degree + 1
    # at[u][c] = neighbour joined to u by the edge of colour c
    at: list[dict[int, int]] = [{} for _ in range(G.n)]
    col: dict[tuple[int, int], int] = {}

    def key(u, v):
        return (u, v) if u < v else (v, u)

    def free(u):
        for c in range(1, palette + 1):
            if c not in at[u]:
                return c
        raise AssertionError("no free colour")

    def is_free(u, c):
        return c not in at[u]

    def set_colour(u, v, c):
        old = col.get(key(u, v))
        if old is not None:
            del at[u][old]
            del at[v][old]
        if c is None:
            col.pop(key(u, v), None)
        else:
            col[key(u, v)] = c
            at[u][c] = v
            at[v][c] = u

    def is_fan(u, fan):
        for i in range(1, len(fan)):
            c = col.get(key(u, fan[i]))
            if c is None or not is_free(fan[i - 1], c):
                return False
        return True

    for u, v in G.edges:
        common = next((c for c in range(1, palette + 1) if c not in at[u] and c not in at[v]), None)
        if common is not None:
            set_colour(u, v, common)
            continue
        fan = [v]
        in_fan = {v}
        extended = True
        while extended:
            extended = False
            last = fan[-1]
            for c, w in at[u].items():
                if w not in in_fan and is_free(last, c):
                    fan.append(w)
                    in_fan.add(w)
                    extended = True
                    break
        c = free(u)
        d = free(fan[-1])
        if c != d:
            # invert the c/d path from u; it starts with a d-edge since c is free at u
            path = []
            x, want = u, d
            while want in at[x]:
                y = at[x][want]
                path.append((x, y))
                x = y
                want = c if want == d else d
            recol = [(a, b, col[key(a, b)]) for a, b in path]
            for a, b, _ in recol:
                set_colour(a, b, None)
            for a, b, old in recol:
                set_colour(a, b, d if old == c else c)
        w_idx = None
        for i, w in enumerate(fan):
            if is_free(w, d) and is_fan(u, fan[: i + 1]):
                w_idx = i
                break
        if w_idx is None:
            raise TheoremViolation("Misra-Gries: no fan prefix ends at a vertex missing d")
        shifted = [col[key(u, fan[i + 1])] for i in range(w_idx)]
        for i in range(1, w_idx + 1):
            set_colour(u, fan[i], None)
        for i, c_i in enumerate(shifted):
            set_colour(u, fan[i], c_i)
        set_colour(u, fan[w_idx], d)
    return [col[e] for e in G.edges]


def colour_oriented(D: Digraph) -> ArcColouring:
    """Lift a Vizing colouring of und(D) to the arcs of an oriented graph."""
    if not is_oriented(D):
        raise NotApplicable("opposite arcs present: digraph is not oriented")
    G = underlying_graph(D)
    edge_colour = dict(zip(G.edges, vizing_edge_colour(G)))
    gamma = ArcColouring.of([edge_colour[(min(u, v), max(u, v))] for u, v in D.arcs])
    verdict = is_nd(D, gamma)
    if not verdict:
        raise TheoremViolation(f"oriented lift is not nd: {verdict.reason}")
    return gamma
