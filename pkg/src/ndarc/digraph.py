"""Digraph representation, degree statistics and structural classifiers."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

Arc = tuple[int, int]


class DigraphError(ValueError):
    """Base class for invalid digraph input."""


class LoopError(DigraphError):
    pass


class DuplicateArcError(DigraphError):
    pass


class VertexRangeError(DigraphError):
    pass


@dataclass(frozen=True)
class Digraph:
    """Loop-free digraph without repeated arcs on vertices ``0..n-1``.

    Arcs keep their input order; ``out_arcs[u]`` and ``in_arcs[v]`` hold arc
    indices in that same order.
    """

    n: int
    arcs: tuple[Arc, ...]
    out_arcs: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    in_arcs: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise DigraphError(f"negative vertex count {self.n}")
        arcs = tuple((int(u), int(v)) for u, v in self.arcs)
        index: dict[Arc, int] = {}
        out_lists: list[list[int]] = [[] for _ in range(self.n)]
        in_lists: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(arcs):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise VertexRangeError(f"arc ({u}, {v}) has an endpoint outside [0, {self.n})")
            if u == v:
                raise LoopError(f"loop at vertex {u}")
            if (u, v) in index:
                raise DuplicateArcError(f"arc ({u}, {v}) occurs twice")
            index[(u, v)] = i
            out_lists[u].append(i)
            in_lists[v].append(i)
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "out_arcs", tuple(map(tuple, out_lists)))
        object.__setattr__(self, "in_arcs", tuple(map(tuple, in_lists)))

    @property
    def m(self) -> int:
        return len(self.arcs)

    def __contains__(self, arc) -> bool:
        return tuple(arc) in self._index

    def index(self, u: int, v: int) -> int:
        """Position of arc ``(u, v)`` in :attr:`arcs`."""
        return self._index[(u, v)]

    def out_degree(self, u: int) -> int:
        return len(self.out_arcs[u])

    def in_degree(self, u: int) -> int:
        return len(self.in_arcs[u])

    def neighbours(self, u: int) -> set[int]:
        """Vertices joined to ``u`` by an arc in either direction."""
        nb = {self.arcs[i][1] for i in self.out_arcs[u]}
        nb.update(self.arcs[i][0] for i in self.in_arcs[u])
        return nb

    def reverse(self) -> "Digraph":
        return Digraph(self.n, tuple((v, u) for u, v in self.arcs))

    def relabel(self, perm: Sequence[int]) -> "Digraph":
        """Digraph with vertex ``u`` renamed ``perm[u]``."""
        return Digraph(self.n, tuple((perm[u], perm[v]) for u, v in self.arcs))

    def induced(self, keep: Iterable[int]) -> tuple["Digraph", list[int]]:
        """Subdigraph induced by ``keep``; returns it with the new->old vertex map."""
        old = sorted(set(keep))
        new_of = {v: i for i, v in enumerate(old)}
        arcs = [(new_of[u], new_of[v]) for u, v in self.arcs if u in new_of and v in new_of]
        return Digraph(len(old), tuple(arcs)), old


def build_digraph(n: int, arcs: Iterable[Sequence[int]]) -> Digraph:
    """Validate and build a :class:`Digraph`.

    Raises :class:`LoopError`, :class:`DuplicateArcError` or
    :class:`VertexRangeError` on bad input.
    """
    return Digraph(n, tuple(tuple(a) for a in arcs))


@dataclass(frozen=True)
class DegreeProfile:
    out_deg: tuple[int, ...]
    in_deg: tuple[int, ...]

    @property
    def max_out(self) -> int:
        return max(self.out_deg, default=0)

    @property
    def max_in(self) -> int:
        return max(self.in_deg, default=0)

    @property
    def delta_star(self) -> int:
        return max(self.max_out, self.max_in)


def degrees(D: Digraph) -> DegreeProfile:
    return DegreeProfile(
        tuple(len(a) for a in D.out_arcs),
        tuple(len(a) for a in D.in_arcs),
    )


def delta_star(D: Digraph) -> int:
    return degrees(D).delta_star


@dataclass(frozen=True)
class SimpleGraph:
    """Simple undirected graph; edges are stored as sorted ``(min, max)`` pairs."""

    n: int
    edges: tuple[Arc, ...]
    adj: tuple[frozenset, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        seen = set()
        adj: list[set[int]] = [set() for _ in range(self.n)]
        norm = []
        for u, v in self.edges:
            if u == v:
                raise LoopError(f"self-edge at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise VertexRangeError(f"edge ({u}, {v}) out of range")
            e = (min(u, v), max(u, v))
            if e in seen:
                raise DuplicateArcError(f"edge {e} occurs twice")
            seen.add(e)
            norm.append(e)
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "edges", tuple(norm))
        object.__setattr__(self, "adj", tuple(frozenset(a) for a in adj))

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)


def underlying_graph(D: Digraph) -> SimpleGraph:
    """Forget arc directions; opposite arcs collapse to one edge.

    Edges appear in order of their first arc in ``D.arcs``.
    """
    edges: dict[Arc, None] = {}
    for u, v in D.arcs:
        edges.setdefault((min(u, v), max(u, v)), None)
    return SimpleGraph(D.n, tuple(edges))


def two_colour(G: SimpleGraph) -> Optional[tuple[frozenset, frozenset]]:
    """Breadth-first bipartition ``(X, Y)`` of ``G`` or ``None`` if it has an odd cycle.

    The lowest vertex of every component (isolated ones included) lands in X.
    """
    side = [-1] * G.n
    for s in range(G.n):
        if side[s] != -1:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in sorted(G.adj[u]):
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    X = frozenset(v for v in range(G.n) if side[v] == 0)
    Y = frozenset(v for v in range(G.n) if side[v] == 1)
    return X, Y


def is_tree(G: SimpleGraph) -> bool:
    if G.n == 0 or len(G.edges) != G.n - 1:
        return False
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in G.adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == G.n


@dataclass(frozen=True)
class Classification:
    oriented: bool
    bipartition: Optional[tuple[frozenset, frozenset]]
    tree: bool
    complete_symmetric: bool

    @property
    def bipartite(self) -> bool:
        return self.bipartition is not None


def is_oriented(D: Digraph) -> bool:
    return not any((v, u) in D for u, v in D.arcs)


def classify(D: Digraph) -> Classification:
    G = underlying_graph(D)
    return Classification(
        oriented=is_oriented(D),
        bipartition=two_colour(G),
        tree=is_tree(G),
        complete_symmetric=D.n >= 1 and D.m == D.n * (D.n - 1),
    )
