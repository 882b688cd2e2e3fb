"""Regular completion, 1-factorization and the 2*Delta* general colouring."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

import networkx as nx

from .colouring import ArcColouring, is_nd
from .digraph import Digraph, degrees
from .proper import NotApplicable, TheoremViolation


@dataclass(frozen=True)
class OneFactor:
    """Spanning 1-regular digraph given by its successor permutation."""

    successor: tuple[int, ...]

    def __post_init__(self):
        succ = self.successor
        if sorted(succ) != list(range(len(succ))):
            raise ValueError("successor map is not a permutation")
        if any(s == u for u, s in enumerate(succ)):
            raise ValueError("successor map has a fixed point")

    @property
    def n(self) -> int:
        return len(self.successor)

    def arcs(self) -> list[tuple[int, int]]:
        return list(enumerate(self.successor))

    def cycles(self) -> list[list[int]]:
        """Vertex cycles, each starting at its minimum vertex, ordered by that vertex."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            cyc = []
            v = s
            while not seen[v]:
                seen[v] = True
                cyc.append(v)
                v = self.successor[v]
            out.append(cyc)
        return out


@dataclass(frozen=True)
class Embedding:
    """``D`` sitting inside a Delta*-regular host.

    Vertices ``0..n-1`` of the host are those of ``D`` and the first ``D.m``
    host arcs are the arcs of ``D`` in their original order.
    """

    host: Digraph
    n_original: int
    m_original: int
    strategy: str

    @property
    def original(self) -> tuple[bool, ...]:
        return tuple(i < self.m_original for i in range(self.host.m))

    @property
    def vertex_map(self) -> tuple[int, ...]:
        return tuple(range(self.n_original))


def _flow_completion(D: Digraph, k: int, fresh: int) -> Optional[list[tuple[int, int]]]:
    n = D.n + fresh
    prof = degrees(D)
    out_def = [k - d for d in prof.out_deg] + [k] * fresh
    in_def = [k - d for d in prof.in_deg] + [k] * fresh
    total = sum(out_def)
    if total == 0:
        return []
    G = nx.DiGraph()
    for u in range(n):
        if out_def[u]:
            G.add_edge("s", ("o", u), capacity=out_def[u])
        if in_def[u]:
            G.add_edge(("i", u), "t", capacity=in_def[u])
    for u in range(n):
        if not out_def[u]:
            continue
        for v in range(n):
            if v != u and in_def[v] and (u, v) not in D:
                G.add_edge(("o", u), ("i", v), capacity=1)
    if "t" not in G:
        return None
    value, flow = nx.maximum_flow(G, "s", "t")
    if value != total:
        return None
    new = []
    for u in range(n):
        for node, f in flow.get(("o", u), {}).items():
            if f:
                new.append((u, node[1]))
    return sorted(new)


def _doubling_completion(D: Digraph, k: int) -> Digraph:
    H = D
    while True:
        prof = degrees(H)
        if all(d == k for d in prof.out_deg) and all(d == k for d in prof.in_deg):
            return H
        n = H.n
        arcs = list(H.arcs) + [(v + n, u + n) for u, v in H.arcs]
        for u in range(n):
            if prof.out_deg[u] < k:
                arcs.append((u, u + n))
            if prof.in_deg[u] < k:
                arcs.append((u + n, u))
        H = Digraph(2 * n, tuple(arcs))


def regularize(D: Digraph) -> Embedding:
    """Embed ``D`` in a Delta*(D)-regular digraph.

    First tries a deficiency flow that adds arcs between existing vertices,
    then with 1..Delta*+1 fresh vertices; if all are blocked, falls back to
    repeatedly gluing on a reversed copy.
    """
    k = degrees(D).delta_star
    if k < 1:
        raise NotApplicable("regular completion needs at least one arc")
    for fresh in range(k + 2):
        new = _flow_completion(D, k, fresh)
        if new is not None:
            host = Digraph(D.n + fresh, D.arcs + tuple(new))
            return Embedding(host, D.n, D.m, "flow")
    return Embedding(_doubling_completion(D, k), D.n, D.m, "doubling")


def _perfect_matching(n: int, out: list[list[int]]) -> list[int]:
    """Perfect matching left u -> right match[u] by BFS augmenting paths."""
    match_l = [-1] * n
    match_r = [-1] * n
    for root in range(n):
        parent_r = {}  # right vertex -> left vertex it was reached from
        queue = deque([root])
        end = -1
        visited_l = {root}
        while queue and end < 0:
            x = queue.popleft()
            for y in out[x]:
                if y in parent_r:
                    continue
                parent_r[y] = x
                if match_r[y] < 0:
                    end = y
                    break
                z = match_r[y]
                if z not in visited_l:
                    visited_l.add(z)
                    queue.append(z)
        if end < 0:
            raise TheoremViolation("regular bipartite split has no perfect matching")
        y = end
        while y >= 0:
            x = parent_r[y]
            prev = match_l[x]
            match_l[x] = y
            match_r[y] = x
            y = prev
    return match_l


def one_factorize(H: Digraph, k: int) -> list[OneFactor]:
    """Split a k-regular digraph into k arc-disjoint 1-factors."""
    prof = degrees(H)
    if any(d != k for d in prof.out_deg) or any(d != k for d in prof.in_deg):
        raise NotApplicable(f"digraph is not {k}-regular")
    out = [[H.arcs[i][1] for i in H.out_arcs[u]] for u in range(H.n)]
    factors = []
    for _ in range(k):
        succ = _perfect_matching(H.n, out)
        for u, v in enumerate(succ):
            out[u].remove(v)
        factors.append(OneFactor(tuple(succ)))
    return factors


def colour_one_factor(F: OneFactor, pair: tuple[int, int]) -> dict[tuple[int, int], int]:
    """Two-colour each cycle of a 1-factor with ``pair = (a, b)``.

    Even cycles alternate a, b; odd cycles take b on their first two arcs and
    then alternate a, b. Traversal starts at the cycle's minimum vertex.
    """
    a, b = pair
    if a == b:
        raise ValueError("pair needs two distinct colours")
    out = {}
    for cyc in F.cycles():
        L = len(cyc)
        if L % 2 == 0:
            seq = [a if i % 2 == 0 else b for i in range(L)]
        else:
            seq = [b, b] + [a if i % 2 == 0 else b for i in range(L - 2)]
        for i, u in enumerate(cyc):
            out[(u, cyc[(i + 1) % L])] = seq[i]
    return out


def colour_general(D: Digraph) -> ArcColouring:
    """nd-colouring with at most 2*Delta*(D) colours.

    Factor i of a regular completion gets colours (2i-1, 2i); the result is
    the restriction to the arcs of ``D``.
    """
    if D.m == 0:
        raise NotApplicable("nothing to colour: digraph has no arcs")
    k = degrees(D).delta_star
    emb = regularize(D)
    host_colour: dict[tuple[int, int], int] = {}
    for i, F in enumerate(one_factorize(emb.host, k), start=1):
        host_colour.update(colour_one_factor(F, (2 * i - 1, 2 * i)))
    gamma = ArcColouring(tuple(host_colour[a] for a in D.arcs), 2 * k)
    verdict = is_nd(D, gamma)
    if not verdict:
        raise TheoremViolation(f"general colouring is not nd: {verdict.reason}")
    return gamma
