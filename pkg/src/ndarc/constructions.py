"""Closed-form nd-colourings for complete symmetric digraphs and trees."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product

from .colouring import ArcColouring, is_nd
from .digraph import Digraph, degrees, is_tree, underlying_graph
from .proper import NotApplicable, TheoremViolation


def knstar(n: int) -> Digraph:
    """Complete symmetric digraph on ``n >= 2`` vertices."""
    if n < 2:
        raise ValueError(f"K_n* needs n >= 2, got {n}")
    return Digraph(n, tuple((u, v) for u in range(n) for v in range(n) if u != v))


@dataclass(frozen=True)
class RoundRobin:
    """Partition of E(K_n), n odd, into matchings; ``matchings[k]`` misses vertex k."""

    n: int
    matchings: tuple[frozenset, ...]

    def colour_of(self, i: int, j: int) -> int:
        """Index k of the matching containing edge {i, j} (0-based)."""
        # 2k = i + j (mod n) and 2 is invertible mod odd n
        return ((i + j) * (self.n + 1) // 2) % self.n

    def check(self):
        n = self.n
        all_edges = {(i, j) for i in range(n) for j in range(i + 1, n)}
        seen = set()
        for k, M in enumerate(self.matchings):
            covered = [v for e in M for v in e]
            if len(covered) != len(set(covered)):
                raise ValueError(f"M_{k} is not a matching")
            if set(covered) != set(range(n)) - {k}:
                raise ValueError(f"M_{k} does not cover exactly V minus v_{k}")
            if seen & M:
                raise ValueError(f"M_{k} overlaps an earlier matching")
            seen |= M
        if seen != all_edges:
            raise ValueError("matchings do not cover every edge")


def round_robin(n: int) -> RoundRobin:
    if n < 3 or n % 2 == 0:
        raise ValueError(f"round robin needs an odd order >= 3, got {n}")
    matchings = [set() for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            matchings[((i + j) * (n + 1) // 2) % n].add((i, j))
    rr = RoundRobin(n, tuple(frozenset(M) for M in matchings))
    rr.check()
    return rr


def _odd_knstar_colours(n: int) -> dict[tuple[int, int], int]:
    rr = round_robin(n)
    return {(i, j): rr.colour_of(i, j) for i in range(n) for j in range(n) if i != j}


def colour_knstar(n: int) -> ArcColouring:
    """nd-colouring of K_n* with exactly n colours, on the arcs of :func:`knstar`."""
    D = knstar(n)
    if n == 2:
        return ArcColouring((1, 2), 2)
    if n % 2 == 1:
        col0 = _odd_knstar_colours(n)
    else:
        m = n - 1
        inner = _odd_knstar_colours(m)
        new = n - 1
        col0 = {}
        for i in range(m):
            for j in range(m):
                if i != j:
                    col0[(i, j)] = inner[(i, j)]
        for i in range(m):
            nxt = (i + 1) % m
            prv = (i - 1) % m
            col0[(i, nxt)] = new
            col0[(nxt, i)] = inner[(nxt, i)]
            col0[(n - 1, i)] = inner[(prv, i)]
            col0[(i, n - 1)] = inner[(nxt, i)]
    gamma = ArcColouring(tuple(col0[a] + 1 for a in D.arcs), n)
    verdict = is_nd(D, gamma)
    if not verdict or gamma.used != n:
        raise TheoremViolation(f"K_{n}* construction failed: {verdict.reason or 'wrong colour count'}")
    return gamma


def _farthest(adj: dict[int, set[int]], start: int) -> int:
    dist = {start: 0}
    queue = deque([start])
    last = start
    while queue:
        u = queue.popleft()
        last = u
        for w in sorted(adj[u]):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return last


def tree_removal_order(D: Digraph) -> list[tuple[int, int]]:
    """Peel leaves that end a longest path until two vertices remain.

    Returns ``(leaf, parent)`` pairs in removal order.
    """
    G = underlying_graph(D)
    adj = {u: set(G.adj[u]) for u in range(D.n)}
    order = []
    while len(adj) > 2:
        a = _farthest(adj, min(adj))
        leaf = _farthest(adj, a)
        (parent,) = adj[leaf]
        order.append((leaf, parent))
        adj[parent].discard(leaf)
        del adj[leaf]
    return order


def colour_tree(D: Digraph) -> ArcColouring:
    """nd-colouring with at most Delta*(D)+1 colours when und(D) is a tree.

    Replays the leaf-by-leaf induction: a leaf whose removal lowers Delta*
    takes a brand-new colour; otherwise its (at most two) arcs get the first
    pair of colours in lexicographic order that keeps its parent distinguished
    from every neighbour.
    """
    if D.m == 0:
        raise NotApplicable("nothing to colour: digraph has no arcs")
    if not is_tree(underlying_graph(D)):
        raise NotApplicable("underlying graph is not a tree")
    removal = tree_removal_order(D)
    removed = {leaf for leaf, _ in removal}
    base = [v for v in range(D.n) if v not in removed]
    colour: dict[int, int] = {}  # arc index -> colour
    for c, i in enumerate(i for i in range(D.m) if D.arcs[i][0] in base and D.arcs[i][1] in base):
        colour[i] = c + 1

    present = set(base)
    out_deg = {v: 0 for v in range(D.n)}
    in_deg = {v: 0 for v in range(D.n)}
    for i in colour:
        out_deg[D.arcs[i][0]] += 1
        in_deg[D.arcs[i][1]] += 1

    def current_delta():
        return max(max(out_deg[v], in_deg[v]) for v in present)

    def palette(v):
        out = frozenset(colour[i] for i in D.out_arcs[v] if i in colour)
        inn = frozenset(colour[i] for i in D.in_arcs[v] if i in colour)
        return out, inn

    for leaf, parent in reversed(removal):
        before = current_delta()
        present.add(leaf)
        arcs = [i for i in D.out_arcs[leaf] + D.in_arcs[leaf] if parent in D.arcs[i]]
        for i in arcs:
            out_deg[D.arcs[i][0]] += 1
            in_deg[D.arcs[i][1]] += 1
        after = current_delta()
        if after > before:
            for i in arcs:
                colour[i] = after + 1
            continue
        budget = after + 1
        busy_out = {colour[i] for i in D.out_arcs[parent] if i in colour}
        busy_in = {colour[i] for i in D.in_arcs[parent] if i in colour}
        nbrs = [w for w in D.neighbours(parent) if w in present and w != leaf]
        for choice in product(range(1, budget + 1), repeat=len(arcs)):
            ok = True
            for i, c in zip(arcs, choice):
                # parent is the tail of an outgoing pendant arc, head of an incoming one
                if (D.arcs[i][0] == parent and c in busy_out) or (D.arcs[i][1] == parent and c in busy_in):
                    ok = False
            if not ok:
                continue
            for i, c in zip(arcs, choice):
                colour[i] = c
            p = palette(parent)
            if p != palette(leaf) and all(p != palette(w) for w in nbrs):
                break
            for i in arcs:
                del colour[i]
        else:
            raise TheoremViolation(f"no admissible colours for pendant arcs at leaf {leaf}")

    gamma = ArcColouring(tuple(colour[i] for i in range(D.m)), degrees(D).delta_star + 1)
    verdict = is_nd(D, gamma)
    if not verdict:
        raise TheoremViolation(f"tree colouring is not nd: {verdict.reason}")
    return gamma
