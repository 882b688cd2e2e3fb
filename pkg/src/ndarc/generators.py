"""Seeded digraph families used by the CLI, the scanner and the tests."""
from __future__ import annotations

from typing import Optional

import numpy as np

from .constructions import knstar
from .digraph import Digraph

MODELS = ("cycle", "knstar", "random-bipartite", "random-tree-orientation", "tournament", "gnp")


def _rng(seed) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def directed_cycle(n: int) -> Digraph:
    if n < 2:
        raise ValueError("a directed cycle needs n >= 2")
    return Digraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def directed_path(n: int) -> Digraph:
    return Digraph(n, tuple((i, i + 1) for i in range(n - 1)))


def _capped(n, pairs, cap):
    out = [0] * n
    inn = [0] * n
    arcs = []
    for u, v in pairs:
        if cap is not None and (out[u] >= cap or inn[v] >= cap):
            continue
        out[u] += 1
        inn[v] += 1
        arcs.append((u, v))
    return arcs


def gnp(n: int, p: float, seed=None, max_delta: Optional[int] = None) -> Digraph:
    """Each ordered pair is an arc with probability ``p``; optionally capped at Delta* <= max_delta."""
    rng = _rng(seed)
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    keep = rng.random(len(pairs)) < p
    chosen = [pairs[i] for i in rng.permutation(len(pairs)) if keep[i]]
    return Digraph(n, tuple(_capped(n, chosen, max_delta)))


def random_bipartite(n_left: int, n_right: int, p: float, seed=None, max_delta: Optional[int] = None) -> Digraph:
    """Arcs between parts ``0..n_left-1`` and the rest, in both directions."""
    rng = _rng(seed)
    n = n_left + n_right
    pairs = [(u, v) for u in range(n_left) for v in range(n_left, n)]
    pairs += [(v, u) for u, v in pairs]
    keep = rng.random(len(pairs)) < p
    chosen = [pairs[i] for i in rng.permutation(len(pairs)) if keep[i]]
    return Digraph(n, tuple(_capped(n, chosen, max_delta)))


def random_tree_orientation(n: int, p_both: float = 0.3, seed=None) -> Digraph:
    """Random labelled tree; each edge becomes two opposite arcs with probability ``p_both``,
    otherwise one arc in a random direction."""
    if n < 2:
        raise ValueError("a tree orientation needs n >= 2")
    rng = _rng(seed)
    label = rng.permutation(n)
    arcs = []
    for i in range(1, n):
        u, v = int(label[rng.integers(i)]), int(label[i])
        r = rng.random()
        if r < p_both:
            arcs += [(u, v), (v, u)]
        elif rng.random() < 0.5:
            arcs.append((u, v))
        else:
            arcs.append((v, u))
    return Digraph(n, tuple(arcs))


def tournament(n: int, seed=None) -> Digraph:
    rng = _rng(seed)
    flips = rng.random(n * (n - 1) // 2) < 0.5
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Digraph(n, tuple((v, u) if f else (u, v) for (u, v), f in zip(pairs, flips)))


def random_oriented(n: int, p: float, seed=None) -> Digraph:
    """Each unordered pair is present with probability ``p``, with a random direction."""
    rng = _rng(seed)
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return Digraph(n, tuple(arcs))


def random_cycle_union(n: int, seed=None) -> Digraph:
    """Uniformly random fixed-point-free permutation, as a spanning union of directed cycles."""
    if n < 2:
        raise ValueError("needs n >= 2")
    rng = _rng(seed)
    while True:
        perm = rng.permutation(n)
        if not np.any(perm == np.arange(n)):
            return Digraph(n, tuple((u, int(perm[u])) for u in range(n)))


def generate(model: str, n: int, p: float = 0.3, seed=None) -> Digraph:
    """Build a digraph from one of :data:`MODELS`; deterministic in ``seed``."""
    if n < 1:
        raise ValueError("n must be positive")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    if model == "cycle":
        return directed_cycle(n)
    if model == "knstar":
        return knstar(n)
    if model == "random-bipartite":
        return random_bipartite(n // 2, n - n // 2, p, seed)
    if model == "random-tree-orientation":
        return random_tree_orientation(n, p, seed)
    if model == "tournament":
        return tournament(n, seed)
    if model == "gnp":
        return gnp(n, p, seed)
    raise ValueError(f"unknown model {model!r}; choose from {', '.join(MODELS)}")
