"""Backtracking kernel for the exact neighbour-distinguishing index.

Compiled with numba when it is importable; set ``NDARC_DISABLE_NUMBA=1`` to
run the same code as plain Python over numpy arrays.
"""
import os

import numpy as np

_disabled = os.environ.get("NDARC_DISABLE_NUMBA", "").strip().lower() not in ("", "0", "false", "no")

try:
    if _disabled:
        raise ImportError
    from numba import njit

    USE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    USE_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]):
            return args[0]
        return lambda f: f


FOUND = 1
EXHAUSTED = 0
BUDGET = -1

MAX_COLOURS = 62


def _search(n, tails, heads, nbr_ptr, nbr_idx, K, budget, out):
    """Look for a proper nd-colouring of the arcs with colours 1..K.

    Arc i runs tails[i] -> heads[i]; neighbours of v are
    nbr_idx[nbr_ptr[v]:nbr_ptr[v+1]]. Colours are introduced in order
    (arc i may use at most one more than the largest colour before it).
    Returns (status, nodes); on FOUND the colouring is written to ``out``.
    """
    m = tails.shape[0]
    colour = np.zeros(m, np.int64)
    prefix_max = np.zeros(m + 1, np.int64)
    out_mask = np.zeros(n, np.int64)
    in_mask = np.zeros(n, np.int64)
    remaining = np.zeros(n, np.int64)
    for i in range(m):
        remaining[tails[i]] += 1
        remaining[heads[i]] += 1
    nodes = 0
    i = 0
    while True:
        if i == m:
            for j in range(m):
                out[j] = colour[j]
            return FOUND, nodes
        if i < 0:
            return EXHAUSTED, nodes
        u = tails[i]
        v = heads[i]
        c = colour[i]
        if c > 0:
            bit = np.int64(1) << (c - 1)
            out_mask[u] &= ~bit
            in_mask[v] &= ~bit
            remaining[u] += 1
            remaining[v] += 1
        limit = prefix_max[i] + 1
        if limit > K:
            limit = K
        c += 1
        placed = False
        while c <= limit:
            bit = np.int64(1) << (c - 1)
            if (out_mask[u] & bit) == 0 and (in_mask[v] & bit) == 0:
                nodes += 1
                if nodes > budget:
                    return BUDGET, nodes
                out_mask[u] |= bit
                in_mask[v] |= bit
                remaining[u] -= 1
                remaining[v] -= 1
                ok = True
                for w in (u, v):
                    if ok and remaining[w] == 0:
                        for p in range(nbr_ptr[w], nbr_ptr[w + 1]):
                            x = nbr_idx[p]
                            if remaining[x] == 0 and out_mask[x] == out_mask[w] and in_mask[x] == in_mask[w]:
                                ok = False
                                break
                if ok:
                    placed = True
                    break
                out_mask[u] &= ~bit
                in_mask[v] &= ~bit
                remaining[u] += 1
                remaining[v] += 1
            c += 1
        if placed:
            colour[i] = c
            prefix_max[i + 1] = c if c > prefix_max[i] else prefix_max[i]
            i += 1
            if i < m:
                colour[i] = 0
        else:
            colour[i] = 0
            i -= 1


nd_search_py = _search
nd_search = njit(cache=True)(_search) if USE_NUMBA else _search
