"""Exact neighbour-distinguishing index, digraph enumeration and the
conjecture scanner."""
from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

import numpy as np

from . import _kernels
from .colouring import ArcColouring, is_nd, lower_bound
from .digraph import Digraph, degrees, underlying_graph

DEFAULT_NODE_BUDGET = 10**7
DEFAULT_MAX_ORDER = 4


class BudgetExceeded(RuntimeError):
    """The search ran out of nodes; ndi lies in ``[low, high]``."""

    def __init__(self, low: int, high: int, nodes: int):
        super().__init__(f"node budget exceeded: ndi in [{low}, {high}] after {nodes} nodes")
        self.low = low
        self.high = high
        self.nodes = nodes


@dataclass(frozen=True)
class ExactResult:
    ndi: int
    witness: ArcColouring
    nodes_explored: int


def search_order(D: Digraph) -> list[int]:
    """Arcs by descending tail degree + head degree, ties by index."""
    deg = [D.out_degree(v) + D.in_degree(v) for v in range(D.n)]
    return sorted(range(D.m), key=lambda i: (-(deg[D.arcs[i][0]] + deg[D.arcs[i][1]]), i))


def _kernel_inputs(D: Digraph, order: list[int]):
    tails = np.array([D.arcs[i][0] for i in order], dtype=np.int64)
    heads = np.array([D.arcs[i][1] for i in order], dtype=np.int64)
    G = underlying_graph(D)
    ptr = np.zeros(D.n + 1, dtype=np.int64)
    idx = []
    for v in range(D.n):
        nb = sorted(G.adj[v])
        idx.extend(nb)
        ptr[v + 1] = ptr[v] + len(nb)
    return tails, heads, ptr, np.array(idx, dtype=np.int64)


def exact_ndi(D: Digraph, cap: Optional[int] = None, node_budget: int = DEFAULT_NODE_BUDGET,
              kernel=None) -> ExactResult:
    """Smallest K admitting an nd-colouring, tried upward from the lower bound.

    ``cap`` limits K (default 2*Delta*, which always suffices). Raises
    :class:`BudgetExceeded` if one (D, K) search uses more than
    ``node_budget`` nodes.
    """
    if D.m == 0:
        raise ValueError("exact search needs at least one arc")
    ds = degrees(D).delta_star
    lo = lower_bound(D)
    hi = 2 * ds if cap is None else min(cap, 2 * ds)
    if hi < lo:
        raise ValueError(f"cap {cap} is below the lower bound {lo}")
    if hi > _kernels.MAX_COLOURS:
        raise ValueError(f"at most {_kernels.MAX_COLOURS} colours supported")
    run = kernel or _kernels.nd_search
    order = search_order(D)
    tails, heads, ptr, idx = _kernel_inputs(D, order)
    out = np.zeros(D.m, dtype=np.int64)
    total = 0
    for K in range(lo, hi + 1):
        status, nodes = run(D.n, tails, heads, ptr, idx, K, node_budget, out)
        total += int(nodes)
        if status == _kernels.BUDGET:
            raise BudgetExceeded(K, 2 * ds, total)
        if status == _kernels.FOUND:
            colours = [0] * D.m
            for pos, i in enumerate(order):
                colours[i] = int(out[pos])
            witness = ArcColouring(tuple(colours), K)
            if not is_nd(D, witness) or witness.used != K:
                raise AssertionError("search kernel returned an invalid witness")
            return ExactResult(K, witness, total)
    raise ValueError(f"no nd-colouring with at most {hi} colours")


def enumerate_digraphs(n: int, limit: int = DEFAULT_MAX_ORDER, degree_classes: bool = False) -> Iterator[Digraph]:
    """All labelled loop-free digraphs on ``n`` vertices, by arc-subset bitmask.

    With ``degree_classes`` only the first digraph of each sorted
    (outdegree, indegree) sequence is yielded.
    """
    if n > limit:
        raise ValueError(f"order {n} exceeds enumeration limit {limit}")
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    seen = set()
    for mask in range(1 << len(pairs)):
        D = Digraph(n, tuple(p for b, p in enumerate(pairs) if (mask >> b) & 1))
        if degree_classes:
            prof = degrees(D)
            key = tuple(sorted(zip(prof.out_deg, prof.in_deg)))
            if key in seen:
                continue
            seen.add(key)
        yield D


@dataclass
class InstanceOutcome:
    index: int
    n: int
    arcs: tuple
    delta_star: int
    ndi: Optional[int] = None
    bracket: Optional[tuple[int, int]] = None


@dataclass
class ScanReport:
    instances: int = 0
    skipped_empty: int = 0
    solved: int = 0
    budget_exhausted: list = field(default_factory=list)
    gap_histogram: Counter = field(default_factory=Counter)
    counterexamples: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "instances": self.instances,
            "skipped_empty": self.skipped_empty,
            "solved": self.solved,
            "budget_exhausted": [o.__dict__ for o in self.budget_exhausted],
            "ndi_minus_delta_star": {str(k): v for k, v in sorted(self.gap_histogram.items())},
            "counterexamples": [o.__dict__ for o in self.counterexamples],
        }


def _solve_one(args) -> InstanceOutcome:
    index, D, node_budget = args
    ds = degrees(D).delta_star
    outcome = InstanceOutcome(index, D.n, D.arcs, ds)
    try:
        outcome.ndi = exact_ndi(D, node_budget=node_budget).ndi
    except BudgetExceeded as exc:
        outcome.bracket = (exc.low, exc.high)
    return outcome


def scan_conjecture(source: Iterable[Digraph], node_budget: int = DEFAULT_NODE_BUDGET, jobs: int = 1) -> ScanReport:
    """Check ndi(D) <= Delta*(D)+1 on every digraph with at least one arc.

    Instances are independent; with ``jobs > 1`` they run in worker
    processes and results are folded back in input order.
    """
    report = ScanReport()
    work = []
    for index, D in enumerate(source):
        report.instances += 1
        if D.m == 0:
            report.skipped_empty += 1
            continue
        work.append((index, D, node_budget))
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            outcomes = list(pool.map(_solve_one, work, chunksize=16))
    else:
        outcomes = map(_solve_one, work)
    for o in outcomes:
        if o.ndi is None:
            report.budget_exhausted.append(o)
            continue
        report.solved += 1
        report.gap_histogram[o.ndi - o.delta_star] += 1
        if o.ndi > o.delta_star + 1:
            report.counterexamples.append(o)
    return report


def all_small_digraphs(max_n: int) -> Iterator[Digraph]:
    return itertools.chain.from_iterable(enumerate_digraphs(n, limit=max(max_n, DEFAULT_MAX_ORDER))
                                         for n in range(1, max_n + 1))
