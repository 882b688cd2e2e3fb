"""Time the exact-search kernel compiled with numba against the same code run
as plain Python.

    python benchmarks/bench_exact.py [--count 10] [--n 8] [--p 0.7] [--seed 0] [--node-budget 300000]

Instances whose search needs more than the node budget are skipped.
"""
import argparse
import time

import numpy as np

from ndarc import _kernels
from ndarc.digraph import degrees
from ndarc.exact import BudgetExceeded, exact_ndi
from ndarc.generators import gnp


def timed(D, kernel, budget):
    t0 = time.perf_counter()
    res = exact_ndi(D, kernel=kernel, node_budget=budget)
    return res, time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=10)
    ap.add_argument("--n", type=int, default=8)
    ap.add_argument("--p", type=float, default=0.7)
    ap.add_argument("--node-budget", type=int, default=300_000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    if not _kernels.USE_NUMBA:
        raise SystemExit("numba unavailable or disabled; nothing to compare")
    rng = np.random.default_rng(args.seed)
    graphs = [gnp(args.n, args.p, rng) for _ in range(args.count)]
    graphs = [D for D in graphs if D.m]

    # compile outside the timed region
    exact_ndi(graphs[0], kernel=_kernels.nd_search)

    print(f"{'arcs':>5} {'D*':>3} {'ndi':>4} {'nodes':>10} {'numba s':>10} {'python s':>10} {'speedup':>8}")
    tot_fast = tot_slow = 0.0
    for D in graphs:
        try:
            fast, t_fast = timed(D, _kernels.nd_search, args.node_budget)
        except BudgetExceeded:
            print(f"{D.m:>5}  skipped: over node budget")
            continue
        slow, t_slow = timed(D, _kernels.nd_search_py, args.node_budget)
        assert (fast.ndi, fast.nodes_explored) == (slow.ndi, slow.nodes_explored)
        tot_fast += t_fast
        tot_slow += t_slow
        print(f"{D.m:>5} {degrees(D).delta_star:>3} {fast.ndi:>4} {fast.nodes_explored:>10} "
              f"{t_fast:>10.4f} {t_slow:>10.4f} {t_slow / max(t_fast, 1e-9):>8.1f}")
    print(f"total: numba {tot_fast:.3f}s, python {tot_slow:.3f}s, speedup {tot_slow / max(tot_fast, 1e-9):.1f}x")


if __name__ == "__main__":
    main()
