import itertools

import pytest
from hypothesis import strategies as st

from ndarc.colouring import ArcColouring, is_nd
from ndarc.digraph import Digraph

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def pendant_pair():
    # a=0, b=1, c=2, d=3 with arcs ab, bc, cb, dc
    return Digraph(4, ((0, 1), (1, 2), (2, 1), (3, 2)))


def brute_force_ndi(D: Digraph, max_k: int = 8) -> int:
    """Smallest K for which some K-colouring of the arcs is nd, by full enumeration."""
    for K in range(1, max_k + 1):
        for cols in itertools.product(range(1, K + 1), repeat=D.m):
            if is_nd(D, ArcColouring(cols, K)):
                return K
    raise AssertionError("no nd-colouring within max_k colours")


@st.composite
def digraphs(draw, max_n=8, min_arcs=0):
    n = draw(st.integers(min_value=2, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=min_arcs, max_size=len(pairs)))
    return Digraph(n, tuple(chosen))
