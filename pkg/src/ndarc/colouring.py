"""Arc colourings, palettes and the neighbour-distinction verifier.

Every construction in the package is checked against :func:`is_nd`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .digraph import Digraph, degrees

Palette = tuple[frozenset, frozenset]


class ColouringError(ValueError):
    pass


@dataclass(frozen=True)
class ArcColouring:
    """Colour ``colours[i]`` (1-based) for arc ``i`` of a digraph.

    ``k`` is the declared colour budget; every colour lies in ``1..k``.
    """

    colours: tuple[int, ...]
    k: int

    def __post_init__(self):
        cols = tuple(int(c) for c in self.colours)
        object.__setattr__(self, "colours", cols)
        for i, c in enumerate(cols):
            if not 1 <= c <= self.k:
                raise ColouringError(f"arc {i} has colour {c} outside 1..{self.k}")

    @classmethod
    def of(cls, colours: Sequence[int]) -> "ArcColouring":
        return cls(tuple(colours), max(colours, default=0))

    @classmethod
    def from_mapping(cls, D: Digraph, mapping: Mapping[tuple[int, int], int]) -> "ArcColouring":
        missing = [a for a in D.arcs if a not in mapping]
        if missing:
            raise ColouringError(f"no colour for arcs {missing[:5]}")
        return cls.of([mapping[a] for a in D.arcs])

    @property
    def used(self) -> int:
        """Number of distinct colours on the arcs."""
        return len(set(self.colours))

    def __len__(self):
        return len(self.colours)

    def __getitem__(self, i):
        return self.colours[i]

    def compact(self) -> "ArcColouring":
        """Relabel colours onto ``1..used`` keeping their relative order."""
        rank = {c: i + 1 for i, c in enumerate(sorted(set(self.colours)))}
        return ArcColouring(tuple(rank[c] for c in self.colours), len(rank))


def _check_total(D: Digraph, gamma: ArcColouring):
    if len(gamma.colours) != D.m:
        raise ColouringError(f"colouring covers {len(gamma.colours)} arcs, digraph has {D.m}")


def palettes(D: Digraph, gamma: ArcColouring) -> list[Palette]:
    """``(S+(u), S-(u))`` for every vertex ``u``."""
    _check_total(D, gamma)
    c = gamma.colours
    return [
        (frozenset(c[i] for i in D.out_arcs[u]), frozenset(c[i] for i in D.in_arcs[u]))
        for u in range(D.n)
    ]


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.ok


def is_proper(D: Digraph, gamma: ArcColouring) -> Verdict:
    """Arcs sharing a tail, or sharing a head, must get distinct colours.

    On failure the witness is the offending pair of arc indices.
    """
    _check_total(D, gamma)
    c = gamma.colours
    for side, lists in (("tail", D.out_arcs), ("head", D.in_arcs)):
        for u, idx in enumerate(lists):
            seen: dict[int, int] = {}
            for i in idx:
                if c[i] in seen:
                    return Verdict(False, f"arcs {D.arcs[seen[c[i]]]} and {D.arcs[i]} share {side} {u} and colour {c[i]}",
                                   (seen[c[i]], i))
                seen[c[i]] = i
    return Verdict(True)


def conflicts(D: Digraph, gamma: ArcColouring) -> list[int]:
    """Indices of arcs ``uv`` whose endpoints have equal palettes."""
    pal = palettes(D, gamma)
    return [i for i, (u, v) in enumerate(D.arcs) if pal[u] == pal[v]]


def is_nd(D: Digraph, gamma: ArcColouring) -> Verdict:
    proper = is_proper(D, gamma)
    if not proper:
        return proper
    bad = conflicts(D, gamma)
    if bad:
        u, v = D.arcs[bad[0]]
        return Verdict(False, f"vertices {u} and {v} have the same palette", (bad[0],))
    return Verdict(True)


def lower_bound(D: Digraph) -> int:
    """Delta*, plus one when some arc joins two saturated vertices.

    A vertex is saturated when both its in- and outdegree equal Delta*.
    """
    if D.m == 0:
        return 0
    prof = degrees(D)
    ds = prof.delta_star
    sat = [prof.out_deg[u] == ds and prof.in_deg[u] == ds for u in range(D.n)]
    if any(sat[u] and sat[v] for u, v in D.arcs):
        return ds + 1
    return ds
