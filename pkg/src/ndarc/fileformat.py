"""Plain-text arc-list format.

::

    # comment
    n 4
    0 1
    1 2

A third integer on an arc line is that arc's colour (used by ``verify``).
"""
from __future__ import annotations

from typing import Optional

from .colouring import ArcColouring
from .digraph import Digraph, DigraphError


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _tokens(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield lineno, body.split()


def parse_coloured(text: str) -> tuple[Digraph, Optional[ArcColouring]]:
    """Parse a digraph and, if every arc line carries one, its colouring."""
    n = None
    arcs = []
    seen = set()
    colours = []
    lines = []
    for lineno, tok in _tokens(text):
        if n is None:
            if len(tok) != 2 or tok[0] != "n":
                raise ParseError(lineno, "expected header 'n <count>'")
            try:
                n = int(tok[1])
            except ValueError:
                raise ParseError(lineno, f"vertex count {tok[1]!r} is not an integer") from None
            if n < 0:
                raise ParseError(lineno, "vertex count must be non-negative")
            continue
        if len(tok) not in (2, 3):
            raise ParseError(lineno, f"expected 'tail head [colour]', got {' '.join(tok)!r}")
        try:
            vals = [int(t) for t in tok]
        except ValueError:
            raise ParseError(lineno, f"non-integer token in {' '.join(tok)!r}") from None
        u, v = vals[:2]
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(lineno, f"vertex out of range [0, {n})")
        if u == v:
            raise ParseError(lineno, f"loop at vertex {u}")
        if (u, v) in seen:
            raise ParseError(lineno, f"duplicate arc {u} {v}")
        arcs.append((u, v))
        seen.add((u, v))
        colours.append(vals[2] if len(vals) == 3 else None)
        lines.append(lineno)
    if n is None:
        raise ParseError(0, "missing header 'n <count>'")
    try:
        D = Digraph(n, tuple(arcs))
    except DigraphError as exc:
        raise ParseError(0, str(exc)) from None
    given = [c for c in colours if c is not None]
    if not given:
        return D, None
    if len(given) != len(colours):
        first = lines[colours.index(None)]
        raise ParseError(first, "some arcs carry a colour and others do not")
    bad = [lines[i] for i, c in enumerate(colours) if c < 1]
    if bad:
        raise ParseError(bad[0], "colours must be positive integers")
    return D, ArcColouring.of(colours)


def parse_digraph(text: str) -> Digraph:
    D, gamma = parse_coloured(text)
    if gamma is not None:
        raise ParseError(0, "arc lines carry colours; expected a plain digraph")
    return D


def emit_digraph(D: Digraph, gamma: Optional[ArcColouring] = None) -> str:
    lines = [f"n {D.n}"]
    for i, (u, v) in enumerate(D.arcs):
        lines.append(f"{u} {v}" if gamma is None else f"{u} {v} {gamma[i]}")
    return "\n".join(lines) + "\n"
