"""Neighbour-distinguishing arc colourings of digraphs."""
from .colouring import ArcColouring, conflicts, is_nd, is_proper, lower_bound, palettes
from .constructions import colour_knstar, colour_tree, knstar, round_robin
from .digraph import Digraph, build_digraph, classify, degrees, underlying_graph
from .dispatch import dispatch
from .exact import enumerate_digraphs, exact_ndi, scan_conjecture
from .factorization import colour_general, one_factorize, regularize
from .layered import colour_bipartite, colour_layered
from .proper import colour_oriented, proper_arc_colour, vizing_edge_colour

__all__ = [
    "ArcColouring", "Digraph", "build_digraph", "classify", "colour_bipartite", "colour_general",
    "colour_knstar", "colour_layered", "colour_oriented", "colour_tree", "conflicts", "degrees",
    "dispatch", "enumerate_digraphs", "exact_ndi", "is_nd", "is_proper", "knstar", "lower_bound",
    "one_factorize", "palettes", "proper_arc_colour", "regularize", "round_robin", "scan_conjecture",
    "underlying_graph", "vizing_edge_colour",
]
