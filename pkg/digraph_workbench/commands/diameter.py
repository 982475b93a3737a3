"""Diameter of a digraph file"""

from ..digraph import diameter, reciprocal_edge_count
from ..formats import read_digraph
from .utils import EXIT_OK, emit


def print_diameter(path, fmt='text', cutoff=None):
    """Print size, degree, diameter and reciprocal edge count of a digraph file"""
    G, _ = read_digraph(path)
    value = diameter(G, cutoff=cutoff)
    pairs = [('vertices', G.n), ('degree', G.d)]
    if cutoff is not None and value > cutoff:
        pairs.append(('diameter', f"> {cutoff}"))
    else:
        pairs.append(('diameter', value))
    pairs.append(('reciprocal_edges', reciprocal_edge_count(G)))
    emit(pairs, fmt)
    return EXIT_OK
