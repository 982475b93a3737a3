"""Split a digraph file into 1-factors"""

from ..digraph import degree2_factorizations, petersen_factorize
from ..errors import WorkbenchError
from ..formats import format_factors, read_digraph, to_dot
from .utils import EXIT_OK


def factorize(path, fmt='text', enumerate_all=False):
    """Print a factorization in factor-file format

    With enumerate_all (degree 2 only) every factorization is printed,
    separated by blank lines.
    """
    G, _ = read_digraph(path)
    if enumerate_all:
        if G.d != 2:
            raise WorkbenchError("--all is only available for degree 2 digraphs")
        options = degree2_factorizations(G)
    else:
        options = [petersen_factorize(G)]
    if fmt == 'dot':
        print(to_dot(G, options[0]), end='')
        return EXIT_OK
    print('\n'.join(format_factors(F) for F in options), end='')
    return EXIT_OK
