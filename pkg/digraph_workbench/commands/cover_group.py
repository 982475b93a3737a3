"""Covering group of a digraph file"""

from ..covergroup import covering_group
from ..formats import read_digraph
from ..perm import print_cycles
from .utils import EXIT_CAPPED, EXIT_OK, emit


def print_cover_group(path, max_elements, fmt='text', keep_extremal=False, with_inverses=False, semi_direct=None):
    """Enumerate the covering group of the file's factors; exit 3 when capped"""
    G, F = read_digraph(path)
    result = covering_group(G, max_elements=max_elements, semi_direct=semi_direct,
                            factors=F.factors if F is not None else None,
                            keep_extremal=keep_extremal, with_inverses=with_inverses)
    if fmt == 'records':
        emit([('order', result.order), ('diameter', result.diameter), ('extremal', result.extremal_count),
              ('incomplete', int(result.incomplete))], fmt)
        emit([(f"distance_{k}", count) for k, count in enumerate(result.histogram)], fmt)
    else:
        status = " (incomplete)" if result.incomplete else ""
        print(f"order {result.order} diameter {result.diameter} extremal {result.extremal_count}{status}")
        for k, count in enumerate(result.histogram):
            print(f"  {k:3d} {count}")
    if keep_extremal and not result.incomplete:
        for p in result.extremal:
            print(print_cycles(p))
    return EXIT_CAPPED if result.incomplete else EXIT_OK
