"""Search for degree 2 digraphs with a target diameter"""

import logging

from ..digraph import Factorization
from ..errors import WorkbenchError
from ..formats import write_factors
from ..perm import Permutation
from ..search import SearchSpec, class_summary, enumerate_digraphs, kautz_size, moore_bound
from .utils import EXIT_CAPPED, EXIT_OK, resolve_output_dir

logger = logging.getLogger(__name__)


def run_search(n, diameter, degree=2, mode='pruned', seed=0, threads=1, max_nodes=None, out=None,
               fmt='text', write=True):
    """Search degree 2 companions of the n-cycle and write one factor file per class"""
    if degree != 2:
        raise WorkbenchError(f"only degree 2 searches are supported, got {degree}")
    spec = SearchSpec(n, diameter, mode=mode, seed=seed, threads=threads, max_nodes=max_nodes)
    result = enumerate_digraphs(spec)

    if fmt == 'records':
        print(f"moore_bound\t{moore_bound(2, diameter)}")
        print(f"kautz_size\t{kautz_size(2, diameter)}")
    else:
        print(f"n={n} diameter<={diameter} mode={mode}: {len(result.representatives)} classes "
              f"(Moore bound {moore_bound(2, diameter)}, Kautz {kautz_size(2, diameter)})")
        print(f"{'class':>5} {'|Aut|':>6} {'digons':>7} {'cycle type':<20} companion")

    out_dir = resolve_output_dir(out) if write and result.representatives else None
    for k, Y in enumerate(result.representatives):
        summary = class_summary(n, Y)
        cycle_type = '.'.join(str(x) for x in summary['cycle_type'])
        if fmt == 'records':
            print(f"class\t{k}\t{summary['automorphisms']}\t{summary['reciprocal_edges']}\t{cycle_type}\t"
                  f"{summary['companion']}")
        else:
            print(f"{k:>5} {summary['automorphisms']:>6} {summary['reciprocal_edges']:>7} {cycle_type:<20} "
                  f"{summary['companion']}")
        if out_dir is not None:
            path = out_dir / f"search_n{n}_D{diameter}_{k}.fac"
            write_factors(Factorization((Permutation.shift(n, 1), Y)), path)
            logger.info("wrote %s", path)

    stats = result.stats
    print(f"nodes {stats.nodes} pruned {stats.pruned} elapsed {stats.elapsed:.2f}s")
    if mode == 'random' and not result.representatives:
        print(f"no digraph found; best score {result.best_score}")
    if result.incomplete:
        print("search stopped at the node budget; results are incomplete")
        return EXIT_CAPPED
    return EXIT_OK
