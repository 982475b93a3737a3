"""Build named digraphs and write them to files"""

import logging
from functools import partial

from .. import covergroup, formats, groupoid
from ..cdd import CddParams, cdd_build
from ..digraph import Factorization, from_factors
from ..errors import WorkbenchError
from ..formats import parse_offsets, parse_permutation_line
from .utils import EXIT_OK, resolve_output_dir

logger = logging.getLogger(__name__)

EXTRA_NAMES = ('cdd', 'prime-seven')


def build_names():
    return sorted(groupoid.builtin_names() + list(EXTRA_NAMES))


def _construct(name, options):
    """Return (digraph, factorization or None, groupoid or None)"""
    if name == 'cdd':
        if options.a is None or options.b is None or options.pi is None or options.t is None:
            raise WorkbenchError("build cdd needs --a, --b, --pi and --t")
        pi = parse_permutation_line(options.pi, options.a, '--pi')
        built = cdd_build(CddParams(options.a, options.b, pi, parse_offsets(options.t, '--t')))
        return built.G, Factorization((built.Z, built.Y)), None
    if name == 'prime-seven':
        rho, sigma, G = covergroup.extended_alegre()
        return G, Factorization((rho, sigma)), None
    params = {}
    if name == 'kautz':
        params = {'d': options.d, 'D': options.D}
    elif name == 'hs':
        params = {'p': options.p}
    obj = groupoid.builtin(name, **params)
    if isinstance(obj, groupoid.GroupoidTable):
        table = obj.partial()
        return groupoid.cayley_digraph(table), None, table
    factors = {
        'alegre': groupoid.alegre_factors,
        'g22': groupoid.g22_printed,
        'exotic6': groupoid.exotic6,
        **{f'twelve-companion-{k}': partial(groupoid.twelve_vertex_factors, k) for k in (1, 2, 3)},
    }.get(name)
    F = Factorization(tuple(factors())) if factors else None
    return obj, F, None


def build_object(name, options, fmt='text'):
    """Write NAME.dg (and NAME.fac / NAME.gpd when known) to the output directory

    Args:
        name: Builtin name, 'cdd' or 'prime-seven'
        options: Parsed arguments carrying d, D, p, a, b, pi, t and out
        fmt: 'dot' also prints Graphviz source

    Returns:
        Exit code
    """
    G, F, table = _construct(name, options)
    if F is not None and from_factors(F.factors).edges() != G.edges():
        raise WorkbenchError(f"factors of '{name}' do not cover its digraph")
    out = resolve_output_dir(options.out)
    written = [out / f"{name}.dg"]
    formats.write_digraph(G, written[0])
    if F is not None:
        written.append(out / f"{name}.fac")
        formats.write_factors(F, written[-1])
    if table is not None:
        written.append(out / f"{name}.gpd")
        written[-1].write_text(formats.format_groupoid(table))
    for path in written:
        logger.info("wrote %s", path)
        print(f"wrote {path}")
    print(f"{name}: {G.n} vertices, degree {G.d}")
    if fmt == 'dot':
        print(formats.to_dot(G, F, name=name.replace('-', '_')), end='')
    return EXIT_OK
