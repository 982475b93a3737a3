"""CLI entry point for dgw"""

import argparse
import sys

from .commands import (
    build_names,
    build_object,
    describe_cdd,
    factorize,
    list_claims,
    load_params,
    print_cover_group,
    print_diameter,
    run_search,
    verify,
)
from .commands.utils import EXIT_USAGE, configure_logging, get_max_elements, get_threads
from .errors import WorkbenchError
from .search import MODES

EPILOG = """Examples:
  dgw build alegre
  dgw build kautz --d 2 --D 3
  dgw build hs --p 5
  dgw diameter alegre.dg
  dgw factorize alegre.dg
  dgw cover-group alegre.fac
  dgw cdd --a 5 --b 5 --pi "(0,2,4)" --t 1,4,4,1,4
  dgw search --n 6 --diameter 2 --mode exhaustive
  dgw verify --only alegre-cover
"""


def build_parser():
    parser = argparse.ArgumentParser(prog='dgw', description='Digraph degree-diameter workbench',
                                     epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument('--format', choices=('text', 'records', 'dot'), default='text', dest='fmt',
                        help='output format (default text)')
    parser.add_argument('--threads', type=int, default=None, help='search workers (default $DGW_THREADS or 1)')
    parser.add_argument('--max-elems', type=int, default=None,
                        help='group enumeration cap (default $DGW_MAX_ELEMS or 5000000)')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='-v for info, -vv for debug logging')
    sub = parser.add_subparsers(dest='command', metavar='<command>')

    p = sub.add_parser('build', help='write a named digraph to files')
    p.add_argument('name', choices=build_names())
    p.add_argument('--d', type=int, default=2, help='Kautz degree')
    p.add_argument('--D', type=int, default=2, help='Kautz diameter')
    p.add_argument('--p', type=int, default=5, help='prime for hs')
    p.add_argument('--a', type=int, help='CDD segment length')
    p.add_argument('--b', type=int, help='CDD segment count')
    p.add_argument('--pi', help='CDD pi in cycle notation')
    p.add_argument('--t', help='CDD offsets, comma separated')
    p.add_argument('--out', help='output directory (default $DGW_OUTPUT_DIR or cwd)')

    p = sub.add_parser('diameter', help='diameter of a digraph or factor file')
    p.add_argument('file')
    p.add_argument('--cutoff', type=int, help='stop once the diameter is known to exceed this')

    p = sub.add_parser('factorize', help='split a digraph into 1-factors')
    p.add_argument('file')
    p.add_argument('--all', action='store_true', dest='enumerate_all', help='every factorization (degree 2)')

    p = sub.add_parser('cover-group', help='enumerate the covering group')
    p.add_argument('file')
    p.add_argument('--keep-extremal', action='store_true', help='print the elements at maximum distance')
    p.add_argument('--inverses', action='store_true', help='also multiply by inverse generators')
    p.add_argument('--semi-direct', type=int, nargs=2, metavar=('A', 'B'),
                   help='check that both factors are semi-direct on Z_A x Z_B')

    p = sub.add_parser('cdd', help='inspect a cyclic difference digraph')
    p.add_argument('file', nargs='?')
    p.add_argument('--a', type=int)
    p.add_argument('--b', type=int)
    p.add_argument('--pi')
    p.add_argument('--t')
    p.add_argument('--shift', type=int, default=0, help='apply the k -> k+1 relabeling this many times')

    p = sub.add_parser('search', help='search for degree 2 digraphs of a given diameter')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--degree', type=int, default=2)
    p.add_argument('--diameter', type=int, required=True)
    p.add_argument('--mode', choices=MODES, default='pruned')
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--max-nodes', type=int)
    p.add_argument('--out', help='directory for factor files (default $DGW_OUTPUT_DIR or cwd)')
    p.add_argument('--no-write', action='store_true', help='do not write factor files')

    p = sub.add_parser('verify', help='check the claim catalog')
    p.add_argument('--only', nargs='+', metavar='GROUP', help='claim groups or ids to run')
    p.add_argument('--list', action='store_true', help='list claims and exit')
    p.add_argument('--skip-slow', action='store_true', help='skip long-running claims')
    return parser


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    if args.command is None:
        parser.print_help()
        return EXIT_USAGE
    threads = args.threads if args.threads is not None else get_threads()
    max_elements = args.max_elems if args.max_elems is not None else get_max_elements()

    try:
        if args.command == 'build':
            return build_object(args.name, args, args.fmt)
        elif args.command == 'diameter':
            return print_diameter(args.file, args.fmt, args.cutoff)
        elif args.command == 'factorize':
            return factorize(args.file, args.fmt, args.enumerate_all)
        elif args.command == 'cover-group':
            return print_cover_group(args.file, max_elements, args.fmt, args.keep_extremal, args.inverses,
                                     tuple(args.semi_direct) if args.semi_direct else None)
        elif args.command == 'cdd':
            params = load_params(args.file, args.a, args.b, args.pi, args.t)
            return describe_cdd(params, args.fmt, args.shift)
        elif args.command == 'search':
            return run_search(args.n, args.diameter, args.degree, args.mode, args.seed, threads, args.max_nodes,
                              args.out, args.fmt, not args.no_write)
        elif args.command == 'verify':
            if args.list:
                return list_claims()
            return verify(args.only, args.skip_slow, max_elements, threads, args.fmt)
    except WorkbenchError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


def main(argv=None):
    """Main entry point for the CLI"""
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
