"""Inspect a cyclic difference digraph"""

from ..cdd import (
    CddParams,
    cdd_build,
    cdd_diameter,
    cdd_to_gcd,
    shift_isomorphism,
    tau_is_automorphism,
    y_cycle_length,
)
from ..errors import WorkbenchError
from ..formats import format_cdd_params, parse_offsets, parse_permutation_line, read_cdd_params
from ..perm import cycle_length_through, print_cycles
from .utils import EXIT_OK, emit


def load_params(path=None, a=None, b=None, pi=None, t=None):
    if path:
        return read_cdd_params(path)
    if a is None or b is None or pi is None or t is None:
        raise WorkbenchError("give a parameter file or all of --a, --b, --pi and --t")
    return CddParams(a, b, parse_permutation_line(pi, a, '--pi'), parse_offsets(t, '--t'))


def describe_cdd(params, fmt='text', shifts=0):
    """Print Y, the diameter, Y's cycle lengths and optionally shifted parameters"""
    built = cdd_build(params)
    pair = cdd_to_gcd(params)
    pairs = [
        ('params', str(params)),
        ('Y', print_cycles(built.Y)),
        ('diameter', cdd_diameter(params)),
        ('tau_automorphism', tau_is_automorphism(params)),
        ('gcd_Z', str(pair.Z)),
        ('gcd_T', str(pair.T)),
    ]
    for j in range(params.a):
        pairs.append((f"cycle_length_{j}", f"{y_cycle_length(params, j)} (direct {cycle_length_through(built.Y, j)})"))
    shifted = params
    for k in range(1, shifts + 1):
        shifted = shift_isomorphism(shifted)
        pairs.append((f"shift_{k}", str(shifted)))
    emit(pairs, fmt)
    if shifts and fmt == 'text':
        print()
        print(format_cdd_params(shifted), end='')
    return EXIT_OK
