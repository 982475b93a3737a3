"""Covering groups, coset digraphs and generators of the universal covering group

The covering group of a digraph is the permutation group generated by its
1-factors. Elements are enumerated breadth first from the identity by
right multiplication with the generators, so the layer of an element is
its directed Cayley distance, the length of the shortest factor path it
encodes.
"""

import logging
from dataclasses import dataclass, field
from math import factorial
from typing import FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from .digraph import Digraph, Factorization, from_factors, petersen_factorize
from .errors import CoverGroupError, PermutationError, WorkbenchError
from .perm import (
    Permutation,
    SemiDirectPerm,
    compose,
    compose_all,
    conjugate,
    cycle_perm,
    flatten,
    inverse,
    is_sd_derangement,
    parse_cycles,
    power,
    transposition,
    unflatten,
)

logger = logging.getLogger(__name__)

DEFAULT_MAX_ELEMENTS = 5_000_000


@dataclass
class GroupBfsResult:
    order: int
    diameter: int
    histogram: Tuple[int, ...]
    incomplete: bool = False
    extremal: List[Permutation] = field(default_factory=list)
    elements: Optional[FrozenSet[Tuple[int, ...]]] = None

    @property
    def extremal_count(self):
        return self.histogram[-1]


def _dtype(n):
    return np.uint8 if n <= 256 else np.uint16 if n <= 65536 else np.uint32


def group_bfs(gens: Sequence[Permutation], max_elements=DEFAULT_MAX_ELEMENTS, with_inverses=False,
              keep_extremal=False, keep_elements=False):
    """Enumerate the group generated by gens, layer by layer

    Each layer is extended to x*g = compose(x, g) for every generator g,
    candidates are deduplicated and sorted with numpy, and anything already
    seen is dropped. When the element count would pass max_elements the
    result is truncated and flagged incomplete.

    Args:
        gens: Generators, all of one size
        max_elements: Cap on the number of stored elements
        with_inverses: Also multiply by the inverse generators (undirected distances)
        keep_extremal: Keep the elements of the last layer
        keep_elements: Keep the full element set as image tuples

    Returns:
        GroupBfsResult
    """
    gens = list(gens)
    if not gens:
        raise CoverGroupError("at least one generator is required")
    n = gens[0].n
    if any(g.n != n for g in gens):
        raise PermutationError("generators have different sizes")
    if with_inverses:
        gens = gens + [inverse(g) for g in gens]
    dtype = _dtype(n)
    columns = [np.asarray(g.images, dtype=np.intp) for g in gens]

    identity = np.arange(n, dtype=dtype)
    seen = {identity.tobytes()}
    layer = identity[None, :]
    histogram = [1]
    incomplete = False
    while True:
        candidates = np.unique(np.concatenate([layer[:, c] for c in columns]), axis=0)
        fresh = []
        for row in candidates:
            key = row.tobytes()
            if key not in seen:
                if len(seen) >= max_elements:
                    incomplete = True
                    break
                seen.add(key)
                fresh.append(row)
        if not fresh:
            break
        layer = np.stack(fresh)
        histogram.append(len(fresh))
        logger.debug("layer %d: %d new elements, %d total", len(histogram) - 1, len(fresh), len(seen))
        if incomplete:
            logger.info("element cap %d reached at layer %d", max_elements, len(histogram) - 1)
            break

    result = GroupBfsResult(order=len(seen), diameter=len(histogram) - 1, histogram=tuple(histogram),
                            incomplete=incomplete)
    if keep_extremal:
        result.extremal = [Permutation(tuple(int(x) for x in row)) for row in layer]
    if keep_elements:
        result.elements = frozenset(tuple(np.frombuffer(key, dtype=dtype).tolist()) for key in seen)
    return result


def digraph_factors(G: Digraph) -> Factorization:
    """Port columns when they already form a factorization, otherwise a Petersen factorization"""
    try:
        return Factorization.from_ports(G)
    except WorkbenchError:
        return petersen_factorize(G)


def universal_order(a, b):
    """|S_b wr S_a| = a! * (b!)^a, exact in Python integers"""
    if a < 1 or b < 1:
        raise CoverGroupError(f"a and b must be positive, got a={a} b={b}")
    return factorial(a) * factorial(b) ** a


def covering_group(G: Digraph, max_elements=DEFAULT_MAX_ELEMENTS, semi_direct: Optional[Tuple[int, int]] = None,
                   factors: Optional[Sequence[Permutation]] = None, **options):
    """BFS over the group generated by G's 1-factors

    With semi_direct=(a, b), every factor must be semi-direct and the order
    of a complete result must divide a!(b!)^a. Explicit factors are used as
    given, otherwise they are read off G.
    """
    if factors is None:
        factors = digraph_factors(G).factors
    if semi_direct is not None:
        a, b = semi_direct
        for k, f in enumerate(factors):
            try:
                unflatten(f, a, b)
            except PermutationError as e:
                raise CoverGroupError(f"factor {k} is not semi-direct for a={a} b={b}: {e}")
    result = group_bfs(factors, max_elements=max_elements, **options)
    if semi_direct is not None and not result.incomplete:
        bound = universal_order(*semi_direct)
        if bound % result.order:
            raise CoverGroupError(f"group order {result.order} does not divide {bound}")
    return result


# Generators of the universal covering group

def _sd(outer, b, inner=None):
    return SemiDirectPerm.build(outer, b, inner or {})


def universal_generators(a, b):
    """Two semi-direct permutations generating all of S_b wr S_a

    Inner parts are given per column; unlisted columns are the identity.
    """
    if a < 2 or b < 2:
        raise CoverGroupError(f"a and b must both be at least 2, got a={a} b={b}")
    swap_a = transposition(a, 0, 1)
    cycle_a = Permutation.shift(a, 1)
    swap_b = transposition(b, 0, 1)
    cycle_b = Permutation.shift(b, 1)
    identity_a = Permutation.identity(a)

    if a == 2:
        X = _sd(swap_a, b, {0: cycle_b})
        Y = _sd(identity_a, b, {0: swap_b})
    elif b == 2:
        X = _sd(swap_a, b, {0: swap_b})
        Y = _sd(compose(swap_a, cycle_a) if a % 2 else cycle_a, b)
    elif a == 3 and b == 3:
        X = _sd(swap_a, b, {2: cycle_b})
        Y = _sd(cycle_a, b, {0: parse_cycles("(0,2,1)", 3), 2: parse_cycles("(1,2)", 3)})
    else:
        p = cycle_b if b % 2 else compose(swap_b, cycle_b)
        if a % 2:
            X = _sd(cycle_a, b, {0: swap_b})
            Y = _sd(transposition(a, (a + 1) // 2 % a, (a + 3) // 2 % a), b, {1: p})
        else:
            X = _sd(compose(swap_a, cycle_a), b, {0: swap_b})
            Y = _sd(swap_a, b, {2: p})
    return X, Y


def search_disjoint_generators(a, b, attempts=200, seed=0, max_elements=DEFAULT_MAX_ELEMENTS):
    """Random search for two disjoint semi-direct derangements generating S_b wr S_a

    Returns (attempts used, pair or None). Nothing is asserted about the outcome.
    """
    rng = np.random.default_rng(seed)
    target = universal_order(a, b)

    def draw():
        while True:
            outer = Permutation(tuple(int(x) for x in rng.permutation(a)))
            inner = tuple(Permutation(tuple(int(x) for x in rng.permutation(b))) for _ in range(a))
            candidate = SemiDirectPerm(outer, inner)
            if is_sd_derangement(candidate):
                return candidate

    for attempt in range(1, attempts + 1):
        X, Y = draw(), draw()
        x, y = flatten(X), flatten(Y)
        if any(x(k) == y(k) for k in range(x.n)):
            continue
        result = group_bfs([x, y], max_elements=max_elements)
        if not result.incomplete and result.order == target:
            logger.info("disjoint generators for a=%d b=%d after %d attempts", a, b, attempt)
            return attempt, (X, Y)
    return attempts, None


# Cayley coset digraphs

@dataclass(frozen=True)
class CosetDigraphSpec:
    group: Tuple[Permutation, ...]
    H: Tuple[Permutation, ...]
    S: Tuple[Permutation, ...]


def _coset(g, H):
    return frozenset(compose(g, h).images for h in H)


def check_coset_spec(spec: CosetDigraphSpec):
    """Raise CoverGroupError naming a witness when a defining condition fails"""
    members = {g.images for g in spec.group}
    h_set = {h.images for h in spec.H}
    for s in spec.S:
        if s.images in h_set:
            raise CoverGroupError(f"condition (i) fails: {s} lies in H")
    generated = group_bfs(list(spec.S) + list(spec.H), max_elements=len(members) + 1, keep_elements=True)
    if generated.elements != members:
        raise CoverGroupError(f"condition (i) fails: S and H generate {generated.order} of {len(members)} elements")
    sh = {compose(s, h).images for s in spec.S for h in spec.H}
    for h in spec.H:
        for s in spec.S:
            for h2 in spec.H:
                if compose_all([h, s, h2]).images not in sh:
                    raise CoverGroupError(f"condition (ii) fails: {h} {s} {h2} is not in SH")
    cosets = set()
    for s in spec.S:
        c = _coset(s, spec.H)
        if c in cosets:
            raise CoverGroupError(f"condition (iii) fails: {s} repeats a coset")
        cosets.add(c)


def coset_digraph(spec: CosetDigraphSpec):
    """Digraph on the left cosets gH with edges gH -> gsH, cosets ordered by their least element"""
    check_coset_spec(spec)
    cosets = {}
    for g in spec.group:
        c = _coset(g, spec.H)
        if c not in cosets:
            cosets[c] = min(c)
    order = sorted(cosets, key=lambda c: cosets[c])
    index = {c: k for k, c in enumerate(order)}
    rows = []
    for c in order:
        rep = Permutation(cosets[c])
        rows.append(tuple(index[_coset(compose(rep, s), spec.H)] for s in spec.S))
    return Digraph(tuple(rows))


def is_irreducible(spec: CosetDigraphSpec):
    """True when H acts transitively on the cosets sH, s in S"""
    check_coset_spec(spec)
    targets = {_coset(s, spec.H) for s in spec.S}
    start = _coset(spec.S[0], spec.H)
    orbit = {frozenset(compose(h, Permutation(x)).images for x in start) for h in spec.H}
    return orbit == targets


def cyclic_group(n):
    return tuple(Permutation.shift(n, k) for k in range(n))


# Relations inside the covering group of the Alegre digraph

ALEGRE_SIGMA = "(0,7,4,20,2,24,15,22,19,10,17,14,5,12,9)(1,21,16,11,6)(3,8,13,18,23)"
ALEGRE_RHO_INV_SIGMA = "(0,6)(1,20)(2,23)(3,7)(5,11)(8,12)(10,16)(13,17)(15,21)(18,22)(4,19,9,24,14)"
# as printed: 22 appears twice, 2 and 6 are missing
ALEGRE_THETA_PRINTED = "(7,21,24,8,20,12,1,4,13,0,17,9,18,5,22,11,14,23,10,22,16,19,3,15)"


@dataclass
class RelationCheck:
    name: str
    status: str
    detail: str = ''


def _alegre_pieces():
    n = 25
    C = [cycle_perm(n, [(i + 5 * k) % n for k in range(5)]) for i in range(5)]
    U = [transposition(n, (5 * i + 2) % n, (5 * i - 2) % n) for i in range(5)]
    V = [transposition(n, (5 * i) % n, (5 * i + 6) % n) for i in range(5)]
    a_seq = [(20 * i + off) % n for i in range(5) for off in (0, 7, 4)]
    b_seq = [(5 * i + off) % n for i in range(5) for off in (7, 21, 24, 8, 20)]
    return C, U, V, cycle_perm(n, a_seq), cycle_perm(n, b_seq)


def alegre_cover_relations() -> List[RelationCheck]:
    """Check the relations between the Alegre factors and the 5-cycles C_i = (i, i+5, ..., i+20)"""
    n = 25
    rho = Permutation.shift(n, 1)
    sigma = parse_cycles(ALEGRE_SIGMA, n)
    C, U, V, T, theta = _alegre_pieces()
    pi = parse_cycles("(0,2,4)", 5)
    rho_inv_sigma = compose(inverse(rho), sigma)
    all_c = compose_all(C)

    def status(ok):
        return 'pass' if ok else 'fail'

    checks = [
        RelationCheck('rho-conjugates-cycles',
                      status(all(conjugate(C[i], rho) == C[(i + 1) % 5] for i in range(5)))),
        RelationCheck('sigma-factorization', status(sigma == compose_all([T, power(C[1], 4), C[3]]))),
        RelationCheck('sigma-cubed', status(power(sigma, 3) == compose_all(
            [power(compose_all([C[0], C[2], C[4]]), 4), power(C[1], 2), power(C[3], 3)]))),
        RelationCheck('rho-fifth-power', status(power(rho, 5) == all_c)),
        RelationCheck('rho-inverse-sigma', status(
            rho_inv_sigma == parse_cycles(ALEGRE_RHO_INV_SIGMA, n)
            and rho_inv_sigma == compose_all(U + V + [power(C[4], 3)]))),
        RelationCheck('rho-inverse-sigma-squared', status(power(rho_inv_sigma, 2) == C[4])),
    ]
    try:
        parse_cycles(ALEGRE_THETA_PRINTED, n)
        checks.append(RelationCheck('theta-as-printed', 'fail', 'printed cycle parsed unexpectedly'))
    except PermutationError as e:
        checks.append(RelationCheck('theta-as-printed', 'flagged-typo', str(e)))
    recomputed = conjugate(rho, sigma)
    checks.append(RelationCheck('theta-recomputed', status(recomputed == theta), str(recomputed)))
    checks.append(RelationCheck('theta-fifth-power', status(power(theta, 5) == all_c == power(rho, 5))))
    checks.append(RelationCheck('sigma-conjugates-cycles',
                                status(all(conjugate(C[i], sigma) == C[pi(i)] for i in range(5)))))
    for check in checks:
        logger.debug("relation %s: %s", check.name, check.status)
    return checks


def alegre_cycle_subgroup():
    """The five commuting 5-cycles C_i"""
    return _alegre_pieces()[0]


# Extension of the construction to 49 vertices

EXTENDED_ALEGRE_SIGMA = ("(0,7,14,21,28,35,42)(1,47,27,22,19,48,43,40,20,15,12,41,36,33,13,8,5,34,29,26,6)"
                         "(2,11,16,25,30,39,44,4,9,18,23,32,37,46)(3,45,38,31,24,17,10)")


def extended_alegre():
    """rho, sigma and the digraph of the 49-vertex construction

    sigma is rho followed by the product of the transpositions
    (7i+2, 7i-2), (7i, 7i-6), (7i+4, 7i-4) and C_6^4.
    """
    n, p = 49, 7
    rho = Permutation.shift(n, 1)
    pieces = []
    for offsets in ((2, -2), (0, -6), (4, -4)):
        pieces += [transposition(n, (p * i + offsets[0]) % n, (p * i + offsets[1]) % n) for i in range(p)]
    c6 = cycle_perm(n, [(6 + p * k) % n for k in range(p)])
    pieces.append(power(c6, 4))
    sigma = compose(compose_all(pieces), rho)
    return rho, sigma, from_factors([rho, sigma])


# Generators of S_3 wr S_3

WREATH_PRINTED = ("(0,3,1,4,2,5)", "(0,3,6,1,4,7)(2,5,8)")
WREATH_DISJOINT = ("(0,3)(1,4)(2,5)(6,7,8)", "(0,7,1,6)(2,8)(3,4,5)")


def wreath_generators():
    """A = ((0,1,2); (0,1) at column 2) and B = ((0,1); (0,1,2) at column 1) on Z_3 x Z_3"""
    A = _sd(parse_cycles("(0,1,2)", 3), 3, {2: parse_cycles("(0,1)", 3)})
    B = _sd(parse_cycles("(0,1)", 3), 3, {1: parse_cycles("(0,1,2)", 3)})
    return A, B


def printed_pair(texts, n=9):
    return [parse_cycles(t, n) for t in texts]
