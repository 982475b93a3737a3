"""Catalog of checkable claims about the named constructions

Each claim is one row of CATALOG: an id, the group it belongs to, a
description and a check returning (status, details). Statuses are
'pass', 'fail', 'flagged-typo' (a printed value is wrong and the correct
one was recomputed) and 'skipped-scale' (too large to compute here).
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from . import cdd, covergroup, digraph, groupoid, search
from .errors import WorkbenchError
from .perm import (
    Permutation,
    SemiDirectPerm,
    compose,
    cycle_length_through,
    flatten,
    is_derangement,
    is_sd_derangement,
    is_semi_direct,
    parse_cycles,
    sd_compose,
    unflatten,
)

logger = logging.getLogger(__name__)

PASS = 'pass'
FAIL = 'fail'
FLAGGED = 'flagged-typo'
SKIPPED = 'skipped-scale'

ALEGRE_CDD_Y = "(0,7,4,20,2,24,15,22,19,10,17,14,5,12,9)(1,21,16,11,6)(3,8,13,18,23)"
UNIVERSAL_CASES = ((2, 2), (2, 3), (3, 2), (2, 4), (4, 2), (3, 3), (2, 5), (5, 2), (4, 3), (3, 4), (5, 3))
UNIVERSAL_3X3_PRINTED = ("(0,1)(3,4)(6,7)(2,5,8)", "(0,7,8,3,1,2)(4,5,6)")


@dataclass(frozen=True)
class Claim:
    id: str
    group: str
    description: str
    check: Callable[['Context'], Tuple[str, str]]
    slow: bool = False


@dataclass
class ClaimResult:
    id: str
    description: str
    status: str
    details: str = ''


@dataclass
class Context:
    max_elements: int = covergroup.DEFAULT_MAX_ELEMENTS
    threads: int = 1


def _verdict(ok, details=''):
    return (PASS if ok else FAIL), details


# Shared objects

@lru_cache(maxsize=None)
def alegre():
    return digraph.from_factors(groupoid.alegre_factors())


@lru_cache(maxsize=None)
def alegre_params():
    return cdd.CddParams(5, 5, parse_cycles("(0,2,4)", 5), (1, 4, 4, 1, 4))


@lru_cache(maxsize=None)
def kautz6():
    return groupoid.kautz(2, 2)


@lru_cache(maxsize=None)
def six_vertex_classes():
    """Kautz, the digon-free GCD and the order-120 digraph"""
    g22 = digraph.from_factors(groupoid.g22_printed())
    return kautz6(), g22, digraph.from_factors(groupoid.exotic6())


@lru_cache(maxsize=None)
def cover_relations():
    return {r.name: r for r in covergroup.alegre_cover_relations()}


@lru_cache(maxsize=None)
def hoffman_singleton():
    return groupoid.hoffman_singleton(5)[1]


# Checks

def _kautz_groupoid_properties(ctx):
    report = groupoid.check_properties(groupoid.kautz_groupoid())
    return _verdict(report.ok, f"p1={report.p1} p2={report.p2} p3={report.p3}")


def _kautz_groupoid_digraph(ctx):
    G = groupoid.cayley_digraph(groupoid.kautz_groupoid())
    return _verdict(digraph.isomorphic(G, kautz6()) is not None and digraph.diameter(G) == 2,
                    f"diameter {digraph.diameter(G)}")


def _left_identity_properties(ctx):
    report = groupoid.check_properties(groupoid.right_identity_groupoid())
    return _verdict(not report.p1 and report.p2 and report.p3,
                    f"p1={report.p1} p2={report.p2} p3={report.p3} witnesses={report.witnesses}")


def _left_identity_digraph(ctx):
    G = groupoid.cayley_digraph(groupoid.right_identity_groupoid())
    H = groupoid.cayley_digraph(groupoid.kautz_groupoid())
    return _verdict(digraph.isomorphic(G, H) is not None)


def _hs_shape(ctx):
    G = hoffman_singleton()
    facts = {
        'vertices': G.n,
        'degree': G.d,
        'symmetric': digraph.is_symmetric(G),
        'diameter': digraph.diameter(G),
        'girth': digraph.undirected_girth(G),
        'undirected_edges': digraph.undirected_edge_count(G),
    }
    expected = {'vertices': 50, 'degree': 7, 'symmetric': True, 'diameter': 2, 'girth': 5,
                'undirected_edges': 175}
    return _verdict(facts == expected, ' '.join(f"{k}={v}" for k, v in facts.items()))


def _hs_generators(ctx):
    P, _ = groupoid.hoffman_singleton(5)
    report = groupoid.check_properties(P)
    return _verdict(report.p1 and report.p2 and not report.p3, f"p1={report.p1} p2={report.p2} p3={report.p3}")


def _hs_transitive(ctx):
    return _verdict(groupoid.is_vertex_transitive(hoffman_singleton()))


def _hs_certificate(ctx):
    G = hoffman_singleton()
    certificate = groupoid.transitivity_certificate(G)
    if certificate is None:
        return FAIL, "no certificate"
    factorization, root, words = certificate
    return _verdict(groupoid.is_spanning_factorization(G, factorization, words),
                    f"root {root}, longest word {max(len(w) for w in words)}")


def _alegre_diameter(ctx):
    G = alegre()
    return _verdict(G.n == 25 and G.d == 2 and G.strongly_connected and digraph.diameter(G) == 4,
                    f"vertices {G.n} diameter {digraph.diameter(G)}")


def _alegre_cdd_companion(ctx):
    return _verdict(cdd.cdd_build(alegre_params()).Y == parse_cycles(ALEGRE_CDD_Y, 25))


def _alegre_cdd_isomorphic(ctx):
    return _verdict(digraph.isomorphic(cdd.cdd_build(alegre_params()).G, alegre()) is not None)


def _alegre_cdd_cycles(ctx):
    p = alegre_params()
    Y = cdd.cdd_build(p).Y
    lengths = [cdd.y_cycle_length(p, j) for j in (0, 1, 3)]
    direct = [cycle_length_through(Y, j) for j in (0, 1, 3)]
    return _verdict(lengths == direct == [15, 5, 5], f"formula {lengths} direct {direct}")


def _alegre_cdd_gcd(ctx):
    p = alegre_params()
    pair = cdd.cdd_to_gcd(p)
    return _verdict(pair.Y == cdd.cdd_build(p).Y and is_sd_derangement(pair.Z))


def _alegre_cdd_tau(ctx):
    p = alegre_params()
    built = cdd.cdd_build(p)
    tau = cdd.tau(p)
    conditions = cdd.factor_pair_conditions(built.Z, built.Y, tau)
    return _verdict(cdd.tau_is_automorphism(p) and all(c == 'B1' for c in conditions))


def _alegre_cdd_diameter(ctx):
    return _verdict(cdd.cdd_diameter(alegre_params()) == 4)


def _shifted_twice():
    return cdd.shift_isomorphism(cdd.shift_isomorphism(alegre_params()))


def _alegre_shift_pi(ctx):
    p = _shifted_twice()
    return _verdict(p.pi == parse_cycles("(4,1,2)", 5), f"pi={p.pi}")


def _alegre_shift_offsets(ctx):
    p = _shifted_twice()
    same = cdd.cdd_build(p).Y == parse_cycles(groupoid.ALEGRE_T_FACTOR, 25)
    return _verdict(p.t == (1, 3, 1, 4, 0) and same, f"t={','.join(map(str, p.t))}")


def _alegre_shift_printed(ctx):
    printed = (4, 3, 1, 1, 0)
    try:
        Y = cdd.cdd_build(cdd.CddParams(5, 5, parse_cycles("(4,1,2)", 5), printed)).Y
    except WorkbenchError as e:
        return FLAGGED, f"printed offsets are invalid: {e}"
    if Y == parse_cycles(groupoid.ALEGRE_T_FACTOR, 25):
        return PASS, ''
    return FLAGGED, f"printed offsets give Y(0)={Y(0)}; recomputed offsets 1,3,1,4,0 reproduce the t-factor"


def _alegre_cover_group(ctx):
    result = covergroup.group_bfs(groupoid.alegre_factors(), max_elements=ctx.max_elements, keep_elements=True)
    if result.incomplete:
        return SKIPPED, f"element cap {ctx.max_elements} reached"
    cycles = covergroup.alegre_cycle_subgroup()
    ok = (result.order == 187_500 == 60 * 5 ** 5 and result.diameter == 23 and result.extremal_count == 11
          and all(c.images in result.elements for c in cycles))
    return _verdict(ok, f"order {result.order} diameter {result.diameter} extremal {result.extremal_count}")


def _relation(name):
    def check(ctx):
        r = cover_relations()[name]
        return r.status, r.detail
    return check


def _prime_seven_sigma(ctx):
    _, sigma, _ = covergroup.extended_alegre()
    return _verdict(sigma == parse_cycles(covergroup.EXTENDED_ALEGRE_SIGMA, 49))


def _prime_seven_diameter(ctx):
    _, _, G = covergroup.extended_alegre()
    return _verdict(digraph.diameter(G) == 7, f"diameter {digraph.diameter(G)}")


def _prime_seven_line(ctx):
    L = digraph.line_digraph(alegre())
    return _verdict(L.n == 50 and digraph.diameter(L) == 5, f"vertices {L.n} diameter {digraph.diameter(L)}")


def _prime_seven_order(ctx):
    return SKIPPED, "covering group has about 4.15e9 elements"


def _wreath_order(ctx):
    A, B = covergroup.wreath_generators()
    result = covergroup.group_bfs([flatten(A), flatten(B)], max_elements=ctx.max_elements, keep_elements=True)
    inside = all(is_semi_direct(Permutation(e), 3, 3) for e in result.elements)
    return _verdict(result.order == 1296 and result.diameter == 14 and inside,
                    f"order {result.order} diameter {result.diameter}")


def _wreath_printed(ctx):
    printed = covergroup.group_bfs(covergroup.printed_pair(covergroup.WREATH_PRINTED), keep_elements=True)
    disjoint = covergroup.group_bfs(covergroup.printed_pair(covergroup.WREATH_DISJOINT), keep_elements=True)
    return _verdict(printed.order == 1296 and printed.elements == disjoint.elements,
                    f"orders {printed.order} and {disjoint.order}")


def _six_line(ctx):
    return _verdict(digraph.isomorphic(digraph.line_digraph(groupoid.k3()), kautz6()) is not None)


def _six_gcd_kautz(ctx):
    pair = cdd.linedigraph_as_gcd(groupoid.k3())
    _, G = cdd.gcd_build(pair.Z, pair.T)
    cover = covergroup.covering_group(G, semi_direct=(2, 3))
    return _verdict(digraph.isomorphic(G, kautz6()) is not None and 72 % cover.order == 0,
                    f"covering group order {cover.order}")


def _six_g22(ctx):
    Z, T = groupoid.g22_semi_direct()
    _, G = cdd.gcd_build(Z, T)
    printed = digraph.from_factors(groupoid.g22_printed())
    return _verdict(digraph.diameter(G) == 2 and digraph.reciprocal_edge_count(G) == 0
                    and digraph.isomorphic(G, printed) is not None)


def _six_exotic_cover(ctx):
    result = covergroup.group_bfs(groupoid.exotic6(), max_elements=ctx.max_elements)
    return _verdict(result.order == 120 and result.diameter == 10,
                    f"order {result.order} diameter {result.diameter}")


def _six_exotic_unique(ctx):
    G = digraph.from_factors(groupoid.exotic6())
    options = digraph.degree2_factorizations(G)
    listed = '; '.join(sorted('{' + ', '.join(sorted(str(f) for f in F.factors)) + '}' for F in options))
    details = f"{len(options)} factorizations: {listed}"
    if len(options) == 1:
        return PASS, details
    if digraph.factorization_unique_up_to_automorphism(G):
        return FLAGGED, details + "; unique only up to automorphism"
    return FAIL, details


def _six_search(ctx):
    result = search.enumerate_digraphs(search.SearchSpec(6, 2, mode='exhaustive', threads=ctx.threads))
    graphs = [digraph.from_factors([Permutation.shift(6, 1), Y]) for Y in result.representatives]
    matched = all(any(digraph.isomorphic(G, H) is not None for H in six_vertex_classes()) for G in graphs)
    digons = sorted(digraph.reciprocal_edge_count(G) > 0 for G in graphs)
    return _verdict(len(graphs) == 3 and matched and digons == [False, False, True],
                    f"{len(graphs)} classes")


def _twelve_kautz(ctx):
    K12 = groupoid.kautz(2, 3)
    L = digraph.line_digraph(kautz6())
    return _verdict(digraph.isomorphic(L, K12) is not None and digraph.diameter(K12) == 3
                    and digraph.automorphism_order(K12) == 6 and not groupoid.is_vertex_transitive(K12))


def _twelve_companions(ctx):
    Z = Permutation.shift(12, 1)
    graphs = [digraph.from_factors([Z, Y]) for Y in groupoid.twelve_vertex_companions()]
    lines = [digraph.line_digraph(H) for H in six_vertex_classes()]
    orders = [digraph.automorphism_order(G) for G in graphs]
    matched = [next(k for k, L in enumerate(lines) if digraph.isomorphic(G, L) is not None) for G in graphs]
    ok = (orders == [6, 3, 4] and sorted(matched) == [0, 1, 2]
          and all(digraph.diameter(G) == 3 for G in graphs))
    return _verdict(ok, f"automorphism orders {orders}")


def _twelve_search(ctx):
    result = search.enumerate_digraphs(search.SearchSpec(12, 3, mode='pruned', threads=ctx.threads))
    Z = Permutation.shift(12, 1)
    graphs = [digraph.from_factors([Z, Y]) for Y in result.representatives]
    lines = [digraph.line_digraph(H) for H in six_vertex_classes()]
    matched = all(any(digraph.isomorphic(G, L) is not None for L in lines) for G in graphs)
    orders = sorted(digraph.automorphism_order(G) for G in graphs)
    return _verdict(len(graphs) == 3 and matched and orders == [3, 4, 6], f"{len(graphs)} classes, orders {orders}")


def _universal(a, b):
    def check(ctx):
        X, Y = covergroup.universal_generators(a, b)
        target = covergroup.universal_order(a, b)
        if target > ctx.max_elements:
            return SKIPPED, f"order {target} exceeds cap {ctx.max_elements}"
        result = covergroup.group_bfs([flatten(X), flatten(Y)], max_elements=ctx.max_elements)
        return _verdict(result.order == target, f"order {result.order} of {target}")
    return check


def _universal_printed(ctx):
    X, Y = covergroup.universal_generators(3, 3)
    printed = covergroup.printed_pair(UNIVERSAL_3X3_PRINTED)
    return _verdict([flatten(X), flatten(Y)] == printed
                    and flatten(sd_compose(X, Y)) == compose(printed[0], printed[1]))


def _random_semi_direct(rng, a, b):
    outer = Permutation(tuple(int(x) for x in rng.permutation(a)))
    return SemiDirectPerm(outer, tuple(Permutation(tuple(int(x) for x in rng.permutation(b))) for _ in range(a)))


def _property_homomorphism(ctx):
    rng = np.random.default_rng(7)
    for _ in range(1000):
        a, b = (int(x) for x in rng.integers(1, 6, size=2))
        A, B = _random_semi_direct(rng, a, b), _random_semi_direct(rng, a, b)
        if flatten(sd_compose(A, B)) != compose(flatten(A), flatten(B)):
            return FAIL, f"homomorphism fails for {A} and {B}"
        if unflatten(flatten(A), a, b) != A:
            return FAIL, f"round trip fails for {A}"
        if is_sd_derangement(A) != is_derangement(flatten(A)):
            return FAIL, f"derangement test disagrees for {A}"
    return PASS, "1000 random pairs"


def _property_factor_pair(ctx):
    rng = np.random.default_rng(11)
    G = alegre()
    Z, Y = groupoid.alegre_factors()
    group = {g.images for g in digraph.automorphisms(G)}
    candidates = [Permutation(tuple(int(x) for x in rng.permutation(25))) for _ in range(200)]
    candidates += [Permutation(images) for images in group]
    for alpha in candidates:
        if cdd.preserves_factor_pair(Z, Y, alpha) != (alpha.images in group):
            return FAIL, f"disagreement at {alpha}"
    return PASS, f"{len(candidates)} maps"


CATALOG: List[Claim] = [
    Claim('kautz-groupoid.properties', 'kautz-groupoid', 'six-element table satisfies P1-P3',
          _kautz_groupoid_properties),
    Claim('kautz-groupoid.digraph', 'kautz-groupoid', 'Cayley digraph is the 6-vertex Kautz digraph, diameter 2',
          _kautz_groupoid_digraph),
    Claim('left-identity.properties', 'left-identity', 'table fails P1 and satisfies P2, P3',
          _left_identity_properties),
    Claim('left-identity.digraph', 'left-identity', 'Cayley digraph is isomorphic to the Kautz groupoid digraph',
          _left_identity_digraph),
    Claim('hoffman-singleton.shape', 'hoffman-singleton',
          '50 vertices, 7-regular, symmetric, diameter 2, girth 5, 175 edges', _hs_shape),
    Claim('hoffman-singleton.generators', 'hoffman-singleton', 'left identity and no loops; right cancellation fails',
          _hs_generators),
    Claim('hoffman-singleton.transitive', 'hoffman-singleton', 'digraph is vertex transitive', _hs_transitive),
    Claim('hoffman-singleton.certificate', 'hoffman-singleton',
          'inverse-closed factorization gives a tree-like spanning factorization', _hs_certificate),
    Claim('alegre.diameter', 'alegre', '25 vertices, degree 2, diameter 4', _alegre_diameter),
    Claim('alegre-cdd.companion', 'alegre-cdd', 'CDD a=b=5 pi=(0,2,4) t=1,4,4,1,4 gives the printed Y',
          _alegre_cdd_companion),
    Claim('alegre-cdd.isomorphic', 'alegre-cdd', 'CDD digraph is isomorphic to the Alegre digraph',
          _alegre_cdd_isomorphic),
    Claim('alegre-cdd.cycle-lengths', 'alegre-cdd', 'cycle length formula gives 15, 5, 5', _alegre_cdd_cycles),
    Claim('alegre-cdd.gcd', 'alegre-cdd', 'semi-direct (Z, T) reproduces Y', _alegre_cdd_gcd),
    Claim('alegre-cdd.tau', 'alegre-cdd', '(j, i) -> (j, i+1) is an automorphism commuting with both factors',
          _alegre_cdd_tau),
    Claim('alegre-cdd.diameter', 'alegre-cdd', 'diameter from the vertices (j, 0) is 4', _alegre_cdd_diameter),
    Claim('alegre-shift.pi', 'alegre-shift', 'two shifts give pi = (4,1,2)', _alegre_shift_pi),
    Claim('alegre-shift.offsets', 'alegre-shift', 'two shifts give t = 1,3,1,4,0 and the Alegre t-factor',
          _alegre_shift_offsets),
    Claim('alegre-shift.printed-offsets', 'alegre-shift', 'printed offsets 4,3,1,1,0', _alegre_shift_printed),
    Claim('alegre-cover.group', 'alegre-cover', 'covering group order 187500, diameter 23, 11 extremal',
          _alegre_cover_group, slow=True),
]

_RELATIONS = (
    ('rho-conjugates-cycles', 'rho C_i rho^-1 = C_(i+1)'),
    ('sigma-factorization', 'sigma = T C_1^4 C_3'),
    ('sigma-cubed', 'sigma^3 = (C_0 C_2 C_4)^4 C_1^2 C_3^3'),
    ('rho-fifth-power', 'rho^5 = C_0 C_1 C_2 C_3 C_4'),
    ('rho-inverse-sigma', 'rho^-1 sigma as printed and as U_i V_i C_4^3'),
    ('rho-inverse-sigma-squared', '(rho^-1 sigma)^2 = C_4'),
    ('theta-as-printed', 'printed cycle for sigma rho sigma^-1'),
    ('theta-recomputed', 'sigma rho sigma^-1 equals the b-sequence cycle'),
    ('theta-fifth-power', 'theta^5 = C_0 C_1 C_2 C_3 C_4 = rho^5'),
    ('sigma-conjugates-cycles', 'sigma C_i sigma^-1 = C_pi(i)'),
)
CATALOG += [Claim(f'alegre-cover.{name}', 'alegre-cover', text, _relation(name)) for name, text in _RELATIONS]

CATALOG += [
    Claim('prime-seven.sigma', 'prime-seven', '49-vertex sigma equals the printed cycles', _prime_seven_sigma),
    Claim('prime-seven.diameter', 'prime-seven', '49-vertex digraph has diameter 7', _prime_seven_diameter),
    Claim('prime-seven.line-digraph', 'prime-seven', 'Alegre line digraph has 50 vertices, diameter 5',
          _prime_seven_line),
    Claim('prime-seven.group-order', 'prime-seven', 'covering group order', _prime_seven_order),
    Claim('wreath-3x3.order', 'wreath-3x3', 'semi-direct pair generates 1296 elements, diameter 14',
          _wreath_order),
    Claim('wreath-3x3.printed-forms', 'wreath-3x3', 'printed pair and disjoint pair generate the same set',
          _wreath_printed),
    Claim('six-vertex.kautz-line', 'six-vertex', 'line digraph of K3 is Kautz 6', _six_line),
    Claim('six-vertex.kautz-gcd', 'six-vertex', 'line digraph GCD of K3 is Kautz 6, cover order divides 72',
          _six_gcd_kautz),
    Claim('six-vertex.digon-free', 'six-vertex', 'GCD on Z_2 x Z_3 has diameter 2 and no digons', _six_g22),
    Claim('six-vertex.order-120', 'six-vertex', 'covering group order 120, diameter 10', _six_exotic_cover),
    Claim('six-vertex.unique-factorization', 'six-vertex', 'unique decomposition into 1-factors',
          _six_exotic_unique),
    Claim('six-vertex.search', 'six-vertex', 'exactly 3 classes with n=6, diameter 2', _six_search),
    Claim('twelve-vertex.kautz', 'twelve-vertex', 'Kautz 12: diameter 3, |Aut| = 6, not vertex transitive',
          _twelve_kautz),
    Claim('twelve-vertex.companions', 'twelve-vertex', 'companions are line digraphs, |Aut| = 6, 3, 4',
          _twelve_companions),
    Claim('twelve-vertex.search', 'twelve-vertex', 'exactly 3 classes with n=12, diameter 3', _twelve_search,
          slow=True),
]
CATALOG += [Claim(f'universal-generators.{a}x{b}', 'universal-generators',
                  f'pair generates all {covergroup.universal_order(a, b)} elements for a={a} b={b}',
                  _universal(a, b), slow=(a, b) == (5, 3)) for a, b in UNIVERSAL_CASES]
CATALOG += [
    Claim('universal-generators.printed-3x3', 'universal-generators', 'a=b=3 pair equals the printed S_9 forms',
          _universal_printed),
    Claim('properties.semi-direct', 'properties', 'flatten is a homomorphism, round trip, derangements agree',
          _property_homomorphism),
    Claim('properties.factor-pair', 'properties', 'factor-pair conditions match automorphisms of Alegre',
          _property_factor_pair),
]


# Numbered aliases for group names
GROUP_ALIASES = {
    'example1': 'kautz-groupoid',
    'example2': 'left-identity',
    'example3': 'hoffman-singleton',
    'example4': 'alegre',
    'example5': 'alegre-cdd',
    'example6': 'alegre-shift',
    'example7': 'alegre-cover',
    'example8': 'prime-seven',
    'example9': 'wreath-3x3',
    'example10': 'six-vertex',
    'example11': 'twelve-vertex',
}


def groups():
    seen = []
    for claim in CATALOG:
        if claim.group not in seen:
            seen.append(claim.group)
    return seen


def select(only: Optional[Sequence[str]] = None, skip_slow=False):
    """Claims whose group, group alias or id is in `only` (all when None)"""
    if only:
        only = {GROUP_ALIASES.get(name, name) for name in only}
    chosen = []
    for claim in CATALOG:
        if only and claim.group not in only and claim.id not in only:
            continue
        if skip_slow and claim.slow:
            continue
        chosen.append(claim)
    return chosen


def run_claims(claims: Sequence[Claim], ctx: Optional[Context] = None):
    ctx = ctx or Context()
    results = []
    for claim in claims:
        try:
            status, details = claim.check(ctx)
        except WorkbenchError as e:
            status, details = FAIL, f"error: {e}"
        logger.info("claim %s: %s", claim.id, status)
        results.append(ClaimResult(claim.id, claim.description, status, details))
    return results
