"""Groupoid tables and their Cayley digraphs

A partial groupoid keeps only the generator columns of a product table:
cols[x][s] is x * gens[s]. The properties checked here are

  P1  the identity e (when given) satisfies e * gens[s] = gens[s]
  P2  x * s != x for every x and generator s (no loops)
  P3  every generator column is a permutation (right cancellation)

A canonical extension labels each vertex by a tree-like word from a BFS
spanning tree and multiplies by following words from the left operand.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .digraph import (
    Digraph,
    complete_digraph,
    degree2_factorizations,
    from_factors,
    inverse_closed_factorization,
    is_symmetric,
    isomorphic,
    line_digraph,
    petersen_factorize,
)
from .errors import DigraphError, GroupoidError
from .perm import Permutation, SemiDirectPerm, parse_cycles

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]


@dataclass(frozen=True)
class PartialGroupoid:
    cols: Tuple[Tuple[int, ...], ...]
    gens: Tuple[int, ...]
    identity: Optional[int] = None

    def __post_init__(self):
        cols = tuple(tuple(int(v) for v in row) for row in self.cols)
        gens = tuple(int(g) for g in self.gens)
        object.__setattr__(self, 'cols', cols)
        object.__setattr__(self, 'gens', gens)
        n = len(cols)
        if n == 0:
            raise GroupoidError("groupoid has no elements")
        for x, row in enumerate(cols):
            if len(row) != len(gens):
                raise GroupoidError(f"row {x} has {len(row)} entries, expected {len(gens)}")
            for v in row:
                if v < 0 or v >= n:
                    raise GroupoidError(f"row {x} has entry {v} outside 0..{n - 1}")
        for g in gens:
            if g < 0 or g >= n:
                raise GroupoidError(f"generator {g} outside 0..{n - 1}")
        if self.identity is not None and not 0 <= self.identity < n:
            raise GroupoidError(f"identity {self.identity} outside 0..{n - 1}")

    @property
    def n(self):
        return len(self.cols)

    @property
    def d(self):
        return len(self.gens)


@dataclass(frozen=True)
class GroupoidTable:
    """Full n x n product table; rows[x][y] = x * y"""

    rows: Tuple[Tuple[int, ...], ...]
    gens: Tuple[int, ...]
    identity: int = 0

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, 'rows', rows)
        object.__setattr__(self, 'gens', tuple(int(g) for g in self.gens))
        n = len(rows)
        for x, row in enumerate(rows):
            if len(row) != n:
                raise GroupoidError(f"row {x} has {len(row)} entries, expected {n}")
            if any(v < 0 or v >= n for v in row):
                raise GroupoidError(f"row {x} has an entry outside 0..{n - 1}")

    @property
    def n(self):
        return len(self.rows)

    def product(self, x, y):
        return self.rows[x][y]

    def partial(self):
        """Restriction to the generator columns"""
        cols = tuple(tuple(row[g] for g in self.gens) for row in self.rows)
        return PartialGroupoid(cols, self.gens, self.identity)


@dataclass
class PropertyReport:
    p1: bool
    p2: bool
    p3: bool
    witnesses: Dict[str, Tuple[int, ...]] = field(default_factory=dict)

    @property
    def ok(self):
        return self.p1 and self.p2 and self.p3


def check_properties(P):
    """Evaluate P1-P3, recording the first counterexample of each failed property

    Witnesses: p1 -> (generator index,), p2 -> (element, generator index),
    p3 -> (generator index, repeated value). P1 counts as failed when no
    identity is given.
    """
    if isinstance(P, GroupoidTable):
        P = P.partial()
    witnesses = {}
    p1 = P.identity is not None
    if p1:
        for s, g in enumerate(P.gens):
            if P.cols[P.identity][s] != g:
                p1 = False
                witnesses['p1'] = (s,)
                break
    p2 = True
    for x, row in enumerate(P.cols):
        hit = next((s for s, v in enumerate(row) if v == x), None)
        if hit is not None:
            p2 = False
            witnesses['p2'] = (x, hit)
            break
    p3 = True
    for s in range(P.d):
        seen = set()
        for row in P.cols:
            if row[s] in seen:
                p3 = False
                witnesses['p3'] = (s, row[s])
                break
            seen.add(row[s])
        if not p3:
            break
    return PropertyReport(p1, p2, p3, witnesses)


def cayley_digraph(P):
    """Digraph with edges (u, u * s); raises when P2 or P3 fails"""
    if isinstance(P, GroupoidTable):
        P = P.partial()
    report = check_properties(P)
    if not report.p2:
        x, s = report.witnesses['p2']
        raise GroupoidError(f"P2 fails: element {x} times generator {s} is {x}")
    if not report.p3:
        s, v = report.witnesses['p3']
        raise GroupoidError(f"P3 fails: generator column {s} repeats {v}")
    G = Digraph(P.cols)
    if not G.strongly_connected:
        logger.info("Cayley digraph on %d elements is not strongly connected", P.n)
    return G


# Words and canonical extensions

def apply_word(G, F, v, word: Sequence[int]):
    """Follow factor word[0] first, then word[1], and so on"""
    for s in word:
        v = F.factors[s](v)
    return v


def treelike_words(G, F, root) -> List[Word]:
    """Words of a BFS spanning tree rooted at root, indexed by vertex

    Ties go to the lower factor index, then to the earlier-discovered vertex.
    """
    words: List[Optional[Word]] = [None] * G.n
    words[root] = ()
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for s, f in enumerate(F.factors):
            w = f(u)
            if words[w] is None:
                words[w] = words[u] + (s,)
                queue.append(w)
    missing = [v for v, word in enumerate(words) if word is None]
    if missing:
        raise DigraphError(f"vertex {missing[0]} is not reachable from root {root}")
    return words


def canonical_extension(G, F, root) -> GroupoidTable:
    """Full table with x * y = endpoint of word(y) started at x; root is the identity"""
    words = treelike_words(G, F, root)
    gens = tuple(f(root) for f in F.factors)
    if len(set(gens)) != len(gens):
        raise GroupoidError(f"root {root} has parallel out-edges; generators would coincide")
    rows = tuple(tuple(apply_word(G, F, x, words[y]) for y in range(G.n)) for x in range(G.n))
    return GroupoidTable(rows, gens, root)


def left_cancellation_violation(T):
    """First (row, s, t) with row * gens[s] == row * gens[t], or None"""
    for x, row in enumerate(T.rows):
        seen = {}
        for s, g in enumerate(T.gens):
            v = row[g]
            if v in seen:
                return x, seen[v], s
            seen[v] = s
    return None


def has_left_cancellation(T):
    return left_cancellation_violation(T) is None


def is_quasigroup(T):
    """Every row is a permutation, i.e. left multiplication by any element is a bijection"""
    n = T.n
    return all(len(set(row)) == n for row in T.rows)


def is_spanning_factorization(G, F, words: Sequence[Word]):
    if len(words) != G.n:
        raise GroupoidError(f"expected {G.n} words, got {len(words)}")
    for v in range(G.n):
        ends = {apply_word(G, F, v, w) for w in words}
        if len(ends) != G.n:
            return False
    return True


def _candidate_factorizations(G):
    if is_symmetric(G) and max(G.edges().values()) == 1:
        try:
            yield inverse_closed_factorization(G)
        except DigraphError as e:
            logger.debug("no inverse-closed factorization: %s", e)
    if G.d == 2:
        yield from degree2_factorizations(G)
    else:
        yield petersen_factorize(G)


def transitivity_certificate(G, F=None):
    """(factorization, root, tree-like words) forming a spanning factorization, or None

    With F given only F is tried; otherwise the inverse-closed factorization
    of a symmetric digraph, every factorization of a degree-2 digraph, or the
    Petersen factorization. Every root is tried for each. A returned
    certificate proves vertex transitivity; None proves nothing.
    """
    candidates = [F] if F is not None else _candidate_factorizations(G)
    for index, factorization in enumerate(candidates):
        for root in range(G.n):
            try:
                table = canonical_extension(G, factorization, root)
            except GroupoidError:
                continue
            if is_quasigroup(table):
                logger.debug("transitivity certificate from factorization %d at root %d", index, root)
                return factorization, root, treelike_words(G, factorization, root)
    return None


def _orbit(start, group, n):
    orbit = {start}
    frontier = [start]
    while frontier:
        v = frontier.pop()
        for g in group:
            w = g(v)
            if w not in orbit:
                orbit.add(w)
                frontier.append(w)
    return orbit


def is_vertex_transitive(G):
    """Brute-force oracle: every vertex is the image of vertex 0 under some automorphism"""
    found = []
    orbit = {0}
    while len(orbit) < G.n:
        target = min(set(range(G.n)) - orbit)
        alpha = isomorphic(G, G, pin=(0, target))
        if alpha is None:
            return False
        found.append(alpha)
        orbit = _orbit(0, found, G.n)
    return True


# Named objects

def kautz_groupoid():
    """Six-element groupoid whose Cayley digraph is the degree 2 Kautz digraph

    Elements are pairs (first, second) over Z_2 x Z_3 numbered 3*first + second;
    generators are t = (1,0) and s = (0,1).
    """
    rows = (
        (0, 1, 2, 3, 4, 5),
        (1, 2, 3, 5, 0, 1),
        (2, 3, 4, 1, 2, 3),
        (3, 4, 5, 0, 1, 2),
        (4, 5, 0, 2, 3, 4),
        (5, 0, 1, 4, 5, 0),
    )
    return GroupoidTable(rows, (3, 1), 0)


def right_identity_groupoid():
    """Table with 0 as a right identity that fails to be a left identity on t"""
    rows = (
        (0, 1, 2, 4, 5, 3),
        (1, 2, 0, 3, 4, 5),
        (2, 0, 1, 5, 3, 4),
        (3, 4, 5, 1, 2, 0),
        (4, 5, 3, 0, 1, 2),
        (5, 3, 4, 2, 0, 1),
    )
    return GroupoidTable(rows, (3, 1), 0)


def _is_prime(p):
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def hoffman_singleton(p=5):
    """Groupoid on Z_2 x Z_p x Z_p and its Cayley digraph

    Elements (a, b, c) are numbered a*p*p + b*p + c. The product is
    (a, b, c) * (x, y, z) = (a + x, b - b*x + y, c + (-1)^a*b*y + 2^a*z)
    with the first coordinate mod 2 and the others mod p. For p = 5 the
    digraph is the Hoffman-Singleton graph with every edge replaced by a
    pair of opposite arcs.

    The columns for (1, y, 0) are not permutations (P3 fails), so the
    digraph is built from the edges (u, u * s) directly; in-degrees still
    balance because the generator set is closed under edge reversal.
    """
    if p < 3 or not _is_prime(p):
        raise GroupoidError(f"p must be an odd prime, got {p}")

    def index(a, b, c):
        return a * p * p + b * p + c

    def product(u, s):
        a, b, c = u
        x, y, z = s
        sign = -1 if a else 1
        return ((a + x) % 2, (b - b * x + y) % p, (c + sign * b * y + (2 ** a) * z) % p)

    elements = [(a, b, c) for a in range(2) for b in range(p) for c in range(p)]
    generators = [(0, 0, 1), (0, 0, p - 1)] + [(1, y, 0) for y in range(p)]
    cols = tuple(tuple(index(*product(u, s)) for s in generators) for u in elements)
    P = PartialGroupoid(cols, tuple(index(*s) for s in generators), 0)
    report = check_properties(P)
    if not report.p2:
        x, s = report.witnesses['p2']
        raise GroupoidError(f"P2 fails: element {x} times generator {s} is {x}")
    return P, Digraph(P.cols)


ALEGRE_T_FACTOR = "(0,5,10,15,20)(3,23,18,13,8)(1,17,24,21,12,19,16,7,14,11,2,9,6,22,4)"


def alegre_factors():
    """The +1 factor and the t-factor of the 25-vertex diameter 4 digraph"""
    return [Permutation.shift(25, 1), parse_cycles(ALEGRE_T_FACTOR, 25)]


def k3():
    return complete_digraph(3)


def kautz(d, D):
    """Degree d Kautz digraph of diameter D, the (D-1)-fold line digraph of K_{d+1}"""
    if d < 1 or D < 1:
        raise GroupoidError(f"kautz needs d >= 1 and D >= 1, got d={d} D={D}")
    G = complete_digraph(d + 1)
    for _ in range(D - 1):
        G = line_digraph(G)
    return G


def g22_semi_direct():
    """(Z, T) on Z_2 x Z_3 for the six-vertex digraph without digons"""
    Z = SemiDirectPerm(Permutation.identity(2), (parse_cycles("(0,1,2)", 3), parse_cycles("(0,2,1)", 3)))
    T = SemiDirectPerm(parse_cycles("(0,1)", 2), (parse_cycles("(0,1,2)", 3), Permutation.identity(3)))
    return Z, T


def g22_printed():
    return [parse_cycles("(0,4,2,3,1,5)", 6), parse_cycles("(0,2,1)(4,5,3)", 6)]


def exotic6():
    """Six-vertex diameter 2 digraph with a covering group of order 120"""
    return [parse_cycles("(0,1,2,3,4,5)", 6), parse_cycles("(0,2,5,3,1,4)", 6)]


TWELVE_VERTEX_COMPANIONS = (
    "(0,6)(1,4,9,8,5)(2,11,7,10,3)",
    "(0,4,11,9,7,3,1,6,10,5,2,8)",
    "(0,10,4,8,3,11,6,2,9,1,7,5)",
)


def twelve_vertex_companions():
    """Companions Y of the 12-cycle for the three degree 2 diameter 3 digraphs on 12 vertices"""
    return [parse_cycles(text, 12) for text in TWELVE_VERTEX_COMPANIONS]


def twelve_vertex_factors(k):
    """Factors [v -> v + 1, Y_k] of the k-th twelve-vertex digraph, k = 1, 2, 3"""
    if not 1 <= k <= len(TWELVE_VERTEX_COMPANIONS):
        raise GroupoidError(f"no twelve-vertex companion {k}")
    return [Permutation.shift(12, 1), parse_cycles(TWELVE_VERTEX_COMPANIONS[k - 1], 12)]


def _twelve_builtin(k):
    return lambda: from_factors(twelve_vertex_factors(k))


_BUILTINS = {
    'kautz-groupoid': lambda: kautz_groupoid(),
    'right-identity-groupoid': lambda: right_identity_groupoid(),
    'alegre': lambda: from_factors(alegre_factors()),
    'k3': lambda: k3(),
    'kautz': lambda d=2, D=2: kautz(d, D),
    'hs': lambda p=5: hoffman_singleton(p)[1],
    'g22': lambda: from_factors(g22_printed()),
    'exotic6': lambda: from_factors(exotic6()),
    **{f'twelve-companion-{k}': _twelve_builtin(k)
       for k in range(1, len(TWELVE_VERTEX_COMPANIONS) + 1)},
}


def builtin_names():
    return sorted(_BUILTINS)


def builtin(name, **params):
    """Named object: a GroupoidTable for the groupoid names, a Digraph otherwise"""
    try:
        factory = _BUILTINS[name]
    except KeyError:
        raise GroupoidError(f"unknown builtin '{name}'; choose from {', '.join(builtin_names())}")
    return factory(**params)
