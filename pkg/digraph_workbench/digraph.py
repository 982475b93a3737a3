"""Regular loopless multidigraphs

A digraph stores, for every vertex, an ordered tuple of d out-neighbours
(its ports). Repeated entries are multi-edges. Construction checks that
the digraph is d-regular and loopless and records strong connectivity.
"""

import logging
from collections import Counter, deque
from dataclasses import dataclass, field
from itertools import product
from typing import List, Optional, Sequence, Tuple

import networkx as nx
from networkx.algorithms import bipartite
from networkx.algorithms.isomorphism import MultiDiGraphMatcher

from .errors import DigraphError, NotStronglyConnectedError
from .perm import Permutation, compose, conjugate, inverse, is_derangement

logger = logging.getLogger(__name__)

UNREACHABLE = -1


@dataclass(frozen=True)
class Digraph:
    ports: Tuple[Tuple[int, ...], ...]
    strongly_connected: bool = field(init=False, compare=False)

    def __post_init__(self):
        ports = tuple(tuple(int(w) for w in row) for row in self.ports)
        object.__setattr__(self, 'ports', ports)
        n = len(ports)
        if n == 0:
            raise DigraphError("digraph has no vertices")
        d = len(ports[0])
        in_degree = [0] * n
        for v, row in enumerate(ports):
            if len(row) != d:
                raise DigraphError(f"vertex {v} has {len(row)} out-ports, expected {d}")
            for w in row:
                if w < 0 or w >= n:
                    raise DigraphError(f"vertex {v} has out-neighbour {w} outside 0..{n - 1}")
                if w == v:
                    raise DigraphError(f"loop at vertex {v}")
                in_degree[w] += 1
        for v, deg in enumerate(in_degree):
            if deg != d:
                raise DigraphError(f"vertex {v} has in-degree {deg}, expected {d}")
        object.__setattr__(self, 'strongly_connected', _strongly_connected(ports))

    @property
    def n(self):
        return len(self.ports)

    @property
    def d(self):
        return len(self.ports[0])

    def edges(self) -> Counter:
        """Edge multiset as a Counter of (u, v) pairs"""
        return Counter((u, w) for u, row in enumerate(self.ports) for w in row)

    def port_columns(self) -> List[Tuple[int, ...]]:
        return [tuple(row[s] for row in self.ports) for s in range(self.d)]

    def to_networkx(self):
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(range(self.n))
        for u, row in enumerate(self.ports):
            for w in row:
                graph.add_edge(u, w)
        return graph


def _reach(ports, start, reverse=False):
    n = len(ports)
    if reverse:
        adjacency = [[] for _ in range(n)]
        for u, row in enumerate(ports):
            for w in row:
                adjacency[w].append(u)
    else:
        adjacency = ports
    seen = [False] * n
    seen[start] = True
    stack = [start]
    count = 1
    while stack:
        u = stack.pop()
        for w in adjacency[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count


def _strongly_connected(ports):
    n = len(ports)
    return _reach(ports, 0) == n and _reach(ports, 0, reverse=True) == n


@dataclass(frozen=True)
class Factorization:
    """d pairwise edge-disjoint derangements covering a digraph's edges"""

    factors: Tuple[Permutation, ...]

    def __post_init__(self):
        factors = tuple(self.factors)
        object.__setattr__(self, 'factors', factors)
        if not factors:
            raise DigraphError("a factorization needs at least one factor")
        for k, f in enumerate(factors):
            if f.n != factors[0].n:
                raise DigraphError("factors have different sizes")
            if not is_derangement(f):
                raise DigraphError(f"factor {k} has a fixed point")

    @property
    def n(self):
        return self.factors[0].n

    @property
    def d(self):
        return len(self.factors)

    def covers(self, G):
        """True when the union of the factors is exactly G's edge multiset"""
        if G.n != self.n or G.d != self.d:
            return False
        edges = Counter((v, f(v)) for f in self.factors for v in range(self.n))
        return edges == G.edges()

    @classmethod
    def from_ports(cls, G):
        """Use the port columns of G as factors; each column must be a permutation"""
        return cls(tuple(Permutation(column) for column in G.port_columns()))


def from_factors(factors: Sequence[Permutation]):
    """Digraph whose port s at vertex v is factors[s](v)"""
    factors = list(factors)
    if not factors:
        raise DigraphError("at least one factor is required")
    n = factors[0].n
    for k, f in enumerate(factors):
        if f.n != n:
            raise DigraphError(f"factor {k} has size {f.n}, expected {n}")
        if not is_derangement(f):
            fixed = next(v for v in range(n) if f(v) == v)
            raise DigraphError(f"factor {k} fixes vertex {fixed}, which would create a loop")
    return Digraph(tuple(tuple(f(v) for f in factors) for v in range(n)))


def from_ports(rows: Sequence[Sequence[int]]):
    return Digraph(tuple(tuple(r) for r in rows))


def directed_cycle(n):
    return from_factors([Permutation.shift(n, 1)])


def complete_digraph(m):
    """Complete digraph on m vertices, factored by the shifts v -> v + k"""
    if m < 2:
        raise DigraphError("complete digraph needs at least two vertices")
    return from_factors([Permutation.shift(m, k) for k in range(1, m)])


def relabel(G, p):
    """Copy of G with vertex v renamed p(v)"""
    if p.n != G.n:
        raise DigraphError(f"relabeling of size {p.n} for a digraph with {G.n} vertices")
    rows = [None] * G.n
    for v, row in enumerate(G.ports):
        rows[p(v)] = tuple(p(w) for w in row)
    return Digraph(tuple(rows))


def is_isomorphism(G, H, p):
    """True when p carries G's edge multiset onto H's"""
    return G.n == H.n and relabel(G, p).edges() == H.edges()


# Distances

def distances_from(G, v, cutoff=None):
    """BFS distances from v; unreachable vertices (or beyond cutoff) get UNREACHABLE"""
    dist = [UNREACHABLE] * G.n
    dist[v] = 0
    queue = deque([v])
    ports = G.ports
    while queue:
        u = queue.popleft()
        du = dist[u]
        if cutoff is not None and du >= cutoff:
            continue
        for w in ports[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = du + 1
                queue.append(w)
    return dist


def eccentricity(G, v, cutoff=None):
    """Largest distance from v, or None when some vertex is not reached"""
    dist = distances_from(G, v, cutoff)
    if UNREACHABLE in dist:
        return None
    return max(dist)


def diameter(G, cutoff=None, sources=None):
    """Exact directed diameter by one BFS per source

    With a cutoff, stops at the first source that cannot reach every vertex
    within cutoff steps and returns cutoff + 1.
    """
    if cutoff is None and not G.strongly_connected:
        source, target = _unreachable_pair(G)
        raise NotStronglyConnectedError(source, target)
    best = 0
    for v in (range(G.n) if sources is None else sources):
        dist = distances_from(G, v, cutoff)
        if UNREACHABLE in dist:
            if cutoff is not None:
                return cutoff + 1
            raise NotStronglyConnectedError(v, dist.index(UNREACHABLE))
        best = max(best, max(dist))
    return best


def _unreachable_pair(G):
    for v in range(G.n):
        dist = distances_from(G, v)
        if UNREACHABLE in dist:
            return v, dist.index(UNREACHABLE)
    raise DigraphError("digraph is strongly connected")


def distance_matrix(G):
    return [distances_from(G, v) for v in range(G.n)]


# Line digraph

def line_digraph(G):
    """Vertices are the edges (u, port p) numbered u*d + p; (u,v) -> (v,w)"""
    d = G.d
    rows = []
    for u, row in enumerate(G.ports):
        for w in row:
            rows.append(tuple(w * d + q for q in range(d)))
    return Digraph(tuple(rows))


# Factorization

def petersen_factorize(G):
    """Split G into d edge-disjoint 1-factors by peeling perfect matchings

    Each round matches out-copies to in-copies in the bipartite double cover
    of the remaining edges; a regular bipartite multigraph always has one.
    """
    remaining = G.edges()
    factors = []
    for round_index in range(G.d):
        cover = nx.Graph()
        top = [('out', u) for u in range(G.n)]
        cover.add_nodes_from(top)
        cover.add_nodes_from(('in', w) for w in range(G.n))
        for (u, w), count in sorted(remaining.items()):
            if count > 0:
                cover.add_edge(('out', u), ('in', w))
        matching = bipartite.hopcroft_karp_matching(cover, top_nodes=top)
        images = []
        for u in range(G.n):
            partner = matching.get(('out', u))
            if partner is None:
                raise DigraphError(f"no perfect matching in round {round_index}; digraph is not regular")
            images.append(partner[1])
        for u, w in enumerate(images):
            remaining[(u, w)] -= 1
        factors.append(Permutation(tuple(images)))
        logger.debug("factorization round %d matched %d vertices", round_index, G.n)
    return Factorization(tuple(factors))


def degree2_factorizations(G) -> List[Factorization]:
    """Every factorization of a degree-2 digraph, as unordered pairs

    The bipartite double cover splits into even cycles; each cycle longer
    than a doubled edge contributes an independent two-way choice.
    """
    if G.d != 2:
        raise DigraphError("only degree-2 digraphs are supported")
    base = Factorization.from_ports(G) if _ports_are_factors(G) else petersen_factorize(G)
    first, second = base.factors
    cover = nx.Graph()
    for u in range(G.n):
        cover.add_edge(('out', u), ('in', first(u)))
        cover.add_edge(('out', u), ('in', second(u)))
    flippable = []
    for component in nx.connected_components(cover):
        outs = sorted(v for side, v in component if side == 'out')
        if any(first(u) != second(u) for u in outs):
            flippable.append(outs)
    seen = set()
    result = []
    for choice in product((False, True), repeat=len(flippable)):
        x = list(first.images)
        y = list(second.images)
        for flip, outs in zip(choice, flippable):
            if flip:
                for u in outs:
                    x[u], y[u] = y[u], x[u]
        key = frozenset((tuple(x), tuple(y)))
        if key in seen:
            continue
        seen.add(key)
        result.append(Factorization((Permutation(tuple(x)), Permutation(tuple(y)))))
    return result


def inverse_closed_factorization(G):
    """Factorization of a symmetric simple digraph in which every factor's inverse is a factor

    Odd degree first takes a perfect matching of the underlying graph as an
    involution. The even remainder is oriented along Euler circuits and the
    oriented digraph is peeled into permutations f, each followed by f^-1.
    """
    if not is_symmetric(G) or max(G.edges().values()) > 1:
        raise DigraphError("needs a symmetric digraph without multi-edges")
    graph = nx.Graph()
    graph.add_nodes_from(range(G.n))
    graph.add_edges_from((u, w) for u, row in enumerate(G.ports) for w in row if u < w)
    factors = []
    if G.d % 2:
        matching = nx.max_weight_matching(graph, maxcardinality=True)
        if 2 * len(matching) != G.n:
            raise DigraphError("underlying graph has no perfect matching")
        images = [0] * G.n
        for u, w in matching:
            images[u], images[w] = w, u
            graph.remove_edge(u, w)
        factors.append(Permutation(tuple(images)))
    if G.d >= 2:
        out = [[] for _ in range(G.n)]
        for component in nx.connected_components(graph):
            for u, w in nx.eulerian_circuit(graph.subgraph(component)):
                out[u].append(w)
        for f in petersen_factorize(Digraph(tuple(tuple(row) for row in out))).factors:
            factors += [f, inverse(f)]
    return Factorization(tuple(factors))


def _ports_are_factors(G):
    return all(len(set(column)) == G.n for column in G.port_columns())


def factorization_unique_up_to_automorphism(G):
    """True when every degree-2 factorization is the image of one factorization under Aut(G)"""
    options = degree2_factorizations(G)
    reference = {tuple(f.images) for f in options[0].factors}
    group = automorphisms(G)
    for option in options[1:]:
        found = False
        for alpha in group:
            moved = {conjugate(f, alpha).images for f in option.factors}
            if moved == reference:
                found = True
                break
        if not found:
            return False
    return True


# Isomorphism

def _signature(G, v, reverse_ports):
    forward = Counter(distances_from(G, v))
    back = Counter(_distances_in(reverse_ports, v))
    return tuple(sorted(forward.items())), tuple(sorted(back.items()))


def _distances_in(reverse_ports, v):
    dist = [UNREACHABLE] * len(reverse_ports)
    dist[v] = 0
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in reverse_ports[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def signatures(G):
    """Per-vertex (out-distance profile, in-distance profile)"""
    reverse_ports = [[] for _ in range(G.n)]
    for u, row in enumerate(G.ports):
        for w in row:
            reverse_ports[w].append(u)
    return [_signature(G, v, reverse_ports) for v in range(G.n)]


def _labelled(G, sigs, pinned=None):
    graph = G.to_networkx()
    for v in range(G.n):
        graph.nodes[v]['sig'] = sigs[v]
        graph.nodes[v]['pin'] = v == pinned
    return graph


def _node_match(a, b):
    return a['sig'] == b['sig'] and a['pin'] == b['pin']


def isomorphic(G, H, pin: Optional[Tuple[int, int]] = None):
    """Return a vertex bijection carrying G onto H, or None

    `pin=(u, v)` restricts the search to bijections sending u to v.
    """
    if G.n != H.n or G.d != H.d:
        return None
    sig_g = signatures(G)
    sig_h = sig_g if H is G else signatures(H)
    if sorted(sig_g) != sorted(sig_h):
        return None
    if pin is not None and sig_g[pin[0]] != sig_h[pin[1]]:
        return None
    first = _labelled(G, sig_g, pin[0] if pin else None)
    second = _labelled(H, sig_h, pin[1] if pin else None)
    matcher = MultiDiGraphMatcher(first, second, node_match=_node_match)
    if not matcher.is_isomorphic():
        return None
    return Permutation(tuple(matcher.mapping[v] for v in range(G.n)))


def automorphisms(G) -> List[Permutation]:
    """The full automorphism group, sorted by image tuple (identity first)"""
    sigs = signatures(G)
    graph = _labelled(G, sigs)
    matcher = MultiDiGraphMatcher(graph, graph, node_match=_node_match)
    group = {tuple(m[v] for v in range(G.n)) for m in matcher.isomorphisms_iter()}
    return [Permutation(images) for images in sorted(group)]


def automorphism_order(G):
    return len(automorphisms(G))


def is_group(perms: Sequence[Permutation]):
    """Closure under composition and inverse"""
    members = {p.images for p in perms}
    for p in perms:
        if inverse(p).images not in members:
            return False
        for q in perms:
            if compose(p, q).images not in members:
                return False
    return True


# Symmetry and girth

def reciprocal_edge_count(G):
    """Number of ordered pairs (u, v) with both (u, v) and (v, u) present"""
    pairs = {(u, w) for u, row in enumerate(G.ports) for w in row}
    return sum(1 for u, w in pairs if (w, u) in pairs)


def is_symmetric(G):
    edges = G.edges()
    return all(edges[(w, u)] == count for (u, w), count in edges.items())


def undirected_edge_count(G):
    """Edges of the underlying simple undirected graph"""
    return len({frozenset((u, w)) for u, row in enumerate(G.ports) for w in row})


def undirected_girth(G):
    """Shortest cycle of the underlying simple undirected graph, or None for a forest"""
    neighbours = [set() for _ in range(G.n)]
    for u, row in enumerate(G.ports):
        for w in row:
            neighbours[u].add(w)
            neighbours[w].add(u)
    best = None
    for root in range(G.n):
        dist = {root: 0}
        parent = {root: None}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in neighbours[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best
