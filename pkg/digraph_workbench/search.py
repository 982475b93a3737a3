"""Search for dense degree 2 digraphs of a given diameter

Every candidate keeps the Hamiltonian cycle Z(v) = v + 1 as one factor and
the search chooses the companion factor Y. The depth-first search assigns
Y(0), Y(1), ... in order and abandons a partial assignment as soon as some
vertex can no longer reach every vertex within the target diameter.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from .digraph import (
    UNREACHABLE,
    automorphism_order,
    diameter,
    distances_from,
    from_factors,
    isomorphic,
    reciprocal_edge_count,
    signatures,
)
from .errors import SearchError
from .perm import Permutation, cycle_type

logger = logging.getLogger(__name__)

MODES = ('exhaustive', 'pruned', 'random')


@dataclass(frozen=True)
class SearchSpec:
    n: int
    diameter_target: int
    mode: str = 'pruned'
    seed: int = 0
    dedup: bool = True
    max_nodes: Optional[int] = None
    threads: int = 1
    restarts: int = 200
    steps: int = 400

    def __post_init__(self):
        if self.n < 3:
            raise SearchError(f"n must be at least 3, got {self.n}")
        if self.diameter_target < 1:
            raise SearchError(f"diameter must be at least 1, got {self.diameter_target}")
        if self.mode not in MODES:
            raise SearchError(f"unknown mode '{self.mode}'; choose from {', '.join(MODES)}")
        if self.threads < 1:
            raise SearchError(f"threads must be at least 1, got {self.threads}")


@dataclass
class SearchStats:
    nodes: int = 0
    pruned: int = 0
    leaves: int = 0
    elapsed: float = 0.0

    def merge(self, other):
        self.nodes += other.nodes
        self.pruned += other.pruned
        self.leaves += other.leaves


@dataclass
class SearchResult:
    representatives: List[Permutation] = field(default_factory=list)
    stats: SearchStats = field(default_factory=SearchStats)
    incomplete: bool = False
    best_score: Optional[int] = None


def moore_bound(d, D):
    """1 + d + ... + d^D"""
    if d < 1 or D < 1:
        raise SearchError("moore_bound needs d >= 1 and D >= 1")
    return sum(d ** k for k in range(D + 1))


def kautz_size(d, D):
    """Vertices of the degree d, diameter D Kautz digraph"""
    if d < 1 or D < 1:
        raise SearchError("kautz_size needs d >= 1 and D >= 1")
    return d ** D + d ** (D - 1)


# Depth-first search

def _ball_can_cover(images, n, D, source):
    """Upper bound check: can source still reach all n vertices within D steps?

    A vertex at depth l whose Y image is unassigned may add at most
    2^(D-l) - 1 further vertices.
    """
    depth = {source: 0}
    frontier = [source]
    extra = 0
    for level in range(D):
        nxt = []
        for u in frontier:
            w = (u + 1) % n
            if w not in depth:
                depth[w] = level + 1
                nxt.append(w)
            y = images[u]
            if y < 0:
                extra += (1 << (D - level)) - 1
            elif y not in depth:
                depth[y] = level + 1
                nxt.append(y)
        frontier = nxt
        if len(depth) + extra >= n:
            return True
    return len(depth) + extra >= n


class _Dfs:
    def __init__(self, n, D, break_rotations, max_nodes):
        self.n = n
        self.D = D
        self.break_rotations = break_rotations
        self.max_nodes = max_nodes
        self.images = [-1] * n
        self.used = [False] * n
        self.stats = SearchStats()
        self.leaves: List[Tuple[int, ...]] = []
        self.incomplete = False

    def _gap(self, v, y):
        return (y - v) % self.n

    def _alive(self):
        n, D = self.n, self.D
        return all(_ball_can_cover(self.images, n, D, s) for s in range(n))

    def run(self, v=0):
        if self.incomplete:
            return
        self.stats.nodes += 1
        if self.max_nodes is not None and self.stats.nodes > self.max_nodes:
            self.incomplete = True
            return
        n = self.n
        if v == n:
            G = from_factors([Permutation.shift(n, 1), Permutation(tuple(self.images))])
            if diameter(G, cutoff=self.D) <= self.D:
                self.stats.leaves += 1
                self.leaves.append(tuple(self.images))
            return
        for y in range(n):
            if self.used[y] or y == v or y == (v + 1) % n:
                continue
            if self.break_rotations and v > 0 and self._gap(v, y) < self._gap(0, self.images[0]):
                continue
            self.images[v] = y
            self.used[y] = True
            if self._alive():
                self.run(v + 1)
            else:
                self.stats.pruned += 1
            self.images[v] = -1
            self.used[y] = False


def _search_branch(n, D, first, break_rotations, max_nodes):
    dfs = _Dfs(n, D, break_rotations, max_nodes)
    dfs.images[0] = first
    dfs.used[first] = True
    dfs.stats.nodes += 1
    if dfs._alive():
        dfs.run(1)
    else:
        dfs.stats.pruned += 1
    return dfs.leaves, dfs.stats, dfs.incomplete


def _digraph(n, images):
    return from_factors([Permutation.shift(n, 1), Permutation(tuple(images))])


def deduplicate(n, companions):
    """One lexicographically least companion per isomorphism class, sorted"""
    buckets: Dict[tuple, List[Tuple[tuple, object]]] = {}
    for images in sorted(companions):
        G = _digraph(n, images)
        key = tuple(sorted(signatures(G)))
        bucket = buckets.setdefault(key, [])
        if any(isomorphic(H, G) is not None for _, H in bucket):
            continue
        bucket.append((images, G))
    reps = sorted(images for bucket in buckets.values() for images, _ in bucket)
    return [Permutation(images) for images in reps]


def enumerate_digraphs(spec: SearchSpec):
    """All companions of the n-cycle giving diameter at most the target, up to isomorphism

    Mode 'pruned' additionally keeps only companions whose smallest gap
    Y(v) - v occurs at v = 0, which every rotation class contains.
    """
    if spec.mode == 'random':
        return random_search(spec)
    n, D = spec.n, spec.diameter_target
    break_rotations = spec.mode == 'pruned'
    started = time.perf_counter()
    firsts = [y for y in range(n) if y not in (0, 1 % n)]
    args = [(n, D, y, break_rotations, spec.max_nodes) for y in firsts]
    if spec.threads > 1:
        with ProcessPoolExecutor(max_workers=spec.threads) as pool:
            outcomes = list(pool.map(_search_branch, *zip(*args)))
    else:
        outcomes = [_search_branch(*a) for a in args]

    result = SearchResult()
    companions = []
    for leaves, stats, incomplete in outcomes:
        companions.extend(leaves)
        result.stats.merge(stats)
        result.incomplete = result.incomplete or incomplete
    if spec.dedup:
        result.representatives = deduplicate(n, companions)
    else:
        result.representatives = [Permutation(images) for images in sorted(companions)]
    result.stats.elapsed = time.perf_counter() - started
    logger.info("search n=%d D=%d: %d nodes, %d pruned, %d leaves, %d classes in %.2fs",
                n, D, result.stats.nodes, result.stats.pruned, result.stats.leaves,
                len(result.representatives), result.stats.elapsed)
    return result


# Randomized search

def _score(n, images, D):
    G = _digraph(n, images)
    return sum(distances_from(G, v, cutoff=D).count(UNREACHABLE) for v in range(n))


def _valid_at(images, v, n):
    y = images[v]
    return y != v and y != (v + 1) % n


def _random_companion(rng, n):
    while True:
        images = [int(x) for x in rng.permutation(n)]
        if all(_valid_at(images, v, n) for v in range(n)):
            return images


def random_search(spec: SearchSpec):
    """Seeded hill climbing over companions by swapping two images

    The score counts ordered pairs at distance greater than the target;
    the search stops at the first companion with score zero.
    """
    n, D = spec.n, spec.diameter_target
    rng = np.random.default_rng(spec.seed)
    started = time.perf_counter()
    result = SearchResult()
    for restart in range(spec.restarts):
        images = _random_companion(rng, n)
        score = _score(n, images, D)
        for _ in range(spec.steps):
            result.stats.nodes += 1
            if score == 0:
                break
            i, j = (int(x) for x in rng.choice(n, size=2, replace=False))
            images[i], images[j] = images[j], images[i]
            if not (_valid_at(images, i, n) and _valid_at(images, j, n)):
                images[i], images[j] = images[j], images[i]
                result.stats.pruned += 1
                continue
            candidate = _score(n, images, D)
            if candidate <= score:
                score = candidate
            else:
                images[i], images[j] = images[j], images[i]
        if result.best_score is None or score < result.best_score:
            result.best_score = score
        if score == 0:
            result.representatives = [Permutation(tuple(images))]
            logger.info("random search n=%d D=%d succeeded on restart %d", n, D, restart)
            break
    result.stats.elapsed = time.perf_counter() - started
    return result


def class_summary(n, Y: Permutation):
    """Automorphism order, reciprocal edge count and companion cycle type of one class"""
    G = _digraph(n, Y.images)
    return {
        'companion': str(Y),
        'automorphisms': automorphism_order(G),
        'reciprocal_edges': reciprocal_edge_count(G),
        'cycle_type': cycle_type(Y),
        'diameter': diameter(G),
    }
