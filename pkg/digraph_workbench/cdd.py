"""Cyclic difference digraphs and generalized cyclic difference digraphs

Vertex (j, i) with j in Z_a and i in Z_b is the integer k = i*a + j. A cyclic
difference digraph has factors Z(k) = k + 1 and
Y(i*a + j) = (i + t_j)*a + pi(j), all mod n = a*b.

A generalized one is given by semi-direct derangements Z and T with Y = Z T.
"""

import logging
from dataclasses import dataclass
from math import gcd
from typing import NamedTuple, Tuple

from .digraph import Digraph, eccentricity, from_factors, is_isomorphism, petersen_factorize
from .errors import CddError, PermutationError
from .perm import (
    Permutation,
    SemiDirectPerm,
    compose,
    conjugate,
    cycle_length_through,
    flatten,
    inverse,
    is_sd_derangement,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CddParams:
    a: int
    b: int
    pi: Permutation
    t: Tuple[int, ...]

    def __post_init__(self):
        if self.a < 2 or self.b < 2:
            raise CddError(f"a and b must both be at least 2, got a={self.a} b={self.b}")
        if self.pi.n != self.a:
            raise CddError(f"pi acts on {self.pi.n} points, expected a={self.a}")
        t = tuple(int(x) % self.b for x in self.t)
        if len(t) != self.a:
            raise CddError(f"expected {self.a} offsets, got {len(t)}")
        object.__setattr__(self, 't', t)
        Y = _companion(self)
        for k in range(self.n):
            if Y[k] == k:
                raise CddError("Y has a fixed point", vertex=k)
            if Y[k] == (k + 1) % self.n:
                raise CddError("Y shares the edge to k+1 with Z", vertex=k)

    @property
    def n(self):
        return self.a * self.b

    def __str__(self):
        return f"a={self.a} b={self.b} pi={self.pi} t={','.join(str(x) for x in self.t)}"


def _companion(p):
    a, b = p.a, p.b
    return [((k // a + p.t[k % a]) % b) * a + p.pi(k % a) for k in range(a * b)]


class CddDigraph(NamedTuple):
    Z: Permutation
    Y: Permutation
    G: Digraph


def cdd_build(p: CddParams):
    Z = Permutation.shift(p.n, 1)
    Y = Permutation(tuple(_companion(p)))
    return CddDigraph(Z, Y, from_factors([Z, Y]))


def y_cycle_length(p: CddParams, j, i=0):
    """Length of Y's cycle through (j, i) from pi's cycle through j and the offset sum along it"""
    c = cycle_length_through(p.pi, j)
    total = 0
    x = j
    for _ in range(c):
        total += p.t[x]
        x = p.pi(x)
    alpha = p.b // gcd(total % p.b, p.b)
    return alpha * c


def tau(p: CddParams):
    """The map (j, i) -> (j, i + 1), i.e. k -> k + a"""
    return Permutation.shift(p.n, p.a)


def tau_is_automorphism(p: CddParams):
    G = cdd_build(p).G
    return is_isomorphism(G, G, tau(p))


def params_from_companion(Y: Permutation, a, b):
    """Read pi and t back from Y's values on the first segment"""
    if Y.n != a * b:
        raise CddError(f"companion has size {Y.n}, expected {a * b}")
    try:
        pi = Permutation(tuple(Y(j) % a for j in range(a)))
    except PermutationError:
        raise CddError("companion is not of cyclic difference form")
    t = tuple(Y(j) // a for j in range(a))
    params = CddParams(a, b, pi, t)
    if cdd_build(params).Y != Y:
        raise CddError("companion is not of cyclic difference form")
    return params


def shift_isomorphism(p: CddParams):
    """Parameters of the digraph relabeled by k -> k + 1"""
    mu = Permutation.shift(p.n, 1)
    shifted = conjugate(cdd_build(p).Y, mu)
    result = params_from_companion(shifted, p.a, p.b)
    logger.debug("shifted %s to %s", p, result)
    return result


def cdd_diameter(p: CddParams):
    """Largest eccentricity over the vertices (j, 0); tau moves every vertex into this set"""
    G = cdd_build(p).G
    return max(eccentricity(G, j) for j in range(p.a))


# Generalized cyclic difference digraphs

@dataclass(frozen=True)
class GcdPair:
    Z: SemiDirectPerm
    T: SemiDirectPerm

    @property
    def Y(self):
        return compose(flatten(self.Z), flatten(self.T))

    def factors(self):
        return [flatten(self.Z), self.Y]


def gcd_build(Z: SemiDirectPerm, T: SemiDirectPerm):
    """Validate (Z, T) and return the pair with its digraph on factors Z and Y = Z T"""
    if (Z.a, Z.b) != (T.a, T.b):
        raise CddError(f"dimension mismatch: ({Z.a},{Z.b}) vs ({T.a},{T.b})")
    z = flatten(Z)
    if not is_sd_derangement(Z):
        raise CddError("Z has fixed point", vertex=next(k for k in range(z.n) if z(k) == k))
    t = flatten(T)
    fixed = next((k for k in range(t.n) if t(k) == k), None)
    if fixed is not None:
        raise CddError("T has fixed point; Z and Y would share an edge", vertex=fixed)
    pair = GcdPair(Z, T)
    y = pair.Y
    fixed = next((k for k in range(y.n) if y(k) == k), None)
    if fixed is not None:
        raise CddError("Y has fixed point", vertex=fixed)
    return pair, from_factors([z, y])


def cdd_to_gcd(p: CddParams):
    """Semi-direct (Z, T) whose digraph is exactly the cyclic difference digraph of p"""
    a, b = p.a, p.b
    Z = SemiDirectPerm.build(Permutation.shift(a, 1), b, {a - 1: Permutation.shift(b, 1)})
    outer = Permutation(tuple((p.pi(j) - 1) % a for j in range(a)))
    inner = tuple(Permutation.shift(b, p.t[j] - (1 if p.pi(j) == 0 else 0)) for j in range(a))
    return GcdPair(Z, SemiDirectPerm(outer, inner))


def linedigraph_as_gcd(G: Digraph, F=None):
    """Pair on Z_2 x Z_n whose digraph is the line digraph of the degree 2 digraph G

    Vertex (j, i) stands for the factor-j edge ending at i.
    """
    if G.d != 2:
        raise CddError(f"line digraph construction needs degree 2, got {G.d}")
    if F is None:
        F = petersen_factorize(G)
    first, second = F.factors
    Z = SemiDirectPerm(Permutation.identity(2), (first, second))
    T = SemiDirectPerm(Permutation((1, 0)), (Permutation.identity(G.n), Permutation.identity(G.n)))
    return GcdPair(Z, T)


def factor_pair_conditions(Z: Permutation, Y: Permutation, alpha: Permutation):
    """Per vertex, which of the two factor-pair conditions holds: 'B1', 'B2' or None

    B1: alpha commutes with Z and with Y at v.
    B2: alpha swaps them at v, Z alpha(v) = alpha Y(v) and Y alpha(v) = alpha Z(v).
    """
    if not (Z.n == Y.n == alpha.n):
        raise PermutationError(f"size mismatch: {Z.n}, {Y.n}, {alpha.n}")
    T = compose(inverse(Z), Y)
    z_inv = inverse(Z)
    t_inv = inverse(T)
    result = []
    for v in range(Z.n):
        av = alpha(v)
        b1 = av == z_inv(alpha(Z(v))) and av == t_inv(z_inv(alpha(Z(T(v)))))
        b2 = av == z_inv(alpha(Z(T(v)))) and av == t_inv(z_inv(alpha(Z(v))))
        result.append('B1' if b1 else 'B2' if b2 else None)
    return result


def preserves_factor_pair(Z: Permutation, Y: Permutation, alpha: Permutation):
    """True when alpha is an automorphism of the digraph with factors Z and Y"""
    return all(c is not None for c in factor_pair_conditions(Z, Y, alpha))
