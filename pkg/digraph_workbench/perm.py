"""Permutation arithmetic, cycle notation and semi-direct permutations

Permutations are image arrays: entry k is the image of k. Composition is
right-to-left function application, so compose(p, q)(v) = p(q(v)).

A semi-direct permutation on Z_a x Z_b maps the vertex (j, i) to
(outer(j), inner[j](i)). Vertices are flattened with k = i*a + j.
"""

import re
from dataclasses import dataclass
from math import gcd
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .errors import PermutationError

_CYCLE_TEXT = re.compile(r'(\(\d+(,\d+)*\))*')
_CYCLE = re.compile(r'\(([^()]*)\)')


@dataclass(frozen=True)
class Permutation:
    """Bijection on {0, ..., n-1} stored as an image tuple"""

    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        n = len(images)
        seen = [False] * n
        for v in images:
            if v < 0 or v >= n:
                raise PermutationError(f"image {v} out of range for size {n}")
            if seen[v]:
                raise PermutationError(f"image {v} appears more than once")
            seen[v] = True
        object.__setattr__(self, 'images', images)

    @property
    def n(self):
        return len(self.images)

    def __len__(self):
        return len(self.images)

    def __call__(self, v):
        return self.images[v]

    def __str__(self):
        return print_cycles(self)

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)))

    @classmethod
    def shift(cls, n, k=1):
        """The rotation v -> v + k mod n"""
        return cls(tuple((v + k) % n for v in range(n)))

    @classmethod
    def from_mapping(cls, n, mapping: Mapping[int, int]):
        """Permutation that sends each key to its value and fixes everything else"""
        images = list(range(n))
        for k, v in mapping.items():
            images[k] = v
        return cls(tuple(images))


def _check_sizes(p, q):
    if p.n != q.n:
        raise PermutationError(f"size mismatch: {p.n} vs {q.n}")


def compose(p, q):
    """Return the permutation v -> p(q(v))"""
    _check_sizes(p, q)
    pi = p.images
    return Permutation(tuple(pi[x] for x in q.images))


def compose_all(perms: Sequence[Permutation]):
    """Right-to-left product of a non-empty sequence: the last entry acts first"""
    if not perms:
        raise PermutationError("empty product has no size")
    result = perms[-1]
    for p in reversed(perms[:-1]):
        result = compose(p, result)
    return result


def inverse(p):
    """p^-1, with p^-1(p(v)) = v"""
    images = [0] * p.n
    for v, w in enumerate(p.images):
        images[w] = v
    return Permutation(tuple(images))


def power(p, k):
    """p composed with itself k times; negative k uses the inverse"""
    if k < 0:
        p = inverse(p)
        k = -k
    result = Permutation.identity(p.n)
    base = p
    while k:
        if k & 1:
            result = compose(base, result)
        base = compose(base, base)
        k >>= 1
    return result


def conjugate(p, by):
    """Return by * p * by^-1, i.e. p with every vertex renamed through `by`"""
    return compose(by, compose(p, inverse(by)))


def is_identity(p):
    return all(v == w for v, w in enumerate(p.images))


def cycles(p) -> List[Tuple[int, ...]]:
    """Non-trivial cycles of p in canonical order"""
    seen = [False] * p.n
    result = []
    for start in range(p.n):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        v = p.images[start]
        while v != start:
            cycle.append(v)
            seen[v] = True
            v = p.images[v]
        if len(cycle) > 1:
            result.append(tuple(cycle))
    return result


def cycle_type(p) -> Tuple[int, ...]:
    """Lengths of all cycles (fixed points included), longest first"""
    lengths = [len(c) for c in cycles(p)]
    fixed = p.n - sum(lengths)
    return tuple(sorted(lengths, reverse=True)) + (1,) * fixed


def order(p):
    """Least common multiple of the cycle lengths"""
    result = 1
    for c in cycles(p):
        result = result * len(c) // gcd(result, len(c))
    return result


def cycle_length_through(p, v):
    length = 1
    w = p.images[v]
    while w != v:
        w = p.images[w]
        length += 1
    return length


def parse_cycles(text, n):
    """Parse cycle notation such as "(0,5,10)(3,8)" into a permutation of size n"""
    compact = re.sub(r'\s+', '', text or '')
    if compact in ('', '()', 'e', 'id'):
        return Permutation.identity(n)
    if not _CYCLE_TEXT.fullmatch(compact):
        raise PermutationError(f"malformed cycle notation: {text!r}")
    images = list(range(n))
    used = set()
    for body in _CYCLE.findall(compact):
        cycle = [int(x) for x in body.split(',')]
        for v in cycle:
            if v >= n:
                raise PermutationError(f"index {v} out of range for size {n}")
            if v in used:
                raise PermutationError(f"index {v} repeated")
            used.add(v)
        for k, v in enumerate(cycle):
            images[v] = cycle[(k + 1) % len(cycle)]
    return Permutation(tuple(images))


def print_cycles(p):
    """Canonical cycle notation: cycles start at their minimum, fixed points omitted"""
    parts = ['(' + ','.join(str(v) for v in c) + ')' for c in cycles(p)]
    return ''.join(parts) if parts else '()'


def is_derangement(p):
    """True when p fixes no vertex"""
    return all(v != w for v, w in enumerate(p.images))


def are_disjoint(p, q):
    """True when p and q share no edge (v, p(v)) = (v, q(v))"""
    _check_sizes(p, q)
    return all(x != y for x, y in zip(p.images, q.images))


# Semi-direct permutations

@dataclass(frozen=True)
class SemiDirectPerm:
    """Element of U_ab: an outer permutation of Z_a and one inner permutation of Z_b per column"""

    outer: Permutation
    inner: Tuple[Permutation, ...]

    def __post_init__(self):
        inner = tuple(self.inner)
        object.__setattr__(self, 'inner', inner)
        a = self.outer.n
        if a < 1:
            raise PermutationError("outer permutation must act on at least one column")
        if len(inner) != a:
            raise PermutationError(f"expected {a} inner permutations, got {len(inner)}")
        sizes = {q.n for q in inner}
        if len(sizes) != 1 or 0 in sizes:
            raise PermutationError("inner permutations must share one positive size")

    @property
    def a(self):
        return self.outer.n

    @property
    def b(self):
        return self.inner[0].n

    def __call__(self, j, i):
        return self.outer(j), self.inner[j](i)

    def __str__(self):
        parts = [f"{j}:{print_cycles(q)}" for j, q in enumerate(self.inner) if not is_identity(q)]
        return f"[{print_cycles(self.outer)}; {' '.join(parts) or 'e'}]"

    @classmethod
    def identity(cls, a, b):
        return cls(Permutation.identity(a), tuple(Permutation.identity(b) for _ in range(a)))

    @classmethod
    def build(cls, outer, b, inner: Dict[int, Permutation] = None):
        """Semi-direct permutation with the given outer part and inner parts at selected columns"""
        inner = inner or {}
        columns = tuple(inner.get(j, Permutation.identity(b)) for j in range(outer.n))
        return cls(outer, columns)


def _check_dims(A, B):
    if (A.a, A.b) != (B.a, B.b):
        raise PermutationError(f"dimension mismatch: ({A.a},{A.b}) vs ({B.a},{B.b})")


def sd_compose(A, B):
    """Pointwise product: (j, i) -> A(B(j, i))"""
    _check_dims(A, B)
    outer = compose(A.outer, B.outer)
    inner = tuple(compose(A.inner[B.outer(j)], B.inner[j]) for j in range(A.a))
    return SemiDirectPerm(outer, inner)


def sd_inverse(A):
    back = inverse(A.outer)
    inner = tuple(inverse(A.inner[back(j)]) for j in range(A.a))
    return SemiDirectPerm(back, inner)


def sd_power(A, k):
    if k < 0:
        A = sd_inverse(A)
        k = -k
    result = SemiDirectPerm.identity(A.a, A.b)
    for _ in range(k):
        result = sd_compose(A, result)
    return result


def flatten(A):
    """Permutation of Z_ab acting on k = i*a + j as A acts on (j, i)"""
    a, b = A.a, A.b
    images = [0] * (a * b)
    for j in range(a):
        target = A.outer(j)
        column = A.inner[j]
        for i in range(b):
            images[i * a + j] = column(i) * a + target
    return Permutation(tuple(images))


def unflatten(p, a, b):
    """Recover the semi-direct form of p, or raise when the column map depends on i"""
    if p.n != a * b:
        raise PermutationError(f"size {p.n} is not {a}*{b}")
    outer = []
    inner = []
    for j in range(a):
        target = p(j) % a
        column = []
        for i in range(b):
            image = p(i * a + j)
            if image % a != target:
                raise PermutationError(
                    f"not semi-direct: outer image of column {j} depends on i (i={i})")
            column.append(image // a)
        outer.append(target)
        inner.append(Permutation(tuple(column)))
    return SemiDirectPerm(Permutation(tuple(outer)), tuple(inner))


def is_semi_direct(p, a, b):
    try:
        unflatten(p, a, b)
    except PermutationError:
        return False
    return True


def is_sd_derangement(A):
    return all(A.outer(j) != j or is_derangement(A.inner[j]) for j in range(A.a))


def transposition(n, x, y):
    return Permutation.from_mapping(n, {x: y, y: x})


def cycle_perm(n, cycle: Iterable[int]):
    """Permutation of size n consisting of the single given cycle"""
    cycle = list(cycle)
    return Permutation.from_mapping(n, {v: cycle[(k + 1) % len(cycle)] for k, v in enumerate(cycle)})
