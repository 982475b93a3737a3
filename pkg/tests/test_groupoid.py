import numpy as np
import pytest

from digraph_workbench.digraph import (
    Factorization,
    complete_digraph,
    diameter,
    directed_cycle,
    from_factors,
    from_ports,
    isomorphic,
)
from digraph_workbench.errors import DigraphError, GroupoidError
from digraph_workbench.groupoid import (
    GroupoidTable,
    PartialGroupoid,
    alegre_factors,
    apply_word,
    builtin,
    builtin_names,
    canonical_extension,
    cayley_digraph,
    check_properties,
    exotic6,
    g22_printed,
    has_left_cancellation,
    hoffman_singleton,
    is_quasigroup,
    is_spanning_factorization,
    is_vertex_transitive,
    kautz,
    kautz_groupoid,
    left_cancellation_violation,
    right_identity_groupoid,
    transitivity_certificate,
    treelike_words,
    twelve_vertex_factors,
)
from digraph_workbench.perm import Permutation, is_derangement


def random_derangement(rng, n):
    while True:
        p = Permutation(tuple(int(x) for x in rng.permutation(n)))
        if is_derangement(p):
            return p


def cyclic_partial(n):
    return PartialGroupoid(tuple(((x + 1) % n,) for x in range(n)), (1,), 0)


def test_kautz_groupoid_properties():
    report = check_properties(kautz_groupoid())
    assert report.ok
    assert report.witnesses == {}


def test_kautz_groupoid_cayley_digraph():
    G = cayley_digraph(kautz_groupoid())
    assert isomorphic(G, kautz(2, 2)) is not None
    assert diameter(G) == 2


def test_right_identity_groupoid_fails_left_identity():
    report = check_properties(right_identity_groupoid())
    assert not report.p1
    assert report.p2
    assert report.p3
    assert report.witnesses['p1'] == (0,)
    G = cayley_digraph(right_identity_groupoid())
    assert isomorphic(G, kautz(2, 2)) is not None


def test_cyclic_groupoid_gives_cycle():
    assert cayley_digraph(cyclic_partial(7)) == directed_cycle(7)


def test_missing_identity_fails_p1():
    P = PartialGroupoid(cyclic_partial(4).cols, (1,))
    assert not check_properties(P).p1


def test_cayley_digraph_rejects_loop():
    P = PartialGroupoid(((1,), (1,), (0,)), (1,), 0)
    report = check_properties(P)
    assert not report.p2
    assert report.witnesses['p2'] == (1, 0)
    with pytest.raises(GroupoidError, match="P2"):
        cayley_digraph(P)


def test_cayley_digraph_rejects_repeated_column():
    P = PartialGroupoid(((1,), (2,), (1,)), (1,), 0)
    report = check_properties(P)
    assert not report.p3
    assert report.witnesses['p3'] == (0, 1)
    with pytest.raises(GroupoidError, match="P3"):
        cayley_digraph(P)


def test_partial_groupoid_validation():
    with pytest.raises(GroupoidError):
        PartialGroupoid((), (0,))
    with pytest.raises(GroupoidError):
        PartialGroupoid(((1,), (3,)), (1,), 0)
    with pytest.raises(GroupoidError):
        PartialGroupoid(((1,), (0,)), (1,), 5)


def test_apply_word_follows_factors_in_order():
    G = from_factors(alegre_factors())
    F = Factorization(tuple(alegre_factors()))
    assert apply_word(G, F, 0, (0,)) == 1
    assert apply_word(G, F, 0, (1,)) == 5
    assert apply_word(G, F, 0, (0, 1)) == F.factors[1](1)
    assert apply_word(G, F, 0, ()) == 0


def test_treelike_words_on_cycle():
    G = directed_cycle(5)
    F = Factorization.from_ports(G)
    assert treelike_words(G, F, 0) == [(), (0,), (0, 0), (0, 0, 0), (0, 0, 0, 0)]


def test_treelike_words_reach_every_vertex():
    G = from_factors(alegre_factors())
    F = Factorization(tuple(alegre_factors()))
    words = treelike_words(G, F, 0)
    assert max(len(w) for w in words) == 4
    for v, word in enumerate(words):
        assert apply_word(G, F, 0, word) == v


def test_treelike_words_unreachable():
    G = from_ports([[1], [0], [3], [2]])
    with pytest.raises(DigraphError, match="not reachable"):
        treelike_words(G, Factorization.from_ports(G), 0)


def test_canonical_extension_of_cycle_is_cyclic_group():
    G = directed_cycle(5)
    T = canonical_extension(G, Factorization.from_ports(G), 0)
    assert T.rows == tuple(tuple((x + y) % 5 for y in range(5)) for x in range(5))
    assert T.gens == (1,)
    assert is_quasigroup(T)
    assert has_left_cancellation(T)


@pytest.mark.parametrize('factors', [alegre_factors(), exotic6()])
def test_canonical_extension_recovers_digraph(factors):
    G = from_factors(factors)
    F = Factorization(tuple(factors))
    for root in (0, 3):
        T = canonical_extension(G, F, root)
        assert check_properties(T).ok
        assert cayley_digraph(T) == G


@pytest.mark.slow
def test_canonical_extension_round_trip_random():
    rng = np.random.default_rng(12)
    checked = 0
    while checked < 500:
        n = int(rng.integers(3, 30))
        d = int(rng.integers(1, 4))
        factors = [random_derangement(rng, n) for _ in range(d)]
        G = from_factors(factors)
        root = int(rng.integers(n))
        if not G.strongly_connected or len({f(root) for f in factors}) < d:
            continue
        T = canonical_extension(G, Factorization(tuple(factors)), root)
        assert check_properties(T).ok
        assert T.identity == root
        assert cayley_digraph(T) == G
        checked += 1


def test_canonical_extension_rejects_parallel_root_edges():
    G = from_ports([[1, 1], [2, 2], [0, 0]])
    F = Factorization.from_ports(G)
    with pytest.raises(GroupoidError, match="parallel"):
        canonical_extension(G, F, 0)


def test_left_cancellation_violation():
    T = GroupoidTable(((0, 1, 2), (1, 0, 0), (2, 2, 1)), (1, 2), 0)
    assert left_cancellation_violation(T) == (1, 0, 1)
    assert not has_left_cancellation(T)
    assert not is_quasigroup(T)


def test_spanning_factorization_of_cycle():
    G = directed_cycle(6)
    F = Factorization.from_ports(G)
    words = treelike_words(G, F, 0)
    assert is_spanning_factorization(G, F, words)
    with pytest.raises(GroupoidError):
        is_spanning_factorization(G, F, words[:3])


def test_transitivity_certificate_of_cycle():
    G = directed_cycle(6)
    F = Factorization.from_ports(G)
    factorization, root, words = transitivity_certificate(G, F)
    assert factorization == F
    assert root == 0
    assert len(words) == 6
    assert is_spanning_factorization(G, F, words)


def test_transitivity_certificate_of_kautz_six():
    G = kautz(2, 2)
    factorization, root, words = transitivity_certificate(G)
    assert factorization.covers(G)
    assert is_spanning_factorization(G, factorization, words)


def test_transitivity_certificate_of_hoffman_singleton():
    _, G = hoffman_singleton(5)
    factorization, root, words = transitivity_certificate(G)
    assert factorization.covers(G)
    assert root == 0
    assert max(len(w) for w in words) == 2
    assert is_spanning_factorization(G, factorization, words)


def test_no_certificate_without_vertex_transitivity():
    assert transitivity_certificate(kautz(2, 3)) is None


@pytest.mark.parametrize('G', [
    directed_cycle(5),
    complete_digraph(4),
    kautz(2, 2),
    kautz(2, 3),
    from_factors(exotic6()),
    from_factors(g22_printed()),
], ids=['cycle5', 'complete4', 'kautz6', 'kautz12', 'exotic6', 'g22'])
def test_transitivity_certificate_is_sound(G):
    certificate = transitivity_certificate(G)
    if certificate is not None:
        factorization, root, words = certificate
        assert is_vertex_transitive(G)
        assert is_spanning_factorization(G, factorization, words)


def test_vertex_transitivity():
    assert is_vertex_transitive(directed_cycle(8))
    assert is_vertex_transitive(kautz(2, 2))
    assert not is_vertex_transitive(kautz(2, 3))


@pytest.mark.slow
def test_hoffman_singleton_is_vertex_transitive():
    assert is_vertex_transitive(hoffman_singleton(5)[1])


def test_hoffman_singleton_groupoid():
    P, G = hoffman_singleton(5)
    assert P.n == 50
    assert P.d == 7
    report = check_properties(P)
    assert report.p1
    assert report.p2
    assert not report.p3
    assert G.n == 50
    assert G.d == 7


def test_hoffman_singleton_other_prime():
    P, G = hoffman_singleton(7)
    assert G.n == 98
    assert G.d == 9


@pytest.mark.parametrize('p', [1, 2, 4, 9])
def test_hoffman_singleton_rejects_bad_p(p):
    with pytest.raises(GroupoidError):
        hoffman_singleton(p)


def test_builtins():
    assert 'alegre' in builtin_names()
    assert isinstance(builtin('kautz-groupoid'), GroupoidTable)
    assert builtin('kautz', d=2, D=3).n == 12
    assert builtin('hs').d == 7
    assert diameter(builtin('g22')) == 2
    with pytest.raises(GroupoidError, match="unknown builtin"):
        builtin('petersen')


def test_twelve_companion_builtins():
    names = [f'twelve-companion-{k}' for k in (1, 2, 3)]
    assert set(names) <= set(builtin_names())
    graphs = [builtin(name) for name in names]
    assert all(G.n == 12 and G.d == 2 and diameter(G) == 3 for G in graphs)
    assert graphs[0] == from_factors(twelve_vertex_factors(1))
    assert all(isomorphic(G, H) is None for G, H in [graphs[:2], graphs[1:], graphs[::2]])
    with pytest.raises(GroupoidError):
        twelve_vertex_factors(4)
