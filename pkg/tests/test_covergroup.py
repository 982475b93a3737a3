from itertools import permutations

import pytest

from digraph_workbench.cdd import gcd_build, linedigraph_as_gcd
from digraph_workbench.covergroup import (
    EXTENDED_ALEGRE_SIGMA,
    WREATH_DISJOINT,
    WREATH_PRINTED,
    CosetDigraphSpec,
    alegre_cover_relations,
    alegre_cycle_subgroup,
    check_coset_spec,
    coset_digraph,
    covering_group,
    cyclic_group,
    extended_alegre,
    group_bfs,
    is_irreducible,
    printed_pair,
    search_disjoint_generators,
    universal_generators,
    universal_order,
    wreath_generators,
)
from digraph_workbench.digraph import diameter, directed_cycle, from_factors
from digraph_workbench.errors import CoverGroupError, PermutationError
from digraph_workbench.groupoid import alegre_factors, exotic6, is_vertex_transitive, k3
from digraph_workbench.perm import (
    Permutation,
    are_disjoint,
    compose,
    flatten,
    is_semi_direct,
    parse_cycles,
    print_cycles,
    sd_compose,
)

UNIVERSAL_CASES = [(2, 2), (2, 3), (3, 2), (2, 4), (4, 2), (3, 3), (2, 5), (5, 2), (4, 3), (3, 4)]


def symmetric_group(n):
    return tuple(Permutation(p) for p in permutations(range(n)))


def test_cyclic_group_bfs():
    result = group_bfs([Permutation.shift(7, 1)])
    assert result.order == 7
    assert result.diameter == 6
    assert result.histogram == (1,) * 7
    assert result.extremal_count == 1
    assert not result.incomplete


def test_group_bfs_with_inverses():
    result = group_bfs([Permutation.shift(7, 1)], with_inverses=True)
    assert result.order == 7
    assert result.diameter == 3


def test_group_bfs_extremal_and_elements():
    result = group_bfs([Permutation.shift(5, 1)], keep_extremal=True, keep_elements=True)
    assert result.extremal == [Permutation.shift(5, 4)]
    assert result.elements == frozenset(Permutation.shift(5, k).images for k in range(5))


def test_group_bfs_generator_order_irrelevant():
    x, y = exotic6()
    forward = group_bfs([x, y], keep_elements=True)
    backward = group_bfs([y, x], keep_elements=True)
    assert forward.histogram == backward.histogram
    assert forward.elements == backward.elements


def test_group_bfs_validation():
    with pytest.raises(CoverGroupError):
        group_bfs([])
    with pytest.raises(PermutationError):
        group_bfs([Permutation.shift(3, 1), Permutation.shift(4, 1)])


def test_exotic_six_covering_group():
    result = covering_group(from_factors(exotic6()))
    assert result.order == 120
    assert result.diameter == 10


def test_covering_group_cap():
    _, _, G = extended_alegre()
    result = covering_group(G, max_elements=1000)
    assert result.incomplete
    assert result.order == 1000


def test_covering_group_semi_direct_check():
    pair = linedigraph_as_gcd(k3())
    _, G = gcd_build(pair.Z, pair.T)
    result = covering_group(G, semi_direct=(2, 3), factors=pair.factors())
    assert universal_order(2, 3) % result.order == 0
    with pytest.raises(CoverGroupError, match="not semi-direct"):
        covering_group(from_factors(exotic6()), semi_direct=(2, 3))


@pytest.mark.slow
def test_alegre_covering_group():
    result = group_bfs(alegre_factors(), keep_elements=True)
    assert result.order == 187_500
    assert result.diameter == 23
    assert result.extremal_count == 11
    for c in alegre_cycle_subgroup():
        assert c.images in result.elements


def test_universal_order():
    assert universal_order(2, 3) == 72
    assert universal_order(3, 2) == 48
    assert universal_order(3, 3) == 1296
    assert universal_order(5, 3) == 933_120
    with pytest.raises(CoverGroupError):
        universal_order(0, 1)


@pytest.mark.parametrize('a,b', UNIVERSAL_CASES)
def test_universal_generators(a, b):
    X, Y = universal_generators(a, b)
    result = group_bfs([flatten(X), flatten(Y)])
    assert result.order == universal_order(a, b)


@pytest.mark.slow
def test_universal_generators_five_three():
    X, Y = universal_generators(5, 3)
    assert group_bfs([flatten(X), flatten(Y)]).order == 933_120


def test_universal_generators_three_three_printed():
    X, Y = universal_generators(3, 3)
    assert print_cycles(flatten(X)) == "(0,1)(2,5,8)(3,4)(6,7)"
    assert print_cycles(flatten(Y)) == "(0,7,8,3,1,2)(4,5,6)"
    assert flatten(sd_compose(X, Y)) == compose(flatten(X), flatten(Y))


def test_universal_generators_rejects_small():
    with pytest.raises(CoverGroupError):
        universal_generators(1, 3)
    with pytest.raises(CoverGroupError):
        universal_generators(3, 1)


def test_search_disjoint_generators():
    attempts, pair = search_disjoint_generators(2, 2, attempts=30, seed=1)
    assert 1 <= attempts <= 30
    if pair is not None:
        X, Y = pair
        assert are_disjoint(flatten(X), flatten(Y))
        assert group_bfs([flatten(X), flatten(Y)]).order == universal_order(2, 2)


def test_coset_digraph_of_cyclic_group():
    spec = CosetDigraphSpec(cyclic_group(5), (Permutation.identity(5),), (Permutation.shift(5, 1),))
    assert coset_digraph(spec) == directed_cycle(5)
    assert is_irreducible(spec)


def test_coset_digraph_of_symmetric_group():
    S = (parse_cycles("(0,1,2)", 3), parse_cycles("(0,1)", 3))
    spec = CosetDigraphSpec(symmetric_group(3), (Permutation.identity(3),), S)
    G = coset_digraph(spec)
    assert G.n == 6
    assert G.d == 2
    assert is_vertex_transitive(G)
    assert not is_irreducible(spec)


def test_coset_spec_generator_in_subgroup():
    spec = CosetDigraphSpec(cyclic_group(4), (Permutation.identity(4), Permutation.shift(4, 2)),
                            (Permutation.shift(4, 2),))
    with pytest.raises(CoverGroupError, match=r"condition \(i\)"):
        check_coset_spec(spec)


def test_coset_spec_not_generating():
    spec = CosetDigraphSpec(cyclic_group(6), (Permutation.identity(6),), (Permutation.shift(6, 2),))
    with pytest.raises(CoverGroupError, match=r"condition \(i\)"):
        check_coset_spec(spec)


def test_coset_spec_double_coset_condition():
    H = (Permutation.identity(3), parse_cycles("(0,1)", 3))
    spec = CosetDigraphSpec(symmetric_group(3), H, (parse_cycles("(0,1,2)", 3),))
    with pytest.raises(CoverGroupError, match=r"condition \(ii\)"):
        check_coset_spec(spec)


def test_coset_spec_repeated_coset():
    spec = CosetDigraphSpec(cyclic_group(5), (Permutation.identity(5),),
                            (Permutation.shift(5, 1), Permutation.shift(5, 1)))
    with pytest.raises(CoverGroupError, match=r"condition \(iii\)"):
        check_coset_spec(spec)


def test_alegre_cover_relations():
    statuses = {r.name: r.status for r in alegre_cover_relations()}
    assert len(statuses) == 10
    assert statuses.pop('theta-as-printed') == 'flagged-typo'
    assert set(statuses.values()) == {'pass'}


def test_alegre_cycle_subgroup_commutes():
    C = alegre_cycle_subgroup()
    assert len(C) == 5
    for x in C:
        for y in C:
            assert compose(x, y) == compose(y, x)


def test_extended_alegre():
    rho, sigma, G = extended_alegre()
    assert rho == Permutation.shift(49, 1)
    assert sigma == parse_cycles(EXTENDED_ALEGRE_SIGMA, 49)
    assert G.n == 49
    assert diameter(G) == 7


def test_wreath_generators():
    A, B = wreath_generators()
    result = group_bfs([flatten(A), flatten(B)], keep_elements=True)
    assert result.order == 1296
    assert result.diameter == 14
    assert all(is_semi_direct(Permutation(e), 3, 3) for e in result.elements)


def test_wreath_printed_forms_agree():
    printed = group_bfs(printed_pair(WREATH_PRINTED), keep_elements=True)
    disjoint = group_bfs(printed_pair(WREATH_DISJOINT), keep_elements=True)
    assert printed.order == 1296
    assert printed.elements == disjoint.elements
