import pytest

from digraph_workbench.digraph import (
    automorphism_order,
    diameter,
    from_factors,
    isomorphic,
    line_digraph,
    reciprocal_edge_count,
)
from digraph_workbench.errors import SearchError
from digraph_workbench.groupoid import exotic6, g22_printed, kautz
from digraph_workbench.perm import Permutation
from digraph_workbench.search import (
    SearchSpec,
    class_summary,
    deduplicate,
    enumerate_digraphs,
    kautz_size,
    moore_bound,
    random_search,
)


def companion_digraph(n, Y):
    return from_factors([Permutation.shift(n, 1), Y])


def six_vertex_classes():
    return [kautz(2, 2), from_factors(g22_printed()), from_factors(exotic6())]


def test_bounds():
    assert moore_bound(2, 3) == 15
    assert moore_bound(2, 2) == 7
    assert kautz_size(2, 3) == 12
    assert kautz_size(2, 2) == 6
    with pytest.raises(SearchError):
        moore_bound(0, 2)
    with pytest.raises(SearchError):
        kautz_size(2, 0)


@pytest.mark.parametrize('kwargs', [
    {'n': 2, 'diameter_target': 2},
    {'n': 6, 'diameter_target': 0},
    {'n': 6, 'diameter_target': 2, 'mode': 'greedy'},
    {'n': 6, 'diameter_target': 2, 'threads': 0},
])
def test_spec_validation(kwargs):
    with pytest.raises(SearchError):
        SearchSpec(**kwargs)


def test_three_vertices():
    result = enumerate_digraphs(SearchSpec(3, 2, mode='exhaustive'))
    assert result.representatives == [Permutation((2, 0, 1))]
    assert not result.incomplete


def test_four_vertices_diameter_one_is_empty():
    result = enumerate_digraphs(SearchSpec(4, 1, mode='exhaustive'))
    assert result.representatives == []


@pytest.mark.parametrize('mode', ['exhaustive', 'pruned'])
def test_six_vertices_diameter_two(mode):
    result = enumerate_digraphs(SearchSpec(6, 2, mode=mode))
    graphs = [companion_digraph(6, Y) for Y in result.representatives]
    assert len(graphs) == 3
    for G in graphs:
        assert diameter(G) <= 2
        assert sum(isomorphic(G, H) is not None for H in six_vertex_classes()) == 1
    assert sorted(reciprocal_edge_count(G) > 0 for G in graphs) == [False, False, True]


def test_pruned_visits_fewer_nodes():
    exhaustive = enumerate_digraphs(SearchSpec(6, 2, mode='exhaustive'))
    pruned = enumerate_digraphs(SearchSpec(6, 2, mode='pruned'))
    assert pruned.stats.nodes < exhaustive.stats.nodes


def test_threads_give_same_classes():
    single = enumerate_digraphs(SearchSpec(6, 2, mode='pruned'))
    pooled = enumerate_digraphs(SearchSpec(6, 2, mode='pruned', threads=2))
    assert pooled.representatives == single.representatives


def test_without_dedup_keeps_every_companion():
    raw = enumerate_digraphs(SearchSpec(6, 2, mode='exhaustive', dedup=False))
    assert len(raw.representatives) > 3
    assert deduplicate(6, [Y.images for Y in raw.representatives]) == \
        enumerate_digraphs(SearchSpec(6, 2, mode='exhaustive')).representatives


def test_node_cap_marks_incomplete():
    result = enumerate_digraphs(SearchSpec(6, 2, mode='exhaustive', max_nodes=3))
    assert result.incomplete


@pytest.mark.slow
def test_twelve_vertices_diameter_three():
    result = enumerate_digraphs(SearchSpec(12, 3, mode='pruned'))
    graphs = [companion_digraph(12, Y) for Y in result.representatives]
    assert len(graphs) == 3
    lines = [line_digraph(H) for H in six_vertex_classes()]
    for G in graphs:
        assert any(isomorphic(G, L) is not None for L in lines)
    assert sorted(automorphism_order(G) for G in graphs) == [3, 4, 6]


def test_random_search_is_deterministic():
    first = random_search(SearchSpec(6, 2, mode='random', seed=3))
    second = random_search(SearchSpec(6, 2, mode='random', seed=3))
    assert first.representatives == second.representatives
    assert len(first.representatives) == 1
    assert first.best_score == 0
    assert diameter(companion_digraph(6, first.representatives[0])) <= 2


@pytest.mark.slow
def test_random_search_alegre_size():
    spec = SearchSpec(25, 4, mode='random', seed=4, restarts=20, steps=300)
    result = random_search(spec)
    assert random_search(spec).representatives == result.representatives
    if result.representatives:
        assert result.best_score == 0
        G = companion_digraph(25, result.representatives[0])
        assert G.d == 2 and diameter(G) <= 4
    else:
        assert result.best_score > 0
    assert result.stats.nodes <= 20 * 300


def test_random_mode_dispatch():
    result = enumerate_digraphs(SearchSpec(6, 2, mode='random', seed=5))
    assert len(result.representatives) == 1


def test_random_search_failure():
    result = random_search(SearchSpec(4, 1, mode='random', restarts=3, steps=20))
    assert result.representatives == []
    assert result.best_score > 0


def test_class_summary():
    summary = class_summary(3, Permutation((2, 0, 1)))
    assert summary == {
        'companion': '(0,2,1)',
        'automorphisms': 6,
        'reciprocal_edges': 6,
        'cycle_type': (3,),
        'diameter': 1,
    }
