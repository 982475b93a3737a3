import numpy as np
import pytest

from digraph_workbench.cdd import (
    CddParams,
    cdd_build,
    cdd_diameter,
    cdd_to_gcd,
    factor_pair_conditions,
    gcd_build,
    linedigraph_as_gcd,
    params_from_companion,
    preserves_factor_pair,
    shift_isomorphism,
    tau,
    tau_is_automorphism,
    y_cycle_length,
)
from digraph_workbench.digraph import (
    automorphisms,
    complete_digraph,
    diameter,
    from_factors,
    is_isomorphism,
    isomorphic,
    line_digraph,
    reciprocal_edge_count,
)
from digraph_workbench.errors import CddError
from digraph_workbench.groupoid import alegre_factors, exotic6, g22_printed, g22_semi_direct, k3, kautz
from digraph_workbench.perm import (
    Permutation,
    SemiDirectPerm,
    conjugate,
    cycle_length_through,
    flatten,
    parse_cycles,
    transposition,
)

ALEGRE_CDD_Y = "(0,7,4,20,2,24,15,22,19,10,17,14,5,12,9)(1,21,16,11,6)(3,8,13,18,23)"


@pytest.fixture(scope='module')
def alegre_params():
    return CddParams(5, 5, parse_cycles("(0,2,4)", 5), (1, 4, 4, 1, 4))


def random_params(rng, count, largest=5):
    found = []
    while len(found) < count:
        a, b = (int(x) for x in rng.integers(2, largest + 1, size=2))
        pi = Permutation(tuple(int(x) for x in rng.permutation(a)))
        t = tuple(int(x) for x in rng.integers(0, b, size=a))
        try:
            found.append(CddParams(a, b, pi, t))
        except CddError:
            continue
    return found


def test_alegre_params_companion(alegre_params):
    built = cdd_build(alegre_params)
    assert built.Z == Permutation.shift(25, 1)
    assert built.Y == parse_cycles(ALEGRE_CDD_Y, 25)
    assert isomorphic(built.G, from_factors(alegre_factors())) is not None


def test_alegre_params_cycle_lengths(alegre_params):
    assert y_cycle_length(alegre_params, 0) == 15
    assert y_cycle_length(alegre_params, 1) == 5
    assert y_cycle_length(alegre_params, 3) == 5


def test_alegre_params_diameter_and_tau(alegre_params):
    assert cdd_diameter(alegre_params) == 4
    assert tau_is_automorphism(alegre_params)
    assert tau(alegre_params) == Permutation.shift(25, 5)


def test_offsets_reduced_mod_b():
    p = CddParams(2, 3, Permutation.identity(2), (4, 7))
    assert p.t == (1, 1)


def test_plus_two_on_six():
    p = CddParams(2, 3, Permutation.identity(2), (1, 1))
    assert cdd_build(p).Y == Permutation.shift(6, 2)
    assert cdd_diameter(p) == 3
    assert y_cycle_length(p, 0) == 3


def test_invalid_params():
    with pytest.raises(CddError):
        CddParams(1, 3, Permutation.identity(1), (1,))
    with pytest.raises(CddError):
        CddParams(2, 3, Permutation.identity(3), (1, 1))
    with pytest.raises(CddError):
        CddParams(2, 3, Permutation.identity(2), (1, 1, 1))


def test_fixed_point_reports_vertex():
    with pytest.raises(CddError, match="fixed point") as info:
        CddParams(2, 3, Permutation.identity(2), (0, 1))
    assert info.value.vertex == 0


def test_shared_z_edge_reports_vertex():
    with pytest.raises(CddError, match="shares") as info:
        CddParams(2, 3, Permutation((1, 0)), (0, 1))
    assert info.value.vertex == 0


def test_shift_once(alegre_params):
    once = shift_isomorphism(alegre_params)
    assert once.pi == parse_cycles("(0,1,3)", 5)
    assert once.t == (3, 1, 4, 0, 1)


def test_shift_twice_matches_alegre_factor(alegre_params):
    twice = shift_isomorphism(shift_isomorphism(alegre_params))
    assert twice.pi == parse_cycles("(4,1,2)", 5)
    assert twice.t == (1, 3, 1, 4, 0)
    assert cdd_build(twice).Y == alegre_factors()[1]


def test_shift_n_times_is_identity(alegre_params):
    p = alegre_params
    for _ in range(25):
        p = shift_isomorphism(p)
    assert p == alegre_params


def check_cdd_properties(p):
    built = cdd_build(p)
    for j in range(p.a):
        for i in range(p.b):
            assert y_cycle_length(p, j, i) == cycle_length_through(built.Y, i * p.a + j)
    assert tau_is_automorphism(p)
    assert cdd_diameter(p) == diameter(built.G)
    assert cdd_build(shift_isomorphism(p)).Y == conjugate(built.Y, Permutation.shift(p.n, 1))
    assert params_from_companion(built.Y, p.a, p.b) == p
    pair = cdd_to_gcd(p)
    assert flatten(pair.Z) == built.Z
    assert pair.Y == built.Y
    assert gcd_build(pair.Z, pair.T)[1] == built.G


def test_random_params_properties():
    rng = np.random.default_rng(8)
    for p in random_params(rng, 300):
        check_cdd_properties(p)


@pytest.mark.slow
def test_random_params_properties_large():
    rng = np.random.default_rng(18)
    for p in random_params(rng, 1500, largest=8):
        check_cdd_properties(p)


def test_params_from_companion_rejects_other_forms():
    with pytest.raises(CddError):
        params_from_companion(parse_cycles("(0,2,1)(4,5,3)", 6), 2, 3)
    with pytest.raises(CddError):
        params_from_companion(Permutation.shift(6, 2), 3, 3)


def test_g22_from_semi_direct_pair():
    Z, T = g22_semi_direct()
    pair, G = gcd_build(Z, T)
    assert G.n == 6
    assert diameter(G) == 2
    assert reciprocal_edge_count(G) == 0
    assert isomorphic(G, from_factors(g22_printed())) is not None


def test_gcd_build_rejects_fixed_points():
    Z, _ = g22_semi_direct()
    with pytest.raises(CddError, match="T has fixed point"):
        gcd_build(Z, SemiDirectPerm.identity(2, 3))
    with pytest.raises(CddError, match="Z has fixed point"):
        gcd_build(SemiDirectPerm.identity(2, 3), Z)
    with pytest.raises(CddError, match="dimension"):
        gcd_build(Z, SemiDirectPerm.identity(3, 2))


@pytest.mark.parametrize('G', [k3(), kautz(2, 2), from_factors(exotic6()), from_factors(alegre_factors())])
def test_linedigraph_as_gcd(G):
    pair = linedigraph_as_gcd(G)
    _, H = gcd_build(pair.Z, pair.T)
    assert H.n == 2 * G.n
    assert isomorphic(H, line_digraph(G)) is not None
    assert diameter(H) == diameter(G) + 1


def test_linedigraph_as_gcd_kautz_chain():
    pair = linedigraph_as_gcd(kautz(2, 2))
    _, H = gcd_build(pair.Z, pair.T)
    assert isomorphic(H, kautz(2, 3)) is not None


def test_linedigraph_as_gcd_needs_degree_two():
    with pytest.raises(CddError):
        linedigraph_as_gcd(complete_digraph(4))


def test_factor_pair_identity_and_tau(alegre_params):
    built = cdd_build(alegre_params)
    assert factor_pair_conditions(built.Z, built.Y, Permutation.identity(25)) == ['B1'] * 25
    assert factor_pair_conditions(built.Z, built.Y, tau(alegre_params)) == ['B1'] * 25
    assert preserves_factor_pair(built.Z, built.Y, tau(alegre_params))


def test_factor_pair_matches_automorphisms():
    Z, Y = exotic6()
    G = from_factors([Z, Y])
    for alpha in automorphisms(G):
        assert preserves_factor_pair(Z, Y, alpha)


def test_factor_pair_random_transpositions():
    Z, Y = alegre_factors()
    G = from_factors([Z, Y])
    rng = np.random.default_rng(9)
    for _ in range(100):
        x, y = (int(v) for v in rng.choice(25, size=2, replace=False))
        alpha = transposition(25, x, y)
        assert preserves_factor_pair(Z, Y, alpha) == is_isomorphism(G, G, alpha)
