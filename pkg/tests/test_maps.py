from fractions import Fraction

import pytest
import sympy

from circuitsplit.core import INF, CompactifiedSplitSystem, ExtRat, WeightedSplitSystem, plain_network
from circuitsplit.electrical import resistance_matrix, response_matrix
from circuitsplit.errors import EmbeddingError, NotKalmansonError, SizeGuardError
from circuitsplit.maps import (chord_of_split, enumerate_groves, kron_edge_split, rho, sigma, xi,
                               xi_prime)
from circuitsplit.splits import metric_of_splits

from conftest import cactus6, load_matrix, single_edge, triangle


def sides(part):
    return {tuple(sorted(s)): w for s, w in part.splits}


def test_kron_edge_splits():
    assert kron_edge_split(1, 3, 5) == frozenset({2, 3})
    assert kron_edge_split(1, 3, 5, prime=True) == frozenset({1, 2})
    assert kron_edge_split(2, 5, 5, prime=True) == frozenset({2, 3, 4})


def test_chord_of_split_inverts_both_maps():
    order = tuple(range(1, 7))
    for i in range(1, 7):
        for j in range(i + 1, 7):
            for prime in (False, True):
                side = kron_edge_split(i, j, 6, prime)
                assert chord_of_split(side, order, prime) == (i, j)
                # the complementary side names the same chord
                assert chord_of_split(frozenset(order) - side, order, prime) == (i, j)


def test_xi_of_triangle():
    sys = xi(triangle(1, 2, 3))
    # edges {1,2}:1, {2,3}:2, {1,3}:3
    assert sides(sys.parts[0]) == {(2,): 1, (3,): 2, (2, 3): 3}
    sys = xi_prime(triangle(1, 2, 3))
    assert sides(sys.parts[0]) == {(2,): 2, (2, 3): 1, (3,): 3}


def test_xi_of_cactus_example():
    sys = xi(cactus6())
    assert sys.partition == ((1, 2), (3, 4, 5), (6,))
    assert sides(sys.parts[0]) == {(2,): 1}
    assert sides(sys.parts[1]) == {(4,): 1, (5,): 1, (4, 5): 1}


def test_xi_prime_of_octagon_response():
    sys = xi_prime(load_matrix("octagon_response"))
    part = sides(sys.parts[0])
    assert part[(2, 3, 4, 5)] == Fraction(15, 28)
    assert part[(2, 3, 4, 5, 6, 7, 8)] == Fraction(11, 28)


def test_xi_of_edgeless_network_is_one_part_without_splits():
    net = plain_network(3, [])
    sys = xi(net)
    assert sys.partition == ((1, 2, 3),) and sys.split_count() == 0


def test_rho_and_sigma_of_cactus_example():
    expected = {(3,): Fraction(1, 3), (4,): Fraction(1, 3), (3, 4): Fraction(1, 3), (2, 3, 4, 5, 6): 1}
    assert sides(rho(cactus6()).parts[0]) == expected
    assert sigma(cactus6()) == rho(cactus6())
    assert metric_of_splits(rho(cactus6())) == load_matrix("cactus6_resistance")


def test_rho_of_cactus_dual_resistance():
    sys = rho(load_matrix("cactus6_dual_resistance"))
    assert sys.partition == ((1, 2), (3, 4, 5), (6,))
    assert sides(sys.parts[1]) == {(4,): 1, (5,): 1, (4, 5): 1}


def test_rho_rejects_non_kalmanson():
    with pytest.raises(NotKalmansonError) as err:
        rho(load_matrix("nonplanar5_resistance"))
    assert err.value.witness == (1, 2, 3, 4)


def test_rho_in_found_order():
    w = load_matrix("nonplanar5_resistance")
    sys = rho(w, (1, 3, 2, 4, 5))
    assert sys.order == (1, 3, 2, 4, 5)
    assert metric_of_splits(sys) == w


def weighted_tree_total(net):
    """Matrix-tree theorem: determinant of the Laplacian with one vertex removed."""
    ids = list(net.vertex_ids)
    lap = sympy.zeros(len(ids), len(ids))
    for e in net.edges:
        if e.u == e.v:
            continue
        i, j = ids.index(e.u), ids.index(e.v)
        c = sympy.Rational(e.c.numerator, e.c.denominator)
        lap[i, i] += c
        lap[j, j] += c
        lap[i, j] -= c
        lap[j, i] -= c
    det = lap[1:, 1:].det() if len(ids) > 1 else sympy.Integer(1)
    return Fraction(int(sympy.fraction(det)[0]), int(sympy.fraction(det)[1]))


def test_spanning_tree_weights_match_matrix_tree_theorem(planar_nets):
    for net in planar_nets:
        if len(net.components()) != 1:
            continue
        groves = enumerate_groves(net, 1)
        assert sum((g.weight for g in groves), Fraction(0)) == weighted_tree_total(net)


def test_two_groves_of_triangle():
    groves = enumerate_groves(triangle(), 2)
    # one edge kept, the isolated label forms the second tree
    assert len(groves) == 3
    assert {g.partition for g in groves} == {((1,), (2, 3)), ((1, 2), (3,)), ((1, 3), (2,))}


def test_sigma_of_single_edge():
    sys = sigma(single_edge(Fraction(4)))
    assert sides(sys.parts[0]) == {(2,): Fraction(1, 4)}


def test_sigma_requires_embedding():
    with pytest.raises(EmbeddingError):
        sigma(triangle().without_embedding())


def test_sigma_size_guard():
    net = plain_network(2, [(1, 2, 1)] * 17)
    with pytest.raises(SizeGuardError):
        sigma(net, check_planar=False)


def test_sigma_equals_rho_on_corpus(planar_nets):
    for net in planar_nets[:40]:
        assert sigma(net) == rho(net), net


def test_images_are_compactified_systems(planar_nets, cactus_nets):
    for net in planar_nets[:30] + cactus_nets[:10]:
        for s in (xi(net), xi_prime(net), rho(net)):
            assert isinstance(s, CompactifiedSplitSystem)
            assert all(isinstance(p, WeightedSplitSystem) for p in s.parts)


def delete_edge(net, k):
    edges = [e for x, e in enumerate(net.edges) if x != k]
    return type(net)(net.n, net.boundary, net.interior, tuple((e.u, e.v, e.c) for e in edges))


def contract_edge(net, k):
    """Merge the interior endpoint of edge k into its other endpoint (no embedding kept)."""
    e = net.edges[k]
    gone, keep = (e.u, e.v) if not net.is_boundary(e.u) else (e.v, e.u)
    edges = [(keep if x.u == gone else x.u, keep if x.v == gone else x.v, x.c)
             for y, x in enumerate(net.edges) if y != k]
    interior = tuple(v for v in net.interior if v != gone)
    return type(net)(net.n, net.boundary, interior, tuple(edges))


def split_sets(sys):
    return {p.labels: p.sides() for p in sys.parts}


def test_minors_display_fewer_splits(planar_nets):
    checked = 0
    for net in planar_nets:
        big = split_sets(xi(net))
        for k, e in enumerate(net.edges):
            minors = [delete_edge(net, k)]
            if not (net.is_boundary(e.u) and net.is_boundary(e.v)) and e.u != e.v:
                minors.append(contract_edge(net, k))
            for minor in minors:
                small = split_sets(xi(minor))
                assert small.keys() == big.keys()
                assert all(small[p] <= big[p] for p in small)
                checked += 1
    assert checked > 100
