import json

import pytest

from circuitsplit.core import CircularNetwork, is_noncrossing, parse_network, plain_network, serialize_network
from circuitsplit.errors import NetworkFormatError

from conftest import cactus6, triangle


def test_round_trip_preserves_everything(planar_nets, cactus_nets):
    for net in planar_nets[:20] + cactus_nets[:10] + [cactus6()]:
        assert parse_network(serialize_network(net)) == net


def test_serialization_is_deterministic():
    a = serialize_network(cactus6())
    assert a == serialize_network(parse_network(a))
    assert list(json.loads(a)) == sorted(json.loads(a))


@pytest.mark.parametrize("blocks, expected", [
    ([[1, 3], [2, 4]], False),
    ([[1, 2], [3, 4]], True),
    ([[1, 4], [2, 3]], True),
    ([[2, 5, 6], [3, 4], [1]], True),
    ([[1, 3, 5], [2, 6]], False),
])
def test_noncrossing(blocks, expected):
    assert is_noncrossing(blocks) is expected


@pytest.mark.parametrize("mutate, message", [
    (lambda d: d["edges"][0].update(c="0"), "positive"),
    (lambda d: d["edges"][0].update(c="inf"), "finite"),
    (lambda d: d["edges"][0].update(c=0.5), "exact"),
    (lambda d: d["boundary"].pop(), "missing"),
    (lambda d: d.update(extra=1), "unknown fields"),
    (lambda d: d["rotation"].update(P=[1, 2, None, 0]), "gap markers"),
    (lambda d: d["rotation"].update(c=[3]), "incident edges"),
])
def test_rejects_malformed_networks(mutate, message):
    data = cactus6().to_dict()
    mutate(data)
    with pytest.raises(NetworkFormatError, match=message):
        parse_network(json.dumps(data))


def test_rejects_crossing_identification():
    with pytest.raises(NetworkFormatError, match="crossing"):
        CircularNetwork(4, (("a", (1, 3)), ("b", (2, 4))))


def test_rejects_boundary_out_of_order():
    with pytest.raises(NetworkFormatError, match="clockwise"):
        CircularNetwork(2, (("b", (2,)), ("a", (1,))))


def test_multi_edges_and_loops_are_accepted():
    net = plain_network(2, [(1, 2, 1), (1, 2, 3), (1, 1, 2)])
    assert len(net.edges) == 3


def test_relabel_rotates_labels_and_gap_anchors():
    net = cactus6()
    shifted = net.relabel(1)
    assert shifted.labels_of("P") == (1, 3, 6)
    assert shifted.labels_of("a") == (2,)
    assert shifted.relabel(5) == net


def test_components():
    net = plain_network(4, [(1, 2, 1)])
    assert sorted(map(sorted, net.components())) == [["1", "2"], ["3"], ["4"]]
    assert len(triangle().components()) == 1
