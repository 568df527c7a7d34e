import json
from pathlib import Path

import pytest

from circuitsplit.core import CircularNetwork, parse_matrix, parse_network, plain_network
from circuitsplit.generate import cactus_corpus, planar_corpus

DATA = Path(__file__).parent / "data"

PLANAR_SEED = 20240611
CACTUS_SEED = 20240612


def load_matrix(name):
    return parse_matrix(json.loads((DATA / f"{name}.json").read_text()))


def load_network(name):
    return parse_network((DATA / f"{name}.json").read_text())


def triangle(c12=1, c23=1, c13=1):
    return plain_network(3, [(1, 2, c12), (2, 3, c23), (1, 3, c13)],
                         rotation={"1": [0, 2], "2": [1, 0], "3": [2, 1]})


def single_edge(c=1):
    return plain_network(2, [(1, 2, c)], rotation={"1": [0], "2": [0]})


def cactus6():
    return load_network("cactus6_network")


@pytest.fixture(scope="session")
def planar_nets():
    return planar_corpus(PLANAR_SEED, 100)


@pytest.fixture(scope="session")
def cactus_nets():
    return cactus_corpus(CACTUS_SEED, 30)
