"""Shared fixtures: golden hypergraphs and seeded random instance suites."""

import random
from fractions import Fraction

import pytest

from hypersched import DemandVector, Hypergraph, minimalize

# The running examples used throughout the tests:
#  - triangle: three links, one forbidden triple.
#  - star2x4: two 4-link edges sharing link 0; the smallest hypergraph where
#    the degree-style estimate underrates the worst case.
TRIANGLE = Hypergraph(3, ((0, 1, 2),))
STAR2X4 = Hypergraph(7, ((0, 1, 2, 3), (0, 4, 5, 6)))
STAR_TAU = DemandVector(
    (Fraction(1, 2), 1, 1, Fraction(1, 2), 1, 1, Fraction(1, 2))
)


@pytest.fixture
def triangle():
    return TRIANGLE


@pytest.fixture
def star2x4():
    return STAR2X4


@pytest.fixture
def star_tau():
    return STAR_TAU


def random_hypergraph(rng, max_links=10, max_edges=6, min_size=2, max_size=5,
                      min_links=2, min_edges=0):
    n = rng.randint(min_links, max_links)
    raw = []
    for _ in range(rng.randint(min_edges, max_edges)):
        size = rng.randint(min_size, min(max_size, n))
        raw.append(rng.sample(range(n), size))
    return minimalize(n, raw)


def random_graph(rng, max_links=10, max_edges=8):
    """2-uniform hypergraph with at least one edge."""
    n = rng.randint(2, max_links)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    count = rng.randint(1, min(max_edges, len(pairs)))
    return minimalize(n, rng.sample(pairs, count))


def random_demand(rng, n, small=False):
    if small:
        return DemandVector(tuple(Fraction(rng.randint(0, 3), 12) for _ in range(n)))
    den = rng.choice([2, 3, 4, 6])
    return DemandVector(tuple(Fraction(rng.randint(0, den), den) for _ in range(n)))


@pytest.fixture(scope="session")
def hypergraph_suite():
    """200 random minimalized hypergraphs, N <= 10, <= 6 edges of size 2..5."""
    rng = random.Random(0xBEEF)
    return [random_hypergraph(rng) for _ in range(200)]


@pytest.fixture(scope="session")
def pair_suite():
    """200 random (hypergraph, demand) pairs; smaller N keeps the exact LPs
    quick.  Half the demands are small so the sufficient conditions trigger."""
    rng = random.Random(0xCAFE)
    out = []
    for k in range(200):
        h = random_hypergraph(rng, max_links=7, max_edges=5)
        out.append((h, random_demand(rng, h.num_links, small=(k % 2 == 0))))
    return out


@pytest.fixture(scope="session")
def graph_suite():
    """50 random graphs encoded as 2-uniform hypergraphs."""
    rng = random.Random(0xF00D)
    return [random_graph(rng) for _ in range(50)]
