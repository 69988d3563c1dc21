"""Shared helpers: brute-force oracles and random instance builders.

The oracles deliberately avoid the library's search code paths: existence
checks enumerate subsets outright, maxima walk the full power set with a
Gray-code degree update.
"""

import random
from itertools import combinations

import pytest

from shallowhit import Hypergraph


def brute_force_has_shallow_hitting(h: Hypergraph, t: int) -> bool:
    """Existence of a t-shallow hitting edge set by subset enumeration."""
    for size in range(0, h.m + 1):
        for sub in combinations(range(h.m), size):
            deg = [0] * h.n
            for j in sub:
                for v in h.edges[j]:
                    deg[v] += 1
            if all(1 <= d <= t for d in deg):
                return True
    return False


def brute_force_max_shallow(h: Hypergraph, t: int) -> int:
    """Maximum t-shallow edge set size by full 2^m enumeration.

    Gray-code walk: one edge flips per step, degree array updated
    incrementally, violations tracked by a counter.
    """
    assert h.m <= 20
    deg = [0] * h.n
    over = 0  # number of vertices with deg > t
    size = 0
    best = 0
    member = [False] * h.m
    for g in range(1, 1 << h.m):
        j = (g ^ (g >> 1)) ^ ((g - 1) ^ ((g - 1) >> 1))
        j = j.bit_length() - 1
        if member[j]:
            member[j] = False
            size -= 1
            for v in h.edges[j]:
                deg[v] -= 1
                if deg[v] == t:
                    over -= 1
        else:
            member[j] = True
            size += 1
            for v in h.edges[j]:
                deg[v] += 1
                if deg[v] == t + 1:
                    over += 1
        if over == 0 and size > best:
            best = size
    return best


def random_hypergraph(rng: random.Random, max_n=8, max_m=10, max_edge=4) -> Hypergraph:
    n = rng.randrange(1, max_n + 1)
    m = rng.randrange(0, max_m + 1)
    edges = []
    for _ in range(m):
        size = rng.randrange(1, min(n, max_edge) + 1)
        edges.append(sorted(rng.sample(range(n), size)))
    return Hypergraph(n, edges)


def random_uniform_hypergraph(rng: random.Random, n: int, r: int, p: float) -> Hypergraph:
    edges = [c for c in combinations(range(n), r) if rng.random() < p]
    return Hypergraph(n, edges)


def random_partite_hypergraph(rng: random.Random, n: int, r: int, p: float) -> Hypergraph:
    from itertools import product

    edges = []
    for coords in product(range(n), repeat=r):
        if rng.random() < p:
            edges.append([i * n + c for i, c in enumerate(coords)])
    parts = [i for i in range(r) for _ in range(n)]
    return Hypergraph(r * n, edges, parts)


def random_bipartite_simple(rng: random.Random, na: int, nb: int, p: float) -> Hypergraph:
    edges = []
    for a in range(na):
        for b in range(nb):
            if rng.random() < p:
                edges.append((a, na + b))
    return Hypergraph(na + nb, edges, [0] * na + [1] * nb)


@pytest.fixture
def rng():
    return random.Random(12345)
