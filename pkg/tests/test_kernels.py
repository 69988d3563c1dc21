"""Backend parity and oracle agreement for the exact-search kernels."""

import random

import pytest

from shallowhit._kernel import _exact_py

try:
    from shallowhit._kernel import _exact as _exact_c
except ImportError:
    _exact_c = None

from shallowhit import Hypergraph, codegree_gadget_uniform, projective_truncated

from conftest import (
    brute_force_has_shallow_hitting,
    brute_force_max_shallow,
    random_hypergraph,
)

needs_ext = pytest.mark.skipif(_exact_c is None, reason="extension not built")


@needs_ext
def test_backends_identical_on_fuzz():
    rng = random.Random(99)
    for _ in range(250):
        h = random_hypergraph(rng, max_n=8, max_m=10)
        t = rng.randrange(1, 4)
        budget = rng.choice([-1, -1, 3, 40])
        py = _exact_py.shallow_hitting(h.n, h.edges, h.incidence, t, budget)
        cy = _exact_c.shallow_hitting(h.n, h.edges, h.incidence, t, budget)
        assert py == cy
        py = _exact_py.max_shallow(h.n, h.edges, h.incidence, t, budget)
        cy = _exact_c.max_shallow(h.n, h.edges, h.incidence, t, budget)
        assert py == cy


@needs_ext
def test_backends_identical_on_structured():
    for h, t in [
        (projective_truncated(2), 1),
        (projective_truncated(2), 2),
        (projective_truncated(3), 2),
        (codegree_gadget_uniform(12, 3, 2), 2),
    ]:
        assert _exact_py.shallow_hitting(
            h.n, h.edges, h.incidence, t, -1
        ) == _exact_c.shallow_hitting(h.n, h.edges, h.incidence, t, -1)


def test_hitting_against_enumeration_oracle():
    rng = random.Random(5)
    for _ in range(150):
        h = random_hypergraph(rng, max_n=7, max_m=8)
        t = rng.randrange(1, 4)
        status, chosen, _ = _exact_py.shallow_hitting(h.n, h.edges, h.incidence, t, -1)
        assert (status == _exact_py.SAT) == brute_force_has_shallow_hitting(h, t)
        if status == _exact_py.SAT:
            deg = [0] * h.n
            for j in chosen:
                for v in h.edges[j]:
                    deg[v] += 1
            assert all(1 <= d <= t for d in deg)


def test_max_against_enumeration_oracle():
    rng = random.Random(6)
    for _ in range(120):
        h = random_hypergraph(rng, max_n=7, max_m=9)
        t = rng.randrange(1, 4)
        best, chosen, optimal, _ = _exact_py.max_shallow(
            h.n, h.edges, h.incidence, t, -1
        )
        assert optimal
        assert best == brute_force_max_shallow(h, t) if h.m else best == 0
        deg = [0] * h.n
        for j in chosen:
            for v in h.edges[j]:
                deg[v] += 1
        assert len(chosen) == best and all(d <= t for d in deg)


def test_budget_gaveup_never_lies():
    rng = random.Random(17)
    for _ in range(80):
        h = random_hypergraph(rng, max_n=7, max_m=9)
        t = rng.randrange(1, 3)
        status, chosen, nodes = _exact_py.shallow_hitting(
            h.n, h.edges, h.incidence, t, 4
        )
        if status == _exact_py.UNSAT:
            assert not brute_force_has_shallow_hitting(h, t)
        elif status == _exact_py.SAT:
            assert chosen is not None
        else:
            assert nodes >= 4


def test_empty_and_trivial_inputs():
    empty = Hypergraph(0, [])
    assert _exact_py.shallow_hitting(0, (), (), 1, -1)[0] == _exact_py.SAT
    assert _exact_py.max_shallow(0, (), (), 1, -1)[0] == 0
    isolated = Hypergraph(1, [])
    assert (
        _exact_py.shallow_hitting(
            isolated.n, isolated.edges, isolated.incidence, 1, -1
        )[0]
        == _exact_py.UNSAT
    )
