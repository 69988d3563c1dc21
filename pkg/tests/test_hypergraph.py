"""Core data model: construction, stats, girth, dual, selections, I/O."""

import json
import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shallowhit import (
    EdgeSelection,
    FormatError,
    Hypergraph,
    dual,
    girth_less_than_4,
    isomorphic,
    load_hypergraph,
    neighborhood,
    projective_full,
    projective_truncated,
    save_hypergraph,
    selection_to_2coloring,
    short_cycle,
    stats,
    verify_selection,
)
from shallowhit.hypergraph import from_text, to_text, to_json_dict, from_json_dict

from conftest import random_hypergraph


# -- construction invariants ------------------------------------------------


def test_edges_normalized_and_validated():
    h = Hypergraph(4, [(2, 0, 1), (3,)])
    assert h.edges == ((0, 1, 2), (3,))
    with pytest.raises(ValueError):
        Hypergraph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Hypergraph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Hypergraph(3, [()])


def test_parts_validation():
    Hypergraph(4, [(0, 2)], parts=[0, 0, 1, 1])
    with pytest.raises(ValueError):
        Hypergraph(4, [(0, 1)], parts=[0, 0, 1, 1])  # edge meets part 0 twice
    with pytest.raises(ValueError):
        Hypergraph(4, [(0, 2)], parts=[0, 0, 1])  # wrong length


def test_parallel_edges_kept_distinct():
    h = Hypergraph(2, [(0, 1), (0, 1)])
    assert h.m == 2
    assert h.incidence == ((0, 1), (0, 1))


# -- stats ------------------------------------------------------------------


def test_stats_complete_3_uniform_on_5():
    h = Hypergraph(5, combinations(range(5), 3))
    s = stats(h, with_codegree=True)
    assert s.r_uniform == 3
    assert s.min_codegree == 3  # every pair extends by any third vertex
    assert s.min_degree == s.max_degree == 6
    assert s.degree_ratio == 1


def test_stats_single_edge():
    h = Hypergraph(2, [(0, 1)])
    s = stats(h)
    assert (s.min_degree, s.max_degree, s.r_uniform) == (1, 1, 2)


def test_stats_truncated_projective():
    h = projective_truncated(2)
    s = stats(h)
    assert s.r_uniform == 3
    assert s.min_degree == s.max_degree == 2
    assert h.num_parts == 3
    members = h.part_members()
    assert all(len(p) == 2 for p in members)


def test_stats_degenerate_degree_zero():
    h = Hypergraph(3, [(0, 1)])
    s = stats(h)
    assert s.min_degree == 0
    assert s.degree_ratio is None


def test_codegree_cap_guard():
    h = Hypergraph(40, [tuple(range(10))])
    with pytest.raises(ValueError):
        stats(h, with_codegree=True, subset_cap=10)


def test_handshake_property(rng):
    for _ in range(50):
        h = random_hypergraph(rng)
        assert sum(h.degrees()) == sum(len(e) for e in h.edges)


# -- neighborhood -----------------------------------------------------------


def test_neighborhood_complete():
    h = Hypergraph(5, combinations(range(5), 3))
    assert neighborhood(h, (0, 1)) == {2, 3, 4}


def test_neighborhood_truncated_singleton():
    h = projective_truncated(2)
    # find a cross-part pair lying in exactly one edge
    found = False
    for pair in combinations(range(h.n), 2):
        if h.parts[pair[0]] == h.parts[pair[1]]:
            continue
        count = sum(1 for e in h.edges if set(pair) <= set(e))
        if count == 1:
            assert len(neighborhood(h, pair)) == 1
            found = True
            break
    assert found


def test_neighborhood_empty_and_errors():
    h = Hypergraph(4, [(0, 1, 2)])
    assert neighborhood(h, (1, 3)) == set()
    with pytest.raises(ValueError):
        neighborhood(h, (0,))


# -- girth ------------------------------------------------------------------


def test_girth_4_cycle_graph():
    c4 = Hypergraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert not girth_less_than_4(c4)


def test_girth_parallel_edges():
    h = Hypergraph(2, [(0, 1), (0, 1)])
    w = short_cycle(h)
    assert w is not None and w.length == 2


def test_girth_fano_triangle():
    fano = projective_full(2)
    w = short_cycle(fano)
    assert w is not None
    if w.length == 3:
        i, j, k = w.edges
        u, x, v = w.vertices
        assert u in fano.edges[i] and u in fano.edges[j]
        assert x in fano.edges[j] and x in fano.edges[k]
        assert v in fano.edges[k] and v in fano.edges[i]


def test_girth_false_implies_linear(rng):
    # no witness => all pairwise intersections <= 1
    for _ in range(30):
        h = random_hypergraph(rng, max_n=7, max_m=7)
        if short_cycle(h) is None:
            for a in range(h.m):
                for b in range(a + 1, h.m):
                    assert len(set(h.edges[a]) & set(h.edges[b])) <= 1


# -- dual -------------------------------------------------------------------


def test_dual_single_edge():
    h = Hypergraph(2, [(0, 1)])
    d = dual(h)
    assert d.n == 1
    assert d.edges == ((0,), (0,))


def test_dual_involution(rng):
    for _ in range(40):
        h = random_hypergraph(rng)
        if h.m == 0 or min(h.degrees(), default=0) == 0:
            continue
        assert dual(dual(h)) == Hypergraph(h.n, h.edges)


def test_dual_rejects_isolated_vertex():
    with pytest.raises(ValueError):
        dual(Hypergraph(3, [(0, 1)]))


def test_dual_preserves_incidence_counts(rng):
    for _ in range(20):
        h = random_hypergraph(rng)
        if min(h.degrees(), default=0) == 0:
            continue
        d = dual(h)
        assert tuple(len(e) for e in d.edges) == h.degrees()
        assert d.degrees() == tuple(len(e) for e in h.edges)


def test_dual_fano_self_dual():
    fano = projective_full(2)
    assert isomorphic(dual(fano), fano)


# -- selections -------------------------------------------------------------


def test_selection_degree_cache(rng):
    for _ in range(30):
        h = random_hypergraph(rng)
        if h.m == 0:
            continue
        sel = EdgeSelection(h)
        chosen = set()
        for _step in range(10):
            j = rng.randrange(h.m)
            if j in chosen:
                sel.remove(j)
                chosen.discard(j)
            else:
                sel.add(j)
                chosen.add(j)
            expect = [0] * h.n
            for x in chosen:
                for v in h.edges[x]:
                    expect[v] += 1
            assert sel.deg == expect


def test_verify_selection_truncated():
    h = projective_truncated(2)
    full = EdgeSelection(h, range(4))
    rep = verify_selection(full, 2)
    assert rep.is_t_shallow and rep.is_hitting and rep.max_deg == 2

    empty = EdgeSelection(h)
    rep = verify_selection(empty, 1)
    assert rep.is_t_shallow and not rep.is_hitting
    assert len(rep.uncovered) == h.n

    single = EdgeSelection(h, [0])
    rep = verify_selection(single, 1)
    assert rep.is_t_shallow and not rep.is_hitting
    assert len(rep.uncovered) == 3


def test_verify_selection_monotone_in_t(rng):
    for _ in range(30):
        h = random_hypergraph(rng)
        if h.m == 0:
            continue
        sel = EdgeSelection(h, rng.sample(range(h.m), rng.randrange(h.m + 1)))
        for t in range(1, 5):
            if verify_selection(sel, t).is_t_shallow:
                assert verify_selection(sel, t + 1).is_t_shallow


# -- selection <-> 2-coloring of the dual ------------------------------------


def test_coloring_perfect_matching_case():
    h = Hypergraph(4, [(0, 1), (2, 3)])
    sel = EdgeSelection(h, [0, 1])
    col = selection_to_2coloring(sel, 2)
    assert col.proper  # every incidence set has exactly one chosen element
    assert col.colors == (True, True)


def test_coloring_full_selection_on_regular_host():
    h = projective_truncated(2)  # 2-regular
    sel = EdgeSelection(h, range(h.m))
    col = selection_to_2coloring(sel, 2)  # allows up to t-1 = 1 per dual edge
    assert not col.proper


def test_coloring_matches_predicates(rng):
    for _ in range(40):
        h = random_hypergraph(rng, max_n=6, max_m=6)
        if h.m == 0:
            continue
        t = rng.randrange(2, 5)
        sel = EdgeSelection(h, rng.sample(range(h.m), rng.randrange(h.m + 1)))
        rep = verify_selection(sel, t - 1)
        col = selection_to_2coloring(sel, t)
        assert col.proper == (rep.is_hitting and rep.is_t_shallow)


# -- isomorphism ------------------------------------------------------------


def test_isomorphic_relabels(rng):
    h = Hypergraph(5, [(0, 1, 2), (2, 3), (3, 4)])
    perm = [3, 0, 4, 1, 2]
    relabeled = Hypergraph(5, [sorted(perm[v] for v in e) for e in h.edges])
    assert isomorphic(h, relabeled)
    assert not isomorphic(h, Hypergraph(5, [(0, 1, 2), (2, 3), (2, 4)]))


def test_isomorphic_guard():
    big = Hypergraph(11, [(0, 1)])
    with pytest.raises(ValueError):
        isomorphic(big, big)


# -- file formats -----------------------------------------------------------


def test_text_round_trip(rng, tmp_path):
    for i in range(25):
        h = random_hypergraph(rng)
        path = tmp_path / f"h{i}.txt"
        save_hypergraph(h, path)
        assert load_hypergraph(path) == h
        # bit-exact: rewriting the parsed value reproduces the file
        assert to_text(from_text(to_text(h))) == to_text(h)


def test_json_round_trip(rng, tmp_path):
    h = projective_truncated(2)
    path = tmp_path / "h.json"
    save_hypergraph(h, path, fmt="json")
    assert load_hypergraph(path) == h
    blob = json.dumps(to_json_dict(h), sort_keys=True)
    assert json.dumps(to_json_dict(from_json_dict(json.loads(blob))), sort_keys=True) == blob


def test_text_errors_name_lines():
    with pytest.raises(FormatError, match="line 1"):
        from_text("X 1 2 3\n")
    with pytest.raises(FormatError, match="line 3"):
        from_text("H 3 2 0\n0 1\n")
    with pytest.raises(FormatError, match="line 2"):
        from_text("H 3 1 2\n0 0\n0 1\n")


# -- hypothesis property tests ----------------------------------------------


@st.composite
def hypergraphs(draw):
    n = draw(st.integers(min_value=1, max_value=7))
    m = draw(st.integers(min_value=0, max_value=8))
    edges = []
    for _ in range(m):
        size = draw(st.integers(min_value=1, max_value=min(n, 3)))
        edges.append(draw(st.permutations(range(n)))[:size])
    return Hypergraph(n, edges)


@given(hypergraphs())
@settings(max_examples=60, deadline=None)
def test_prop_handshake(h):
    assert sum(h.degrees()) == sum(len(e) for e in h.edges)


@given(hypergraphs())
@settings(max_examples=60, deadline=None)
def test_prop_dual_involution(h):
    if h.m > 0 and min(h.degrees()) > 0:
        assert dual(dual(h)) == Hypergraph(h.n, h.edges)


@given(hypergraphs(), st.integers(min_value=1, max_value=4))
@settings(max_examples=60, deadline=None)
def test_prop_text_round_trip(h, t):
    assert from_text(to_text(h)) == h
