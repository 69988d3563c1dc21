"""Greedy augmentation solvers driven by co-degree lower bounds.

Both solvers grow a t-shallow edge set until it hits every vertex, applying
exchange moves that strictly shrink the uncovered region.  Under the
co-degree hypotheses (uniform: ceil(n/k) with k=(r-1)t+1; partite:
ceil(n/k)+1) every move is guaranteed to be available, so the loops
terminate with a verified SAT; otherwise they raise StuckError naming the
step that failed, which is a diagnostic, never a wrong answer.

The uniform solver keeps the invariant that every chosen edge has at most
one vertex covered twice or more; the partite solver keeps the uncovered
count equal across parts and its size within ceil(n/k)*(t-1) + n - n0.
"""

from __future__ import annotations

import time
from typing import Optional

from .errors import StuckError
from .hypergraph import EdgeSelection, Hypergraph
from .solvers import SolveOutcome, SolveStatus, _checked_sat

__all__ = ["codegree_augment_uniform", "codegree_augment_partite"]


def _edge_index_lookup(h: Hypergraph) -> dict:
    lookup: dict = {}
    for j, e in enumerate(h.edges):
        lookup.setdefault(frozenset(e), []).append(j)
    return lookup


def _unchosen_index(lookup, sel, vertex_set) -> int:
    for j in lookup.get(frozenset(vertex_set), ()):
        if j not in sel.chosen:
            return j
    raise StuckError(f"no unchosen edge with vertex set {sorted(vertex_set)}")


def _uniformity(h: Hypergraph) -> int:
    sizes = {len(e) for e in h.edges}
    if len(sizes) != 1:
        raise ValueError("requires a uniform hypergraph")
    return sizes.pop()


def _extensions(h: Hypergraph, hat) -> list:
    """Vertices extending the set ``hat`` to an edge, ascending."""
    hat_set = frozenset(hat)
    out = set()
    for e in h.edges:
        es = frozenset(e)
        if hat_set < es and len(es) == len(hat_set) + 1:
            out |= es - hat_set
    return sorted(out)


def _pick_low_degree(sel, candidates, t, allow=()):
    """Candidate with degree < t (or whitelisted), minimal degree then id."""
    ok = [v for v in candidates if sel.deg[v] < t or v in allow]
    if not ok:
        return None
    return min(ok, key=lambda v: (sel.deg[v], v))


def codegree_augment_uniform(h: Hypergraph, t: int) -> SolveOutcome:
    """t-shallow hitting edge set by the four-case uniform exchange.

    While at least r-1 vertices are uncovered, take the first r-1 of them,
    extend by a vertex v of degree < t and either add the new edge, or swap
    it for v's unique edge when that edge already carries a deep vertex.
    When 0 < n0 <= r-2 remain, one mixed set of the uncovered plus covered
    low-degree vertices finishes.  Guaranteed to run to SAT when the
    co-degree is at least ceil(n/k), k=(r-1)t+1.
    """
    if t < 2:
        raise ValueError("t must be >= 2")
    r = _uniformity(h)
    start = time.perf_counter()
    lookup = _edge_index_lookup(h)
    sel = EdgeSelection(h)
    moves = 0
    cap = 4 * h.n + 20
    while True:
        uncovered = [v for v in range(h.n) if sel.deg[v] == 0]
        if not uncovered:
            break
        if moves > cap:
            raise StuckError("progress cap exceeded; exchange moves are looping")
        moves += 1
        if len(uncovered) >= r - 1:
            hat = uncovered[: r - 1]
            v = _pick_low_degree(sel, _extensions(h, hat), t)
            if v is None:
                raise StuckError(
                    f"uncovered set {hat} has no extension of degree < {t}"
                )
            j = _unchosen_index(lookup, sel, hat + [v])
            if sel.deg[v] <= 0:
                sel.add(j)
            elif sel.deg[v] == 1:
                carrier = sel.edges_at(v)[0]
                has_deep = any(sel.deg[u] >= 2 for u in h.edges[carrier])
                sel.add(j)
                if has_deep:
                    sel.remove(carrier)
            else:
                sel.add(j)
        else:
            fill = [
                v for v in range(h.n) if 0 < sel.deg[v] < t and v not in uncovered
            ]
            hat = uncovered + fill[: r - 1 - len(uncovered)]
            if len(hat) < r - 1:
                raise StuckError("not enough low-degree vertices for the final set")
            v = _pick_low_degree(sel, _extensions(h, hat), t)
            if v is None:
                raise StuckError(
                    f"final set {hat} has no extension of degree < {t}"
                )
            sel.add(_unchosen_index(lookup, sel, hat + [v]))
    checked = _checked_sat(h, sel.indices(), t)
    return SolveOutcome(
        SolveStatus.SAT, checked, moves, time.perf_counter() - start, t
    )


def _disjoint_legal_sets(uncovered_by_part, owners) -> dict:
    """One legal set per owner part, avoiding that part, all picks distinct.

    For owner i the pick from part j is the uncovered vertex of part j whose
    index is the rank of i among the owners other than j.
    """
    owners = sorted(owners)
    r = len(uncovered_by_part)
    sets = {}
    for i in owners:
        hat = []
        for j in range(r):
            if j == i:
                continue
            rank = sum(1 for o in owners if o != j and o < i)
            hat.append(uncovered_by_part[j][rank])
        sets[i] = hat
    return sets


def codegree_augment_partite(h: Hypergraph, t: int) -> SolveOutcome:
    """t-shallow hitting edge set in an equal-part partite host by the
    balanced exchange moves.

    Moves, in priority order: adopt a fully-uncovered edge; when the size
    budget has slack, add one edge per part over disjoint legal sets of
    uncovered vertices; replace an edge carrying two deep vertices by one
    edge per deep part.  When fewer than r-1 vertices per part remain
    uncovered, n0+1 closing edges cover them.  Guaranteed SAT when the
    partite co-degree is at least ceil(n/k)+1; StuckError otherwise.
    """
    if t < 2:
        raise ValueError("t must be >= 2")
    r = _uniformity(h)
    if h.parts is None or h.num_parts != r:
        raise ValueError("requires an r-partite r-uniform host")
    members = h.part_members()
    part_sizes = {len(p) for p in members}
    if len(part_sizes) != 1:
        raise ValueError("requires equal part sizes")
    n = part_sizes.pop()
    k = (r - 1) * t + 1
    need = -((-n) // k)  # ceil(n/k)
    start = time.perf_counter()
    lookup = _edge_index_lookup(h)
    sel = EdgeSelection(h)
    moves = 0
    cap = 4 * r * n + 40

    def budget(n0: int) -> int:
        return need * (t - 1) + n - n0

    while True:
        uncovered = [[v for v in part if sel.deg[v] == 0] for part in members]
        counts = {len(u) for u in uncovered}
        if len(counts) != 1:
            raise RuntimeError("uncovered counts diverged across parts")
        n0 = counts.pop()
        if len(sel) > budget(n0):
            raise RuntimeError("size budget violated")
        if n0 == 0:
            break
        if moves > cap:
            raise StuckError("progress cap exceeded; exchange moves are looping")
        moves += 1
        adopt = None
        for j, e in enumerate(h.edges):
            if j not in sel.chosen and all(sel.deg[v] == 0 for v in e):
                adopt = j
                break
        if adopt is not None:
            sel.add(adopt)
            continue
        if n0 <= r - 2:
            _partite_finish(h, sel, lookup, members, uncovered, n0, t)
            break
        if len(sel) < budget(n0):
            hats = _disjoint_legal_sets(uncovered, range(r))
            additions = []
            for i in range(r):
                v = _pick_low_degree(sel, _extensions(h, hats[i]), t)
                if v is None:
                    raise StuckError(
                        f"part {i}: no covered low-degree extension for {hats[i]}"
                    )
                additions.append(hats[i] + [v])
            for vertex_set in additions:
                sel.add(_unchosen_index(lookup, sel, vertex_set))
            continue
        overloaded = None
        for j in sorted(sel.chosen):
            deep = [v for v in h.edges[j] if sel.deg[v] >= 2]
            if len(deep) >= 2:
                overloaded = (j, deep)
                break
        if overloaded is None:
            raise StuckError(
                "tight budget with no adoptable or overloaded edge; "
                "the co-degree hypothesis does not hold"
            )
        j, deep = overloaded
        owner_parts = sorted(h.parts[v] for v in deep)
        u_by_part = {h.parts[v]: v for v in deep}
        hats = _disjoint_legal_sets(uncovered, owner_parts)
        additions = []
        for i in owner_parts:
            v = _pick_low_degree(
                sel, _extensions(h, hats[i]), t, allow=(u_by_part[i],)
            )
            if v is None:
                raise StuckError(
                    f"part {i}: no replacement extension for {hats[i]}"
                )
            additions.append(hats[i] + [v])
        sel.remove(j)
        for vertex_set in additions:
            sel.add(_unchosen_index(lookup, sel, vertex_set))
    checked = _checked_sat(h, sel.indices(), t)
    return SolveOutcome(
        SolveStatus.SAT, checked, moves, time.perf_counter() - start, t
    )


def _partite_finish(h, sel, lookup, members, uncovered, n0, t):
    """Cover the last n0 <= r-2 vertices of each part with n0+1 edges.

    The first n0+1 parts donate each uncovered vertex to exactly one legal
    set; later parts donate each at least once and at most twice.  Every
    extension vertex is covered and of degree < t, so the additions stay
    shallow (a twice-donated vertex ends at degree 2 <= t).
    """
    r = len(members)
    owners = list(range(n0 + 1))
    additions = []
    for i in owners:
        hat = []
        for j in range(r):
            if j == i:
                continue
            if j <= n0:
                rank = sum(1 for o in owners if o != j and o < i)
                hat.append(uncovered[j][rank])
            else:
                hat.append(uncovered[j][min(i, n0 - 1)])
        v = _pick_low_degree(sel, _extensions(h, hat), t)
        if v is None:
            raise StuckError(f"closing set {sorted(hat)} has no low-degree extension")
        if sel.deg[v] == 0:
            raise StuckError(
                "closing step found an uncovered extension; adoption was incomplete"
            )
        additions.append(hat + [v])
    indices = []
    for vertex_set in additions:
        indices.append(_unchosen_index(lookup, sel, vertex_set))
    if len(set(indices)) != len(indices):
        raise RuntimeError("closing edges collided")
    for j in indices:
        sel.add(j)
