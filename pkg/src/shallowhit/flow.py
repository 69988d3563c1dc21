"""Bipartite degree-constrained subgraphs via maximum flow, plus the
exhaustive Hall-type subset condition they are equivalent to.

A t-shallow hitting edge set of a bipartite graph is a subgraph with all
degrees in [1, t].  ``bipartite_factor`` finds one through a circulation
with lower bounds (standard excess/deficit reduction onto a super
source/sink pair, Dinic underneath); infeasibility of the circulation is an
exact certificate of non-existence.  ``hall_condition_check`` verifies
|X| <= t|N(X)| for every subset X of either side; the two agree on every
input (the classical factor characterization), which the tests fuzz.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .hypergraph import EdgeSelection, Hypergraph
from .solvers import SolveOutcome, SolveStatus, _checked_sat

__all__ = ["bipartite_factor", "hall_condition_check", "HallReport"]

_INF = 1 << 60


class _Dinic:
    def __init__(self, size: int):
        self.size = size
        self.graph = [[] for _ in range(size)]
        self.phases = 0

    def add_edge(self, u: int, v: int, cap: int):
        """Returns a handle for later flow readout."""
        fwd = [v, cap, None]
        rev = [u, 0, fwd]
        fwd[2] = rev
        self.graph[u].append(fwd)
        self.graph[v].append(rev)
        return fwd

    def _bfs(self, s: int, t: int):
        level = [-1] * self.size
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for arc in self.graph[u]:
                if arc[1] > 0 and level[arc[0]] < 0:
                    level[arc[0]] = level[u] + 1
                    queue.append(arc[0])
        self.level = level
        return level[t] >= 0

    def _dfs(self, u: int, t: int, pushed: int) -> int:
        if u == t:
            return pushed
        while self.it[u] < len(self.graph[u]):
            arc = self.graph[u][self.it[u]]
            v = arc[0]
            if arc[1] > 0 and self.level[v] == self.level[u] + 1:
                got = self._dfs(v, t, min(pushed, arc[1]))
                if got > 0:
                    arc[1] -= got
                    arc[2][1] += got
                    return got
            self.it[u] += 1
        return 0

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        while self._bfs(s, t):
            self.phases += 1
            self.it = [0] * self.size
            while True:
                pushed = self._dfs(s, t, _INF)
                if pushed == 0:
                    break
                flow += pushed
        return flow


def _sides(h: Hypergraph):
    if h.parts is None or h.num_parts != 2:
        raise ValueError("requires a 2-partite host")
    if any(len(e) != 2 for e in h.edges):
        raise ValueError("requires a 2-uniform host")
    side_a = [v for v in range(h.n) if h.parts[v] == 0]
    side_b = [v for v in range(h.n) if h.parts[v] == 1]
    return side_a, side_b


def bipartite_factor(h: Hypergraph, t: int) -> SolveOutcome:
    """Edge subset with every degree in [1, t], or an exact UNSAT.

    Circulation network: source -> A vertex with bounds [1, t], one unit
    arc per edge instance, B vertex -> sink with bounds [1, t], sink ->
    source unbounded; lower bounds are shifted onto a super source/sink.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    side_a, side_b = _sides(h)
    start = time.perf_counter()
    pos = {v: i for i, v in enumerate(side_a)}
    pos.update({v: len(side_a) + i for i, v in enumerate(side_b)})
    na, nb = len(side_a), len(side_b)
    src, sink = na + nb, na + nb + 1
    super_s, super_t = na + nb + 2, na + nb + 3
    net = _Dinic(na + nb + 4)
    excess = [0] * (na + nb + 2)

    def bounded_arc(u, v, lo, hi):
        arc = net.add_edge(u, v, hi - lo)
        excess[v] += lo
        excess[u] -= lo
        return arc

    for v in side_a:
        bounded_arc(src, pos[v], 1, t)
    edge_arcs = []
    for j, e in enumerate(h.edges):
        u, w = e
        if h.parts[u] == 1:
            u, w = w, u
        edge_arcs.append((j, bounded_arc(pos[u], pos[w], 0, 1)))
    for v in side_b:
        bounded_arc(pos[v], sink, 1, t)
    net.add_edge(sink, src, _INF)
    demand = 0
    for node, ex in enumerate(excess):
        if ex > 0:
            net.add_edge(super_s, node, ex)
            demand += ex
        elif ex < 0:
            net.add_edge(node, super_t, -ex)
    flow = net.max_flow(super_s, super_t)
    elapsed = time.perf_counter() - start
    if flow < demand:
        return SolveOutcome(SolveStatus.UNSAT, None, net.phases, elapsed, t)
    chosen = [j for j, arc in edge_arcs if arc[1] == 0]  # saturated unit arc
    sel = _checked_sat(h, chosen, t)
    return SolveOutcome(SolveStatus.SAT, sel, net.phases, elapsed, t)


@dataclass(frozen=True)
class HallReport:
    ok: bool
    side: Optional[str] = None
    violating: Optional[tuple] = None


def _scan_side(vertices, neighbor_masks, t, label) -> Optional[HallReport]:
    size = len(vertices)
    chosen = []

    def rec(i, count, union):
        if count > t * union.bit_count():
            return tuple(vertices[x] for x in chosen)
        if i == size:
            return None
        chosen.append(i)
        hit = rec(i + 1, count + 1, union | neighbor_masks[i])
        chosen.pop()
        if hit is not None:
            return hit
        return rec(i + 1, count, union)

    hit = rec(0, 0, 0)
    if hit is not None:
        return HallReport(ok=False, side=label, violating=hit)
    return None


def hall_condition_check(h: Hypergraph, t: int, max_side: int = 22) -> HallReport:
    """Exhaustively test |X| <= t|N(X)| over all X within one side, both
    sides.  Exponential: guarded at side sizes <= max_side (default 22).

    Returns the first violating set found (a smallest-index-first search;
    a violating partial set is reported as soon as it appears).
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    side_a, side_b = _sides(h)
    if len(side_a) > max_side or len(side_b) > max_side:
        raise ValueError(f"side size exceeds the 2^{max_side} subset guard")
    a_index = {v: i for i, v in enumerate(side_a)}
    b_index = {v: i for i, v in enumerate(side_b)}
    a_masks = [0] * len(side_a)
    b_masks = [0] * len(side_b)
    for e in h.edges:
        u, w = e
        if h.parts[u] == 1:
            u, w = w, u
        a_masks[a_index[u]] |= 1 << b_index[w]
        b_masks[b_index[w]] |= 1 << a_index[u]
    report = _scan_side(side_a, a_masks, t, "A")
    if report is not None:
        return report
    report = _scan_side(side_b, b_masks, t, "B")
    if report is not None:
        return report
    return HallReport(ok=True)
