"""Pure-Python branch-and-bound kernels for the exact solvers.

The compiled Cython kernel (``_exact.pyx``) implements the same two searches
with an identical traversal order; both backends must return identical
results (status, selection and node count) on every input.  Parity is
enforced by tests.

Status codes are shared with the extension: 0 = SAT, 1 = UNSAT, 2 = gave up.
"""

from __future__ import annotations

import sys

SAT = 0
UNSAT = 1
GAVE_UP = 2


def shallow_hitting(n, edges, incidence, t, budget=-1):
    """Decide whether a t-shallow hitting edge set exists.

    Branch on an uncovered vertex with the fewest addable incident edges
    (an edge is addable when it is not banned and every endpoint still has
    degree < t); sibling branches ban the already-tried edges so the search
    partitions the solution space.  Exhaustion certifies UNSAT.

    Returns (status, sorted chosen indices or None, nodes visited).
    """
    deg = [0] * n
    banned = bytearray(len(edges))
    chosen = []
    state = {"nodes": 0, "solution": None, "overran": False}
    sys.setrecursionlimit(max(sys.getrecursionlimit(), n + len(edges) + 100))

    def addable(v):
        out = []
        for j in incidence[v]:
            if banned[j]:
                continue
            for u in edges[j]:
                if deg[u] >= t:
                    break
            else:
                out.append(j)
        return out

    def search():
        state["nodes"] += 1
        if 0 <= budget < state["nodes"]:
            state["overran"] = True
            return GAVE_UP
        best_list = None
        for v in range(n):
            if deg[v] == 0:
                cand = addable(v)
                if not cand:
                    return UNSAT
                if best_list is None or len(cand) < len(best_list):
                    best_list = cand
                    if len(cand) == 1:
                        break
        if best_list is None:
            state["solution"] = sorted(chosen)
            return SAT
        saw_gaveup = False
        newly_banned = []
        result = UNSAT
        for j in best_list:
            for u in edges[j]:
                deg[u] += 1
            chosen.append(j)
            res = search()
            chosen.pop()
            for u in edges[j]:
                deg[u] -= 1
            if res == SAT:
                result = SAT
                break
            if res == GAVE_UP:
                saw_gaveup = True
            banned[j] = 1
            newly_banned.append(j)
        for j in newly_banned:
            banned[j] = 0
        if result == SAT:
            return SAT
        return GAVE_UP if saw_gaveup else UNSAT

    status = search()
    return status, state["solution"], state["nodes"]


def max_shallow(n, edges, incidence, t, budget=-1):
    """Maximum t-shallow edge set by include/exclude branch-and-bound.

    Edges are decided in index order, include-first.  Pruning bound:
    |chosen| + min(edges left, floor(remaining vertex capacity / r_min))
    where the remaining capacity is n*t minus the endpoints already used.

    Returns (best size, best selection, optimal flag, nodes visited).
    """
    m = len(edges)
    deg = [0] * n
    r_min = min((len(e) for e in edges), default=1)
    state = {
        "nodes": 0,
        "best": -1,
        "best_sel": None,
        "overran": False,
        "cap": n * t,
    }
    chosen = []
    sys.setrecursionlimit(max(sys.getrecursionlimit(), n + m + 100))

    def search(i):
        if state["overran"]:
            return
        state["nodes"] += 1
        if 0 <= budget < state["nodes"]:
            state["overran"] = True
            return
        if len(chosen) + min(m - i, state["cap"] // r_min) <= state["best"]:
            return
        if i == m:
            state["best"] = len(chosen)
            state["best_sel"] = list(chosen)
            return
        e = edges[i]
        for u in e:
            if deg[u] >= t:
                break
        else:
            for u in e:
                deg[u] += 1
            state["cap"] -= len(e)
            chosen.append(i)
            search(i + 1)
            chosen.pop()
            state["cap"] += len(e)
            for u in e:
                deg[u] -= 1
        search(i + 1)

    search(0)
    best = max(state["best"], 0)
    sel = state["best_sel"] if state["best_sel"] is not None else []
    return best, sel, not state["overran"], state["nodes"]
