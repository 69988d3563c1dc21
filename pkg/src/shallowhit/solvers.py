"""Solvers producing shallow (hitting) edge sets.

- exact_shallow_hitting / exact_max_shallow: branch-and-bound searches over
  the compiled-or-pure kernel; UNSAT only ever comes from an exhausted
  search, a budget overrun yields GAVE_UP.
- lll_hitting: constructive resampling over one chosen incident edge per
  vertex; a vertex covered more than t times triggers a resample of the
  picks across a violating (t+1)-star.
- lll_hitting_girth4: two-step variant for girth >= 4 hosts (independent
  edge coin flips, then one pick per still-uncovered vertex) with restarts;
  heuristic repair loop, every SAT is re-verified.
- partition_shallow: resampling over per-edge colors until every color
  class is t-shallow.
- monte_carlo_experiment: the one-pass pick experiment without repair.

Every SAT outcome is re-verified against the requested predicate before it
is returned; an invalid SAT is a bug and raises.
"""

from __future__ import annotations

import enum
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import _kernel
from .bounds import partition_k
from .errors import GaveUpError
from .hypergraph import EdgeSelection, Hypergraph, verify_selection

__all__ = [
    "SolveStatus",
    "SolveOutcome",
    "MaxShallowOutcome",
    "PartitionResult",
    "MonteCarloResult",
    "exact_shallow_hitting",
    "exact_max_shallow",
    "lll_hitting",
    "lll_hitting_girth4",
    "partition_shallow",
    "monte_carlo_experiment",
]


class SolveStatus(enum.Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"
    GAVE_UP = "GAVE_UP"


@dataclass
class SolveOutcome:
    status: SolveStatus
    selection: Optional[EdgeSelection]
    iterations: int
    elapsed: float
    t: int
    seed: Optional[int] = None
    meta: dict = field(default_factory=dict)


@dataclass
class MaxShallowOutcome:
    """Result of the maximum t-shallow edge set search.

    When ``optimal`` is False the search hit its budget: ``size`` is still a
    valid lower bound and ``upper_bound`` the best known upper bound.
    ``eta`` is size / (n*t/r) for r-uniform hosts.
    """

    size: int
    selection: EdgeSelection
    optimal: bool
    upper_bound: int
    eta: Optional[Fraction]
    iterations: int
    elapsed: float
    t: int


def _checked_sat(h: Hypergraph, indices, t: int) -> EdgeSelection:
    sel = EdgeSelection(h, indices)
    report = verify_selection(sel, t)
    if not (report.is_t_shallow and report.is_hitting):
        raise RuntimeError("solver produced an invalid SAT selection")
    return sel


def exact_shallow_hitting(
    h: Hypergraph, t: int, budget: Optional[int] = None
) -> SolveOutcome:
    """Decide existence of a t-shallow hitting edge set by exhaustive
    branch-and-bound.  ``budget`` caps the number of search nodes."""
    if t < 1:
        raise ValueError("t must be >= 1")
    start = time.perf_counter()
    status, chosen, nodes = _kernel.shallow_hitting(
        h.n, h.edges, h.incidence, t, -1 if budget is None else budget
    )
    elapsed = time.perf_counter() - start
    if status == _kernel.SAT:
        sel = _checked_sat(h, chosen, t)
        return SolveOutcome(SolveStatus.SAT, sel, nodes, elapsed, t)
    if status == _kernel.UNSAT:
        return SolveOutcome(SolveStatus.UNSAT, None, nodes, elapsed, t)
    return SolveOutcome(SolveStatus.GAVE_UP, None, nodes, elapsed, t)


def exact_max_shallow(
    h: Hypergraph, t: int, budget: Optional[int] = None
) -> MaxShallowOutcome:
    """Maximum t-shallow edge set by branch-and-bound with the vertex
    capacity bound |M| <= found + floor(remaining capacity / min edge size)."""
    if t < 1:
        raise ValueError("t must be >= 1")
    start = time.perf_counter()
    best, chosen, optimal, nodes = _kernel.max_shallow(
        h.n, h.edges, h.incidence, t, -1 if budget is None else budget
    )
    elapsed = time.perf_counter() - start
    sel = EdgeSelection(h, chosen)
    if max(sel.deg, default=0) > t:
        raise RuntimeError("solver produced a non-shallow selection")
    sizes = {len(e) for e in h.edges}
    r = sizes.pop() if len(sizes) == 1 else None
    if optimal:
        upper = best
    else:
        r_min = min((len(e) for e in h.edges), default=1)
        upper = min(h.m, (h.n * t) // r_min)
    eta = None
    if r is not None and h.n > 0 and t > 0:
        eta = Fraction(best * r, h.n * t)
    return MaxShallowOutcome(
        size=best,
        selection=sel,
        optimal=optimal,
        upper_bound=upper,
        eta=eta,
        iterations=nodes,
        elapsed=elapsed,
        t=t,
    )


def _first_violated(deg, t):
    for v, d in enumerate(deg):
        if d >= t + 1:
            return v
    return -1


def lll_hitting(
    h: Hypergraph, t: int, seed: int, max_resamples: Optional[int] = None
) -> SolveOutcome:
    """Resampling solver for t-shallow hitting edge sets on hosts with
    minimum degree >= 1.

    Every vertex picks one incident edge uniformly at random; the picked
    edge set is hitting by construction.  While some vertex w is covered
    more than t times, the picks of every vertex lying in the first t+1
    chosen edges through w are redrawn.  Quiescence gives a verified SAT;
    exceeding ``max_resamples`` (default 10n + 100) gives GAVE_UP, never an
    invalid SAT.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    incidence = h.incidence
    if any(not inc for inc in incidence):
        raise ValueError("host has an isolated vertex; no hitting set exists")
    if max_resamples is None:
        max_resamples = 10 * h.n + 100
    rng = random.Random(seed)
    start = time.perf_counter()
    pick = [incidence[v][rng.randrange(len(incidence[v]))] for v in range(h.n)]
    resamples = 0
    while True:
        chosen = sorted(set(pick))
        deg = [0] * h.n
        for j in chosen:
            for v in h.edges[j]:
                deg[v] += 1
        w = _first_violated(deg, t)
        if w < 0:
            sel = _checked_sat(h, chosen, t)
            return SolveOutcome(
                SolveStatus.SAT,
                sel,
                resamples,
                time.perf_counter() - start,
                t,
                seed,
            )
        if resamples >= max_resamples:
            return SolveOutcome(
                SolveStatus.GAVE_UP,
                None,
                resamples,
                time.perf_counter() - start,
                t,
                seed,
            )
        chosen_set = set(chosen)
        star = [j for j in incidence[w] if j in chosen_set][: t + 1]
        affected = sorted({v for j in star for v in h.edges[j]})
        for v in affected:
            pick[v] = incidence[v][rng.randrange(len(incidence[v]))]
        resamples += 1


def lll_hitting_girth4(
    h: Hypergraph,
    t: int,
    seed: int,
    max_restarts: int = 20,
    max_resamples: Optional[int] = None,
) -> SolveOutcome:
    """Two-step resampling solver for hosts of girth >= 4.

    Step one keeps each edge independently with probability
    (ln r + 1)/(delta - 1); step two adds one uniformly random incident
    edge for every vertex left uncovered.  A violating (t+1)-star triggers
    a redraw of the step-one coins of every edge touching the star's
    vertices and of those vertices' step-two picks; after ``max_resamples``
    redraws the experiment restarts from scratch.  Requires girth >= 4 and
    minimum degree >= ln r + 2 (below that the full edge set is the
    intended fallback and this solver refuses to run).
    """
    from .hypergraph import girth_less_than_4

    if t < 1:
        raise ValueError("t must be >= 1")
    sizes = {len(e) for e in h.edges}
    if len(sizes) != 1:
        raise ValueError("requires a uniform host")
    r = sizes.pop()
    degs = h.degrees()
    delta = min(degs, default=0)
    if delta < math.log(r) + 2:
        raise ValueError(
            f"minimum degree {delta} below ln({r}) + 2; use the full edge set instead"
        )
    if girth_less_than_4(h):
        raise ValueError("host has girth < 4")
    if max_resamples is None:
        max_resamples = 10 * h.n + 100
    p = (math.log(r) + 1.0) / (delta - 1)
    incidence = h.incidence
    rng = random.Random(seed)
    start = time.perf_counter()
    total_resamples = 0

    def current_selection(x, y):
        deg_x = [0] * h.n
        for j in range(h.m):
            if x[j]:
                for v in h.edges[j]:
                    deg_x[v] += 1
        chosen = {j for j in range(h.m) if x[j]}
        chosen.update(y[v] for v in range(h.n) if deg_x[v] == 0)
        return sorted(chosen)

    for restart in range(max_restarts):
        x = [rng.random() < p for _ in range(h.m)]
        y = [incidence[v][rng.randrange(len(incidence[v]))] for v in range(h.n)]
        for _ in range(max_resamples):
            chosen = current_selection(x, y)
            deg = [0] * h.n
            for j in chosen:
                for v in h.edges[j]:
                    deg[v] += 1
            w = _first_violated(deg, t)
            if w < 0:
                sel = _checked_sat(h, chosen, t)
                return SolveOutcome(
                    SolveStatus.SAT,
                    sel,
                    total_resamples,
                    time.perf_counter() - start,
                    t,
                    seed,
                    meta={"restarts": restart},
                )
            chosen_set = set(chosen)
            star = [j for j in incidence[w] if j in chosen_set][: t + 1]
            affected = sorted({v for j in star for v in h.edges[j]})
            touched_edges = sorted({j for v in affected for j in incidence[v]})
            for j in touched_edges:
                x[j] = rng.random() < p
            for v in affected:
                y[v] = incidence[v][rng.randrange(len(incidence[v]))]
            total_resamples += 1
    return SolveOutcome(
        SolveStatus.GAVE_UP,
        None,
        total_resamples,
        time.perf_counter() - start,
        t,
        seed,
        meta={"restarts": max_restarts},
    )


@dataclass
class PartitionResult:
    classes: list
    k: int
    iterations: int
    elapsed: float
    t: int
    seed: int


def partition_shallow(
    h: Hypergraph,
    t: int,
    k: Optional[int] = None,
    seed: int = 0,
    max_resamples: Optional[int] = None,
) -> PartitionResult:
    """Partition the edges into k t-shallow classes by color resampling.

    Each edge draws a color in [0, k); while some vertex has t+1 incident
    edges of one color, those edges redraw their colors.  When ``k`` is
    omitted it defaults to partition_k(Delta, r, t) for uniform hosts (or 1
    when t >= Delta, where the whole edge set is already t-shallow).
    Raises GaveUpError when the resample budget runs out.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    if k is None:
        degs = h.degrees()
        dmax = max(degs, default=0)
        if dmax <= t:
            k = 1
        else:
            sizes = {len(e) for e in h.edges}
            if len(sizes) != 1:
                raise ValueError("default k requires a uniform host; pass k")
            k = partition_k(dmax, sizes.pop(), t)
    if k < 1:
        raise ValueError("k must be >= 1")
    if max_resamples is None:
        max_resamples = 20 * h.m + 100
    rng = random.Random(seed)
    start = time.perf_counter()
    color = [rng.randrange(k) for _ in range(h.m)]
    incidence = h.incidence
    resamples = 0
    while True:
        violation = None
        for v in range(h.n):
            counts: dict = {}
            for j in incidence[v]:
                c = color[j]
                counts[c] = counts.get(c, 0) + 1
            over = [c for c, cnt in sorted(counts.items()) if cnt >= t + 1]
            if over:
                c = over[0]
                star = [j for j in incidence[v] if color[j] == c][: t + 1]
                violation = star
                break
        if violation is None:
            break
        if resamples >= max_resamples:
            raise GaveUpError(
                f"partition resampling exceeded {max_resamples} resamples"
            )
        for j in violation:
            color[j] = rng.randrange(k)
        resamples += 1
    classes = [EdgeSelection(h) for _ in range(k)]
    for j, c in enumerate(color):
        classes[c].add(j)
    for cls in classes:
        if max(cls.deg, default=0) > t:
            raise RuntimeError("partition produced a non-shallow class")
    return PartitionResult(
        classes=classes,
        k=k,
        iterations=resamples,
        elapsed=time.perf_counter() - start,
        t=t,
        seed=seed,
    )


@dataclass
class MonteCarloResult:
    """Outcome of repeated one-pass pick experiments (no repair).

    ``rows`` holds (trial, max_degree, shallow) per trial; the picks depend
    only on (seed, trial), so success rates for different t on the same
    seed are coupled through the same draws.
    """

    trials: int
    t: int
    seed: int
    success_rate: float
    mean_max_degree: float
    rows: list


def monte_carlo_experiment(
    h: Hypergraph, t: int, trials: int, seed: int
) -> MonteCarloResult:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    incidence = h.incidence
    if any(not inc for inc in incidence):
        raise ValueError("host has an isolated vertex")
    rng = random.Random(seed)
    rows = []
    successes = 0
    total_max = 0
    for trial in range(trials):
        chosen = {incidence[v][rng.randrange(len(incidence[v]))] for v in range(h.n)}
        deg = [0] * h.n
        for j in chosen:
            for v in h.edges[j]:
                deg[v] += 1
        max_deg = max(deg, default=0)
        shallow = max_deg <= t
        successes += shallow
        total_max += max_deg
        rows.append((trial, max_deg, shallow))
    return MonteCarloResult(
        trials=trials,
        t=t,
        seed=seed,
        success_rate=successes / trials,
        mean_max_degree=total_max / trials,
        rows=rows,
    )
