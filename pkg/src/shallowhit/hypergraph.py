"""Hypergraph data model, structural statistics, duality and verification.

Conventions used throughout the package:

- Vertices of a hypergraph on ``n`` vertices are the integers ``0..n-1``.
- An edge is a non-empty, strictly ascending tuple of vertex ids.
- The edge list is a multiset: parallel edges are allowed and an edge is
  identified by its *index* in the list, never by its content.
- An optional partition assigns every vertex a part id; a partitioned
  hypergraph requires each edge to meet every part at most once.

File formats (both round-trip bit-exactly):

- Text, one hypergraph per file::

      H <n> <m> <p>          # p = 0 when unpartitioned
      <part ids, n of them>  # only when p > 0
      <edge line, ascending vertex ids>  x m

- JSON mirror: ``{"n": ..., "parts": [...]?, "edges": [[...], ...]}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import comb
from typing import Iterable, Optional, Sequence

from .errors import FormatError

__all__ = [
    "Hypergraph",
    "EdgeSelection",
    "StructureStats",
    "SelectionReport",
    "CycleWitness",
    "DualColoring",
    "stats",
    "neighborhood",
    "short_cycle",
    "girth_less_than_4",
    "dual",
    "verify_selection",
    "selection_to_2coloring",
    "isomorphic",
    "to_text",
    "from_text",
    "to_json_dict",
    "from_json_dict",
    "save_hypergraph",
    "load_hypergraph",
]


class Hypergraph:
    """Immutable uniform-or-not hypergraph with optional vertex partition."""

    __slots__ = ("n", "edges", "parts", "_incidence")

    def __init__(
        self,
        n: int,
        edges: Iterable[Iterable[int]],
        parts: Optional[Sequence[int]] = None,
    ):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        normalized = []
        for pos, e in enumerate(edges):
            e = tuple(sorted(e))
            if not e:
                raise ValueError(f"edge {pos} is empty")
            if e[0] < 0 or e[-1] >= n:
                raise ValueError(f"edge {pos} has a vertex outside [0, {n})")
            if any(e[i] == e[i + 1] for i in range(len(e) - 1)):
                raise ValueError(f"edge {pos} repeats a vertex")
            normalized.append(e)
        self.n = n
        self.edges = tuple(normalized)
        if parts is not None:
            parts = tuple(parts)
            if len(parts) != n:
                raise ValueError("parts must assign a part id to every vertex")
            if any(p < 0 for p in parts):
                raise ValueError("part ids must be non-negative")
            for pos, e in enumerate(self.edges):
                seen = set()
                for v in e:
                    if parts[v] in seen:
                        raise ValueError(
                            f"edge {pos} meets part {parts[v]} more than once"
                        )
                    seen.add(parts[v])
        self.parts = parts
        self._incidence = None

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def num_parts(self) -> int:
        return 0 if self.parts is None else max(self.parts, default=-1) + 1

    @property
    def incidence(self) -> tuple:
        """Per-vertex ascending tuple of incident edge indices (cached)."""
        if self._incidence is None:
            inc = [[] for _ in range(self.n)]
            for j, e in enumerate(self.edges):
                for v in e:
                    inc[v].append(j)
            self._incidence = tuple(tuple(x) for x in inc)
        return self._incidence

    def degrees(self) -> tuple:
        return tuple(len(inc) for inc in self.incidence)

    def part_members(self) -> list:
        """Vertices of each part, ascending within a part."""
        if self.parts is None:
            raise ValueError("hypergraph is not partitioned")
        members = [[] for _ in range(self.num_parts)]
        for v, p in enumerate(self.parts):
            members[p].append(v)
        return members

    def __eq__(self, other):
        return (
            isinstance(other, Hypergraph)
            and self.n == other.n
            and self.edges == other.edges
            and self.parts == other.parts
        )

    def __hash__(self):
        return hash((self.n, self.edges, self.parts))

    def __repr__(self):
        p = f", parts={self.num_parts}" if self.parts is not None else ""
        return f"Hypergraph(n={self.n}, m={self.m}{p})"


@dataclass(frozen=True)
class StructureStats:
    """Degree and co-degree statistics of a hypergraph.

    ``degree_ratio`` is max/min degree (exact rational); it is None when the
    minimum degree is 0.  The co-degree fields are filled only on request:
    ``min_codegree`` minimizes, over all (r-1)-subsets of the vertices, the
    number of vertices completing the subset to an edge; the partite variant
    minimizes over legal (r-1)-sets (at most one vertex per part) only.
    """

    r_uniform: Optional[int]
    min_degree: int
    max_degree: int
    degree_ratio: Optional[Fraction]
    girth_below_four: bool
    min_codegree: Optional[int] = None
    min_partite_codegree: Optional[int] = None


def stats(
    h: Hypergraph, with_codegree: bool = False, subset_cap: int = 10_000_000
) -> StructureStats:
    """Compute degree statistics, the girth < 4 flag and, optionally,
    co-degrees.

    Co-degree computation is exponential in nature (it ranges over all
    (r-1)-subsets, respectively all legal (r-1)-sets); ``subset_cap`` guards
    against runaway inputs and raises when the subset space is larger.
    Intended for n up to roughly 30.
    """
    degs = h.degrees()
    dmin = min(degs, default=0)
    dmax = max(degs, default=0)
    sizes = {len(e) for e in h.edges}
    r = sizes.pop() if len(sizes) == 1 else None
    ratio = Fraction(dmax, dmin) if dmin > 0 else None
    codeg = partite_codeg = None
    if with_codegree and r is not None and r >= 1:
        codeg = _min_codegree(h, r, subset_cap)
        if h.parts is not None and h.num_parts == r:
            partite_codeg = _min_partite_codegree(h, r, subset_cap)
    return StructureStats(
        r_uniform=r,
        min_degree=dmin,
        max_degree=dmax,
        degree_ratio=ratio,
        girth_below_four=girth_less_than_4(h),
        min_codegree=codeg,
        min_partite_codegree=partite_codeg,
    )


def _extension_counts(h: Hypergraph, r: int) -> dict:
    # (r-1)-set -> set of vertices completing it to an edge of h
    ext: dict = {}
    for e in h.edges:
        for i in range(r):
            hat = e[:i] + e[i + 1 :]
            ext.setdefault(hat, set()).add(e[i])
    return ext


def _min_codegree(h: Hypergraph, r: int, subset_cap: int) -> int:
    total = comb(h.n, r - 1)
    if total > subset_cap:
        raise ValueError(
            f"co-degree enumeration over {total} subsets exceeds cap {subset_cap}"
        )
    ext = _extension_counts(h, r)
    if len(ext) < total:
        return 0  # some (r-1)-set extends to no edge at all
    return min(len(s) for s in ext.values()) if ext else 0


def _min_partite_codegree(h: Hypergraph, r: int, subset_cap: int) -> int:
    members = h.part_members()
    if any(not part for part in members):
        raise ValueError("every part must be non-empty for partite co-degrees")
    total = 0
    full = 1
    for part in members:
        full *= len(part)
    for part in members:
        total += full // len(part)
    if total > subset_cap:
        raise ValueError(
            f"legal-set enumeration over {total} sets exceeds cap {subset_cap}"
        )
    ext = _extension_counts(h, r)
    if len(ext) < total:
        return 0
    return min(len(s) for s in ext.values()) if ext else 0


def neighborhood(h: Hypergraph, hat_e: Iterable[int]) -> set:
    """Vertices v such that hat_e plus v forms an edge of the r-uniform h.

    ``hat_e`` must have exactly r-1 vertices.
    """
    hat = frozenset(hat_e)
    sizes = {len(e) for e in h.edges}
    if len(sizes) != 1:
        raise ValueError("neighborhood requires a uniform hypergraph")
    r = sizes.pop()
    if len(hat) != r - 1:
        raise ValueError(f"expected {r - 1} distinct vertices, got {len(hat)}")
    out = set()
    for e in h.edges:
        es = set(e)
        if hat <= es:
            out |= es - hat
    return out


@dataclass(frozen=True)
class CycleWitness:
    """A cycle of length 2 or 3.

    ``vertices[i]`` is shared by ``edges[i]`` and ``edges[(i+1) % len]``.
    """

    length: int
    edges: tuple
    vertices: tuple


def short_cycle(h: Hypergraph) -> Optional[CycleWitness]:
    """Find a cycle of length 2 or 3, or None when the girth is >= 4.

    Length 2: two edges sharing at least two vertices (covers parallel
    edges of size >= 2).  Length 3: three edges pairwise meeting in three
    distinct vertices.
    """
    incidence = h.incidence
    shared: dict = {}
    for v in range(h.n):
        inc = incidence[v]
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                key = (inc[a], inc[b])
                prev = shared.setdefault(key, v)
                if prev != v:
                    return CycleWitness(2, key, (prev, v))
    # All intersecting pairs now share exactly one vertex; look for a
    # triangle with three distinct contact vertices.
    adj: dict = {}
    for (i, j), v in shared.items():
        adj.setdefault(i, {})[j] = v
        adj.setdefault(j, {})[i] = v
    for (i, j), u in sorted(shared.items()):
        ni = adj[i]
        for k, w in sorted(adj[j].items()):
            if k == i:
                continue
            v = ni.get(k)
            if v is not None and len({u, v, w}) == 3:
                # e_i & e_j = u, e_j & e_k = w, e_k & e_i = v
                return CycleWitness(3, (i, j, k), (u, w, v))
    return None


def girth_less_than_4(h: Hypergraph) -> bool:
    return short_cycle(h) is not None


def dual(h: Hypergraph) -> Hypergraph:
    """Incidence-transposed hypergraph: vertices and edges swap roles.

    Dual vertex j is edge j of h; the dual edge for h-vertex v is the set of
    h-edges containing v (one dual edge per vertex, duplicates kept).
    Requires every vertex to have positive degree, since an isolated vertex
    would produce an empty dual edge.
    """
    incidence = h.incidence
    for v in range(h.n):
        if not incidence[v]:
            raise ValueError(f"vertex {v} has degree 0; dual edge would be empty")
    return Hypergraph(h.m, incidence)


class EdgeSelection:
    """A subset of edge indices of a host hypergraph, with cached degrees.

    Single-writer: mutate via add/remove only; ``deg[v]`` always equals the
    number of chosen edges containing v.
    """

    __slots__ = ("host", "chosen", "deg")

    def __init__(self, host: Hypergraph, chosen: Iterable[int] = ()):
        self.host = host
        self.chosen = set()
        self.deg = [0] * host.n
        for j in chosen:
            self.add(j)

    def add(self, j: int) -> None:
        if j < 0 or j >= self.host.m:
            raise ValueError(f"edge index {j} out of range")
        if j in self.chosen:
            return
        self.chosen.add(j)
        for v in self.host.edges[j]:
            self.deg[v] += 1

    def remove(self, j: int) -> None:
        self.chosen.remove(j)
        for v in self.host.edges[j]:
            self.deg[v] -= 1

    def indices(self) -> tuple:
        return tuple(sorted(self.chosen))

    def edges_at(self, v: int) -> list:
        """Chosen edge indices through v, ascending."""
        return [j for j in self.host.incidence[v] if j in self.chosen]

    def copy(self) -> "EdgeSelection":
        return EdgeSelection(self.host, self.chosen)

    def __contains__(self, j: int) -> bool:
        return j in self.chosen

    def __len__(self) -> int:
        return len(self.chosen)

    def __repr__(self):
        return f"EdgeSelection({sorted(self.chosen)})"


@dataclass(frozen=True)
class SelectionReport:
    is_t_shallow: bool
    is_hitting: bool
    max_deg: int
    uncovered: tuple


def verify_selection(sel: EdgeSelection, t: int) -> SelectionReport:
    """Check the selection against the t-shallow and hitting predicates."""
    uncovered = tuple(v for v in range(sel.host.n) if sel.deg[v] == 0)
    max_deg = max(sel.deg, default=0)
    return SelectionReport(
        is_t_shallow=max_deg <= t,
        is_hitting=not uncovered,
        max_deg=max_deg,
        uncovered=uncovered,
    )


@dataclass(frozen=True)
class DualColoring:
    """2-coloring of the dual induced by a selection on the host.

    Dual vertex e (= host edge e) is colored True exactly when e is chosen.
    ``proper`` holds when every dual edge (= incidence set of a host vertex)
    contains at least one and at most t-1 chosen elements, which is exactly
    the statement that the selection is hitting and (t-1)-shallow.
    """

    colors: tuple
    proper: bool


def selection_to_2coloring(sel: EdgeSelection, t: int) -> DualColoring:
    colors = tuple(j in sel.chosen for j in range(sel.host.m))
    proper = all(1 <= sel.deg[v] <= t - 1 for v in range(sel.host.n))
    return DualColoring(colors=colors, proper=proper)


def isomorphic(a: Hypergraph, b: Hypergraph, max_n: int = 10) -> bool:
    """Brute-force isomorphism over vertex permutations; test-scale only."""
    if a.n != b.n or a.m != b.m:
        return False
    if a.n > max_n:
        raise ValueError(f"isomorphism check capped at n <= {max_n}")
    if sorted(map(len, a.edges)) != sorted(map(len, b.edges)):
        return False
    if sorted(a.degrees()) != sorted(b.degrees()):
        return False
    target = sorted(b.edges)
    for perm in permutations(range(a.n)):
        mapped = sorted(tuple(sorted(perm[v] for v in e)) for e in a.edges)
        if mapped == target:
            return True
    return False


# ---------------------------------------------------------------------------
# File formats


def to_text(h: Hypergraph) -> str:
    p = h.num_parts
    lines = [f"H {h.n} {h.m} {p}"]
    if p > 0:
        lines.append(" ".join(map(str, h.parts)))
    for e in h.edges:
        lines.append(" ".join(map(str, e)))
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Hypergraph:
    lines = text.splitlines()
    if not lines:
        raise FormatError("line 1: empty input")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "H":
        raise FormatError("line 1: expected header 'H n m p'")
    try:
        n, m, p = int(head[1]), int(head[2]), int(head[3])
    except ValueError:
        raise FormatError("line 1: header fields must be integers") from None
    idx = 1
    parts = None
    if p > 0:
        if idx >= len(lines):
            raise FormatError(f"line {idx + 1}: missing part-id line")
        try:
            parts = [int(x) for x in lines[idx].split()]
        except ValueError:
            raise FormatError(f"line {idx + 1}: part ids must be integers") from None
        if len(parts) != n:
            raise FormatError(f"line {idx + 1}: expected {n} part ids")
        if parts and max(parts) + 1 != p:
            raise FormatError(f"line {idx + 1}: part ids do not match p={p}")
        idx += 1
    edges = []
    for j in range(m):
        if idx >= len(lines):
            raise FormatError(f"line {idx + 1}: missing edge {j}")
        try:
            edge = [int(x) for x in lines[idx].split()]
        except ValueError:
            raise FormatError(f"line {idx + 1}: vertex ids must be integers") from None
        if edge != sorted(edge):
            raise FormatError(f"line {idx + 1}: edge must be ascending")
        edges.append(edge)
        idx += 1
    try:
        return Hypergraph(n, edges, parts)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def to_json_dict(h: Hypergraph) -> dict:
    out = {"n": h.n, "edges": [list(e) for e in h.edges]}
    if h.parts is not None:
        out["parts"] = list(h.parts)
    return out


def from_json_dict(obj: dict) -> Hypergraph:
    try:
        return Hypergraph(obj["n"], obj["edges"], obj.get("parts"))
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad hypergraph JSON: {exc}") from None


def save_hypergraph(h: Hypergraph, path, fmt: str = "text") -> None:
    if fmt == "text":
        data = to_text(h)
    elif fmt == "json":
        data = json.dumps(to_json_dict(h), sort_keys=True) + "\n"
    else:
        raise ValueError(f"unknown format {fmt!r}")
    with open(path, "w") as fh:
        fh.write(data)


def load_hypergraph(path) -> Hypergraph:
    with open(path) as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"bad JSON: {exc}") from None
        return from_json_dict(obj)
    return from_text(text)
