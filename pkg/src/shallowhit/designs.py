"""Combinatorial t-(v,k,lambda) designs.

Covers verification, replication/divisibility arithmetic (always in exact
rationals), native construction of affine planes over prime fields (the
resolvable 2-(q^2, q, 1) designs), and the design-to-dual-hypergraph
transform: the dual of a resolvable design with lambda=1 is a uniform
regular partite hypergraph in which any ``t_strength`` edges share exactly
one vertex, so its maximum (t_strength-1)-shallow edge set has size
t_strength-1.

File format (one design per file)::

    D <t> <v> <k> <lambda> <c>     # c = number of parallel classes, 0 if none
    <one block per line: k ascending point ids>     x b
    <one class per line: "lo hi" half-open block-index range>  x c

The block count b is not stored: a valid design forces
b = lambda * C(v,t) / C(k,t), which must be a positive integer.  Classes
must be contiguous block-index ranges; the native constructions emit blocks
class by class, so this costs no generality here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Optional, Sequence

from .errors import FormatError
from .hypergraph import Hypergraph

__all__ = [
    "Design",
    "DesignReport",
    "replication",
    "divisibility_ok",
    "corollary_witness_n",
    "affine_plane",
    "verify_design",
    "design_dual_hypergraph",
    "save_design",
    "load_design",
]


@dataclass(frozen=True)
class Design:
    t_strength: int
    v: int
    k: int
    lam: int
    blocks: tuple
    resolution: Optional[tuple] = None

    def __post_init__(self):
        object.__setattr__(
            self, "blocks", tuple(tuple(sorted(b)) for b in self.blocks)
        )
        if self.resolution is not None:
            object.__setattr__(
                self, "resolution", tuple(tuple(c) for c in self.resolution)
            )


def replication(v: int, k: int, lam: int, t_strength: int, i: int) -> Fraction:
    """Number of blocks containing a fixed i-set of points, as an exact
    rational: lambda * C(v-i, t-i) / C(k-i, t-i).  Integrality is not
    assumed; non-integral values witness non-existence."""
    if not 0 <= i <= t_strength <= k <= v:
        raise ValueError("requires 0 <= i <= t_strength <= k <= v")
    return Fraction(lam * comb(v - i, t_strength - i), comb(k - i, t_strength - i))


def divisibility_ok(v: int, k: int, lam: int, t_strength: int) -> bool:
    """All replication numbers r_0..r_(t-1) integral."""
    return all(
        replication(v, k, lam, t_strength, i).denominator == 1
        for i in range(t_strength)
    )


def corollary_witness_n(k: int, t_strength: int, mu: int) -> int:
    """Explicit n = 1 + mu * k(k-1)...(k-t+1) making every divisibility
    condition for a (t, v=nk, k, lambda=1) design hold."""
    if not k >= t_strength >= 1 or mu < 1:
        raise ValueError("requires k >= t_strength >= 1 and mu >= 1")
    prod = 1
    for j in range(t_strength):
        prod *= k - j
    return 1 + mu * prod


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


def affine_plane(q: int) -> Design:
    """Resolvable 2-(q^2, q, 1) design from the affine plane over the prime
    field of order q.

    Points are (x, y) numbered x*q + y.  Blocks are the lines y = a*x + b
    (grouped into one parallel class per slope a) followed by the vertical
    lines x = c; q+1 classes of q blocks each.
    """
    if q > 97:
        raise ValueError("q capped at 97")
    if not _is_prime(q):
        raise ValueError(f"q={q} is not prime")
    blocks = []
    classes = []
    for a in range(q):
        start = len(blocks)
        for b in range(q):
            blocks.append(sorted(x * q + (a * x + b) % q for x in range(q)))
        classes.append(tuple(range(start, len(blocks))))
    start = len(blocks)
    for c in range(q):
        blocks.append(list(range(c * q, (c + 1) * q)))
    classes.append(tuple(range(start, len(blocks))))
    return Design(2, q * q, q, 1, tuple(blocks), tuple(classes))


@dataclass(frozen=True)
class DesignReport:
    ok: bool
    design_ok: bool
    resolution_ok: bool
    problems: tuple


def verify_design(d: Design, max_v: int = 64, max_t: int = 3) -> DesignReport:
    """Exhaustively check the design definition and, when present, the
    resolution.  Exponential in t_strength: guarded at v <= 64 and
    t_strength <= 3."""
    if d.v > max_v or d.t_strength > max_t:
        raise ValueError(
            f"verification guarded at v <= {max_v}, t_strength <= {max_t}"
        )
    problems = []
    if not (1 <= d.t_strength <= d.k <= d.v):
        problems.append("parameters must satisfy 1 <= t <= k <= v")
    for j, b in enumerate(d.blocks):
        if len(b) != d.k:
            problems.append(f"block {j} has size {len(b)}, expected {d.k}")
        elif b[0] < 0 or b[-1] >= d.v:
            problems.append(f"block {j} has a point outside [0, {d.v})")
    if not problems:
        counts: dict = {}
        for b in d.blocks:
            for sub in combinations(b, d.t_strength):
                counts[sub] = counts.get(sub, 0) + 1
        for sub in combinations(range(d.v), d.t_strength):
            c = counts.get(sub, 0)
            if c != d.lam:
                problems.append(
                    f"point set {sub} lies in {c} blocks, expected {d.lam}"
                )
                break
    design_ok = not problems
    resolution_ok = True
    if d.resolution is not None:
        seen: set = set()
        for ci, cls in enumerate(d.resolution):
            covered: list = []
            for j in cls:
                if j < 0 or j >= len(d.blocks) or j in seen:
                    resolution_ok = False
                    problems.append(f"class {ci}: bad or repeated block index {j}")
                    break
                seen.add(j)
                covered.extend(d.blocks[j])
            else:
                if sorted(covered) != list(range(d.v)):
                    resolution_ok = False
                    problems.append(f"class {ci} is not a perfect matching")
                continue
            break
        if resolution_ok and len(seen) != len(d.blocks):
            resolution_ok = False
            problems.append("classes do not partition the block list")
    return DesignReport(
        ok=design_ok and resolution_ok,
        design_ok=design_ok,
        resolution_ok=resolution_ok,
        problems=tuple(problems),
    )


def design_dual_hypergraph(d: Design) -> Hypergraph:
    """Dual hypergraph of a resolvable lambda=1 design.

    Vertices are blocks, the edge for point p is the set of blocks through
    p, and parts are the parallel classes.  The output is checked to be
    uniform (edge size = blocks through one point) and to have parts of
    size v/k.
    """
    if d.lam != 1:
        raise ValueError("requires lambda = 1")
    if d.resolution is None:
        raise ValueError("requires a resolvable design")
    if d.v % d.k != 0:
        raise ValueError("requires k | v")
    n_per_part = d.v // d.k
    b = len(d.blocks)
    incident = [[] for _ in range(d.v)]
    for j, blk in enumerate(d.blocks):
        for p in blk:
            incident[p].append(j)
    sizes = {len(x) for x in incident}
    if len(sizes) != 1:
        raise ValueError("not point-regular: dual would not be uniform")
    parts = [0] * b
    for ci, cls in enumerate(d.resolution):
        if len(cls) != n_per_part:
            raise ValueError(f"class {ci} has {len(cls)} blocks, expected v/k")
        for j in cls:
            parts[j] = ci
    return Hypergraph(b, incident, parts)


# ---------------------------------------------------------------------------
# File format


def _expected_blocks(t: int, v: int, k: int, lam: int) -> int:
    r0 = replication(v, k, lam, t, 0)
    if r0.denominator != 1 or r0 <= 0:
        raise FormatError(
            f"parameters ({t},{v},{k},{lam}) force a non-integral block count {r0}"
        )
    return int(r0)


def save_design(d: Design, path) -> None:
    c = 0 if d.resolution is None else len(d.resolution)
    lines = [f"D {d.t_strength} {d.v} {d.k} {d.lam} {c}"]
    for b in d.blocks:
        lines.append(" ".join(map(str, b)))
    if d.resolution is not None:
        for cls in d.resolution:
            lo, hi = cls[0], cls[-1] + 1
            if tuple(cls) != tuple(range(lo, hi)):
                raise ValueError(
                    "file format stores classes as contiguous index ranges; "
                    "reorder blocks class by class before saving"
                )
            lines.append(f"{lo} {hi}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def load_design(path, unchecked: bool = False) -> Design:
    with open(path) as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise FormatError("line 1: empty input")
    head = lines[0].split()
    if len(head) != 6 or head[0] != "D":
        raise FormatError("line 1: expected header 'D t v k lambda c'")
    try:
        t, v, k, lam, c = (int(x) for x in head[1:])
    except ValueError:
        raise FormatError("line 1: header fields must be integers") from None
    b = _expected_blocks(t, v, k, lam)
    blocks = []
    idx = 1
    for j in range(b):
        if idx >= len(lines):
            raise FormatError(f"line {idx + 1}: missing block {j} (expected {b})")
        try:
            blk = [int(x) for x in lines[idx].split()]
        except ValueError:
            raise FormatError(f"line {idx + 1}: point ids must be integers") from None
        if len(blk) != k:
            raise FormatError(f"line {idx + 1}: block has {len(blk)} points, expected {k}")
        blocks.append(blk)
        idx += 1
    resolution = None
    if c > 0:
        resolution = []
        for ci in range(c):
            if idx >= len(lines):
                raise FormatError(f"line {idx + 1}: missing class {ci}")
            fields = lines[idx].split()
            if len(fields) != 2:
                raise FormatError(f"line {idx + 1}: expected 'lo hi' range")
            lo, hi = int(fields[0]), int(fields[1])
            if not 0 <= lo < hi <= b:
                raise FormatError(f"line {idx + 1}: range [{lo},{hi}) out of bounds")
            resolution.append(tuple(range(lo, hi)))
            idx += 1
    d = Design(t, v, k, lam, tuple(blocks), tuple(resolution) if resolution else None)
    if not unchecked:
        report = verify_design(d)
        if not report.ok:
            raise FormatError(f"design verification failed: {report.problems[0]}")
    return d
