"""Deterministic hypergraph generators plus seeded random instances.

The projective constructions work over the field with two elements: a vector
in F_2^(t+1) is stored as an integer whose bit t-j holds coordinate j, so the
"first coordinate" unit vector is the integer 2^t.  Vertex ids are assigned
by ascending integer value of the vector (value minus 1 for the full space),
which keeps every generator reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, product
from math import comb

from .errors import GaveUpError
from .hypergraph import Hypergraph

__all__ = [
    "projective_full",
    "projective_truncated",
    "codegree_gadget_uniform",
    "codegree_gadget_partite",
    "bipartite_tight_gadget",
    "figure1_witness",
    "random_regular",
    "random_regular_partite",
    "random_girth4_regular",
]

_EDGE_GUARD = 5_000_000  # combinatorial generators refuse beyond this


def _ceil_frac(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def projective_full(t: int) -> Hypergraph:
    """Hyperplane hypergraph of the binary projective space of dimension t.

    Vertices are the nonzero vectors of F_2^(t+1) (vertex i is vector i+1);
    the edge for a nonzero vector a consists of the nonzero x orthogonal to
    a.  The result has 2^(t+1)-1 vertices and equally many edges, is
    (2^t-1)-uniform and (2^t-1)-regular, and any t edges share a vertex.
    t=2 yields the 7-point plane.
    """
    if not 2 <= t <= 20:
        raise ValueError("t must be in [2, 20]")
    size = 1 << (t + 1)
    edges = []
    for a in range(1, size):
        edges.append(
            [x - 1 for x in range(1, size) if ((a & x).bit_count() & 1) == 0]
        )
    return Hypergraph(size - 1, edges)


def projective_truncated(t: int) -> Hypergraph:
    """Truncated binary projective construction: remove the first-coordinate
    unit vector and every edge through it.

    The result is r-uniform and r-partite with r = 2^t - 1, has 2r vertices
    in r parts of size 2 (a vertex is paired with its translate by the
    removed vector), 2^t edges, and is 2^(t-1)-regular.  It admits no
    (t-1)-shallow hitting edge set because any t of its edges still share a
    vertex.
    """
    if not 2 <= t <= 16:
        raise ValueError("t must be in [2, 16]")
    size = 1 << (t + 1)
    x0 = 1 << t
    vectors = [x for x in range(1, size) if x != x0]
    vid = {x: i for i, x in enumerate(vectors)}
    parts = [0] * len(vectors)
    part = 0
    for x in vectors:
        if x < x ^ x0:
            parts[vid[x]] = part
            parts[vid[x ^ x0]] = part
            part += 1
    edges = []
    for a in range(x0, size):  # keep the edges avoiding x0
        edges.append([vid[x] for x in vectors if ((a & x).bit_count() & 1) == 0])
    return Hypergraph(len(vectors), edges, parts)


def codegree_gadget_uniform(n: int, r: int, t: int) -> Hypergraph:
    """r-uniform hypergraph on n vertices with co-degree at least
    n/((r-1)t+1) - 1 and no t-shallow hitting edge set.

    Vertices split into a small head A (size ceil(n/k - 1), k=(r-1)t+1) and
    a tail; edges are exactly the r-subsets meeting A.  Every hitting set
    needs more than |A|*t edges to cover the tail, which the head cannot
    absorb.
    """
    if r < 2 or t < 2:
        raise ValueError("requires r >= 2 and t >= 2")
    if n <= r:
        raise ValueError("requires n > r")
    k = (r - 1) * t + 1
    a_size = _ceil_frac(Fraction(n, k) - 1)
    if a_size <= 0:
        raise ValueError(f"n={n} too small relative to k={k}: head would be empty")
    if comb(n, r) > _EDGE_GUARD:
        raise ValueError(f"C({n},{r}) exceeds the generator guard")
    edges = [c for c in combinations(range(n), r) if c[0] < a_size]
    return Hypergraph(n, edges)


def codegree_gadget_partite(n: int, r: int, t: int) -> Hypergraph:
    """Partite analogue of the uniform co-degree gadget.

    r parts of size n; each part has a marked head of size ceil(n/k - 1);
    edges are the legal r-sets meeting the union of the heads.  Partite
    co-degree at least n/k - 1, no t-shallow hitting edge set.
    """
    if r < 2 or t < 2:
        raise ValueError("requires r >= 2 and t >= 2")
    if n <= 1:
        raise ValueError("requires n > 1")
    k = (r - 1) * t + 1
    a_size = _ceil_frac(Fraction(n, k) - 1)
    if a_size <= 0:
        raise ValueError(f"n={n} too small relative to k={k}: heads would be empty")
    if n**r > _EDGE_GUARD:
        raise ValueError(f"{n}^{r} legal sets exceeds the generator guard")
    edges = []
    for coords in product(range(n), repeat=r):
        if any(c < a_size for c in coords):
            edges.append([i * n + c for i, c in enumerate(coords)])
    parts = [i for i in range(r) for _ in range(n)]
    return Hypergraph(r * n, edges, parts)


def bipartite_tight_gadget(n: int, t: int) -> Hypergraph:
    """Bipartite graph with parts of size n and minimum degree
    (n-1)/(t+1) that has no t-shallow hitting edge set.

    Each side splits into a small and a large block; edges join small-A to
    large-B and large-A to small-B completely.  The large B block then has
    |B1| = t|N(B1)| + 1, violating the Hall-type condition.  Requires
    (t+1) | (n-1).
    """
    if t < 1 or n < 2:
        raise ValueError("requires t >= 1 and n >= 2")
    if (n - 1) % (t + 1) != 0:
        raise ValueError(f"(t+1)={t + 1} must divide n-1={n - 1}")
    small = (n - 1) // (t + 1)
    large = n - small
    if 2 * n * max(small, 1) > _EDGE_GUARD:
        raise ValueError("gadget exceeds the generator guard")
    a1 = range(0, small)
    a2 = range(small, n)
    b1 = range(n, n + large)
    b2 = range(n + large, 2 * n)
    edges = [(a, b) for a in a1 for b in b1]
    edges += [(a, b) for a in a2 for b in b2]
    parts = [0] * n + [1] * n
    return Hypergraph(2 * n, edges, parts)


# Minimal 2-regular 3-uniform 3-partite hypergraph with no perfect matching,
# frozen from a one-time exhaustive search over all such hypergraphs by part
# size (size-1 parts admit none; this 6-vertex instance is the lexicographic
# minimum among the size-2 witnesses).  It stands in for a pictorial example
# that has no recoverable edge list.
_FIGURE1_EDGES = ((0, 2, 4), (0, 3, 5), (1, 2, 5), (1, 3, 4))
_FIGURE1_PARTS = (0, 0, 1, 1, 2, 2)


def figure1_witness() -> Hypergraph:
    """Smallest 2-regular 3-uniform 3-partite hypergraph without a perfect
    matching (any 3 or 4 of its edges form a 2-shallow hitting edge set)."""
    return Hypergraph(6, _FIGURE1_EDGES, _FIGURE1_PARTS)


def random_regular(
    n: int, r: int, d: int, seed: int, max_tries: int = 100_000
) -> Hypergraph:
    """Random d-regular r-uniform hypergraph via the configuration model.

    Each vertex contributes d stubs; a shuffle is cut into groups of r and
    the whole attempt is rejected if any group repeats a vertex.  Parallel
    edges are allowed.  Deterministic per seed.
    """
    if n < 1 or r < 1 or d < 1:
        raise ValueError("n, r, d must be positive")
    if (n * d) % r != 0:
        raise ValueError(f"n*d={n * d} must be divisible by r={r}")
    if r > n:
        raise ValueError("r cannot exceed n")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(d)]
    for _ in range(max_tries):
        rng.shuffle(stubs)
        edges = []
        ok = True
        for i in range(0, len(stubs), r):
            group = stubs[i : i + r]
            if len(set(group)) != r:
                ok = False
                break
            edges.append(sorted(group))
        if ok:
            return Hypergraph(n, edges)
    raise GaveUpError(
        f"no repeat-free configuration in {max_tries} tries (n={n}, r={r}, d={d})"
    )


def random_regular_partite(
    n_per_part: int, r: int, d: int, seed: int
) -> Hypergraph:
    """Random d-regular r-uniform r-partite hypergraph, parts of equal size.

    One independent stub shuffle per part; edge j takes slot j of every
    part.  Within-edge repeats are impossible across distinct parts, so a
    single draw always succeeds (parallel edges may occur).
    """
    if n_per_part < 1 or r < 1 or d < 1:
        raise ValueError("n_per_part, r, d must be positive")
    rng = random.Random(seed)
    m = n_per_part * d
    columns = []
    for i in range(r):
        stubs = [i * n_per_part + v for v in range(n_per_part) for _ in range(d)]
        rng.shuffle(stubs)
        columns.append(stubs)
    edges = [sorted(col[j] for col in columns) for j in range(m)]
    parts = [i for i in range(r) for _ in range(n_per_part)]
    return Hypergraph(r * n_per_part, edges, parts)


def random_girth4_regular(
    n: int, r: int, d: int, seed: int, max_tries: int = 1000
) -> Hypergraph:
    """Rejection-sample configuration-model instances until the girth is at
    least 4.  Feasible only where short cycles are rare (small d); raises
    GaveUpError when the try budget runs out."""
    from .hypergraph import girth_less_than_4

    rng = random.Random(seed)
    for _ in range(max_tries):
        h = random_regular(n, r, d, seed=rng.getrandbits(63))
        if not girth_less_than_4(h):
            return h
    raise GaveUpError(
        f"no girth-4 instance in {max_tries} tries (n={n}, r={r}, d={d})"
    )
