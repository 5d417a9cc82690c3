"""Triangle counts and local/global clustering coefficients.

The global coefficient divides by *all* ``n`` vertices while only vertices of
degree at least 2 contribute; it is not the transitivity ratio.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from tensorcc import _kernels
from tensorcc.errors import GraphInputError
from tensorcc.graph import Graph


@dataclass(frozen=True)
class CcReport:
    triangles: np.ndarray
    local_cc: np.ndarray
    global_cc: float
    triangle_total: int
    global_cc_exact: Fraction | None = None
    local_cc_exact: tuple[Fraction, ...] | None = None


def triangles_per_vertex(g: Graph, workers: int = 1) -> np.ndarray:
    """Number of triangles through each vertex, by merge-intersection.

    With ``workers > 1`` the vertex range is split into contiguous chunks
    handled by threads; the counts are integers so the result is identical
    for every worker count.
    """
    out = np.zeros(g.n, dtype=np.int64)
    if g.n == 0:
        return out
    workers = max(1, min(int(workers), g.n))
    if workers == 1:
        _kernels.triangles_range(g.offsets, g.adjacency, 0, g.n, out)
        return out
    bounds = np.linspace(0, g.n, workers + 1).astype(np.int64)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        jobs = [
            pool.submit(_kernels.triangles_range, g.offsets, g.adjacency, int(lo), int(hi), out)
            for lo, hi in zip(bounds[:-1], bounds[1:])
        ]
        for job in jobs:
            job.result()
    return out


def triangles_at(g: Graph, v: int) -> int:
    """Merge-kernel triangle count for a single vertex."""
    v = g._check_vertex(v)
    out = np.zeros(v + 1, dtype=np.int64)
    _kernels.triangles_range(g.offsets, g.adjacency, v, v + 1, out)
    return int(out[v])


def oracle_triangles(g: Graph, v: int, adj_sets=None) -> int:
    """Brute-force triangle count at ``v``: test every pair of neighbors.

    Independent of the merge kernel. Pass ``adj_sets`` (from
    :func:`neighbor_sets`) when calling for many vertices of one graph.
    """
    nbrs = g.neighbors(v).tolist()
    if adj_sets is None:
        adj_sets = {w: set(g.neighbors(w).tolist()) for w in nbrs}
    count = 0
    for a, b in combinations(nbrs, 2):
        if b in adj_sets[a]:
            count += 1
    return count


def neighbor_sets(g: Graph) -> list[set[int]]:
    adj = g.adjacency.tolist()
    off = g.offsets.tolist()
    return [set(adj[off[v] : off[v + 1]]) for v in range(g.n)]


def local_cc_values(triangles: np.ndarray, degrees: np.ndarray) -> np.ndarray:
    """Vectorized local coefficient ``2t / (d(d-1))``, zero where ``d <= 1``."""
    t = np.asarray(triangles, dtype=np.int64)
    d = np.asarray(degrees, dtype=np.int64)
    pairs = d * (d - 1)
    out = np.zeros(t.shape, dtype=np.float64)
    np.divide(2 * t, pairs, out=out, where=pairs > 0)
    return out


def local_cc_exact(t: int, d: int) -> Fraction:
    if d <= 1:
        return Fraction(0)
    return Fraction(2 * t, d * (d - 1))


def local_cc(g: Graph, v: int, exact: bool = False) -> float | Fraction:
    d = g.degree(v)
    t = triangles_at(g, v) if d >= 2 else 0
    value = local_cc_exact(t, d)
    return value if exact else float(value)


def _global_exact(triangles: np.ndarray, degrees: np.ndarray) -> Fraction:
    classes = Counter(zip(degrees.tolist(), triangles.tolist()))
    total = sum((c * local_cc_exact(t, d) for (d, t), c in classes.items()), Fraction(0))
    return total / len(triangles)


def global_cc(g: Graph, exact: bool = False, workers: int = 1) -> float | Fraction:
    """Mean local coefficient over all ``n`` vertices."""
    if g.n == 0:
        raise GraphInputError("global clustering coefficient needs at least one vertex")
    tri = triangles_per_vertex(g, workers)
    if exact:
        return _global_exact(tri, g.degrees())
    return math.fsum(local_cc_values(tri, g.degrees())) / g.n


def is_triangle_free(g: Graph) -> bool:
    return not triangles_per_vertex(g).any()


def cc_report(g: Graph, exact: bool = False, workers: int = 1) -> CcReport:
    if g.n == 0:
        raise GraphInputError("global clustering coefficient needs at least one vertex")
    tri = triangles_per_vertex(g, workers)
    deg = g.degrees()
    local = local_cc_values(tri, deg)
    total = int(tri.sum())
    assert total % 3 == 0
    exact_global = exact_local = None
    if exact:
        exact_global = _global_exact(tri, deg)
        exact_local = tuple(local_cc_exact(t, d) for t, d in zip(tri.tolist(), deg.tolist()))
    return CcReport(
        triangles=tri,
        local_cc=local,
        global_cc=math.fsum(local) / g.n,
        triangle_total=total // 3,
        global_cc_exact=exact_global,
        local_cc_exact=exact_local,
    )
