"""Explicit tensor (Kronecker) product of two graphs.

Product vertex ``(u, v)`` is stored at flat index ``u * h.n + v``; every
implicit/explicit comparison in the package relies on this row-major order.
"""

from __future__ import annotations

import numpy as np

from tensorcc.errors import CapacityError, GraphInputError
from tensorcc.graph import Graph

DEFAULT_EDGE_BUDGET = 10**8

_INDEX_MAX = np.iinfo(np.int64).max


def encode(u: int, v: int, n2: int) -> int:
    return u * n2 + v


def decode(index: int, n2: int) -> tuple[int, int]:
    return divmod(index, n2)


def product_size(g: Graph, h: Graph) -> tuple[int, int]:
    """Vertex and edge count of ``g x h`` without building it."""
    return g.n * h.n, 2 * g.edge_count * h.edge_count


def tensor_product(g: Graph, h: Graph, budget: int | None = DEFAULT_EDGE_BUDGET) -> Graph:
    """Materialize ``g x h``: ``(u,v) ~ (u',v')`` iff ``u ~ u'`` and ``v ~ v'``.

    Raises :class:`CapacityError` when the product has more than ``budget``
    edges (``None`` disables the guard) or its arc keys would not fit in int64.
    """
    if g.n == 0 or h.n == 0:
        raise GraphInputError("tensor product needs two nonempty graphs")
    n, m = product_size(g, h)
    if budget is not None and m > budget:
        raise CapacityError(
            f"product has {m} edges ({g.n}x{h.n}={n} vertices), over the budget of {budget} edges"
        )
    if n > 0 and n > _INDEX_MAX // n:
        raise CapacityError(f"product with {n} vertices exceeds the int64 index range")

    g_src = np.repeat(np.arange(g.n, dtype=np.int64), g.degrees())
    h_src = np.repeat(np.arange(h.n, dtype=np.int64), h.degrees())
    # every arc pair (u->u', v->v') gives the product arc (u,v)->(u',v')
    a = g.adjacency.size
    b = h.adjacency.size
    src = np.repeat(g_src * h.n, b) + np.tile(h_src, a)
    dst = np.repeat(g.adjacency * h.n, b) + np.tile(h.adjacency, a)
    return Graph._from_arcs(n, src, dst)


def product_degree(g: Graph, h: Graph, u: int, v: int) -> int:
    return g.degree(u) * h.degree(v)
