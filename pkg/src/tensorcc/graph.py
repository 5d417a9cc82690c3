"""Immutable simple undirected graph in compressed sorted-adjacency form."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from tensorcc import _kernels
from tensorcc.errors import DomainError, GraphInputError


def _frozen(a) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.int64)
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adjacency[offsets[v]:offsets[v+1]]`` is the strictly ascending neighbor
    list of ``v``. Instances are read-only and safe to share between threads.
    Build them with :meth:`from_edges` unless the arrays are already known to
    satisfy the invariants (see :meth:`validate`).
    """

    n: int
    offsets: np.ndarray
    adjacency: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "offsets", _frozen(self.offsets))
        object.__setattr__(self, "adjacency", _frozen(self.adjacency))
        if self.offsets.shape != (self.n + 1,):
            raise GraphInputError(f"offsets must have length n+1={self.n + 1}")
        if self.offsets[-1] != self.adjacency.shape[0]:
            raise GraphInputError("offsets[n] does not match adjacency length")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]] | np.ndarray) -> Graph:
        """Build a graph from vertex pairs.

        Duplicate and reversed pairs collapse to one edge. Endpoints outside
        ``0..n-1`` and self-loops raise :class:`GraphInputError`.
        """
        if n < 0:
            raise GraphInputError(f"vertex count must be non-negative, got {n}")
        if not isinstance(edges, np.ndarray):
            edges = list(edges)
        arr = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        if arr.size:
            bad = np.flatnonzero((arr < 0).any(axis=1) | (arr >= n).any(axis=1))
            if bad.size:
                u, v = arr[bad[0]]
                raise GraphInputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            loops = np.flatnonzero(arr[:, 0] == arr[:, 1])
            if loops.size:
                u = arr[loops[0], 0]
                raise GraphInputError(f"self-loop ({u}, {u}) is not allowed")
        lo = np.minimum(arr[:, 0], arr[:, 1])
        hi = np.maximum(arr[:, 0], arr[:, 1])
        keys = np.unique(lo * n + hi)
        lo, hi = keys // max(n, 1), keys % max(n, 1)
        return cls._from_arcs(n, np.concatenate([lo, hi]), np.concatenate([hi, lo]))

    @classmethod
    def _from_arcs(cls, n: int, src: np.ndarray, dst: np.ndarray) -> Graph:
        # arcs must already be symmetric and duplicate-free
        order = np.argsort(src * n + dst, kind="stable")
        offsets = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=offsets[1:])
        return cls(n, offsets, dst[order])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.offsets, other.offsets)
            and np.array_equal(self.adjacency, other.adjacency)
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"

    @property
    def edge_count(self) -> int:
        return int(self.offsets[-1]) // 2

    def validate(self) -> None:
        """Raise :class:`GraphInputError` unless every structural invariant holds."""
        if self.offsets[0] != 0 or np.any(np.diff(self.offsets) < 0):
            raise GraphInputError("offsets must start at 0 and be nondecreasing")
        if self.offsets[-1] % 2:
            raise GraphInputError("adjacency length must be even")
        adj = self.adjacency
        if adj.size and (adj.min() < 0 or adj.max() >= self.n):
            raise GraphInputError("neighbor outside vertex range")
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees())
        if np.any(src == adj):
            raise GraphInputError("self-loop in adjacency")
        same_row = src[1:] == src[:-1]
        if np.any(same_row & (adj[1:] <= adj[:-1])):
            raise GraphInputError("neighbor lists must be strictly ascending")
        fwd = np.sort(src * self.n + adj)
        rev = np.sort(adj * self.n + src)
        if not np.array_equal(fwd, rev):
            raise GraphInputError("adjacency is not symmetric")

    def _check_vertex(self, v: int) -> int:
        v = int(v)
        if not 0 <= v < self.n:
            raise GraphInputError(f"vertex {v} outside 0..{self.n - 1}")
        return v

    def _require_nonempty(self) -> None:
        if self.n == 0:
            raise GraphInputError("graph has no vertices")

    def degree(self, v: int) -> int:
        v = self._check_vertex(v)
        return int(self.offsets[v + 1] - self.offsets[v])

    def degrees(self) -> np.ndarray:
        return np.diff(self.offsets)

    def neighbors(self, v: int) -> np.ndarray:
        """Ascending neighbors of ``v`` (a read-only view)."""
        v = self._check_vertex(v)
        return self.adjacency[self.offsets[v] : self.offsets[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.neighbors(u)
        i = np.searchsorted(nb, v)
        return bool(i < nb.size and nb[i] == v)

    def edges(self) -> np.ndarray:
        """``(m, 2)`` array of edges ``u < v`` in lexicographic order."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees())
        keep = src < self.adjacency
        return np.column_stack([src[keep], self.adjacency[keep]])

    def min_degree(self) -> int:
        self._require_nonempty()
        return int(self.degrees().min())

    def average_degree(self) -> Fraction:
        """Exact average degree ``2|E|/n``; use ``float()`` for the real value."""
        self._require_nonempty()
        return Fraction(int(self.offsets[-1]), self.n)

    def regularity(self) -> int | None:
        """Common degree if the graph is regular, else ``None``."""
        self._require_nonempty()
        deg = self.degrees()
        return int(deg[0]) if np.all(deg == deg[0]) else None

    def neighborhood_min_degree(self, v: int) -> int:
        """Minimum degree of the subgraph induced by the neighbors of ``v``.

        A degree-1 vertex gives 0. An isolated vertex raises
        :class:`DomainError`, since its induced subgraph is empty.
        """
        v = self._check_vertex(v)
        if self.offsets[v + 1] == self.offsets[v]:
            raise DomainError(f"vertex {v} is isolated; its neighborhood is empty")
        return int(_kernels.neighborhood_min_degree(self.offsets, self.adjacency, v))

    def neighborhood_min_degrees(self) -> np.ndarray:
        out = np.zeros(self.n, dtype=np.int64)
        _kernels.neighborhood_min_degrees(self.offsets, self.adjacency, out)
        return out

    def sigma(self) -> int:
        """Minimum over all vertices of :meth:`neighborhood_min_degree`."""
        self._require_nonempty()
        if self.min_degree() == 0:
            raise DomainError("sigma is undefined for graphs with isolated vertices")
        return int(self.neighborhood_min_degrees().min())
