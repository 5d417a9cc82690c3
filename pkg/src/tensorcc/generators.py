"""Deterministic constructors for the graph families used in tests and the CLI."""

from __future__ import annotations

from itertools import combinations

import numpy as np

from tensorcc.errors import GraphInputError
from tensorcc.graph import Graph

# Part of the external contract: ``erdos_renyi`` draws one
# ``numpy.random.Generator(PCG64(seed)).random()`` double per vertex pair, in
# lexicographic pair order (0,1), (0,2), ..., (n-2,n-1), and keeps the pair
# when the draw is below ``p``.
ER_GENERATOR = "numpy.random.PCG64"


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphInputError(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphInputError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphInputError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with parts ``0..a-1`` and ``a..a+b-1``."""
    if a < 1 or b < 1:
        raise GraphInputError(f"complete bipartite graph needs nonempty parts, got ({a}, {b})")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    i = 2
    while i * i <= q:
        if q % i == 0:
            return False
        i += 1
    return True


def paley(q: int) -> Graph:
    """Paley graph on the integers mod a prime ``q = 1 (mod 4)``."""
    if not _is_prime(q) or q % 4 != 1:
        raise GraphInputError(f"paley graph needs a prime q = 1 (mod 4), got {q}")
    residues = {x * x % q for x in range(1, q)}
    return Graph.from_edges(q, [(u, v) for u, v in combinations(range(q), 2) if (v - u) % q in residues])


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p) with a reproducible PCG64 stream (see ``ER_GENERATOR``)."""
    if n < 1:
        raise GraphInputError(f"random graph needs n >= 1, got {n}")
    if not 0.0 <= p <= 1.0:
        raise GraphInputError(f"edge probability must lie in [0, 1], got {p}")
    rng = np.random.Generator(np.random.PCG64(seed))
    rows, cols = np.triu_indices(n, k=1)
    keep = rng.random(rows.size) < p
    return Graph.from_edges(n, np.column_stack([rows[keep], cols[keep]]))


def edgeless(n: int) -> Graph:
    return Graph.from_edges(n, [])


FAMILIES = ("complete:n", "cycle:n", "path:n", "bipartite:a,b", "petersen", "paley:q", "er:n,p,seed")


def from_spec(spec: str, seed: int | None = None) -> Graph:
    """Build a graph from a family spec such as ``paley:13`` or ``er:10,0.5,42``.

    ``seed`` supplies the random seed when an ``er`` spec omits it.
    """
    name, _, params = spec.strip().partition(":")
    args = [a.strip() for a in params.split(",")] if params else []

    def ints(count: int) -> list[int]:
        if len(args) != count:
            raise GraphInputError(f"{name!r} takes {count} parameter(s), got {spec!r}")
        try:
            return [int(a) for a in args]
        except ValueError:
            raise GraphInputError(f"non-integer parameter in {spec!r}") from None

    if name == "complete":
        return complete(*ints(1))
    if name == "cycle":
        return cycle(*ints(1))
    if name == "path":
        return path(*ints(1))
    if name == "bipartite":
        return complete_bipartite(*ints(2))
    if name == "petersen":
        ints(0)
        return petersen()
    if name == "paley":
        return paley(*ints(1))
    if name == "er":
        if len(args) == 2 and seed is not None:
            args.append(str(seed))
        if len(args) != 3:
            raise GraphInputError(f"'er' takes n,p,seed (or n,p with --seed), got {spec!r}")
        try:
            n, p, s = int(args[0]), float(args[1]), int(args[2])
        except ValueError:
            raise GraphInputError(f"bad parameters in {spec!r}") from None
        return erdos_renyi(n, p, s)
    raise GraphInputError(f"unknown graph family {name!r}; expected one of {', '.join(FAMILIES)}")
