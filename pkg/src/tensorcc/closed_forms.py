"""Clustering coefficients of ``G x H`` computed from the factors alone.

Everything here is *implicit*: product quantities are derived from factor
degrees and triangle counts without materializing the product. Floating
results are returned by default; pass ``exact=True`` for :class:`Fraction`.

The per-vertex product formula ``f(u,v) * Cc_u(G) * Cc_v(H)`` only holds for
``deg u, deg v >= 2``. For lower degrees the product coefficient is computed
from the product triangle count ``2 t_G(u) t_H(v)`` and the true product
degree, which makes every function total over simple graphs.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from tensorcc.errors import CapacityError, DomainError, GraphInputError
from tensorcc.graph import Graph
from tensorcc.product import DEFAULT_EDGE_BUDGET, tensor_product
from tensorcc.triangles import cc_report, local_cc_exact, triangles_per_vertex

TOLERANCE = 1e-12
SRG_MAX_ORDER = 5000


def product_triangles(tg_u: int, th_v: int) -> int:
    """Triangles through ``(u, v)`` in ``G x H``: each factor-triangle pair yields two."""
    return 2 * tg_u * th_v


def coupling_factor(deg_g_u: int, deg_h_v: int, exact: bool = False) -> float | Fraction:
    """``(d1-1)(d2-1) / (d1*d2-1)``, which lies strictly between 0 and 1."""
    if deg_g_u < 2 or deg_h_v < 2:
        raise DomainError(f"coupling factor needs both degrees >= 2, got ({deg_g_u}, {deg_h_v})")
    f = Fraction((deg_g_u - 1) * (deg_h_v - 1), deg_g_u * deg_h_v - 1)
    return f if exact else float(f)


def _pair_local_exact(dg: int, tg: int, dh: int, th: int) -> Fraction:
    if dg >= 2 and dh >= 2:
        return coupling_factor(dg, dh, exact=True) * local_cc_exact(tg, dg) * local_cc_exact(th, dh)
    return local_cc_exact(product_triangles(tg, th), dg * dh)


def _pair_local_float(dg: int, tg: int, dh: int, th: int) -> float:
    if dg >= 2 and dh >= 2:
        f = (dg - 1) * (dh - 1) / (dg * dh - 1)
        return f * (2 * tg / (dg * (dg - 1))) * (2 * th / (dh * (dh - 1)))
    d = dg * dh
    if d <= 1:
        return 0.0
    return 2 * product_triangles(tg, th) / (d * (d - 1))


def product_local_cc(g: Graph, h: Graph, u: int, v: int, exact: bool = False) -> float | Fraction:
    """Local coefficient of ``(u, v)`` in ``G x H`` from factor statistics."""
    dg, dh = g.degree(u), h.degree(v)
    tg = int(triangles_per_vertex(g)[u]) if dg >= 2 else 0
    th = int(triangles_per_vertex(h)[v]) if dh >= 2 else 0
    if exact:
        return _pair_local_exact(dg, tg, dh, th)
    return _pair_local_float(dg, tg, dh, th)


def product_local_cc_all(g: Graph, h: Graph, workers: int = 1) -> np.ndarray:
    """Every product local coefficient, flattened in ``u * h.n + v`` order."""
    dg, dh = g.degrees(), h.degrees()
    tg, th = triangles_per_vertex(g, workers), triangles_per_vertex(h, workers)
    D1, D2 = np.meshgrid(dg, dh, indexing="ij")
    T1, T2 = np.meshgrid(tg, th, indexing="ij")
    out = np.zeros(D1.shape, dtype=np.float64)

    both = (D1 >= 2) & (D2 >= 2)
    a, b, s, t = D1[both], D2[both], T1[both], T2[both]
    f = (a - 1) * (b - 1) / (a * b - 1)
    out[both] = f * (2 * s / (a * (a - 1))) * (2 * t / (b * (b - 1)))

    D = D1 * D2
    rest = ~both & (D > 1)
    d = D[rest]
    out[rest] = 2 * (2 * T1[rest] * T2[rest]) / (d * (d - 1))
    return out.ravel()


def _classes(degrees: np.ndarray, triangles: np.ndarray) -> list[tuple[int, int, int]]:
    """Sorted ``(degree, triangles, multiplicity)`` classes of a factor."""
    counts = Counter(zip(degrees.tolist(), triangles.tolist()))
    return [(d, t, c) for (d, t), c in sorted(counts.items())]


def _product_global(cg, ch, n1: int, n2: int, exact: bool) -> float | Fraction:
    if exact:
        total = sum(
            (a * b * _pair_local_exact(dg, tg, dh, th) for dg, tg, a in cg for dh, th, b in ch),
            Fraction(0),
        )
        return total / (n1 * n2)
    terms = [a * b * _pair_local_float(dg, tg, dh, th) for dg, tg, a in cg for dh, th, b in ch]
    return math.fsum(terms) / (n1 * n2)


def product_global_cc(g: Graph, h: Graph, exact: bool = False, workers: int = 1) -> float | Fraction:
    """Global coefficient of ``G x H``: mean of the product local coefficients.

    Factor vertices sharing a (degree, triangle count) class contribute
    identical terms, so the double sum runs over class pairs weighted by
    multiplicity. The floating sum uses ``math.fsum`` and is therefore
    independent of term order and worker count.
    """
    if g.n == 0 or h.n == 0:
        raise GraphInputError("product clustering coefficient needs two nonempty graphs")
    cg = _classes(g.degrees(), triangles_per_vertex(g, workers))
    ch = _classes(h.degrees(), triangles_per_vertex(h, workers))
    return _product_global(cg, ch, g.n, h.n, exact)


@dataclass(frozen=True)
class UpperBoundCheck:
    """Outcome of comparing ``Cc(G x H)`` with ``Cc(G) * Cc(H)``.

    ``applicable`` is False when a factor has minimum degree below 2; the
    remaining fields are still filled in for information. ``relation`` is the
    exact comparison: ``"strict"`` or ``"equality"``.
    """

    applicable: bool
    bound: float
    holds: bool
    strict_expected: bool
    relation: str
    implicit_exact: Fraction
    bound_exact: Fraction

    @property
    def status(self) -> str:
        return "ok" if self.applicable else "not-applicable"


def cc_upper_bound_check(g: Graph, h: Graph) -> UpperBoundCheck:
    rg, rh = cc_report(g, exact=True), cc_report(h, exact=True)
    cg, ch = _classes(g.degrees(), rg.triangles), _classes(h.degrees(), rh.triangles)
    bound = rg.global_cc_exact * rh.global_cc_exact
    implicit = _product_global(cg, ch, g.n, h.n, True)
    implicit_float = _product_global(cg, ch, g.n, h.n, False)
    bound_float = rg.global_cc * rh.global_cc
    return UpperBoundCheck(
        applicable=g.min_degree() >= 2 and h.min_degree() >= 2,
        bound=bound_float,
        holds=implicit_float <= bound_float + TOLERANCE,
        strict_expected=rg.triangle_total > 0 and rh.triangle_total > 0,
        relation="strict" if implicit < bound else "equality",
        implicit_exact=implicit,
        bound_exact=bound,
    )


def cc_lower_bound(g: Graph, h: Graph, exact: bool = False) -> float | Fraction | None:
    """``sigma_G * sigma_H / (avgdeg_G * avgdeg_H - 1)``, or ``None`` if not applicable.

    The bound requires minimum degree at least 2 in both factors.
    """
    if g.min_degree() < 2 or h.min_degree() < 2:
        return None
    value = Fraction(g.sigma() * h.sigma()) / (g.average_degree() * h.average_degree() - 1)
    return value if exact else float(value)


def regular_product_cc(g: Graph, h: Graph, exact: bool = False) -> float | Fraction:
    """Product coefficient for regular factors: ``f * Cc(G) * Cc(H)``."""
    dg, dh = g.regularity(), h.regularity()
    if dg is None or dh is None:
        raise DomainError("both factors must be regular")
    if dg < 2 or dh < 2:
        raise DomainError(f"regular degrees must be >= 2, got ({dg}, {dh})")
    value = (
        coupling_factor(dg, dh, exact=True)
        * cc_report(g, exact=True).global_cc_exact
        * cc_report(h, exact=True).global_cc_exact
    )
    return value if exact else float(value)


@dataclass(frozen=True)
class SrgParams:
    """Strongly regular parameters; ``mu2`` is ``None`` for complete graphs."""

    n: int
    d: int
    mu1: int
    mu2: int | None = None

    def __post_init__(self):
        if self.d < 0 or (self.d >= 1 and self.mu1 > self.d - 1):
            raise DomainError(f"inconsistent srg parameters {self.as_tuple()}")
        if self.mu2 is not None and self.mu2 > self.d:
            raise DomainError(f"inconsistent srg parameters {self.as_tuple()}")

    def as_tuple(self) -> tuple[int, int, int, int | None]:
        return (self.n, self.d, self.mu1, self.mu2)


def srg_detect(g: Graph, max_order: int = SRG_MAX_ORDER) -> SrgParams | None:
    """Return the srg parameters of ``g`` or ``None`` if it is not strongly regular.

    Counts common neighbors of every vertex pair (dense, blocked matrix
    products); ``max_order`` caps the graph size.
    """
    if g.n < 2:
        return None
    if g.n > max_order:
        raise CapacityError(f"srg detection limited to {max_order} vertices, graph has {g.n}")
    d = g.regularity()
    if d is None:
        return None
    A = np.zeros((g.n, g.n), dtype=np.float32)
    A[np.repeat(np.arange(g.n), g.degrees()), g.adjacency] = 1.0
    adj = A.astype(bool)
    mu1 = mu2 = None
    block = 512
    for lo in range(0, g.n, block):
        hi = min(lo + block, g.n)
        common = A[lo:hi] @ A
        mask = adj[lo:hi]
        non = ~mask
        non[np.arange(hi - lo), np.arange(lo, hi)] = False
        for values, seen in ((common[mask], mu1), (common[non], mu2)):
            if values.size and (values.min() != values.max() or (seen is not None and values[0] != seen)):
                return None
        if mask.any():
            mu1 = int(common[mask][0])
        if non.any():
            mu2 = int(common[non][0])
    return SrgParams(g.n, d, 0 if mu1 is None else mu1, mu2)


def srg_cc(p: SrgParams, exact: bool = False) -> float | Fraction:
    """Global coefficient of an srg: ``mu1 / (d - 1)``."""
    if p.d < 2:
        raise DomainError(f"srg clustering coefficient needs d >= 2, got d={p.d}")
    value = Fraction(p.mu1, p.d - 1)
    return value if exact else float(value)


def srg_product_cc(pg: SrgParams, ph: SrgParams, exact: bool = False) -> float | Fraction:
    """Product coefficient of two srgs: ``mu1_G * mu1_H / (d_G * d_H - 1)``."""
    if pg.d < 2 or ph.d < 2:
        raise DomainError(f"srg product needs both d >= 2, got ({pg.d}, {ph.d})")
    value = Fraction(pg.mu1 * ph.mu1, pg.d * ph.d - 1)
    return value if exact else float(value)


@dataclass(frozen=True)
class ProductCcReport:
    n1: int
    n2: int
    mode: str
    implicit_global_cc: float
    explicit_global_cc: float | None
    upper_bound: float
    lower_bound: float | None
    upper_ok: bool
    lower_ok: bool | None
    abs_diff: float | None = None
    implicit_exact: Fraction | None = None
    explicit_exact: Fraction | None = None
    upper_bound_exact: Fraction | None = None
    lower_bound_exact: Fraction | None = None


MODES = ("implicit", "explicit", "both")


def product_cc_report(
    g: Graph,
    h: Graph,
    mode: str = "implicit",
    exact: bool = False,
    budget: int | None = DEFAULT_EDGE_BUDGET,
    workers: int = 1,
) -> ProductCcReport:
    """Implicit product coefficient, bounds, and optionally the explicit value.

    The implicit value is always computed; ``mode`` selects whether the
    product is also materialized (subject to ``budget``).
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if g.n == 0 or h.n == 0:
        raise GraphInputError("product clustering coefficient needs two nonempty graphs")
    rg, rh = cc_report(g, exact=True, workers=workers), cc_report(h, exact=True, workers=workers)
    cg, ch = _classes(g.degrees(), rg.triangles), _classes(h.degrees(), rh.triangles)
    implicit = _product_global(cg, ch, g.n, h.n, False)
    implicit_q = _product_global(cg, ch, g.n, h.n, True)
    upper = rg.global_cc * rh.global_cc
    upper_q = rg.global_cc_exact * rh.global_cc_exact
    lower_q = cc_lower_bound(g, h, exact=True)
    lower = None if lower_q is None else float(lower_q)

    explicit = explicit_q = diff = None
    if mode in ("explicit", "both"):
        rp = cc_report(tensor_product(g, h, budget), exact=exact, workers=workers)
        explicit, explicit_q = rp.global_cc, rp.global_cc_exact
        if mode == "both":
            diff = abs(implicit - explicit)

    return ProductCcReport(
        n1=g.n,
        n2=h.n,
        mode=mode,
        implicit_global_cc=implicit,
        explicit_global_cc=explicit,
        upper_bound=upper,
        lower_bound=lower,
        upper_ok=implicit <= upper + TOLERANCE,
        lower_ok=None if lower is None else implicit >= lower - TOLERANCE,
        abs_diff=diff,
        implicit_exact=implicit_q if exact else None,
        explicit_exact=explicit_q,
        upper_bound_exact=upper_q if exact else None,
        lower_bound_exact=lower_q if exact else None,
    )
