"""Wall-clock comparison of implicit and explicit product evaluation.

Measures only; nothing here asserts a speed threshold.
"""

from __future__ import annotations

import statistics
import time

from tensorcc import _kernels
from tensorcc.closed_forms import product_global_cc
from tensorcc.generators import erdos_renyi
from tensorcc.product import tensor_product
from tensorcc.triangles import global_cc

DEFAULT_SIZES = (50, 100, 200, 400)


def _median_time(fn, repetitions: int):
    times = []
    result = None
    for _ in range(repetitions):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times), result


def run_bench(
    sizes=DEFAULT_SIZES, repetitions: int = 3, seed: int = 0, mean_degree: float = 3.0, workers: int = 1
) -> list[dict]:
    """One row per size: factors are G(n, mean_degree/n) with seeds ``seed`` and ``seed+1``."""
    _kernels.warm_up()
    rows = []
    for n in sizes:
        p = min(1.0, mean_degree / n)
        g, h = erdos_renyi(n, p, seed), erdos_renyi(n, p, seed + 1)
        implicit_s, implicit = _median_time(lambda: product_global_cc(g, h, workers=workers), repetitions)
        explicit_s, explicit = _median_time(
            lambda: global_cc(tensor_product(g, h, budget=None), workers=workers), repetitions
        )
        rows.append(
            {
                "n": n,
                "factor_edges": [g.edge_count, h.edge_count],
                "product_vertices": n * n,
                "product_edges": 2 * g.edge_count * h.edge_count,
                "implicit_s": implicit_s,
                "explicit_s": explicit_s,
                "speedup": explicit_s / implicit_s if implicit_s > 0 else float("inf"),
                "implicit_cc": implicit,
                "explicit_cc": explicit,
            }
        )
    return rows


def format_table(rows: list[dict]) -> str:
    header = f"{'n':>6} {'product V':>10} {'product E':>10} {'implicit s':>12} {'explicit s':>12} {'speedup':>10}"
    lines = [header, "-" * len(header)]
    for r in rows:
        lines.append(
            f"{r['n']:>6} {r['product_vertices']:>10} {r['product_edges']:>10} "
            f"{r['implicit_s']:>12.6f} {r['explicit_s']:>12.6f} {r['speedup']:>10.1f}"
        )
    return "\n".join(lines)
