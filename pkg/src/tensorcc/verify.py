"""Check every closed form against a materialized product, for one factor pair."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np

from tensorcc import closed_forms as cf
from tensorcc.errors import CapacityError
from tensorcc.graph import Graph
from tensorcc.graphio import fraction_str
from tensorcc.product import DEFAULT_EDGE_BUDGET, tensor_product
from tensorcc.triangles import _global_exact, cc_report, local_cc_values, triangles_per_vertex

PASS, FAIL, NA = "pass", "fail", "not-applicable"


@dataclass
class Check:
    name: str
    status: str
    note: str = ""
    values: dict[str, Any] = field(default_factory=dict)
    tolerance: float | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "status": self.status,
            "note": self.note,
            "values": self.values,
            "tolerance": self.tolerance,
        }


@dataclass
class VerifyOutcome:
    checks: list[Check]

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def to_dict(self) -> dict[str, Any]:
        return {"kind": "verify", "passed": self.passed, "checks": [c.to_dict() for c in self.checks]}

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            vals = " ".join(f"{k}={_fmt(v)}" for k, v in c.values.items())
            line = f"{c.status.upper():<15} {c.name:<22} {c.note}"
            lines.append(f"{line}  [{vals}]" if vals else line)
        failed = sum(c.status == FAIL for c in self.checks)
        lines.append(f"{'PASSED' if self.passed else 'FAILED'}: {len(self.checks)} checks, {failed} failed")
        return "\n".join(lines)


def _fmt(v) -> str:
    return repr(v) if isinstance(v, float) else str(v)


def _q(x: Fraction | None) -> str | None:
    return fraction_str(x)


def verify_pair(
    g: Graph, h: Graph, budget: int | None = DEFAULT_EDGE_BUDGET, workers: int = 1
) -> VerifyOutcome:
    """Run all checks in a fixed order; inapplicable checks are reported, not skipped.

    Raises :class:`CapacityError` if the product exceeds ``budget`` edges.
    """
    tol = cf.TOLERANCE
    checks: list[Check] = []
    rg, rh = cc_report(g, exact=True, workers=workers), cc_report(h, exact=True, workers=workers)
    p = tensor_product(g, h, budget)
    tp = triangles_per_vertex(p, workers)

    expected = 2 * np.outer(rg.triangles, rh.triangles).ravel()
    mismatches = int(np.count_nonzero(expected != tp))
    checks.append(
        Check(
            "product-triangles",
            PASS if mismatches == 0 else FAIL,
            "t(u,v) = 2 t_G(u) t_H(v) at every product vertex",
            {"vertices": p.n, "mismatches": mismatches, "product_triangles": int(tp.sum()) // 3},
        )
    )

    explicit_local = local_cc_values(tp, p.degrees())
    implicit_local = cf.product_local_cc_all(g, h, workers)
    worst = float(np.max(np.abs(explicit_local - implicit_local))) if p.n else 0.0
    checks.append(
        Check(
            "product-local-cc",
            PASS if worst <= tol else FAIL,
            "pointwise product local coefficient",
            {"max_abs_diff": worst},
            tol,
        )
    )

    cg = cf._classes(g.degrees(), rg.triangles)
    ch = cf._classes(h.degrees(), rh.triangles)
    implicit = cf._product_global(cg, ch, g.n, h.n, False)
    implicit_q = cf._product_global(cg, ch, g.n, h.n, True)
    explicit = cc_report(p, workers=workers).global_cc
    explicit_q = _global_exact(tp, p.degrees())
    diff = abs(implicit - explicit)
    low_degree = g.min_degree() < 2 or h.min_degree() < 2
    checks.append(
        Check(
            "product-global-cc",
            PASS if diff <= tol and implicit_q == explicit_q else FAIL,
            "implicit vs materialized" + (" (low-degree fallback in use)" if low_degree else ""),
            {
                "implicit": implicit,
                "explicit": explicit,
                "abs_diff": diff,
                "implicit_exact": _q(implicit_q),
                "explicit_exact": _q(explicit_q),
            },
            tol,
        )
    )

    checks.append(_upper_check(g, h, rg, rh, implicit, implicit_q, tol))
    lower_q = cf.cc_lower_bound(g, h, exact=True)
    checks.append(_lower_check(lower_q, implicit, implicit_q, tol))
    checks.append(_regular_check(g, h, implicit_q))
    checks.extend(_srg_checks(g, h, rg, rh, implicit_q, lower_q))
    return VerifyOutcome(checks)


def _upper_check(g, h, rg, rh, implicit, implicit_q, tol) -> Check:
    name = "upper-bound"
    if g.min_degree() < 2 or h.min_degree() < 2:
        return Check(name, NA, "needs minimum degree >= 2 in both factors")
    bound_q = rg.global_cc_exact * rh.global_cc_exact
    bound = rg.global_cc * rh.global_cc
    strict_expected = rg.triangle_total > 0 and rh.triangle_total > 0
    relation = "strict" if implicit_q < bound_q else ("equality" if implicit_q == bound_q else "violated")
    if strict_expected:
        ok = relation == "strict"
        note = "strict (both factors have triangles)"
    else:
        ok = relation == "equality"
        note = "equality (triangle-free factor)"
    ok = ok and implicit <= bound + tol
    return Check(
        name,
        PASS if ok else FAIL,
        note,
        {"implicit": implicit, "bound": bound, "relation": relation, "bound_exact": _q(bound_q)},
        tol,
    )


def _lower_check(lower_q, implicit, implicit_q, tol) -> Check:
    name = "lower-bound"
    if lower_q is None:
        return Check(name, NA, "needs minimum degree >= 2 in both factors")
    lower = float(lower_q)
    ok = implicit_q >= lower_q and implicit >= lower - tol
    note = "sharp (equality)" if implicit_q == lower_q else "strict"
    return Check(
        name,
        PASS if ok else FAIL,
        note,
        {"implicit": implicit, "bound": lower, "bound_exact": _q(lower_q)},
        tol,
    )


def _regular_check(g, h, implicit_q) -> Check:
    name = "regular-factors"
    dg, dh = g.regularity(), h.regularity()
    if dg is None or dh is None:
        return Check(name, NA, "needs both factors regular")
    if dg < 2 or dh < 2:
        return Check(name, NA, "needs regular degree >= 2")
    value = cf.regular_product_cc(g, h, exact=True)
    return Check(
        name,
        PASS if value == implicit_q else FAIL,
        f"degrees ({dg}, {dh}), exact comparison",
        {"formula_exact": _q(value), "implicit_exact": _q(implicit_q)},
    )


def _srg_checks(g, h, rg, rh, implicit_q, lower_q) -> list[Check]:
    names = ("srg-factor-cc", "srg-product-sharpness")
    try:
        pg, ph = cf.srg_detect(g), cf.srg_detect(h)
    except CapacityError as exc:
        return [Check(n, NA, str(exc)) for n in names]
    if pg is None or ph is None:
        return [Check(n, NA, "needs both factors strongly regular") for n in names]
    if pg.d < 2 or ph.d < 2:
        return [Check(n, NA, "needs srg degree >= 2") for n in names]
    params = f"srg{pg.as_tuple()} x srg{ph.as_tuple()}"
    cg, chh = cf.srg_cc(pg, exact=True), cf.srg_cc(ph, exact=True)
    factor = Check(
        names[0],
        PASS if (cg, chh) == (rg.global_cc_exact, rh.global_cc_exact) else FAIL,
        params,
        {
            "formula_g": _q(cg),
            "measured_g": _q(rg.global_cc_exact),
            "formula_h": _q(chh),
            "measured_h": _q(rh.global_cc_exact),
        },
    )
    value = cf.srg_product_cc(pg, ph, exact=True)
    sharp = Check(
        names[1],
        PASS if value == lower_q == implicit_q else FAIL,
        "formula = lower bound = product coefficient",
        {"formula_exact": _q(value), "lower_bound_exact": _q(lower_q), "implicit_exact": _q(implicit_q)},
    )
    return [factor, sharp]
