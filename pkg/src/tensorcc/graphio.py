"""Edge-list text format and JSON reports.

Edge lists: one ``u v`` pair of non-negative integers per line, ``#`` comment
lines and blank lines ignored, optional ``n <count>`` header fixing the vertex
count (otherwise ``n`` is the largest label plus one).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

import numpy as np

from tensorcc.closed_forms import ProductCcReport, SrgParams, srg_cc
from tensorcc.errors import GraphInputError, ParseError
from tensorcc.graph import Graph
from tensorcc.triangles import CcReport


@dataclass(frozen=True)
class GraphSource:
    """A graph plus where it came from.

    ``relabel_map[i]`` is the original file label of vertex ``i`` when the
    input was compacted.
    """

    graph: Graph
    origin: str
    relabel_map: tuple[int, ...] | None = None


def _parse_int(token: str, lineno: int) -> int:
    if not (token.isascii() and token.isdigit()):
        raise ParseError(f"expected a non-negative integer, got {token!r}", lineno)
    return int(token)


def read_edge_list(text: str, origin: str = "<text>", compact: bool = False) -> GraphSource:
    """Parse edge-list text.

    With ``compact=True`` the labels that occur in edges are renumbered
    ``0..k-1`` in ascending order and the originals recorded in
    ``relabel_map``; a header ``n`` is then only used for range checking.
    """
    header_n = None
    edges: list[tuple[int, int]] = []
    lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0].startswith("#"):
            continue
        if tokens[0] == "n":
            if len(tokens) != 2:
                raise ParseError("header must be 'n <count>'", lineno)
            if header_n is not None:
                raise ParseError("duplicate 'n' header", lineno)
            header_n = _parse_int(tokens[1], lineno)
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected 'u v', got {raw.strip()!r}", lineno)
        u, v = _parse_int(tokens[0], lineno), _parse_int(tokens[1], lineno)
        if u == v:
            raise GraphInputError(f"self-loop ({u}, {u}) is not allowed", lineno)
        edges.append((u, v))
        lines.append(lineno)

    if header_n is not None:
        for (u, v), lineno in zip(edges, lines):
            if max(u, v) >= header_n:
                raise GraphInputError(f"label {max(u, v)} not below header n={header_n}", lineno)

    relabel = None
    if compact:
        labels = sorted({x for e in edges for x in e})
        index = {x: i for i, x in enumerate(labels)}
        edges = [(index[u], index[v]) for u, v in edges]
        relabel = tuple(labels)
        n = len(labels)
    elif header_n is not None:
        n = header_n
    else:
        n = max((max(e) for e in edges), default=-1) + 1
    return GraphSource(Graph.from_edges(n, edges), origin, relabel)


def read_edge_list_file(path: str | Path, compact: bool = False) -> GraphSource:
    path = Path(path)
    return read_edge_list(path.read_text(), origin=str(path), compact=compact)


def write_edge_list(g: Graph) -> str:
    """Header line then one ``u v`` line per edge, ``u < v``, sorted."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges().tolist())
    return "\n".join(lines)


def fraction_str(x: Fraction | None) -> str | None:
    return None if x is None else f"{x.numerator}/{x.denominator}"


def _cc_dict(r: CcReport, per_vertex: bool, source: str | None) -> dict[str, Any]:
    out: dict[str, Any] = {"kind": "cc"}
    if source is not None:
        out["source"] = source
    out["n"] = int(r.triangles.size)
    out["triangle_total"] = r.triangle_total
    out["global_cc"] = r.global_cc
    if r.global_cc_exact is not None:
        out["global_cc_exact"] = fraction_str(r.global_cc_exact)
    if per_vertex:
        out["triangles"] = r.triangles.tolist()
        out["local_cc"] = r.local_cc.tolist()
        if r.local_cc_exact is not None:
            out["local_cc_exact"] = [fraction_str(x) for x in r.local_cc_exact]
    return out


def _product_dict(r: ProductCcReport) -> dict[str, Any]:
    out: dict[str, Any] = {
        "kind": "product_cc",
        "mode": r.mode,
        "n1": r.n1,
        "n2": r.n2,
        "implicit_global_cc": r.implicit_global_cc,
        "explicit_global_cc": r.explicit_global_cc,
        "abs_diff": r.abs_diff,
        "upper_bound": r.upper_bound,
        "upper_ok": r.upper_ok,
        "lower_bound": r.lower_bound,
        "lower_ok": r.lower_ok,
    }
    if r.implicit_exact is not None:
        out["implicit_global_cc_exact"] = fraction_str(r.implicit_exact)
        out["explicit_global_cc_exact"] = fraction_str(r.explicit_exact)
        out["upper_bound_exact"] = fraction_str(r.upper_bound_exact)
        out["lower_bound_exact"] = fraction_str(r.lower_bound_exact)
    return out


def srg_dict(p: SrgParams | None, n: int, exact: bool = False) -> dict[str, Any]:
    out: dict[str, Any] = {"kind": "srg", "strongly_regular": p is not None}
    if p is None:
        out["n"] = n
        return out
    out.update(n=p.n, d=p.d, mu1=p.mu1, mu2=p.mu2)
    cc = srg_cc(p, exact=True) if p.d >= 2 else None
    out["cc"] = None if cc is None else float(cc)
    if exact:
        out["cc_exact"] = fraction_str(cc)
    return out


def _jsonable(x):
    if isinstance(x, Fraction):
        return fraction_str(x)
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.floating):
        return float(x)
    raise TypeError(f"cannot serialize {type(x).__name__}")


def dumps(obj: dict[str, Any]) -> str:
    return json.dumps(obj, indent=2, default=_jsonable)


def write_report(report, per_vertex: bool = False, source: str | None = None, exact: bool = False) -> str:
    """Serialize a report object to a single JSON object.

    Accepts :class:`CcReport`, :class:`ProductCcReport`, :class:`SrgParams`
    and anything with a ``to_dict()`` method (verification outcomes).
    """
    if isinstance(report, CcReport):
        return dumps(_cc_dict(report, per_vertex, source))
    if isinstance(report, ProductCcReport):
        return dumps(_product_dict(report))
    if isinstance(report, SrgParams):
        return dumps(srg_dict(report, report.n, exact))
    if hasattr(report, "to_dict"):
        return dumps(report.to_dict())
    raise TypeError(f"no report format for {type(report).__name__}")
