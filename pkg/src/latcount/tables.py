"""Sequence tables: exact counts, lower bounds, and their growth roots.

A SequenceTable is the (n, count, c, bound, c_bound) series behind the
package's CSV/JSON output and plot data, where c = count^(1/(m*n)) is the
per-vertex growth value and the bound columns come from the locally-dense
transfer-matrix bound.  Counts accumulate incrementally: moving n to n+1
adds one window placement for every window length, so

    count(n+1) = count(n) + sum_{k<=n+1} t_k
    bound(n+1) = bound(n) + N(base) + sum_{2<=k<=n+1} b_k

with t_k the exact window terms and b_k the bound's spanning terms.

Rendering: CSV uses the fixed header ``n,count,c,bound,c_bound`` with counts
in full decimal and c values at 4 decimals (round-half-even, which is what
float formatting does); JSON keeps every number as a string, c values at 6
decimals.  Both are deterministic byte-for-byte for fixed inputs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .cache import SequenceCache
from .engines import BaseFamily, base_graph, base_label, window_terms
from .graphs import Graph
from .oracle import count_connected_sets, nth_root
from .transfer_bound import bound_terms, build_transfer_matrix

TOOL_VERSION = "0.1.0"


@dataclass(frozen=True)
class TableRow:
    n: int
    count: int | None = None
    c: float | None = None
    bound: int | None = None
    c_bound: float | None = None


@dataclass(frozen=True)
class SequenceTable:
    base_label: str
    base_order: int
    rows: tuple[TableRow, ...]


def _exact_series(base, n_max: int, cache) -> list[int]:
    terms = window_terms(base, n_max, _preferred_exact_engine(base), cache)
    counts = []
    running = 0
    prefix = 0
    for n in range(1, n_max + 1):
        prefix += terms[n - 1]
        running += prefix
        counts.append(running)
    return counts


def _preferred_exact_engine(base) -> str:
    from .engines import applicable_engines

    usable = [e for e in applicable_engines(base, 1) if e != "oracle"]
    if not usable:
        raise ValueError(f"no exact windowed engine for base {base_label(base)}")
    return usable[0]


def _bound_series(base, n_max: int, cache) -> list[int]:
    g = base_graph(base)
    label = base_label(base)
    key = {"base": label, "method": "transfer-bound", "series": "bound-terms"}
    terms = cache.get(key) if cache is not None else None
    if terms is None or len(terms) < n_max:
        terms = bound_terms(build_transfer_matrix(g), max(n_max, 1))
        if cache is not None:
            cache.put(key, terms)
    base_count = count_connected_sets(g)
    bounds = []
    running = 0
    prefix = 0  # sum of b_k for 2 <= k <= n
    for n in range(1, n_max + 1):
        if n >= 2:
            prefix += terms[n - 1]
        running += base_count + prefix
        bounds.append(running)
    return bounds


def c_sequence(
    base: BaseFamily | Graph,
    n_max: int,
    method: str = "exact",
    cache: SequenceCache | None = None,
) -> SequenceTable:
    """Rows for n = 1..n_max; `method` is exact, lower_bound, or both."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if method not in ("exact", "lower_bound", "both"):
        raise ValueError(f"unknown method {method!r}")
    m = base_graph(base).vertex_count
    counts = _exact_series(base, n_max, cache) if method in ("exact", "both") else None
    bounds = _bound_series(base, n_max, cache) if method in ("lower_bound", "both") else None
    rows = []
    for n in range(1, n_max + 1):
        count = counts[n - 1] if counts else None
        bound = bounds[n - 1] if bounds else None
        rows.append(
            TableRow(
                n=n,
                count=count,
                c=nth_root(count, m * n) if count is not None else None,
                bound=bound,
                c_bound=nth_root(bound, m * n) if bound is not None else None,
            )
        )
    return SequenceTable(base_label=base_label(base), base_order=m, rows=tuple(rows))


def render_csv(table: SequenceTable) -> str:
    lines = ["n,count,c,bound,c_bound"]
    for row in table.rows:
        lines.append(
            ",".join(
                [
                    str(row.n),
                    "" if row.count is None else str(row.count),
                    "" if row.c is None else f"{row.c:.4f}",
                    "" if row.bound is None else str(row.bound),
                    "" if row.c_bound is None else f"{row.c_bound:.4f}",
                ]
            )
        )
    return "\n".join(lines) + "\n"


def render_json(table: SequenceTable) -> str:
    rows = []
    for row in table.rows:
        entry: dict[str, object] = {"n": row.n}
        if row.count is not None:
            entry["count"] = str(row.count)
            entry["c"] = f"{row.c:.6f}"
        if row.bound is not None:
            entry["bound"] = str(row.bound)
            entry["c_bound"] = f"{row.c_bound:.6f}"
        rows.append(entry)
    payload = {
        "base": table.base_label,
        "m": table.base_order,
        "rows": rows,
        "tool_version": TOOL_VERSION,
    }
    return json.dumps(payload, indent=1) + "\n"
