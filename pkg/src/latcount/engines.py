"""Engine selection for exact product counts, with windowed-term caching.

Every exact engine ultimately produces the same shape of data: the sequence
of window terms t_1, t_2, ... where t_k counts the connected sets spanning
exactly k consecutive columns, so that

    N(base x P_n) = sum_{k=1..n} (n - k + 1) * t_k.

The engines differ in how the terms are obtained (and how far they scale):

    recurrence   defect recurrences; cycle bases of order 4 or 5 only
    complete     slice-size transfer matrix; complete bases only
    profile-dp   connectivity-profile DP; any connected base up to 20 vertices
    oracle       brute force on the whole product (no windowed terms)

``auto`` picks the first applicable engine in the order above.  Window terms
are cached per (base, engine) so growing n never recounts.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from . import profile_dp
from .cache import SequenceCache
from .complete_products import M_CAP, column_counts
from .cylinders import c4_states, c5_states
from .graphs import Graph, build_family
from .oracle import VERTEX_CAP as ORACLE_CAP
from .oracle import count_connected_sets
from .profile_dp import VERTEX_CAP as PROFILE_CAP

ENGINE_ORDER = ("recurrence", "complete", "profile-dp", "oracle")

_LABEL_FORMATS = {
    "path": "P{m}",
    "cycle": "C{m}",
    "complete": "K{m}",
    "star": "K1,{leaves}",
}


@dataclass(frozen=True)
class BaseFamily:
    """A named base graph: one of the standard families at a given order."""

    kind: str  # path | cycle | complete | star
    order: int

    def __post_init__(self):
        if self.kind not in _LABEL_FORMATS:
            raise ValueError(f"unknown family kind {self.kind!r}")

    @property
    def label(self) -> str:
        return _LABEL_FORMATS[self.kind].format(m=self.order, leaves=self.order - 1)

    def graph(self) -> Graph:
        return build_family(self.kind, self.order)


def graph_label(g: Graph) -> str:
    """Stable label for an ad-hoc base graph: a short hash of its edge set."""
    payload = f"{g.vertex_count}:" + ",".join(f"{u}-{v}" for u, v in g.edges())
    return "graph:" + hashlib.sha256(payload.encode()).hexdigest()[:12]


def base_label(base: BaseFamily | Graph) -> str:
    return base.label if isinstance(base, BaseFamily) else graph_label(base)


def base_graph(base: BaseFamily | Graph) -> Graph:
    return base.graph() if isinstance(base, BaseFamily) else base


def applicable_engines(base: BaseFamily | Graph, n: int) -> list[str]:
    """Engines able to handle this base, in auto-preference order."""
    g = base_graph(base)
    out = []
    if isinstance(base, BaseFamily) and base.kind == "cycle" and base.order in (4, 5):
        out.append("recurrence")
    if isinstance(base, BaseFamily) and base.kind == "complete" and base.order <= M_CAP:
        out.append("complete")
    if g.vertex_count <= PROFILE_CAP and g.is_connected():
        out.append("profile-dp")
    if g.vertex_count * n <= ORACLE_CAP:
        out.append("oracle")
    return out


def window_terms(
    base: BaseFamily | Graph, n: int, engine: str, cache: SequenceCache | None = None
) -> list[int]:
    """t_1..t_n for an engine that decomposes by window length."""
    label = base_label(base)
    key = {"base": label, "method": engine, "series": "window-terms"}
    if cache is not None:
        cached = cache.get(key)
        if cached is not None and len(cached) >= n:
            return cached[:n]
    if engine == "recurrence":
        m = base.order
        spanning = column_counts(m, n)
        if m == 4:
            defects = [4 * s.a + 4 * s.b1 + 2 * s.b2 + 4 * s.c + s.d for s in c4_states(n)]
        else:
            defects = [
                5 * (s.a + s.b1 + s.b2 + s.c1 + s.c2 + s.d) + s.g for s in c5_states(n)
            ]
        terms = [sp - df for sp, df in zip(spanning, defects)]
    elif engine == "complete":
        terms = column_counts(base.order, n)
    elif engine == "profile-dp":
        terms = profile_dp.span_counts(base_graph(base), n)
    else:
        raise ValueError(f"engine {engine!r} has no windowed decomposition")
    if cache is not None:
        cache.put(key, terms)
    return terms


def count_product(
    base: BaseFamily | Graph,
    n: int,
    engine: str = "auto",
    cache: SequenceCache | None = None,
) -> tuple[int, str]:
    """Exact N(base x P_n); returns (count, engine actually used)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    usable = applicable_engines(base, n)
    if engine == "auto":
        if not usable:
            raise ValueError(f"no engine can handle base {base_label(base)} at n={n}")
        engine = usable[0]
    elif engine not in ENGINE_ORDER:
        raise ValueError(f"unknown engine {engine!r}")
    elif engine not in usable:
        raise ValueError(f"engine {engine!r} not applicable to base {base_label(base)} at n={n}")

    if engine == "oracle":
        from .graphs import product_with_path

        key = {"base": base_label(base), "method": "oracle", "series": f"count-n{n}"}
        if cache is not None:
            cached = cache.get(key)
            if cached is not None:
                return cached[0], engine
        count = count_connected_sets(product_with_path(base_graph(base), n))
        if cache is not None:
            cache.put(key, [count])
        return count, engine

    terms = window_terms(base, n, engine, cache)
    return sum((n - k + 1) * terms[k - 1] for k in range(1, n + 1)), engine


__all__ = [
    "BaseFamily",
    "ENGINE_ORDER",
    "applicable_engines",
    "base_graph",
    "base_label",
    "count_product",
    "graph_label",
    "window_terms",
]
