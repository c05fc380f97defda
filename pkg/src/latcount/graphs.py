"""Finite simple graphs over dense 0-based vertex indices.

Vertex sets are plain ``int`` bitmasks (bit v set <=> vertex v in the set),
which keeps subset enumeration, connectivity floods and column slicing of
product graphs down to a handful of integer operations.  A base graph G can
be crossed with a path P_n; the product graph remembers (m, n) so that its
columns -- the n disjoint copies of G -- can be addressed directly.  Vertex
(i, j) of G x P_n (base vertex i in 1..m, column j in 1..n) lives at index
(j-1)*m + (i-1).
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Graph:
    """Immutable undirected graph; ``adj[v]`` is the neighbor bitmask of v."""

    adj: tuple[int, ...]
    product_meta: tuple[int, int] | None = None  # (base order m, path length n)

    @property
    def vertex_count(self) -> int:
        return len(self.adj)

    @property
    def edge_count(self) -> int:
        return sum(mask.bit_count() for mask in self.adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << len(self.adj)) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u, mask in enumerate(self.adj):
            mask >>= u + 1
            v = u + 1
            while mask:
                if mask & 1:
                    out.append((u, v))
                mask >>= 1
                v += 1
        return out

    def is_connected(self) -> bool:
        return induced_is_connected(self, self.full_mask)


def from_edges(vertex_count: int, edges, product_meta=None) -> Graph:
    """Build a graph from an iterable of index pairs; duplicates collapse."""
    if vertex_count < 1:
        raise ValueError(f"vertex count must be >= 1, got {vertex_count}")
    adj = [0] * vertex_count
    for u, v in edges:
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise ValueError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
        if u == v:
            raise ValueError(f"loop edge at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(tuple(adj), product_meta)


# ---------------------------------------------------------------------------
# Standard families
# ---------------------------------------------------------------------------

def path_graph(order: int) -> Graph:
    if order < 1:
        raise ValueError("path needs order >= 1")
    return from_edges(order, ((i, i + 1) for i in range(order - 1)))


def cycle_graph(order: int) -> Graph:
    if order < 3:
        raise ValueError("cycle needs order >= 3")
    return from_edges(order, ((i, (i + 1) % order) for i in range(order)))


def complete_graph(order: int) -> Graph:
    if order < 1:
        raise ValueError("complete graph needs order >= 1")
    return from_edges(order, ((u, v) for u in range(order) for v in range(u + 1, order)))


def star_graph(order: int) -> Graph:
    """Star on `order` vertices total: center 0 plus order-1 leaves."""
    if order < 2:
        raise ValueError("star needs order >= 2 (center plus at least one leaf)")
    return from_edges(order, ((0, v) for v in range(1, order)))


_FAMILIES = {
    "path": path_graph,
    "cycle": cycle_graph,
    "complete": complete_graph,
    "star": star_graph,
}


def build_family(kind: str, order: int) -> Graph:
    """Named graph with canonical vertex ordering (paths/cycles in traversal order)."""
    try:
        builder = _FAMILIES[kind]
    except KeyError:
        raise ValueError(f"unknown family {kind!r}; expected one of {sorted(_FAMILIES)}") from None
    return builder(order)


# ---------------------------------------------------------------------------
# Edge-list text format
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format.

    First nonempty line: vertex count; each following nonempty line: two
    whitespace-separated 0-based endpoints.  Lines starting with '#' are
    ignored; CRLF is accepted.
    """
    vertex_count = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if vertex_count is None:
            try:
                vertex_count = int(line)
            except ValueError:
                raise ValueError(f"line {lineno}: expected vertex count, got {line!r}") from None
            if vertex_count < 1:
                raise ValueError(f"line {lineno}: vertex count must be >= 1")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer endpoint in {line!r}") from None
        if u == v:
            raise ValueError(f"line {lineno}: loop edge at vertex {u}")
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise ValueError(f"line {lineno}: vertex index out of range in {line!r}")
        edges.append((u, v))
    if vertex_count is None:
        raise ValueError("empty edge list: no vertex count line")
    return from_edges(vertex_count, edges)


# ---------------------------------------------------------------------------
# Cartesian product with a path, and its column structure
# ---------------------------------------------------------------------------

def product_with_path(g: Graph, n: int) -> Graph:
    """G x P_n: (i,j)~(i',j) iff i~i' in G, and (i,j)~(i,j') iff |j-j'| = 1."""
    if n < 1:
        raise ValueError("path factor needs n >= 1")
    m = g.vertex_count
    adj = [0] * (m * n)
    for j in range(n):
        off = j * m
        for v in range(m):
            mask = g.adj[v] << off
            if j > 0:
                mask |= 1 << (off - m + v)
            if j < n - 1:
                mask |= 1 << (off + m + v)
            adj[off + v] = mask
    return Graph(tuple(adj), product_meta=(m, n))


def column(g: Graph, j: int) -> int:
    """Bitmask of column j (1-based) of a product graph G x P_n."""
    if g.product_meta is None:
        raise ValueError("column() needs a graph built by product_with_path")
    m, n = g.product_meta
    if not 1 <= j <= n:
        raise ValueError(f"column index {j} out of range 1..{n}")
    return ((1 << m) - 1) << ((j - 1) * m)


# ---------------------------------------------------------------------------
# Induced-subgraph connectivity (iterative floods; no recursion)
# ---------------------------------------------------------------------------

def _flood(adj: tuple[int, ...], members: int, start: int) -> int:
    """Vertices of `members` reachable from the single-bit mask `start`."""
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adj[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & members & ~seen
        seen |= frontier
    return seen


def _check_members(g: Graph, members: int) -> None:
    if members < 0 or members >> g.vertex_count:
        raise ValueError("vertex-set bitmask has bits outside the graph")


def induced_is_connected(g: Graph, members: int) -> bool:
    """True iff `members` is nonempty and induces a connected subgraph."""
    _check_members(g, members)
    if members == 0:
        return False
    return _flood(g.adj, members, members & -members) == members


def component_count(g: Graph, members: int) -> int:
    """Number of connected components of the induced subgraph (0 if empty)."""
    _check_members(g, members)
    count = 0
    remaining = members
    while remaining:
        remaining &= ~_flood(g.adj, remaining, remaining & -remaining)
        count += 1
    return count
