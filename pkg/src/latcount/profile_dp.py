"""Exact N(G x P_n) for any connected base G via connectivity-profile DP.

The product is swept column by column.  A state is the pair

    (occupied, partition):  which base vertices are present in the current
    column, and which of them are already linked to each other through the
    columns processed so far.

The partition is kept as a restricted-growth string over the occupied
vertices in ascending order (block ids appear in first-occurrence order), so
equal profiles collide in the state table.  Stepping to a new column merges
blocks through vertical edges (shared base vertices) and horizontal edges
(edges of G inside the new column); a block that gets no representative in
the new column can never reconnect -- the column support of a connected set
is an interval -- so such transitions are dropped.  Sets spanning exactly k
columns are those whose state after k columns has a single block, and

    N(G x P_n) = sum over k of (n - k + 1) * w_k,

w_k being the spanning count for a k-column window, since a window of length
k fits into P_n in n - k + 1 positions.

All weights are exact Python ints.  The reachable-state closure and the full
transition table are built once per base graph and cached; a DP sweep is then
a sequence of sparse table-vector products.
"""

from __future__ import annotations

from functools import lru_cache

from .graphs import Graph, component_count

VERTEX_CAP = 20
DEFAULT_MAX_STATES = 5_000_000


class StateSpaceError(RuntimeError):
    """Raised when the profile-state closure exceeds the configured cap."""


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _component_partition(g: Graph, occupied: int) -> tuple[int, ...]:
    """Canonical block string of the components of G[occupied]."""
    comp_of = {}
    label = 0
    remaining = occupied
    while remaining:
        start = remaining & -remaining
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                nxt |= g.adj[low.bit_length() - 1]
                frontier ^= low
            frontier = nxt & remaining & ~seen
            seen |= frontier
        for v in _bits(seen):
            comp_of[v] = label
        label += 1
        remaining &= ~seen
    return _canonical(tuple(comp_of[v] for v in _bits(occupied)))


def _canonical(labels: tuple[int, ...]) -> tuple[int, ...]:
    """Relabel block ids in first-occurrence order: the restricted-growth form."""
    seen: dict[int, int] = {}
    out = []
    for lab in labels:
        if lab not in seen:
            seen[lab] = len(seen)
        out.append(seen[lab])
    return tuple(out)


class ColumnAutomaton:
    """Reachable profile states and the full column-transition table for G."""

    def __init__(self, g: Graph, max_states: int = DEFAULT_MAX_STATES):
        if g.vertex_count > VERTEX_CAP:
            raise StateSpaceError(
                f"base graph has {g.vertex_count} vertices; profile DP caps at {VERTEX_CAP}"
            )
        if not g.is_connected():
            raise ValueError("profile DP needs a connected base graph")
        self.graph = g
        self.max_states = max_states
        m = g.vertex_count
        self.column_masks = range(1, 1 << m)

        self.states: list[tuple[int, tuple[int, ...]]] = []
        self.index: dict[tuple[int, tuple[int, ...]], int] = {}
        # transitions[i][s2 - 1] = destination state index, or -1 if a block dies
        self.transitions: list[list[int]] = []
        self.initial: list[int] = []  # state index for each first-column subset

        for occupied in self.column_masks:
            self.initial.append(self._intern((occupied, _component_partition(g, occupied))))
        frontier = 0
        while frontier < len(self.states):
            state = self.states[frontier]
            self.transitions.append([self._step(state, s2) for s2 in self.column_masks])
            frontier += 1

        self.single_block = [max(part) == 0 for _, part in self.states]

    def _intern(self, state: tuple[int, tuple[int, ...]]) -> int:
        idx = self.index.get(state)
        if idx is None:
            idx = len(self.states)
            if idx >= self.max_states:
                raise StateSpaceError(
                    f"profile-state closure exceeded max_states={self.max_states}"
                )
            self.index[state] = idx
            self.states.append(state)
        return idx

    def _step(self, state: tuple[int, tuple[int, ...]], s2: int) -> int:
        """Destination of `state` under next-column subset s2, or -1."""
        occupied, partition = state
        old_verts = _bits(occupied)
        new_verts = _bits(s2)
        nblocks = max(partition) + 1
        # union-find over old blocks (0..nblocks-1) then new vertices
        parent = list(range(nblocks + len(new_verts)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x: int, y: int) -> None:
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry

        new_id = {v: nblocks + i for i, v in enumerate(new_verts)}
        adj = self.graph.adj
        for v in new_verts:
            lower = adj[v] & s2 & ((1 << v) - 1)
            for u in _bits(lower):
                union(new_id[u], new_id[v])
        block_of = dict(zip(old_verts, partition))
        for v in _bits(occupied & s2):
            union(block_of[v], new_id[v])

        survivors = {find(new_id[v]) for v in new_verts}
        for b in range(nblocks):
            if find(b) not in survivors:
                return -1
        return self._intern((s2, _canonical(tuple(find(new_id[v]) for v in new_verts))))


@lru_cache(maxsize=64)
def _automaton(g: Graph, max_states: int) -> ColumnAutomaton:
    return ColumnAutomaton(g, max_states)


def span_counts(g: Graph, k_max: int, max_states: int = DEFAULT_MAX_STATES) -> list[int]:
    """w_1..w_k_max: connected sets of G x P_k meeting both end columns.

    Returned as a 0-based list (``result[k-1]`` is w_k); the values do not
    depend on any ambient n >= k.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    auto = _automaton(g, max_states)
    weights = [0] * len(auto.states)
    for idx in auto.initial:
        weights[idx] += 1
    single = auto.single_block
    w = [sum(wt for i, wt in enumerate(weights) if single[i])]
    for _ in range(k_max - 1):
        nxt = [0] * len(auto.states)
        transitions = auto.transitions
        for i, wt in enumerate(weights):
            if wt:
                for dest in transitions[i]:
                    if dest >= 0:
                        nxt[dest] += wt
        weights = nxt
        w.append(sum(wt for i, wt in enumerate(weights) if single[i]))
    return w


def exact_count(g: Graph, n: int, max_states: int = DEFAULT_MAX_STATES) -> int:
    """Exact N(G x P_n) for a connected base graph G."""
    if n < 1:
        raise ValueError("n must be >= 1")
    w = span_counts(g, n, max_states)
    return sum((n - k + 1) * w[k - 1] for k in range(1, n + 1))


def state_space_size(g: Graph, max_states: int = DEFAULT_MAX_STATES) -> int:
    """Number of profile states reachable from all initial columns."""
    return len(_automaton(g, max_states).states)
