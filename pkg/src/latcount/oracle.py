"""Brute-force enumeration of connected sets: the ground-truth oracle.

Every counting engine in this package is ultimately checked against this
module.  It scans all 2^V - 1 nonempty vertex subsets with a bitmask flood
fill per subset -- the simplest strategy that cannot be wrong, so the cap is
deliberate: graphs beyond 26 vertices are refused rather than estimated.
Near the cap a full scan takes a long while in pure Python; everything the
test suite relies on stays at or below 16 vertices.
"""

from __future__ import annotations

import math
from collections.abc import Iterator

from .graphs import Graph

VERTEX_CAP = 26


class GraphTooLargeError(ValueError):
    """Raised when a graph exceeds the brute-force vertex cap."""


def _check_cap(g: Graph) -> None:
    if g.vertex_count > VERTEX_CAP:
        raise GraphTooLargeError(
            f"{g.vertex_count} vertices exceeds the brute-force cap of {VERTEX_CAP}"
        )


def count_connected_sets(g: Graph) -> int:
    """Exact number of nonempty vertex subsets inducing a connected subgraph."""
    _check_cap(g)
    adj = g.adj
    total = 0
    for members in range(1, 1 << g.vertex_count):
        # flood fill from the lowest vertex; connected iff it reaches everything
        seen = members & -members
        frontier = seen
        while frontier:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                nxt |= adj[low.bit_length() - 1]
                frontier ^= low
            frontier = nxt & members & ~seen
            seen |= frontier
        if seen == members:
            total += 1
    return total


def enumerate_connected_sets(g: Graph) -> Iterator[int]:
    """Yield every connected set exactly once, in ascending bitmask order."""
    _check_cap(g)
    adj = g.adj
    for members in range(1, 1 << g.vertex_count):
        seen = members & -members
        frontier = seen
        while frontier:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                nxt |= adj[low.bit_length() - 1]
                frontier ^= low
            frontier = nxt & members & ~seen
            seen |= frontier
        if seen == members:
            yield members


def c_value(g: Graph) -> float:
    """The |V|-th root of the connected-set count.

    math.log takes the exact big integer (CPython reads its bit length plus
    leading bits), so the result carries ~15 significant digits even when the
    count itself is thousands of digits long.
    """
    count = count_connected_sets(g)
    return nth_root(count, g.vertex_count)


def nth_root(count: int, order: int) -> float:
    """count ** (1/order) for exact nonnegative big integers."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    if count == 0:
        return 0.0
    return math.exp(math.log(count) / order)
