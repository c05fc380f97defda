"""Exact N(C_m x P_n) via defect recurrences (m = 4, 5) or profile DP.

The cylinder C_m x P_n sits inside the complete-based product K_m x P_n,
whose spanning counts are cheap (see complete_products).  Writing

    defect(m, k) = number of spanning connected sets of K_m x P_k that are
                   NOT connected once the non-cycle chords are removed,

the cylinder count is the windowed difference

    N(C_m x P_n) = sum_k (n-k+1) * (spanning(m, k) - defect(m, k)).

For m = 4 and m = 5 the defect counts satisfy closed multi-step recurrence
systems over a handful of last-column slice shapes (single vertex, adjacent
pair, non-adjacent pair, runs of 3 or 4, full column), with two auxiliary
quantities that look one column deeper; each shape count is multiplied by
the number of its rotations around the cycle.  Those systems are implemented
literally here, consuming the f-values of complete_products, and every value
is cross-checked against the profile DP and the brute-force oracle in the
test suite.  Within step k the auxiliaries x_k (and y_k) are evaluated first,
from steps k-1 and k-2, because the same-index shape recurrences consume
them.

For every other m the generic profile DP is the exact engine; correctness
there does not depend on any per-m case analysis.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import profile_dp
from .complete_products import column_counts, f_vectors
from .graphs import cycle_graph

M_MIN = 3
M_CAP = 12


@dataclass(frozen=True)
class CylinderState4:
    """Defect-count state for C_4 at column k, by last-column slice shape."""

    k: int
    a: int    # single vertex            (x4 rotations)
    b1: int   # adjacent pair            (x4)
    b2: int   # diagonal pair            (x2)
    c: int    # three consecutive        (x4)
    d: int    # full column              (x1)
    x: int    # auxiliary: full column with a diagonal pair one column back


@dataclass(frozen=True)
class CylinderState5:
    """Defect-count state for C_5 at column k, by last-column slice shape."""

    k: int
    a: int    # single vertex            (x5 rotations)
    b1: int   # adjacent pair            (x5)
    b2: int   # distance-2 pair          (x5)
    c1: int   # three consecutive        (x5)
    c2: int   # adjacent pair + isolated (x5)
    d: int    # four consecutive         (x5)
    g: int    # full column              (x1)
    x: int    # auxiliaries reaching one column deeper
    y: int


def c4_states(k_max: int) -> list[CylinderState4]:
    """The C_4 defect state sequence for k = 1..k_max."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    states = [CylinderState4(k=1, a=0, b1=0, b2=1, c=0, d=0, x=0)]
    f = f_vectors(4, max(k_max - 1, 1))
    for k in range(2, k_max + 1):
        p = states[-1]
        f1, f2, f3, _ = f[k - 2]
        if k == 2:
            x = 0
        else:
            pp = states[-2]
            x = 2 * pp.a + 4 * pp.b1 + p.x + 4 * pp.c + pp.d
        a = p.a + 2 * p.b1 + p.b2 + 3 * p.c + p.d
        b1 = 2 * p.a + 3 * p.b1 + 2 * p.b2 + 4 * p.c + p.d
        b2 = 2 * f1 + 4 * f2 + p.b2 + 2 * p.c + 2 * f3 + p.d
        c = 3 * p.a + 4 * p.b1 + p.b2 + x + 4 * p.c + p.d
        d = 4 * p.a + 4 * p.b1 + 2 * x + 4 * p.c + p.d
        states.append(CylinderState4(k=k, a=a, b1=b1, b2=b2, c=c, d=d, x=x))
    return states


def c4_defect(k: int) -> int:
    """Spanning sets of K_4 x P_k that are disconnected on the C_4 cylinder."""
    s = c4_states(k)[-1]
    return 4 * s.a + 4 * s.b1 + 2 * s.b2 + 4 * s.c + s.d


def count_c4(n: int) -> int:
    """Exact N(C_4 x P_n) from the defect recurrence system."""
    if n < 1:
        raise ValueError("n must be >= 1")
    spanning = column_counts(4, n)
    states = c4_states(n)
    return sum(
        (n - s.k + 1) * (spanning[s.k - 1] - (4 * s.a + 4 * s.b1 + 2 * s.b2 + 4 * s.c + s.d))
        for s in states
    )


def c5_states(k_max: int) -> list[CylinderState5]:
    """The C_5 defect state sequence for k = 1..k_max."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    states = [CylinderState5(k=1, a=0, b1=0, b2=1, c1=0, c2=1, d=0, g=0, x=0, y=0)]
    f = f_vectors(5, max(k_max - 1, 1))
    for k in range(2, k_max + 1):
        p = states[-1]
        f1, f2, f3, f4, _ = f[k - 2]
        if k == 2:
            x = y = 0
        else:
            pp = states[-2]
            x = (2 * pp.a + 4 * pp.b1 + p.x + 2 * pp.b2 + 5 * pp.c1 + 2 * pp.c2
                 + 2 * p.y + 5 * pp.d + pp.g)
            y = (3 * pp.a + 5 * pp.b1 + 2 * p.x + 2 * pp.b2 + 5 * pp.c1 + 2 * pp.c2
                 + 3 * p.y + 5 * pp.d + pp.g)
        a = p.a + 2 * p.b1 + 2 * p.b2 + 3 * p.c1 + 3 * p.c2 + 4 * p.d + p.g
        b1 = 2 * p.a + 3 * p.b1 + 4 * p.b2 + 4 * p.c1 + 5 * p.c2 + 5 * p.d + p.g
        b2 = 2 * f1 + 6 * f2 + p.b2 + 6 * f3 + p.c1 + 2 * p.c2 + 2 * f4 + 3 * p.d + p.g
        c1 = 3 * p.a + 4 * p.b1 + x + 4 * p.b2 + 5 * p.c1 + 3 * p.c2 + 2 * y + 5 * p.d + p.g
        c2 = 3 * f1 + 7 * f2 + 2 * p.b2 + 5 * f3 + 2 * p.c1 + 3 * p.c2 + f4 + 4 * p.d + p.g
        d = 4 * p.a + 5 * p.b1 + 2 * p.b2 + 3 * x + 5 * p.c1 + 4 * y + p.c2 + 5 * p.d + p.g
        g = 5 * p.a + 5 * p.b1 + 5 * x + 5 * y + 5 * p.c1 + 5 * p.d + p.g
        states.append(
            CylinderState5(k=k, a=a, b1=b1, b2=b2, c1=c1, c2=c2, d=d, g=g, x=x, y=y)
        )
    return states


def c5_defect(k: int) -> int:
    """Spanning sets of K_5 x P_k that are disconnected on the C_5 cylinder."""
    s = c5_states(k)[-1]
    return 5 * (s.a + s.b1 + s.b2 + s.c1 + s.c2 + s.d) + s.g


def count_c5(n: int) -> int:
    """Exact N(C_5 x P_n) from the defect recurrence system."""
    if n < 1:
        raise ValueError("n must be >= 1")
    spanning = column_counts(5, n)
    states = c5_states(n)
    return sum(
        (n - s.k + 1)
        * (spanning[s.k - 1] - (5 * (s.a + s.b1 + s.b2 + s.c1 + s.c2 + s.d) + s.g))
        for s in states
    )


def count_cylinder(m: int, n: int) -> int:
    """Exact N(C_m x P_n): recurrences for m in {4, 5}, profile DP otherwise."""
    if not M_MIN <= m <= M_CAP:
        raise ValueError(f"cylinder base order m={m} outside {M_MIN}..{M_CAP}")
    if n < 1:
        raise ValueError("n must be >= 1")
    if m == 4:
        return count_c4(n)
    if m == 5:
        return count_c5(n)
    return profile_dp.exact_count(cycle_graph(m), n)
