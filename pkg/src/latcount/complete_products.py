"""Exact N(K_m x P_n) by transfer matrix, plus the column-anchored f-counts.

With a complete base every column slice is a clique, so the only state a
column transfer needs is how many vertices the slice has.  The m x m matrix

    t_ij = C(m,j) - C(m-i,j)  if j <= m - i,   else  C(m,j)

counts the j-subsets of the next column that keep an i-subset alive (at
least one of the j new vertices must sit under the i old ones, or the old
slice could never reconnect).  Writing u = [C(m,1), ..., C(m,m)],

    |spanning sets of K_m x P_k| = u . T^(k-1) . 1,

and total counts follow from the interval structure of column supports:
N(K_m x P_n) = sum_k (n-k+1) * (that spanning count for k columns).

f(m, n, i) is the number of spanning sets of K_m x P_n containing one fixed
i-subset of the last column and nothing else there.  It satisfies

    f(m, n, i) = |spanning, n-1 columns| - sum_{j=1..m-i} C(m-i, j) f(m, n-1, j)

(subtract the extensions whose previous column misses the fixed subset's
complementary reach), with f(m, 1, i) = 1, and recombines as
|spanning, n columns| = sum_i C(m, i) f(m, n, i).  The cylinder recurrence
systems consume these f-values directly.

Everything is exact integer arithmetic; matrix powers are never formed,
only row-vector times matrix steps.
"""

from __future__ import annotations

from math import comb

M_CAP = 12


def _check_m(m: int) -> None:
    if not 1 <= m <= M_CAP:
        raise ValueError(f"base order m={m} outside 1..{M_CAP}")


def transfer_matrix(m: int) -> tuple[tuple[int, ...], ...]:
    """The m x m slice-size transfer matrix T."""
    _check_m(m)
    return tuple(
        tuple(
            comb(m, j) - comb(m - i, j) if j <= m - i else comb(m, j)
            for j in range(1, m + 1)
        )
        for i in range(1, m + 1)
    )


def column_counts(m: int, k_max: int) -> list[int]:
    """Spanning connected-set counts of K_m x P_k for k = 1..k_max."""
    _check_m(m)
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    t = transfer_matrix(m)
    row = [comb(m, i) for i in range(1, m + 1)]
    counts = [sum(row)]
    for _ in range(k_max - 1):
        row = [sum(row[i] * t[i][j] for i in range(m)) for j in range(m)]
        counts.append(sum(row))
    return counts


def count_complete_product(m: int, n: int) -> int:
    """Exact N(K_m x P_n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    counts = column_counts(m, n)
    return sum((n - k + 1) * counts[k - 1] for k in range(1, n + 1))


def f_vectors(m: int, n_max: int) -> list[list[int]]:
    """Rows [f(m,n,1), ..., f(m,n,m)] for n = 1..n_max."""
    _check_m(m)
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    rows = [[1] * m]
    spanning = sum(comb(m, i) for i in range(1, m + 1))  # k=1 count, = 2^m - 1
    for _ in range(n_max - 1):
        prev = rows[-1]
        row = [
            spanning - sum(comb(m - i, j) * prev[j - 1] for j in range(1, m - i + 1))
            for i in range(1, m + 1)
        ]
        rows.append(row)
        spanning = sum(comb(m, i) * row[i - 1] for i in range(1, m + 1))
    return rows


def f_vector(m: int, n: int) -> list[int]:
    """[f(m,n,1), ..., f(m,n,m)] for a single n."""
    return f_vectors(m, n)[-1]
