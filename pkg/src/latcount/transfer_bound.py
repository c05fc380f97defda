"""Lower bound N_L on N(G x P_n) via a subset transfer matrix, plus spectra.

Take the locally dense connected sets: those whose restriction to every pair
of consecutive occupied columns is itself connected.  These are counted
exactly by a transfer matrix A over the 2^m - 1 nonempty subsets of V(G),
with

    A[S, S'] = 1  iff  (S in one column) u (S' in the next) induces a
               connected subgraph of G x P_2,

so that 1^T A^(k-1) 1 counts the locally dense sets spanning k consecutive
columns, and

    N(G x P_n) >= N_L(G x P_n)
                = n * N(G) + sum_{k=2..n} (n-k+1) * (1^T A^(k-1) 1).

The bound is tight exactly when G is complete (a connected two-column slice
is then automatic inside any connected set) or n <= 2.  A is symmetric and
nonnegative with a primitive structure (the full-subset row is all ones), so
its dominant eigenvalue lambda -- obtained here by plain power iteration --
gives the asymptotic rate: c(G x P_n) exceeds lambda^(1/m) for large n.

Rows of A are stored as int bitmasks; the exact N_L path walks set bits with
big-int accumulation, while the float spectral path unpacks the bits into a
numpy matrix (guarded by a memory cap).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph, induced_is_connected, product_with_path
from .oracle import count_connected_sets

VERTEX_CAP = 16
DENSE_DIM_CAP = 8192  # float matrix guard: dim^2 doubles


@dataclass(frozen=True)
class SubsetTransferMatrix:
    """Symmetric 0/1 matrix over nonempty subsets of the base vertex set.

    Subset index i (1-based, 1..2^m - 1) is the subset whose bitmask is i;
    ``rows[i - 1]`` packs row i, bit j - 1 holding the (i, j) entry.
    """

    base_order: int
    rows: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1] >> (j - 1) & 1

    def row_sums(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    def to_dense(self) -> np.ndarray:
        if self.dim > DENSE_DIM_CAP:
            raise MemoryError(
                f"dense spectral path capped at dim {DENSE_DIM_CAP}; got {self.dim}"
            )
        nbytes = (self.dim + 7) // 8
        packed = np.frombuffer(
            b"".join(row.to_bytes(nbytes, "little") for row in self.rows), dtype=np.uint8
        ).reshape(self.dim, nbytes)
        return np.unpackbits(packed, axis=1, bitorder="little")[:, : self.dim].astype(np.float64)


@dataclass(frozen=True)
class SpectralEstimate:
    """Power-iteration result: dominant eigenvalue with convergence telemetry."""

    eigenvalue: float
    iterations: int
    residual: float
    converged: bool


def build_transfer_matrix(g: Graph) -> SubsetTransferMatrix:
    """A over nonempty subsets of V(G): entry 1 iff the two-column set connects."""
    m = g.vertex_count
    if not 2 <= m <= VERTEX_CAP:
        raise ValueError(f"base order {m} outside 2..{VERTEX_CAP}")
    if not g.is_connected():
        raise ValueError("transfer bound needs a connected base graph")
    two = product_with_path(g, 2)
    dim = (1 << m) - 1
    rows = [0] * dim
    for i in range(1, dim + 1):
        bits = rows[i - 1]
        for j in range(i, dim + 1):
            if induced_is_connected(two, i | j << m):
                bits |= 1 << (j - 1)
                rows[j - 1] |= 1 << (i - 1)
        rows[i - 1] = bits
    return SubsetTransferMatrix(base_order=m, rows=tuple(rows))


def bound_terms(a: SubsetTransferMatrix, k_max: int) -> list[int]:
    """1^T A^(k-1) 1 for k = 1..k_max, exact (entry k=1 is just dim)."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    vec = [1] * a.dim
    terms = [a.dim]
    for _ in range(k_max - 1):
        nxt = []
        for row in a.rows:
            acc = 0
            while row:
                low = row & -row
                acc += vec[low.bit_length() - 1]
                row ^= low
            nxt.append(acc)
        vec = nxt
        terms.append(sum(vec))
    return terms


def lower_bound_count(g: Graph, n: int, base_count: int | None = None) -> int:
    """Exact N_L(G x P_n); `base_count` defaults to the brute-force N(G)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if base_count is None:
        base_count = count_connected_sets(g)
    total = n * base_count
    if n >= 2:
        a = build_transfer_matrix(g)
        terms = bound_terms(a, n)
        total += sum((n - k + 1) * terms[k - 1] for k in range(2, n + 1))
    return total


def dominant_eigenvalue(
    a: SubsetTransferMatrix, tol: float = 1e-12, max_iter: int = 100_000
) -> SpectralEstimate:
    """Largest eigenvalue of A by power iteration from the all-ones vector.

    A is symmetric, nonnegative and primitive, so the iteration converges to
    the spectral radius; the all-ones start has positive overlap with the
    Perron vector.  Stops when the relative eigenvalue change drops below
    `tol`; a non-converged result is returned flagged, not raised.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if max_iter < 1:
        raise ValueError("max_iter must be >= 1")
    dense = a.to_dense()
    x = np.ones(a.dim) / np.sqrt(a.dim)
    lam = 0.0
    residual = np.inf
    for it in range(1, max_iter + 1):
        y = dense @ x
        lam_new = float(x @ y)
        norm = np.linalg.norm(y)
        if norm == 0.0:  # cannot happen for a primitive matrix; defensive
            return SpectralEstimate(0.0, it, np.inf, False)
        x = y / norm
        residual = abs(lam_new - lam) / max(lam_new, np.finfo(float).tiny)
        lam = lam_new
        if residual <= tol:
            return SpectralEstimate(lam, it, residual, True)
    return SpectralEstimate(lam, max_iter, residual, False)


def c_lower_limit(g: Graph, tol: float = 1e-12, max_iter: int = 100_000) -> float:
    """lambda^(1/m): the asymptotic lower limit of c(G x P_n)."""
    est = dominant_eigenvalue(build_transfer_matrix(g), tol=tol, max_iter=max_iter)
    return est.eigenvalue ** (1.0 / g.vertex_count)
