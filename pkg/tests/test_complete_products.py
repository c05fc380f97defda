"""Complete-base transfer matrix, f-counts, and cross-engine agreement."""

from math import comb

import pytest

from latcount.complete_products import (
    column_counts,
    count_complete_product,
    f_vector,
    f_vectors,
    transfer_matrix,
)
from latcount.graphs import complete_graph
from latcount.profile_dp import exact_count

# the m = 4 and m = 5 matrices as printed in the reference derivation
T4_REFERENCE = ((1, 3, 3, 1), (2, 5, 4, 1), (3, 6, 4, 1), (4, 6, 4, 1))
T5_REFERENCE = (
    (1, 4, 6, 4, 1),
    (2, 7, 9, 5, 1),
    (3, 9, 10, 5, 1),
    (4, 10, 10, 5, 1),
    (5, 10, 10, 5, 1),
)


def test_transfer_matrix_matches_reference():
    assert transfer_matrix(4) == T4_REFERENCE
    assert transfer_matrix(5) == T5_REFERENCE


def test_transfer_matrix_structure():
    for m in range(1, 13):
        t = transfer_matrix(m)
        binoms = tuple(comb(m, j) for j in range(1, m + 1))
        assert t[m - 1] == binoms  # last row is the binomial row
        for i in range(m):
            for j in range(m):
                assert 0 <= t[i][j] <= binoms[j]


def test_column_counts_small():
    assert column_counts(4, 2) == [15, 175]
    assert column_counts(2, 2) == [3, 7]
    assert column_counts(4, 3)[2] == 2129


def test_first_column_count_is_all_nonempty_subsets():
    for m in range(1, 13):
        assert column_counts(m, 1) == [2 ** m - 1]


@pytest.mark.parametrize(
    "m,n,want",
    [(1, 10, 55), (2, 2, 13), (4, 2, 205)],
)
def test_count_complete_product_known(m, n, want):
    assert count_complete_product(m, n) == want


def test_f_vector_base_case():
    assert f_vector(4, 1) == [1, 1, 1, 1]


def test_f_vector_one_step():
    row = f_vector(4, 2)
    assert row[3] == 15  # empty correction sum when the fixed subset is everything
    assert row[0] == 15 - 7 == 8


def test_f_recombination_consistency():
    for m in (2, 3, 4, 5, 6):
        rows = f_vectors(m, 9)
        counts = column_counts(m, 9)
        for n in range(9):
            assert sum(comb(m, i) * rows[n][i - 1] for i in range(1, m + 1)) == counts[n]


def test_f_values_positive():
    for m in (3, 5, 7):
        for row in f_vectors(m, 12):
            assert all(value > 0 for value in row)


def test_matches_profile_dp():
    for m in range(1, 6):
        for n in range(1, 11):
            assert count_complete_product(m, n) == exact_count(complete_graph(m), n)


def test_m_out_of_range():
    with pytest.raises(ValueError):
        transfer_matrix(13)
    with pytest.raises(ValueError):
        count_complete_product(0, 3)
    with pytest.raises(ValueError):
        count_complete_product(4, 0)
