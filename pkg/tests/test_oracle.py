"""Brute-force oracle: counts, enumeration order, growth values, properties."""

import math

import pytest

from latcount.graphs import (
    build_family,
    column,
    complete_graph,
    cycle_graph,
    from_edges,
    path_graph,
    product_with_path,
    star_graph,
)
from latcount.oracle import (
    GraphTooLargeError,
    c_value,
    count_connected_sets,
    enumerate_connected_sets,
    nth_root,
)


@pytest.mark.parametrize(
    "g,want",
    [
        (path_graph(2), 3),
        (path_graph(3), 6),
        (cycle_graph(3), 7),
        (cycle_graph(4), 13),
        (cycle_graph(5), 21),
        (star_graph(4), 11),
        (product_with_path(cycle_graph(4), 2), 167),
        (product_with_path(cycle_graph(5), 2), 503),
        (product_with_path(path_graph(3), 2), 40),
    ],
)
def test_known_counts(g, want):
    assert count_connected_sets(g) == want


def test_enumeration_p2():
    assert list(enumerate_connected_sets(path_graph(2))) == [0b01, 0b10, 0b11]


def test_enumeration_p3_excludes_endpoints_pair():
    sets = list(enumerate_connected_sets(path_graph(3)))
    assert sets == [0b001, 0b010, 0b011, 0b100, 0b110, 0b111]
    assert 0b101 not in sets


def test_enumeration_single_vertex():
    assert list(enumerate_connected_sets(path_graph(1))) == [1]


@pytest.mark.parametrize("g", [cycle_graph(5), star_graph(4), product_with_path(path_graph(2), 3)])
def test_stream_length_equals_count(g):
    assert sum(1 for _ in enumerate_connected_sets(g)) == count_connected_sets(g)


def test_stream_sorted_ascending():
    sets = list(enumerate_connected_sets(cycle_graph(5)))
    assert sets == sorted(sets)


def test_cap_enforced():
    with pytest.raises(GraphTooLargeError):
        count_connected_sets(product_with_path(cycle_graph(9), 3))  # 27 vertices


@pytest.mark.parametrize(
    "g,want",
    [
        (cycle_graph(4), 13 ** 0.25),
        (cycle_graph(5), 21 ** 0.2),
        (complete_graph(1), 1.0),
    ],
)
def test_c_values(g, want):
    assert c_value(g) == pytest.approx(want, rel=1e-12)


def test_c_value_matches_reference_decimals():
    assert round(c_value(cycle_graph(4)), 4) == 1.8988
    assert round(c_value(cycle_graph(5)), 4) == 1.8384
    assert round(c_value(product_with_path(cycle_graph(4), 2)), 4) == 1.8960


def test_nth_root_handles_thousand_digit_ints():
    big = 7 ** 4000  # ~3381 digits
    assert nth_root(big, 4000) == pytest.approx(7.0, rel=1e-12)
    assert nth_root(big, 2000) == pytest.approx(49.0, rel=1e-12)


def test_c_between_one_and_two_for_connected_graphs():
    for g in (path_graph(2), path_graph(5), cycle_graph(6), complete_graph(5), star_graph(6)):
        assert 1.0 < c_value(g) < 2.0


def test_edge_addition_never_decreases_count():
    # exhaustive over all graphs on 4 vertices: adding any missing edge
    # keeps every previously connected set connected
    import itertools

    all_pairs = list(itertools.combinations(range(4), 2))
    for bits in range(1 << len(all_pairs)):
        edges = [p for i, p in enumerate(all_pairs) if bits >> i & 1]
        g = from_edges(4, edges)
        base = count_connected_sets(g)
        for extra in all_pairs:
            if extra not in edges:
                assert count_connected_sets(from_edges(4, edges + [extra])) >= base


@pytest.mark.parametrize(
    "base,n",
    [(cycle_graph(4), 3), (path_graph(3), 3), (star_graph(4), 2)],
)
def test_column_support_is_contiguous(base, n):
    prod = product_with_path(base, n)
    cols = [column(prod, j) for j in range(1, n + 1)]
    for members in enumerate_connected_sets(prod):
        hit = [j for j, mask in enumerate(cols) if members & mask]
        assert hit == list(range(hit[0], hit[-1] + 1))


def test_log_precision_on_large_product():
    # growth value from a count with hundreds of digits stays finite and sane
    from latcount.profile_dp import exact_count

    count = exact_count(cycle_graph(5), 120)
    c = nth_root(count, 5 * 120)
    assert 1.8 < c < 1.9
    assert math.isfinite(c)
