import pytest
from hypothesis import given, settings, strategies as st

import oracle
from pcverify.partitions import (PartitionBoundError, PartitionTable, bounded_parts_partitions,
                                 partition_number, pentagonal_partitions, repeated_part_count, strict_from_partitions,
                                 strict_partition_number, strict_partitions)

P500 = pentagonal_partitions(500)


def test_known_values():
    assert [partition_number(n) for n in (0, 4, 20)] == [1, 5, 627]
    assert [strict_partition_number(n) for n in (1, 5, 10)] == [1, 3, 10]
    assert [repeated_part_count(n) for n in (1, 5, 6)] == [0, 4, 7]
    assert partition_number(100) == 190569292


def test_enumeration_up_to_60():
    for n in range(61):
        if n <= 40:
            assert partition_number(n) == oracle.enumerate_partitions(n)
        assert strict_partition_number(n) == oracle.enumerate_partitions(n, distinct=True)


def test_exhaustive_enumeration_full_range():
    # full recursive enumeration of p(n) is ~1e6 leaves at n = 60
    for n in (45, 50, 55, 60):
        assert partition_number(n) == oracle.enumerate_partitions(n)


def test_repeated_parts_zero_only_at_start():
    zeros = [n for n in range(200) if repeated_part_count(n) == 0]
    assert zeros == [0, 1]


def test_independent_recurrences_agree():
    assert P500 == bounded_parts_partitions(500)
    assert P500 == [oracle.P(n) for n in range(501)]


def test_strict_routes_agree():
    assert strict_partitions(500) == strict_from_partitions(P500)
    assert strict_partitions(500) == [oracle.Q(n) for n in range(501)]


def test_growth():
    for n in range(2, 500):
        assert P500[n] > P500[n - 1]
    q = strict_partitions(500)
    for n in range(1, 500):
        assert q[n] <= P500[n]
        assert q[n + 1] >= q[n]


def test_table_bound():
    t = PartitionTable(10, max_bound=100)
    assert t.partition_number(100) == oracle.P(100)
    with pytest.raises(PartitionBoundError):
        t.partition_number(101)
    with pytest.raises(ValueError):
        t.partition_number(-1)


def test_value_lookups():
    t = PartitionTable()
    assert t.partition_values_below(16) == [1, 2, 3, 5, 7, 11, 15]
    assert t.is_partition_number(627)
    assert not t.is_partition_number(628)
    assert t.strict_values_below(11) == [1, 2, 3, 4, 5, 6, 8, 10]


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=0, max_value=2000))
def test_table_extension_is_consistent(n):
    fresh = PartitionTable(n)
    assert fresh.partition_number(n) == partition_number(n)
    assert fresh.strict_partition_number(n) == strict_partition_number(n)
