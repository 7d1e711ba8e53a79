import math
from functools import lru_cache

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gaussperiods.errors import OracleBudgetExceeded
from gaussperiods.partitions import (
    PartitionVector,
    brute_count,
    count_bounded,
    count_fixed_parts,
    count_nondiv,
    enumerate_bounded,
    glaisher_check,
    hagis_main_term,
    old_bound,
)


@lru_cache(maxsize=None)
def euler_p(s):
    """Unrestricted partition numbers via the pentagonal number recurrence."""
    if s < 0:
        return 0
    if s == 0:
        return 1
    total, k = 0, 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > s:
            break
        sign = 1 if k % 2 else -1
        total += sign * (euler_p(s - g1) + euler_p(s - g1 - k))
        k += 1
    return total


@lru_cache(maxsize=None)
def parts_at_most(N, s):
    """Partitions of N into parts <= s: either no part equals s, or remove one s."""
    if N == 0:
        return 1
    if s == 0 or N < 0:
        return 0
    return parts_at_most(N, s - 1) + parts_at_most(N - s, s)


@pytest.mark.parametrize("s, v, expected", [(0, 1, 1), (0, 5, 1), (4, 1, 2), (5, 2, 5)])
def test_count_bounded_examples(s, v, expected):
    assert count_bounded(s, v) == expected == brute_count(s, v)


@pytest.mark.parametrize("s, d, expected", [(0, 2, 1), (0, 7, 1), (4, 2, 2), (5, 3, 5)])
def test_count_nondiv_examples(s, d, expected):
    assert count_nondiv(s, d) == expected


@pytest.mark.parametrize("s, v", [(4, 1), (5, 2), (0, 1), (0, 9)])
def test_glaisher_examples(s, v):
    assert glaisher_check(s, v)


def test_known_values():
    assert count_bounded(100, 100) == 190569292
    assert count_bounded(10, 1) == 10
    assert count_bounded(199, 12) == count_nondiv(199, 13) == 2120945360130
    for s in range(501):  # fill the oracle cache bottom-up
        euler_p(s)
    assert count_bounded(500, 500) == euler_p(500) > 2**64


def test_glaisher_moderate_range():
    for v in range(1, 6):
        for s in range(0, 120):
            assert glaisher_check(s, v), (s, v)


def test_brute_count_small_range():
    for v in range(1, 4):
        for s in range(0, 20):
            assert count_bounded(s, v) == brute_count(s, v)


def test_brute_count_budget():
    with pytest.raises(OracleBudgetExceeded):
        brute_count(41, 1)


@given(st.integers(0, 150), st.integers(1, 20))
def test_bounded_monotone_in_v_and_saturates(s, v):
    assert count_bounded(s, v) <= count_bounded(s, v + 1)
    if v >= s:
        assert count_bounded(s, v) == euler_p(s)


@pytest.mark.parametrize("s, v, expected", [
    (0, 3, [()]),
    (1, 3, [(1,)]),
    (4, 1, [(0, 0, 0, 1), (1, 0, 1, 0)]),
])
def test_enumerate_examples(s, v, expected):
    assert [U.u for U in enumerate_bounded(s, v, 10)] == expected


@pytest.mark.parametrize("s, v", [(0, 1), (6, 1), (9, 2), (12, 3), (15, 6), (20, 20)])
def test_enumerate_matches_count(s, v):
    stream = enumerate_bounded(s, v)
    vectors = list(stream)
    assert not stream.truncated
    assert len(vectors) == count_bounded(s, v)
    keys = {U.key() for U in vectors}
    assert len(keys) == len(vectors)
    assert all(U.max_multiplicity() <= v for U in vectors)
    assert all(sum(j * m for j, m in enumerate(U.u, 1)) == s for U in vectors)
    order = [tuple(reversed(U.u)) for U in vectors]
    assert order == sorted(order, reverse=True)


def test_enumerate_cap_flags_truncation():
    stream = enumerate_bounded(10, 2, cap=5)
    assert len(list(stream)) == 5
    assert stream.truncated
    exact = enumerate_bounded(4, 1, cap=2)
    assert len(list(exact)) == 2
    assert not exact.truncated


def test_partition_vector_validation():
    U = PartitionVector.from_parts(5, [3, 1, 1])
    assert U.u == (2, 0, 1, 0, 0)
    assert U.parts() == [3, 1, 1]
    with pytest.raises(ValueError):
        PartitionVector(3, (1, 0, 1))
    with pytest.raises(ValueError):
        PartitionVector(2, (2,))


@pytest.mark.parametrize("s, N, expected", [(3, 0, 1), (1, 7, 1), (2, 3, 2)])
def test_fixed_parts_examples(s, N, expected):
    assert count_fixed_parts(s, N) == expected


def test_fixed_parts_matches_direct_recursion():
    for s in range(1, 25):
        for N in range(0, 80):
            assert count_fixed_parts(s, N) == parts_at_most(N, s)


def test_hagis_constants():
    assert hagis_main_term(1, 2) == pytest.approx(6.1337, abs=1e-3)
    assert hagis_main_term(1, math.inf) == pytest.approx(13.0019, abs=1e-3)
    assert hagis_main_term(0, 7) == 1.0
    assert hagis_main_term(1, 10**12) == pytest.approx(hagis_main_term(1, math.inf), rel=1e-9)


def test_hagis_increasing_in_ell():
    primes = [2, 3, 5, 7, 11, 13, 101, 10007]
    for s in (1, 5, 50):
        values = [hagis_main_term(s, ell) for ell in primes] + [hagis_main_term(s, math.inf)]
        assert values == sorted(values) and len(set(values)) == len(values)


def test_old_bound():
    assert old_bound(1) == pytest.approx(2.6651, abs=1e-3)
    assert old_bound(0) == 1.0
    assert old_bound(50) == pytest.approx(1024.0)
