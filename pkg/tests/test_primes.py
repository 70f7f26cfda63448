import math
import random

import gmpy2
import pytest
from hypothesis import given, settings, strategies as st

import oracle
from pcverify.primes import (OutOfRange, build_tables, is_prime_u64, is_probable_prime_big, miller_rabin_u64,
                             nth_prime_upper_bound)

X = 10**4
MILLION = build_tables(10**6)


@pytest.fixture(scope="module")
def t():
    return MILLION


def test_small_table_counts():
    assert build_tables(10).count == 4
    assert build_tables(2).count == 1
    assert build_tables(150).count == 35


def test_prime_count_values(t):
    assert t.prime_count(0) == 0
    assert t.prime_count(1) == 0
    assert t.prime_count(350) == 70
    assert build_tables(4550901).prime_count(4550901) == 319225


def test_nth_prime(t):
    assert [t.nth_prime(i) for i in (1, 7, 25)] == [2, 17, 97]


def test_u64_primality():
    assert not is_prime_u64(1)
    assert is_prime_u64(41)
    assert is_prime_u64(2**61 - 1)
    assert not is_prime_u64(2**61 + 1)
    assert not is_prime_u64(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7


def test_big_primality():
    assert is_probable_prime_big(41)
    assert not is_probable_prime_big(1)
    assert is_probable_prime_big(2**89 - 1)
    assert not is_probable_prime_big(2**89 + 1)


def test_big_rejects_carmichael_products():
    # products of two large primes, and a classic Carmichael number
    p, q = 2**61 - 1, 2**89 - 1
    assert not is_probable_prime_big(p * q)
    assert not is_probable_prime_big(561)
    assert not is_probable_prime_big(3825123056546413051)


def test_twin_counts(t):
    assert t.twin_pair_count_upper(4) == 0
    assert t.twin_pair_count_upper(10) == 2
    assert t.twin_pair_count_lower(2) == 0
    assert t.twin_pair_count_lower(10) == 2
    assert t.twin_pair_count_lower(11) == 3


def test_other_counts(t):
    assert [t.sophie_germain_count(x) for x in (1, 5, 11)] == [0, 3, 4]
    assert [t.squarefree_count(x) for x in (1, 10, 100)] == [1, 7, 61]
    assert [t.gaussian_ideal_count(x) for x in (1, 2, 10)] == [0, 1, 3]


def test_counts_match_enumeration(t):
    for x in range(X + 1):
        assert t.prime_count(x) == oracle.pi(x), x
        assert t.twin_pair_count_upper(x) == oracle.pi2_upper(x), x
        assert t.twin_pair_count_lower(x) == oracle.twin_lower(x), x
        assert t.sophie_germain_count(x) == oracle.sophie(x), x
        assert t.squarefree_count(x) == oracle.squarefree(x), x
    for x in range(0, X + 1, 7):
        assert t.gaussian_ideal_count(x) == oracle.gaussian(x), x


def test_is_prime_matches_enumeration(t):
    for n in range(X + 1):
        assert t.is_prime(n) == oracle.isprime(n)


def test_primes_array(t):
    ps = t.primes()
    assert len(ps) == t.count
    assert ps[:10].tolist() == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert ps.tolist()[: oracle.pi(X)] == oracle.primes_upto(X)


def test_gaussian_regrouping(t):
    # every rational prime p <= x contributes its split or ramified ideals of norm p,
    # inert primes contribute one ideal of norm p^2 when p^2 <= x
    for x in range(1, 3000, 13):
        r = math.isqrt(x)
        split_like = sum(1 for p in oracle.primes_upto(x) if p % 4 != 3)
        inert_small = sum(1 for p in oracle.primes_upto(r) if p % 4 == 3)
        assert t.gaussian_ideal_count(x) == split_like + inert_small


def test_out_of_range(t):
    with pytest.raises(OutOfRange):
        t.prime_count(t.limit + 1)
    with pytest.raises(OutOfRange):
        t.nth_prime(t.count + 1)


def test_nth_prime_upper_bound():
    for n in range(1, 5000):
        assert oracle.nth(n) <= nth_prime_upper_bound(n)


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=0, max_value=2**64 - 1))
def test_u64_agrees_with_gmpy2(n):
    assert miller_rabin_u64(n) == bool(gmpy2.is_prime(n, 50))


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=2**64 - 1))
def test_big_agrees_with_u64(n):
    assert is_probable_prime_big(n) == miller_rabin_u64(n)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=2**64, max_value=2**200))
def test_big_agrees_with_gmpy2(n):
    assert is_probable_prime_big(n) == bool(gmpy2.is_prime(n, 50))


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=1, max_value=78498))
def test_nth_and_count_round_trip(k):
    t = MILLION
    p = t.nth_prime(k)
    assert t.is_prime(p)
    assert t.prime_count(p) == k
    assert t.prime_count(p - 1) == k - 1


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=2, max_value=200_000))
def test_table_limit_independent(limit):
    small = build_tables(limit)
    big = MILLION
    rng = random.Random(limit)
    for x in [limit, limit - 1, *(rng.randrange(limit + 1) for _ in range(20))]:
        assert small.prime_count(x) == big.prime_count(x)
        if x + 2 <= limit:
            assert small.twin_pair_count_lower(x) == big.twin_pair_count_lower(x)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=10**6 // 2 - 2))
def test_counts_monotone(x):
    t = MILLION
    for f in (t.prime_count, t.twin_pair_count_upper, t.sophie_germain_count, t.squarefree_count):
        d = f(x + 1) - f(x)
        assert d in (0, 1)
