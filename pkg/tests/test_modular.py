import math
import random

import pytest
from hypothesis import given, settings, strategies as st

import oracle
from pcverify.modular import NotCoprime, factorize, is_primitive_root, mod_inverse, mod_pow, prime_divisors


def test_known_values():
    assert mod_pow(2, 4, 5) == 1
    assert mod_pow(7, 0, 13) == 1
    assert mod_pow(3, 100, 101) == 1
    assert mod_inverse(1, 7) == 1
    assert mod_inverse(3, 7) == 5
    assert mod_inverse(2, 3) == 2
    assert factorize(2) == [(2, 1)]
    assert factorize(12) == [(2, 2), (3, 1)]
    assert factorize(100003) == [(100003, 1)]
    assert not is_primitive_root(1, 5)
    assert is_primitive_root(2, 5)
    assert is_primitive_root(3, 7)


def test_errors():
    with pytest.raises(NotCoprime):
        mod_inverse(6, 9)
    with pytest.raises(ValueError):
        mod_pow(2, 3, 1)
    with pytest.raises(ValueError):
        factorize(1)
    with pytest.raises(ValueError):
        is_primitive_root(2, 9)


def test_inverse_matches_brute_force():
    for p in oracle.primes_upto(200):
        for k in range(1, p):
            assert mod_inverse(k, p) == oracle.inverse(k, p)


def test_inverse_round_trip_random():
    rng = random.Random(20261015)
    done = 0
    while done < 10**5:
        m = rng.randrange(2, 2**64)
        a = rng.randrange(1, m)
        if math.gcd(a, m) != 1:
            continue
        x = mod_inverse(a, m)
        assert 1 <= x < m and a * x % m == 1
        done += 1


def _rebuild(fs):
    return math.prod(p**e for p, e in fs)


def test_factorize_small():
    for n in range(2, 10**5 + 1):
        fs = factorize(n)
        assert _rebuild(fs) == n
        assert all(oracle.isprime(p) for p, _ in fs)
        assert [p for p, _ in fs] == sorted({p for p, _ in fs})


def test_factorize_random_64bit():
    rng = random.Random(7)
    for _ in range(1000):
        n = rng.randrange(2, 2**64)
        fs = factorize(n)
        assert _rebuild(fs) == n
        assert all(oracle.isprime(p) for p, _ in fs)


def test_factorize_semiprimes():
    for p, q in [(4294967291, 4294967279), (2147483647, 4294967291), (1000003, 1000033)]:
        assert factorize(p * q) == sorted([(p, 1), (q, 1)])
    assert factorize(4294967291**2) == [(4294967291, 2)]


def test_primitive_roots_match_orders():
    for p in oracle.primes_upto(1000):
        verdicts = [is_primitive_root(g, p) for g in range(1, p)]
        assert verdicts == [oracle.is_prim_root(g, p) for g in range(1, p)], p
        assert sum(verdicts) == oracle.phi(p - 1), p


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=2, max_value=2**64 - 1))
def test_factorize_property(n):
    fs = factorize(n)
    assert _rebuild(fs) == n
    assert prime_divisors(n) == [p for p, _ in fs]


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=10**30), st.integers(min_value=0, max_value=10**6),
       st.integers(min_value=2, max_value=10**30))
def test_mod_pow_matches_builtin(b, e, m):
    assert mod_pow(b, e, m) == pow(b, e, m)
