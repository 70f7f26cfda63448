"""Modular arithmetic, 64-bit factorization and primitive-root tests."""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .primes import is_prime_u64, small_primes

TRIAL_LIMIT = 10**6
_TRIAL_PRIMES = small_primes(TRIAL_LIMIT).astype(np.uint64)
_TRIAL_HEAD = [int(p) for p in _TRIAL_PRIMES[:64]]


class NotCoprime(ValueError):
    def __init__(self, a: int, m: int, g: int):
        self.gcd = g
        super().__init__(f"{a} has no inverse modulo {m}: gcd is {g}")


def mod_pow(base: int, exponent: int, modulus: int) -> int:
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    return pow(base, exponent, modulus)


def mod_inverse(a: int, m: int) -> int:
    """The unique x in [1, m-1] with a*x = 1 (mod m), by the extended Euclidean algorithm."""
    if m < 2:
        raise ValueError("modulus must be >= 2")
    old_r, r = a % m, m
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    if old_r != 1:
        raise NotCoprime(a, m, old_r)
    return old_s % m


def _pollard_brent(n: int) -> int:
    """A nontrivial factor of the odd composite n."""
    for c in range(1, n):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed on {n}")


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime_u64(n):
        out[n] = out.get(n, 0) + 1
        return
    r = math.isqrt(n)
    if r * r == n:
        _split(r, out)
        _split(r, out)
        return
    d = _pollard_brent(n)
    _split(d, out)
    _split(n // d, out)


@lru_cache(maxsize=1 << 16)
def _factor_tuple(n: int) -> tuple[tuple[int, int], ...]:
    out: dict[int, int] = {}
    m = n
    for p in _TRIAL_HEAD:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out[p] = e
    if m > 1 and _TRIAL_HEAD[-1] ** 2 < m:
        hits = _TRIAL_PRIMES[np.uint64(m) % _TRIAL_PRIMES == 0]
        for p in hits.tolist():
            p = int(p)
            if p in out:
                continue
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out[p] = e
    if m > 1:
        if m < TRIAL_LIMIT * TRIAL_LIMIT:
            out[m] = out.get(m, 0) + 1  # no factor below 10**6, so m is prime
        else:
            _split(m, out)
    return tuple(sorted(out.items()))


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of 2 <= n < 2**64 as ascending (prime, exponent) pairs."""
    if n < 2:
        raise ValueError("factorize needs n >= 2")
    if n >= 1 << 64:
        raise ValueError(f"{n} is not a 64-bit value")
    return list(_factor_tuple(n))


def prime_divisors(n: int) -> list[int]:
    return [p for p, _ in _factor_tuple(n)] if n >= 2 else []


def is_primitive_root(g: int, p: int, tables=None) -> bool:
    """True iff g mod p generates the multiplicative group modulo the prime p."""
    if not is_prime_u64(p, tables):
        raise ValueError(f"{p} is not prime")
    g %= p
    if g == 0:
        return False
    for r in prime_divisors(p - 1):
        if pow(g, (p - 1) // r, p) == 1:
            return False
    return True

