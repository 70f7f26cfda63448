"""Slow, independent reference implementations for the test suites.

Nothing here imports pcverify.  Counting functions come from a plain
Eratosthenes sieve over a numpy bool array, primality of large values from
gmpy2, partition numbers from the textbook knapsack recurrences, orders and
inverses from brute-force enumeration.
"""

from __future__ import annotations

import math

import gmpy2
import numpy as np

# -- primes -----------------------------------------------------------------

_flags = np.zeros(0, dtype=bool)
_cum = np.zeros(0, dtype=np.int64)
_plist = np.zeros(0, dtype=np.int64)


def _grow(x: int) -> None:
    global _flags, _cum, _plist
    lim = max(int(x), 2 * len(_flags), 1 << 16)
    s = np.ones(lim + 1, dtype=bool)
    s[:2] = False
    for p in range(2, math.isqrt(lim) + 1):
        if s[p]:
            s[p * p :: p] = False
    _flags = s
    _cum = np.cumsum(s, dtype=np.int64)
    _plist = np.flatnonzero(s)
    _aux.clear()


def isprime(x: int) -> bool:
    if x < 2:
        return False
    if x < len(_flags):
        return bool(_flags[x])
    return bool(gmpy2.is_prime(x, 40))


def pi(x: int) -> int:
    if x < 2:
        return 0
    if x >= len(_flags):
        _grow(x)
    return int(_cum[x])


def nth(n: int) -> int:
    """The n-th prime, n >= 1."""
    while len(_plist) < n:
        _grow(2 * len(_flags) + int(n * (math.log(n + 2) + math.log(math.log(n + 3)) + 3)))
    return int(_plist[n - 1])


def primes_upto(x: int) -> list[int]:
    pi(x)
    return [int(p) for p in _plist[: pi(x)]]


def next_prime(q: int) -> int:
    r = q + 1
    while not isprime(r):
        r += 1
    return r


_aux: dict[str, np.ndarray] = {}


def _prefix(name: str, x: int, build) -> int:
    if x < 1:
        return 0
    if x + 2 >= len(_flags) // 2:
        _grow(2 * x + 4)
    if name not in _aux:
        _aux[name] = np.cumsum(build(len(_flags) // 2), dtype=np.int64)
    return int(_aux[name][x])


def pi2_upper(x: int) -> int:
    """#{p <= x : p and p - 2 both prime}."""
    def build(m):
        a = np.zeros(m, dtype=bool)
        a[3:] = _flags[3:m] & _flags[1 : m - 2]
        return a
    return _prefix("twin_up", x, build)


def twin_lower(x: int) -> int:
    """#{q <= x : q and q + 2 both prime}."""
    def build(m):
        return _flags[:m] & _flags[2 : m + 2]
    return _prefix("twin_lo", x, build)


def sophie(x: int) -> int:
    def build(m):
        idx = np.arange(m)
        return _flags[:m] & _flags[2 * idx + 1]
    return _prefix("sg", x, build)


def squarefree(x: int) -> int:
    def build(m):
        a = np.ones(m, dtype=bool)
        a[0] = False
        for d in range(2, math.isqrt(m) + 1):
            a[d * d :: d * d] = False
        return a
    return _prefix("sqf", x, build)


def gaussian(x: int) -> int:
    """pi(sqrt x) + #{sqrt x < p <= x : p prime, p != 3 mod 4}."""
    r = math.isqrt(x)
    return pi(r) + sum(1 for p in primes_upto(x) if p > r and p % 4 != 3)


# -- arithmetic -------------------------------------------------------------


def phi(n: int) -> int:
    return sum(1 for j in range(1, n + 1) if math.gcd(j, n) == 1)


def sigma(n: int) -> int:
    return sum(d for d in range(1, n + 1) if n % d == 0)


def order(g: int, p: int) -> int:
    if g % p == 0:
        return 0
    x, k = g % p, 1
    while x != 1:
        x = x * g % p
        k += 1
    return k


def is_prim_root(g: int, p: int) -> bool:
    return order(g, p) == p - 1


def inverse(k: int, p: int) -> int:
    for x in range(1, p):
        if k * x % p == 1:
            return x
    raise ValueError("not invertible")


def is_square(v: int) -> bool:
    return v >= 0 and math.isqrt(v) ** 2 == v


def is_triangular(v: int) -> bool:
    j = 0
    while j * (j + 1) // 2 < v:
        j += 1
    return v >= 0 and j * (j + 1) // 2 == v


def is_cube(v: int) -> bool:
    j = round(v ** (1 / 3)) if v > 0 else 0
    return any((j + d) ** 3 == v for d in (-1, 0, 1) if j + d >= 0)


# -- partitions -------------------------------------------------------------

_P = [1]
_Q = [1]


def _extend_partitions(n: int) -> None:
    global _P, _Q
    top = max(n, 2 * (len(_P) - 1), 64)
    p = [1] + [0] * top
    q = [1] + [0] * top
    for part in range(1, top + 1):
        for s in range(part, top + 1):
            p[s] += p[s - part]
        for s in range(top, part - 1, -1):
            q[s] += q[s - part]
    _P, _Q = p, q


def P(n: int) -> int:
    if n >= len(_P):
        _extend_partitions(n)
    return _P[n]


def Q(n: int) -> int:
    if n >= len(_Q):
        _extend_partitions(n)
    return _Q[n]


def Qbar(n: int) -> int:
    return P(n) - Q(n)


def enumerate_partitions(n: int, distinct: bool = False) -> int:
    """Count partitions of n by explicit recursive generation."""
    def rec(rem: int, largest: int) -> int:
        if rem == 0:
            return 1
        total = 0
        for part in range(min(rem, largest), 0, -1):
            total += rec(rem - part, part - 1 if distinct else part)
        return total
    return rec(n, n)
