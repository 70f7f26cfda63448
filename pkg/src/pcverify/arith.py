"""Multiplicative functions, figurate-number tests and exact big-integer helpers."""

from __future__ import annotations

import math
from enum import Enum

import mpmath
import numpy as np

from .modular import factorize

DEFAULT_BIGNUM_BITS = 1 << 22


class BignumBudgetExceeded(Exception):
    def __init__(self, what: str, bits: int, budget: int):
        self.what = what
        self.bits = bits
        self.budget = budget
        super().__init__(f"{what} needs about {bits} bits, budget is {budget}")


class Shape(str, Enum):
    SQUARE = "square"
    TRIANGULAR = "triangular"
    CUBE = "cube"


class SmallMultiplicativeTable:
    """phi(1..upto) and sigma(1..upto) from one linear sieve."""

    def __init__(self, upto: int):
        upto = max(int(upto), 1)
        self.upto = upto
        phi = [0] * (upto + 1)
        sigma = [0] * (upto + 1)
        # pp[n]: the full power of the least prime factor of n dividing n
        pp = [0] * (upto + 1)
        phi[1] = sigma[1] = 1
        primes: list[int] = []
        for i in range(2, upto + 1):
            if not pp[i]:
                primes.append(i)
                phi[i] = i - 1
                sigma[i] = i + 1
                pp[i] = i
            for p in primes:
                ip = i * p
                if ip > upto:
                    break
                if i % p == 0:
                    q = pp[i] * p
                    pp[ip] = q
                    phi[ip] = phi[i] * p
                    sigma[ip] = sigma[ip // q] * ((q * p - 1) // (p - 1))
                    break
                pp[ip] = p
                phi[ip] = phi[i] * (p - 1)
                sigma[ip] = sigma[i] * (p + 1)
        self.phi = np.array(phi, dtype=np.int64)
        self.sigma = np.array(sigma, dtype=np.int64)


def _phi_by_factoring(n: int) -> int:
    if n == 1:
        return 1
    out = n
    for p, _ in factorize(n):
        out = out // p * (p - 1)
    return out


def _sigma_by_factoring(n: int) -> int:
    if n == 1:
        return 1
    out = 1
    for p, e in factorize(n):
        out *= (p ** (e + 1) - 1) // (p - 1)
    return out


def euler_phi(n: int, table: SmallMultiplicativeTable | None = None) -> int:
    if n < 1:
        raise ValueError("phi needs n >= 1")
    if table is not None and n <= table.upto:
        return int(table.phi[n])
    return _phi_by_factoring(n)


def divisor_sigma(n: int, table: SmallMultiplicativeTable | None = None) -> int:
    if n < 1:
        raise ValueError("sigma needs n >= 1")
    if table is not None and n <= table.upto:
        return int(table.sigma[n])
    return _sigma_by_factoring(n)


def icbrt(n: int) -> int:
    """floor(n ** (1/3)) for n >= 0, exactly."""
    if n < 0:
        raise ValueError("negative")
    if n < 2:
        return n
    x = int(round(n ** (1.0 / 3))) if n < 1 << 900 else 1 << ((n.bit_length() + 2) // 3)
    # Newton from above
    x = max(x, 1) + 1
    while True:
        y = (2 * x + n // (x * x)) // 3
        if y >= x:
            break
        x = y
    while x * x * x > n:
        x -= 1
    while (x + 1) ** 3 <= n:
        x += 1
    return x


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def is_triangular(n: int) -> bool:
    return n >= 0 and is_square(8 * n + 1)


def is_cube(n: int) -> bool:
    if n < 0:
        return False
    r = icbrt(n)
    return r * r * r == n


def shape_test(n: int, shape: Shape | str) -> bool:
    shape = Shape(shape)
    if shape is Shape.SQUARE:
        return is_square(n)
    if shape is Shape.TRIANGULAR:
        return is_triangular(n)
    return is_cube(n)


# -- big integers ----------------------------------------------------------


def _check_bits(what: str, bits: int, budget: int) -> None:
    if bits > budget:
        raise BignumBudgetExceeded(what, bits, budget)


def big_binomial(a: int, b: int, budget: int = DEFAULT_BIGNUM_BITS) -> int:
    if not 0 <= b <= a:
        raise ValueError("binomial needs 0 <= b <= a")
    _check_bits(f"C({a},{b})", a, budget)  # C(a, b) < 2**a
    return math.comb(a, b)


def big_factorial(k: int, budget: int = DEFAULT_BIGNUM_BITS) -> int:
    if k < 0:
        raise ValueError("factorial needs k >= 0")
    bits = int(math.lgamma(k + 1) / math.log(2)) + 1
    _check_bits(f"{k}!", bits, budget)
    return math.factorial(k)


def big_pow2(k: int, budget: int = DEFAULT_BIGNUM_BITS) -> int:
    if k < 0:
        raise ValueError("power of two needs k >= 0")
    _check_bits(f"2^{k}", k + 1, budget)
    return 1 << k


class Ordering(str, Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


def _cmp(x: int, y: int) -> Ordering:
    return Ordering.LESS if x < y else Ordering.GREATER if x > y else Ordering.EQUAL


def power_compare(a: int, ea: int, b: int, eb: int) -> Ordering:
    """Compare a**(1/ea) with b**(1/eb) exactly, i.e. a**eb with b**ea."""
    if ea < 1 or eb < 1 or a < 0 or b < 0:
        raise ValueError("power_compare needs a, b >= 0 and ea, eb >= 1")
    if a == 0 or b == 0:
        return _cmp(a, b)
    # log prefilter; each log carries < 1e-15 relative error, so a gap of
    # 1e-9 in the scaled logs cannot flip the comparison
    la = eb * math.log(a)
    lb = ea * math.log(b)
    if abs(la - lb) > 1e-9 * max(1.0, abs(la), abs(lb)):
        return Ordering.LESS if la < lb else Ordering.GREATER
    return _cmp(a**eb, b**ea)


# -- bounds with square roots and logarithms -------------------------------


def below_affine_sqrt(k: int, c: int, n: int, d: int) -> bool:
    """k < c*sqrt(n) + d, in integers."""
    t = k - d
    return t < 0 or t * t < c * c * n


def below_transcendental(value: int, bound, *, guard: float = 1e-12) -> tuple[bool, bool]:
    """Decide value < bound(ctx) where ``bound`` maps an mpmath context to a real.

    Returns (admitted, tie).  The float evaluation decides unless the value
    lies within ``guard`` (relative) of the bound; then the check is redone
    at 30 and 60 significant digits.  A persistent tie admits the value.
    """
    b = float(bound(math))
    if abs(value - b) > guard * max(1.0, abs(b)):
        return value < b, False
    for dps in (30, 60):
        with mpmath.workdps(dps):
            bb = bound(mpmath)
            diff = mpmath.mpf(value) - bb
            if abs(diff) > mpmath.mpf(10) ** (-(dps - 5)) * max(1, abs(bb)):
                return bool(diff < 0), False
    return True, True

