"""Resource planning and the kernel bundle shared by all conjecture predicates."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import DEFAULT_BIGNUM_BITS, SmallMultiplicativeTable, big_binomial, big_factorial, big_pow2
from .arith import divisor_sigma, euler_phi
from .modular import is_primitive_root, mod_inverse
from .partitions import DEFAULT_BOUND, PartitionTable
from .primes import U64_MAX, OutOfRange, PrimeTables, build_tables, is_probable_prime_big, miller_rabin_u64
from .primes import nth_prime_upper_bound

MIN_SIEVE = 1 << 12


def nth_need(index: int) -> int:
    """Sieve limit that certainly contains the index-th prime."""
    return nth_prime_upper_bound(max(int(index), 1))


@dataclass(frozen=True)
class Needs:
    sieve: int = 0
    partitions: int = 0
    mult: int = 0

    def __or__(self, other: "Needs") -> "Needs":
        return Needs(max(self.sieve, other.sieve), max(self.partitions, other.partitions), max(self.mult, other.mult))

    def memory_bytes(self) -> int:
        """Rough peak footprint of the tables these needs imply."""
        s = max(self.sieve, MIN_SIEVE)
        sieve = s // 16 + s // 64  # odd bitmap + rank index
        prime_list = int(1.3 * s / max(math.log(s), 1.0)) * 4
        work = min(s, 1 << 22) * 2 + s // 2  # one segment + one unpacked aux pass
        mult = self.mult * 40
        return sieve + prime_list + work + mult


class Kernels:
    """Read-only bundle of tables handed to every predicate evaluation."""

    def __init__(self, tables: PrimeTables, partitions: PartitionTable | None = None,
                 mult: SmallMultiplicativeTable | None = None, bignum_bits: int = DEFAULT_BIGNUM_BITS,
                 cache_tag: str = "fresh"):
        self.tables = tables
        self.partitions = partitions or PartitionTable(0)
        self.mult = mult or SmallMultiplicativeTable(1)
        self.bignum_bits = bignum_bits
        self.cache_tag = cache_tag
        self._plist: list[int] = []
        self._plist_bound = 0

    @classmethod
    def provision(cls, needs: Needs, tables: PrimeTables | None = None,
                  partition_bound: int = DEFAULT_BOUND, bignum_bits: int = DEFAULT_BIGNUM_BITS,
                  cache_tag: str = "fresh") -> "Kernels":
        limit = max(needs.sieve, MIN_SIEVE)
        if tables is None or tables.limit < limit:
            tables = build_tables(limit)
            cache_tag = "fresh"
        parts = PartitionTable(min(needs.partitions, partition_bound), max_bound=partition_bound)
        mult = SmallMultiplicativeTable(max(needs.mult, 1000))
        return cls(tables, parts, mult, bignum_bits, cache_tag)

    @property
    def limit(self) -> int:
        return self.tables.limit

    def fingerprint(self) -> str:
        return f"limit={self.tables.limit};cache={self.cache_tag}"

    def prime_list(self, upto: int) -> list[int]:
        """Python list of primes covering at least [2, upto] (clipped to the table)."""
        if upto > self._plist_bound and self._plist_bound < self.tables.limit:
            bound = min(self.tables.limit, max(upto, 2 * self._plist_bound, 1 << 16))
            arr = self.tables.primes()
            self._plist = arr[: self.tables.prime_count(bound)].tolist()
            self._plist_bound = bound
        return self._plist


class Ctx:
    """Per-evaluation view of the kernels.

    ``prob`` records whether a big-integer probable-prime verdict returned
    True since it was last cleared.
    """

    __slots__ = ("k", "t", "limit", "prob", "pi", "p", "pi2", "twin_lower", "sg", "sqf", "gic",
                 "_parts", "_mult", "bits")

    def __init__(self, kernels: Kernels):
        t = kernels.tables
        self.k = kernels
        self.t = t
        self.limit = t.limit
        self.prob = False
        self.pi = t.prime_count
        self.p = t.nth_prime
        self.pi2 = t.twin_pair_count_upper
        self.twin_lower = t.twin_pair_count_lower
        self.sg = t.sophie_germain_count
        self.sqf = t.squarefree_count
        self.gic = t.gaussian_ideal_count
        self._parts = kernels.partitions
        self._mult = kernels.mult
        self.bits = kernels.bignum_bits

    def isp(self, n: int) -> bool:
        if n <= self.limit:
            return n >= 2 and self.t.is_prime(n)
        if n <= U64_MAX:
            return miller_rabin_u64(n)
        if is_probable_prime_big(n):
            self.prob = True
            return True
        return False

    # iteration helpers

    def primes_upto(self, x: int):
        """Ascending primes <= x."""
        if x < 2:
            return
        pl = self.k.prime_list(x)
        if x > self.limit:
            raise OutOfRange(f"primes up to {x}", x, self.limit)
        for q in pl:
            if q > x:
                return
            yield q

    def primes_below(self, x: int):
        return self.primes_upto(x - 1)

    def next_prime(self, q: int) -> int:
        r = q + 1
        while not self.isp(r):
            r += 1
        return r

    # arithmetic functions

    def phi(self, n: int) -> int:
        return euler_phi(n, self._mult)

    def sigma(self, n: int) -> int:
        return divisor_sigma(n, self._mult)

    def P(self, n: int) -> int:
        return self._parts.partition_number(n)

    def Q(self, n: int) -> int:
        return self._parts.strict_partition_number(n)

    def Qbar(self, n: int) -> int:
        return self._parts.repeated_part_count(n)

    def partition_values_below(self, bound: int) -> list[int]:
        return self._parts.partition_values_below(bound)

    def strict_values_below(self, bound: int) -> list[int]:
        return self._parts.strict_values_below(bound)

    def comb(self, a: int, b: int) -> int:
        return big_binomial(a, b, self.bits)

    def fact(self, k: int) -> int:
        return big_factorial(k, self.bits)

    def pow2(self, k: int) -> int:
        return big_pow2(k, self.bits)

    def is_prim_root(self, g: int, p: int) -> bool:
        return is_primitive_root(g, p, self.t)

    def inverse(self, a: int, m: int) -> int:
        return mod_inverse(a, m)

