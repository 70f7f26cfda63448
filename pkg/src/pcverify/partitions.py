"""Partition numbers p(n), strict partition numbers q(n) and p(n) - q(n)."""

from __future__ import annotations

import threading

import numpy as np

DEFAULT_BOUND = 20000


class PartitionBoundError(Exception):
    def __init__(self, n: int, bound: int):
        self.n = n
        self.bound = bound
        super().__init__(f"partition index {n} exceeds the configured table size {bound}")


def pentagonal_partitions(upto: int) -> list[int]:
    """p(0..upto) by Euler's pentagonal-number recurrence."""
    p = [1] + [0] * upto
    for n in range(1, upto + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            g2 = g1 + k
            term = p[n - g1]
            if g2 <= n:
                term += p[n - g2]
            total = total + term if k & 1 else total - term
            k += 1
        p[n] = total
    return p


def strict_partitions(upto: int) -> list[int]:
    """q(0..upto) as the coefficients of prod_{k>=1} (1 + x^k), truncated."""
    q = np.zeros(upto + 1, dtype=object)
    q[:] = 0
    q[0] = 1
    for k in range(1, upto + 1):
        # right-hand side is evaluated before assignment, so each part is used once
        q[k:] = q[k:] + q[: upto + 1 - k]
    return [int(v) for v in q]


def strict_from_partitions(p: list[int]) -> list[int]:
    """q(0..len(p)-1) from p via prod (1 + x^k) = P(x) * prod (1 - x^(2k)).

    The second factor is Euler's pentagonal series in x^2, so
    q(n) = sum over j in Z of (-1)^j p(n - j(3j - 1)).
    """
    upto = len(p) - 1
    q = [0] * (upto + 1)
    for n in range(upto + 1):
        total = p[n]
        k = 1
        while True:
            g1 = k * (3 * k - 1)
            if g1 > n:
                break
            g2 = g1 + 2 * k
            term = p[n - g1]
            if g2 <= n:
                term += p[n - g2]
            total = total - term if k & 1 else total + term
            k += 1
        q[n] = total
    return q


def bounded_parts_partitions(upto: int) -> list[int]:
    """p(0..upto) by the parts-bounded dynamic program (independent of the recurrence)."""
    p = [1] + [0] * upto
    for part in range(1, upto + 1):
        for n in range(part, upto + 1):
            p[n] += p[n - part]
    return p


class PartitionTable:
    """p(0..upto) and q(0..upto), extended on demand up to ``max_bound``."""

    def __init__(self, upto: int = 0, max_bound: int = DEFAULT_BOUND):
        self.max_bound = max_bound
        self.upto = -1
        self.p_values: list[int] = []
        self.q_values: list[int] = []
        self._lock = threading.Lock()
        self.ensure(upto)

    def ensure(self, upto: int) -> None:
        if upto <= self.upto:
            return
        if upto > self.max_bound:
            raise PartitionBoundError(upto, self.max_bound)
        with self._lock:
            if upto <= self.upto:
                return
            # grow geometrically so dense prefix queries do not refill repeatedly
            target = min(self.max_bound, max(upto, 2 * self.upto, 64))
            self.p_values = pentagonal_partitions(target)
            self.q_values = strict_from_partitions(self.p_values)
            self.upto = target

    def partition_number(self, n: int) -> int:
        if n < 0:
            raise ValueError("partition index must be >= 0")
        self.ensure(n)
        return self.p_values[n]

    def strict_partition_number(self, n: int) -> int:
        if n < 0:
            raise ValueError("partition index must be >= 0")
        self.ensure(n)
        return self.q_values[n]

    def repeated_part_count(self, n: int) -> int:
        return self.partition_number(n) - self.strict_partition_number(n)

    def partition_values_below(self, bound: int) -> list[int]:
        """Ascending p(n) for n >= 1 with p(n) < bound."""
        n = 1
        while self.partition_number(n) < bound:
            n += 1
        return self.p_values[1:n]

    def is_partition_number(self, v: int) -> bool:
        """True iff v = p(n) for some n >= 1."""
        vals = self.partition_values_below(v + 1)
        return bool(vals) and vals[-1] == v

    def strict_values_below(self, bound: int) -> list[int]:
        """Distinct ascending q(n) for n >= 1 with q(n) < bound."""
        n = 1
        while self.strict_partition_number(n) < bound:
            n += 1
        return sorted(set(self.q_values[1:n]))


_default: PartitionTable | None = None


def default_table() -> PartitionTable:
    global _default
    if _default is None:
        _default = PartitionTable()
    return _default


def partition_number(n: int) -> int:
    return default_table().partition_number(n)


def strict_partition_number(n: int) -> int:
    return default_table().strict_partition_number(n)


def repeated_part_count(n: int) -> int:
    return default_table().repeated_part_count(n)
