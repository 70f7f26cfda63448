"""Evaluation of catalog entries: single n, ranges, sequences and chains."""

from __future__ import annotations

import multiprocessing as mp
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterator

from .arith import BignumBudgetExceeded
from .catalog import chain_search, lookup
from .kernels import Ctx, Kernels, Needs
from .model import (BELOW_DOMAIN, LISTED_EXCEPTION, NOT_A_MEMBER, OUTSIDE_DOMAIN, ConjectureSpec, Outcome, Stat,
                    UnderProvisioned, Verdict, exempt, exhausted, fails, holds)
from .partitions import PartitionBoundError
from .primes import OutOfRange

DEFAULT_BUDGET = 10**7
# auto-provisioned tables never grow past this without an explicit request
AUTO_SIEVE_CAP = 1 << 31

_auto: Kernels | None = None


def auto_kernels(needs: Needs = Needs()) -> Kernels:
    """Process-wide kernels, rebuilt larger whenever a request outgrows them."""
    global _auto
    if _auto is None or _auto.limit < needs.sieve:
        sieve = needs.sieve if _auto is None else max(needs.sieve, 2 * _auto.limit)
        parts = _auto.partitions if _auto is not None else None
        _auto = Kernels.provision(Needs(min(sieve, max(needs.sieve, AUTO_SIEVE_CAP)), needs.partitions, needs.mult))
        if parts is not None and parts.upto > _auto.partitions.upto:
            _auto.partitions = parts
    return _auto


def _search(spec: ConjectureSpec, c: Ctx, n: int, budget: int) -> Verdict:
    steps = 0
    for cand in spec.space(c, n):
        if steps >= budget:
            return exhausted(f"step budget {budget} exhausted; frontier at candidate {cand}")
        steps += 1
        c.prob = False
        if spec.test(c, n, cand):
            value = cand[0] if isinstance(cand, tuple) else cand
            return holds(spec.witness_of(c, n, cand), value, c.prob)
    if spec.on_empty == "not-member":
        return exempt(NOT_A_MEMBER)
    label = spec.space_label or "the witness space"
    if spec.on_empty == "exhausted":
        return exhausted(f"no witness among {steps} candidates ({label})")
    return fails(f"no witness among {steps} candidates ({label})")


def exemption(spec: ConjectureSpec, n: int, honor_exceptions: bool = True) -> Verdict | None:
    if n < spec.domain_start:
        return exempt(BELOW_DOMAIN)
    if honor_exceptions and n in spec.exceptions:
        return exempt(LISTED_EXCEPTION)
    if spec.in_domain is not None and not spec.in_domain(n):
        return exempt(OUTSIDE_DOMAIN)
    return None


def evaluate_with(spec: ConjectureSpec, n: int, kernels: Kernels, budget: int = DEFAULT_BUDGET,
                  honor_exceptions: bool = True) -> Verdict:
    """evaluate() against fixed kernels; raises UnderProvisioned when they are too small."""
    ex = exemption(spec, n, honor_exceptions)
    if ex is not None:
        return ex
    c = Ctx(kernels)
    try:
        if spec.custom is not None:
            v = spec.custom(c, n, budget)
            if v.outcome is Outcome.HOLDS and c.prob and not v.probabilistic:
                v = Verdict(v.outcome, v.witness, v.note, True, v.value)
            return v
        return _search(spec, c, n, budget)
    except OutOfRange as exc:
        raise UnderProvisioned(spec.id, n, exc.what, exc.needed, exc.limit) from None
    except PartitionBoundError as exc:
        return exhausted(str(exc))
    except BignumBudgetExceeded as exc:
        return exhausted(str(exc))


def evaluate(ident: str | ConjectureSpec, n: int, kernels: Kernels | None = None, budget: int = DEFAULT_BUDGET,
             honor_exceptions: bool = True) -> Verdict:
    """Verdict of one catalog entry at n.

    Without explicit kernels the process-wide tables are used and grown on
    demand, so the call succeeds whatever the entry needs.
    """
    spec = lookup(ident)
    if n < 1:
        raise ValueError("n must be >= 1")
    if kernels is not None:
        return evaluate_with(spec, n, kernels, budget, honor_exceptions)
    k = auto_kernels()
    while True:
        try:
            return evaluate_with(spec, n, k, budget, honor_exceptions)
        except UnderProvisioned as exc:
            if exc.needed > AUTO_SIEVE_CAP:
                raise
            k = auto_kernels(Needs(sieve=exc.needed))


# -- ranges ---------------------------------------------------------------


@dataclass
class RangeReport:
    id: str
    start: int
    stop: int
    tallies: dict[str, int] = field(default_factory=lambda: {o.value: 0 for o in Outcome})
    counterexamples: list[int] = field(default_factory=list)
    exhausted: list[int] = field(default_factory=list)
    witness_count: int = 0
    witness_sum: int = 0
    witness_min: int | None = None
    witness_max: int | None = None
    first_holds: int | None = None
    probabilistic: int = 0
    next_n: int = 0
    elapsed: float = 0.0

    def __post_init__(self):
        if not self.next_n:
            self.next_n = self.start

    def add(self, n: int, v: Verdict) -> None:
        if n != self.next_n:
            raise ValueError(f"verdicts must arrive in order: expected n={self.next_n}, got {n}")
        self.next_n = n + 1
        self.tallies[v.outcome.value] += 1
        if v.outcome is Outcome.FAILS:
            self.counterexamples.append(n)
        elif v.outcome is Outcome.EXHAUSTED:
            self.exhausted.append(n)
        elif v.outcome is Outcome.HOLDS:
            if self.first_holds is None:
                self.first_holds = n
            if v.probabilistic:
                self.probabilistic += 1
            if v.value is not None:
                self.witness_count += 1
                self.witness_sum += v.value
                self.witness_min = v.value if self.witness_min is None else min(self.witness_min, v.value)
                self.witness_max = v.value if self.witness_max is None else max(self.witness_max, v.value)

    @property
    def complete(self) -> bool:
        return self.next_n > self.stop

    @property
    def checkpoint_cursor(self) -> int:
        return self.next_n

    @property
    def witness_stats(self) -> dict:
        mean = self.witness_sum / self.witness_count if self.witness_count else None
        return {"count": self.witness_count, "min": self.witness_min, "max": self.witness_max, "mean": mean}

    def summary(self, timing: bool = False) -> dict:
        out = {
            "type": "summary",
            "id": self.id,
            "from": self.start,
            "to": self.stop,
            "tallies": dict(self.tallies),
            "counterexamples": list(self.counterexamples),
            "exhausted": list(self.exhausted),
            "first_holds": self.first_holds,
            "witness_stats": self.witness_stats,
            "probabilistic": self.probabilistic,
            "checkpoint_cursor": self.checkpoint_cursor,
        }
        if timing:
            out["elapsed_s"] = round(self.elapsed, 3)
        return out

    def to_state(self) -> dict:
        return asdict(self)

    @classmethod
    def from_state(cls, state: dict) -> "RangeReport":
        state = dict(state)
        state["tallies"] = {o.value: int(state["tallies"].get(o.value, 0)) for o in Outcome}
        return cls(**state)


WITNESS_POLICIES = ("all", "failures", "first", "none")


def verdict_record(ident: str, n: int, v: Verdict, elapsed_us: int | None = None) -> dict:
    rec = {"type": "verdict", "id": ident, "n": n, "verdict": v.outcome.value, "witness": v.witness,
           "probabilistic": v.probabilistic}
    if v.note:
        rec["note"] = v.note
    if elapsed_us is not None:
        rec["elapsed_us"] = elapsed_us
    return rec


class Emitter:
    """Applies a witness policy to the ordered verdict stream."""

    def __init__(self, ident: str, policy: str, sink: Callable[[dict], None] | None, timing: bool = False,
                 first_done: bool = False):
        if policy not in WITNESS_POLICIES:
            raise ValueError(f"unknown witness policy {policy!r}")
        self.ident = ident
        self.policy = policy
        self.sink = sink
        self.timing = timing
        self.first_done = first_done

    def __call__(self, n: int, v: Verdict, us: int) -> None:
        if self.sink is None or self.policy == "none":
            return
        if self.policy == "failures" and v.outcome not in (Outcome.FAILS, Outcome.EXHAUSTED):
            return
        if self.policy == "first":
            if self.first_done or v.outcome is not Outcome.HOLDS:
                return
            self.first_done = True
        self.sink(verdict_record(self.ident, n, v, us if self.timing else None))


# worker state for forked pools
_W: tuple | None = None


def _eval_chunk(bounds: tuple[int, int]) -> list[tuple[int, Verdict, int]]:
    spec, kernels, budget = _W
    out = []
    for n in range(bounds[0], bounds[1] + 1):
        t0 = time.perf_counter_ns()
        v = evaluate_with(spec, n, kernels, budget)
        out.append((n, v, (time.perf_counter_ns() - t0) // 1000))
    return out


def chunks(lo: int, hi: int, size: int) -> Iterator[tuple[int, int]]:
    a = lo
    while a <= hi:
        b = min(hi, a + size - 1)
        yield a, b
        a = b + 1


def run_range(spec: ConjectureSpec, report: RangeReport, kernels: Kernels, budget: int = DEFAULT_BUDGET,
              jobs: int = 1, chunk: int = 256, on_verdict: Callable[[int, Verdict, int], None] | None = None,
              after_chunk: Callable[[RangeReport], None] | None = None) -> RangeReport:
    """Evaluate report.next_n .. report.stop into ``report``, in ascending n.

    Shards are evaluated by ``jobs`` forked workers sharing the read-only
    kernels; results are merged in order, so the report and the callback
    stream do not depend on ``jobs``.
    """
    global _W
    t0 = time.perf_counter()
    todo = list(chunks(report.next_n, report.stop, chunk))
    _W = (spec, kernels, budget)
    pool = None
    try:
        if jobs > 1 and len(todo) > 1:
            pool = mp.get_context("fork").Pool(jobs)
            results = pool.imap(_eval_chunk, todo)
        else:
            results = map(_eval_chunk, todo)
        for part in results:
            for n, v, us in part:
                report.add(n, v)
                if on_verdict is not None:
                    on_verdict(n, v, us)
            report.elapsed += time.perf_counter() - t0
            t0 = time.perf_counter()
            if after_chunk is not None:
                after_chunk(report)
    finally:
        if pool is not None:
            pool.terminate()
            pool.join()
        _W = None
    report.elapsed += time.perf_counter() - t0
    return report


def provision_for(spec: ConjectureSpec, lo: int, hi: int) -> Kernels:
    return auto_kernels(spec.kernel_needs(lo, hi))


def verify_range(ident: str | ConjectureSpec, start: int, stop: int, kernels: Kernels | None = None,
                 budget: int = DEFAULT_BUDGET, emit: Callable[[dict], None] | None = None, policy: str = "all",
                 jobs: int = 1, chunk: int = 256, timing: bool = False) -> RangeReport:
    spec = lookup(ident)
    if start > stop:
        raise ValueError("empty range: from > to")
    if start < 1:
        raise ValueError("n must be >= 1")
    if kernels is None:
        kernels = provision_for(spec, start, stop)
    report = RangeReport(spec.id, start, stop)
    return run_range(spec, report, kernels, budget, jobs, chunk, Emitter(spec.id, policy, emit, timing))


# -- sequences ------------------------------------------------------------


def witness_count(spec: ConjectureSpec, c: Ctx, n: int, strict: bool = False) -> int:
    space = spec.strict_space if strict else spec.space
    count = 0
    for cand in space(c, n):
        if spec.test(c, n, cand):
            count += 1
    return count


def sequence_terms(ident: str | ConjectureSpec, stat: Stat | str, to: int, start: int | None = None,
                   kernels: Kernels | None = None, budget: int = DEFAULT_BUDGET) -> Iterator[tuple[int, int]]:
    """(n, term) pairs of a per-n statistic.

    witness-count counts every witness in the entry's own search range (the
    strict variant uses the 0 < k < n range where one is declared);
    least-witness gives 0 where no witness exists; first-n yields the n at
    which the claim Holds, with the term equal to n.
    """
    spec = lookup(ident)
    stat = Stat(stat)
    if stat not in spec.stats():
        raise ValueError(f"{spec.id} ({spec.kind.value}) has no {stat.value} statistic")
    lo = spec.domain_start if start is None else max(start, 1)
    if kernels is None:
        kernels = provision_for(spec, lo, max(lo, to))
    if stat in (Stat.WITNESS_COUNT, Stat.WITNESS_COUNT_STRICT):
        c = Ctx(kernels)
        for n in range(max(lo, spec.domain_start), to + 1):
            try:
                yield n, witness_count(spec, c, n, stat is Stat.WITNESS_COUNT_STRICT)
            except OutOfRange as exc:
                raise UnderProvisioned(spec.id, n, exc.what, exc.needed, exc.limit) from None
        return
    for n in range(lo, to + 1):
        v = evaluate_with(spec, n, kernels, budget)
        if stat is Stat.LEAST_WITNESS:
            yield n, v.value if v.holds and v.value is not None else 0
        elif v.holds:
            yield n, n


def witness_count_sequence(ident: str | ConjectureSpec, stat: Stat | str, to: int, start: int | None = None,
                           kernels: Kernels | None = None, budget: int = DEFAULT_BUDGET) -> list[int]:
    return [t for _, t in sequence_terms(ident, stat, to, start, kernels, budget)]


# -- chains ---------------------------------------------------------------


def find_chain(m: int, start_bound: int, kernels: Kernels | None = None, budget: int = DEFAULT_BUDGET) -> Verdict:
    """Least prime chain q1 < ... < qm with q_{k+1} = p_{q_k} - q_k + 1 and q1 <= start_bound."""
    if m < 2:
        raise ValueError("chain length m must be at least 2")
    if start_bound < 2:
        return exhausted(f"no chain of length {m} with q1 <= {start_bound}")
    if kernels is not None:
        try:
            return chain_search(Ctx(kernels), m, start_bound, budget)
        except OutOfRange as exc:
            raise UnderProvisioned(f"chain m={m}", m, exc.what, exc.needed, exc.limit) from None
    k = auto_kernels(Needs(sieve=start_bound))
    while True:
        try:
            return chain_search(Ctx(k), m, start_bound, budget)
        except OutOfRange as exc:
            if exc.needed > AUTO_SIEVE_CAP:
                raise UnderProvisioned(f"chain m={m}", m, exc.what, exc.needed, exc.limit) from None
            k = auto_kernels(Needs(sieve=exc.needed))
