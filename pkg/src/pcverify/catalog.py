"""The conjecture catalog: one entry per single-claim sub-assertion.

Each entry names its witness space in search order, the predicate a witness
must satisfy, and a worst-case resource plan for a given n.  Quotes are kept
in the source markup of the statements they anchor.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Any, Callable

from .arith import Ordering, below_affine_sqrt, below_transcendental, is_cube, is_square, is_triangular, power_compare
from .kernels import Ctx, Needs, nth_need
from .model import ConjectureSpec, Kind, UnknownConjecture, Verdict, exhausted, fails, holds
from .primes import is_prime_u64

EX = Kind.EXISTENTIAL
REP = Kind.REPRESENTATION
EXC = Kind.EXCEPTION_LIST
ENUM = Kind.ENUMERATION

DIVISORS_12 = frozenset({1, 2, 3, 4, 6, 12})


def S(x: int) -> Needs:
    return Needs(sieve=int(x))


def NP(index: int) -> Needs:
    """Needs covering p_index."""
    return Needs(sieve=nth_need(index))


def pairs(c: Ctx, n: int):
    """(k, n - k) for k = 1, ..., n - 1."""
    return ((k, n - k) for k in range(1, n))


def odd_primes_upto(c: Ctx, x: int):
    return (p for p in c.primes_upto(x) if p > 2)


def upto_while(start: int, ok: Callable[[int], bool]):
    k = start
    while ok(k):
        yield k
        k += 1


def prime_pp(c: Ctx, j: int) -> int:
    """p_{p_j} - p_j + 1."""
    pj = c.p(j)
    return c.p(pj) - pj + 1


def q_step(c: Ctx, q: int) -> int:
    """p_q - q + 1."""
    return c.p(q) - q + 1


# -- custom claims --------------------------------------------------------


def residue_cover(values, n: int, budget: int, label: str) -> Verdict:
    """Accumulate (k, v) pairs until v mod n has hit every residue."""
    first = [0] * n
    seen = 0
    steps = 0
    for k, v in values:
        if steps >= budget:
            return exhausted(f"step budget {budget} exhausted at k={k} with {seen}/{n} residues")
        steps += 1
        r = v % n
        if not first[r]:
            first[r] = k
            seen += 1
            if seen == n:
                return holds({"k_by_residue": first, "complete_at": k}, k)
    return fails(f"{seen}/{n} residues hit by {label}")


def cover_recheck(value: Callable[[Ctx, int, int], int], kmax: Callable[[Ctx, int], int]):
    def check(c: Ctx, n: int, w: dict) -> bool:
        ks = w["k_by_residue"]
        top = kmax(c, n)
        return len(ks) == n and all(1 <= k <= top and value(c, n, k) % n == r for r, k in enumerate(ks))

    return check


def c2_7_i(c: Ctx, n: int, budget: int) -> Verdict:
    prev = c.pi(n)
    for k in range(1, n + 1):
        nxt = c.pi((k + 1) * n)
        if power_compare(prev, k, nxt, k + 1) is not Ordering.GREATER:
            return fails(f"pi({k}n)^(1/{k}) <= pi({k + 1}n)^(1/{k + 1})")
        prev = nxt
    return holds({"k_checked": n}, None)


def c2_7_i_recheck(c: Ctx, n: int, w: dict) -> bool:
    return w["k_checked"] == n and all(
        power_compare(c.pi(k * n), k, c.pi((k + 1) * n), k + 1) is Ordering.GREATER for k in range(1, n + 1))


def gap_set(c: Ctx, n: int) -> set[int]:
    return {c.pi((k + 1) * n) - c.pi(k * n) for k in range(n)}


def c2_10(c: Ctx, n: int, budget: int) -> Verdict:
    d = len(gap_set(c, n))
    if d * d < n - 1:
        return fails(f"only {d} distinct gaps")
    equality = d * d == n - 1
    if equality and n not in (2, 26):
        return fails(f"equality with {d} distinct gaps")
    return holds({"distinct": d, "equality": equality}, None)


def c2_10_recheck(c: Ctx, n: int, w: dict) -> bool:
    d = len(gap_set(c, n))
    return w["distinct"] == d and d * d >= n - 1 and w["equality"] == (d * d == n - 1)


def c2_14_ii(c: Ctx, n: int, budget: int) -> Verdict:
    a, b = c.pi(n * n), c.pi((n + 1) ** 2)
    if power_compare(a, n, b, n + 1) is Ordering.GREATER:
        return holds({"pi_n2": a, "pi_next": b}, None)
    return fails(f"pi(n^2)^(1/n) <= pi((n+1)^2)^(1/(n+1)) with values {a}, {b}")


def c2_14_ii_recheck(c: Ctx, n: int, w: dict) -> bool:
    return power_compare(c.pi(n * n), n, c.pi((n + 1) ** 2), n + 1) is Ordering.GREATER


def ap_third(c: Ctx, k: int, m: int) -> int:
    return 2 * c.p(m) - c.p(k)


def c3_5_i(c: Ctx, t: int, budget: int) -> Verdict:
    steps = 0
    for k in range(1, (t + 1) // 2):
        if steps >= budget:
            return exhausted(f"step budget {budget} exhausted at k={k}")
        steps += 1
        m = t - k
        c.prob = False
        v = ap_third(c, k, m)
        if c.isp(v):
            if t <= 4:
                return fails(f"{t} = {k} + {m} is represented")
            return holds({"k": k, "m": m, "n": c.pi(v)}, k)
    if t <= 4:
        return holds({"representations": 0}, None)
    return fails(f"no pair k < m with k + m = {t}")


def c3_5_i_recheck(c: Ctx, t: int, w: dict) -> bool:
    if t <= 4:
        return w == {"representations": 0} and not any(c.isp(ap_third(c, k, t - k)) for k in range(1, (t + 1) // 2))
    k, m, n = w["k"], w["m"], w["n"]
    return 0 < k < m < n and k + m == t and c.p(n) - c.p(m) == c.p(m) - c.p(k)


def chain_from(c: Ctx, q: int, m: int) -> list[int] | None:
    chain = [q]
    while len(chain) < m:
        nxt = q_step(c, q)
        if nxt <= q or not c.isp(nxt):
            return None
        chain.append(nxt)
        q = nxt
    return chain


def chain_search(c: Ctx, m: int, start_bound: int, budget: int) -> Verdict:
    if m < 2:
        raise ValueError("chain length must be at least 2")
    steps = 0
    for q in c.primes_upto(start_bound):
        if steps >= budget:
            return exhausted(f"step budget {budget} exhausted at q1={q}")
        steps += 1
        chain = chain_from(c, q, m)
        if chain is not None:
            return holds({"chain": chain}, q)
    return exhausted(f"no chain of length {m} with q1 <= {start_bound}")


def chain_recheck(c: Ctx, m: int, w: dict) -> bool:
    ch = w["chain"]
    return (len(ch) == m and all(c.isp(q) for q in ch)
            and all(ch[i + 1] == q_step(c, ch[i]) and ch[i + 1] > ch[i] for i in range(m - 1)))


def chain_needs(m: int, start: int) -> Needs:
    x = start
    for _ in range(max(m - 1, 1)):
        x = nth_need(x)
    return S(x)


# -- registration ---------------------------------------------------------


@dataclass(frozen=True)
class Family:
    base: str
    build: Callable[..., ConjectureSpec]
    defaults: dict
    instances: tuple[dict, ...]
    # keys that always appear in the id, even at their default
    shown: frozenset[str] = frozenset()


_ORDER: list[str] = []
_FIXED: dict[str, ConjectureSpec] = {}
_FAMILIES: dict[str, Family] = {}
_BUILT: dict[str, ConjectureSpec] = {}


def format_id(base: str, params: dict, defaults: dict, shown=frozenset()) -> str:
    keys = [k for k in defaults if k in shown or params.get(k, defaults[k]) != defaults[k]]
    if not keys:
        return base
    return base + "[" + ",".join(f"{k}={params.get(k, defaults[k])}" for k in keys) + "]"


def E(ident: str, anchor: str, quote: str, kind: Kind, start: int, needs, space=None, test=None, *,
      exceptions=(), verified: int | None = None, desk: int = 1000, register: bool = True, **kw) -> ConjectureSpec:
    spec = ConjectureSpec(id=ident, anchor=anchor, quote=quote, kind=kind, domain_start=start,
                          exceptions=frozenset(exceptions), paper_verified_bound=verified, desk_bound=desk,
                          needs=needs, space=space, test=test, **kw)
    if register:
        _FIXED[ident] = spec
        _ORDER.append(ident)
    return spec


def family(base: str, build, defaults: dict, instances=({},), shown=()) -> None:
    fam = Family(base, build, dict(defaults), tuple(instances), frozenset(shown))
    _FAMILIES[base] = fam
    for inst in fam.instances:
        _ORDER.append(format_id(base, inst, fam.defaults, fam.shown))


def C(n: str) -> str:
    return f"Conjecture {n}"


# Section 2: pi(x) and related counting functions ---------------------------

E("c2.1.i.a", C("2.1(i)"), r"$\pi(kn)$ is prime for some $k=1,\ldots,n$", EX, 2,
  lambda n: S(n * n), lambda c, n: range(1, n + 1), lambda c, n, k: c.isp(c.pi(k * n)),
  verified=2 * 10**7, desk=10**4, space_label="1 <= k <= n", strict_space=lambda c, n: range(1, n))
E("c2.1.i.b", C("2.1(i)"), r"there is a positive integer $k<3\sqrt n+3$ with $\pi(kn)$ prime", EX, 1,
  lambda n: S(n * (3 * math.isqrt(n) + 7)),
  lambda c, n: upto_while(1, lambda k: below_affine_sqrt(k, 3, n, 3)),
  lambda c, n, k: c.isp(c.pi(k * n)), desk=10**4, space_label="1 <= k < 3 sqrt(n) + 3")


def _c2_1_ii(delta: int) -> ConjectureSpec:
    if delta not in (-1, 0, 1):
        raise ValueError("delta must be 0, 1 or -1")
    start = {0: 6, 1: 4, -1: 7}[delta]
    return E(format_id("c2.1.ii", {"delta": delta}, {"delta": 0}, {"delta"}), C("2.1(ii)"),
             r"there is a positive integer $k<n$ such that $k^2+k-1$ and $\pi(kn)+\da$ are both prime", EX, start,
             lambda n: S(n * n), lambda c, n: range(1, n),
             lambda c, n, k: c.isp(k * k + k - 1) and c.isp(c.pi(k * n) + delta),
             desk=5000, register=False, params=(("delta", delta),), space_label="1 <= k < n")


family("c2.1.ii", _c2_1_ii, {"delta": 0}, ({"delta": 0}, {"delta": 1}, {"delta": -1}), shown={"delta"})

E("c2.2.i", C("2.2(i)"), r"there is a positive integer $k<p_n$ such that $\pi(kn)\eq0\pmod n$", EX, 1,
  lambda n: S(nth_need(n) * n), lambda c, n: range(1, c.p(n)), lambda c, n, k: c.pi(k * n) % n == 0,
  desk=3000, space_label="1 <= k < p_n")


def _c2_2_ii_value(c: Ctx, n: int, k: int) -> int:
    return c.pi(k * n)


E("c2.2.ii", C("2.2(ii)"),
  r"the set $\{\pi(kn):\ k=1,\ldots,2p_n\}$ contains a complete system of residues modulo $n$",
  Kind.SET_COVER, 1, lambda n: S(2 * nth_need(n) * n),
  custom=lambda c, n, b: residue_cover(((k, c.pi(k * n)) for k in range(1, 2 * c.p(n) + 1)), n, b, "k <= 2p_n"),
  recheck=cover_recheck(_c2_2_ii_value, lambda c, n: 2 * c.p(n)), desk=1000)

E("c2.3", C("2.3"), r"$\pi(jn)\mid \pi(kn)$ for some $1\ls j<k\ls n$ with $k\eq1\pmod j$", EX, 2,
  lambda n: S(n * n),
  lambda c, n: ((k, j) for k in range(2, n + 1) for j in range(1, k) if (k - 1) % j == 0),
  lambda c, n, kj: c.pi(kj[0] * n) % c.pi(kj[1] * n) == 0,
  names=("k", "j"), verified=30000, desk=5000, space_label="k ascending, then j")
E("c2.4.i", C("2.4(i)"), r"there is a positive integer $k<p_n$ such that $\pi(kn)$ is a square", EX, 1,
  lambda n: S(nth_need(n) * n), lambda c, n: range(1, c.p(n)), lambda c, n, k: is_square(c.pi(k * n)),
  desk=3000, space_label="1 <= k < p_n")
E("c2.4.ii", C("2.4(ii)"), r"the number of twin prime pairs not exceeding $kn$ is a square", EX, 1,
  lambda n: S(n * n), lambda c, n: range(1, n + 1), lambda c, n, k: is_square(c.pi2(k * n)),
  verified=22000, desk=5000, space_label="1 <= k <= n")
E("c2.5.i", C("2.5(i)"), r"there is a positive integer $k<n$ with $kn+\pi(kn)$ prime", EX, 6,
  lambda n: S(n * n), lambda c, n: range(1, n), lambda c, n, k: c.isp(k * n + c.pi(k * n)),
  desk=10**4, space_label="1 <= k < n")
E("c2.5.ii", C("2.5(ii)"), r"$p_{kn}-\pi(kn)$ is prime for some $k=1,\ldots,n$", EX, 1,
  lambda n: NP(n * n), lambda c, n: range(1, n + 1), lambda c, n, k: c.isp(c.p(k * n) - c.pi(k * n)),
  desk=3000, space_label="1 <= k <= n")
E("c2.6.i", C("2.6(i)"), r"there is a prime $p\ls n$ with $\pi(\pi((p-1)n))$ prime", EX, 3,
  lambda n: S(n * n), lambda c, n: c.primes_upto(n), lambda c, n, p: c.isp(c.pi(c.pi((p - 1) * n))),
  names=("p",), desk=10**4, space_label="primes p <= n")
E("c2.6.ii.a", C("2.6(ii)"), r"$\pi(\pi(kn))$ is a square for some $k=1,\ldots,n$", EX, 1,
  lambda n: S(n * n), lambda c, n: range(1, n + 1), lambda c, n, k: is_square(c.pi(c.pi(k * n))),
  verified=2 * 10**5, desk=5000, space_label="1 <= k <= n")
E("c2.6.ii.b", C("2.6(ii)"), r"such that $\pi(\pi(kn))$ is a triangular number", EX, 1,
  lambda n: S(n * n), lambda c, n: range(1, (n + 1) // 2 + 1), lambda c, n, k: is_triangular(c.pi(c.pi(k * n))),
  verified=10**5, desk=5000, space_label="1 <= k <= (n+1)/2")
E("c2.7.i", C("2.7(i)"), r"we have $\pi(kn)^{1/k}>\pi((k+1)n)^{1/(k+1)}$", Kind.INEQUALITY, 5,
  lambda n: S((n + 1) * n), custom=c2_7_i, recheck=c2_7_i_recheck, desk=2000)
E("c2.7.ii", C("2.7(ii)"), r"is a square for some $k=0,\ldots,n-1$", EX, 1,
  lambda n: S(n * n), lambda c, n: range(0, n), lambda c, n, k: is_square(c.pi((k + 1) * n) - c.pi(k * n)),
  desk=10**4, space_label="0 <= k < n")
E("c2.8.i.a", C("2.8(i)"), r"Then $\pi(pn)-\pi((p-1)n)$ is prime for some prime $p<n$", EX, 4,
  lambda n: S(n * n), lambda c, n: c.primes_below(n), lambda c, n, p: c.isp(c.pi(p * n) - c.pi((p - 1) * n)),
  names=("p",), desk=10**4, space_label="primes p < n")
E("c2.8.i.b", C("2.8(i)"), r"there is an odd prime $p\ls n$ with $\pi(\f{p+1}2n)-\pi(\f{p-1}2n)$ prime", EX, 4,
  lambda n: S(n * n), lambda c, n: odd_primes_upto(c, n),
  lambda c, n, p: c.isp(c.pi((p + 1) // 2 * n) - c.pi((p - 1) // 2 * n)),
  names=("p",), desk=10**4, space_label="odd primes p <= n")
E("c2.8.ii", C("2.8(ii)"),
  r"there is a number $k\in\{1,\ldots,n-1\}$ with $\pi(kn)-\pi((k-1)n)$ and $\pi((k+1)n)-\pi(kn)$ both prime", EX, 4,
  lambda n: S(n * n), lambda c, n: range(1, n),
  lambda c, n, k: c.isp(c.pi(k * n) - c.pi((k - 1) * n)) and c.isp(c.pi((k + 1) * n) - c.pi(k * n)),
  desk=10**4, space_label="1 <= k < n")


def _ap(c: Ctx, n: int, k: int, terms: int) -> bool:
    v = [c.pi((k + i) * n) for i in range(terms)]
    return all(v[i + 1] - v[i] == v[1] - v[0] for i in range(terms - 1))


E("c2.9.i", C("2.9(i)"),
  r"the intervals $(kn,(k+1)n)$ and $((k+1)n,(k+2)n)$ contain the same number of primes", EX, 2,
  lambda n: S((n + 1) * n), lambda c, n: range(1, n), lambda c, n, k: _ap(c, n, k, 3),
  desk=10**4, space_label="1 <= k < n")
E("c2.9.ii", C("2.9(ii)"), r"form a four-term arithmetic progression", EX, 5,
  lambda n: S((nth_need(n) + 3) * n), lambda c, n: range(1, c.p(n)), lambda c, n, k: _ap(c, n, k, 4),
  desk=3000, space_label="1 <= k < p_n")
E("c2.10", C("2.10"), r"and equality holds only when $n$ is $2$ or $26$", Kind.INEQUALITY, 1,
  lambda n: S(n * n), custom=c2_10, recheck=c2_10_recheck, desk=3000)
E("c2.11", C("2.11"),
  r"the three numbers $\pi(p),\pi(p+n),\pi(p+2n)$ form a nontrivial arithmetic progression", EX, 2,
  lambda n: S(nth_need(n) + 2 * n), lambda c, n: c.primes_upto(c.p(n)),
  lambda c, n, p: c.pi(p + 2 * n) - c.pi(p + n) == c.pi(p + n) - c.pi(p) > 0,
  names=("p",), desk=5000, space_label="primes p <= p_n")
E("c2.12.i.a", C("2.12(i)"), r"such that $\pi(km)\ (\t{or}\ \pi(k^2m))$ is prime", REP, 11,
  lambda n: S(n * n // 4 + 1), pairs, lambda c, n, km: c.isp(c.pi(km[0] * km[1])),
  names=("k", "m"), desk=10**4, space_label="k + m = n")
E("c2.12.i.b", C("2.12(i)"), r"such that $\pi(km)\ (\t{or}\ \pi(k^2m))$ is prime", REP, 11,
  lambda n: S(4 * n**3 // 27 + 1), pairs, lambda c, n, km: c.isp(c.pi(km[0] ** 2 * km[1])),
  names=("k", "m"), desk=800, space_label="k + m = n")


def _half_count(c: Ctx, k: int) -> int:
    return c.pi(2 * k) - c.pi(k)


E("c2.12.ii.a", C("2.12(ii)"), r"such that $\pi(2k)-\pi(k)$ and $\pi(2m)-\pi(m)$ are both prime", REP, 10,
  lambda n: S(2 * n), pairs, lambda c, n, km: c.isp(_half_count(c, km[0])) and c.isp(_half_count(c, km[1])),
  names=("k", "m"), desk=10**5, space_label="k + m = n")
E("c2.12.ii.b", C("2.12(ii)"), r"such that $\pi(2k)-\pi(k)$ is a prime and $\pi(2m)-\pi(m)$ is a square", REP, 5,
  lambda n: S(2 * n), pairs, lambda c, n, km: c.isp(_half_count(c, km[0])) and is_square(_half_count(c, km[1])),
  names=("k", "m"), desk=10**4, space_label="k + m = n")
E("c2.13.i", C("2.13(i)"), r"such that $\pi_2(km)$ is prime", REP, 6,
  lambda n: S(n * n // 4 + 1), pairs, lambda c, n, km: c.isp(c.pi2(km[0] * km[1])),
  names=("k", "m"), desk=5000, space_label="k + m = n")
E("c2.13.ii", C("2.13(ii)"), r"such that $\pi_2(km)-1$ and $\pi_2(km)+1$ are twin prime", REP, 9,
  lambda n: S(n * n // 4 + 1), pairs,
  lambda c, n, km: c.isp(c.pi2(km[0] * km[1]) - 1) and c.isp(c.pi2(km[0] * km[1]) + 1),
  names=("k", "m"), desk=10**4, space_label="k + m = n")


def _c2_14_i_value(c: Ctx, n: int, k: int) -> int:
    return c.pi(k * k)


E("c2.14.i", C("2.14(i)"),
  r"the set $\{\pi(k^2):\ k=1,\ldots,2p_{n+1}-3\}$ contains a complete system of residues modulo $n$",
  Kind.SET_COVER, 1, lambda n: S((2 * nth_need(n + 1)) ** 2),
  custom=lambda c, n, b: residue_cover(((k, c.pi(k * k)) for k in range(1, 2 * c.p(n + 1) - 2)), n, b,
                                       "k <= 2p_(n+1) - 3"),
  recheck=cover_recheck(_c2_14_i_value, lambda c, n: 2 * c.p(n + 1) - 3), desk=1000)
E("c2.14.ii", C("2.14(ii)"), r"The sequence $\root n\of{\pi(n^2)}\ (n=3,4,\ldots)$ is strictly decreasing",
  Kind.INEQUALITY, 3, lambda n: S((n + 1) ** 2), custom=c2_14_ii, recheck=c2_14_ii_recheck, desk=10**4)
E("c2.14.iii", C("2.14(iii)"),
  r"the interval $[\pi(n^2),\pi((n+1)^2)]$ contains at least one prime except for $n=25,\,35,\,44,\,46,\,105$",
  EXC, 1, lambda n: S((n + 1) ** 2), lambda c, n: range(c.pi(n * n), c.pi((n + 1) ** 2) + 1),
  lambda c, n, q: c.isp(q), names=("q",), exceptions={25, 35, 44, 46, 105}, desk=10**4,
  space_label="pi(n^2) <= q <= pi((n+1)^2)")
E("c2.15.i", C("2.15(i)"), r"$\pi(k)$ and $\pi(k^2)$ are both prime for some integer $k\in(n,2n)$", EX, 9,
  lambda n: S(4 * n * n), lambda c, n: range(n + 1, 2 * n), lambda c, n, k: c.isp(c.pi(k)) and c.isp(c.pi(k * k)),
  desk=5000, space_label="n < k < 2n")
E("c2.15.ii", C("2.15(ii)"),
  r"There are infinitely many primes $p$ with $\pi(p)$, $\pi(\pi(p))$ and $\pi(p^2)$ all prime", ENUM, 1,
  lambda n: S(n * n), lambda c, n: (n,),
  lambda c, n, p: c.isp(p) and c.isp(c.pi(p)) and c.isp(c.pi(c.pi(p))) and c.isp(c.pi(p * p)),
  names=("p",), on_empty="not-member", desk=10**4, space_label="n itself")


def _c2_15_iii(cap: int) -> ConjectureSpec:
    return E(format_id("c2.15.iii", {"cap": cap}, {"cap": 10**5}), C("2.15(iii)"),
             r"there are infinitely many primes $p$ with $\pi(kp)$ prime for all $k=1,\ldots,n$", ENUM, 1,
             lambda n: S(cap * n), lambda c, n: c.primes_upto(cap),
             lambda c, n, p: all(c.isp(c.pi(k * p)) for k in range(1, n + 1)),
             names=("p",), on_empty="exhausted", desk=6, register=False, params=(("cap", cap),),
             space_label=f"primes p <= {cap}")


family("c2.15.iii", _c2_15_iii, {"cap": 10**5})


def _c2_16_i(a: int) -> ConjectureSpec:
    if a < 2:
        raise ValueError("a must be at least 2")
    quote = (r"$\pi(n+k^2)$ is prime for some $k=1,\ldots,n-1$" if a == 2
             else r"$\pi(n+k^a)$ is prime for some $k=1,\ldots,n-1$")
    return E(format_id("c2.16.i", {"a": a}, {"a": 2}), C("2.16(i)"), quote, EX, 2,
             lambda n: S(n + (n - 1) ** a), lambda c, n: range(1, n), lambda c, n, k: c.isp(c.pi(n + k**a)),
             desk=10**4 if a == 2 else 300, register=False, params=(("a", a),), space_label="1 <= k < n",
             domain_note="" if a == 2 else "claimed only for sufficiently large n")


family("c2.16.i", _c2_16_i, {"a": 2})

E("c2.16.ii", C("2.16(ii)"), r"Then $n+\pi(k^2)$ is prime for some $k=1,\ldots,n$", EX, 5,
  lambda n: S(n * n), lambda c, n: range(1, n + 1), lambda c, n, k: c.isp(n + c.pi(k * k)),
  desk=10**4, space_label="1 <= k <= n")
E("c2.16.iii.a", C("2.16(iii)"),
  r"If a positive integer $n$ is not a divisor of $12$, then $n^2+\pi(k^2)$ is prime for some $1<k<n$", EXC, 1,
  lambda n: S(n * n), lambda c, n: range(2, n), lambda c, n, k: c.isp(n * n + c.pi(k * k)),
  exceptions=DIVISORS_12, desk=10**4, space_label="1 < k < n")
E("c2.16.iii.b", C("2.16(iii)"), r"$\pi(n^2)+\pi(k^2)$ is prime for some $1<k<n$", EX, 5,
  lambda n: S(n * n), lambda c, n: range(2, n), lambda c, n, k: c.isp(c.pi(n * n) + c.pi(k * k)),
  desk=10**4, space_label="1 < k < n")
E("c2.16.iii.c", C("2.16(iii)"), r"$\pi((k+1)^2)-\pi(k^2)$ and $\pi(n^2)-\pi(k^2)$ are both prime", EX, 2,
  lambda n: S(n * n), lambda c, n: range(1, n),
  lambda c, n, k: c.isp(c.pi((k + 1) ** 2) - c.pi(k * k)) and c.isp(c.pi(n * n) - c.pi(k * k)),
  desk=10**4, space_label="1 <= k < n")
E("c2.17.i.a", C("2.17(i)"), r"there is a prime $p<n$ with $pn+\pi(p)$ prime", EX, 5,
  lambda n: S(n), lambda c, n: c.primes_below(n), lambda c, n, p: c.isp(p * n + c.pi(p)),
  names=("p",), verified=10**8, desk=10**5, space_label="primes p < n")


def _c2_17_bound(n: int):
    return lambda M: M.sqrt(2 * n) * M.log(5 * n)


def _c2_17_i_b_space(c: Ctx, n: int):
    top = int(math.sqrt(2 * n) * math.log(5 * n)) + 1
    bound = _c2_17_bound(n)
    return (p for p in c.primes_upto(top) if below_transcendental(p, bound)[0])


E("c2.17.i.b", C("2.17(i)"), r"there is a prime $p<\sqrt{2n}\log(5n)$ with $pn+\pi(p)$ prime", EX, 1,
  lambda n: S(int(math.sqrt(2 * n) * math.log(5 * n)) + 2), _c2_17_i_b_space,
  lambda c, n, p: c.isp(p * n + c.pi(p)), names=("p",), verified=10**8, desk=10**5,
  space_label="primes p < sqrt(2n) log(5n)")


def _c2_17_ii(c: Ctx, n: int, p: int) -> bool:
    if n % 2 == 0:
        return c.isp(2 * c.pi(p) - 1) and c.isp(p * n - 1)
    return c.isp(2 * c.pi(p) + 1) and c.isp(p * n - 2)


E("c2.17.ii", C("2.17(ii)"), r"there is a prime $p\ls n$ with $2\pi(p)-(-1)^n$ and $pn+((-1)^n-3)/2$ both prime",
  EX, 3, lambda n: S(n), lambda c, n: c.primes_upto(n), _c2_17_ii, names=("p",), verified=10**8, desk=10**5,
  space_label="primes p <= n")


def _c2_18_i_p(c: Ctx, n: int, q: int) -> int:
    return n - q + c.pi(q)


def _c2_18_i(c: Ctx, n: int, q: int) -> bool:
    p = _c2_18_i_p(c, n, q)
    return 2 < p <= n and p % 2 == 1 and c.isp(p)


E("c2.18.i", C("2.18(i)"), r"can be written as $p+q-\pi(q)$, where $p$ and $q$ are odd primes not exceeding $n$",
  REP, 4, lambda n: S(n), lambda c, n: odd_primes_upto(c, n), _c2_18_i, names=("q",),
  describe=lambda c, n, q: {"p": _c2_18_i_p(c, n, q)}, verified=10**8, desk=10**5,
  space_label="odd primes q <= n")
E("c2.18.ii", C("2.18(ii)"), r"there is a prime $p<n$ with $n+p-\pi(p)$ also prime", EX, 8,
  lambda n: S(2 * n), lambda c, n: c.primes_below(n), lambda c, n, p: c.isp(n + p - c.pi(p)),
  names=("p",), desk=10**5, space_label="primes p < n")
E("c2.19.i", C("2.19(i)"), r"there is a prime $p<2n$ with $\pi(p)$ and $2n-p$ both prime", EX, 3,
  lambda n: S(2 * n), lambda c, n: c.primes_below(2 * n), lambda c, n, p: c.isp(c.pi(p)) and c.isp(2 * n - p),
  names=("p",), desk=10**5, space_label="primes p < 2n")


def _in_s219(c: Ctx, x: int) -> bool:
    return c.isp(x) and c.isp(c.pi(x))


def _three_sums(elems: list[int], total: int):
    """(a, b, total - a - b) with a <= b <= c, a and b from elems, in lexicographic order."""
    for i, a in enumerate(elems):
        if 3 * a > total:
            return
        for b in elems[i:]:
            cc = total - a - b
            if cc < b:
                break
            yield a, b, cc


def _c2_19_ii_space(c: Ctx, n: int):
    return _three_sums([p for p in c.primes_upto(2 * n - 1) if c.isp(c.pi(p))], 2 * n - 1)


E("c2.19.ii", C("2.19(ii)"), r"we can write $2n-1=a+b+c$ with $a,b,c$ in the set", REP, 37,
  lambda n: S(2 * n), _c2_19_ii_space,
  lambda c, n, t: t[0] + t[1] + t[2] == 2 * n - 1 and all(_in_s219(c, x) for x in t),
  names=("a", "b", "c"), desk=10**4, space_label="a <= b <= c in the set")


def _m220(c: Ctx, n: int, p: int) -> int:
    return c.pi(n - p)


def _sg_prime(c: Ctx, m: int) -> bool:
    return c.isp(m) and c.isp(2 * m + 1)


E("c2.20.i.a", C("2.20(i)"), r"there is a prime $p<n$ such that $\pi(n-p)$ is a Sophie Germain prime", EX, 5,
  lambda n: S(n), lambda c, n: c.primes_below(n), lambda c, n, p: _sg_prime(c, _m220(c, n, p)),
  names=("p",), verified=2 * 10**7, desk=10**5, space_label="primes p < n")
E("c2.20.i.b", C("2.20(i)"), r"there is a prime $p<n$ such that $\pi(n-p)-1$ and $\pi(n-p)+1$ are twin prime",
  EX, 9, lambda n: S(n), lambda c, n: c.primes_below(n),
  lambda c, n, p: c.isp(_m220(c, n, p) - 1) and c.isp(_m220(c, n, p) + 1),
  names=("p",), verified=2 * 10**7, desk=10**5, space_label="primes p < n")
E("c2.20.ii.a", C("2.20(ii)"), r"such that $3m\pm1$ and $3m+5$ are all prime with $m=\pi(n-p)$", EX, 5,
  lambda n: S(n), lambda c, n: c.primes_below(n),
  lambda c, n, p: all(c.isp(3 * _m220(c, n, p) + d) for d in (-1, 1, 5)),
  names=("p",), desk=10**5, space_label="primes p < n")
E("c2.20.ii.b", C("2.20(ii)"), r"such that $3m\pm1$ and $3m-5$ are all prime with $m=\pi(n-p)$", EX, 9,
  lambda n: S(n), lambda c, n: c.primes_below(n),
  lambda c, n, p: all(c.isp(3 * _m220(c, n, p) + d) for d in (-1, 1, -5)),
  names=("p",), desk=10**5, space_label="primes p < n")
E("c2.21.i", C("2.21(i)"),
  r"For any integer $n>4$, there is a prime $p<n$ such that the number of Sophie Germain primes among $1,\ldots,n-p$",
  EX, 5, lambda n: S(2 * n + 2), lambda c, n: c.primes_below(n), lambda c, n, p: _sg_prime(c, c.sg(n - p)),
  names=("p",), desk=10**4, space_label="primes p < n")
E("c2.21.ii", C("2.21(ii)"), r"r=|\{q\ls n-p:\ q\ \t{and}\ q+2\ \t{are twin prime}\}|", EX, 13,
  lambda n: S(n + 3), lambda c, n: c.primes_below(n),
  lambda c, n, p: c.isp(c.twin_lower(n - p)) and c.isp(c.twin_lower(n - p) + 2),
  names=("p",), desk=10**4, space_label="primes p < n")
E("c2.22.i.a", C("2.22(i)"), r"there is a prime $p<n$ such that $\pi(n-p)$ is a square", EX, 3,
  lambda n: S(n), lambda c, n: c.primes_below(n), lambda c, n, p: is_square(c.pi(n - p)),
  names=("p",), verified=5 * 10**8, desk=10**5, space_label="primes p < n")
E("c2.22.i.b", C("2.22(i)"), r"there is a prime $p<n$ such that $\pi(n-p)$ is a triangular number", EX, 3,
  lambda n: S(n), lambda c, n: c.primes_below(n), lambda c, n, p: is_triangular(c.pi(n - p)),
  names=("p",), desk=10**5, space_label="primes p < n")
E("c2.22.ii", C("2.22(ii)"), r"there is a prime $p\ls p_n$ such that $\pi(n+p)$ is a square", EX, 3,
  lambda n: S(nth_need(n) + n), lambda c, n: c.primes_upto(c.p(n)), lambda c, n, p: is_square(c.pi(n + p)),
  names=("p",), desk=10**5, space_label="primes p <= p_n")
E("c2.23.i", C("2.23(i)"),
  r"For any integer $n>11$, there is a prime $p<n$ such that the number of Sophie Germain primes among $1,\ldots,n-p$",
  EX, 12, lambda n: S(2 * n + 2), lambda c, n: c.primes_below(n), lambda c, n, p: is_square(c.sg(n - p)),
  names=("p",), desk=10**5, space_label="primes p < n")
E("c2.23.ii", C("2.23(ii)"),
  r"there is a prime $p<n$ such that the number of Sophie Germain primes among $1,\ldots,n-p$ is a cube", EX, 54,
  lambda n: S(2 * n + 2), lambda c, n: c.primes_below(n), lambda c, n, p: is_cube(c.sg(n - p)),
  names=("p",), desk=2 * 10**4, space_label="primes p < n")
E("c2.24.i", C("2.24(i)"),
  r"there is an odd prime $p<2n$ such that the number of squarefree integers among $1,\ldots,\f{p-1}2n$", EX, 2,
  lambda n: S(n * n), lambda c, n: odd_primes_upto(c, 2 * n - 1), lambda c, n, p: c.isp(c.sqf((p - 1) // 2 * n)),
  names=("p",), desk=2000, space_label="odd primes p < 2n")
E("c2.24.ii", C("2.24(ii)"),
  r"there is a prime $p<n$ such that the number of squarefree numbers among $1,\ldots,n-p$ is prime", EX, 4,
  lambda n: S(n), lambda c, n: c.primes_below(n), lambda c, n, p: c.isp(c.sqf(n - p)),
  names=("p",), desk=10**5, space_label="primes p < n")


def _c2_25(c: Ctx, n: int, k: int) -> bool:
    g = c.gic(k * n)
    return g % 4 == 1 and c.isp(g)


E("c2.25", C("2.25"), r"norm not exceeding $kn$ is a prime congruent to $1$ modulo $4$", EX, 5,
  lambda n: S(n * n), lambda c, n: range(1, n + 1), _c2_25, desk=3000, space_label="1 <= k <= n")

# Section 3: the n-th prime ------------------------------------------------

E("c3.1", C("3.1"), r"there is a prime $q$ with $2n-q$ and $p_{q+2}+2$ both prime", EX, 3,
  lambda n: NP(2 * n + 1) | S(2 * n), lambda c, n: c.primes_upto(2 * n - 2),
  lambda c, n, q: c.isp(2 * n - q) and c.isp(c.p(q + 2) + 2),
  names=("q",), verified=2 * 10**8, desk=10**5, space_label="primes q <= 2n - 2")
E("c3.2", C("3.2"), r"$p_k+2$ and $p_{p_m}+2$ are both prime", REP, 3,
  lambda n: NP(nth_need(n)), pairs, lambda c, n, km: c.isp(c.p(km[0]) + 2) and c.isp(c.p(c.p(km[1])) + 2),
  names=("k", "m"), verified=10**9, desk=10**5, space_label="k + m = n")
E("c3.3", C("3.3"), r"both $\{6k\pm1\}$ and $\{p_m,p_m+2\}$ are twin prime pairs", REP, 3,
  lambda n: NP(n) | S(6 * n + 2), pairs,
  lambda c, n, km: c.isp(6 * km[0] - 1) and c.isp(6 * km[0] + 1) and c.isp(c.p(km[1]) + 2),
  names=("k", "m"), verified=2 * 10**7, desk=10**5, space_label="k + m = n")
E("c3.4", C("3.4"), r"$p_k^2-2,\ p_m^2-2$ and $p_{p_m}^2-2$ are all prime", REP, 2,
  lambda n: NP(nth_need(n)), pairs,
  lambda c, n, km: c.isp(c.p(km[0]) ** 2 - 2) and c.isp(c.p(km[1]) ** 2 - 2) and c.isp(c.p(c.p(km[1])) ** 2 - 2),
  names=("k", "m"), verified=10**8, desk=5 * 10**4, space_label="k + m = n")
E("c3.5.i", C("3.5(i)"), r"coincides with $\{5,6,7,\ldots\}$", Kind.SET_EQUALITY, 1,
  lambda t: S(2 * nth_need(t)), custom=c3_5_i, recheck=c3_5_i_recheck, desk=10**5)


def _p_ap(c: Ctx, n: int, k: int) -> bool:
    a, b, d = c.p(k * n), c.p((k + 1) * n), c.p((k + 2) * n)
    return b - a == d - b


E("c3.5.ii", C("3.5(ii)"), r"there is a positive integer $k\ls 3p_n+8$ such that", EX, 1,
  lambda n: NP((3 * nth_need(n) + 10) * n), lambda c, n: range(1, 3 * c.p(n) + 9), _p_ap,
  desk=300, space_label="1 <= k <= 3p_n + 8")


def _c3_6_i_a(square: int) -> ConjectureSpec:
    if square not in (0, 1):
        raise ValueError("square must be 0 or 1")
    e = 2 if square else 1
    return E(format_id("c3.6.i.a", {"square": square}, {"square": 0}), C("3.6(i)"),
             r"there is a number $k\in\{1,\ldots,n\}$ with $p_{kn}+2\ (\t{or}\ p_{k^2n}+2)$ prime", EX, 7,
             lambda n: NP(n ** (e + 1)), lambda c, n: range(1, n + 1), lambda c, n, k: c.isp(c.p(k**e * n) + 2),
             desk=3000 if not square else 300, register=False, params=(("square", square),),
             space_label="1 <= k <= n")


family("c3.6.i.a", _c3_6_i_a, {"square": 0})

E("c3.6.i.b", C("3.6(i)"), r"there is a positive integer $k<3\sqrt n+6$ with $p_{kn}+2$ prime", EX, 1,
  lambda n: NP(n * (3 * math.isqrt(n) + 10)), lambda c, n: upto_while(1, lambda k: below_affine_sqrt(k, 3, n, 6)),
  lambda c, n, k: c.isp(c.p(k * n) + 2), desk=10**4, space_label="1 <= k < 3 sqrt(n) + 6")
E("c3.6.ii", C("3.6(ii)"), r"such that $2k+1$ and $p_{kn}^2-2$ are both prime", EX, 1,
  lambda n: NP(n * n), lambda c, n: range(1, n + 1), lambda c, n, k: c.isp(2 * k + 1) and c.isp(c.p(k * n) ** 2 - 2),
  desk=3000, space_label="1 <= k <= n")


def _c3_7_i(c: Ctx, n: int, _: int) -> bool:
    if not (c.isp(n - 1) and c.isp(n + 1)):
        return False
    pn = c.p(n)
    return c.isp(pn - n) and c.isp(pn + n) and c.isp(n * pn - 1) and c.isp(n * pn + 1)


E("c3.7.i", C("3.7(i)"), r"n\pm1,\ p_n\pm n,\ np_n\pm1", ENUM, 1,
  lambda n: NP(n), lambda c, n: (n,), _c3_7_i, names=("n",), describe=lambda c, n, _: {"p_n": c.p(n)},
  on_empty="not-member", desk=10**6, space_label="n itself")


def _c3_7_ii(c: Ctx, n: int, q: int) -> bool:
    if not c.isp(q):
        return False
    pq = c.p(q)
    return c.isp(pq * pq + 4 * q * q) and c.isp(q * q + 4 * pq * pq)


E("c3.7.ii", C("3.7(ii)"),
  r"There are infinitely many primes $q$ with $p_q^2+4q^2$ and $q^2+4p_q^2$ both prime", ENUM, 1,
  lambda n: NP(n), lambda c, n: (n,), _c3_7_ii, names=("q",), on_empty="not-member", desk=10**6,
  space_label="n itself")
E("c3.8.i.a", C("3.8(i)"), r"there is a positive integer $k<n$ with $kp_{n-k}+1$ prime", EX, 2,
  lambda n: NP(n), lambda c, n: range(1, n), lambda c, n, k: c.isp(k * c.p(n - k) + 1),
  desk=10**5, space_label="1 <= k < n")
E("c3.8.i.b", C("3.8(i)"), r"there is a positive integer $k<n$ with $kp_{n-k}-1$ prime", EX, 3,
  lambda n: NP(n), lambda c, n: range(1, n), lambda c, n, k: c.isp(k * c.p(n - k) - 1),
  desk=10**5, space_label="1 <= k < n")
E("c3.8.ii", C("3.8(ii)"), r"Then $p_kp_{n-k}-6$ is prime for some $0<k<n$", EX, 6,
  lambda n: NP(n), lambda c, n: range(1, n), lambda c, n, k: c.isp(c.p(k) * c.p(n - k) - 6),
  desk=10**5, space_label="1 <= k < n")
E("c3.9.a", C("3.9"), r"Then $p_k+p_{n-k}-1$ is prime for some $k=1,\ldots,n-1$", EX, 7,
  lambda n: NP(n), lambda c, n: range(1, n), lambda c, n, k: c.isp(c.p(k) + c.p(n - k) - 1),
  desk=10**5, space_label="1 <= k < n")
E("c3.9.b", C("3.9"), r"$p_k^2+p_{n-k}^2-1$ is prime for some $k=1,\ldots,n-1$", EX, 7,
  lambda n: NP(n), lambda c, n: range(1, n), lambda c, n, k: c.isp(c.p(k) ** 2 + c.p(n - k) ** 2 - 1),
  desk=10**5, space_label="1 <= k < n")
E("c3.10.i", C("3.10(i)"), r"there is a positive integer $k<n$ such that $p_k^2+4p_{n-k}^2$ is prime", EX, 4,
  lambda n: NP(n), lambda c, n: range(1, n), lambda c, n, k: c.isp(c.p(k) ** 2 + 4 * c.p(n - k) ** 2),
  desk=10**5, space_label="1 <= k < n")
E("c3.10.ii.a", C("3.10(ii)"), r"there is a positive integer $k<n$ with $p_k^3+2p_{n-k}^3$ prime", EX, 11,
  lambda n: NP(n), lambda c, n: range(1, n), lambda c, n, k: c.isp(c.p(k) ** 3 + 2 * c.p(n - k) ** 3),
  desk=10**5, space_label="1 <= k < n")
E("c3.10.ii.b", C("3.10(ii)"), r"$p_k^3+2p_{n-k}^2$ is prime for some $0<k<n$", EX, 11,
  lambda n: NP(n), lambda c, n: range(1, n), lambda c, n, k: c.isp(c.p(k) ** 3 + 2 * c.p(n - k) ** 2),
  desk=10**5, space_label="1 <= k < n")
E("c3.11.i.a", C("3.11(i)"),
  r"If a positive integer $n$ is not a divisor of $6$, then $p_q^2+(p_n-1)^2$ is prime for some prime $q<n$", EXC, 1,
  lambda n: NP(n), lambda c, n: c.primes_below(n), lambda c, n, q: c.isp(c.p(q) ** 2 + (c.p(n) - 1) ** 2),
  names=("q",), exceptions={1, 2, 3, 6}, desk=10**5, space_label="primes q < n")
E("c3.11.i.b", C("3.11(i)"),
  r"for any positive integer $n\not=1,2,9$, there is a prime $q<n$ with $(p_q-1)^2+p_n^2$ prime", EXC, 1,
  lambda n: NP(n), lambda c, n: c.primes_below(n), lambda c, n, q: c.isp((c.p(q) - 1) ** 2 + c.p(n) ** 2),
  names=("q",), exceptions={1, 2, 9}, desk=10**5, space_label="primes q < n")
E("c3.11.ii", C("3.11(ii)"), r"there is a positive integer $k<n$ with $p_n^3+2p_k^3$ prime", EX, 2,
  lambda n: NP(n), lambda c, n: range(1, n), lambda c, n, k: c.isp(c.p(n) ** 3 + 2 * c.p(k) ** 3),
  desk=10**5, space_label="1 <= k < n")
E("c3.12.i", C("3.12(i)"), r"$2^k+p_m$ is prime", REP, 8,
  lambda n: NP(n), pairs, lambda c, n, km: c.isp(c.pow2(km[0]) + c.p(km[1])),
  names=("k", "m"), verified=3 * 10**7, desk=10**4, space_label="k + m = n")
E("c3.12.ii", C("3.12(ii)"), r"$k!+p_m$ is prime", REP, 4,
  lambda n: NP(n), pairs, lambda c, n, km: c.isp(c.fact(km[0]) + c.p(km[1])),
  names=("k", "m"), verified=10**7, desk=10**4, space_label="k + m = n")
E("c3.13.i", C("3.13(i)"), r"$\bi{2k}k+p_m$ is prime", REP, 3,
  lambda n: NP(n), lambda c, n: ((k, n - k) for k in range(1, (n + 1) // 2)),
  lambda c, n, km: c.isp(c.comb(2 * km[0], km[0]) + c.p(km[1])),
  names=("k", "m"), verified=10**8, desk=10**4, space_label="k + m = n, k < m")


def _c3_13_ii_bound(n: int):
    return lambda M: M.sqrt(n) * M.log(n)


def _c3_13_ii(c: Ctx, n: int, k: int) -> bool:
    pk = c.p(k)
    return c.isp(c.p(n) + c.comb(pk - 1, (pk - 1) // 2))


E("c3.13.ii", C("3.13(ii)"),
  r"there exists an integer $1<k<\sqrt n\log n$ such that $p_n+\bi{p_k-1}{(p_k-1)/2}$ is prime", EX, 5,
  lambda n: NP(max(n, int(math.sqrt(n) * math.log(n)) + 2)),
  lambda c, n: upto_while(2, lambda k: below_transcendental(k, _c3_13_ii_bound(n))[0]), _c3_13_ii,
  verified=10**7, desk=10**4, space_label="1 < k < sqrt(n) log(n)")


def _phi_split(divisor: int, lo: int = 1, top: Callable[[int], int] = lambda n: n - 1):
    """k in [lo, top(n)] with divisor | phi(n - k)."""
    def space(c: Ctx, n: int):
        for k in range(lo, top(n) + 1):
            b = c.phi(n - k)
            if b % divisor == 0:
                yield k

    return space


def _m314(c: Ctx, n: int, k: int) -> int:
    return c.phi(k) + c.phi(n - k) // 8


def _c3_14(c: Ctx, n: int, k: int) -> bool:
    m = _m314(c, n, k)
    return c.isp(c.comb(2 * m, m) + c.p(m))


E("c3.14", C("3.14"), r"$m=\varphi(k)+\varphi(n-k)/8$ is an integer with $\bi{2m}m+p_m$ prime", EX, 20,
  lambda n: NP(2 * n) | Needs(mult=n), _phi_split(8), _c3_14, describe=lambda c, n, k: {"m": _m314(c, n, k)},
  desk=2000, space_label="k < n with 8 | phi(n-k)")


def _c3_15_i(c: Ctx, n: int, km) -> bool:
    q = km[0] + c.p(km[1])
    return c.isp(q) and c.isp(q_step(c, q))


E("c3.15.i", C("3.15(i)"), r"$q=k+p_m$ and $p_q-q+1$ are both prime", REP, 10,
  lambda n: NP(nth_need(n) + n), pairs, _c3_15_i, names=("k", "m"),
  describe=lambda c, n, km: {"q": km[0] + c.p(km[1])}, desk=10**5, space_label="k + m = n")
E("c3.15.ii", C("3.15(ii)"), r"p_{p_k}-p_k+1,\ \ p_{p_{2k+1}}-p_{2k+1}+1\ \ \t{and}\ \ p_{p_m}-p_m+1", REP, 2,
  lambda n: NP(nth_need(2 * n + 1)), pairs,
  lambda c, n, km: c.isp(prime_pp(c, km[0])) and c.isp(prime_pp(c, 2 * km[0] + 1)) and c.isp(prime_pp(c, km[1])),
  names=("k", "m"), verified=10**7, desk=10**5, space_label="k + m = n")
E("c3.15.iii", C("3.15(iii)"), r"$p_{p_k}-p_k+1$ and $p_{p_{kn}}-p_{kn}+1$ are both prime", EX, 1,
  lambda n: NP(nth_need(n * n)), lambda c, n: range(1, n + 1),
  lambda c, n, k: c.isp(prime_pp(c, k)) and c.isp(prime_pp(c, k * n)), desk=500, space_label="1 <= k <= n")


def _c3_15_iv(c: Ctx, n: int, q: int) -> bool:
    if not (c.isp(q) and c.isp(q_step(c, q))):
        return False
    q2 = c.next_prime(q)
    return c.isp(q_step(c, q2))


E("c3.15.iv", C("3.15(iv)"),
  r"There are infinitely many primes $q$ with $p_q-q+1$ and $p_{q'}-q'+1$ both prime", ENUM, 1,
  lambda n: NP(2 * n + 2), lambda c, n: (n,), _c3_15_iv, names=("q",),
  describe=lambda c, n, q: {"q_next": c.next_prime(q)}, on_empty="not-member", desk=10**6, space_label="n itself")


def _c3_16(variant: str):
    def build(m: int) -> ConjectureSpec:
        if m < 1:
            raise ValueError("m must be positive")
        if variant == "a":
            target = lambda c, q: c.isp(q_step(c, q))  # noqa: E731
        else:
            target = lambda c, q: c.isp(q * q - 2)  # noqa: E731
        if m == 1:
            dom, note = (lambda n: n % 2 == 0), "n even"
        elif m == 3:
            dom, note = (lambda n: n % 6 != 1), "n not 1 mod 6"
        else:
            dom, note = None, ""

        def test(c: Ctx, n: int, p: int) -> bool:
            q = (n - p) // m
            return q >= 2 and c.isp(q) and target(c, q)

        quote = r"$q=\lfloor(n-p)/m\rfloor$ and $p_q-q+1\ (\t{or}\ q^2-2)$ are both prime"
        return E(format_id(f"c3.16.{variant}", {"m": m}, {"m": 2}), C("3.16"), quote, EX, 2 * m + 2,
                 lambda n: NP(n // m + 1) | S(n), lambda c, n: c.primes_below(n), test, names=("p",),
                 describe=lambda c, n, p: {"q": (n - p) // m}, in_domain=dom, domain_note=note,
                 verified=10**6, desk=10**5, register=False, params=(("m", m),), space_label="primes p < n")

    return build


family("c3.16.a", _c3_16("a"), {"m": 2})
family("c3.16.b", _c3_16("b"), {"m": 2})


def _c3_17_space(c: Ctx, n: int):
    elems = [q for q in c.primes_below(n) if c.isp(q_step(c, q))]
    return _three_sums(elems, n)


def _in_t317(c: Ctx, q: int) -> bool:
    return c.isp(q) and c.isp(q_step(c, q))


E("c3.17", C("3.17"), r"Any odd number greater than $5$ can be written as a sum of three elements of the set", REP, 6,
  lambda n: NP(n), _c3_17_space, lambda c, n, t: sum(t) == n and all(_in_t317(c, x) for x in t),
  names=("a", "b", "c"), in_domain=lambda n: n % 2 == 1, domain_note="n odd", desk=10**4,
  space_label="a <= b <= c in the set")


def _q318(c: Ctx, n: int, k: int) -> int:
    return c.phi(k) + c.phi(n - k) // 2 + 1


def _c3_18(c: Ctx, n: int, k: int) -> bool:
    q = _q318(c, n, k)
    if not c.isp(q):
        return False
    d = c.p(q) - q
    return c.isp(d - 1) and c.isp(d + 1)


E("c3.18", C("3.18"), r"$q=\varphi(k)+\varphi(n-k)/2+1$ and $p_q-q\pm1$ are all prime", EX, 32,
  lambda n: NP(2 * n) | Needs(mult=n), _phi_split(2, top=lambda n: n - 3), _c3_18,
  describe=lambda c, n, k: {"q": _q318(c, n, k)}, desk=5 * 10**4, space_label="k < n - 2")


def _q319(c: Ctx, n: int, k: int) -> int:
    return c.phi(k) + c.phi(n - k) // 3 + 1


def _c3_19(c: Ctx, n: int, k: int) -> bool:
    q = _q319(c, n, k)
    if not c.isp(q):
        return False
    r = q_step(c, q)
    return c.isp(r) and c.isp(q_step(c, r))


E("c3.19", C("3.19"), r"$q=\varphi(k)+\varphi(n-k)/3+1$, $r=p_q-q+1$ and $s=p_r-r+1$ are all prime", EX, 38,
  lambda n: NP(nth_need(2 * n)) | Needs(mult=n), _phi_split(3), _c3_19,
  describe=lambda c, n, k: {"q": _q319(c, n, k)}, desk=5 * 10**4, space_label="k < n with 3 | phi(n-k)")


def _c3_20(start: int) -> ConjectureSpec:
    return E(format_id("c3.20", {"start": start}, {"start": 1000}), C("3.20"),
             r"there is a prime chain $q_1<\ldots<q_m$ of length $m$", Kind.CHAIN, 2,
             lambda m: chain_needs(m, start), custom=lambda c, m, b: chain_search(c, m, start, b),
             recheck=chain_recheck, desk=4, register=False, params=(("start", start),),
             domain_note="n is the chain length m")


family("c3.20", _c3_20, {"start": 1000})

E("c3.21.i", C("3.21(i)"), r"such that $2k+1$ and $p_{kn}+kn$ are both prime", EX, 6,
  lambda n: NP(n * n), lambda c, n: range(1, n), lambda c, n, k: c.isp(2 * k + 1) and c.isp(c.p(k * n) + k * n),
  desk=5000, space_label="1 <= k < n")
E("c3.21.ii", C("3.21(ii)"), r"such that $p_{k(k+1)/2}+\varphi(m)$ is prime", REP, 9,
  lambda n: NP(n) | Needs(mult=n),
  lambda c, n: ((k, n - k * (k + 1) // 2) for k in upto_while(1, lambda k: k * (k + 1) // 2 < n)),
  lambda c, n, km: c.isp(c.p(km[0] * (km[0] + 1) // 2) + c.phi(km[1])),
  names=("k", "m"), desk=10**5, space_label="n = k(k+1)/2 + m")
E("c3.22.i", C("3.22(i)"), r"$\varphi(k^2)+p_m$ is prime", REP, 101,
  lambda n: NP(n) | Needs(mult=n), lambda c, n: ((k, n - k * k) for k in upto_while(1, lambda k: k * k < n)),
  lambda c, n, km: c.isp(c.phi(km[0] ** 2) + c.p(km[1])),
  names=("k", "m"), desk=10**5, space_label="n = k^2 + m")
E("c3.22.ii", C("3.22(ii)"), r"such that $\sigma(k^2) + p_m-1$ is prime", EXC, 7,
  lambda n: NP(n) | Needs(mult=n), lambda c, n: ((k, n - k * k) for k in upto_while(1, lambda k: k * k < n)),
  lambda c, n, km: c.isp(c.sigma(km[0] ** 2) + c.p(km[1]) - 1),
  names=("k", "m"), exceptions={18}, desk=10**5, space_label="n = k^2 + m")
E("c3.23.i", C("3.23(i)"), r"there is a prime $q<n$ such that $q+2$ and $p_{n-q}+q+1$ are both prime", EX, 14,
  lambda n: NP(n), lambda c, n: c.primes_below(n), lambda c, n, q: c.isp(q + 2) and c.isp(c.p(n - q) + q + 1),
  names=("q",), desk=10**5, space_label="primes q < n")
E("c3.23.ii", C("3.23(ii)"),
  r"If a positive integer $n$ is not a divisor of $12$, then there is a prime $q<n$ such that $3(p_{n-q}+q)-1$ and $3(p_{n-q}+q)+1$",
  EXC, 1, lambda n: NP(n), lambda c, n: c.primes_below(n),
  lambda c, n, q: c.isp(3 * (c.p(n - q) + q) - 1) and c.isp(3 * (c.p(n - q) + q) + 1),
  names=("q",), exceptions=DIVISORS_12, desk=10**5, space_label="primes q < n")


def _inverse_prime(c: Ctx, k: int) -> bool:
    pk = c.p(k)
    return c.isp(c.inverse(k, pk))


def _prim_root_at(c: Ctx, k: int) -> bool:
    return c.is_prim_root(k, c.p(k))


E("c3.24.i", C("3.24(i)"), r"\mbox{the inverse of}\ k\ \mbox{mod}\ p_k\ \mbox{is prime}", REP, 4,
  lambda n: NP(n), lambda c, n: ((a, n - a) for a in range(1, n)),
  lambda c, n, ab: _inverse_prime(c, ab[0]) and _inverse_prime(c, ab[1]),
  names=("a", "b"), verified=10**8, desk=10**5, space_label="a + b = n")
E("c3.24.ii", C("3.24(ii)"), r"k\ \mbox{is a primitive root modulo}\ p_k", REP, 2,
  lambda n: NP(n), lambda c, n: ((a, n - a) for a in range(1, n)),
  lambda c, n, ab: _prim_root_at(c, ab[0]) and _prim_root_at(c, ab[1]),
  names=("a", "b"), verified=3 * 10**5, desk=10**5, space_label="a + b = n")
E("c3.25.a", C("3.25"), r"there is a prime $p<n$ such that $pn$ is a primitive root modulo $p_n$", EX, 7,
  lambda n: NP(n), lambda c, n: c.primes_below(n), lambda c, n, p: c.is_prim_root(p * n, c.p(n)),
  names=("p",), verified=2 * 10**5, desk=10**5, space_label="primes p < n")
E("c3.25.b", C("3.25"), r"there is a prime $q<n$ such that $q(n-q)$ is a primitive root modulo $p_n$", EX, 7,
  lambda n: NP(n), lambda c, n: c.primes_below(n), lambda c, n, q: c.is_prim_root(q * (n - q), c.p(n)),
  names=("q",), verified=2 * 10**5, desk=10**5, space_label="primes q < n")

# Section 4: partition functions ------------------------------------------


def P(x: int) -> Needs:
    return Needs(partitions=int(x))


E("c4.1.i.a", C("4.1(i)"), r"Then $p(n)+k$ is prime for some $k=1,\ldots,n$", EX, 1,
  lambda n: P(n), lambda c, n: range(1, n + 1), lambda c, n, k: c.isp(c.P(n) + k),
  verified=150000, desk=2000, space_label="1 <= k <= n")
E("c4.1.i.b", C("4.1(i)"), r"$q(n)+k$ is prime for some $k=1,\ldots,n$", EX, 1,
  lambda n: P(n), lambda c, n: range(1, n + 1), lambda c, n, k: c.isp(c.Q(n) + k), desk=2000,
  space_label="1 <= k <= n")
E("c4.1.ii.a", C("4.1(ii)"), r"Then $p(n)+p(k)-1$ is prime for some $0<k<n$", EX, 2,
  lambda n: P(n), lambda c, n: range(1, n), lambda c, n, k: c.isp(c.P(n) + c.P(k) - 1),
  verified=150000, desk=2000, space_label="1 <= k < n")
E("c4.1.ii.b", C("4.1(ii)"), r"$p(k)+q(n)$ is prime for some $0<k<n$", EX, 2,
  lambda n: P(n), lambda c, n: range(1, n), lambda c, n, k: c.isp(c.P(k) + c.Q(n)), desk=2000,
  space_label="1 <= k < n")
E("c4.1.ii.c", C("4.1(ii)"), r"there is a positive integer $k<n$ with $n+p(k)$ prime", EX, 8,
  lambda n: P(n), lambda c, n: range(1, n), lambda c, n, k: c.isp(n + c.P(k)), desk=2000,
  space_label="1 <= k < n")
E("c4.1.iii.a", C("4.1(iii)"), r"such that $kp(n)(p(n)-1)+1$ is prime", EX, 2,
  lambda n: P(n), lambda c, n: range(1, n), lambda c, n, k: c.isp(k * c.P(n) * (c.P(n) - 1) + 1),
  verified=10**5, desk=2000, space_label="1 <= k < n")
E("c4.1.iii.b", C("4.1(iii)"), r"$p(k)p(n)(p(n)-1)+1$", EX, 2,
  lambda n: P(n), lambda c, n: range(1, n), lambda c, n, k: c.isp(c.P(k) * c.P(n) * (c.P(n) - 1) + 1),
  desk=2000, space_label="1 <= k < n")
E("c4.1.iii.c", C("4.1(iii)"), r"$p(k)p(n)(p(n)+1)-1$", EX, 2,
  lambda n: P(n), lambda c, n: range(1, n), lambda c, n, k: c.isp(c.P(k) * c.P(n) * (c.P(n) + 1) - 1),
  desk=2000, space_label="1 <= k < n")
E("c4.2.i.a", C("4.2(i)"), r"there is a prime $q<n$ with $2p(n-q)+1$ prime", EX, 3,
  lambda n: P(n) | S(n), lambda c, n: c.primes_below(n), lambda c, n, q: c.isp(2 * c.P(n - q) + 1),
  names=("q",), verified=10**5, desk=3000, space_label="primes q < n")
E("c4.2.i.b", C("4.2(i)"), r"there is a prime $q<n$ with $2p(n-q)-1$ prime", EX, 4,
  lambda n: P(n) | S(n), lambda c, n: c.primes_below(n), lambda c, n, q: c.isp(2 * c.P(n - q) - 1),
  names=("q",), verified=10**5, desk=3000, space_label="primes q < n")
E("c4.2.ii.a", C("4.2(ii)"), r"there is a prime $p<n$ with $q(n-p)+1$ prime", EX, 3,
  lambda n: P(n) | S(n), lambda c, n: c.primes_below(n), lambda c, n, p: c.isp(c.Q(n - p) + 1),
  names=("p",), verified=10**5, desk=3000, space_label="primes p < n")
E("c4.2.ii.b", C("4.2(ii)"), r"there is a prime $p<n$ with $q(n-p)-1$ prime", EX, 7,
  lambda n: P(n) | S(n), lambda c, n: c.primes_below(n), lambda c, n, p: c.isp(c.Q(n - p) - 1),
  names=("p",), verified=10**5, desk=3000, space_label="primes p < n")


def _m431(c: Ctx, n: int, k: int) -> int:
    return k + c.phi(n - k) // 2


E("c4.3.i", C("4.3(i)"), r"such that $p(k+\varphi(n-k)/2)$ is prime", EX, 128,
  lambda n: P(2 * n) | Needs(mult=n), _phi_split(2, top=lambda n: n - 3),
  lambda c, n, k: c.isp(c.P(_m431(c, n, k))), describe=lambda c, n, k: {"m": _m431(c, n, k)},
  verified=25000, desk=3000, space_label="k < n - 2")


def _q432(c: Ctx, n: int, k: int) -> int:
    return c.phi(k) + c.phi(n - k) // 2 + 1


E("c4.3.ii", C("4.3(ii)"), r"such that $q=\varphi(k)+\varphi(n-k)/2+1$ and $p(q-1)$ are both prime", EX, 728,
  lambda n: P(2 * n) | Needs(mult=n), _phi_split(2, top=lambda n: n - 3),
  lambda c, n, k: c.isp(_q432(c, n, k)) and c.isp(c.P(_q432(c, n, k) - 1)),
  describe=lambda c, n, k: {"q": _q432(c, n, k)}, verified=56000, desk=3000, space_label="k < n - 2")
E("c4.4.i.a", C("4.4(i)"), r"there is a number $k\in\{1,\ldots,n\}$ with $p(n+k)+1$ prime", EX, 4,
  lambda n: P(2 * n), lambda c, n: range(1, n + 1), lambda c, n, k: c.isp(c.P(n + k) + 1), desk=2000,
  space_label="1 <= k <= n")
E("c4.4.i.b", C("4.4(i)"), r"there is a number $k\in\{1,\ldots,n\}$ with $p(n+k)-1$ prime", EX, 16,
  lambda n: P(2 * n), lambda c, n: range(1, n + 1), lambda c, n, k: c.isp(c.P(n + k) - 1), desk=2000,
  space_label="1 <= k <= n")


def _v444(c: Ctx, k: int, m: int) -> int:
    return c.phi(k) * c.phi(m) // 4


E("c4.4.ii", C("4.4(ii)"), r"such that $q(\varphi(k)\varphi(m)/4)+1$ is prime", REP, 6,
  lambda n: P(n * n // 16 + 1) | Needs(mult=n), lambda c, n: ((k, n - k) for k in range(3, n - 2)),
  lambda c, n, km: c.isp(c.Q(_v444(c, *km)) + 1), names=("k", "m"), desk=400, space_label="k + m = n, k, m >= 3")


def _p45(c: Ctx, k: int, m: int) -> int:
    return c.p(k) + c.phi(m)


def _c4_5(sign: int):
    def test(c: Ctx, n: int, km) -> bool:
        p = _p45(c, *km)
        return c.isp(p) and c.isp(c.Q(p) + sign)

    return test


E("c4.5.a", C("4.5"), r"such that $p=p_k+\varphi(m)$", REP, 8,
  lambda n: NP(n) | P(nth_need(n) + n) | Needs(mult=n), pairs, _c4_5(-1), names=("k", "m"),
  describe=lambda c, n, km: {"p": _p45(c, *km)}, desk=1000, space_label="k + m = n")
E("c4.5.b", C("4.5"), r"any integer $n>7$ not equal to $15$ can be written as $k+m$", EXC, 8,
  lambda n: NP(n) | P(nth_need(n) + n) | Needs(mult=n), pairs, _c4_5(1), names=("k", "m"),
  describe=lambda c, n, km: {"p": _p45(c, *km)}, exceptions={15}, desk=1000, space_label="k + m = n")


def _m46(c: Ctx, n: int, k: int) -> int:
    return c.phi(k) + c.phi(n - k) // 4


def _c4_6(c: Ctx, n: int, k: int) -> bool:
    m = _m46(c, n, k)
    return c.isp(m - 1) and c.isp(m + 1) and c.isp(c.Q(m) + 1)


E("c4.6", C("4.6"), r"such that $m\pm1$ and $q(m)+1$ are all prime", EX, 60,
  lambda n: P(2 * n) | Needs(mult=n), _phi_split(4), _c4_6, describe=lambda c, n, k: {"m": _m46(c, n, k)},
  verified=10**5, desk=3000, space_label="k < n with 4 | phi(n-k)")


def _r47(c: Ctx, n: int, k: int) -> int:
    return c.phi(k) + c.phi(n - k) // 6 + 1


E("c4.7.i", C("4.7(i)"), r"such that $r=\varphi(k)+\varphi(n-k)/6+1$ and $p(r)+q(r)$ are both prime", EX, 128,
  lambda n: P(2 * n) | Needs(mult=n), _phi_split(6),
  lambda c, n, k: c.isp(_r47(c, n, k)) and c.isp(c.P(_r47(c, n, k)) + c.Q(_r47(c, n, k))),
  describe=lambda c, n, k: {"r": _r47(c, n, k)}, verified=30000, desk=3000, space_label="k < n with 6 | phi(n-k)")


def _weighted_split(wk: int, den: int):
    """k < n with den | wk*phi(k) + phi(n-k)."""
    def space(c: Ctx, n: int):
        for k in range(1, n):
            if (wk * c.phi(k) + c.phi(n - k)) % den == 0:
                yield k

    return space


def _m472(c: Ctx, n: int, k: int) -> int:
    return (4 * c.phi(k) + c.phi(n - k)) // 8


E("c4.7.ii", C("4.7(ii)"), r"such that $m=\varphi(k)/2+\varphi(n-k)/8$ is an integer with $p(m)^2+q(m)^2$ prime",
  EX, 18, lambda n: P(n) | Needs(mult=n), _weighted_split(4, 8),
  lambda c, n, k: c.isp(c.P(_m472(c, n, k)) ** 2 + c.Q(_m472(c, n, k)) ** 2),
  describe=lambda c, n, k: {"m": _m472(c, n, k)}, verified=65000, desk=3000,
  space_label="k < n with phi(k)/2 + phi(n-k)/8 integral")


def _p481(c: Ctx, n: int, k: int) -> int:
    return (6 * c.phi(k) + c.phi(n - k)) // 12 + 1


E("c4.8.i", C("4.8(i)"), r"such that $p=\varphi(k)/2+\varphi(n-k)/12+1$", EX, 99,
  lambda n: P(n) | Needs(mult=n), _weighted_split(6, 12),
  lambda c, n, k: c.isp(_p481(c, n, k)) and c.isp(c.Qbar(_p481(c, n, k))),
  describe=lambda c, n, k: {"p": _p481(c, n, k)}, desk=3000,
  space_label="k < n with phi(k)/2 + phi(n-k)/12 integral")


def _m482(c: Ctx, n: int, k: int) -> int:
    return k + c.phi(n - k) // 2


E("c4.8.ii", C("4.8(ii)"), r"such that $q(m)^2+\bar q(m)^2$ is prime, where $m=k+\varphi(n-k)/2$", EX, 4,
  lambda n: P(2 * n) | Needs(mult=n), _phi_split(2, top=lambda n: n - 3),
  lambda c, n, k: c.isp(c.Q(_m482(c, n, k)) ** 2 + c.Qbar(_m482(c, n, k)) ** 2),
  describe=lambda c, n, k: {"m": _m482(c, n, k)}, desk=3000, space_label="k < n - 2")


def _pqq(c: Ctx, n: int) -> int:
    return c.P(n) * c.Q(n) * c.Qbar(n)


E("c4.9.i.a", C("4.9(i)"), r"the number $kp(n)q(n)\bar q(n)-1$ is prime for some $k=1,\ldots,n$", EX, 2,
  lambda n: P(n), lambda c, n: range(1, n + 1), lambda c, n, k: c.isp(k * _pqq(c, n) - 1),
  verified=83000, desk=1000, space_label="1 <= k <= n")
E("c4.9.i.b", C("4.9(i)"), r"$2p(k)p(n)q(n)\bar q(n)+1$ is prime for some $k=1,\ldots,n-1$", EX, 2,
  lambda n: P(n), lambda c, n: range(1, n), lambda c, n, k: c.isp(2 * c.P(k) * _pqq(c, n) + 1),
  verified=50000, desk=1000, space_label="1 <= k < n")
E("c4.9.ii", C("4.9(ii)"), r"such that $q(k)+\bar q(m)$ is prime", REP, 3,
  lambda n: P(n), pairs, lambda c, n, km: c.isp(c.Q(km[0]) + c.Qbar(km[1])),
  names=("k", "m"), desk=3000, space_label="k + m = n")
E("c4.9.iii", C("4.9(iii)"), r"there is a positive integer $k<n$ with $2^k-1+q(n-k)$ prime", EX, 2,
  lambda n: P(n), lambda c, n: range(1, n), lambda c, n, k: c.isp(c.pow2(k) - 1 + c.Q(n - k)),
  verified=2 * 10**5, desk=3000, space_label="1 <= k < n")


def _partition_index_need(p: int) -> Needs:
    return Needs(sieve=p, partitions=int(0.5 * math.log(max(p, 2)) ** 2) + 64)


def _is_prime_n(n: int) -> bool:
    return is_prime_u64(n)


E("c4.10.i", C("4.10(i)"), r"there exists a primitive root $g<p$ modulo $p$ which is also a partition number", EX, 2,
  _partition_index_need, lambda c, n: c.partition_values_below(n), lambda c, n, g: c.is_prim_root(g, n),
  names=("g",), in_domain=_is_prime_n, domain_note="n prime", verified=2 * 10**7, desk=10**6,
  space_label="partition numbers g < p")
E("c4.10.ii", C("4.10(ii)"), r"which is also a strict partition number", EX, 5,
  _partition_index_need, lambda c, n: c.strict_values_below(n), lambda c, n, g: c.is_prim_root(g, n),
  names=("g",), in_domain=_is_prime_n, domain_note="n prime", verified=5 * 10**6, desk=10**6,
  space_label="strict partition numbers g < p")


# -- lookup ---------------------------------------------------------------

_ID_RE = re.compile(r"^(c[234](?:\.[0-9a-z]+)+)(?:\[([^\]]*)\])?$")


def _parse_params(text: str | None, ident: str) -> dict:
    out: dict[str, Any] = {}
    if not text:
        return out
    for part in text.split(","):
        key, sep, val = part.partition("=")
        key = key.strip()
        if not sep or not key:
            raise UnknownConjecture(ident)
        try:
            out[key] = int(val.strip().replace("_", ""))
        except ValueError:
            raise UnknownConjecture(ident) from None
    return out


def lookup(ident: str) -> ConjectureSpec:
    """Resolve an id such as ``c2.1.i``, ``c2.1.ii[delta=-1]`` or ``c3.16.b[m=5]``."""
    if isinstance(ident, ConjectureSpec):
        return ident
    ident = ident.strip()
    if ident in _BUILT:
        return _BUILT[ident]
    m = _ID_RE.match(ident)
    if not m:
        raise UnknownConjecture(ident)
    base, params = m.group(1), _parse_params(m.group(2), ident)
    if base not in _FIXED and base not in _FAMILIES and base + ".a" in _FIXED | _FAMILIES:
        base += ".a"
    if base in _FIXED:
        if params:
            raise UnknownConjecture(ident)
        spec = _FIXED[base]
    elif base in _FAMILIES:
        fam = _FAMILIES[base]
        if set(params) - set(fam.defaults):
            raise UnknownConjecture(ident)
        try:
            spec = fam.build(**{**fam.defaults, **params})
        except ValueError as exc:
            raise UnknownConjecture(f"{ident} ({exc})") from None
    else:
        raise UnknownConjecture(ident)
    _BUILT[ident] = spec
    return spec


def catalog() -> list[ConjectureSpec]:
    return [lookup(i) for i in _ORDER]


def plain_quote(quote: str) -> str:
    """The quote with math markup reduced to readable text."""
    s = re.sub(r"\\(?:mbox|t|rm)\{([^}]*)\}", r"\1", quote)
    s = s.replace("$", "").replace(r"\ ", " ").replace(r"\,", " ").replace(r"\ls", "<=").replace(r"\eq", "=")
    return re.sub(r"\s+", " ", s).strip()
