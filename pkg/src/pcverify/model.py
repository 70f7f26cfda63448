"""Types shared by the conjecture catalog and the evaluation engine."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Iterable

from .kernels import Ctx, Needs


class Kind(str, Enum):
    EXISTENTIAL = "existential-witness"
    REPRESENTATION = "representation"
    INEQUALITY = "inequality"
    SET_COVER = "set-cover"
    SET_EQUALITY = "set-equality"
    EXCEPTION_LIST = "exception-list"
    ENUMERATION = "witness-enumeration"
    CHAIN = "chain-search"


class Outcome(str, Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    EXEMPT = "Exempt"
    EXHAUSTED = "Exhausted"


class Stat(str, Enum):
    WITNESS_COUNT = "witness-count"
    WITNESS_COUNT_STRICT = "witness-count-strict"
    LEAST_WITNESS = "least-witness"
    FIRST_N = "first-n"


BELOW_DOMAIN = "below domain"
LISTED_EXCEPTION = "listed exception"
OUTSIDE_DOMAIN = "outside domain"
NOT_A_MEMBER = "not a member"


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    witness: dict | None = None
    note: str = ""
    probabilistic: bool = False
    # scalar summary of the witness (the least candidate), used for statistics
    value: int | None = None

    @property
    def holds(self) -> bool:
        return self.outcome is Outcome.HOLDS

    def to_record(self) -> dict:
        return {"verdict": self.outcome.value, "witness": self.witness, "note": self.note,
                "probabilistic": self.probabilistic}


def holds(witness: dict, value: int | None, prob: bool = False, note: str = "") -> Verdict:
    return Verdict(Outcome.HOLDS, witness, note, prob, value)


def fails(note: str) -> Verdict:
    return Verdict(Outcome.FAILS, None, note)


def exempt(reason: str) -> Verdict:
    return Verdict(Outcome.EXEMPT, None, reason)


def exhausted(note: str) -> Verdict:
    return Verdict(Outcome.EXHAUSTED, None, note)


class UnknownConjecture(KeyError):
    def __init__(self, ident: str):
        self.ident = ident
        super().__init__(ident)

    def __str__(self) -> str:
        return f"unknown conjecture id {self.ident!r}"


class UnderProvisioned(RuntimeError):
    def __init__(self, ident: str, n: int, what: str, needed: int, limit: int):
        self.ident = ident
        self.n = n
        self.needed = needed
        self.limit = limit
        super().__init__(f"{ident} at n={n}: {what} needs a sieve limit of at least {needed}, tables stop at {limit}")


Space = Callable[[Ctx, int], Iterable[Any]]
Test = Callable[[Ctx, int, Any], bool]
Custom = Callable[[Ctx, int, int], Verdict]


@dataclass(frozen=True)
class ConjectureSpec:
    """One single-claim catalog entry.

    The generic entries are an ordered candidate ``space`` plus a predicate
    ``test``; the claim for n holds iff some candidate passes, and the first
    passing candidate is the least witness.  ``names`` label the candidate
    components in the witness record; ``describe`` may add derived fields.
    Entries whose claim is not of that shape supply ``custom`` instead.
    """

    id: str
    anchor: str
    quote: str
    kind: Kind
    domain_start: int
    exceptions: frozenset[int]
    paper_verified_bound: int | None
    desk_bound: int
    needs: Callable[[int], Needs] = field(repr=False, compare=False)
    space: Space | None = field(default=None, repr=False, compare=False)
    test: Test | None = field(default=None, repr=False, compare=False)
    names: tuple[str, ...] = ("k",)
    describe: Callable[[Ctx, int, Any], dict] | None = field(default=None, repr=False, compare=False)
    custom: Custom | None = field(default=None, repr=False, compare=False)
    recheck: Callable[[Ctx, int, dict], bool] | None = field(default=None, repr=False, compare=False)
    in_domain: Callable[[int], bool] | None = field(default=None, repr=False, compare=False)
    domain_note: str = ""
    space_label: str = ""
    strict_space: Space | None = field(default=None, repr=False, compare=False)
    params: tuple[tuple[str, Any], ...] = ()
    # outcome when the space holds no witness: "fails", "not-member"
    # (membership enumerations) or "exhausted" (open-ended searches)
    on_empty: str = "fails"

    @property
    def paper_anchor(self) -> str:
        return f"{self.anchor}: \"{self.quote}\""

    def kernel_needs(self, lo: int, hi: int) -> Needs:
        """Resource plan for evaluating every n in [lo, hi]."""
        lo = max(lo, 1)
        hi = max(hi, lo)
        return self.needs(lo) | self.needs(hi)

    def stats(self) -> tuple[Stat, ...]:
        if self.custom is None and self.on_empty == "fails":
            out = [Stat.WITNESS_COUNT]
            if self.strict_space is not None:
                out.append(Stat.WITNESS_COUNT_STRICT)
            return (*out, Stat.LEAST_WITNESS, Stat.FIRST_N)
        if self.kind is Kind.INEQUALITY or self.on_empty == "not-member":
            return (Stat.FIRST_N,)
        return (Stat.LEAST_WITNESS, Stat.FIRST_N)

    def candidate(self, witness: dict) -> Any:
        vals = tuple(witness[k] for k in self.names)
        return vals[0] if len(vals) == 1 else vals

    def witness_of(self, ctx: Ctx, n: int, cand: Any) -> dict:
        vals = cand if isinstance(cand, tuple) else (cand,)
        out = dict(zip(self.names, vals))
        if self.describe is not None:
            out.update(self.describe(ctx, n, cand))
        return out

    def confirms(self, ctx: Ctx, n: int, witness: dict) -> bool:
        """Re-check a Holds witness by direct kernel calls."""
        if self.recheck is not None:
            return bool(self.recheck(ctx, n, witness))
        return bool(self.test(ctx, n, self.candidate(witness)))

    def to_record(self) -> dict:
        return {
            "id": self.id,
            "anchor": self.anchor,
            "quote": self.quote,
            "kind": self.kind.value,
            "domain_start": self.domain_start,
            "exceptions": sorted(self.exceptions),
            "paper_verified_bound": self.paper_verified_bound,
            "desk_bound": self.desk_bound,
            "params": dict(self.params),
        }
