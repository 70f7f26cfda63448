import re
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

import oracle
from entry_oracles import ORACLES, expected
from pcverify import Outcome, Stat, UnknownConjecture, catalog, evaluate, find_chain, lookup, verify_range
from pcverify import witness_count_sequence
from pcverify.engine import auto_kernels
from pcverify.kernels import Ctx
from pcverify.model import BELOW_DOMAIN, LISTED_EXCEPTION, NOT_A_MEMBER, OUTSIDE_DOMAIN

PAPER = Path(__file__).resolve().parents[1] / "paper.md"
IDS = [s.id for s in catalog()]
EXEMPT_REASONS = {BELOW_DOMAIN, LISTED_EXCEPTION, OUTSIDE_DOMAIN, NOT_A_MEMBER}


def test_catalog_shape():
    assert len(IDS) == 139
    assert len(set(IDS)) == len(IDS)
    assert set(ORACLES) == set(IDS)


def test_quotes_are_verbatim():
    text = PAPER.read_text(encoding="utf-8").replace("\r\n", "\n")
    for s in catalog():
        assert s.quote and s.quote in text, s.id


def test_lookup():
    assert lookup("c2.14.iii").exceptions == {25, 35, 44, 46, 105}
    assert lookup("c3.2").paper_verified_bound == 10**9
    assert lookup("c3.16").id == "c3.16.a"
    with pytest.raises(UnknownConjecture):
        lookup("c9.99")


def test_records_are_plain_data():
    for s in catalog():
        rec = s.to_record()
        assert rec["id"] == s.id
        assert rec["domain_start"] >= 1
        assert rec["desk_bound"] >= rec["domain_start"]


def test_evaluate_examples():
    v = evaluate("c2.1.i", 2)
    assert v.outcome is Outcome.HOLDS and v.witness == {"k": 2}
    v = evaluate("c2.14.iii", 25)
    assert v.outcome is Outcome.EXEMPT and v.note == LISTED_EXCEPTION
    v = evaluate("c3.24.i", 4)
    assert v.outcome is Outcome.HOLDS and v.witness == {"a": 2, "b": 2}
    v = evaluate("c2.18.i", 9)
    assert v.witness == {"q": 5, "p": 7}  # 9 = 7 + 5 - pi(5)
    with pytest.raises(ValueError):
        evaluate("c2.1.i", 0)


@pytest.mark.parametrize("ident", IDS)
def test_least_witness_matches_brute_force(ident):
    top = 200
    for n in range(1, top + 1):
        v = evaluate(ident, n)
        got = (v.outcome.value, v.witness if v.holds else None)
        assert got == expected(ident, n), (ident, n)


@pytest.mark.parametrize("ident", IDS)
def test_witnesses_recheck_and_exemptions_are_sound(ident):
    s = lookup(ident)
    for n in range(1, 121):
        v = evaluate(ident, n)
        if v.holds:
            c = Ctx(auto_kernels(s.kernel_needs(n, n)))
            assert s.confirms(c, n, v.witness), n
        elif v.outcome is Outcome.EXEMPT:
            assert v.note in EXEMPT_REASONS
            if v.note == BELOW_DOMAIN:
                assert n < s.domain_start
            elif v.note == LISTED_EXCEPTION:
                assert n in s.exceptions
            elif v.note == OUTSIDE_DOMAIN:
                assert s.in_domain is not None and not s.in_domain(n)
        else:
            assert n >= s.domain_start


# listed exclusions that the statement does not claim to fail
VACUOUS_EXCLUSIONS = {("c2.16.iii.a", 3), ("c3.23.ii", 3), ("c3.22.ii", 18)}


def test_listed_exceptions():
    for s in catalog():
        for n in sorted(s.exceptions):
            v = evaluate(s.id, n, honor_exceptions=False)
            want = Outcome.HOLDS if (s.id, n) in VACUOUS_EXCLUSIONS else Outcome.FAILS
            assert v.outcome is want, (s.id, n)


def test_verify_range_examples():
    r = verify_range("c2.1.i", 2, 1000)
    assert r.tallies[Outcome.HOLDS.value] == 999
    assert r.tallies[Outcome.FAILS.value] == 0
    seen = []
    r = verify_range("c2.10", 2, 30, emit=seen.append)
    assert r.tallies[Outcome.HOLDS.value] == 29
    assert [rec["n"] for rec in seen if rec["witness"]["equality"]] == [2, 26]
    first = []
    r = verify_range("c3.7.i", 1, 22110, emit=first.append, policy="first")
    assert [rec["n"] for rec in first] == [22110]
    assert r.first_holds == 22110


def test_report_invariants():
    r = verify_range("c2.14.iii", 1, 300)
    assert sum(r.tallies.values()) == 300
    assert bool(r.counterexamples) == (r.tallies["Fails"] > 0)
    r = verify_range("c3.21.i", 1, 30)
    assert r.counterexamples == sorted(r.counterexamples) and r.counterexamples


def test_exception_run_reports_failures_without_honoring():
    from pcverify.engine import evaluate_with
    s = lookup("c2.14.iii")
    k = auto_kernels(s.kernel_needs(1, 200))
    failing = [n for n in range(1, 201) if evaluate_with(s, n, k, honor_exceptions=False).outcome is Outcome.FAILS]
    assert failing == [25, 35, 44, 46, 105]


def test_sequences():
    assert witness_count_sequence("c2.1.i", Stat.WITNESS_COUNT, 2) == [1]
    assert witness_count_sequence("c2.1.i", "witness-count-strict", 2) == [0]
    terms = witness_count_sequence("c2.1.i", "witness-count", 20)
    want = [sum(1 for k in range(1, n + 1) if oracle.isprime(oracle.pi(k * n))) for n in range(2, 21)]
    assert terms == want
    least = witness_count_sequence("c2.1.i", "least-witness", 20)
    assert least == [expected("c2.1.i.a", n)[1]["k"] for n in range(2, 21)]
    assert witness_count_sequence("c3.7.i", "first-n", 22110, start=22000) == [22110]
    with pytest.raises(ValueError):
        witness_count_sequence("c2.10", "witness-count", 5)


def test_chains():
    v = find_chain(2, 100)
    assert v.witness == {"chain": [5, 7]}
    with pytest.raises(ValueError):
        find_chain(1, 100)
    v = find_chain(3, 10**6)
    assert v.witness == {"chain": [5, 7, 11]}
    assert find_chain(5, 1000).outcome is Outcome.EXHAUSTED


def test_chain_entry_minimal_for_all_lengths():
    for m in range(1, 201):
        v = evaluate("c3.20", m)
        got = (v.outcome.value, v.witness if v.holds else None)
        assert got == expected("c3.20", m), m


def test_kernel_needs_monotone():
    for s in catalog():
        lo = s.domain_start
        a, b = s.kernel_needs(lo, lo + 10), s.kernel_needs(lo, lo + 100)
        assert b.sieve >= a.sieve and b.partitions >= a.partitions and b.mult >= a.mult, s.id


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(IDS), st.integers(min_value=1, max_value=400))
def test_evaluate_is_deterministic(ident, n):
    if ident == "c3.20":
        n = min(n, 8)
    assert evaluate(ident, n) == evaluate(ident, n)


def test_parametrized_ids_round_trip():
    for s in catalog():
        assert lookup(s.id) is s
        if "[" in s.id:
            assert re.fullmatch(r"c\d\.\d+[.a-z]*\[\w+=-?\w+\]", s.id)
