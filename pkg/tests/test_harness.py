import json
import random

import numpy as np
import pytest

from pcverify import cache, lookup
from pcverify.engine import RangeReport, auto_kernels, verify_range
from pcverify.harness import Checkpoint, CheckpointError, Saver, run_checkpointed
from pcverify.primes import build_tables


class Boom(Exception):
    pass


def _queries(t, rng, count):
    out = []
    for _ in range(count):
        x = rng.randrange(t.limit + 1)
        out.append((t.is_prime(x), t.prime_count(x), t.twin_pair_count_upper(x), t.squarefree_count(x),
                    t.gaussian_ideal_count(x)))
        h = x // 2 - 1
        if h >= 0:
            out.append((t.twin_pair_count_lower(h), t.sophie_germain_count(h)))
    return out


def test_cache_round_trip(tmp_path):
    t = build_tables(2 * 10**6 + 1)
    path = tmp_path / "sieve.pcv"
    cache.save(t, path)
    back, tag = cache.load(path)
    assert back.limit == t.limit
    assert len(tag) == 8
    assert _queries(back, random.Random(1), 10**4) == _queries(t, random.Random(1), 10**4)
    assert back.nth_prime(back.count) == t.nth_prime(t.count)
    cache.save(back, tmp_path / "again.pcv")
    assert (tmp_path / "again.pcv").read_bytes() == path.read_bytes()


@pytest.mark.parametrize("limit", [2, 3, 4, 5, 63, 64, 65, 127, 128, 129, 150, 1000, 65535, 65536, 65537])
def test_cache_edge_limits(limit):
    t = build_tables(limit)
    back, _ = cache.decode(cache.encode(t))
    assert np.array_equal(back.primes(), t.primes())
    assert back.block_counts() == t.block_counts()


def test_cache_bitmap_layout():
    data = cache.encode(build_tables(150))
    assert data[:5] == b"PCV1\x01"
    assert int.from_bytes(data[5:13], "little") == 150
    assert data[13] == 16
    # 3 5 7 prime, 9 composite, 11 13 prime, 15 composite, 17 prime
    assert data[14] == 0b01001000


@pytest.mark.parametrize("damage, reason", [
    (lambda b: b"XXXX" + b[4:], "bad magic"),
    (lambda b: b[:20] + bytes([b[20] ^ 1]) + b[21:], "checksum"),
    (lambda b: b[:-1], "size"),
    (lambda b: b[:4] + b"\x02" + b[5:], "version"),
])
def test_corrupt_cache_names_file(tmp_path, damage, reason):
    path = tmp_path / "bad.pcv"
    path.write_bytes(damage(cache.encode(build_tables(10**4))))
    with pytest.raises(cache.CacheError) as info:
        cache.load(path)
    assert str(path) in str(info.value)
    assert reason in str(info.value)


def test_missing_cache(tmp_path):
    with pytest.raises(cache.CacheError):
        cache.load(tmp_path / "nope.pcv")


def test_jobs_do_not_change_output():
    runs = []
    for jobs, chunk in ((1, 256), (8, 37), (3, 1000)):
        recs = []
        r = verify_range("c2.1.i", 2, 2000, emit=recs.append, jobs=jobs, chunk=chunk)
        runs.append((json.dumps(recs), json.dumps(r.summary())))
    assert runs[0] == runs[1] == runs[2]


def _reference(spec, lo, hi, k):
    recs = []
    r = run_checkpointed(spec, lo, hi, k, emit=recs.append)
    return recs, r.summary()


@pytest.mark.parametrize("seed", range(4))
def test_kill_and_resume(tmp_path, seed):
    spec = lookup("c2.18.i")
    lo, hi = 4, 6000
    k = auto_kernels(spec.kernel_needs(lo, hi))
    ref_recs, ref_summary = _reference(spec, lo, hi, k)
    kill_at = random.Random(seed).randrange(lo, hi)
    ck = tmp_path / "run.ckpt"
    seen = []

    def sink(rec):
        if rec["n"] == kill_at:
            raise Boom
        seen.append(rec)

    with pytest.raises(Boom):
        run_checkpointed(spec, lo, hi, k, emit=sink, checkpoint=ck, every=97, chunk=50)
    resumed_from = Checkpoint.load(ck).report.next_n if ck.exists() else lo
    assert resumed_from <= kill_at
    tail = []
    r = run_checkpointed(spec, lo, hi, k, emit=tail.append, checkpoint=ck, every=97, chunk=50)
    assert r.summary() == ref_summary
    assert tail == ref_recs[resumed_from - lo:]
    again = []
    run_checkpointed(spec, lo, hi, k, emit=again.append, checkpoint=ck)
    assert again == []


def test_resume_rejects_mismatch(tmp_path):
    spec = lookup("c2.18.i")
    k = auto_kernels(spec.kernel_needs(4, 500))
    ck = tmp_path / "run.ckpt"
    run_checkpointed(spec, 4, 500, k, checkpoint=ck)
    with pytest.raises(CheckpointError, match="range end"):
        run_checkpointed(spec, 4, 400, k, checkpoint=ck)
    with pytest.raises(CheckpointError, match="witness policy"):
        run_checkpointed(spec, 4, 500, k, checkpoint=ck, policy="none")
    with pytest.raises(CheckpointError, match="id"):
        run_checkpointed(lookup("c2.1.i"), 4, 500, k, checkpoint=ck)
    ck.write_text("{not json")
    with pytest.raises(CheckpointError):
        run_checkpointed(spec, 4, 500, k, checkpoint=ck)


def test_saver_cadence(tmp_path):
    now = [0.0]
    report = RangeReport("x", 1, 10**6)
    ck = Checkpoint("x", 1, 10**6, "fp", "all", report)
    from pcverify.engine import Emitter
    saver = Saver(ck, tmp_path / "c", Emitter("x", "all", None), every=100, seconds=5, clock=lambda: now[0])
    report.next_n = 50
    saver(report)
    assert not (tmp_path / "c").exists()
    now[0] = 6.0
    saver(report)
    assert Checkpoint.load(tmp_path / "c").report.next_n == 50
    report.next_n = 150
    saver(report)
    assert Checkpoint.load(tmp_path / "c").report.next_n == 150


def test_report_state_round_trip():
    r = verify_range("c2.14.iii", 1, 120)
    back = RangeReport.from_state(json.loads(json.dumps(r.to_state(), sort_keys=True)))
    assert back == r
    assert json.dumps(back.summary()) == json.dumps(r.summary())
