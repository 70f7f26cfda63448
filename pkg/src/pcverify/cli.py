"""pcverify command line: tables, verify, sequence, catalog, chain."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import TextIO

from . import cache
from .catalog import catalog, lookup, plain_quote
from .engine import DEFAULT_BUDGET, WITNESS_POLICIES, find_chain, sequence_terms
from .harness import CHECKPOINT_EVERY, CHECKPOINT_SECONDS, CheckpointError, run_checkpointed
from .kernels import MIN_SIEVE, Kernels, Needs
from .model import Stat, UnderProvisioned, UnknownConjecture
from .primes import KernelError, build_tables

EXIT_OK, EXIT_FAILS, EXIT_EXHAUSTED, EXIT_USAGE = 0, 1, 2, 3
CACHE_ENV = "PCVERIFY_CACHE"
FORMATS = ("json", "table", "plain")


class UsageError(Exception):
    pass


def parse_int(text: str) -> int:
    """Integer flag value; accepts digit separators (10_000) and 1e6 style."""
    s = str(text).strip().replace("_", "")
    try:
        return int(s)
    except ValueError:
        pass
    try:
        mant, _, exp = s.lower().partition("e")
        if exp and mant.lstrip("-").isdigit() and exp.isdigit():
            return int(mant) * 10 ** int(exp)
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"not an integer: {text!r}")


def _dump(rec: dict) -> str:
    return json.dumps(rec)


def _compact(w) -> str:
    return "-" if w is None else json.dumps(w, separators=(",", ":"))


# -- kernels --------------------------------------------------------------


def cache_path(explicit: str | None) -> str | None:
    return explicit or os.environ.get(CACHE_ENV) or None


def kernels_for(needs: Needs, cache_file: str | None = None, memory_mb: int | None = None,
                err: TextIO | None = None) -> Kernels:
    """Tables for ``needs``, from the cache when it is large enough.

    With a memory budget, refuses before any work when the plan exceeds it.
    """
    if memory_mb is not None:
        need = needs.memory_bytes()
        if need > memory_mb << 20:
            raise UsageError(f"run needs about {-(-need >> 20)} MB of tables (sieve limit "
                             f"{max(needs.sieve, MIN_SIEVE)}), over the --memory-mb budget of {memory_mb}")
    tables, tag = None, "fresh"
    path = cache_path(cache_file)
    if path and Path(path).exists():
        t, crc = cache.load(path)
        if t.limit >= needs.sieve:
            tables, tag = t, crc
        elif err is not None:
            print(f"note: cache {path} stops at {t.limit}, building tables to {needs.sieve}", file=err)
    return Kernels.provision(needs, tables, cache_tag=tag)


# -- commands -------------------------------------------------------------


def cmd_tables(limit: int, out_path: str | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    path = cache_path(out_path)
    if path is None:
        raise UsageError(f"no output path: pass --out or set {CACHE_ENV}")
    if limit < 2:
        raise UsageError("limit must be at least 2")
    tables = build_tables(limit)
    cache.save(tables, path)
    print(_dump({"type": "tables", "path": str(path), "limit": limit, "pi": tables.prime_count(limit)}), file=out)
    return EXIT_OK


def _verdict_line(rec: dict, fmt: str) -> str:
    if fmt == "json":
        return _dump(rec)
    if fmt == "plain":
        return f"{rec['n']} {rec['verdict']} {_compact(rec['witness'])}"
    note = rec.get("note", "")
    line = f"{rec['n']:>12}  {rec['verdict']:<9}  {_compact(rec['witness'])}"
    if rec["probabilistic"]:
        line += "  (probable prime)"
    if note and rec["verdict"] != "Holds":
        line += f"  [{note}]"
    if "elapsed_us" in rec:
        line += f"  {rec['elapsed_us']}us"
    return line


def _summary_lines(s: dict, fmt: str) -> list[str]:
    if fmt == "json":
        return [_dump(s)]
    t = s["tallies"]
    lines = [f"summary {s['id']} n={s['from']}..{s['to']}: " + " ".join(f"{k}={v}" for k, v in t.items())]
    if s["counterexamples"]:
        lines.append("counterexamples: " + " ".join(map(str, s["counterexamples"])))
    if s["exhausted"]:
        lines.append("exhausted: " + " ".join(map(str, s["exhausted"])))
    ws = s["witness_stats"]
    if ws["count"]:
        lines.append(f"least witness min={ws['min']} max={ws['max']} mean={ws['mean']:.6g}")
    if s["probabilistic"]:
        lines.append(f"probable-prime witnesses: {s['probabilistic']}")
    if "elapsed_s" in s:
        lines.append(f"elapsed: {s['elapsed_s']} s")
    return lines


def cmd_verify(ident: str, start: int, stop: int, jobs: int = 1, budget: int = DEFAULT_BUDGET,
               fmt: str = "json", checkpoint: str | None = None, witnesses: str = "all", *,
               timing: bool = False, cache_file: str | None = None, memory_mb: int | None = None,
               chunk: int = 256, every: int = CHECKPOINT_EVERY, seconds: float = CHECKPOINT_SECONDS,
               out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    spec = lookup(ident)
    if stop < start:
        raise UsageError(f"empty range: to ({stop}) < from ({start})")
    if start < 1:
        raise UsageError("from must be at least 1")
    if witnesses not in WITNESS_POLICIES:
        raise UsageError(f"--witnesses must be one of {', '.join(WITNESS_POLICIES)}")
    if jobs < 1 or chunk < 1 or budget < 1:
        raise UsageError("--jobs, --chunk and --budget must be positive")
    kernels = kernels_for(spec.kernel_needs(start, stop), cache_file, memory_mb, err)

    def emit(rec: dict) -> None:
        print(_verdict_line(rec, fmt), file=out)

    if fmt == "table" and witnesses != "none":
        print(f"{'n':>12}  {'verdict':<9}  witness", file=out)
    report = run_checkpointed(spec, start, stop, kernels, budget=budget, emit=emit, policy=witnesses,
                              jobs=jobs, chunk=chunk, timing=timing, checkpoint=checkpoint,
                              every=every, seconds=seconds)
    for line in _summary_lines(report.summary(timing), fmt):
        print(line, file=out)
    out.flush()
    if report.counterexamples:
        return EXIT_FAILS
    if report.exhausted:
        return EXIT_EXHAUSTED
    return EXIT_OK


def cmd_sequence(ident: str, stat: str, to: int, fmt: str = "plain", start: int | None = None,
                 budget: int = DEFAULT_BUDGET, *, cache_file: str | None = None, memory_mb: int | None = None,
                 out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    spec = lookup(ident)
    try:
        stat = Stat(stat)
    except ValueError:
        raise UsageError(f"unknown statistic {stat!r}; choose from {', '.join(s.value for s in Stat)}") from None
    if stat not in spec.stats():
        raise UsageError(f"{spec.id} has no {stat.value} statistic (available: "
                         f"{', '.join(s.value for s in spec.stats())})")
    lo = spec.domain_start if start is None else start
    if lo < 1:
        raise UsageError("from must be at least 1")
    kernels = kernels_for(spec.kernel_needs(lo, max(lo, to)), cache_file, memory_mb, err)
    for n, term in sequence_terms(spec, stat, to, lo, kernels, budget):
        if fmt == "json":
            print(_dump({"type": "term", "id": spec.id, "stat": stat.value, "n": n, "term": term}), file=out)
        elif fmt == "table":
            print(f"{n:>12}  {term}", file=out)
        else:
            print(term, file=out)
    return EXIT_OK


def cmd_catalog(fmt: str = "table", out: TextIO | None = None) -> int:
    out = out or sys.stdout
    entries = catalog()
    if fmt == "json":
        for s in entries:
            print(_dump({"type": "entry", **s.to_record(), "stats": [x.value for x in s.stats()]}), file=out)
        return EXIT_OK
    if fmt == "plain":
        for s in entries:
            print(s.id, file=out)
        return EXIT_OK
    w = max(len(s.id) for s in entries)
    print(f"{'id':<{w}}  {'anchor':<16}  {'kind':<19}  {'from':>5}  {'desk':>9}  quote", file=out)
    for s in entries:
        exc = f" except {sorted(s.exceptions)}" if s.exceptions else ""
        print(f"{s.id:<{w}}  {s.anchor:<16}  {s.kind.value:<19}  {s.domain_start:>5}  {s.desk_bound:>9}  "
              f"\"{plain_quote(s.quote)}\"{exc}", file=out)
    return EXIT_OK


def cmd_chain(m: int, start_bound: int, fmt: str = "json", budget: int = DEFAULT_BUDGET, *,
              memory_mb: int | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    if m < 2:
        raise UsageError("chain length must be at least 2")
    if memory_mb is not None:
        kernels_for(Needs(sieve=start_bound), None, memory_mb)  # budget check only
    v = find_chain(m, start_bound, budget=budget)
    chain = v.witness["chain"] if v.holds else None
    if fmt == "json":
        print(_dump({"type": "chain", "m": m, "start_bound": start_bound, "verdict": v.outcome.value,
                     "chain": chain, "note": v.note}), file=out)
    elif chain is not None:
        print(" ".join(map(str, chain)), file=out)
    else:
        print(f"{v.outcome.value}: {v.note}", file=out)
    return EXIT_OK if v.holds else EXIT_EXHAUSTED


# -- argument parsing -----------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pcverify", description="Check prime-counting conjectures over ranges of n.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    tables = sub.add_parser("tables", help="build and save the sieve cache")
    tables.add_argument("limit", type=parse_int)
    tables.add_argument("-o", "--out", help=f"cache file (default: ${CACHE_ENV})")

    res = argparse.ArgumentParser(add_help=False)
    res.add_argument("--cache", help=f"sieve cache to reuse (default: ${CACHE_ENV})")
    res.add_argument("--memory-mb", type=parse_int, help="refuse runs whose tables need more memory")
    res.add_argument("--budget", type=parse_int, default=DEFAULT_BUDGET, help="candidate steps per n")

    v = sub.add_parser("verify", parents=[res], help="evaluate one conjecture for every n in a range")
    v.add_argument("id")
    v.add_argument("start", metavar="from", type=parse_int)
    v.add_argument("stop", metavar="to", type=parse_int)
    v.add_argument("-j", "--jobs", type=parse_int, default=1)
    v.add_argument("--format", choices=FORMATS, default="json")
    v.add_argument("--witnesses", choices=WITNESS_POLICIES, default="all",
                   help="which verdict records to stream")
    v.add_argument("--checkpoint", help="checkpoint file; resumed when it exists")
    v.add_argument("--checkpoint-every", type=parse_int, default=CHECKPOINT_EVERY, metavar="N")
    v.add_argument("--checkpoint-seconds", type=float, default=CHECKPOINT_SECONDS, metavar="S")
    v.add_argument("--chunk", type=parse_int, default=256, help="values of n per shard")
    v.add_argument("--timing", action="store_true", help="add elapsed times to the records")

    s = sub.add_parser("sequence", parents=[res], help="export a per-n statistic")
    s.add_argument("id")
    s.add_argument("stat", choices=[x.value for x in Stat])
    s.add_argument("to", type=parse_int)
    s.add_argument("--from", dest="start", type=parse_int)
    s.add_argument("--format", choices=FORMATS, default="plain")

    c = sub.add_parser("catalog", help="list the conjecture catalog")
    c.add_argument("--format", choices=FORMATS, default="table")

    ch = sub.add_parser("chain", help="search for a prime chain")
    ch.add_argument("m", type=parse_int)
    ch.add_argument("start_bound", type=parse_int)
    ch.add_argument("--format", choices=FORMATS, default="json")
    ch.add_argument("--budget", type=parse_int, default=DEFAULT_BUDGET)
    ch.add_argument("--memory-mb", type=parse_int)
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if args.command == "tables":
            return cmd_tables(args.limit, args.out)
        if args.command == "verify":
            return cmd_verify(args.id, args.start, args.stop, args.jobs, args.budget, args.format,
                              args.checkpoint, args.witnesses, timing=args.timing, cache_file=args.cache,
                              memory_mb=args.memory_mb, chunk=args.chunk, every=args.checkpoint_every,
                              seconds=args.checkpoint_seconds)
        if args.command == "sequence":
            return cmd_sequence(args.id, args.stat, args.to, args.format, args.start, args.budget,
                                cache_file=args.cache, memory_mb=args.memory_mb)
        if args.command == "catalog":
            return cmd_catalog(args.format)
        return cmd_chain(args.m, args.start_bound, args.format, args.budget, memory_mb=args.memory_mb)
    except (UsageError, UnknownConjecture, CheckpointError, cache.CacheError, UnderProvisioned, KernelError,
            ValueError) as exc:
        print(f"pcverify: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
