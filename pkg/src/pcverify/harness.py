"""Checkpointed range runs."""

from __future__ import annotations

import json
import os
import tempfile
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from .engine import DEFAULT_BUDGET, Emitter, RangeReport, run_range
from .kernels import Kernels
from .model import ConjectureSpec

CHECKPOINT_EVERY = 1 << 16
CHECKPOINT_SECONDS = 10.0
FORMAT = "pcverify-checkpoint/1"


class CheckpointError(Exception):
    pass


@dataclass
class Checkpoint:
    id: str
    start: int
    stop: int
    fingerprint: str
    policy: str
    report: RangeReport
    first_done: bool = False

    def to_json(self) -> dict:
        return {"format": FORMAT, "id": self.id, "from": self.start, "to": self.stop,
                "fingerprint": self.fingerprint, "witnesses": self.policy, "first_done": self.first_done,
                "next_n": self.report.next_n, "report": self.report.to_state()}

    @classmethod
    def from_json(cls, d: dict) -> "Checkpoint":
        if d.get("format") != FORMAT:
            raise CheckpointError(f"unrecognised checkpoint format {d.get('format')!r}")
        return cls(d["id"], d["from"], d["to"], d["fingerprint"], d["witnesses"],
                   RangeReport.from_state(d["report"]), d.get("first_done", False))

    def save(self, path) -> None:
        path = Path(path)
        fd, tmp = tempfile.mkstemp(prefix=path.name + ".", dir=path.parent)
        with os.fdopen(fd, "w") as fh:
            json.dump(self.to_json(), fh, sort_keys=True)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, path)

    @classmethod
    def load(cls, path) -> "Checkpoint":
        try:
            with open(path) as fh:
                return cls.from_json(json.load(fh))
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise CheckpointError(f"{path}: unreadable checkpoint ({exc})") from exc

    def check_matches(self, ident: str, start: int, stop: int, fingerprint: str, policy: str) -> None:
        mine = (self.id, self.start, self.stop, self.fingerprint, self.policy)
        theirs = (ident, start, stop, fingerprint, policy)
        labels = ("id", "range start", "range end", "kernel fingerprint", "witness policy")
        for label, a, b in zip(labels, mine, theirs):
            if a != b:
                raise CheckpointError(f"checkpoint {label} is {a!r}, this run has {b!r}")


class Saver:
    """after_chunk hook writing the checkpoint every ``every`` n or ``seconds`` s."""

    def __init__(self, ck: Checkpoint, path, emitter: Emitter, every: int = CHECKPOINT_EVERY,
                 seconds: float = CHECKPOINT_SECONDS, clock: Callable[[], float] = time.monotonic):
        self.ck = ck
        self.path = path
        self.emitter = emitter
        self.every = every
        self.seconds = seconds
        self.clock = clock
        self.last_n = ck.report.next_n
        self.last_t = clock()

    def write(self) -> None:
        self.ck.first_done = self.emitter.first_done
        self.ck.save(self.path)
        self.last_n = self.ck.report.next_n
        self.last_t = self.clock()

    def __call__(self, report: RangeReport) -> None:
        if report.next_n - self.last_n >= self.every or self.clock() - self.last_t >= self.seconds:
            self.write()


def run_checkpointed(spec: ConjectureSpec, start: int, stop: int, kernels: Kernels, *,
                     budget: int = DEFAULT_BUDGET, emit: Callable[[dict], None] | None = None,
                     policy: str = "all", jobs: int = 1, chunk: int = 256, timing: bool = False,
                     checkpoint=None, every: int = CHECKPOINT_EVERY,
                     seconds: float = CHECKPOINT_SECONDS) -> RangeReport:
    """verify_range with optional resume from, and periodic saves to, ``checkpoint``.

    An existing checkpoint must match the id, range, witness policy and
    kernel fingerprint of this run; verdicts before its cursor are not
    re-emitted.
    """
    fp = kernels.fingerprint()
    if checkpoint is not None and Path(checkpoint).exists():
        ck = Checkpoint.load(checkpoint)
        ck.check_matches(spec.id, start, stop, fp, policy)
    else:
        ck = Checkpoint(spec.id, start, stop, fp, policy, RangeReport(spec.id, start, stop))
    emitter = Emitter(spec.id, policy, emit, timing, ck.first_done)
    saver = None
    if checkpoint is not None:
        saver = Saver(ck, checkpoint, emitter, every, seconds)
    if not ck.report.complete:
        run_range(spec, ck.report, kernels, budget, jobs, chunk, emitter, saver)
    if saver is not None:
        saver.write()
    return ck.report
